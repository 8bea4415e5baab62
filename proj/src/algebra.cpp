#include "hatilt/algebra.hpp"

#include <sstream>

#include "hatilt/errors.hpp"

namespace hatilt {

namespace {

std::vector<Vec> span_rows(const std::vector<Vec>& vs, std::size_t dim) {
  if (vs.empty() || dim == 0) return {};
  const auto e = rref(Matrix::from_rows(vs, dim));
  std::vector<Vec> out;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out.push_back(e.reduced.row(r));
  return out;
}

Vec unit(std::size_t dim, std::size_t i) {
  Vec v(dim);
  v[i] = 1;
  return v;
}

}  // namespace

FDAlgebra::FDAlgebra(std::vector<std::string> labels, const std::vector<std::vector<int>>& hom_dims)
    : labels_(std::move(labels)), m_(static_cast<int>(labels_.size())) {
  if (static_cast<int>(hom_dims.size()) != m_) throw PreconditionError("hom_dims size mismatch");
  hd_.resize(static_cast<std::size_t>(m_) * m_);
  off_.resize(hd_.size());
  int total = 0;
  for (int i = 0; i < m_; ++i) {
    if (static_cast<int>(hom_dims[i].size()) != m_) throw PreconditionError("hom_dims row size mismatch");
    for (int j = 0; j < m_; ++j) {
      const int h = hom_dims[i][j];
      if (h < 0 || (i == j && h < 1)) throw PreconditionError("invalid hom dimension");
      hd_[i * m_ + j] = h;
      off_[i * m_ + j] = total;
      for (int a = 0; a < h; ++a) basis_.push_back(BasisElement{i, j, 0, ""});
      total += h;
    }
  }
  for (int i = 0; i < m_; ++i) basis_[offset(i, i)].name = "e" + labels_[i];
  table_.resize(static_cast<std::size_t>(m_) * m_ * m_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      for (int k = 0; k < m_; ++k) {
        const int n = hom_dim(i, j) * hom_dim(j, k);
        if (n > 0) table_[block(i, j, k)].assign(n, Vec(hom_dim(i, k)));
      }
  // identities act as units until told otherwise
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      for (int a = 0; a < hom_dim(i, j); ++a) {
        set_product(i, i, j, 0, a, unit(hom_dim(i, j), a));
        set_product(i, j, j, a, 0, unit(hom_dim(i, j), a));
      }
}

std::optional<int> FDAlgebra::find_object(const std::string& label) const {
  for (int i = 0; i < m_; ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

int FDAlgebra::local_id(int global) const {
  const auto& b = basis_.at(global);
  return global - offset(b.src, b.tgt);
}

void FDAlgebra::set_basis_info(int i, int j, int local, int degree, std::string name) {
  auto& b = basis_.at(global_id(i, j, local));
  b.degree = degree;
  b.name = std::move(name);
}

const Vec& FDAlgebra::product(int i, int j, int k, int a, int b) const {
  return table_[block(i, j, k)][static_cast<std::size_t>(a) * hom_dim(j, k) + b];
}

void FDAlgebra::set_product(int i, int j, int k, int a, int b, Vec value) {
  if (static_cast<int>(value.size()) != hom_dim(i, k)) throw PreconditionError("product has wrong length");
  table_[block(i, j, k)][static_cast<std::size_t>(a) * hom_dim(j, k) + b] = std::move(value);
}

Vec FDAlgebra::compose(int i, int j, int k, const Vec& f, const Vec& g) const {
  Vec out(hom_dim(i, k));
  const int hj = hom_dim(j, k);
  if (out.empty()) return out;
  const auto& tab = table_[block(i, j, k)];
  for (int a = 0; a < hom_dim(i, j); ++a) {
    if (f[a].is_zero()) continue;
    for (int b = 0; b < hj; ++b) {
      if (g[b].is_zero()) continue;
      const Rational c = f[a] * g[b];
      const Vec& p = tab[static_cast<std::size_t>(a) * hj + b];
      for (std::size_t t = 0; t < out.size(); ++t)
        if (!p[t].is_zero()) out[t] += c * p[t];
    }
  }
  return out;
}

Vec FDAlgebra::identity(int i) const { return unit(hom_dim(i, i), 0); }

Vec FDAlgebra::basis_vector(int i, int j, int local) const { return unit(hom_dim(i, j), local); }

void FDAlgebra::finalize() {
  const std::size_t mm = static_cast<std::size_t>(m_) * m_;
  std::vector<std::vector<Vec>> rad1(mm);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      for (int a = (i == j ? 1 : 0); a < hom_dim(i, j); ++a) rad1[i * m_ + j].push_back(unit(hom_dim(i, j), a));
  rad_.clear();
  rad_.push_back(rad1);
  auto empty = [](const std::vector<std::vector<Vec>>& layer) {
    for (const auto& b : layer)
      if (!b.empty()) return false;
    return true;
  };
  while (!empty(rad_.back())) {
    if (static_cast<int>(rad_.size()) > dim() + 1) throw PreconditionError("radical not nilpotent");
    const auto& prev = rad_.back();
    std::vector<std::vector<Vec>> next(mm);
    for (int i = 0; i < m_; ++i)
      for (int k = 0; k < m_; ++k) {
        std::vector<Vec> cands;
        for (int j = 0; j < m_; ++j)
          for (const Vec& f : prev[i * m_ + j])
            for (const Vec& g : rad1[j * m_ + k]) {
              Vec p = compose(i, j, k, f, g);
              if (!is_zero(p)) cands.push_back(std::move(p));
            }
        next[i * m_ + k] = span_rows(cands, hom_dim(i, k));
      }
    if (next == prev) throw PreconditionError("radical not nilpotent");
    rad_.push_back(std::move(next));
  }
  rad_.pop_back();
  loewy_ = static_cast<int>(rad_.size()) + 1;

  gens_.clear();
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) {
      SpanBasis sb(hom_dim(i, j));
      if (rad_.size() > 1)
        for (const Vec& v : rad_[1][i * m_ + j]) sb.insert(v);
      for (int a = (i == j ? 1 : 0); a < hom_dim(i, j); ++a)
        if (sb.insert(unit(hom_dim(i, j), a))) gens_.push_back(global_id(i, j, a));
    }
}

std::string FDAlgebra::check_structure() const {
  std::ostringstream why;
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      for (int a = 0; a < hom_dim(i, j); ++a) {
        if (product(i, i, j, 0, a) != unit(hom_dim(i, j), a) || product(i, j, j, a, 0) != unit(hom_dim(i, j), a)) {
          why << "identity fails on Hom(" << labels_[i] << "," << labels_[j] << ")";
          return why.str();
        }
      }
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) {
      if (hom_dim(i, j) == 0) continue;
      for (int k = 0; k < m_; ++k) {
        if (hom_dim(j, k) == 0) continue;
        for (int l = 0; l < m_; ++l) {
          if (hom_dim(k, l) == 0 || hom_dim(i, l) == 0) continue;
          for (int a = 0; a < hom_dim(i, j); ++a)
            for (int b = 0; b < hom_dim(j, k); ++b)
              for (int c = 0; c < hom_dim(k, l); ++c) {
                const Vec left = compose(i, k, l, product(i, j, k, a, b), unit(hom_dim(k, l), c));
                const Vec right = compose(i, j, l, unit(hom_dim(i, j), a), product(j, k, l, b, c));
                if (left != right) {
                  why << "associativity fails at " << labels_[i] << "," << labels_[j] << "," << labels_[k] << ","
                      << labels_[l];
                  return why.str();
                }
              }
        }
      }
    }
  return {};
}

std::string FDAlgebra::check_grading() const {
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      for (int k = 0; k < m_; ++k)
        for (int a = 0; a < hom_dim(i, j); ++a)
          for (int b = 0; b < hom_dim(j, k); ++b) {
            const int deg = basis(global_id(i, j, a)).degree + basis(global_id(j, k, b)).degree;
            const Vec& p = product(i, j, k, a, b);
            for (int t = 0; t < hom_dim(i, k); ++t)
              if (!p[t].is_zero() && basis(global_id(i, k, t)).degree != deg)
                return "product of " + basis(global_id(i, j, a)).name + " and " + basis(global_id(j, k, b)).name +
                       " is not homogeneous";
          }
  return {};
}

std::vector<std::vector<int>> FDAlgebra::cartan() const {
  std::vector<std::vector<int>> c(m_, std::vector<int>(m_));
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) c[i][j] = hom_dim(i, j);
  return c;
}

FDAlgebra opposite(const FDAlgebra& a) {
  const int m = a.num_objects();
  std::vector<std::vector<int>> dims(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) dims[i][j] = a.hom_dim(j, i);
  FDAlgebra op(a.labels(), dims);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int x = 0; x < dims[i][j]; ++x) {
        const auto& b = a.basis(a.global_id(j, i, x));
        op.set_basis_info(i, j, x, b.degree, b.name);
      }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int x = 0; x < dims[i][j]; ++x)
          for (int y = 0; y < dims[j][k]; ++y) op.set_product(i, j, k, x, y, a.product(k, j, i, y, x));
  op.set_graded(a.graded());
  op.finalize();
  return op;
}

FDAlgebra idempotent_subalgebra(const FDAlgebra& a, const std::vector<int>& objects) {
  const int m = static_cast<int>(objects.size());
  std::vector<std::string> labels;
  std::vector<std::vector<int>> dims(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    labels.push_back(a.label(objects[i]));
    for (int j = 0; j < m; ++j) dims[i][j] = a.hom_dim(objects[i], objects[j]);
  }
  FDAlgebra s(labels, dims);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int x = 0; x < dims[i][j]; ++x) {
        const auto& b = a.basis(a.global_id(objects[i], objects[j], x));
        s.set_basis_info(i, j, x, b.degree, b.name);
      }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int x = 0; x < dims[i][j]; ++x)
          for (int y = 0; y < dims[j][k]; ++y)
            s.set_product(i, j, k, x, y, a.product(objects[i], objects[j], objects[k], x, y));
  s.set_graded(a.graded());
  s.finalize();
  return s;
}

bool no_morphisms_into(const FDAlgebra& a, const std::vector<int>& objects) {
  std::vector<bool> in(a.num_objects());
  for (int o : objects) in[o] = true;
  for (int c = 0; c < a.num_objects(); ++c)
    for (int e = 0; e < a.num_objects(); ++e)
      if (!in[c] && in[e] && a.hom_dim(c, e) > 0) return false;
  return true;
}

FDAlgebra quotient_by_complement(const FDAlgebra& a, const std::vector<int>& objects) {
  const int m = static_cast<int>(objects.size());
  std::vector<bool> in(a.num_objects());
  for (int o : objects) in[o] = true;
  // per block: ideal span, kept local ids, and a coordinate solver
  struct Block {
    std::vector<int> kept;
    SpanBasis solver;
    std::size_t ideal_rank = 0;
  };
  std::vector<Block> blocks(static_cast<std::size_t>(m) * m);
  std::vector<std::vector<int>> dims(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int oi = objects[i], oj = objects[j];
      const int h = a.hom_dim(oi, oj);
      Block& bl = blocks[i * m + j];
      bl.solver = SpanBasis(h);
      for (int c = 0; c < a.num_objects(); ++c) {
        if (in[c]) continue;
        for (int x = 0; x < a.hom_dim(oi, c); ++x)
          for (int y = 0; y < a.hom_dim(c, oj); ++y) bl.solver.insert(a.product(oi, c, oj, x, y));
      }
      bl.ideal_rank = bl.solver.size();
      for (int x = 0; x < h; ++x)
        if (bl.solver.insert(a.basis_vector(oi, oj, x))) bl.kept.push_back(x);
      if (i == j && (bl.kept.empty() || bl.kept.front() != 0))
        throw PreconditionError("identity factors through the complement");
      dims[i][j] = static_cast<int>(bl.kept.size());
    }
  std::vector<std::string> labels;
  for (int o : objects) labels.push_back(a.label(o));
  FDAlgebra q(labels, dims);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int x = 0; x < dims[i][j]; ++x) {
        const auto& b = a.basis(a.global_id(objects[i], objects[j], blocks[i * m + j].kept[x]));
        q.set_basis_info(i, j, x, b.degree, b.name);
      }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        const Block& target = blocks[i * m + k];
        for (int x = 0; x < dims[i][j]; ++x)
          for (int y = 0; y < dims[j][k]; ++y) {
            const Vec& p = a.product(objects[i], objects[j], objects[k], blocks[i * m + j].kept[x],
                                     blocks[j * m + k].kept[y]);
            const auto coords = target.solver.coordinates(p);
            if (!coords) throw SearchFailure("quotient product outside span");
            Vec v(dims[i][k]);
            for (int t = 0; t < dims[i][k]; ++t) v[t] = (*coords)[target.ideal_rank + t];
            q.set_product(i, j, k, x, y, std::move(v));
          }
      }
  q.set_graded(a.graded());
  q.finalize();
  return q;
}

namespace {

// Objects (i, copy) sit at copy * m + i. Hom((i,k),(j,l)) holds A(i,j) when k == l,
// followed by D A(j,i) when l is the successor of k.
FDAlgebra extension(const FDAlgebra& a, int r, bool cyclic) {
  if (r < 1) throw PreconditionError("r must be positive");
  const int m = a.num_objects();
  const int total = m * r;
  auto succ = [&](int k, int l) { return (k + 1 < r && l == k + 1) || (cyclic && k == r - 1 && l == 0); };
  auto a_part = [&](int X, int Y) { return X / m == Y / m ? a.hom_dim(X % m, Y % m) : 0; };
  auto d_part = [&](int X, int Y) { return succ(X / m, Y / m) ? a.hom_dim(Y % m, X % m) : 0; };
  std::vector<std::string> labels;
  std::vector<std::vector<int>> dims(total, std::vector<int>(total));
  for (int X = 0; X < total; ++X) {
    labels.push_back(a.label(X % m) + "#" + std::to_string(X / m));
    for (int Y = 0; Y < total; ++Y) dims[X][Y] = a_part(X, Y) + d_part(X, Y);
  }
  FDAlgebra out(labels, dims);
  for (int X = 0; X < total; ++X)
    for (int Y = 0; Y < total; ++Y) {
      const int i = X % m, j = Y % m, na = a_part(X, Y);
      const std::string tag = "#" + std::to_string(X / m);
      for (int x = 0; x < na; ++x) out.set_basis_info(X, Y, x, 0, a.basis(a.global_id(i, j, x)).name + tag);
      const bool wrap = cyclic && X / m == r - 1 && Y / m == 0;
      for (int x = 0; x < d_part(X, Y); ++x)
        out.set_basis_info(X, Y, na + x, wrap ? 1 : 0, "D(" + a.basis(a.global_id(j, i, x)).name + ")" + tag);
    }
  for (int X = 0; X < total; ++X)
    for (int Y = 0; Y < total; ++Y) {
      if (dims[X][Y] == 0) continue;
      for (int Z = 0; Z < total; ++Z) {
        if (dims[Y][Z] == 0 || dims[X][Z] == 0) continue;
        const int i = X % m, j = Y % m, h = Z % m;
        const int naXY = a_part(X, Y), naYZ = a_part(Y, Z), naXZ = a_part(X, Z);
        for (int x = 0; x < dims[X][Y]; ++x)
          for (int y = 0; y < dims[Y][Z]; ++y) {
            Vec v(dims[X][Z]);
            const bool fa = x < naXY, ga = y < naYZ;
            if (fa && ga) {
              const Vec& p = a.product(i, j, h, x, y);
              for (int t = 0; t < naXZ; ++t) v[t] = p[t];
            } else if (fa && !ga) {
              // phi in D A(h, j) after a: i -> j, evaluated on t: h -> i
              const int phi = y - naYZ;
              for (int t = 0; t < a.hom_dim(h, i); ++t) v[naXZ + t] = a.product(h, i, j, t, x)[phi];
            } else if (!fa && ga) {
              // b: j -> h after phi in D A(j, i), evaluated on t: h -> i
              const int phi = x - naXY;
              for (int t = 0; t < a.hom_dim(h, i); ++t) v[naXZ + t] = a.product(j, h, i, y, t)[phi];
            }
            out.set_product(X, Y, Z, x, y, std::move(v));
          }
      }
    }
  out.set_graded(cyclic);
  out.finalize();
  return out;
}

}  // namespace

FDAlgebra replicate(const FDAlgebra& a, int r) { return extension(a, r, false); }

FDAlgebra trivial_ext_r(const FDAlgebra& a, int r) { return extension(a, r, true); }

FDAlgebra graded_part_zero(const FDAlgebra& a) {
  const int m = a.num_objects();
  std::vector<std::vector<std::vector<int>>> kept(m, std::vector<std::vector<int>>(m));
  std::vector<std::vector<int>> dims(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      for (int x = 0; x < a.hom_dim(i, j); ++x)
        if (a.basis(a.global_id(i, j, x)).degree == 0) kept[i][j].push_back(x);
      dims[i][j] = static_cast<int>(kept[i][j].size());
    }
  FDAlgebra z(a.labels(), dims);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int x = 0; x < dims[i][j]; ++x)
        z.set_basis_info(i, j, x, 0, a.basis(a.global_id(i, j, kept[i][j][x])).name);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int x = 0; x < dims[i][j]; ++x)
          for (int y = 0; y < dims[j][k]; ++y) {
            const Vec& p = a.product(i, j, k, kept[i][j][x], kept[j][k][y]);
            Vec v(dims[i][k]);
            for (int t = 0; t < dims[i][k]; ++t) v[t] = p[kept[i][k][t]];
            z.set_product(i, j, k, x, y, std::move(v));
          }
  z.finalize();
  return z;
}

}  // namespace hatilt

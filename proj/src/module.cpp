#include "hatilt/module.hpp"

#include <numeric>

#include "hatilt/errors.hpp"

namespace hatilt {

int Module::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

std::vector<int> Module::offsets() const {
  std::vector<int> off(dims.size() + 1);
  for (std::size_t v = 0; v < dims.size(); ++v) off[v + 1] = off[v] + dims[v];
  return off;
}

Matrix Module::action(int i, int j, const Vec& f) const {
  Matrix m(dims[i], dims[j]);
  for (int x = 0; x < alg->hom_dim(i, j); ++x)
    if (!f[x].is_zero()) m += act[alg->global_id(i, j, x)] * f[x];
  return m;
}

namespace {

Module empty_module(const AlgebraPtr& a, std::vector<int> dims) {
  Module m{a, std::move(dims), {}};
  m.act.reserve(a->dim());
  for (int g = 0; g < a->dim(); ++g) {
    const auto& b = a->basis(g);
    m.act.emplace_back(m.dims[b.src], m.dims[b.tgt]);
  }
  return m;
}

Vec flatten(const ModuleMap& f) {
  Vec v;
  for (const auto& c : f.comp)
    for (std::size_t r = 0; r < c.rows(); ++r)
      for (std::size_t s = 0; s < c.cols(); ++s) v.push_back(c(r, s));
  return v;
}

ModuleMap unflatten(const Vec& v, const Module& src, const Module& tgt) {
  ModuleMap f;
  std::size_t at = 0;
  for (std::size_t o = 0; o < src.dims.size(); ++o) {
    Matrix c(tgt.dims[o], src.dims[o]);
    for (std::size_t r = 0; r < c.rows(); ++r)
      for (std::size_t s = 0; s < c.cols(); ++s) c(r, s) = v[at++];
    f.comp.push_back(std::move(c));
  }
  return f;
}

Matrix left_inverse(const Matrix& k) {
  if (k.cols() == 0) return Matrix(0, k.rows());
  const Matrix kt = k.transpose();
  return inverse(kt * k) * kt;
}

}  // namespace

Module zero_module(const AlgebraPtr& a) { return empty_module(a, std::vector<int>(a->num_objects())); }

Module projective(const AlgebraPtr& a, int j) {
  std::vector<int> dims(a->num_objects());
  for (int i = 0; i < a->num_objects(); ++i) dims[i] = a->hom_dim(i, j);
  Module m = empty_module(a, dims);
  for (int g = 0; g < a->dim(); ++g) {
    const auto& b = a->basis(g);
    const int x = a->local_id(g);
    Matrix& mat = m.act[g];
    for (int h = 0; h < dims[b.tgt]; ++h) {
      const Vec& p = a->product(b.src, b.tgt, j, x, h);
      for (int r = 0; r < dims[b.src]; ++r) mat(r, h) = p[r];
    }
  }
  return m;
}

Module injective(const AlgebraPtr& a, int j) {
  std::vector<int> dims(a->num_objects());
  for (int i = 0; i < a->num_objects(); ++i) dims[i] = a->hom_dim(j, i);
  Module m = empty_module(a, dims);
  for (int g = 0; g < a->dim(); ++g) {
    const auto& b = a->basis(g);
    const int x = a->local_id(g);
    Matrix& mat = m.act[g];
    for (int t = 0; t < dims[b.src]; ++t) {
      const Vec& p = a->product(j, b.src, b.tgt, t, x);
      for (int s = 0; s < dims[b.tgt]; ++s) mat(t, s) = p[s];
    }
  }
  return m;
}

Module simple(const AlgebraPtr& a, int j) {
  std::vector<int> dims(a->num_objects());
  dims[j] = 1;
  Module m = empty_module(a, dims);
  m.act[a->global_id(j, j, 0)](0, 0) = 1;
  return m;
}

Module direct_sum(const std::vector<Module>& ms) {
  if (ms.empty()) throw PreconditionError("direct_sum of nothing");
  const AlgebraPtr& a = ms[0].alg;
  std::vector<int> dims(a->num_objects());
  for (const auto& m : ms)
    for (int v = 0; v < a->num_objects(); ++v) dims[v] += m.dims[v];
  Module s = empty_module(a, dims);
  std::vector<int> ro(a->num_objects());
  for (const auto& m : ms) {
    for (int g = 0; g < a->dim(); ++g) {
      const auto& b = a->basis(g);
      s.act[g].set_block(ro[b.src], ro[b.tgt], m.act[g]);
    }
    for (int v = 0; v < a->num_objects(); ++v) ro[v] += m.dims[v];
  }
  return s;
}

Module from_rep(const BoundQuiverAlgebra& bqa, const QuiverRep& rep) {
  const std::string why = check_relations(bqa, rep);
  if (!why.empty()) throw PreconditionError("not a representation: " + why);
  const AlgebraPtr& a = bqa.algebra();
  Module m{a, rep.dims, {}};
  for (int g = 0; g < a->dim(); ++g) m.act.push_back(path_action(rep, a->basis(g).src, bqa.basis_path(g)));
  return m;
}

std::string check_module(const Module& m) {
  const auto& a = *m.alg;
  for (int i = 0; i < a.num_objects(); ++i)
    if (!m.act[a.global_id(i, i, 0)].is_identity()) return "identity of " + a.label(i) + " does not act as 1";
  for (int i = 0; i < a.num_objects(); ++i)
    for (int j = 0; j < a.num_objects(); ++j)
      for (int k = 0; k < a.num_objects(); ++k)
        for (int x = 0; x < a.hom_dim(i, j); ++x)
          for (int y = 0; y < a.hom_dim(j, k); ++y) {
            const Matrix lhs = m.action(i, k, a.product(i, j, k, x, y));
            const Matrix rhs = m.act[a.global_id(i, j, x)] * m.act[a.global_id(j, k, y)];
            if (!(lhs == rhs)) return "action not functorial at " + a.label(i) + "," + a.label(j) + "," + a.label(k);
          }
  return {};
}

bool is_module_map(const Module& src, const Module& tgt, const ModuleMap& f) {
  const auto& a = *src.alg;
  for (int g : a.generators()) {
    const auto& b = a.basis(g);
    if (!(f.comp[b.src] * src.act[g] == tgt.act[g] * f.comp[b.tgt])) return false;
  }
  return true;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  ModuleMap h;
  for (std::size_t v = 0; v < f.comp.size(); ++v) h.comp.push_back(g.comp[v] * f.comp[v]);
  return h;
}

ModuleMap zero_map(const Module& src, const Module& tgt) {
  ModuleMap f;
  for (std::size_t v = 0; v < src.dims.size(); ++v) f.comp.emplace_back(tgt.dims[v], src.dims[v]);
  return f;
}

ModuleMap identity_map(const Module& m) {
  ModuleMap f;
  for (int d : m.dims) f.comp.push_back(Matrix::identity(d));
  return f;
}

std::vector<ModuleMap> hom_basis(const Module& m, const Module& n) {
  const auto& a = *m.alg;
  const int no = a.num_objects();
  std::vector<int> off(no + 1);
  for (int v = 0; v < no; ++v) off[v + 1] = off[v] + n.dims[v] * m.dims[v];
  const int unknowns = off[no];
  if (unknowns == 0) return {};
  std::vector<Vec> rows;
  for (int g : a.generators()) {
    const auto& b = a.basis(g);
    const int i = b.src, j = b.tgt;
    const Matrix& mg = m.act[g];  // m.dims[i] x m.dims[j]
    const Matrix& ng = n.act[g];  // n.dims[i] x n.dims[j]
    // (N(g) f_j - f_i M(g))(r, s) for r < n.dims[i], s < m.dims[j]
    for (int r = 0; r < n.dims[i]; ++r)
      for (int s = 0; s < m.dims[j]; ++s) {
        Vec row(unknowns);
        for (int t = 0; t < n.dims[j]; ++t)
          if (!ng(r, t).is_zero()) row[off[j] + t * m.dims[j] + s] += ng(r, t);
        for (int t = 0; t < m.dims[i]; ++t)
          if (!mg(t, s).is_zero()) row[off[i] + r * m.dims[i] + t] -= mg(t, s);
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  }
  const Matrix k = rows.empty() ? Matrix::identity(unknowns) : kernel(Matrix::from_rows(rows, unknowns));
  std::vector<ModuleMap> out;
  for (std::size_t c = 0; c < k.cols(); ++c) out.push_back(unflatten(k.col(c), m, n));
  return out;
}

int hom_dim(const Module& m, const Module& n) { return static_cast<int>(hom_basis(m, n).size()); }

std::vector<std::vector<Vec>> radical_subspace(const Module& m) {
  const auto& a = *m.alg;
  std::vector<std::vector<Vec>> out(a.num_objects());
  std::vector<SpanBasis> sb;
  for (int v = 0; v < a.num_objects(); ++v) sb.emplace_back(m.dims[v]);
  for (int g : a.generators()) {
    const auto& b = a.basis(g);
    for (std::size_t c = 0; c < m.act[g].cols(); ++c) {
      Vec v = m.act[g].col(c);
      if (sb[b.src].insert(v)) out[b.src].push_back(std::move(v));
    }
  }
  return out;
}

std::vector<int> top_dims(const Module& m) {
  const auto rad = radical_subspace(m);
  std::vector<int> t(m.dims.size());
  for (std::size_t v = 0; v < t.size(); ++v) t[v] = m.dims[v] - static_cast<int>(rad[v].size());
  return t;
}

std::vector<int> socle_dims(const Module& m) {
  const auto& a = *m.alg;
  std::vector<int> s(m.dims.size());
  for (int i = 0; i < a.num_objects(); ++i) {
    if (m.dims[i] == 0) continue;
    std::vector<Vec> rows;
    for (int g : a.generators())
      if (a.basis(g).tgt == i)
        for (std::size_t r = 0; r < m.act[g].rows(); ++r) rows.push_back(m.act[g].row(r));
    s[i] = rows.empty() ? m.dims[i] : static_cast<int>(kernel(Matrix::from_rows(rows, m.dims[i])).cols());
  }
  return s;
}

TopGenerators top_generators(const Module& m, const std::vector<std::vector<Vec>>& extra) {
  const auto rad = radical_subspace(m);
  TopGenerators g;
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    if (m.dims[v] == 0) continue;
    SpanBasis sb(m.dims[v]);
    for (const auto& x : rad[v]) sb.insert(x);
    if (!extra.empty())
      for (const auto& x : extra[v]) sb.insert(x);
    for (int t = 0; t < m.dims[v] && static_cast<int>(sb.size()) < m.dims[v]; ++t) {
      Vec e(m.dims[v]);
      e[t] = 1;
      if (sb.insert(e)) {
        g.objects.push_back(static_cast<int>(v));
        g.vectors.push_back(std::move(e));
      }
    }
  }
  return g;
}

Module projective_sum(const AlgebraPtr& a, const std::vector<int>& objects) {
  if (objects.empty()) return zero_module(a);
  std::vector<Module> ps;
  for (int o : objects) ps.push_back(projective(a, o));
  return direct_sum(ps);
}

ModuleMap map_from_projectives(const Module& m, const TopGenerators& g) {
  const auto& a = *m.alg;
  ModuleMap f;
  for (int i = 0; i < a.num_objects(); ++i) {
    int cols = 0;
    for (int o : g.objects) cols += a.hom_dim(i, o);
    Matrix c(m.dims[i], cols);
    int at = 0;
    for (std::size_t r = 0; r < g.objects.size(); ++r) {
      const int o = g.objects[r];
      for (int x = 0; x < a.hom_dim(i, o); ++x, ++at) {
        const Vec img = m.act[a.global_id(i, o, x)].apply(g.vectors[r]);
        for (int s = 0; s < m.dims[i]; ++s) c(s, at) = img[s];
      }
    }
    f.comp.push_back(std::move(c));
  }
  return f;
}

Subobject kernel(const Module& src, const Module& tgt, const ModuleMap& f) {
  (void)tgt;
  const auto& a = *src.alg;
  const int no = a.num_objects();
  std::vector<Matrix> ks(no), lefts(no);
  std::vector<int> dims(no);
  for (int v = 0; v < no; ++v) {
    ks[v] = kernel(f.comp[v]);
    dims[v] = static_cast<int>(ks[v].cols());
    lefts[v] = left_inverse(ks[v]);
  }
  Module k{src.alg, dims, {}};
  for (int g = 0; g < a.dim(); ++g) {
    const auto& b = a.basis(g);
    if (dims[b.src] == 0 || dims[b.tgt] == 0) {
      k.act.emplace_back(dims[b.src], dims[b.tgt]);
      continue;
    }
    k.act.push_back(lefts[b.src] * (src.act[g] * ks[b.tgt]));
  }
  return Subobject{std::move(k), ModuleMap{ks}};
}

bool is_projective_module(const Module& m) {
  const auto g = top_generators(m);
  int cover = 0;
  for (int o : g.objects)
    for (int v = 0; v < m.alg->num_objects(); ++v) cover += m.alg->hom_dim(v, o);
  return cover == m.total_dim();
}

bool isomorphic_dims(const Module& a, const Module& b) { return a.dims == b.dims; }

FDAlgebra endo_algebra(const std::vector<Module>& ms, const std::vector<std::string>& labels) {
  const int m = static_cast<int>(ms.size());
  std::vector<std::string> names = labels;
  if (names.empty())
    for (int i = 0; i < m; ++i) names.push_back(std::to_string(i));
  std::vector<std::vector<std::vector<ModuleMap>>> basis(m, std::vector<std::vector<ModuleMap>>(m));
  std::vector<std::vector<int>> dims(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto h = hom_basis(ms[i], ms[j]);
      if (i == j) {
        // identity first, then the trace-zero part
        const int total = ms[i].total_dim();
        std::vector<Vec> tr(1, Vec(h.size()));
        for (std::size_t c = 0; c < h.size(); ++c)
          for (const auto& comp : h[c].comp)
            for (std::size_t r = 0; r < comp.rows(); ++r) tr[0][c] += comp(r, r);
        const Matrix kt = kernel(Matrix::from_rows(tr, h.size()));
        std::vector<ModuleMap> b{identity_map(ms[i])};
        for (std::size_t c = 0; c < kt.cols(); ++c) {
          ModuleMap f = zero_map(ms[i], ms[i]);
          for (std::size_t t = 0; t < h.size(); ++t)
            if (!kt(t, c).is_zero())
              for (std::size_t v = 0; v < f.comp.size(); ++v) f.comp[v] += h[t].comp[v] * kt(t, c);
          b.push_back(std::move(f));
        }
        if (b.size() != h.size() || total == 0) throw PreconditionError("endomorphism ring is not local");
        h = std::move(b);
      }
      dims[i][j] = static_cast<int>(h.size());
      basis[i][j] = std::move(h);
    }
  FDAlgebra out(names, dims);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int x = 0; x < dims[i][j]; ++x)
        out.set_basis_info(i, j, x, 0, x == 0 && i == j ? "e" + names[i] : names[i] + ">" + names[j] + ":" + std::to_string(x));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      if (dims[i][k] == 0) continue;
      SpanBasis sb(flatten(basis[i][k][0]).size());
      for (const auto& f : basis[i][k]) sb.insert(flatten(f));
      for (int j = 0; j < m; ++j)
        for (int x = 0; x < dims[i][j]; ++x)
          for (int y = 0; y < dims[j][k]; ++y) {
            const auto c = sb.coordinates(flatten(compose(basis[j][k][y], basis[i][j][x])));
            if (!c) throw SearchFailure("composite outside Hom space");
            out.set_product(i, j, k, x, y, *c);
          }
    }
  out.finalize();
  return out;
}

}  // namespace hatilt

#include "hatilt/quiver.hpp"

#include <algorithm>
#include <map>

#include "hatilt/errors.hpp"

namespace hatilt {

int Quiver::add_vertex(std::string label) {
  vertices_.push_back(std::move(label));
  return num_vertices() - 1;
}

int Quiver::add_arrow(int src, int tgt, std::string label) {
  if (src < 0 || src >= num_vertices() || tgt < 0 || tgt >= num_vertices())
    throw PreconditionError("arrow endpoint out of range");
  arrows_.push_back(Arrow{num_arrows(), src, tgt, std::move(label)});
  return num_arrows() - 1;
}

int path_source(const Quiver& q, const PathWord& p) { return q.arrow(p.front()).src; }
int path_target(const Quiver& q, const PathWord& p) { return q.arrow(p.back()).tgt; }

std::string path_label(const Quiver& q, const PathWord& p) {
  std::string s;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (!s.empty()) s += "*";
    s += q.arrow(*it).label;
  }
  return s;
}

void validate_relation(const Quiver& q, const Relation& r) {
  if (r.terms.empty()) throw PreconditionError("empty relation");
  bool nonzero = false;
  for (const auto& t : r.terms) {
    if (t.path.empty()) throw PreconditionError("relation contains a trivial path");
    for (int a : t.path)
      if (a < 0 || a >= q.num_arrows()) throw PreconditionError("relation uses an unknown arrow");
    for (std::size_t k = 1; k < t.path.size(); ++k)
      if (q.arrow(t.path[k - 1]).tgt != q.arrow(t.path[k]).src) throw PreconditionError("relation path not composable");
    if (path_source(q, t.path) != path_source(q, r.terms[0].path) ||
        path_target(q, t.path) != path_target(q, r.terms[0].path))
      throw PreconditionError("relation paths not parallel");
    nonzero = nonzero || !t.coeff.is_zero();
  }
  if (!nonzero) throw PreconditionError("relation has only zero coefficients");
}

namespace {

using Sparse = std::map<int, Rational>;

void axpy(Sparse& out, const Rational& c, const Sparse& v) {
  for (const auto& [k, x] : v) {
    auto& slot = out[k];
    slot += c * x;
    if (slot.is_zero()) out.erase(k);
  }
}

struct Elem {
  int src, tgt, deg;
  PathWord path;
};

}  // namespace

BoundQuiverAlgebra::BoundQuiverAlgebra(Quiver q, std::vector<Relation> relations, std::size_t max_dim)
    : quiver_(std::move(q)), relations_(std::move(relations)) {
  for (const auto& r : relations_) {
    validate_relation(quiver_, r);
    for (const auto& t : r.terms)
      if (t.path.size() != r.terms[0].path.size()) throw PreconditionError("relation not homogeneous");
  }
  const int nv = quiver_.num_vertices();
  std::vector<Elem> elems;
  std::vector<std::vector<int>> layers;
  // ext[e] maps an arrow to the normal form of e followed by that arrow
  std::vector<std::map<int, Sparse>> ext;
  layers.emplace_back();
  for (int v = 0; v < nv; ++v) {
    elems.push_back(Elem{v, v, 0, {}});
    layers[0].push_back(v);
  }
  ext.resize(elems.size());

  auto extend = [&](Sparse cur, const PathWord& p, std::size_t upto) {
    for (std::size_t k = 0; k < upto; ++k) {
      Sparse next;
      for (const auto& [e, c] : cur) {
        auto it = ext[e].find(p[k]);
        if (it != ext[e].end()) axpy(next, c, it->second);
      }
      cur = std::move(next);
      if (cur.empty()) break;
    }
    return cur;
  };

  for (int L = 1;; ++L) {
    struct Cand {
      int base, arrow;
      PathWord path;
    };
    // candidates grouped by (source, target)
    std::map<std::pair<int, int>, std::vector<Cand>> groups;
    for (int b : layers[L - 1])
      for (const auto& a : quiver_.arrows())
        if (a.src == elems[b].tgt) {
          PathWord p = elems[b].path;
          p.push_back(a.id);
          groups[{elems[b].src, a.tgt}].push_back(Cand{b, a.id, std::move(p)});
        }
    layers.emplace_back();
    for (auto& [key, cands] : groups) {
      std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) { return x.path > y.path; });
      std::map<std::pair<int, int>, int> col;
      for (std::size_t c = 0; c < cands.size(); ++c) col[{cands[c].base, cands[c].arrow}] = static_cast<int>(c);
      std::vector<Vec> rows;
      for (const auto& r : relations_) {
        const PathWord& p0 = r.terms[0].path;
        const int m = static_cast<int>(p0.size());
        if (m > L || path_target(quiver_, p0) != key.second) continue;
        const int rs = path_source(quiver_, p0);
        for (int c : layers[L - m]) {
          if (elems[c].tgt != rs || elems[c].src != key.first) continue;
          Vec row(cands.size());
          for (const auto& t : r.terms) {
            const Sparse nf = extend(Sparse{{c, Rational(1)}}, t.path, t.path.size() - 1);
            for (const auto& [e, x] : nf) row[col.at({e, t.path.back()})] += t.coeff * x;
          }
          if (!is_zero(row)) rows.push_back(std::move(row));
        }
      }
      std::vector<int> pivot_row(cands.size(), -1);
      Matrix red;
      if (!rows.empty()) {
        auto e = rref(Matrix::from_rows(rows, cands.size()));
        for (std::size_t r = 0; r < e.pivots.size(); ++r) pivot_row[e.pivots[r]] = static_cast<int>(r);
        red = std::move(e.reduced);
      }
      std::vector<int> new_id(cands.size(), -1);
      // keep creation order ascending in path order
      for (std::size_t c = cands.size(); c-- > 0;) {
        if (pivot_row[c] >= 0) continue;
        new_id[c] = static_cast<int>(elems.size());
        elems.push_back(Elem{key.first, key.second, L, cands[c].path});
        layers[L].push_back(new_id[c]);
        if (elems.size() > max_dim) throw BudgetExceeded("bound quiver algebra exceeds dimension budget");
      }
      ext.resize(elems.size());
      for (std::size_t c = 0; c < cands.size(); ++c) {
        Sparse nf;
        if (pivot_row[c] < 0) {
          nf[new_id[c]] = 1;
        } else {
          for (std::size_t f = 0; f < cands.size(); ++f)
            if (pivot_row[f] < 0 && !red(pivot_row[c], f).is_zero()) nf[new_id[f]] = -red(pivot_row[c], f);
        }
        ext[cands[c].base][cands[c].arrow] = std::move(nf);
      }
    }
    if (layers[L].empty()) break;
  }

  // assemble the category
  std::vector<std::vector<int>> dims(nv, std::vector<int>(nv));
  std::vector<int> local(elems.size());
  std::vector<std::vector<std::vector<int>>> members(nv, std::vector<std::vector<int>>(nv));
  for (std::size_t e = 0; e < elems.size(); ++e) {
    auto& mem = members[elems[e].src][elems[e].tgt];
    local[e] = static_cast<int>(mem.size());
    mem.push_back(static_cast<int>(e));
    dims[elems[e].src][elems[e].tgt]++;
  }
  auto alg = std::make_shared<FDAlgebra>(quiver_.vertex_labels(), dims);
  paths_.assign(elems.size(), {});
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j)
      for (int x = 0; x < dims[i][j]; ++x) {
        const Elem& el = elems[members[i][j][x]];
        alg->set_basis_info(i, j, x, el.deg, el.deg == 0 ? "e" + quiver_.vertex_label(i) : path_label(quiver_, el.path));
        paths_[alg->global_id(i, j, x)] = el.path;
      }
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j)
      for (int k = 0; k < nv; ++k)
        for (int x = 0; x < dims[i][j]; ++x)
          for (int y = 0; y < dims[j][k]; ++y) {
            const int ex = members[i][j][x];
            const PathWord& py = elems[members[j][k][y]].path;
            const Sparse nf = extend(Sparse{{ex, Rational(1)}}, py, py.size());
            Vec v(dims[i][k]);
            for (const auto& [e, c] : nf) v[local[e]] = c;
            alg->set_product(i, j, k, x, y, std::move(v));
          }
  alg->set_graded(true);
  alg->finalize();
  alg_ = alg;

  arrow_basis_.assign(quiver_.num_arrows(), -1);
  arrow_vec_.clear();
  for (const auto& a : quiver_.arrows()) {
    const Sparse nf = extend(Sparse{{a.src, Rational(1)}}, PathWord{a.id}, 1);
    Vec v(dims[a.src][a.tgt]);
    for (const auto& [e, c] : nf) v[local[e]] = c;
    if (nf.size() == 1 && nf.begin()->second == Rational(1))
      arrow_basis_[a.id] = alg_->global_id(a.src, a.tgt, local[nf.begin()->first]);
    arrow_vec_.push_back(std::move(v));
  }
}

Vec BoundQuiverAlgebra::reduce(int src, const PathWord& p) const {
  Vec cur = alg_->identity(src);
  int at = src;
  for (int a : p) {
    const Arrow& ar = quiver_.arrow(a);
    if (ar.src != at) throw PreconditionError("path not composable");
    cur = alg_->compose(src, at, ar.tgt, cur, arrow_vec_[a]);
    at = ar.tgt;
  }
  return cur;
}

Matrix path_action(const QuiverRep& rep, int src, const PathWord& p) {
  Matrix m = Matrix::identity(rep.dims.at(src));
  for (int a : p) m = m * rep.maps.at(a);
  return m;
}

std::string check_relations(const BoundQuiverAlgebra& bqa, const QuiverRep& rep) {
  const Quiver& q = bqa.quiver();
  if (static_cast<int>(rep.dims.size()) != q.num_vertices() || static_cast<int>(rep.maps.size()) != q.num_arrows())
    return "representation shape mismatch";
  for (const auto& a : q.arrows())
    if (static_cast<int>(rep.maps[a.id].rows()) != rep.dims[a.src] ||
        static_cast<int>(rep.maps[a.id].cols()) != rep.dims[a.tgt])
      return "arrow " + a.label + " has a map of the wrong size";
  for (const auto& r : bqa.relations()) {
    const int s = path_source(q, r.terms[0].path), t = path_target(q, r.terms[0].path);
    Matrix sum(rep.dims[s], rep.dims[t]);
    for (const auto& term : r.terms) sum += path_action(rep, s, term.path) * term.coeff;
    if (!sum.is_zero()) return "relation at " + path_label(q, r.terms[0].path) + " fails";
  }
  return {};
}

namespace {

bool valid_seq(const std::vector<int>& v, int n, int d) {
  if (static_cast<int>(v.size()) != d || v.front() < 1 || v.back() > n + d - 1) return false;
  for (std::size_t k = 1; k < v.size(); ++k)
    if (v[k] <= v[k - 1]) return false;
  return true;
}

}  // namespace

BoundQuiverAlgebra build_auslander_algebra(int n, int d, std::size_t max_dim) {
  if (n < 1 || d < 1) throw PreconditionError("build_auslander_algebra needs n, d >= 1");
  const auto os = enumerate_os(n, d);
  Quiver q;
  std::map<std::vector<int>, int> vid;
  for (const auto& x : os) vid[x.entries()] = q.add_vertex(x.label());
  std::map<std::pair<int, int>, int> arrow_of;  // (vertex, direction) -> arrow
  for (const auto& x : os)
    for (int i = 0; i < d; ++i) {
      auto y = x.entries();
      ++y[i];
      if (!valid_seq(y, n, d)) continue;
      const int v = vid.at(x.entries());
      arrow_of[{v, i}] = q.add_arrow(v, vid.at(y), "a" + std::to_string(i + 1) + "(" + x.label() + ")");
    }
  std::vector<Relation> rels;
  for (const auto& x : os)
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        auto z = x.entries();
        ++z[i];
        ++z[j];
        if (!valid_seq(z, n, d)) continue;
        const int v = vid.at(x.entries());
        auto route = [&](int first, int second) -> std::optional<PathWord> {
          auto it = arrow_of.find({v, first});
          if (it == arrow_of.end()) return std::nullopt;
          auto mid = x.entries();
          ++mid[first];
          auto it2 = arrow_of.find({vid.at(mid), second});
          if (it2 == arrow_of.end()) return std::nullopt;
          return PathWord{it->second, it2->second};
        };
        const auto via_j = route(j, i), via_i = route(i, j);
        Relation r;
        if (via_j) r.terms.push_back(PathTerm{Rational(1), *via_j});
        if (via_i) r.terms.push_back(PathTerm{Rational(-1), *via_i});
        if (!r.terms.empty()) rels.push_back(std::move(r));
      }
  return BoundQuiverAlgebra(std::move(q), std::move(rels), max_dim);
}

BoundQuiverAlgebra linear_truncated(int n, int length) {
  if (n < 1 || length < 1) throw PreconditionError("linear_truncated needs n, length >= 1");
  Quiver q;
  for (int v = 1; v <= n; ++v) q.add_vertex(std::to_string(v));
  for (int v = 0; v + 1 < n; ++v) q.add_arrow(v, v + 1, "a" + std::to_string(v + 1));
  std::vector<Relation> rels;
  for (int s = 0; s + length < n; ++s) {
    PathWord p;
    for (int k = 0; k < length; ++k) p.push_back(s + k);
    rels.push_back(Relation{{PathTerm{Rational(1), p}}});
  }
  return BoundQuiverAlgebra(std::move(q), std::move(rels));
}

QuiverRep module_M(const BoundQuiverAlgebra& alg, const OrderedSeq& x) {
  const int d = static_cast<int>(x.size()) - 1;
  if (d < 1) throw PreconditionError("module_M needs at least two entries");
  const auto os = enumerate_os(x.n(), d);
  const Quiver& q = alg.quiver();
  if (static_cast<int>(os.size()) != q.num_vertices()) throw PreconditionError("sequence does not match the algebra");
  for (std::size_t v = 0; v < os.size(); ++v)
    if (os[v].label() != q.vertex_label(static_cast<int>(v))) throw PreconditionError("sequence does not match the algebra");
  std::vector<int> lo(x.entries().begin(), x.entries().end() - 1), hi;
  for (std::size_t k = 1; k < x.size(); ++k) hi.push_back(x[k] - 1);
  const OrderedSeq low(x.n(), d, lo), high(x.n(), d, hi);
  QuiverRep rep;
  for (const auto& z : os) rep.dims.push_back(preceq(low, z) && preceq(z, high) ? 1 : 0);
  for (const auto& a : q.arrows()) {
    Matrix m(rep.dims[a.src], rep.dims[a.tgt]);
    if (rep.dims[a.src] && rep.dims[a.tgt]) m(0, 0) = 1;
    rep.maps.push_back(std::move(m));
  }
  return rep;
}

}  // namespace hatilt

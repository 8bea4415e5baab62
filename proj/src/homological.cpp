#include "hatilt/homological.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "hatilt/errors.hpp"

namespace hatilt {

Module ModuleComplex::term(int p) const {
  if (p < lo || p > hi()) return zero_module(alg);
  return terms[p - lo];
}

ModuleMap ModuleComplex::diff(int p) const {
  if (p >= lo && p < hi()) return diffs[p - lo];
  return zero_map(term(p), term(p + 1));
}

ModuleComplex module_stalk(const Module& m, int degree) {
  return ModuleComplex{m.alg, degree, {m}, {zero_map(m, zero_module(m.alg))}};
}

ModuleMap projective_map(const AlgebraPtr& alg, const std::vector<int>& src, const std::vector<int>& tgt,
                         const ElemMatrix& e) {
  const FDAlgebra& a = *alg;
  ModuleMap f;
  for (int i = 0; i < a.num_objects(); ++i) {
    int rows = 0, cols = 0;
    for (int t : tgt) rows += a.hom_dim(i, t);
    for (int s : src) cols += a.hom_dim(i, s);
    Matrix m(rows, cols);
    int c0 = 0;
    for (std::size_t c = 0; c < src.size(); ++c) {
      const int hc = a.hom_dim(i, src[c]);
      int r0 = 0;
      for (std::size_t r = 0; r < tgt.size(); ++r) {
        const int hr = a.hom_dim(i, tgt[r]);
        const Vec& entry = e.at(r, c);
        if (!is_zero(entry))
          for (int x = 0; x < hc; ++x) {
            const Vec img = a.compose(i, src[c], tgt[r], a.basis_vector(i, src[c], x), entry);
            for (int z = 0; z < hr; ++z) m(r0 + z, c0 + x) = img[z];
          }
        r0 += hr;
      }
      c0 += hc;
    }
    f.comp.push_back(std::move(m));
  }
  return f;
}

ModuleComplex as_modules(const ProjComplex& x) {
  if (x.is_zero()) return ModuleComplex{x.alg, 0, {}, {}};
  ModuleComplex m{x.alg, x.lo, {}, {}};
  for (int p = x.lo; p <= x.hi(); ++p) m.terms.push_back(projective_sum(x.alg, x.term(p)));
  for (int p = x.lo; p <= x.hi(); ++p) m.diffs.push_back(projective_map(x.alg, x.term(p), x.term(p + 1), x.diff(p)));
  return m;
}

namespace {

Module sum_of(const std::vector<Module>& parts, const AlgebraPtr& a) {
  std::vector<Module> nonzero;
  for (const auto& m : parts)
    if (m.total_dim() > 0) nonzero.push_back(m);
  return nonzero.empty() ? zero_module(a) : direct_sum(nonzero);
}

// Block map [[a, b], [c, d]] from s1 + s2 to t1 + t2, per vertex.
ModuleMap block_map(const Module& s1, const Module& s2, const Module& t1, const Module& t2, const ModuleMap* a,
                    const ModuleMap* c, const ModuleMap* d, const Rational& a_scale) {
  ModuleMap f;
  for (std::size_t v = 0; v < s1.dims.size(); ++v) {
    Matrix m(t1.dims[v] + t2.dims[v], s1.dims[v] + s2.dims[v]);
    if (a && t1.dims[v] && s1.dims[v]) m.set_block(0, 0, a->comp[v] * a_scale);
    if (c && t2.dims[v] && s1.dims[v]) m.set_block(t1.dims[v], 0, c->comp[v]);
    if (d && t2.dims[v] && s2.dims[v]) m.set_block(t1.dims[v], s1.dims[v], d->comp[v]);
    f.comp.push_back(std::move(m));
  }
  return f;
}

struct Truncation {
  int floor = 0;
  bool throw_at_floor = true;
};

// Builds P and a quasi-isomorphism P -> M degree by degree from the top, choosing
// P^p as a projective cover of ker(cone differential) modulo the image of M^{p-1}.
ProjComplex resolve_impl(const ModuleComplex& m, Truncation trunc) {
  const AlgebraPtr& alg = m.alg;
  const FDAlgebra& a = *alg;
  const int no = a.num_objects();
  int top = m.hi(), bottom = m.lo;
  while (top >= bottom && m.term(top).total_dim() == 0) --top;
  while (bottom <= top && m.term(bottom).total_dim() == 0) ++bottom;
  if (top < bottom) return zero_complex(alg);

  std::vector<std::vector<int>> objs_by_degree;
  std::vector<ElemMatrix> diff_by_degree;  // P^p -> P^{p+1}
  std::vector<int> objs1;  // objects of P^{p+1}
  Module p1 = zero_module(alg), p2 = zero_module(alg);
  ModuleMap dp1 = zero_map(p1, p2), f1 = zero_map(p1, m.term(top + 1));
  int p = top;
  for (;; --p) {
    const Module mp = m.term(p), mp1 = m.term(p + 1);
    const ModuleMap dm = m.diff(p);
    const Module c = sum_of({p1, mp}, alg);
    const Module c1 = sum_of({p2, mp1}, alg);
    // D(x, y) = (-d_P x, f x + d_M y)
    const ModuleMap big = block_map(p1, mp, p2, mp1, &dp1, &f1, &dm, Rational(-1));
    const Subobject k = kernel(c, c1, big);
    if (k.module.total_dim() == 0 && p < bottom) break;
    if (p < trunc.floor) {
      if (k.module.total_dim() == 0) break;
      if (trunc.throw_at_floor) throw BudgetExceeded("exceeds max_len");
      break;
    }
    std::vector<std::vector<Vec>> extra(no);
    if (p - 1 >= bottom) {
      const ModuleMap dprev = m.diff(p - 1);
      for (int v = 0; v < no; ++v) {
        if (k.module.dims[v] == 0) continue;
        const Matrix& img = dprev.comp[v];
        for (std::size_t col = 0; col < img.cols(); ++col) {
          Vec u(c.dims[v]);
          for (int r = 0; r < mp.dims[v]; ++r) u[p1.dims[v] + r] = img(r, col);
          if (is_zero(u)) continue;
          Matrix rhs(u.size(), 1);
          for (std::size_t r = 0; r < u.size(); ++r) rhs(r, 0) = u[r];
          const auto sol = solve(k.inclusion.comp[v], rhs);
          if (!sol) throw SearchFailure("resolve: boundary outside the cone kernel");
          extra[v].push_back(sol->col(0));
        }
      }
    }
    const TopGenerators gens = top_generators(k.module, extra);
    ElemMatrix dp(a, objs1, gens.objects);
    TopGenerators to_m{gens.objects, {}};
    for (std::size_t r = 0; r < gens.objects.size(); ++r) {
      const int o = gens.objects[r];
      const Vec full = k.inclusion.comp[o].apply(gens.vectors[r]);
      int at = 0;
      for (std::size_t s = 0; s < objs1.size(); ++s) {
        Vec& e = dp.at(s, r);
        for (std::size_t t = 0; t < e.size(); ++t) e[t] = -full[at + t];
        at += static_cast<int>(e.size());
      }
      to_m.vectors.emplace_back(full.begin() + p1.dims[o], full.end());
    }
    const Module pp = projective_sum(alg, gens.objects);
    ModuleMap fp = to_m.objects.empty() ? zero_map(pp, mp) : map_from_projectives(mp, to_m);
    objs_by_degree.push_back(gens.objects);
    diff_by_degree.push_back(dp);
    dp1 = projective_map(alg, gens.objects, objs1, dp);
    f1 = std::move(fp);
    p2 = std::move(p1);
    p1 = pp;
    objs1 = gens.objects;
  }
  // degrees p+1 .. top were produced, top first
  ProjComplex x{alg, p + 1, {objs_by_degree.rbegin(), objs_by_degree.rend()},
                {diff_by_degree.rbegin(), diff_by_degree.rend()}};
  return trim(x);
}

std::vector<std::vector<int>> terms_top_down(const ProjComplex& x) {
  std::vector<std::vector<int>> out;
  if (x.is_zero()) return out;
  for (int p = 0; p >= x.lo; --p) out.push_back(x.term(p));
  return out;
}

}  // namespace

ProjComplex resolve(const ModuleComplex& m, int max_extra) {
  return minimize(resolve_impl(m, Truncation{m.lo - max_extra, true}));
}

Resolution minimal_proj_resolution(const Module& m, int max_len, const std::string& label) {
  if (max_len < 0) throw PreconditionError("max_len must be nonnegative");
  ProjComplex x = resolve_impl(module_stalk(m), Truncation{-max_len, true});
  Resolution r;
  r.report.label = label;
  r.report.length = x.is_zero() ? 0 : -x.lo;
  r.report.terms = terms_top_down(x);
  r.complex = std::move(x);
  return r;
}

int projective_dimension(const Module& m, int max_len) { return minimal_proj_resolution(m, max_len).report.length; }

int gldim(const AlgebraPtr& a, int max_len) {
  int g = 0;
  for (int j = 0; j < a->num_objects(); ++j) g = std::max(g, projective_dimension(simple(a, j), max_len));
  return g;
}

std::string DominantDimension::to_string() const { return infinite ? "inf" : std::to_string(value); }

DominantDimension domdim(const AlgebraPtr& a, int max_len) {
  // a minimal injective coresolution of A is dual to a minimal projective
  // resolution of D(A) over the opposite algebra
  const AlgebraPtr op = std::make_shared<const FDAlgebra>(opposite(*a));
  std::vector<bool> proj_inj(a->num_objects());
  for (int k = 0; k < a->num_objects(); ++k) proj_inj[k] = is_projective_module(injective(a, k));
  DominantDimension best{true, 0};
  for (int j = 0; j < a->num_objects(); ++j) {
    const ProjComplex x = minimal_proj_resolution(injective(op, j), max_len).complex;
    int t = 0;
    bool all = true;
    for (int p = 0; p >= x.lo && !x.is_zero(); --p, ++t) {
      const auto objs = x.term(p);
      if (!std::all_of(objs.begin(), objs.end(), [&](int k) { return proj_inj[k]; })) {
        all = false;
        break;
      }
    }
    if (all) continue;
    if (best.infinite || t < best.value) best = DominantDimension{false, t};
  }
  return best;
}

int ext_dim(const Module& m, const Module& n, int i) {
  if (i < 0) throw PreconditionError("ext_dim: negative degree");
  const ProjComplex x = resolve_impl(module_stalk(m), Truncation{-(i + 1), false});
  // cochain C^q = Hom(P^{-q}, N) = sum over summands c of N(c)
  auto cochain_dim = [&](int q) {
    int s = 0;
    for (int o : x.term(-q)) s += n.dims[o];
    return s;
  };
  // delta^q: C^q -> C^{q+1}, precomposition with d: P^{-q-1} -> P^{-q}
  auto delta = [&](int q) {
    const auto src = x.term(-q), tgt = x.term(-q - 1);
    Matrix mat(cochain_dim(q + 1), cochain_dim(q));
    if (mat.rows() == 0 || mat.cols() == 0) return mat;
    const ElemMatrix d = x.diff(-q - 1);
    int r0 = 0;
    for (std::size_t c2 = 0; c2 < tgt.size(); ++c2) {
      int c0 = 0;
      for (std::size_t c = 0; c < src.size(); ++c) {
        if (!is_zero(d.at(c, c2))) mat.set_block(r0, c0, n.action(tgt[c2], src[c], d.at(c, c2)));
        c0 += n.dims[src[c]];
      }
      r0 += n.dims[tgt[c2]];
    }
    return mat;
  };
  const int dim = cochain_dim(i);
  if (dim == 0) return 0;
  const int out_rank = static_cast<int>(rank(delta(i)));
  const int in_rank = i > 0 ? static_cast<int>(rank(delta(i - 1))) : 0;
  return dim - out_rank - in_rank;
}

std::optional<std::vector<int>> nakayama_permutation(const AlgebraPtr& a) {
  const int no = a->num_objects();
  std::vector<int> perm(no, -1);
  std::vector<bool> used(no);
  for (int j = 0; j < no; ++j) {
    const Module p = projective(a, j);
    const auto soc = socle_dims(p);
    if (std::accumulate(soc.begin(), soc.end(), 0) != 1) return std::nullopt;
    // a projective with simple socle S_k embeds into I_k; equal dimensions make it an iso
    const int k = static_cast<int>(std::find(soc.begin(), soc.end(), 1) - soc.begin());
    if (used[k] || !isomorphic_dims(p, injective(a, k))) return std::nullopt;
    used[k] = true;
    perm[j] = k;
  }
  return perm;
}

namespace {

// nu on a morphism between sums of projectives, as a map between sums of injectives
ModuleMap nakayama_map(const AlgebraPtr& alg, const std::vector<int>& src, const std::vector<int>& tgt,
                       const ElemMatrix& e) {
  const FDAlgebra& a = *alg;
  ModuleMap f;
  for (int i = 0; i < a.num_objects(); ++i) {
    int rows = 0, cols = 0;
    for (int t : tgt) rows += a.hom_dim(t, i);
    for (int s : src) cols += a.hom_dim(s, i);
    Matrix m(rows, cols);
    int r0 = 0;
    for (std::size_t r = 0; r < tgt.size(); ++r) {
      const int hr = a.hom_dim(tgt[r], i);
      int c0 = 0;
      for (std::size_t c = 0; c < src.size(); ++c) {
        const int hc = a.hom_dim(src[c], i);
        const Vec& entry = e.at(r, c);
        for (int y = 0; y < static_cast<int>(entry.size()); ++y) {
          if (entry[y].is_zero()) continue;
          for (int s = 0; s < hr; ++s) {
            const Vec& prod = a.product(src[c], tgt[r], i, y, s);
            for (int t = 0; t < hc; ++t)
              if (!prod[t].is_zero()) m(r0 + s, c0 + t) += entry[y] * prod[t];
          }
        }
        c0 += hc;
      }
      r0 += hr;
    }
    f.comp.push_back(std::move(m));
  }
  return f;
}

Module injective_sum(const AlgebraPtr& a, const std::vector<int>& objects) {
  std::vector<Module> parts;
  for (int o : objects) parts.push_back(injective(a, o));
  return sum_of(parts, a);
}

}  // namespace

ProjComplex derived_nakayama(const ProjComplex& input, int max_len) {
  const ProjComplex x = minimize(input);
  if (x.is_zero()) return x;
  ModuleComplex m{x.alg, x.lo, {}, {}};
  for (int p = x.lo; p <= x.hi(); ++p) m.terms.push_back(injective_sum(x.alg, x.term(p)));
  for (int p = x.lo; p <= x.hi(); ++p) m.diffs.push_back(nakayama_map(x.alg, x.term(p), x.term(p + 1), x.diff(p)));
  return resolve(m, max_len);
}

ProjComplex derived_nakayama_inverse(const ProjComplex& x, int max_len) {
  const AlgebraPtr op = std::make_shared<const FDAlgebra>(opposite(*x.alg));
  return minimize(dual(derived_nakayama(dual(x, op), max_len), x.alg));
}

ProjComplex nakayama_power(const ProjComplex& x, int k, int max_len) {
  ProjComplex y = minimize(x);
  if (k < 0) {
    const AlgebraPtr op = std::make_shared<const FDAlgebra>(opposite(*x.alg));
    y = dual(y, op);
    for (int i = 0; i < -k; ++i) y = derived_nakayama(y, max_len);
    return minimize(dual(y, x.alg));
  }
  for (int i = 0; i < k; ++i) y = derived_nakayama(y, max_len);
  return y;
}

std::vector<ProjComplex> nu_orbit(const ProjComplex& x, int count, int max_len) {
  std::vector<ProjComplex> out;
  ProjComplex y = minimize(x);
  for (int i = 0; i < count; ++i) {
    out.push_back(y);
    if (i + 1 < count) y = derived_nakayama(y, max_len);
  }
  return out;
}

ProjComplex build_tilting_complex_from_nu_orbit(const ProjComplex& x, int count, int max_len) {
  if (count < 1) throw PreconditionError("orbit length must be positive");
  return direct_sum(nu_orbit(x, count, max_len));
}

bool rigid(const std::vector<ProjComplex>& summands, int window) {
  for (const auto& x : summands)
    for (const auto& y : summands) {
      const HomComplex h(x, y);
      for (int k = -window; k <= window; ++k)
        if (k != 0 && h.cohomology_dim(k) != 0) return false;
    }
  return true;
}

namespace {

// Splits a complex along the connected components of its nonzero differential entries.
std::vector<ProjComplex> split_components(const ProjComplex& x) {
  if (x.is_zero()) return {};
  std::vector<int> start;
  int n = 0;
  for (const auto& t : x.terms) {
    start.push_back(n);
    n += static_cast<int>(t.size());
  }
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (int p = x.lo; p < x.hi(); ++p) {
    const auto& d = x.diffs[p - x.lo];
    for (std::size_t r = 0; r < d.rows.size(); ++r)
      for (std::size_t c = 0; c < d.cols.size(); ++c)
        if (!is_zero(d.at(r, c))) parent[find(start[p - x.lo] + static_cast<int>(c))] = find(start[p + 1 - x.lo] + static_cast<int>(r));
  }
  std::map<int, std::vector<int>> comps;
  for (int v = 0; v < n; ++v) comps[find(v)].push_back(v);
  if (comps.size() == 1) return {x};
  std::vector<ProjComplex> out;
  for (const auto& [root, members] : comps) {
    std::vector<std::vector<std::size_t>> keep(x.terms.size());
    for (int v : members) {
      const auto it = std::upper_bound(start.begin(), start.end(), v) - 1;
      const std::size_t deg = it - start.begin();
      keep[deg].push_back(static_cast<std::size_t>(v - *it));
    }
    ProjComplex c{x.alg, x.lo, {}, {}};
    for (std::size_t i = 0; i < keep.size(); ++i) {
      std::vector<int> t;
      for (auto idx : keep[i]) t.push_back(x.terms[i][idx]);
      c.terms.push_back(std::move(t));
    }
    for (std::size_t i = 0; i < keep.size(); ++i) {
      const std::vector<int> rows = i + 1 < keep.size() ? c.terms[i + 1] : std::vector<int>{};
      ElemMatrix d(*x.alg, rows, c.terms[i]);
      if (i + 1 < keep.size())
        for (std::size_t r = 0; r < keep[i + 1].size(); ++r)
          for (std::size_t cc = 0; cc < keep[i].size(); ++cc) d.at(r, cc) = x.diffs[i].at(keep[i + 1][r], keep[i][cc]);
      c.diffs.push_back(std::move(d));
    }
    out.push_back(trim(c));
  }
  return out;
}

ProjComplex normalize(const ProjComplex& x) { return x.is_zero() ? x : shift(x, x.lo); }

struct Found {
  ProjComplex complex;  // minimized, lowest degree 0
  std::string recipe;
};

// index of an entry equal to x up to shift, or -1
int locate(const std::vector<Found>& pool, const ProjComplex& x) {
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (pool[i].complex.total_terms() == x.total_terms() && homotopy_equivalent(pool[i].complex, x))
      return static_cast<int>(i);
  return -1;
}

std::string shifted(const std::string& name, int k) {
  if (k == 0) return name;
  return name + "[" + std::to_string(k) + "]";
}

}  // namespace

ThickSearchResult thick_generation_search(const std::vector<ProjComplex>& summands,
                                          const std::vector<ProjComplex>& targets, int depth,
                                          int shift_window) {
  if (depth < 1) throw PreconditionError("depth must be at least 1");
  ThickSearchResult res;
  res.recipes.assign(targets.size(), "");
  std::vector<Found> pool;
  auto add = [&](const ProjComplex& x, const std::string& recipe) {
    for (const auto& c : split_components(minimize(x))) {
      const ProjComplex nc = normalize(c);
      if (locate(pool, nc) < 0) pool.push_back(Found{nc, recipe});
    }
  };
  for (std::size_t i = 0; i < summands.size(); ++i) add(summands[i], "T" + std::to_string(i));
  std::vector<ProjComplex> norm_targets;
  for (const auto& t : targets) norm_targets.push_back(normalize(minimize(t)));
  auto check_targets = [&]() {
    bool all = true;
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (!res.recipes[t].empty()) continue;
      const int at = locate(pool, norm_targets[t]);
      if (at < 0) {
        all = false;
        continue;
      }
      // the pool entry sits at lowest degree 0; undo the target's normalization
      res.recipes[t] = shifted(pool[at].recipe, -minimize(targets[t]).lo);
    }
    return all;
  };
  if (check_targets()) {
    res.success = true;
    res.explored = static_cast<int>(pool.size());
    return res;
  }
  for (int round = 0; round < depth; ++round) {
    const std::size_t frozen = pool.size();
    for (std::size_t i = 0; i < frozen; ++i)
      for (std::size_t j = 0; j < frozen; ++j)
        for (int k = -shift_window; k <= shift_window; ++k) {
          const ProjComplex y = shift(pool[j].complex, k);
          const HomComplex h(pool[i].complex, y);
          if (h.cohomology_dim(0) == 0) continue;
          SpanBasis sb(h.dim(0));
          for (const auto& b : h.coboundaries(0)) sb.insert(b);
          for (const auto& z : h.cocycles(0)) {
            if (!sb.insert(z)) continue;
            // cone(f)[-1] keeps the source's degrees when f is an iso on a summand
            const std::string recipe = "cone(" + pool[i].recipe + " -> " + shifted(pool[j].recipe, k) + ")[-1]";
            add(shift(cone(pool[i].complex, y, h.unflatten(0, z)), -1), recipe);
          }
        }
    if (check_targets()) {
      res.success = true;
      break;
    }
  }
  res.explored = static_cast<int>(pool.size());
  return res;
}

TwoSubhomogeneousReport two_subhomogeneous_check(const AlgebraPtr& a, int d, int max_len) {
  TwoSubhomogeneousReport rep;
  try {
    rep.gldim = gldim(a, d);
  } catch (const BudgetExceeded&) {
    throw PreconditionError("gldim exceeds d");
  }
  for (int j = 0; j < a->num_objects(); ++j) {
    const Module inj = injective(a, j);
    if (is_projective_module(inj)) continue;
    ++rep.injectives_checked;
    const Resolution r = minimal_proj_resolution(inj, d, a->label(j));
    const ProjComplex y = minimize(shift(derived_nakayama(r.complex, max_len), -d));
    if (y.is_zero() || y.lo != 0 || y.hi() != 0)
      rep.failures.push_back("nu_d(I" + a->label(j) + ") is not a projective module: " + y.describe());
    for (int k = 0; k < a->num_objects(); ++k)
      for (int i = 1; i <= d - 1; ++i)
        if (ext_dim(inj, projective(a, k), i) != 0)
          rep.failures.push_back("Ext^" + std::to_string(i) + "(I" + a->label(j) + ", P" + a->label(k) + ") != 0");
  }
  rep.passed = rep.failures.empty();
  return rep;
}

FcyReport fcy_object_check(const AlgebraPtr& a, int m, int ell, int max_len) {
  FcyReport rep;
  rep.passed = true;
  for (int i = 0; i < a->num_objects(); ++i) {
    const ProjComplex p = stalk(a, i);
    const bool ok = homotopy_equivalent(nakayama_power(p, ell, max_len), shift(p, m));
    rep.per_projective.push_back(ok);
    rep.passed = rep.passed && ok;
  }
  return rep;
}

}  // namespace hatilt

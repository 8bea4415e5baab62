#include "hatilt/presentation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "hatilt/errors.hpp"

namespace hatilt {

Quiver gabriel_quiver(const FDAlgebra& a) {
  Quiver q;
  for (int i = 0; i < a.num_objects(); ++i) q.add_vertex(a.label(i));
  for (int g : a.generators()) {
    const auto& b = a.basis(g);
    q.add_arrow(b.src, b.tgt, b.name);
  }
  return q;
}

Presentation presentation(const FDAlgebra& a, std::size_t max_paths) {
  Presentation pr;
  pr.quiver = gabriel_quiver(a);
  pr.arrow_basis = a.generators();
  const Quiver& q = pr.quiver;
  const int m = a.num_objects();
  const int N = a.loewy_length();

  // per length: nonzero paths with their images, and minimal zero paths
  std::vector<std::map<PathWord, Vec>> nonzero(N + 1);
  std::vector<std::set<PathWord>> zero(N + 1);
  std::size_t count = 0;
  for (const auto& ar : q.arrows()) nonzero[1][{ar.id}] = a.basis_vector(ar.src, ar.tgt, a.local_id(pr.arrow_basis[ar.id]));
  for (int L = 2; L <= N; ++L)
    for (const auto& [p, img] : nonzero[L - 1]) {
      const int s = path_source(q, p), t = path_target(q, p);
      for (const auto& ar : q.arrows()) {
        if (ar.src != t) continue;
        PathWord np = p;
        np.push_back(ar.id);
        Vec v = a.compose(s, t, ar.tgt, img, nonzero[1].at({ar.id}));
        if (++count > max_paths) throw BudgetExceeded("presentation path enumeration exceeds budget");
        if (!is_zero(v)) {
          nonzero[L][np] = std::move(v);
        } else if (nonzero[L - 1].count(PathWord(np.begin() + 1, np.end()))) {
          zero[L].insert(np);
        }
      }
    }

  // graded check: images of different lengths must be independent
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::size_t sum = 0;
      SpanBasis all(a.hom_dim(i, j));
      for (int L = 1; L <= N; ++L) {
        std::vector<Vec> imgs;
        for (const auto& [p, img] : nonzero[L])
          if (path_source(q, p) == i && path_target(q, p) == j) imgs.push_back(img);
        if (!imgs.empty()) sum += rank(Matrix::from_rows(imgs, a.hom_dim(i, j)));
        for (const auto& v : imgs) all.insert(v);
      }
      if (sum != all.size()) throw PreconditionError("algebra is not graded by path length for the chosen arrows");
    }

  // kernel degree by degree, minimal generators modulo the ideal from lower degrees
  using Key = std::pair<int, int>;
  std::map<Key, std::vector<PathWord>> prev_cols;
  std::map<Key, std::vector<Vec>> prev_kernel;
  for (int L = 1; L <= N; ++L) {
    std::map<Key, std::vector<PathWord>> cols;
    for (const auto& [p, img] : nonzero[L]) cols[{path_source(q, p), path_target(q, p)}].push_back(p);
    for (const auto& p : zero[L]) cols[{path_source(q, p), path_target(q, p)}].push_back(p);
    std::map<Key, std::vector<Vec>> kern;
    for (auto& [key, ps] : cols) {
      std::sort(ps.begin(), ps.end());
      std::map<PathWord, std::size_t> index;
      for (std::size_t c = 0; c < ps.size(); ++c) index[ps[c]] = c;
      const int hd = a.hom_dim(key.first, key.second);
      Matrix phi(hd, ps.size());
      for (std::size_t c = 0; c < ps.size(); ++c) {
        auto it = nonzero[L].find(ps[c]);
        if (it != nonzero[L].end())
          for (int r = 0; r < hd; ++r) phi(r, c) = it->second[r];
      }
      const Matrix k = kernel(phi);
      if (k.cols() == 0) continue;
      const auto e = rref(k.transpose());
      std::vector<Vec> rows;
      for (std::size_t r = 0; r < e.pivots.size(); ++r) rows.push_back(e.reduced.row(r));
      kern[key] = rows;

      SpanBasis lower(ps.size());
      auto add_shifted = [&](const std::vector<PathWord>& pcols, const Vec& r, int arrow, bool right) {
        Vec v(ps.size());
        for (std::size_t c = 0; c < pcols.size(); ++c) {
          if (r[c].is_zero()) continue;
          PathWord np;
          if (right) {
            np = pcols[c];
            np.push_back(arrow);
          } else {
            np.push_back(arrow);
            np.insert(np.end(), pcols[c].begin(), pcols[c].end());
          }
          auto it = index.find(np);
          if (it != index.end()) v[it->second] += r[c];
        }
        lower.insert(v);
      };
      for (const auto& ar : q.arrows()) {
        if (ar.tgt == key.second) {
          auto it = prev_kernel.find({key.first, ar.src});
          if (it != prev_kernel.end())
            for (const auto& r : it->second) add_shifted(prev_cols.at({key.first, ar.src}), r, ar.id, true);
        }
        if (ar.src == key.first) {
          auto it = prev_kernel.find({ar.tgt, key.second});
          if (it != prev_kernel.end())
            for (const auto& r : it->second) add_shifted(prev_cols.at({ar.tgt, key.second}), r, ar.id, false);
        }
      }
      for (const auto& row : rows) {
        if (!lower.insert(row)) continue;
        Relation rel;
        for (std::size_t c = 0; c < ps.size(); ++c)
          if (!row[c].is_zero()) rel.terms.push_back(PathTerm{row[c], ps[c]});
        pr.relations.push_back(std::move(rel));
      }
    }
    prev_cols = std::move(cols);
    prev_kernel = std::move(kern);
  }
  return pr;
}

std::string to_string(IsoStatus s) {
  switch (s) {
    case IsoStatus::isomorphic:
      return "isomorphic";
    case IsoStatus::not_isomorphic:
      return "not_isomorphic";
    case IsoStatus::inconclusive:
      break;
  }
  return "inconclusive";
}

namespace {

enum class Attempt { success, failure, unsupported };

std::vector<std::vector<int>> arrow_counts(const FDAlgebra& a) {
  std::vector<std::vector<int>> c(a.num_objects(), std::vector<int>(a.num_objects()));
  for (int g : a.generators()) c[a.basis(g).src][a.basis(g).tgt]++;
  return c;
}

bool thin(const FDAlgebra& a) {
  for (int i = 0; i < a.num_objects(); ++i)
    for (int j = 0; j < a.num_objects(); ++j)
      if (a.hom_dim(i, j) > 1) return false;
  return true;
}

std::map<long long, int> factor(long long x) {
  std::map<long long, int> f;
  for (long long p = 2; p * p <= x; ++p)
    while (x % p == 0) {
      f[p]++;
      x /= p;
    }
  if (x > 1) f[x]++;
  return f;
}

// Solves rows * s = rhs over GF(2); empty optional when inconsistent.
std::optional<std::vector<int>> solve_gf2(std::vector<std::vector<int>> rows, std::vector<int> rhs, int n) {
  std::vector<int> pivcol;
  std::size_t r = 0;
  for (int c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (k != r && rows[k][c]) {
        for (int t = 0; t < n; ++t) rows[k][t] ^= rows[r][t];
        rhs[k] ^= rhs[r];
      }
    pivcol.push_back(c);
    ++r;
  }
  for (std::size_t k = r; k < rows.size(); ++k)
    if (rhs[k]) return std::nullopt;
  std::vector<int> s(n);
  for (std::size_t k = 0; k < pivcol.size(); ++k) s[pivcol[k]] = rhs[k];
  return s;
}

Attempt try_scalars(const FDAlgebra& a1, const Presentation& pr, const FDAlgebra& a2, const std::vector<int>& pi) {
  const Quiver& q = pr.quiver;
  const int na = q.num_arrows();
  // kappa: scalar of a path's image when every arrow goes to the basis vector of its Hom space
  auto kappa = [&](const PathWord& p) -> Rational {
    const int s = pi[path_source(q, p)];
    Vec cur = a2.identity(s);
    int at = s;
    for (int arr : p) {
      const int t = pi[q.arrow(arr).tgt];
      if (a2.hom_dim(at, t) == 0 || a2.hom_dim(s, t) == 0) return Rational(0);
      cur = a2.compose(s, at, t, cur, a2.basis_vector(at, t, 0));
      at = t;
    }
    return cur[0];
  };
  std::vector<std::pair<std::vector<int>, Rational>> eqs;
  for (const auto& rel : pr.relations) {
    const int s = pi[path_source(q, rel.terms[0].path)], t = pi[path_target(q, rel.terms[0].path)];
    if (a2.hom_dim(s, t) == 0) continue;
    if (rel.terms.size() > 2) return Attempt::unsupported;
    std::vector<Rational> k;
    for (const auto& term : rel.terms) k.push_back(term.coeff * kappa(term.path));
    if (rel.terms.size() == 1) {
      if (!k[0].is_zero()) return Attempt::failure;
      continue;
    }
    if (k[0].is_zero() && k[1].is_zero()) continue;
    if (k[0].is_zero() || k[1].is_zero()) return Attempt::failure;
    std::vector<int> v(na);
    for (int arr : rel.terms[0].path) v[arr]++;
    for (int arr : rel.terms[1].path) v[arr]--;
    eqs.emplace_back(std::move(v), -k[1] / k[0]);
  }
  std::vector<int> sign(na);
  std::map<long long, Vec> expo;  // prime -> exponent per arrow
  if (!eqs.empty()) {
    std::vector<std::vector<int>> rows;
    std::vector<int> rhs;
    std::set<long long> primes;
    for (const auto& [v, r] : eqs) {
      std::vector<int> row(na);
      for (int t = 0; t < na; ++t) row[t] = ((v[t] % 2) + 2) % 2;
      rows.push_back(row);
      rhs.push_back(r.sign() < 0 ? 1 : 0);
      for (const auto& [p, e] : factor(std::llabs(r.num()))) primes.insert(p);
      for (const auto& [p, e] : factor(r.den())) primes.insert(p);
    }
    const auto s = solve_gf2(rows, rhs, na);
    if (!s) return Attempt::failure;
    sign = *s;
    for (long long p : primes) {
      Matrix aug(eqs.size(), na + 1);
      for (std::size_t e = 0; e < eqs.size(); ++e) {
        for (int t = 0; t < na; ++t) aug(e, t) = eqs[e].first[t];
        const auto fn = factor(std::llabs(eqs[e].second.num())), fd = factor(eqs[e].second.den());
        int ord = 0;
        if (fn.count(p)) ord += fn.at(p);
        if (fd.count(p)) ord -= fd.at(p);
        aug(e, na) = ord;
      }
      const auto ech = rref(aug);
      Vec x(na);
      for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
        if (ech.pivots[r] == static_cast<std::size_t>(na)) return Attempt::failure;
        x[ech.pivots[r]] = ech.reduced(r, na);
        if (!x[ech.pivots[r]].is_integer()) return Attempt::unsupported;
      }
      expo[p] = x;
    }
  }
  std::vector<Rational> lambda(na, Rational(1));
  for (int t = 0; t < na; ++t) {
    if (sign[t]) lambda[t] = -lambda[t];
    for (const auto& [p, x] : expo) {
      const long long e = x[t].num();
      for (long long k = 0; k < std::llabs(e); ++k) lambda[t] = e > 0 ? lambda[t] * Rational(p) : lambda[t] / Rational(p);
    }
  }
  // verify every relation maps to zero
  for (const auto& rel : pr.relations) {
    const int s = pi[path_source(q, rel.terms[0].path)], t = pi[path_target(q, rel.terms[0].path)];
    if (a2.hom_dim(s, t) == 0) continue;
    Rational sum = 0;
    for (const auto& term : rel.terms) {
      Rational v = term.coeff * kappa(term.path);
      for (int arr : term.path) v *= lambda[arr];
      sum += v;
    }
    if (!sum.is_zero()) return Attempt::failure;
  }
  // arrow images must be nonzero modulo rad^2 of the target
  const int m2 = a2.num_objects();
  for (const auto& ar : q.arrows()) {
    const int s = pi[ar.src], t = pi[ar.tgt];
    if (a2.hom_dim(s, t) == 0) return Attempt::failure;
    if (a2.loewy_length() > 2 && !a2.radical_power(2)[s * m2 + t].empty()) return Attempt::failure;
  }
  (void)a1;
  return Attempt::success;
}

}  // namespace

IsoResult iso_test(const FDAlgebra& a1, const FDAlgebra& a2, std::size_t max_bijections) {
  IsoResult res;
  const int m = a1.num_objects();
  if (m != a2.num_objects() || a1.dim() != a2.dim()) {
    res.status = IsoStatus::not_isomorphic;
    res.detail = "object count or dimension differs";
    return res;
  }
  const auto c1 = a1.cartan(), c2 = a2.cartan();
  const auto n1 = arrow_counts(a1), n2 = arrow_counts(a2);
  auto profile = [m](const std::vector<std::vector<int>>& c, const std::vector<std::vector<int>>& n, int i) {
    std::vector<std::pair<int, int>> out, in;
    for (int k = 0; k < m; ++k) {
      out.emplace_back(c[i][k], n[i][k]);
      in.emplace_back(c[k][i], n[k][i]);
    }
    std::sort(out.begin(), out.end());
    std::sort(in.begin(), in.end());
    return std::make_tuple(c[i][i], n[i][i], out, in);
  };
  std::vector<std::vector<int>> cand(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (profile(c1, n1, i) == profile(c2, n2, j)) cand[i].push_back(j);

  const bool supported = thin(a1) && thin(a2);
  Presentation pr;
  bool have_pr = false;
  if (supported) {
    try {
      pr = presentation(a1);
      have_pr = true;
    } catch (const PreconditionError&) {
    }
  }
  std::vector<int> pi(m, -1);
  std::vector<bool> used(m, false);
  std::size_t tried = 0;
  bool undecided = false;
  bool found = false;
  std::function<void(int)> rec = [&](int i) {
    if (found || tried > max_bijections) return;
    if (i == m) {
      ++tried;
      if (!have_pr) {
        undecided = true;
        return;
      }
      const Attempt at = try_scalars(a1, pr, a2, pi);
      if (at == Attempt::success) found = true;
      if (at == Attempt::unsupported) undecided = true;
      return;
    }
    for (int j : cand[i]) {
      if (used[j]) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k)
        ok = c1[i][k] == c2[j][pi[k]] && c1[k][i] == c2[pi[k]][j] && n1[i][k] == n2[j][pi[k]] &&
             n1[k][i] == n2[pi[k]][j];
      if (!ok) continue;
      pi[i] = j;
      used[j] = true;
      rec(i + 1);
      if (found) return;
      used[j] = false;
      pi[i] = -1;
    }
  };
  rec(0);
  if (found) {
    res.status = IsoStatus::isomorphic;
    res.vertex_map = pi;
    res.detail = "verified arrow scalars after " + std::to_string(tried) + " bijection(s)";
  } else if (tried > max_bijections) {
    res.detail = "bijection budget exhausted";
  } else if (undecided) {
    res.detail = supported ? "scalar system outside the supported class" : "non-thin algebras are not supported";
  } else {
    res.status = IsoStatus::not_isomorphic;
    res.detail = "exhausted " + std::to_string(tried) + " compatible bijection(s)";
  }
  return res;
}

}  // namespace hatilt

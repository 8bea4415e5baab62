#include "hatilt/complex.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <sstream>

#include "hatilt/errors.hpp"

namespace hatilt {

ElemMatrix::ElemMatrix(const FDAlgebra& a, std::vector<int> row_objs, std::vector<int> col_objs)
    : rows(std::move(row_objs)), cols(std::move(col_objs)) {
  entries.reserve(rows.size() * cols.size());
  for (int r : rows)
    for (int c : cols) entries.push_back(a.zero(c, r));
}

bool ElemMatrix::is_zero() const {
  for (const auto& e : entries)
    if (!hatilt::is_zero(e)) return false;
  return true;
}

ElemMatrix multiply(const FDAlgebra& a, const ElemMatrix& g, const ElemMatrix& f) {
  if (g.cols != f.rows) throw PreconditionError("multiply: inner objects differ");
  ElemMatrix out(a, g.rows, f.cols);
  for (std::size_t r = 0; r < g.rows.size(); ++r)
    for (std::size_t c = 0; c < f.cols.size(); ++c) {
      Vec& acc = out.at(r, c);
      for (std::size_t k = 0; k < f.rows.size(); ++k) {
        const Vec& fe = f.at(k, c);
        const Vec& ge = g.at(r, k);
        if (is_zero(fe) || is_zero(ge)) continue;
        const Vec p = a.compose(f.cols[c], f.rows[k], g.rows[r], fe, ge);
        for (std::size_t t = 0; t < acc.size(); ++t) acc[t] += p[t];
      }
    }
  return out;
}

ElemMatrix add(const ElemMatrix& x, const ElemMatrix& y, const Rational& scale) {
  if (x.rows != y.rows || x.cols != y.cols) throw PreconditionError("add: shapes differ");
  ElemMatrix out = x;
  for (std::size_t i = 0; i < out.entries.size(); ++i)
    for (std::size_t t = 0; t < out.entries[i].size(); ++t) out.entries[i][t] += scale * y.entries[i][t];
  return out;
}

namespace {

ElemMatrix scaled(ElemMatrix m, const Rational& s) {
  for (auto& e : m.entries)
    for (auto& x : e) x *= s;
  return m;
}

ElemMatrix identity_matrix(const FDAlgebra& a, const std::vector<int>& objs) {
  ElemMatrix m(a, objs, objs);
  for (std::size_t i = 0; i < objs.size(); ++i) m.at(i, i) = a.identity(objs[i]);
  return m;
}

ElemMatrix remove_row(const FDAlgebra& a, const ElemMatrix& m, std::size_t row) {
  std::vector<int> rows = m.rows;
  rows.erase(rows.begin() + row);
  ElemMatrix out(a, rows, m.cols);
  for (std::size_t r = 0, rr = 0; r < m.rows.size(); ++r) {
    if (r == row) continue;
    for (std::size_t c = 0; c < m.cols.size(); ++c) out.at(rr, c) = m.at(r, c);
    ++rr;
  }
  return out;
}

ElemMatrix remove_col(const FDAlgebra& a, const ElemMatrix& m, std::size_t col) {
  std::vector<int> cols = m.cols;
  cols.erase(cols.begin() + col);
  ElemMatrix out(a, m.rows, cols);
  for (std::size_t r = 0; r < m.rows.size(); ++r)
    for (std::size_t c = 0, cc = 0; c < m.cols.size(); ++c) {
      if (c == col) continue;
      out.at(r, cc++) = m.at(r, c);
    }
  return out;
}

// Two-sided inverse of an invertible endomorphism of a local object.
Vec invert_local(const FDAlgebra& a, int obj, const Vec& phi) {
  const int h = a.hom_dim(obj, obj);
  Matrix m(h, h);
  for (int y = 0; y < h; ++y) {
    const Vec col = a.compose(obj, obj, obj, phi, a.basis_vector(obj, obj, y));
    for (int t = 0; t < h; ++t) m(t, y) = col[t];
  }
  Matrix rhs(h, 1);
  rhs(0, 0) = 1;
  const auto sol = solve(m, rhs);
  if (!sol) throw SearchFailure("local endomorphism with nonzero identity part is not invertible");
  return sol->col(0);
}

}  // namespace

bool ProjComplex::is_zero() const {
  for (const auto& t : terms)
    if (!t.empty()) return false;
  return true;
}

std::vector<int> ProjComplex::term(int p) const {
  if (p < lo || p > hi()) return {};
  return terms[p - lo];
}

ElemMatrix ProjComplex::diff(int p) const {
  if (p >= lo && p <= hi()) return diffs[p - lo];
  return ElemMatrix(*alg, term(p + 1), term(p));
}

int ProjComplex::total_terms() const {
  int n = 0;
  for (const auto& t : terms) n += static_cast<int>(t.size());
  return n;
}

std::string ProjComplex::describe() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int p = lo; p <= hi(); ++p) {
    if (!first) os << " -> ";
    first = false;
    os << "[" << p << ":";
    for (std::size_t i = 0; i < terms[p - lo].size(); ++i) os << (i ? "+" : "") << "P" << alg->label(terms[p - lo][i]);
    os << "]";
  }
  return os.str();
}

ProjComplex zero_complex(const AlgebraPtr& a) { return ProjComplex{a, 0, {}, {}}; }

ProjComplex stalk(const AlgebraPtr& a, int obj, int degree) {
  ProjComplex x{a, degree, {{obj}}, {}};
  x.diffs.push_back(ElemMatrix(*a, {}, {obj}));
  return x;
}

ProjComplex make_complex(const AlgebraPtr& a, int lo, std::vector<std::vector<int>> terms,
                         std::vector<ElemMatrix> diffs) {
  if (diffs.size() != terms.size()) throw PreconditionError("make_complex: one differential per term expected");
  ProjComplex x{a, lo, std::move(terms), std::move(diffs)};
  return trim(x);
}

std::string check_complex(const ProjComplex& x) {
  if (x.terms.size() != x.diffs.size()) return "term/differential count mismatch";
  for (int p = x.lo; p <= x.hi(); ++p) {
    const auto d = x.diff(p);
    if (d.cols != x.term(p) || d.rows != x.term(p + 1)) return "differential shape mismatch at degree " + std::to_string(p);
    for (std::size_t r = 0; r < d.rows.size(); ++r)
      for (std::size_t c = 0; c < d.cols.size(); ++c)
        if (d.at(r, c).size() != static_cast<std::size_t>(x.alg->hom_dim(d.cols[c], d.rows[r])))
          return "entry length mismatch at degree " + std::to_string(p);
  }
  for (int p = x.lo; p < x.hi(); ++p)
    if (!multiply(*x.alg, x.diff(p + 1), x.diff(p)).is_zero()) return "d*d != 0 at degree " + std::to_string(p);
  return {};
}

ProjComplex shift(const ProjComplex& x, int s) {
  ProjComplex y = x;
  y.lo = x.lo - s;
  if (s % 2 != 0)
    for (auto& d : y.diffs) d = scaled(d, Rational(-1));
  return y;
}

ProjComplex trim(const ProjComplex& x) {
  if (x.is_zero()) return zero_complex(x.alg);
  int a = x.lo, b = x.hi();
  while (x.term(a).empty()) ++a;
  while (x.term(b).empty()) --b;
  ProjComplex y{x.alg, a, {}, {}};
  for (int p = a; p <= b; ++p) {
    y.terms.push_back(x.term(p));
    ElemMatrix d = x.diff(p);
    if (p == b) d = ElemMatrix(*x.alg, {}, x.term(p));
    y.diffs.push_back(std::move(d));
  }
  return y;
}

ProjComplex direct_sum(const std::vector<ProjComplex>& xs) {
  if (xs.empty()) throw PreconditionError("direct_sum of nothing");
  const AlgebraPtr& a = xs[0].alg;
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto& x : xs) {
    if (x.is_zero()) continue;
    lo = any ? std::min(lo, x.lo) : x.lo;
    hi = any ? std::max(hi, x.hi()) : x.hi();
    any = true;
  }
  if (!any) return zero_complex(a);
  ProjComplex s{a, lo, {}, {}};
  for (int p = lo; p <= hi; ++p) {
    std::vector<int> t;
    for (const auto& x : xs) {
      const auto tp = x.term(p);
      t.insert(t.end(), tp.begin(), tp.end());
    }
    s.terms.push_back(std::move(t));
  }
  for (int p = lo; p <= hi; ++p) {
    ElemMatrix d(*a, s.term(p + 1), s.term(p));
    std::size_t r0 = 0, c0 = 0;
    for (const auto& x : xs) {
      const auto dx = x.diff(p);
      for (std::size_t r = 0; r < dx.rows.size(); ++r)
        for (std::size_t c = 0; c < dx.cols.size(); ++c) d.at(r0 + r, c0 + c) = dx.at(r, c);
      r0 += dx.rows.size();
      c0 += dx.cols.size();
    }
    s.diffs.push_back(std::move(d));
  }
  return s;
}

bool is_minimal(const ProjComplex& x) {
  for (int p = x.lo; p <= x.hi(); ++p) {
    const auto& d = x.diffs[p - x.lo];
    for (std::size_t r = 0; r < d.rows.size(); ++r)
      for (std::size_t c = 0; c < d.cols.size(); ++c)
        if (d.rows[r] == d.cols[c] && !d.at(r, c)[0].is_zero()) return false;
  }
  return true;
}

ProjComplex minimize(const ProjComplex& input) {
  ProjComplex x = trim(input);
  const FDAlgebra& a = *x.alg;
  for (;;) {
    bool changed = false;
    for (int p = x.lo; p < x.hi() && !changed; ++p) {
      const ElemMatrix& d = x.diffs[p - x.lo];
      for (std::size_t r = 0; r < d.rows.size() && !changed; ++r)
        for (std::size_t c = 0; c < d.cols.size() && !changed; ++c) {
          if (d.rows[r] != d.cols[c] || d.at(r, c)[0].is_zero()) continue;
          const int obj = d.rows[r];
          const Vec inv = invert_local(a, obj, d.at(r, c));
          // new d^p on the complements: d(s,t) - d(s,c) inv d(r,t)
          ElemMatrix nd = remove_col(a, remove_row(a, d, r), c);
          for (std::size_t s = 0, ss = 0; s < d.rows.size(); ++s) {
            if (s == r) continue;
            for (std::size_t t = 0, tt = 0; t < d.cols.size(); ++t) {
              if (t == c) continue;
              const Vec& left = d.at(s, c);
              const Vec& right = d.at(r, t);
              if (!is_zero(left) && !is_zero(right)) {
                const Vec mid = a.compose(d.cols[t], obj, obj, right, inv);
                const Vec corr = a.compose(d.cols[t], obj, d.rows[s], mid, left);
                Vec& e = nd.at(ss, tt);
                for (std::size_t k = 0; k < e.size(); ++k) e[k] -= corr[k];
              }
              ++tt;
            }
            ++ss;
          }
          const int i = p - x.lo;
          x.diffs[i] = std::move(nd);
          if (p > x.lo) x.diffs[i - 1] = remove_row(a, x.diffs[i - 1], c);
          x.diffs[i + 1] = remove_col(a, x.diffs[i + 1], r);
          x.terms[i].erase(x.terms[i].begin() + c);
          x.terms[i + 1].erase(x.terms[i + 1].begin() + r);
          changed = true;
        }
    }
    if (!changed) break;
  }
  return trim(x);
}

HomComplex::HomComplex(const ProjComplex& x, const ProjComplex& y) : x_(trim(x)), y_(trim(y)) {}

HomComplex::Layout HomComplex::layout(int k) const {
  Layout l;
  l.k = k;
  if (x_.is_zero() || y_.is_zero()) return l;
  l.first = std::max(x_.lo, y_.lo - k);
  const int last = std::min(x_.hi(), y_.hi() - k);
  for (int p = l.first; p <= last; ++p) {
    l.block_off.push_back(l.total);
    const auto rows = y_.term(p + k), cols = x_.term(p);
    std::vector<int> off;
    for (int r : rows)
      for (int c : cols) {
        off.push_back(l.total);
        l.total += x_.alg->hom_dim(c, r);
      }
    l.entry_off.push_back(std::move(off));
  }
  return l;
}

int HomComplex::dim(int k) const { return layout(k).total; }

Matrix HomComplex::differential(int k) const {
  const Layout l0 = layout(k), l1 = layout(k + 1);
  Matrix m(l1.total, l0.total);
  if (l0.total == 0 || l1.total == 0) return m;
  const FDAlgebra& a = *x_.alg;
  const Rational sign = (k % 2 == 0) ? Rational(-1) : Rational(1);
  auto block1 = [&](int p) -> int {
    const int b = p - l1.first;
    return (b >= 0 && b < static_cast<int>(l1.entry_off.size())) ? b : -1;
  };
  for (std::size_t b = 0; b < l0.entry_off.size(); ++b) {
    const int p = l0.first + static_cast<int>(b);
    const auto rows = y_.term(p + k), cols = x_.term(p);
    const int b_dy = block1(p), b_dx = block1(p - 1);
    const ElemMatrix dy = y_.diff(p + k);
    const ElemMatrix dx = x_.diff(p - 1);
    const auto rows1 = y_.term(p + k + 1);
    const auto cols1 = x_.term(p - 1);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const int h = a.hom_dim(cols[c], rows[r]);
        for (int t = 0; t < h; ++t) {
          const int col = l0.entry_off[b][r * cols.size() + c] + t;
          const Vec e = a.basis_vector(cols[c], rows[r], t);
          if (b_dy >= 0)
            for (std::size_t s = 0; s < rows1.size(); ++s) {
              if (is_zero(dy.at(s, r))) continue;
              const Vec v = a.compose(cols[c], rows[r], rows1[s], e, dy.at(s, r));
              const int base = l1.entry_off[b_dy][s * cols.size() + c];
              for (std::size_t z = 0; z < v.size(); ++z) m(base + z, col) += v[z];
            }
          if (b_dx >= 0)
            for (std::size_t c2 = 0; c2 < cols1.size(); ++c2) {
              if (is_zero(dx.at(c, c2))) continue;
              const Vec v = a.compose(cols1[c2], cols[c], rows[r], dx.at(c, c2), e);
              const int base = l1.entry_off[b_dx][r * cols1.size() + c2];
              for (std::size_t z = 0; z < v.size(); ++z) m(base + z, col) += sign * v[z];
            }
        }
      }
  }
  return m;
}

int HomComplex::cohomology_dim(int k) const {
  const int n = dim(k);
  if (n == 0) return 0;
  return n - static_cast<int>(rank(differential(k))) - static_cast<int>(rank(differential(k - 1)));
}

std::vector<Vec> HomComplex::cocycles(int k) const {
  const int n = dim(k);
  if (n == 0) return {};
  const Matrix z = kernel(differential(k));
  std::vector<Vec> out;
  for (std::size_t c = 0; c < z.cols(); ++c) out.push_back(z.col(c));
  return out;
}

std::vector<Vec> HomComplex::coboundaries(int k) const {
  const Matrix d = differential(k - 1);
  std::vector<Vec> out;
  for (std::size_t c = 0; c < d.cols(); ++c) {
    Vec v = d.col(c);
    if (!is_zero(v)) out.push_back(std::move(v));
  }
  return out;
}

ChainMap HomComplex::unflatten(int k, const Vec& v) const {
  const Layout l = layout(k);
  ChainMap f;
  f.k = k;
  f.lo = l.first;
  for (std::size_t b = 0; b < l.entry_off.size(); ++b) {
    const int p = l.first + static_cast<int>(b);
    ElemMatrix m(*x_.alg, y_.term(p + k), x_.term(p));
    for (std::size_t r = 0; r < m.rows.size(); ++r)
      for (std::size_t c = 0; c < m.cols.size(); ++c) {
        Vec& e = m.at(r, c);
        const int base = l.entry_off[b][r * m.cols.size() + c];
        for (std::size_t t = 0; t < e.size(); ++t) e[t] = v[base + t];
      }
    f.comp.push_back(std::move(m));
  }
  return f;
}

Vec HomComplex::flatten(const ChainMap& f) const {
  const Layout l = layout(f.k);
  Vec v(l.total);
  for (std::size_t b = 0; b < l.entry_off.size(); ++b) {
    const int p = l.first + static_cast<int>(b);
    const int idx = p - f.lo;
    if (idx < 0 || idx >= static_cast<int>(f.comp.size())) continue;
    const ElemMatrix& m = f.comp[idx];
    for (std::size_t r = 0; r < m.rows.size(); ++r)
      for (std::size_t c = 0; c < m.cols.size(); ++c) {
        const Vec& e = m.at(r, c);
        const int base = l.entry_off[b][r * m.cols.size() + c];
        for (std::size_t t = 0; t < e.size(); ++t) v[base + t] = e[t];
      }
  }
  return v;
}

Vec HomComplex::identity_vector() const {
  ChainMap f;
  f.k = 0;
  f.lo = x_.lo;
  for (int p = x_.lo; p <= x_.hi(); ++p) f.comp.push_back(identity_matrix(*x_.alg, x_.term(p)));
  return flatten(f);
}

int hom_complex_dim(const ProjComplex& x, const ProjComplex& y, int k) { return HomComplex(x, y).cohomology_dim(k); }

ChainMap compose(const FDAlgebra& a, const ChainMap& g, const ChainMap& f) {
  ChainMap h;
  h.k = f.k + g.k;
  const int f_hi = f.lo + static_cast<int>(f.comp.size()) - 1;
  const int g_hi = g.lo + static_cast<int>(g.comp.size()) - 1;
  h.lo = std::max(f.lo, g.lo - f.k);
  const int hi = std::min(f_hi, g_hi - f.k);
  for (int p = h.lo; p <= hi; ++p) h.comp.push_back(multiply(a, g.comp[p + f.k - g.lo], f.comp[p - f.lo]));
  return h;
}

ProjComplex cone(const ProjComplex& x, const ProjComplex& y, const ChainMap& f) {
  const AlgebraPtr& alg = x.alg;
  const FDAlgebra& a = *alg;
  if (x.is_zero()) return y;
  auto fcomp = [&](int p) {
    const int idx = p - f.lo;
    if (idx >= 0 && idx < static_cast<int>(f.comp.size())) return f.comp[idx];
    return ElemMatrix(a, y.term(p), x.term(p));
  };
  const int lo = y.is_zero() ? x.lo - 1 : std::min(x.lo - 1, y.lo);
  const int hi = y.is_zero() ? x.hi() - 1 : std::max(x.hi() - 1, y.hi());
  ProjComplex c{alg, lo, {}, {}};
  auto obj = [&](int p) {
    auto t = x.term(p + 1);
    const auto yt = y.term(p);
    t.insert(t.end(), yt.begin(), yt.end());
    return t;
  };
  for (int p = lo; p <= hi; ++p) c.terms.push_back(obj(p));
  for (int p = lo; p <= hi; ++p) {
    ElemMatrix d(a, obj(p + 1), obj(p));
    const auto dx = x.diff(p + 1), dy = y.diff(p), fp = fcomp(p + 1);
    const std::size_t nx1 = x.term(p + 1).size(), nx2 = x.term(p + 2).size();
    for (std::size_t r = 0; r < dx.rows.size(); ++r)
      for (std::size_t s = 0; s < dx.cols.size(); ++s) {
        d.at(r, s) = dx.at(r, s);
        for (auto& v : d.at(r, s)) v = -v;
      }
    for (std::size_t r = 0; r < fp.rows.size(); ++r)
      for (std::size_t s = 0; s < fp.cols.size(); ++s) d.at(nx2 + r, s) = fp.at(r, s);
    for (std::size_t r = 0; r < dy.rows.size(); ++r)
      for (std::size_t s = 0; s < dy.cols.size(); ++s) d.at(nx2 + r, nx1 + s) = dy.at(r, s);
    c.diffs.push_back(std::move(d));
  }
  return trim(c);
}

ProjComplex dual(const ProjComplex& x, const AlgebraPtr& opposite_alg) {
  if (x.is_zero()) return zero_complex(opposite_alg);
  const FDAlgebra& op = *opposite_alg;
  ProjComplex y{opposite_alg, -x.hi(), {}, {}};
  for (int q = -x.hi(); q <= -x.lo; ++q) y.terms.push_back(x.term(-q));
  for (int q = -x.hi(); q <= -x.lo; ++q) {
    const auto d = x.diff(-q - 1);  // X^{-q-1} -> X^{-q}
    ElemMatrix e(op, x.term(-q - 1), x.term(-q));
    for (std::size_t r = 0; r < d.rows.size(); ++r)
      for (std::size_t c = 0; c < d.cols.size(); ++c) e.at(c, r) = d.at(r, c);
    y.diffs.push_back(std::move(e));
  }
  return trim(y);
}

namespace {

bool same_terms(const ProjComplex& x, const ProjComplex& y) {
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  if (x.lo != y.lo || x.hi() != y.hi()) return false;
  for (int p = x.lo; p <= x.hi(); ++p) {
    auto a = x.term(p), b = y.term(p);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  return true;
}

bool tops_invertible(const ProjComplex& x, const ProjComplex& y, const ChainMap& f) {
  for (int p = x.lo; p <= x.hi(); ++p) {
    const ElemMatrix& m = f.comp[p - f.lo];
    auto objs = x.term(p);
    std::sort(objs.begin(), objs.end());
    objs.erase(std::unique(objs.begin(), objs.end()), objs.end());
    for (int o : objs) {
      std::vector<std::size_t> rs, cs;
      for (std::size_t r = 0; r < m.rows.size(); ++r)
        if (m.rows[r] == o) rs.push_back(r);
      for (std::size_t c = 0; c < m.cols.size(); ++c)
        if (m.cols[c] == o) cs.push_back(c);
      Matrix t(rs.size(), cs.size());
      for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j) t(i, j) = m.at(rs[i], cs[j])[0];
      if (determinant(t).is_zero()) return false;
    }
  }
  (void)y;
  return true;
}

}  // namespace

bool homotopy_equivalent(const ProjComplex& x0, const ProjComplex& y0, std::uint32_t seed, int attempts) {
  const ProjComplex x = minimize(x0), y = minimize(y0);
  if (!same_terms(x, y)) return false;
  if (x.is_zero()) return true;
  const HomComplex h(x, y);
  const auto z = h.cocycles(0);
  if (z.empty()) return false;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-6, 6);
  for (int t = 0; t < attempts; ++t) {
    Vec v(z[0].size());
    for (const auto& b : z) {
      const int c = coef(rng);
      if (c == 0) continue;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += Rational(c) * b[i];
    }
    if (tops_invertible(x, y, h.unflatten(0, v))) return true;
  }
  return false;
}

FDAlgebra endo_algebra(const std::vector<ProjComplex>& input, const std::vector<std::string>& labels) {
  const int m = static_cast<int>(input.size());
  std::vector<ProjComplex> xs;
  for (const auto& x : input) {
    xs.push_back(minimize(x));
    if (xs.back().is_zero()) throw PreconditionError("endo_algebra: zero complex");
  }
  std::vector<std::string> names = labels;
  if (names.empty())
    for (int i = 0; i < m; ++i) names.push_back(std::to_string(i));
  const FDAlgebra& a = *xs[0].alg;

  struct Block {
    std::vector<Vec> basis;  // representatives in Hom^0
    SpanBasis solver;
    std::size_t nb = 0;  // coboundary rank inside solver
  };
  std::vector<Block> blocks(static_cast<std::size_t>(m) * m);
  std::vector<std::vector<int>> dims(m, std::vector<int>(m));
  std::vector<std::unique_ptr<HomComplex>> homs;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      homs.push_back(std::make_unique<HomComplex>(xs[i], xs[j]));
      const HomComplex& h = *homs.back();
      Block& b = blocks[i * m + j];
      b.solver = SpanBasis(h.dim(0));
      for (const auto& v : h.coboundaries(0)) b.solver.insert(v);
      b.nb = b.solver.size();
      auto z = h.cocycles(0);
      if (i == j) {
        const Vec id = h.identity_vector();
        if (!b.solver.insert(id)) throw PreconditionError("endo_algebra: identity is null-homotopic");
        b.basis.push_back(id);
        // trace of the top block in the first degree
        const ProjComplex& x = xs[i];
        const int o = x.term(x.lo)[0];
        std::vector<Vec> lam(1, Vec(z.size()));
        for (std::size_t c = 0; c < z.size(); ++c) {
          const ChainMap f = h.unflatten(0, z[c]);
          const ElemMatrix& top = f.comp[x.lo - f.lo];
          for (std::size_t r = 0; r < top.rows.size(); ++r)
            if (top.rows[r] == o) lam[0][c] += top.at(r, r)[0];
        }
        const Matrix kz = kernel(Matrix::from_rows(lam, z.size()));
        std::vector<Vec> rad;
        for (std::size_t c = 0; c < kz.cols(); ++c) {
          Vec v(h.dim(0));
          for (std::size_t t = 0; t < z.size(); ++t)
            if (!kz(t, c).is_zero())
              for (std::size_t q = 0; q < v.size(); ++q) v[q] += kz(t, c) * z[t][q];
          rad.push_back(std::move(v));
        }
        z = std::move(rad);
      }
      for (const auto& v : z)
        if (b.solver.insert(v)) b.basis.push_back(v);
      dims[i][j] = static_cast<int>(b.basis.size());
    }
  FDAlgebra out(names, dims);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int x = 0; x < dims[i][j]; ++x)
        out.set_basis_info(i, j, x, 0, x == 0 && i == j ? "e" + names[i] : names[i] + ">" + names[j] + ":" + std::to_string(x));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        if (dims[i][j] == 0 || dims[j][k] == 0) continue;
        const HomComplex& hij = *homs[i * m + j];
        const HomComplex& hjk = *homs[j * m + k];
        const HomComplex& hik = *homs[i * m + k];
        const Block& target = blocks[i * m + k];
        for (int x = 0; x < dims[i][j]; ++x) {
          const ChainMap f = hij.unflatten(0, blocks[i * m + j].basis[x]);
          for (int y = 0; y < dims[j][k]; ++y) {
            const ChainMap g = hjk.unflatten(0, blocks[j * m + k].basis[y]);
            Vec v(dims[i][k]);
            if (hik.dim(0) > 0) {
              const auto coords = target.solver.coordinates(hik.flatten(compose(a, g, f)));
              if (!coords) throw SearchFailure("composite is not a cocycle");
              for (int t = 0; t < dims[i][k]; ++t) v[t] = (*coords)[target.nb + t];
            }
            out.set_product(i, j, k, x, y, std::move(v));
          }
        }
      }
  out.finalize();
  return out;
}

}  // namespace hatilt

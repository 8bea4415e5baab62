#include "hatilt/pathcomb.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hatilt/errors.hpp"

namespace hatilt {

OrderedSeq::OrderedSeq(int n, int d, std::vector<int> entries)
    : n_(n), d_(d), entries_(std::move(entries)) {
  if (n < 1 || d < 0) throw PreconditionError("os parameters must satisfy n >= 1, d >= 0");
  if (static_cast<int>(entries_.size()) != d) throw PreconditionError("os entry count differs from d");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 1 || entries_[i] > n + d - 1) throw PreconditionError("os entry out of range");
    if (i > 0 && entries_[i] <= entries_[i - 1]) throw PreconditionError("os entries not increasing");
  }
}

std::string OrderedSeq::label() const {
  bool small = std::all_of(entries_.begin(), entries_.end(), [](int e) { return e <= 9; });
  std::string s;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!small && i > 0) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s;
}

LatticePath::LatticePath(int d, int n, std::string steps) : d_(d), n_(n), steps_(std::move(steps)) {
  if (d < 0 || n < 0) throw PreconditionError("negative grid size");
  if (static_cast<int>(steps_.size()) != d + n) throw PreconditionError("path length differs from d+n");
  int h = 0;
  for (char c : steps_) {
    if (c == 'H') {
      ++h;
    } else if (c != 'V') {
      throw PreconditionError("path steps must be H or V");
    }
  }
  if (h != d) throw PreconditionError("path has wrong number of horizontal steps");
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int gcd_int(int a, int b) { return std::gcd(a, b); }

std::vector<OrderedSeq> enumerate_os(int n, int d) {
  if (n < 1 || d < 1) throw PreconditionError("enumerate_os needs n >= 1 and d >= 1");
  std::vector<OrderedSeq> out;
  const int top = n + d - 1;
  std::vector<int> cur(d);
  for (int i = 0; i < d; ++i) cur[i] = i + 1;
  while (true) {
    out.emplace_back(n, d, cur);
    int i = d - 1;
    while (i >= 0 && cur[i] == top - (d - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < d; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

bool preceq(const OrderedSeq& x, const OrderedSeq& y) {
  if (x.n() != y.n() || x.d() != y.d()) throw PreconditionError("preceq: mismatched parameters");
  const std::size_t d = x.size();
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i] > y[i]) return false;
    if (i + 1 < d && y[i] >= x[i + 1]) return false;
  }
  return true;
}

OrderedSeq coords(const LatticePath& p) {
  std::vector<int> c;
  for (std::size_t i = 0; i < p.steps().size(); ++i) {
    if (p.steps()[i] == 'H') c.push_back(static_cast<int>(i) + 1);
  }
  return OrderedSeq(p.n() + 1, p.d(), std::move(c));
}

LatticePath path_from_coords(int d, int n, const std::vector<int>& c) {
  if (static_cast<int>(c.size()) != d) throw PreconditionError("coordinate count differs from d");
  std::string s(static_cast<std::size_t>(d + n), 'V');
  int prev = 0;
  for (int v : c) {
    if (v <= prev || v > d + n) throw PreconditionError("invalid path coordinates");
    s[static_cast<std::size_t>(v - 1)] = 'H';
    prev = v;
  }
  return LatticePath(d, n, std::move(s));
}

LatticePath from_coords(const OrderedSeq& x) { return path_from_coords(x.d(), x.n() - 1, x.entries()); }

std::vector<LatticePath> enumerate_paths(int d, int n) {
  std::vector<LatticePath> out;
  if (d == 0) {
    out.emplace_back(0, n, std::string(static_cast<std::size_t>(n), 'V'));
    return out;
  }
  for (const auto& x : enumerate_os(n + 1, d)) out.push_back(from_coords(x));
  return out;
}

namespace {

// Height of each horizontal step.
std::vector<int> step_heights(const LatticePath& p) {
  std::vector<int> h;
  int y = 0;
  for (char c : p.steps()) {
    if (c == 'H') {
      h.push_back(y);
    } else {
      ++y;
    }
  }
  return h;
}

}  // namespace

bool relation_R(const LatticePath& p1, const LatticePath& p2) {
  if (p1.d() != p2.d() || p1.n() != p2.n()) throw PreconditionError("relation_R: mismatched grids");
  const auto h1 = step_heights(p1);
  const auto h2 = step_heights(p2);
  const int d = p1.d(), n = p1.n();
  // cells (column j, row r) of the skew shape between the two paths
  std::vector<std::vector<bool>> cell(static_cast<std::size_t>(d), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int j = 0; j < d; ++j) {
    if (h1[j] > h2[j]) return false;
    for (int r = h1[j]; r < h2[j]; ++r) cell[j][r] = true;
  }
  for (int j = 0; j + 1 < d; ++j)
    for (int r = 0; r < n; ++r)
      if (cell[j][r] && cell[j + 1][r]) return false;
  return true;
}

LatticePath rotate(const LatticePath& p) { return rotate_pow(p, 1); }

LatticePath rotate_pow(const LatticePath& p, long long k) {
  const long long len = static_cast<long long>(p.steps().size());
  if (len == 0) return p;
  const auto m = static_cast<std::size_t>(((k % len) + len) % len);
  const std::string& s = p.steps();
  return LatticePath(p.d(), p.n(), s.substr(m) + s.substr(0, m));
}

bool is_dyck(const LatticePath& p) {
  long long x = 0, y = 0;
  for (char c : p.steps()) {
    if (c == 'H') {
      ++x;
    } else {
      ++y;
    }
    if (static_cast<long long>(p.d()) * y > static_cast<long long>(p.n()) * x) return false;
  }
  return true;
}

std::vector<LatticePath> enumerate_dyck(int d, int n) {
  if (d < 1 || n < 1 || std::gcd(d, n) != 1) throw PreconditionError("enumerate_dyck needs gcd(d, n) = 1");
  std::vector<LatticePath> out;
  for (auto& p : enumerate_paths(d, n)) {
    if (is_dyck(p)) out.push_back(std::move(p));
  }
  return out;
}

std::pair<LatticePath, int> dyck_orbit_representative(const LatticePath& p) {
  if (std::gcd(p.d(), p.n()) != 1) throw PreconditionError("orbit representative needs gcd(d, n) = 1");
  const int len = p.d() + p.n();
  for (int k = 0; k < len; ++k) {
    LatticePath c = rotate_pow(p, -k);
    if (is_dyck(c)) return {c, k};
  }
  throw SearchFailure("no Dyck path in rotation orbit");
}

LatticePath bar(const LatticePath& p) { return LatticePath(p.d() + 1, p.n(), "H" + p.steps()); }
LatticePath tilde(const LatticePath& p) { return LatticePath(p.d() + 1, p.n(), p.steps() + "H"); }

std::vector<GridPoint> path_points(const LatticePath& p) {
  std::vector<GridPoint> pts{{0, 0}};
  GridPoint cur;
  for (char c : p.steps()) {
    if (c == 'H') {
      ++cur.x;
    } else {
      ++cur.y;
    }
    pts.push_back(cur);
  }
  return pts;
}

Rational x_intercept(int d, int n, GridPoint pt) { return Rational(pt.x) - Rational(d, n) * pt.y; }

AnchorData anchor_data(const LatticePath& p) {
  const int d = p.d() - 1, n = p.n();
  if (d < 1 || n < 1 || std::gcd(d, n) != 1) throw PreconditionError("anchor_data needs a path in L_{d+1,n} with gcd(d,n)=1");
  const auto pts = path_points(p);
  std::size_t best = 0;
  Rational best_val = x_intercept(d, n, pts[0]);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Rational v = x_intercept(d, n, pts[i]);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  // tie between (0,0) and (d,n) resolves to (d,n)
  if (best == 0) {
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (pts[i] == GridPoint{d, n}) best = i;
    }
  }
  AnchorData a;
  a.anchor = pts[best];
  a.h = a.anchor.y;
  const Rational slope(n, d);
  for (std::size_t i = best + 1; i + 1 < pts.size(); ++i) {
    // V step into pts[i], H step out of it
    if (p.steps()[i - 1] != 'V' || p.steps()[i] != 'H') continue;
    Rational gap = x_intercept(d, n, pts[i]) - best_val;
    if (gap > 0 && gap < 1) {
      Rational w = slope * (Rational(1) - gap);
      a.mu += w * w;
      a.corners.emplace_back(pts[i], w);
    }
  }
  return a;
}

LatticePath region_base_path(int d, int n, GridPoint D) {
  if (D.x < 0 || D.x > d || D.y < 0 || D.y > n) throw PreconditionError("region point outside the rectangle");
  std::string s(static_cast<std::size_t>(D.x), 'H');
  s += std::string(static_cast<std::size_t>(D.y), 'V');
  s += std::string(static_cast<std::size_t>(d + 1 - D.x), 'H');
  s += std::string(static_cast<std::size_t>(n - D.y), 'V');
  return LatticePath(d + 1, n, s);
}

bool region_contains(GridPoint D, const LatticePath& p) {
  const int d = p.d() - 1, n = p.n();
  if (d < 1 || n < 1) throw PreconditionError("region_contains needs a path in L_{d+1,n}");
  if (D.x < 0 || D.x > d || D.y < 0 || D.y > n) throw PreconditionError("region point outside the rectangle");
  const auto h = step_heights(p);
  for (int j = D.x; j <= d; ++j) {
    if (h[j] < D.y) return false;
  }
  const Rational base = x_intercept(d, n, D);
  for (const auto& pt : path_points(p)) {
    if (pt.x <= D.x && x_intercept(d, n, pt) < base) return false;
    if (pt.x >= D.x && pt.x <= D.x + 1 && pt.y > D.y) return false;
    if (pt.x >= D.x + 1 && x_intercept(d, n, pt) < base + 1) return false;
  }
  return true;
}

std::vector<LatticePath> region_members(int d, int n, GridPoint D) {
  std::vector<LatticePath> out;
  for (auto& p : enumerate_paths(d + 1, n)) {
    if (region_contains(D, p)) out.push_back(std::move(p));
  }
  return out;
}

namespace {

void check_delta_args(int d, int n, int i) {
  if (d < 1 || n < 1 || std::gcd(d, n) != 1) throw PreconditionError("delta sets need gcd(d, n) = 1");
  if (i < 0 || i > n + d) throw PreconditionError("delta index out of range");
}

bool below_delta00(int d, int n, GridPoint p) {
  if (p.x <= 1 && p.y > 0) return false;
  if (p.x >= 1 && x_intercept(d, n, p) < 1) return false;
  return true;
}

bool above_delta_dn(int d, int n, GridPoint p) {
  if (p.x <= d && x_intercept(d, n, p) > 0) return false;
  if (p.x >= d && p.y < n) return false;
  return true;
}

}  // namespace

std::vector<GridPoint> delta_set(int d, int n, int i) {
  check_delta_args(d, n, i);
  std::vector<GridPoint> out;
  for (int x = 0; x <= d + 1; ++x) {
    int y = i - x;
    if (y < 0 || y > n) continue;
    GridPoint p{x, y};
    if (p == GridPoint{d + 1, n}) continue;
    if (below_delta00(d, n, p)) out.push_back(p);
  }
  return out;
}

std::vector<GridPoint> delta_prime_set(int d, int n, int i) {
  check_delta_args(d, n, i);
  std::vector<GridPoint> out;
  for (int x = 0; x <= d + 1; ++x) {
    int y = n + d + 1 - x - i;
    if (y < 0 || y > n) continue;
    GridPoint p{x, y};
    if (p == GridPoint{0, 0}) continue;
    if (above_delta_dn(d, n, p)) out.push_back(p);
  }
  return out;
}

GridPoint delta_partner(int d, int n, GridPoint D) { return GridPoint{d + 1 - D.x, n - D.y}; }

std::vector<LatticePath> s_region(int d, int n, GridPoint D) {
  std::vector<LatticePath> out;
  for (const auto& l : enumerate_dyck(d, n)) {
    LatticePath b = bar(l);
    const auto pts = path_points(b);
    if (std::find(pts.begin(), pts.end(), D) != pts.end()) out.push_back(b);
  }
  return out;
}

std::vector<LatticePath> strip_sequence(int d, int n, const std::vector<int>& window) {
  if (static_cast<int>(window.size()) != d + 2) throw PreconditionError("strip window must have d+2 entries");
  for (std::size_t i = 0; i < window.size(); ++i) {
    if (window[i] < 1 || window[i] > n + d + 1) throw PreconditionError("strip window entry out of range");
    if (i > 0 && window[i] <= window[i - 1]) throw PreconditionError("strip window not increasing");
  }
  std::vector<LatticePath> out;
  for (int k = 0; k <= d + 1; ++k) {
    std::vector<int> c = window;
    c.erase(c.begin() + (d + 1 - k));
    out.push_back(path_from_coords(d + 1, n, c));
  }
  return out;
}

namespace {

bool key_smaller(const AnchorData& a, const AnchorData& ref) {
  return a.h > ref.h || (a.h == ref.h && a.mu < ref.mu);
}

}  // namespace

bool window_resolves(int d, int n, const std::vector<int>& window, std::size_t position) {
  std::vector<int> c = window;
  c.erase(c.begin() + static_cast<std::ptrdiff_t>(position));
  const AnchorData ref = anchor_data(path_from_coords(d + 1, n, c));
  for (std::size_t k = 0; k < window.size(); ++k) {
    if (k == position) continue;
    std::vector<int> o = window;
    o.erase(o.begin() + static_cast<std::ptrdiff_t>(k));
    if (!key_smaller(anchor_data(path_from_coords(d + 1, n, o)), ref)) return false;
  }
  return true;
}

ResolvingWindow resolving_sequence(const LatticePath& p) {
  const int d = p.d() - 1, n = p.n();
  const AnchorData a = anchor_data(p);
  if (a.h == 0 || a.mu.is_zero()) throw PreconditionError("resolving_sequence needs h >= 1 and mu > 0");
  const auto c = coords(p).entries();
  for (int v = 1; v <= n + d + 1; ++v) {
    if (std::find(c.begin(), c.end(), v) != c.end()) continue;
    std::vector<int> w = c;
    auto it = std::lower_bound(w.begin(), w.end(), v);
    const auto pos = static_cast<std::size_t>(it - w.begin());
    w.insert(it, v);
    if (window_resolves(d, n, w, pos)) return ResolvingWindow{w, pos};
  }
  throw SearchFailure("no resolving insertion found");
}

std::string to_string(const GridPoint& p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

}  // namespace hatilt

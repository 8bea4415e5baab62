#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "hatilt/errors.hpp"
#include "hatilt/pathcomb.hpp"

using namespace hatilt;

namespace {

// Oracles written independently of the library routines.

std::vector<std::vector<int>> oracle_subsets(int top, int k) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << top); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> s;
    for (int b = 0; b < top; ++b)
      if (mask & (1u << b)) s.push_back(b + 1);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool oracle_below_diagonal(const std::string& steps, int d, int n) {
  // every vertical step ends weakly right of the diagonal
  int x = 0, y = 0;
  for (char c : steps) {
    if (c == 'H') {
      ++x;
      continue;
    }
    ++y;
    if (y * d > x * n) return false;
  }
  return true;
}

LatticePath P(int d, int n, std::vector<int> c) { return path_from_coords(d, n, c); }

std::vector<int> C(const LatticePath& p) { return coords(p).entries(); }

}  // namespace

TEST_CASE("enumerate_os matches subset oracle") {
  CHECK(enumerate_os(2, 1).size() == 2);
  CHECK(enumerate_os(5, 3).size() == 35);
  std::vector<std::vector<int>> got;
  for (const auto& x : enumerate_os(3, 2)) got.push_back(x.entries());
  CHECK(got == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  for (int n = 1; n <= 5; ++n) {
    for (int d = 1; d <= 5; ++d) {
      std::vector<std::vector<int>> e;
      for (const auto& x : enumerate_os(n, d)) e.push_back(x.entries());
      CHECK(e == oracle_subsets(n + d - 1, d));
    }
  }
  CHECK_THROWS_AS(enumerate_os(0, 2), PreconditionError);
}

TEST_CASE("preceq examples") {
  OrderedSeq a(5, 3, {1, 2, 5}), b(5, 3, {1, 4, 6}), c(5, 3, {3, 5, 7});
  CHECK(preceq(a, a));
  CHECK(preceq(a, b));
  CHECK(preceq(b, c));
  CHECK_FALSE(preceq(a, c));
  CHECK(preceq(OrderedSeq(4, 3, {1, 2, 4}), OrderedSeq(4, 3, {1, 3, 5})));
  CHECK_THROWS_AS(preceq(a, OrderedSeq(4, 3, {1, 2, 4})), PreconditionError);
}

TEST_CASE("coords and from_coords") {
  CHECK(C(LatticePath(3, 4, "HVVHVHV")) == std::vector<int>{1, 4, 6});
  CHECK(C(LatticePath(4, 4, "HHVHVHVV")) == std::vector<int>{1, 2, 4, 6});
  for (int d = 0; d <= 6; ++d) {
    for (int n = 0; n <= 6; ++n) {
      if (d == 0) continue;
      for (const auto& p : enumerate_paths(d, n)) CHECK(from_coords(coords(p)) == p);
      for (const auto& x : enumerate_os(n + 1, d)) CHECK(coords(from_coords(x)) == x);
    }
  }
}

TEST_CASE("relation_R agrees with preceq") {
  CHECK(relation_R(P(3, 4, {1, 2, 5}), P(3, 4, {1, 4, 6})));
  CHECK_FALSE(relation_R(P(3, 4, {1, 2, 5}), P(3, 4, {3, 5, 7})));
  for (int d = 1; d <= 4; ++d) {
    for (int n = 1; n <= 4; ++n) {
      const auto paths = enumerate_paths(d, n);
      for (const auto& a : paths)
        for (const auto& b : paths) CHECK(relation_R(a, b) == preceq(coords(a), coords(b)));
    }
  }
}

TEST_CASE("rotation") {
  const auto l = P(3, 4, {1, 3, 5});
  CHECK(C(rotate(l)) == std::vector<int>{2, 4, 7});
  CHECK(rotate_pow(l, 0) == l);
  CHECK(rotate_pow(l, 7) == l);
  CHECK(rotate_pow(rotate_pow(l, 3), -3) == l);
  // free action for coprime grids
  for (auto [d, n] : std::vector<std::pair<int, int>>{{3, 4}, {2, 5}, {4, 3}, {1, 6}}) {
    for (const auto& p : enumerate_paths(d, n))
      for (int k = 1; k < d + n; ++k) CHECK(rotate_pow(p, k) != p);
  }
}

TEST_CASE("Dyck paths") {
  std::vector<std::vector<int>> got;
  for (const auto& p : enumerate_dyck(3, 4)) got.push_back(C(p));
  CHECK(got == std::vector<std::vector<int>>{{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}});
  got.clear();
  for (const auto& p : enumerate_dyck(3, 2)) got.push_back(C(p));
  CHECK(got == std::vector<std::vector<int>>{{1, 2, 3}, {1, 2, 4}});
  for (int n = 1; n <= 6; ++n) CHECK(enumerate_dyck(1, n).size() == 1);
  CHECK_THROWS_AS(enumerate_dyck(2, 4), PreconditionError);
  for (int d = 1; d <= 7; ++d) {
    for (int n = 1; n <= 7; ++n) {
      for (const auto& p : enumerate_paths(d, n)) CHECK(is_dyck(p) == oracle_below_diagonal(p.steps(), d, n));
    }
  }
}

TEST_CASE("Dyck orbit representative") {
  const auto l = P(3, 4, {2, 4, 7});
  auto [rep, k] = dyck_orbit_representative(l);
  CHECK(C(rep) == std::vector<int>{1, 3, 5});
  CHECK(k == 1);
  const auto dy = P(3, 4, {1, 2, 4});
  CHECK(dyck_orbit_representative(dy) == std::make_pair(dy, 0));
  std::set<LatticePath> reps;
  for (const auto& p : enumerate_paths(3, 4)) {
    auto [r, kk] = dyck_orbit_representative(p);
    CHECK(rotate_pow(r, kk) == p);
    reps.insert(r);
  }
  CHECK(reps.size() == 5);
}

TEST_CASE("bar and tilde") {
  const auto l = P(3, 4, {1, 3, 5});
  CHECK(C(bar(l)) == std::vector<int>{1, 2, 4, 6});
  CHECK(C(tilde(l)) == std::vector<int>{1, 3, 5, 8});
  CHECK(LatticePath(3, 4, bar(l).steps().substr(1)) == l);
}

TEST_CASE("anchor data") {
  const auto a = anchor_data(P(4, 4, {2, 4, 5, 7}));
  CHECK(a.anchor == GridPoint{0, 1});
  CHECK(a.h == 1);
  CHECK(a.mu == Rational(1));
  REQUIRE(a.corners.size() == 1);
  CHECK(a.corners[0].first == GridPoint{1, 2});
  CHECK(a.corners[0].second == Rational(1));
  for (const auto& l : enumerate_dyck(3, 4)) {
    const auto b = anchor_data(bar(l));
    CHECK(b.anchor == GridPoint{0, 0});
    CHECK(b.mu.is_zero());
    const auto t = anchor_data(tilde(l));
    CHECK(t.anchor == GridPoint{3, 4});
    CHECK(t.h == 4);
    CHECK(t.mu.is_zero());
  }
}

TEST_CASE("anchor weights lie in the open band") {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{3, 4}, {4, 3}, {2, 5}, {5, 2}, {3, 2}}) {
    for (const auto& p : enumerate_paths(d + 1, n)) {
      const auto a = anchor_data(p);
      Rational sum;
      for (const auto& [pt, w] : a.corners) {
        CHECK(w > 0);
        CHECK(w < Rational(n, d));
        sum += w * w;
      }
      CHECK(sum == a.mu);
      // anchor consistency with regions
      const bool in_region = region_contains(a.anchor, p);
      CHECK(in_region == a.mu.is_zero());
    }
  }
}

TEST_CASE("regions") {
  const int d = 3, n = 4;
  std::set<LatticePath> bars, tildes;
  for (const auto& l : enumerate_dyck(d, n)) {
    bars.insert(bar(l));
    tildes.insert(tilde(l));
  }
  auto r00 = region_members(d, n, {0, 0});
  CHECK(std::set<LatticePath>(r00.begin(), r00.end()) == bars);
  auto r34 = region_members(d, n, {3, 4});
  CHECK(std::set<LatticePath>(r34.begin(), r34.end()) == tildes);
  for (int x = 0; x <= d; ++x)
    for (int y = 0; y <= n; ++y) {
      const auto base = region_base_path(d, n, {x, y});
      const auto c = C(base);
      // H^x V^y H^{d+1-x} V^{n-y}
      for (int j = 0; j < x; ++j) CHECK(c[j] == j + 1);
      for (int j = x; j <= d; ++j) CHECK(c[j] == j + y + 1);
      // the base path sits under the curve exactly for points left of the diagonal
      CHECK(region_contains({x, y}, base) == (x_intercept(d, n, {x, y}) <= 0));
    }
}

TEST_CASE("delta sets and S_D") {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{3, 4}, {4, 3}, {2, 3}, {3, 2}, {5, 2}, {1, 4}}) {
    CHECK(delta_set(d, n, 1) == std::vector<GridPoint>{{1, 0}});
    CHECK(delta_prime_set(d, n, 1) == std::vector<GridPoint>{{d, n}});
    const auto dyck = enumerate_dyck(d, n);
    for (int i = 1; i <= n + d; ++i) {
      const auto D = delta_set(d, n, i);
      const auto Dp = delta_prime_set(d, n, i);
      std::vector<GridPoint> images;
      for (const auto& p : D) images.push_back(delta_partner(d, n, p));
      std::sort(images.begin(), images.end());
      auto sorted_p = Dp;
      std::sort(sorted_p.begin(), sorted_p.end());
      CHECK(images == sorted_p);
      std::size_t total = 0;
      std::set<LatticePath> seen;
      for (const auto& p : D) {
        const auto s = s_region(d, n, p);
        total += s.size();
        seen.insert(s.begin(), s.end());
        std::set<LatticePath> rotated;
        for (const auto& l : s) rotated.insert(rotate_pow(l, i));
        const auto r = region_members(d, n, delta_partner(d, n, p));
        CHECK(rotated == std::set<LatticePath>(r.begin(), r.end()));
      }
      CHECK(total == dyck.size());
      CHECK(seen.size() == dyck.size());
    }
  }
}

TEST_CASE("strip sequence") {
  const auto s = strip_sequence(3, 4, {1, 2, 4, 6, 8});
  REQUIRE(s.size() == 5);
  CHECK(C(s[0]) == std::vector<int>{1, 2, 4, 6});
  CHECK(C(s[1]) == std::vector<int>{1, 2, 4, 8});
  CHECK(C(s[2]) == std::vector<int>{1, 2, 6, 8});
  CHECK(C(s[3]) == std::vector<int>{1, 4, 6, 8});
  CHECK(C(s[4]) == std::vector<int>{2, 4, 6, 8});
  CHECK(s[0].first_step() == 'H');
  CHECK_THROWS_AS(strip_sequence(3, 4, {1, 2, 4, 6, 9}), PreconditionError);
}

TEST_CASE("resolving sequence") {
  const auto l = P(4, 4, {2, 4, 5, 7});
  const auto w = resolving_sequence(l);
  CHECK(window_resolves(3, 4, w.window, w.position));
  std::vector<int> c = w.window;
  c.erase(c.begin() + static_cast<long>(w.position));
  CHECK(c == std::vector<int>{2, 4, 5, 7});
  CHECK_THROWS_AS(resolving_sequence(bar(P(3, 4, {1, 2, 3}))), PreconditionError);
  for (int d = 1; d <= 7; ++d) {
    for (int n = 1; n <= 7; ++n) {
      if (std::gcd(d, n) != 1 || binomial(d + n + 1, d + 1) > 1000) continue;
      for (const auto& p : enumerate_paths(d + 1, n)) {
        const auto a = anchor_data(p);
        if (a.h < 1 || a.mu.is_zero()) continue;
        const auto r = resolving_sequence(p);
        CHECK(window_resolves(d, n, r.window, r.position));
      }
    }
  }
}

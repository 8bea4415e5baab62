#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "hatilt/rational.hpp"

namespace hatilt {

/// Strictly increasing d-tuple with entries in [1, n+d-1] (an element of os_n^d).
class OrderedSeq {
 public:
  OrderedSeq() = default;
  /// Throws PreconditionError if the entries are not a valid element of os_n^d.
  OrderedSeq(int n, int d, std::vector<int> entries);

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<int>& entries() const { return entries_; }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::size_t size() const { return entries_.size(); }

  /// Entries concatenated, e.g. "1247", or comma separated once any entry exceeds 9.
  std::string label() const;

  friend bool operator==(const OrderedSeq&, const OrderedSeq&) = default;
  friend auto operator<=>(const OrderedSeq& a, const OrderedSeq& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  int n_ = 1;
  int d_ = 0;
  std::vector<int> entries_;
};

/// Monotone lattice path with d horizontal and n vertical steps.
class LatticePath {
 public:
  LatticePath() = default;
  /// steps is a word over {H, V}; throws PreconditionError if the counts do not match.
  LatticePath(int d, int n, std::string steps);

  int d() const { return d_; }
  int n() const { return n_; }
  const std::string& steps() const { return steps_; }
  char first_step() const { return steps_.front(); }
  char last_step() const { return steps_.back(); }

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  friend auto operator<=>(const LatticePath& a, const LatticePath& b) {
    if (auto c = a.d_ <=> b.d_; c != 0) return c;
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.steps_ <=> b.steps_;
  }

 private:
  int d_ = 0;
  int n_ = 0;
  std::string steps_;
};

struct GridPoint {
  int x = 0;
  int y = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

struct AnchorData {
  GridPoint anchor;
  int h = 0;
  Rational mu;
  // (corner, w_F) for each contributing corner
  std::vector<std::pair<GridPoint, Rational>> corners;
};

std::vector<OrderedSeq> enumerate_os(int n, int d);
bool preceq(const OrderedSeq& x, const OrderedSeq& y);

/// Positions (1-indexed) of the horizontal steps, as an element of os_{n+1}^d.
OrderedSeq coords(const LatticePath& p);
/// Inverse of coords; x must lie in os_{m}^d and the path has m-1 vertical steps.
LatticePath from_coords(const OrderedSeq& x);
LatticePath path_from_coords(int d, int n, const std::vector<int>& c);

std::vector<LatticePath> enumerate_paths(int d, int n);

/// Geometric relation: p1 weakly below p2 and no 2x1 rectangle in the skew shape.
bool relation_R(const LatticePath& p1, const LatticePath& p2);

LatticePath rotate(const LatticePath& p);
LatticePath rotate_pow(const LatticePath& p, long long k);

bool is_dyck(const LatticePath& p);
/// Throws PreconditionError unless gcd(d, n) = 1.
std::vector<LatticePath> enumerate_dyck(int d, int n);
/// The Dyck path in the orbit of p and the k with rotate_pow(dyck, k) = p.
std::pair<LatticePath, int> dyck_orbit_representative(const LatticePath& p);

LatticePath bar(const LatticePath& p);
LatticePath tilde(const LatticePath& p);

/// Lattice points visited by p, starting at (0,0).
std::vector<GridPoint> path_points(const LatticePath& p);

/// x - (d/n) y for the model parameters (d, n).
Rational x_intercept(int d, int n, GridPoint pt);

/// Anchor, height and mu of a path in L_{d+1,n}; the model is d = p.d()-1, n = p.n().
AnchorData anchor_data(const LatticePath& p);

/// The minimal path of R_D in L_{d+1,n}: H^x V^y H^{d+1-x} V^{n-y}.
LatticePath region_base_path(int d, int n, GridPoint D);
/// Membership of p (in L_{d+1,n}) in R_D. Points on the curve count as below it.
bool region_contains(GridPoint D, const LatticePath& p);
std::vector<LatticePath> region_members(int d, int n, GridPoint D);

std::vector<GridPoint> delta_set(int d, int n, int i);
std::vector<GridPoint> delta_prime_set(int d, int n, int i);
GridPoint delta_partner(int d, int n, GridPoint D);
/// Bar-Dyck paths through D.
std::vector<LatticePath> s_region(int d, int n, GridPoint D);

/// Exact-sequence terms [p, l_d, ..., l_1, q] of a window of d+2 entries in [1, n+d+1].
std::vector<LatticePath> strip_sequence(int d, int n, const std::vector<int>& window);

struct ResolvingWindow {
  std::vector<int> window;
  std::size_t position = 0;  // index in window whose deletion gives the input path
};

/// Smallest insertion v whose strip has every other term with larger h or equal h and smaller mu.
ResolvingWindow resolving_sequence(const LatticePath& p);

/// True when every term of the strip of window other than index position has a smaller key than key_of(p).
bool window_resolves(int d, int n, const std::vector<int>& window, std::size_t position);

long long binomial(int n, int k);
int gcd_int(int a, int b);

std::string to_string(const GridPoint& p);

}  // namespace hatilt

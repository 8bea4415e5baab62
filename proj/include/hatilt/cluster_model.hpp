#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hatilt/pathcomb.hpp"

namespace hatilt {

/// The object M_path[d * shift] of the dZ-cluster tilting subcategory; path lies in L_{d+1,n}.
struct UObject {
  LatticePath path;
  int shift = 0;

  int model_d() const { return path.d() - 1; }
  int model_n() const { return path.n(); }
  std::string to_string() const;

  friend bool operator==(const UObject&, const UObject&) = default;
  friend auto operator<=>(const UObject& a, const UObject& b) {
    if (auto c = a.shift <=> b.shift; c != 0) return c;
    return a.path <=> b.path;
  }
};

using UCollection = std::vector<UObject>;

/// Componentwise decrement; empty for projective labels (x_1 = 1).
std::optional<OrderedSeq> tau_d(const OrderedSeq& x);

/// dim Hom(src, dst) in the derived category, which is 0 or 1.
int hom_dim(const UObject& src, const UObject& dst);
/// Whether g o f is nonzero for nonzero f: u1 -> u2 and g: u2 -> u3 of degree 0.
bool compose_nonzero(const UObject& u1, const UObject& u2, const UObject& u3);

UObject nakayama(const UObject& u);
UObject nakayama_pow(const UObject& u, long long k);

bool is_projective_module(const UObject& u);
bool is_injective_module(const UObject& u);

UCollection build_P(int d, int n);
/// The multiset union of nu^i P for i = 1..n+d, sorted.
UCollection build_T(int d, int n);

/// Blocks of nu^i P indexed by D in Delta_i: all (l, D.y) with l in R_{D'}.
std::map<GridPoint, UCollection> nu_orbit_decomposition(int d, int n, int i);

struct RigidityReport {
  bool passed = true;
  long long end_dim = 0;     // dim End(T)
  long long pairs_checked = 0;
  std::string violation;     // first violating pair, if any
};

RigidityReport rigidity_check_T(int d, int n);

struct CertificateEntry {
  LatticePath path;
  int h = 0;
  Rational mu;
  bool in_T = false;
  std::vector<int> window;
  std::size_t position = 0;
  std::vector<LatticePath> dependencies;
};

struct GenerationCertificate {
  int d = 0;
  int n = 0;
  std::vector<CertificateEntry> entries;
  std::size_t injective_labels = 0;  // paths with last step H, all checked to have h >= 1
};

/// Throws SearchFailure when a step of the induction cannot be certified.
GenerationCertificate generation_certificate(int d, int n);

/// Independent re-check of a certificate: coverage, key monotonicity and acyclicity.
bool verify_certificate(const GenerationCertificate& cert, std::string* why = nullptr);

}  // namespace hatilt

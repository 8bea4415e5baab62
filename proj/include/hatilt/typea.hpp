#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "hatilt/cluster_model.hpp"
#include "hatilt/complex.hpp"
#include "hatilt/module.hpp"
#include "hatilt/quiver.hpp"

namespace hatilt {

/// The higher Auslander algebra A = A_{n+1}^d together with the realization of
/// cluster-model objects as minimal complexes of projectives over it.
class TypeAModel {
 public:
  /// Throws PreconditionError unless d, n >= 1.
  TypeAModel(int d, int n);

  int d() const { return d_; }
  int n() const { return n_; }
  const BoundQuiverAlgebra& auslander() const { return bqa_; }
  const AlgebraPtr& algebra() const { return bqa_.algebra(); }
  /// Default bound on resolution lengths, nd + 2.
  int max_len() const { return n_ * d_ + 2; }

  Module module_of(const LatticePath& p) const;
  /// Minimal projective resolution of M_path shifted by d * shift; cached per path.
  ProjComplex complex_of(const UObject& u) const;

  /// End of the summands of P as modules.
  FDAlgebra b0() const;
  /// End of the summands of T computed from their complexes.
  FDAlgebra end_of_T() const;
  std::vector<ProjComplex> complexes(const UCollection& us) const;

 private:
  int d_;
  int n_;
  BoundQuiverAlgebra bqa_;
  mutable std::mutex mu_;
  mutable std::map<LatticePath, ProjComplex> cache_;
};

/// dim Hom(u, v[k]) in the derived category from the combinatorial rules.
int combinatorial_hom(const UObject& u, const UObject& v, int k);

std::string path_label(const LatticePath& p);
std::vector<std::string> path_labels(const UCollection& us);

/// B_0 replicated n+d times.
FDAlgebra build_B(const FDAlgebra& b0, int d, int n);
/// B_0 replicated n+d+1 times.
FDAlgebra build_Lambda(const FDAlgebra& b0, int d, int n);
/// (n+d)-fold trivial extension of B_0 with its grading.
FDAlgebra build_Pi(const FDAlgebra& b0, int d, int n);

struct PreprojectiveReport {
  bool passed = false;
  int hom_p_nu_p = 0;
  int dim_b0 = 0;
  bool self_injective = false;
  bool degree_zero_iso = false;
  bool vanishing = false;
  std::string detail;
};

/// Compares the graded pieces of T_{n+d}(B_0) with Hom spaces in the derived category of A.
PreprojectiveReport preprojective_graded_check(const TypeAModel& model);

}  // namespace hatilt

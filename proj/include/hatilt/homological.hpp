#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hatilt/complex.hpp"
#include "hatilt/module.hpp"

namespace hatilt {

/// Bounded complex of modules; diffs[p - lo] maps degree p to degree p + 1.
struct ModuleComplex {
  AlgebraPtr alg;
  int lo = 0;
  std::vector<Module> terms;
  std::vector<ModuleMap> diffs;

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  Module term(int p) const;
  ModuleMap diff(int p) const;
};

ModuleComplex module_stalk(const Module& m, int degree = 0);
/// Termwise realization of a complex of projectives as modules.
ModuleComplex as_modules(const ProjComplex& x);
/// Module map between sums of indecomposable projectives given by an element matrix.
ModuleMap projective_map(const AlgebraPtr& a, const std::vector<int>& src, const std::vector<int>& tgt,
                         const ElemMatrix& e);

/// Minimal complex of projectives quasi-isomorphic to m. Throws BudgetExceeded
/// when more than max_extra degrees below m are needed.
ProjComplex resolve(const ModuleComplex& m, int max_extra);

struct ResolutionReport {
  std::string label;
  int length = 0;
  /// objects of the term in degree -t, for t = 0..length
  std::vector<std::vector<int>> terms;
};

struct Resolution {
  ResolutionReport report;
  ProjComplex complex;
};

/// Throws BudgetExceeded("exceeds max_len") when the resolution is longer than max_len.
Resolution minimal_proj_resolution(const Module& m, int max_len, const std::string& label = {});
int projective_dimension(const Module& m, int max_len);

int gldim(const AlgebraPtr& a, int max_len);

struct DominantDimension {
  bool infinite = false;
  int value = 0;
  std::string to_string() const;
};
DominantDimension domdim(const AlgebraPtr& a, int max_len);

int ext_dim(const Module& m, const Module& n, int i);

/// For a self-injective algebra, k = perm[j] with P_j isomorphic to I_k; empty otherwise.
std::optional<std::vector<int>> nakayama_permutation(const AlgebraPtr& a);

/// Nu applied termwise, resolved and minimized.
ProjComplex derived_nakayama(const ProjComplex& x, int max_len);
ProjComplex derived_nakayama_inverse(const ProjComplex& x, int max_len);
/// Nu^k for any integer k.
ProjComplex nakayama_power(const ProjComplex& x, int k, int max_len);

/// Summands nu^i X for i = 0..count-1.
std::vector<ProjComplex> nu_orbit(const ProjComplex& x, int count, int max_len);
ProjComplex build_tilting_complex_from_nu_orbit(const ProjComplex& x, int count, int max_len);

/// Hom(X, Y[k]) = 0 for all pairs of summands and all k != 0 with |k| <= window.
bool rigid(const std::vector<ProjComplex>& summands, int window);

struct ThickSearchResult {
  bool success = false;
  /// per target: how it was reached, empty when not reached
  std::vector<std::string> recipes;
  int explored = 0;
};

/// Closes the summands under shifts and cones of basis morphisms for depth rounds.
/// Never claims non-generation: failure only means the budget ran out.
ThickSearchResult thick_generation_search(const std::vector<ProjComplex>& summands,
                                          const std::vector<ProjComplex>& targets, int depth,
                                          int shift_window);

struct TwoSubhomogeneousReport {
  bool passed = false;
  int gldim = 0;
  int injectives_checked = 0;
  std::vector<std::string> failures;
};
TwoSubhomogeneousReport two_subhomogeneous_check(const AlgebraPtr& a, int d, int max_len);

struct FcyReport {
  bool passed = false;
  std::vector<bool> per_projective;
};
/// Object-level check nu^ell(P_i) = P_i[m] for every indecomposable projective.
FcyReport fcy_object_check(const AlgebraPtr& a, int m, int ell, int max_len);

}  // namespace hatilt

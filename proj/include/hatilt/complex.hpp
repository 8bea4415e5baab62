#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hatilt/algebra.hpp"

namespace hatilt {

/// Matrix of morphisms between sums of indecomposable projectives; entry
/// (r, c) lies in Hom(cols[c], rows[r]).
struct ElemMatrix {
  std::vector<int> rows;
  std::vector<int> cols;
  std::vector<Vec> entries;

  ElemMatrix() = default;
  ElemMatrix(const FDAlgebra& a, std::vector<int> row_objs, std::vector<int> col_objs);

  Vec& at(std::size_t r, std::size_t c) { return entries[r * cols.size() + c]; }
  const Vec& at(std::size_t r, std::size_t c) const { return entries[r * cols.size() + c]; }
  bool is_zero() const;
};

/// g after f.
ElemMatrix multiply(const FDAlgebra& a, const ElemMatrix& g, const ElemMatrix& f);
ElemMatrix add(const ElemMatrix& x, const ElemMatrix& y, const Rational& scale = Rational(1));

/// Bounded cohomological complex of projectives; terms list object labels
/// per degree and diffs[p - lo] maps degree p to degree p + 1.
struct ProjComplex {
  AlgebraPtr alg;
  int lo = 0;
  std::vector<std::vector<int>> terms;
  std::vector<ElemMatrix> diffs;

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  bool is_zero() const;
  std::vector<int> term(int p) const;
  ElemMatrix diff(int p) const;
  int total_terms() const;
  std::string describe() const;
};

/// Projective P_obj concentrated in the given degree.
ProjComplex stalk(const AlgebraPtr& a, int obj, int degree = 0);
ProjComplex zero_complex(const AlgebraPtr& a);
/// Builds a complex from consecutive terms and differentials and drops empty ends.
ProjComplex make_complex(const AlgebraPtr& a, int lo, std::vector<std::vector<int>> terms,
                         std::vector<ElemMatrix> diffs);

/// Empty when shapes agree and d after d vanishes.
std::string check_complex(const ProjComplex& x);
/// X[s] with X[s]^p = X^{p+s} and differential multiplied by (-1)^s.
ProjComplex shift(const ProjComplex& x, int s);
ProjComplex direct_sum(const std::vector<ProjComplex>& xs);
ProjComplex trim(const ProjComplex& x);

bool is_minimal(const ProjComplex& x);
/// Removes contractible summands P --iso--> P by Gaussian elimination.
ProjComplex minimize(const ProjComplex& x);

/// Degree-k map X -> Y given by components X^p -> Y^{p+k}.
struct ChainMap {
  int k = 0;
  int lo = 0;  // first source degree covered
  std::vector<ElemMatrix> comp;
};

/// Space of graded maps X -> Y of degree k with its differential.
class HomComplex {
 public:
  HomComplex(const ProjComplex& x, const ProjComplex& y);

  int dim(int k) const;
  /// Matrix of f -> d_Y f - (-1)^k f d_X from degree k to k+1.
  Matrix differential(int k) const;
  /// dim of maps X -> Y[k] up to homotopy.
  int cohomology_dim(int k) const;
  /// Basis of the degree-0 cocycles and spanning set of the coboundaries, as flat vectors.
  std::vector<Vec> cocycles(int k) const;
  std::vector<Vec> coboundaries(int k) const;

  ChainMap unflatten(int k, const Vec& v) const;
  Vec flatten(const ChainMap& f) const;
  Vec identity_vector() const;

  const ProjComplex& source() const { return x_; }
  const ProjComplex& target() const { return y_; }

 private:
  struct Layout {
    int k = 0;
    int first = 0;
    std::vector<int> block_off;
    std::vector<std::vector<int>> entry_off;
    int total = 0;
  };
  Layout layout(int k) const;

  ProjComplex x_;
  ProjComplex y_;
};

int hom_complex_dim(const ProjComplex& x, const ProjComplex& y, int k);

/// g after f for degree-0 chain maps.
ChainMap compose(const FDAlgebra& a, const ChainMap& g, const ChainMap& f);
/// Mapping cone of a degree-0 chain map.
ProjComplex cone(const ProjComplex& x, const ProjComplex& y, const ChainMap& f);

/// Complex over the opposite algebra: X*^p = (X^{-p})^* with transposed differential.
ProjComplex dual(const ProjComplex& x, const AlgebraPtr& opposite_alg);

/// Minimizes both sides, compares terms, then looks for a chain map whose
/// components are invertible modulo the radical.
bool homotopy_equivalent(const ProjComplex& x, const ProjComplex& y, std::uint32_t seed = 12345,
                         int attempts = 12);

/// Algebra of degree-0 maps up to homotopy between indecomposable minimal complexes.
FDAlgebra endo_algebra(const std::vector<ProjComplex>& xs, const std::vector<std::string>& labels = {});

}  // namespace hatilt

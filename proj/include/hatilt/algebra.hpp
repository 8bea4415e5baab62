#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hatilt/linalg.hpp"

namespace hatilt {

struct BasisElement {
  int src = 0;
  int tgt = 0;
  int degree = 0;
  std::string name;
};

/// Finite-dimensional basic algebra presented as a k-linear category.
///
/// Objects are the distinguished idempotents. Hom(i, j) carries a fixed
/// basis; the first basis vector of Hom(i, i) is the identity and every
/// other basis vector lies in the radical. Morphisms are stored as local
/// coordinate vectors in the basis of their Hom space.
class FDAlgebra {
 public:
  FDAlgebra(std::vector<std::string> labels, const std::vector<std::vector<int>>& hom_dims);

  int num_objects() const { return m_; }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> find_object(const std::string& label) const;

  int hom_dim(int i, int j) const { return hd_[i * m_ + j]; }
  int offset(int i, int j) const { return off_[i * m_ + j]; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const BasisElement& basis(int global) const { return basis_.at(global); }
  int global_id(int i, int j, int local) const { return offset(i, j) + local; }
  int local_id(int global) const;

  bool graded() const { return graded_; }
  void set_graded(bool g) { graded_ = g; }
  void set_basis_info(int i, int j, int local, int degree, std::string name);

  /// Product (b in Hom(j,k)) after (a in Hom(i,j)), as coordinates in Hom(i,k).
  const Vec& product(int i, int j, int k, int a, int b) const;
  void set_product(int i, int j, int k, int a, int b, Vec value);

  /// g after f for f: i -> j, g: j -> k.
  Vec compose(int i, int j, int k, const Vec& f, const Vec& g) const;
  Vec identity(int i) const;
  Vec zero(int i, int j) const { return Vec(hom_dim(i, j)); }
  Vec basis_vector(int i, int j, int local) const;

  /// Computes radical layers and generators; throws PreconditionError
  /// when the non-identity basis does not span a nilpotent ideal.
  void finalize();
  /// Basis elements spanning rad/rad^2, as global ids.
  const std::vector<int>& generators() const { return gens_; }
  /// Least N with rad^N = 0.
  int loewy_length() const { return loewy_; }
  /// Basis of rad^p(i, j) as local coordinate vectors, p >= 1.
  const std::vector<std::vector<Vec>>& radical_power(int p) const { return rad_.at(p - 1); }

  /// Empty when the table is associative and unital, else a description.
  std::string check_structure() const;
  /// Empty when products of homogeneous basis elements are homogeneous of the summed degree.
  std::string check_grading() const;

  std::vector<std::vector<int>> cartan() const;

 private:
  std::size_t block(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * m_ + j) * m_ + k;
  }

  std::vector<std::string> labels_;
  int m_ = 0;
  std::vector<int> hd_;
  std::vector<int> off_;
  std::vector<BasisElement> basis_;
  std::vector<std::vector<Vec>> table_;
  bool graded_ = false;
  std::vector<int> gens_;
  int loewy_ = 0;
  std::vector<std::vector<std::vector<Vec>>> rad_;  // rad_[p-1][i*m+j]
};

using AlgebraPtr = std::shared_ptr<const FDAlgebra>;

/// Same objects, Hom_op(i, j) = Hom(j, i) with the same local bases.
FDAlgebra opposite(const FDAlgebra& a);

/// Full subcategory on the given objects, in the given order.
FDAlgebra idempotent_subalgebra(const FDAlgebra& a, const std::vector<int>& objects);

/// Full subcategory modulo morphisms factoring through the other objects.
FDAlgebra quotient_by_complement(const FDAlgebra& a, const std::vector<int>& objects);

/// True when Hom(c, e) = 0 for every c outside and e inside the set.
bool no_morphisms_into(const FDAlgebra& a, const std::vector<int>& objects);

/// Upper-bidiagonal block algebra with r copies of a and DA between consecutive copies.
FDAlgebra replicate(const FDAlgebra& a, int r);

/// r-fold trivial extension: replicate plus DA from the last copy back to the first,
/// graded with that block in degree 1 and everything else in degree 0.
FDAlgebra trivial_ext_r(const FDAlgebra& a, int r);

/// Degree-zero subalgebra of a graded algebra.
FDAlgebra graded_part_zero(const FDAlgebra& a);

}  // namespace hatilt

#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hatilt/algebra.hpp"
#include "hatilt/pathcomb.hpp"

namespace hatilt {

struct Arrow {
  int id = 0;
  int src = 0;
  int tgt = 0;
  std::string label;
};

class Quiver {
 public:
  int add_vertex(std::string label);
  int add_arrow(int src, int tgt, std::string label);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex_label(int v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertex_labels() const { return vertices_; }
  const Arrow& arrow(int a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const { return arrows_; }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// Arrow ids in traversal order; the empty word needs its vertex supplied separately.
using PathWord = std::vector<int>;

struct PathTerm {
  Rational coeff;
  PathWord path;
};

/// Linear combination of parallel nonempty paths.
struct Relation {
  std::vector<PathTerm> terms;
};

int path_source(const Quiver& q, const PathWord& p);
int path_target(const Quiver& q, const PathWord& p);
std::string path_label(const Quiver& q, const PathWord& p);
/// Throws PreconditionError unless all paths are valid, nonempty and parallel.
void validate_relation(const Quiver& q, const Relation& r);

/// Quiver with relations together with its algebra, built degree by degree.
///
/// Every basis element of the algebra is a path; algebra().basis(g) has
/// degree = path length, and basis_path(g) is the representative word.
class BoundQuiverAlgebra {
 public:
  /// Relations must be homogeneous in path length. Throws BudgetExceeded
  /// when the algebra grows past max_dim.
  BoundQuiverAlgebra(Quiver q, std::vector<Relation> relations, std::size_t max_dim = 20000);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const AlgebraPtr& algebra() const { return alg_; }
  const PathWord& basis_path(int global) const { return paths_.at(global); }
  /// Normal form of a path as local coordinates in Hom(source, target).
  Vec reduce(int src, const PathWord& p) const;
  int nilpotency() const { return alg_->loewy_length(); }
  /// Global basis id of the arrow, or -1 when the arrow is not itself a basis element.
  int arrow_basis(int arrow) const { return arrow_basis_.at(arrow); }
  /// The arrow as local coordinates in Hom(source, target).
  const Vec& arrow_element(int arrow) const { return arrow_vec_.at(arrow); }

 private:
  Quiver quiver_;
  std::vector<Relation> relations_;
  AlgebraPtr alg_;
  std::vector<PathWord> paths_;
  std::vector<int> arrow_basis_;
  std::vector<Vec> arrow_vec_;
};

/// Representation of the opposite quiver: arrow a: x -> y acts as a matrix
/// from the space at y to the space at x (right modules).
struct QuiverRep {
  std::vector<int> dims;
  std::vector<Matrix> maps;  // maps[a] has dims[src] rows and dims[tgt] columns
};

/// Matrix of the path acting from the space at its target to the space at its source.
Matrix path_action(const QuiverRep& rep, int src, const PathWord& p);
/// Empty when every relation evaluates to zero, else the failing relation.
std::string check_relations(const BoundQuiverAlgebra& bqa, const QuiverRep& rep);

/// Higher Auslander algebra of type A with vertices os_n^d.
BoundQuiverAlgebra build_auslander_algebra(int n, int d, std::size_t max_dim = 20000);

/// Linear quiver 1 -> 2 -> ... -> n with all paths of the given length set to zero.
BoundQuiverAlgebra linear_truncated(int n, int length);

/// Interval module over A_{n+1}^d supported on {z : (x_1..x_d) <= z <= (x_2-1..x_{d+1}-1)}.
QuiverRep module_M(const BoundQuiverAlgebra& alg, const OrderedSeq& x);

}  // namespace hatilt

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hatilt/algebra.hpp"
#include "hatilt/quiver.hpp"

namespace hatilt {

/// Quiver with relations for an FDAlgebra, arrows chosen among its basis elements.
struct Presentation {
  Quiver quiver;
  std::vector<Relation> relations;
  std::vector<int> arrow_basis;  // global basis id of each arrow
};

/// Arrows form a basis of rad/rad^2 drawn from the algebra's basis.
Quiver gabriel_quiver(const FDAlgebra& a);

/// Minimal relations degree by degree up to the Loewy length. Throws
/// PreconditionError when the algebra is not graded by path length with
/// respect to the chosen arrows, and BudgetExceeded past max_paths.
Presentation presentation(const FDAlgebra& a, std::size_t max_paths = 200000);

enum class IsoStatus { isomorphic, not_isomorphic, inconclusive };

struct IsoResult {
  IsoStatus status = IsoStatus::inconclusive;
  std::vector<int> vertex_map;  // object i of the first algebra goes to vertex_map[i]
  std::string detail;
};

/// Searches vertex bijections compatible with Cartan data and arrow counts and,
/// for each, solves for arrow scalars. A success is a verified isomorphism.
IsoResult iso_test(const FDAlgebra& a1, const FDAlgebra& a2, std::size_t max_bijections = 100000);

std::string to_string(IsoStatus s);

}  // namespace hatilt

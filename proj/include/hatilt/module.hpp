#pragma once

#include <string>
#include <vector>

#include "hatilt/algebra.hpp"
#include "hatilt/quiver.hpp"

namespace hatilt {

/// Right module as a contravariant functor: for a basis morphism f: i -> j,
/// act(f) is the matrix of M(j) -> M(i).
struct Module {
  AlgebraPtr alg;
  std::vector<int> dims;
  std::vector<Matrix> act;  // indexed by global basis id

  int total_dim() const;
  std::vector<int> offsets() const;
  /// Matrix of a morphism f: i -> j given in local coordinates.
  Matrix action(int i, int j, const Vec& f) const;
};

/// Components per object; comp[v] maps src.dims[v] -> tgt.dims[v].
struct ModuleMap {
  std::vector<Matrix> comp;
};

Module zero_module(const AlgebraPtr& a);
Module projective(const AlgebraPtr& a, int j);
Module injective(const AlgebraPtr& a, int j);
Module simple(const AlgebraPtr& a, int j);
Module direct_sum(const std::vector<Module>& ms);
Module from_rep(const BoundQuiverAlgebra& bqa, const QuiverRep& rep);

/// Empty when the action is a functor on every basis pair.
std::string check_module(const Module& m);
bool is_module_map(const Module& src, const Module& tgt, const ModuleMap& f);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);
ModuleMap zero_map(const Module& src, const Module& tgt);
ModuleMap identity_map(const Module& m);

/// Basis of natural transformations, checked against the algebra's generators.
std::vector<ModuleMap> hom_basis(const Module& m, const Module& n);
int hom_dim(const Module& m, const Module& n);

/// Per object, a basis of the subspace of M(i) hit by radical morphisms.
std::vector<std::vector<Vec>> radical_subspace(const Module& m);
std::vector<int> top_dims(const Module& m);
std::vector<int> socle_dims(const Module& m);

/// Generators of M modulo its radical and the given subspaces (per object).
struct TopGenerators {
  std::vector<int> objects;
  std::vector<Vec> vectors;  // vectors[r] lies in M(objects[r])
};
TopGenerators top_generators(const Module& m, const std::vector<std::vector<Vec>>& extra = {});

/// Map from the sum of P_{objects[r]} sending the r-th top to vectors[r].
ModuleMap map_from_projectives(const Module& m, const TopGenerators& g);
/// Direct sum of the projectives named by the objects.
Module projective_sum(const AlgebraPtr& a, const std::vector<int>& objects);

struct Subobject {
  Module module;
  ModuleMap inclusion;
};
Subobject kernel(const Module& src, const Module& tgt, const ModuleMap& f);

/// Sum of projectives is isomorphic to this injective module when it is indecomposable projective-injective.
bool is_projective_module(const Module& m);
bool isomorphic_dims(const Module& a, const Module& b);

/// Endomorphism-type algebra of a list of indecomposable modules with local endomorphism rings.
FDAlgebra endo_algebra(const std::vector<Module>& ms, const std::vector<std::string>& labels = {});

}  // namespace hatilt

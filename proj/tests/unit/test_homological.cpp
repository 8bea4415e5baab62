#include <algorithm>

#include "doctest.h"
#include "hatilt/cluster_model.hpp"
#include "hatilt/errors.hpp"
#include "hatilt/homological.hpp"
#include "hatilt/presentation.hpp"
#include "hatilt/typea.hpp"

using namespace hatilt;

namespace {

Module interval(const BoundQuiverAlgebra& a, int n, int d, std::vector<int> x) {
  return from_rep(a, module_M(a, OrderedSeq(n, d, std::move(x))));
}

ProjComplex resolution_of(const Module& m) { return minimal_proj_resolution(m, 20).complex; }

int obj(const AlgebraPtr& a, const std::string& l) { return *a->find_object(l); }

}  // namespace

TEST_CASE("resolutions of simples over a linear quiver") {
  const auto bqa = build_auslander_algebra(4, 1);
  const auto& a = bqa.algebra();
  // with right modules P_1 = S_1 is simple projective; S_4 has a two-term resolution
  CHECK(projective_dimension(simple(a, obj(a, "1")), 5) == 0);
  CHECK(projective_dimension(simple(a, obj(a, "4")), 5) == 1);
  for (int j = 0; j < 4; ++j) CHECK(minimal_proj_resolution(projective(a, j), 0).report.length == 0);
  const auto r = minimal_proj_resolution(simple(a, obj(a, "3")), 5, "S3");
  CHECK(r.report.label == "S3");
  CHECK(r.report.terms == std::vector<std::vector<int>>{{obj(a, "3")}, {obj(a, "2")}});
  CHECK(check_complex(r.complex).empty());
  CHECK(is_minimal(r.complex));
  CHECK_THROWS_AS(minimal_proj_resolution(simple(a, obj(a, "3")), 0), BudgetExceeded);
}

TEST_CASE("global dimensions") {
  CHECK(gldim(build_auslander_algebra(5, 1).algebra(), 10) == 1);
  CHECK(gldim(build_auslander_algebra(3, 2).algebra(), 10) == 2);
  CHECK(gldim(build_auslander_algebra(4, 3).algebra(), 10) == 3);
  // kA_n / rad^l for small cases against the known values
  CHECK(gldim(linear_truncated(4, 2).algebra(), 10) == 3);
  CHECK(gldim(linear_truncated(5, 3).algebra(), 10) == 3);
  CHECK(gldim(linear_truncated(10, 3).algebra(), 10) == 6);
  CHECK_THROWS_AS(gldim(linear_truncated(10, 3).algebra(), 5), BudgetExceeded);
}

TEST_CASE("strip sequences resolve interval modules") {
  const int N = 3, d = 2;
  const auto a = build_auslander_algebra(N, d);
  for (int x2 = 2; x2 <= N + d; ++x2)
    for (int x3 = x2 + 1; x3 <= N + d; ++x3)
      for (int x4 = x3 + 1; x4 <= N + d; ++x4) {
        const std::vector<int> w{1, x2, x3, x4};
        const auto r = minimal_proj_resolution(interval(a, N, d + 1, {x2, x3, x4}), 10);
        REQUIRE(r.report.length == d);
        for (int t = 0; t <= d; ++t) {
          // degree -t is M(w without w[t+1]), the projective at (y_2 - 1, ..., y_{d+1} - 1)
          std::vector<int> y = w;
          y.erase(y.begin() + t + 1);
          std::vector<int> top;
          for (std::size_t i = 1; i < y.size(); ++i) top.push_back(y[i] - 1);
          const int o = obj(a.algebra(), OrderedSeq(N, d, top).label());
          CHECK(r.report.terms[t] == std::vector<int>{o});
        }
      }
}

TEST_CASE("Ext between interval modules") {
  {
    const auto a = build_auslander_algebra(3, 2);
    const auto m235 = interval(a, 3, 3, {2, 3, 5});
    const auto m124 = interval(a, 3, 3, {1, 2, 4});
    CHECK(ext_dim(m235, m124, 2) == 1);
    CHECK(ext_dim(m235, m124, 0) == hom_dim(m235, m124));
    // Ext^d(M(x), M(y)) is one-dimensional exactly when y <= tau_d(x)
    const auto xs = enumerate_os(3, 3);
    for (const auto& x : xs)
      for (const auto& y : xs) {
        const auto mx = from_rep(a, module_M(a, x)), my = from_rep(a, module_M(a, y));
        const auto tx = tau_d(x);
        CHECK(ext_dim(mx, my, 2) == (tx && preceq(y, *tx) ? 1 : 0));
        CHECK(ext_dim(mx, my, 1) == 0);
        CHECK(ext_dim(mx, my, 0) == (preceq(x, y) ? 1 : 0));
      }
  }
  const auto a = build_auslander_algebra(3, 3);
  const auto xs = enumerate_os(3, 4);
  for (const auto& x : xs)
    for (const auto& y : xs) {
      const auto mx = from_rep(a, module_M(a, x)), my = from_rep(a, module_M(a, y));
      for (int i = 1; i < 3; ++i) CHECK(ext_dim(mx, my, i) == 0);
    }
}

TEST_CASE("stalk complexes reproduce Ext") {
  const auto a = build_auslander_algebra(3, 2);
  const auto xs = enumerate_os(3, 3);
  for (std::size_t i = 0; i < xs.size(); i += 2)
    for (std::size_t j = 0; j < xs.size(); j += 3) {
      const auto mx = from_rep(a, module_M(a, xs[i])), my = from_rep(a, module_M(a, xs[j]));
      const auto px = resolution_of(mx), py = resolution_of(my);
      for (int k = 0; k <= 2; ++k) CHECK(hom_complex_dim(px, py, k) == ext_dim(mx, my, k));
    }
}

TEST_CASE("derived Nakayama functor") {
  const auto bqa = build_auslander_algebra(3, 2);
  const auto& a = bqa.algebra();
  const int no = a->num_objects();
  std::vector<ProjComplex> objects;
  for (int j = 0; j < no; ++j) {
    const auto p = stalk(a, j);
    const auto np = derived_nakayama(p, 10);
    CHECK(check_complex(np).empty());
    CHECK(is_minimal(np));
    // nu P_j is the injective I_j
    CHECK(homotopy_equivalent(np, resolution_of(injective(a, j))));
    CHECK(homotopy_equivalent(derived_nakayama_inverse(np, 10), p));
    objects.push_back(p);
  }
  objects.push_back(resolution_of(simple(a, 0)));
  objects.push_back(shift(resolution_of(simple(a, no - 1)), 1));
  for (const auto& x : objects) {
    const auto nx = derived_nakayama(x, 10);
    CHECK(homotopy_equivalent(derived_nakayama_inverse(nx, 10), x));
    for (const auto& y : objects) {
      // Serre duality and nu as an equivalence, at the level of dimensions
      CHECK(hom_complex_dim(x, y, 0) == hom_complex_dim(y, nx, 0));
      const auto ny = derived_nakayama(y, 10);
      for (int k = -1; k <= 2; ++k) CHECK(hom_complex_dim(x, y, k) == hom_complex_dim(nx, ny, k));
    }
  }
  CHECK(homotopy_equivalent(nakayama_power(objects[0], -2, 10),
                            derived_nakayama_inverse(derived_nakayama_inverse(objects[0], 10), 10)));
}

TEST_CASE("dominant dimension") {
  // Auslander algebras of representation-finite algebras: gldim <= 2 <= domdim
  const auto aus = build_auslander_algebra(3, 2).algebra();
  CHECK(gldim(aus, 5) == 2);
  const auto dd = domdim(aus, 5);
  CHECK_FALSE(dd.infinite);
  CHECK(dd.value == 2);
  CHECK(domdim(linear_truncated(3, 2).algebra(), 5).value == 2);
  // hereditary kA_3 has dominant dimension 1
  CHECK(domdim(build_auslander_algebra(3, 1).algebra(), 5).value == 1);
  // self-injective algebras have infinite dominant dimension
  const auto te = std::make_shared<const FDAlgebra>(trivial_ext_r(*linear_truncated(2, 2).algebra(), 1));
  CHECK(domdim(te, 5).infinite);
  CHECK(nakayama_permutation(te).has_value());
  CHECK_FALSE(nakayama_permutation(aus).has_value());
}

TEST_CASE("linear A4: nu-orbit of P1 is a tilting complex") {
  const auto bqa = build_auslander_algebra(4, 1);
  const auto& a = bqa.algebra();
  const auto orbit = nu_orbit(stalk(a, obj(a, "1")), 4, 6);
  REQUIRE(orbit.size() == 4);
  CHECK(orbit[0].describe() == "[0:P1]");
  CHECK(orbit[1].describe() == "[0:P4]");
  CHECK(orbit[2].describe() == "[-1:P3] -> [0:P4]");
  CHECK(orbit[3].describe() == "[-2:P2] -> [-1:P3]");
  CHECK(rigid(orbit, 6));
  CHECK(check_complex(build_tilting_complex_from_nu_orbit(stalk(a, 0), 4, 6)).empty());
  CHECK(build_tilting_complex_from_nu_orbit(stalk(a, 0), 1, 6).describe() == stalk(a, 0).describe());
  const std::vector<ProjComplex> targets{stalk(a, obj(a, "2")), stalk(a, obj(a, "3"))};
  const auto search = thick_generation_search(orbit, targets, 2, 2);
  CHECK(search.success);
  for (const auto& r : search.recipes) CHECK_FALSE(r.empty());
  const auto trivial = thick_generation_search(orbit, {orbit[1]}, 1, 1);
  CHECK(trivial.success);
  CHECK(trivial.recipes[0] == "T1");
  const auto e = endo_algebra(orbit);
  CHECK(iso_test(e, *linear_truncated(4, 2).algebra()).status == IsoStatus::isomorphic);
}

TEST_CASE("two-subhomogeneous checks") {
  const auto r = two_subhomogeneous_check(linear_truncated(4, 2).algebra(), 3, 8);
  CHECK(r.passed);
  CHECK(r.gldim == 3);
  CHECK(r.injectives_checked == 1);
  // hereditary: kA_2 passes with d = 1, while for kA_3 tau of the simple injective is not projective
  CHECK(two_subhomogeneous_check(build_auslander_algebra(2, 1).algebra(), 1, 4).passed);
  CHECK_FALSE(two_subhomogeneous_check(build_auslander_algebra(3, 1).algebra(), 1, 4).passed);
  CHECK_THROWS_AS(two_subhomogeneous_check(linear_truncated(4, 2).algebra(), 2, 8), PreconditionError);
  // with a larger d the shifted images land in the wrong degree
  CHECK_FALSE(two_subhomogeneous_check(linear_truncated(4, 2).algebra(), 4, 8).passed);
}

TEST_CASE("object-level fractional Calabi-Yau checks") {
  Quiver points;
  points.add_vertex("x");
  points.add_vertex("y");
  CHECK(fcy_object_check(BoundQuiverAlgebra(points, {}).algebra(), 0, 1, 4).passed);
  const auto a2 = build_auslander_algebra(2, 1).algebra();
  CHECK(fcy_object_check(a2, 1, 3, 6).passed);
  CHECK(fcy_object_check(a2, 2, 6, 6).passed);
  CHECK_FALSE(fcy_object_check(a2, 1, 2, 6).passed);
}

TEST_CASE("type A: realized objects agree with the cluster model") {
  for (auto [d, n] : {std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 3}}) {
    const TypeAModel model(d, n);
    const auto ts = build_T(d, n);
    const auto xs = model.complexes(ts);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      CHECK(check_complex(xs[i]).empty());
      CHECK(homotopy_equivalent(derived_nakayama(xs[i], model.max_len()), model.complex_of(nakayama(ts[i]))));
      for (std::size_t j = 0; j < ts.size(); ++j)
        for (int k = -2 * (d + 1); k <= 2 * (d + 1); ++k)
          CHECK(hom_complex_dim(xs[i], xs[j], k) == combinatorial_hom(ts[i], ts[j], k));
    }
  }
}

#include "../common/fixtures.hpp"
#include "doctest.h"
#include "hatilt/cluster_model.hpp"
#include "hatilt/module.hpp"
#include "hatilt/presentation.hpp"

using namespace hatilt;

namespace {

FDAlgebra end_of_projective_summands(int d, int n) {
  const auto a = build_auslander_algebra(n + 1, d);
  std::vector<Module> ps;
  for (const auto& u : build_P(d, n)) ps.push_back(from_rep(a, module_M(a, coords(u.path))));
  return endo_algebra(ps);
}

bool round_trips(const FDAlgebra& a) {
  const auto pr = presentation(a);
  const BoundQuiverAlgebra back(pr.quiver, pr.relations);
  return back.algebra()->dim() == a.dim() && iso_test(*back.algebra(), a).status == IsoStatus::isomorphic;
}

}  // namespace

TEST_CASE("presentation of the (3,4) projective endomorphism algebra") {
  const auto b0 = end_of_projective_summands(3, 4);
  const auto pr = presentation(b0);
  CHECK(pr.quiver.num_vertices() == 5);
  CHECK(pr.quiver.num_arrows() == 5);
  CHECK(pr.relations.size() == 2);
  const auto fixture = fixtures::square_with_tail();
  CHECK(fixture.algebra()->dim() == 12);
  const auto r = iso_test(b0, *fixture.algebra());
  CHECK(r.status == IsoStatus::isomorphic);
  CHECK(round_trips(b0));
}

TEST_CASE("presentation of semisimple and truncated algebras") {
  Quiver points;
  for (const char* v : {"x", "y", "z"}) points.add_vertex(v);
  const BoundQuiverAlgebra ss(points, {});
  const auto sp = presentation(*ss.algebra());
  CHECK(sp.quiver.num_vertices() == 3);
  CHECK(sp.quiver.num_arrows() == 0);
  CHECK(sp.relations.empty());
  const auto a2 = build_auslander_algebra(2, 1);
  const auto rep = replicate(*a2.algebra(), 5);
  const auto pr = presentation(rep);
  CHECK(pr.quiver.num_vertices() == 10);
  CHECK(pr.quiver.num_arrows() == 9);
  CHECK(pr.relations.size() == 7);
  for (const auto& rel : pr.relations) {
    CHECK(rel.terms.size() == 1);
    CHECK(rel.terms[0].path.size() == 3);
  }
  CHECK(iso_test(rep, *linear_truncated(10, 3).algebra()).status == IsoStatus::isomorphic);
}

TEST_CASE("presentation round trip") {
  CHECK(round_trips(*build_auslander_algebra(3, 2).algebra()));
  CHECK(round_trips(*build_auslander_algebra(4, 2).algebra()));
  CHECK(round_trips(*build_auslander_algebra(3, 3).algebra()));
  CHECK(round_trips(*linear_truncated(6, 3).algebra()));
  CHECK(round_trips(*fixtures::square_with_tail().algebra()));
}

TEST_CASE("iso_test decisions") {
  const auto a = *fixtures::square_with_tail().algebra();
  const auto id = iso_test(a, a);
  REQUIRE(id.status == IsoStatus::isomorphic);
  CHECK(id.vertex_map == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(iso_test(a, *fixtures::square_with_tail(Rational(2)).algebra()).status == IsoStatus::isomorphic);
  CHECK(iso_test(a, *fixtures::square_with_tail(Rational(-3, 5)).algebra()).status == IsoStatus::isomorphic);
  CHECK(iso_test(*linear_truncated(3, 2).algebra(), *fixtures::sink_in_middle().algebra()).status ==
        IsoStatus::not_isomorphic);
  CHECK(iso_test(*linear_truncated(4, 2).algebra(), *linear_truncated(4, 3).algebra()).status ==
        IsoStatus::not_isomorphic);
  // non-thin inputs are reported as inconclusive rather than guessed
  const auto te = trivial_ext_r(*linear_truncated(2, 2).algebra(), 1);
  CHECK(iso_test(te, te).status == IsoStatus::inconclusive);
}

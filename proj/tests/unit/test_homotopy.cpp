#include "doctest.h"
#include "hatilt/complex.hpp"
#include "hatilt/module.hpp"
#include "hatilt/presentation.hpp"
#include "hatilt/quiver.hpp"

using namespace hatilt;

namespace {

struct LinearA4 {
  BoundQuiverAlgebra bqa = build_auslander_algebra(4, 1);
  AlgebraPtr alg = bqa.algebra();
  int obj(const std::string& l) const { return *alg->find_object(l); }
  // the arrow i -> i+1 viewed as a map P_i -> P_{i+1}
  Vec arrow(int i) const { return alg->basis_vector(obj(std::to_string(i)), obj(std::to_string(i + 1)), 0); }
  // P_i -> P_{i+1} with P_{i+1} in the given degree
  ProjComplex two_term(int i, int degree) const {
    const int s = obj(std::to_string(i)), t = obj(std::to_string(i + 1));
    ElemMatrix d(*alg, {t}, {s});
    d.at(0, 0) = arrow(i);
    return make_complex(alg, degree - 1, {{s}, {t}}, {d, ElemMatrix(*alg, {}, {t})});
  }
};

}  // namespace

TEST_CASE("stalk complexes") {
  const LinearA4 a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const HomComplex h(stalk(a.alg, i), stalk(a.alg, j));
      CHECK(h.cohomology_dim(0) == a.alg->hom_dim(i, j));
      CHECK(h.cohomology_dim(1) == 0);
      CHECK(h.cohomology_dim(-1) == 0);
    }
  CHECK(hom_complex_dim(stalk(a.alg, 0), stalk(a.alg, 0, 2), 2) == 1);
  CHECK(hom_complex_dim(stalk(a.alg, 0), stalk(a.alg, 0, 2), 0) == 0);
  CHECK(stalk(a.alg, a.obj("2"), 3).describe() == "[3:P2]");
}

TEST_CASE("two-term complexes and shifts") {
  const LinearA4 a;
  const auto s4 = a.two_term(3, 0);
  CHECK(check_complex(s4).empty());
  CHECK(is_minimal(s4));
  CHECK(s4.describe() == "[-1:P3] -> [0:P4]");
  const auto sh = shift(s4, 1);
  CHECK(sh.lo == -2);
  CHECK(check_complex(sh).empty());
  // the simple S4 has Hom(P4, S4) = 1 and nothing from the other projectives
  for (int i = 1; i <= 4; ++i)
    CHECK(hom_complex_dim(stalk(a.alg, a.obj(std::to_string(i))), s4, 0) == (i == 4 ? 1 : 0));
  // Ext^1(S4, S3) = 1 realized as Hom(S4, S3[1])
  const auto s3 = a.two_term(2, 0);
  CHECK(hom_complex_dim(s4, s3, 1) == 1);
  CHECK(hom_complex_dim(s4, s3, 0) == 0);
  CHECK(hom_complex_dim(s3, s4, 1) == 0);
}

TEST_CASE("minimization removes contractible summands") {
  const LinearA4 a;
  const int p2 = a.obj("2"), p3 = a.obj("3");
  // P2 --(id, arrow)--> P2 + P3 is homotopy equivalent to the stalk P3
  ElemMatrix d(*a.alg, {p2, p3}, {p2});
  d.at(0, 0) = a.alg->identity(p2);
  d.at(1, 0) = a.arrow(2);
  const auto x = make_complex(a.alg, 0, {{p2}, {p2, p3}}, {d, ElemMatrix(*a.alg, {}, {p2, p3})});
  CHECK(check_complex(x).empty());
  CHECK_FALSE(is_minimal(x));
  const auto m = minimize(x);
  CHECK(check_complex(m).empty());
  CHECK(m.describe() == "[1:P3]");
  CHECK(minimize(m).describe() == m.describe());
  for (int k = -2; k <= 2; ++k)
    for (int i = 0; i < 4; ++i) {
      CHECK(hom_complex_dim(x, stalk(a.alg, i), k) == hom_complex_dim(m, stalk(a.alg, i), k));
      CHECK(hom_complex_dim(stalk(a.alg, i), x, k) == hom_complex_dim(stalk(a.alg, i), m, k));
    }
  CHECK(homotopy_equivalent(x, stalk(a.alg, p3, 1)));
  CHECK_FALSE(homotopy_equivalent(x, stalk(a.alg, p3, 0)));
}

TEST_CASE("cones and chain maps") {
  const LinearA4 a;
  const int p4 = a.obj("4");
  const auto s4 = a.two_term(3, 0);
  // the inclusion of P4 into the two-term complex; its cone is P3 up to shift
  const HomComplex h(stalk(a.alg, p4), s4);
  const auto z = h.cocycles(0);
  REQUIRE(z.size() == 1);
  const auto c = cone(stalk(a.alg, p4), s4, h.unflatten(0, z[0]));
  CHECK(check_complex(c).empty());
  CHECK(minimize(c).describe() == "[-1:P3]");
  CHECK(homotopy_equivalent(shift(c, -1), stalk(a.alg, a.obj("3"))));
  // composition of chain maps P3 -> P4 -> S4 is null-homotopic
  const HomComplex h34(stalk(a.alg, a.obj("3")), stalk(a.alg, p4));
  const auto f = h34.unflatten(0, h34.cocycles(0).at(0));
  const auto g = h.unflatten(0, z[0]);
  const auto gf = compose(*a.alg, g, f);
  const HomComplex h3s(stalk(a.alg, a.obj("3")), s4);
  CHECK(h3s.cohomology_dim(0) == 0);
  CHECK_FALSE(is_zero(h3s.flatten(gf)));
}

TEST_CASE("duals over the opposite algebra") {
  const LinearA4 a;
  const AlgebraPtr op = std::make_shared<const FDAlgebra>(opposite(*a.alg));
  const auto s4 = a.two_term(3, 0);
  const auto d = dual(s4, op);
  CHECK(check_complex(d).empty());
  CHECK(d.lo == 0);
  CHECK(d.hi() == 1);
  const auto back = dual(d, a.alg);
  CHECK(homotopy_equivalent(back, s4));
  for (int k = -1; k <= 1; ++k) CHECK(hom_complex_dim(s4, s4, k) == hom_complex_dim(d, d, k));
}

TEST_CASE("endomorphism algebra of complexes") {
  const LinearA4 a;
  const auto s4 = a.two_term(3, 0);
  const auto s3 = shift(a.two_term(2, 0), 1);
  const std::vector<ProjComplex> xs{stalk(a.alg, a.obj("1")), stalk(a.alg, a.obj("4")), s4, s3};
  const auto e = endo_algebra(xs);
  CHECK(e.check_structure().empty());
  CHECK(e.dim() == 7);
  CHECK(iso_test(e, *linear_truncated(4, 2).algebra()).status == IsoStatus::isomorphic);
  // stalks of projectives give back the algebra
  std::vector<ProjComplex> ps;
  for (int i = 0; i < 4; ++i) ps.push_back(stalk(a.alg, i));
  CHECK(iso_test(endo_algebra(ps), *a.alg).status == IsoStatus::isomorphic);
}

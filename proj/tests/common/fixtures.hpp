#pragma once

#include "hatilt/quiver.hpp"

namespace fixtures {

// 1 -a-> 2 -b-> 3 -d-> 5 and 2 -g-> 4 -m-> 5 with g*a = 0 and d*b = c * m*g
inline hatilt::BoundQuiverAlgebra square_with_tail(hatilt::Rational c = hatilt::Rational(1)) {
  using namespace hatilt;
  Quiver q;
  for (const char* v : {"1", "2", "3", "4", "5"}) q.add_vertex(v);
  const int al = q.add_arrow(0, 1, "alpha");
  const int be = q.add_arrow(1, 2, "beta");
  const int ga = q.add_arrow(1, 3, "gamma");
  const int de = q.add_arrow(2, 4, "delta");
  const int mu = q.add_arrow(3, 4, "mu");
  std::vector<Relation> rels{
      Relation{{PathTerm{Rational(1), {al, ga}}}},
      Relation{{PathTerm{Rational(1), {be, de}}, PathTerm{-c, {ga, mu}}}},
  };
  return BoundQuiverAlgebra(std::move(q), std::move(rels));
}

// 1 -> 2 <- 3
inline hatilt::BoundQuiverAlgebra sink_in_middle() {
  using namespace hatilt;
  Quiver q;
  for (const char* v : {"1", "2", "3"}) q.add_vertex(v);
  q.add_arrow(0, 1, "a");
  q.add_arrow(2, 1, "b");
  return BoundQuiverAlgebra(std::move(q), {});
}

}  // namespace fixtures

#include <algorithm>

#include "doctest.h"
#include "hatilt/errors.hpp"
#include "hatilt/verify.hpp"

using namespace hatilt;

TEST_CASE("claim selection") {
  const auto all = parse_claims("all");
  CHECK(all.size() + 1 == claim_names().size());
  CHECK(std::find(all.begin(), all.end(), "generation_search") == all.end());
  CHECK(parse_claims("gldim_B,rigidity") == std::vector<std::string>{"rigidity", "gldim_B"});
  CHECK_THROWS_AS(parse_claims("rigidity,nope"), PreconditionError);
  CHECK_THROWS_AS(parse_claims(""), PreconditionError);
}

TEST_CASE("claims on small parameters") {
  for (auto [d, n] : {std::pair{1, 2}, std::pair{2, 1}, std::pair{3, 2}}) {
    VerifyConfig cfg;
    cfg.d = d;
    cfg.n = n;
    for (const auto& name : parse_claims("all")) {
      const auto r = run_claim(name, cfg);
      INFO(name, " at d=", d, " n=", n, ": ", r.value);
      CHECK(r.status == ClaimStatus::pass);
    }
  }
  VerifyConfig tight;
  tight.d = 3;
  tight.n = 2;
  tight.max_len = 2;
  CHECK(run_claim("gldim_B", tight).status == ClaimStatus::skipped);
  CHECK_THROWS_AS(run_claim("nope", tight), PreconditionError);
}

#include <doctest.h>

#include "property_suites.hpp"

TEST_CASE("randomized algebraic laws") {
  props::Rng rng(20180301);
  for (const auto& suite : props::all_suites()) {
    CAPTURE(suite.name);
    CHECK(suite.run(rng, 200) == 0);
  }
}

TEST_CASE("Euler's sum holds on random windows") {
  props::Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    const auto zd = static_cast<std::size_t>(props::uniform(rng, 0, 6));
    const auto qo = static_cast<std::size_t>(props::uniform(rng, 1, 10));
    CHECK(qlab::euler_sum(zd, qo) == qlab::bi_inverse(qlab::poch_z_inf(zd, qo)));
  }
}

TEST_CASE("checks are deterministic") {
  qlab::CheckOptions o;
  o.order = 60;
  o.zdeg = 8;
  o.qorder = 16;
  const auto first = qlab::run_checks({"all"}, o, 2);
  const auto second = qlab::run_checks({"all"}, o, 3);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].name == second[i].name);
    CHECK(first[i].passed == second[i].passed);
    CHECK(first[i].order_checked == second[i].order_checked);
    CHECK(first[i].zdeg_checked == second[i].zdeg_checked);
  }
  CHECK(qlab::genfun_a(300) == qlab::genfun_a(300));
}

#include "doctest.h"

#include "cubiccm/errors.hpp"
#include "cubiccm/fixtures.hpp"

using namespace cubiccm;

TEST_CASE("fixture registry") {
  CHECK(fixture_names() == std::vector<std::string>{"fermat", "klein", "order11"});
  CHECK_THROWS_AS(run_fixture("nope"), DomainError);
}

TEST_CASE("fixtures pass and are reproducible") {
  for (const auto& name : fixture_names()) {
    const FixtureReport r = run_fixture(name);
    CHECK_MESSAGE(r.passed, name);
    CHECK_FALSE(r.checks.empty());
    const FixtureReport again = run_fixture(name);
    REQUIRE(again.checks.size() == r.checks.size());
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
      CHECK(again.checks[i].actual == r.checks[i].actual);
      CHECK(!r.checks[i].source.empty());
    }
  }
}

TEST_CASE("klein fixture values") {
  const FixtureReport r = run_fixture("klein");
  REQUIRE(r.grams.size() == 1);
  CHECK(r.grams[0].rank() == 4);
  bool saw_rank = false;
  for (const auto& c : r.checks)
    if (c.label.find("A(X)") != std::string::npos) {
      saw_rank = true;
      CHECK(c.actual == "19");
    }
  CHECK(saw_rank);
}

TEST_CASE("fermat fixture is informational") {
  const FixtureReport r = run_fixture("fermat");
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].informational);
  CHECK(r.checks[0].actual == "-3");
}

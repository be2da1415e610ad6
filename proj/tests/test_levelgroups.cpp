#include "doctest.h"

#include "cubiccm/errors.hpp"
#include "cubiccm/levelgroups.hpp"

using namespace cubiccm;

TEST_CASE("brute-force orders") {
  CHECK(brute_force_order(make_standard("diag+", 2), 3, std::nullopt) == 4);
  CHECK(brute_force_order(make_standard("U"), 3, std::nullopt) == 2);
  CHECK(brute_force_order(GramMatrix::diagonal({1}), 3, std::nullopt) == 1);
  CHECK(brute_force_order(GramMatrix::diagonal({1, 1, 1}), 3, std::nullopt) == 24);
  // The stabilizer of (1, 0) in SO(diag(1,1)) is trivial.
  CHECK(brute_force_order(make_standard("diag+", 2), 3, IntVector{1, 0}) == 1);
  CHECK_THROWS_AS(brute_force_order(make_standard("diag+", 5), 3, std::nullopt), GuardExceededError);
  CHECK_THROWS_AS(brute_force_order(make_standard("U"), 7, std::nullopt), GuardExceededError);
  CHECK_THROWS_AS(brute_force_order(make_standard("U"), 3, IntVector{1}), DomainError);
}

TEST_CASE("formula orders") {
  CHECK(formula_order(OrthogonalType::nonsplit, 2, 3) == 4);
  CHECK(formula_order(OrthogonalType::split, 2, 3) == 2);
  CHECK(formula_order(OrthogonalType::odd, 3, 3) == 24);
  CHECK(formula_order(OrthogonalType::odd, 1, 5) == 1);
  CHECK(formula_order(OrthogonalType::split, 4, 3) == 576);
  CHECK(formula_order(OrthogonalType::nonsplit, 4, 3) == 720);
  CHECK_THROWS_AS(formula_order(OrthogonalType::split, 2, 2), DomainError);
  CHECK_THROWS_AS(formula_order(OrthogonalType::split, 3, 3), DomainError);
  CHECK_THROWS_AS(formula_order(OrthogonalType::odd, 2, 3), DomainError);
}

TEST_CASE("classification over F_q") {
  CHECK(classify_form(make_standard("diag+", 2), 3) == OrthogonalType::nonsplit);
  CHECK(classify_form(make_standard("diag+", 2), 5) == OrthogonalType::split);
  CHECK(classify_form(make_standard("U"), 3) == OrthogonalType::split);
  CHECK_THROWS_AS(classify_form(make_standard("A2"), 3), DegenerateError);
  CHECK(parse_orthogonal_type("+") == OrthogonalType::split);
  CHECK_THROWS_AS(parse_orthogonal_type("x"), DomainError);
}

TEST_CASE("property: brute force agrees with formulas on small forms") {
  for (std::int64_t q : {3, 5}) {
    for (std::int64_t a = 1; a < q; ++a)
      for (std::int64_t b = 0; b < q; ++b)
        for (std::int64_t c = 1; c < q; ++c) {
          const GramMatrix g(IntMatrix{{a, b}, {b, c}});
          if (mod(determinant(g.matrix()), Integer(q)) == 0) continue;
          const auto brute = orthogonal_order(g, q, std::nullopt, OrderMethod::brute_force);
          const auto formula = orthogonal_order(g, q, std::nullopt, OrderMethod::formula);
          CHECK(brute.order == formula.order);
        }
  }
  for (const auto& diag : {IntVector{1, 1, 1}, IntVector{1, 1, 2}, IntVector{1, 2, 2}}) {
    const GramMatrix g = GramMatrix::diagonal(diag);
    CHECK(brute_force_order(g, 3, std::nullopt) == formula_order(OrthogonalType::odd, 3, 3));
  }
}

TEST_CASE("orthogonal_order data") {
  const auto data = orthogonal_order(GramMatrix(IntMatrix{{4, 5}, {5, -1}}), 3, std::nullopt,
                                     OrderMethod::brute_force);
  CHECK(data.gram.matrix() == IntMatrix{{1, 2}, {2, 2}});
  CHECK(data.N == 3);
  CHECK_THROWS_AS(orthogonal_order(make_standard("U"), 3, IntVector{1, 0}, OrderMethod::formula), DomainError);
}

TEST_CASE("brute force count is independent of the worker count") {
  const GramMatrix g = GramMatrix::diagonal({1, 2, 1});
  const Integer serial = brute_force_order(g, 5);
  CHECK(serial == formula_order(OrthogonalType::odd, 3, 5));
  CHECK(brute_force_order(g, 5, std::nullopt, 3) == serial);
  CHECK(brute_force_order(g, 5, IntVector{1, 1, 0}, 4) == brute_force_order(g, 5, IntVector{1, 1, 0}));
}

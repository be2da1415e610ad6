#include "doctest.h"

#include <random>

#include "cubiccm/matrix.hpp"

using namespace cubiccm;

TEST_CASE("determinant matches cofactor expansion on small matrices") {
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{2, 1}, {1, 2}}) == 3);
  CHECK(determinant(IntMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) == -1);
  CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = dist(rng);
    const Integer expected = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                             m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                             m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    CHECK(determinant(m) == expected);
  }
}

TEST_CASE("Smith diagonal: divisibility chain and |det| product") {
  CHECK(smith_diagonal(IntMatrix{{2, 0}, {0, 3}}) == IntVector{1, 6});
  CHECK(smith_diagonal(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) == IntVector{2, 6, 12});
  CHECK(smith_diagonal(IntMatrix{{1, 2, 3}}) == IntVector{1});
  CHECK(smith_diagonal(IntMatrix{{0, 0}, {0, 0}}) == IntVector{0, 0});

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = dist(rng);
    const IntVector d = smith_diagonal(m);
    Integer prod = 1;
    for (const auto& x : d) prod *= x;
    CHECK(prod == abs(determinant(m)));
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      if (sgn(d[i]) != 0) CHECK(mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()));
  }
}

TEST_CASE("integer kernel is saturated and annihilated") {
  const IntMatrix a{{2, 4, 6}};
  const IntMatrix k = integer_kernel(a);
  REQUIRE(k.cols() == 2);
  const IntMatrix prod = a * k;
  for (std::size_t j = 0; j < prod.cols(); ++j) CHECK(prod(0, j) == 0);
  // Saturated: the kernel basis extends to a basis of Z^3, so its SNF is all ones.
  CHECK(smith_diagonal(k) == IntVector{1, 1});

  const IntMatrix b{{1, 1, 0, 0}, {0, 0, 1, 1}};
  CHECK(integer_kernel(b).cols() == 2);
  CHECK(integer_rank(b) == 2);
}

TEST_CASE("parse and format round trip") {
  const IntMatrix m = parse_matrix("1,-2;3, 40");
  CHECK(m == IntMatrix{{1, -2}, {3, 40}});
  CHECK(format_matrix(m) == "1,-2;3,40");
  CHECK_THROWS(parse_matrix("1,x"));
}

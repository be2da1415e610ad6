#include "doctest.h"

#include <random>

#include "cubiccm/errors.hpp"
#include "cubiccm/lattices.hpp"

using namespace cubiccm;

namespace {

GramMatrix random_nondegenerate(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> dist(-4, 4);
  for (;;) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = dist(rng);
    if (sgn(determinant(m)) != 0) return GramMatrix(m);
  }
}

}  // namespace

TEST_CASE("standard lattices") {
  CHECK(make_standard("U").matrix() == IntMatrix{{0, 1}, {1, 0}});
  CHECK(make_standard("A2(-1)").matrix() == IntMatrix{{-2, -1}, {-1, -2}});
  CHECK(make_standard("U(7)").matrix() == IntMatrix{{0, 7}, {7, 0}});
  CHECK(make_standard("diag(2,10)").matrix() == IntMatrix{{2, 0}, {0, 10}});
  CHECK(make_standard("diag-", 3) == GramMatrix::diagonal({-1, -1, -1}));

  const GramMatrix l0 = make_standard("L0");
  REQUIRE(l0.rank() == 23);
  CHECK(l0(0, 0) == 1);
  CHECK(l0(1, 1) == 1);
  for (std::size_t i = 2; i < 23; ++i) CHECK(l0(i, i) == -1);

  const LatticeInvariants e8 = invariants(make_standard("E8"));
  CHECK(e8.determinant == 1);
  CHECK(e8.even);
  CHECK(e8.signature == Signature{8, 0});

  CHECK_THROWS_AS(make_standard("E7"), DomainError);
  CHECK_THROWS_AS(make_standard("diag+"), DomainError);
}

TEST_CASE("direct sum and rescale") {
  const GramMatrix uu = direct_sum(make_standard("U"), make_standard("U"));
  CHECK(uu.matrix() == IntMatrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  CHECK(direct_sum(make_standard("diag(2)"), make_standard("diag(10)")) == make_standard("diag(2,10)"));
  CHECK(rescale(make_standard("A2"), -1) == make_standard("A2(-1)"));
  CHECK(rescale(make_standard("diag(2,2)"), 1) == make_standard("diag(2,2)"));
  CHECK_THROWS_AS(rescale(make_standard("U"), 0), DomainError);
}

TEST_CASE("invariants of L0 and L") {
  const LatticeInvariants l0 = invariants(make_standard("L0"));
  CHECK(l0.rank == 23);
  CHECK(l0.signature == Signature{2, 21});
  CHECK(l0.determinant == -1);
  CHECK_FALSE(l0.even);
  CHECK(l0.disc_group.empty());

  const LatticeInvariants l = invariants(make_standard("L"));
  CHECK(l.rank == 22);
  CHECK(l.signature == Signature{2, 20});
  CHECK(l.determinant == 3);
  CHECK(l.even);
  CHECK(l.disc_group == IntVector{3});
}

TEST_CASE("Klein transcendental lattice invariants") {
  const GramMatrix t = direct_sum(make_standard("U(7)"), GramMatrix(IntMatrix{{-2, 1}, {1, 10}}));
  const LatticeInvariants inv = invariants(t);
  CHECK(inv.rank == 4);
  CHECK(inv.signature == Signature{2, 2});
  CHECK(inv.determinant == 1029);
  CHECK(inv.even);
  // U(7) contributes Z/7 + Z/7, the binary block Z/21.
  CHECK(inv.disc_group == IntVector{7, 7, 21});
}

TEST_CASE("degenerate Gram rejected") {
  CHECK_THROWS_AS(invariants(GramMatrix(IntMatrix{{1, 1}, {1, 1}})), DegenerateError);
  CHECK_THROWS_AS(GramMatrix(IntMatrix{{1, 2}, {3, 1}}), std::invalid_argument);
}

TEST_CASE("orthogonal complements") {
  CHECK(orthogonal_complement(make_standard("U"), {1, 1}).matrix() == IntMatrix{{-2}});
  CHECK(orthogonal_complement(make_standard("diag(1,1)"), {1, 0}).matrix() == IntMatrix{{1}});
  CHECK_THROWS_AS(orthogonal_complement(make_standard("U"), {2, 2}), DomainError);
  CHECK_THROWS_AS(orthogonal_complement(make_standard("U"), {0, 0}), DomainError);
  CHECK_THROWS_AS(orthogonal_complement(make_standard("U"), {1, 0}), DomainError);
}

TEST_CASE("distinguished vector of L0") {
  const IntVector v = l0_distinguished_vector();
  IntVector expected(23, Integer(-1));
  expected[0] = expected[1] = -3;
  CHECK(v == expected);
  const GramMatrix l0 = make_standard("L0");
  CHECK(l0.norm(v) == -3);
  const LatticeInvariants comp = invariants(orthogonal_complement(l0, v));
  const LatticeInvariants l = invariants(make_standard("L"));
  CHECK(comp.rank == l.rank);
  CHECK(comp.signature == l.signature);
  CHECK(comp.determinant == l.determinant);
  CHECK(comp.even);
  CHECK(comp.disc_group == l.disc_group);
}

TEST_CASE("property: SNF, direct sum and rescale laws") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const GramMatrix a = random_nondegenerate(rng, 1 + trial % 3);
    const GramMatrix b = random_nondegenerate(rng, 1 + (trial / 3) % 3);
    const LatticeInvariants ia = invariants(a), ib = invariants(b);

    Integer prod = 1;
    for (const auto& d : smith_diagonal(a.matrix())) prod *= d;
    CHECK(prod == abs(ia.determinant));

    const LatticeInvariants is = invariants(direct_sum(a, b));
    CHECK(is.determinant == ia.determinant * ib.determinant);
    CHECK(is.signature.positive == ia.signature.positive + ib.signature.positive);
    CHECK(is.signature.negative == ia.signature.negative + ib.signature.negative);
    CHECK(is.signature.positive + is.signature.negative == is.rank);

    for (int m : {2, -3}) {
      const LatticeInvariants ir = invariants(rescale(a, m));
      Integer scale;
      mpz_pow_ui(scale.get_mpz_t(), Integer(m).get_mpz_t(), a.rank());
      CHECK(ir.determinant == ia.determinant * scale);
      if (m > 0) {
        CHECK(ir.signature == ia.signature);
      } else {
        CHECK(ir.signature == Signature{ia.signature.negative, ia.signature.positive});
      }
    }
  }
}

TEST_CASE("property: complement of anisotropic primitive vectors") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dist(-3, 3);
  const GramMatrix l = make_standard("L");
  int tested = 0;
  while (tested < 25) {
    IntVector w(l.rank());
    for (auto& x : w) x = dist(rng);
    if (!is_primitive_vector(w) || sgn(l.norm(w)) == 0) continue;
    ++tested;
    const IntMatrix basis = orthogonal_complement_basis(l, {w});
    CHECK(basis.cols() == l.rank() - 1);
    for (std::size_t j = 0; j < basis.cols(); ++j) CHECK(l.pair(basis.column(j), w) == 0);
  }
}

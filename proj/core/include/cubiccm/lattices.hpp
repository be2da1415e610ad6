#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "cubiccm/bigint.hpp"
#include "cubiccm/matrix.hpp"

namespace cubiccm {

// Symmetric integer matrix of the bilinear form of a lattice in a fixed basis.
class GramMatrix {
 public:
  GramMatrix() = default;
  // Throws std::invalid_argument unless `entries` is square and symmetric.
  explicit GramMatrix(IntMatrix entries);

  static GramMatrix diagonal(const IntVector& entries);

  std::size_t rank() const { return entries_.rows(); }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const IntMatrix& matrix() const { return entries_; }

  Integer pair(const IntVector& x, const IntVector& y) const;
  Integer norm(const IntVector& x) const { return pair(x, x); }

  friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

 private:
  IntMatrix entries_;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

struct LatticeInvariants {
  std::size_t rank = 0;
  Signature signature;
  Integer determinant;
  bool even = false;
  // Elementary divisors > 1 of the Gram matrix (the discriminant group).
  IntVector disc_group;
};

// Named lattices. Accepted tokens: U, A2, A2(-1), E8, E8(-1), L0, L,
// diag+ / diag- (n copies of <1> / <-1>), diag(a,b,...) and a trailing
// rescaling suffix such as U(7).
GramMatrix make_standard(const std::string& name, std::optional<std::size_t> n = {});

GramMatrix direct_sum(const GramMatrix& a, const GramMatrix& b);

// Multiplies every entry by m; m must be nonzero.
GramMatrix rescale(const GramMatrix& g, const Integer& m);

// Sylvester signature by exact rational congruence diagonalization. Does not
// require nondegeneracy; `zero` counts the radical.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};
Inertia inertia(const GramMatrix& g);

// Throws DegenerateError when det(g) == 0.
LatticeInvariants invariants(const GramMatrix& g);

// Gram of w^perp in a basis of the saturated integer kernel. `w` must be
// primitive with w.w != 0.
GramMatrix orthogonal_complement(const GramMatrix& g, const IntVector& w);

// Basis (columns) of the orthogonal complement of the span of `vectors`.
IntMatrix orthogonal_complement_basis(const GramMatrix& g, const std::vector<IntVector>& vectors);

// Gram of the sublattice spanned by the given basis vectors (columns of `basis`).
GramMatrix restrict_to(const GramMatrix& g, const IntMatrix& basis);

// The distinguished norm -3 vector of L0 whose orthogonal complement is even:
// the lexicographically first such vector with coordinates in [-3, 3].
IntVector l0_distinguished_vector();

// Index range of the U+U block inside make_standard("L").
inline constexpr std::size_t kLHyperbolicOffset = 16;

bool is_primitive_vector(const IntVector& w);

}  // namespace cubiccm

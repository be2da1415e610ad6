#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubiccm/bigint.hpp"
#include "cubiccm/lattices.hpp"
#include "cubiccm/matrix.hpp"

namespace cubiccm {

// Even rank-2 lattice with Gram [[2a, b], [b, 2c]], i.e. the quadratic form
// a x^2 + b x y + c y^2 (half the Gram norm).
struct BinaryEvenForm {
  Integer a, b, c;

  Integer determinant() const { return 4 * a * c - b * b; }
  GramMatrix gram() const;
  bool positive_definite() const { return determinant() > 0 && a > 0; }
  bool negative_definite() const { return determinant() > 0 && a < 0; }

  // Throws std::invalid_argument unless `g` is 2x2 with even diagonal.
  static BinaryEvenForm from_gram(const GramMatrix& g);

  friend bool operator==(const BinaryEvenForm&, const BinaryEvenForm&) = default;
  friend auto operator<=>(const BinaryEvenForm& x, const BinaryEvenForm& y) {
    if (auto c = cmp(x.a, y.a); c != 0) return c <=> 0;
    if (auto c = cmp(x.b, y.b); c != 0) return c <=> 0;
    return cmp(x.c, y.c) <=> 0;
  }
};

std::string to_string(const BinaryEvenForm& f);

// A definite form brought to positive definite by a global sign flip.
struct NormalizedForm {
  BinaryEvenForm form;
  bool negated = false;
};

// Accepts positive or negative definite forms; throws DegenerateError when
// det == 0 and IndefiniteError when det < 0.
NormalizedForm normalize_definite(const BinaryEvenForm& f);

struct Reduction {
  BinaryEvenForm form;
  // Proper change of basis P (det 1) with P^T * Gram(input) * P == Gram(form).
  IntMatrix transform;
};

// Gauss reduction to |b| <= a <= c, with b >= 0 when |b| == a or a == c.
// Throws IndefiniteError / DegenerateError when the form is not positive definite.
Reduction reduce_with_transform(const BinaryEvenForm& f);
BinaryEvenForm reduce(const BinaryEvenForm& f);
bool is_reduced(const BinaryEvenForm& f);

// All reduced positive-definite even forms with 4ac - b^2 == det, sorted by
// (a, b, c). `partitions` > 1 splits the a-range across worker threads; the
// result does not depend on it.
std::vector<BinaryEvenForm> class_list(const Integer& det, std::size_t partitions = 1);

// Fundamental discriminant of Q(sqrt(b^2 - 4ac)). Negative-definite input is
// negated first.
std::int64_t endomorphism_field(const BinaryEvenForm& f);

// Order of g in GL2(Z), or nullopt if it exceeds `limit`.
std::optional<int> matrix_order(const IntMatrix& g, int limit = 12);

// Smallest-entry proper isometry of order > 2. Among candidates with minimal
// max |entry| the highest order wins, then the one acting on the distinguished
// period point by exp(+2 pi i / order), then lexicographic order.
std::optional<IntMatrix> finite_isometry(const BinaryEvenForm& f, int bound);

// Element p + q sqrt(-delta) of an imaginary quadratic field, delta squarefree.
struct QuadraticNumber {
  Rational p, q;
  Integer delta;

  friend bool operator==(const QuadraticNumber&, const QuadraticNumber&) = default;
  QuadraticNumber conjugate() const { return {p, -q, delta}; }
  // Coefficients (1, -trace, norm) of the minimal polynomial when q != 0.
  std::array<Rational, 3> min_poly() const;
};

std::string to_string(const QuadraticNumber& z);

struct PeriodPoint {
  QuadraticNumber root;  // root of 2a z^2 + 2b z + 2c; the line is C (root, 1)
};

// The two conjugate period points; the first has positive imaginary part.
std::pair<PeriodPoint, PeriodPoint> period_points(const BinaryEvenForm& f);

// Eigenvalue by which g scales the period vector (z, 1), i.e. g10 * z + g11.
// Throws InvariantViolation if g does not preserve the line.
QuadraticNumber period_eigenvalue(const IntMatrix& g, const PeriodPoint& point);

// 2a z^2 + 2b z + 2c evaluated exactly (zero for a period point).
QuadraticNumber evaluate_form_polynomial(const BinaryEvenForm& f, const QuadraticNumber& z);

}  // namespace cubiccm

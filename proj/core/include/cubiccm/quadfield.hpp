#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubiccm/bigint.hpp"
#include "cubiccm/lattices.hpp"

namespace cubiccm {

bool is_squarefree(std::int64_t n);
bool is_prime(std::int64_t n);

// -d if -d = 1 (mod 4), else -4d. Throws DomainError unless d >= 1 squarefree.
std::int64_t fundamental_discriminant(std::int64_t d);

// Kronecker symbol (a | n), totally multiplicative in n.
int kronecker(std::int64_t a, std::int64_t n);

// Imaginary quadratic field K = Q(sqrt(-d)) with discriminant -D.
class QuadField {
 public:
  static QuadField from_d(std::int64_t d);
  // `neg_disc` must be a negative fundamental discriminant.
  static QuadField from_discriminant(std::int64_t neg_disc);

  std::int64_t D() const { return D_; }
  std::int64_t d() const { return d_; }
  std::int64_t discriminant() const { return -D_; }
  // sqrt(-D) = root_scale() * sqrt(-d).
  std::int64_t root_scale() const { return D_ == d_ ? 1 : 2; }
  std::size_t class_number() const { return class_number_; }

  friend bool operator==(const QuadField& x, const QuadField& y) { return x.D_ == y.D_; }

 private:
  QuadField(std::int64_t D, std::int64_t d);
  std::int64_t D_;
  std::int64_t d_;
  std::size_t class_number_;
};

// Exact element x + y sqrt(-d) of K.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(Rational x, Rational y, std::int64_t d) : x_(std::move(x)), y_(std::move(y)), d_(d) {}
  static FieldElement rational(const Rational& x, std::int64_t d) { return {x, Rational(0), d}; }

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  std::int64_t d() const { return d_; }

  FieldElement conjugate() const { return {x_, -y_, d_}; }
  Rational norm() const { return x_ * x_ + y_ * y_ * d_; }
  Rational trace() const { return 2 * x_; }
  bool is_zero() const { return sgn(x_) == 0 && sgn(y_) == 0; }
  bool is_rational() const { return sgn(y_) == 0; }
  // Algebraic integer iff trace and norm are rational integers.
  bool is_integral() const { return is_integer(trace()) && is_integer(norm()); }

  FieldElement operator+(const FieldElement& o) const { return {x_ + o.x_, y_ + o.y_, d_}; }
  FieldElement operator-(const FieldElement& o) const { return {x_ - o.x_, y_ - o.y_, d_}; }
  FieldElement operator-() const { return {-x_, -y_, d_}; }
  FieldElement operator*(const FieldElement& o) const {
    return {x_ * o.x_ - y_ * o.y_ * d_, x_ * o.y_ + y_ * o.x_, d_};
  }
  // Throws DomainError on division by zero.
  FieldElement operator/(const FieldElement& o) const;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  Rational x_, y_;
  std::int64_t d_ = 1;
};

std::string to_string(const FieldElement& z);

enum class Splitting { split, inert, ramified };
std::string to_string(Splitting s);

Splitting splitting_type(std::int64_t p, const QuadField& K);

// Gram of (O_K, Tr(x conj y)) in the integral basis (1, theta), theta = sqrt(-d)
// or (1 + sqrt(-d)) / 2.
GramMatrix trace_form_gram(const QuadField& K);
FieldElement integral_basis_generator(const QuadField& K);

// Integral ideal content * (Z a + Z (b + sqrt(-D)) / 2), with b^2 = -D (mod 4a)
// and -a < b <= a. Norm content^2 * a.
struct IdealRep {
  Integer content = 1;
  Integer a = 1;
  Integer b = 0;

  Integer norm() const { return content * content * a; }
  friend bool operator==(const IdealRep&, const IdealRep&) = default;
};

std::string to_string(const IdealRep& I);

IdealRep make_ideal(const QuadField& K, const Integer& content, const Integer& a, const Integer& b);
IdealRep unit_ideal(const QuadField& K);
IdealRep conjugate(const IdealRep& I, const QuadField& K);
// The two Z-module generators content*a and content*(b + sqrt(-D))/2.
std::pair<FieldElement, FieldElement> ideal_generators(const IdealRep& I, const QuadField& K);
bool contains(const IdealRep& I, const QuadField& K, const FieldElement& z);
// True iff the principal ideal (alpha) equals I (membership in both directions).
bool generates(const FieldElement& alpha, const IdealRep& I, const QuadField& K);

// Prime ideals above the rational prime p (two when split, one otherwise).
std::vector<IdealRep> primes_above(std::int64_t p, const QuadField& K);

// All integral ideals of norm n, sorted by (a, b).
std::vector<IdealRep> ideals_of_norm(std::int64_t n, const QuadField& K);

// Generator of I, unique up to units. Throws UnsupportedFieldError when K has
// class number > 1.
std::optional<FieldElement> principal_generator(const IdealRep& I, const QuadField& K);

std::vector<FieldElement> units(const QuadField& K);

// conj(alpha) / alpha, an element of norm 1.
FieldElement rx_action(const FieldElement& alpha);

}  // namespace cubiccm

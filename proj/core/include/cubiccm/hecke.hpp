#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "cubiccm/bigint.hpp"
#include "cubiccm/quadfield.hpp"

namespace cubiccm {

// Discriminants D of the imaginary quadratic fields with class number one.
inline constexpr std::int64_t kSupportedD[] = {3, 4, 7, 8, 11, 19, 43, 67, 163};

// Weight-3 Hecke character with psi((alpha)) = alpha^2 for the generator alpha
// normalized to alpha = 1 (mod conductor).
class HeckeCharacter {
 public:
  const QuadField& field() const { return field_; }
  const IdealRep& conductor() const { return conductor_; }
  std::int64_t conductor_norm() const { return conductor_norm_; }
  // Level D * M of the attached cusp form.
  std::int64_t level() const { return field_.D() * conductor_norm_; }

  bool coprime_to_conductor(const IdealRep& I) const;
  // The generator of I congruent to 1 modulo the conductor.
  FieldElement normalized_generator(const IdealRep& I) const;

 private:
  friend HeckeCharacter canonical_character(const QuadField& K);
  HeckeCharacter(QuadField K, IdealRep m, std::int64_t M)
      : field_(std::move(K)), conductor_(std::move(m)), conductor_norm_(M) {}

  QuadField field_;
  IdealRep conductor_;
  std::int64_t conductor_norm_;
};

// Conductor (1) when the unit group is {+-1}; for D = 3, 4 the smallest
// conjugation-stable ideal into whose unit group the units inject. Throws
// UnsupportedFieldError outside the class-number-one set.
HeckeCharacter canonical_character(const QuadField& K);

// psi(I) = alpha^2. Throws DomainError if I is not coprime to the conductor.
FieldElement evaluate(const HeckeCharacter& chi, const IdealRep& I);

struct QExpansion {
  std::int64_t D = 0;
  std::int64_t M = 0;
  std::vector<Integer> coefficients;  // coefficients[n - 1] = c_n

  const Integer& operator[](std::size_t n) const { return coefficients.at(n - 1); }
  std::size_t size() const { return coefficients.size(); }
};

// c_n = sum of psi over ideals of norm n coprime to the conductor, for
// n = 1..B. The norm range is split across `workers` threads.
QExpansion qexpansion(const HeckeCharacter& chi, std::int64_t B, std::size_t workers = 1);

// eta(a) = psi((a)) / a^2 for a in (Z/MZ)^x, as (a, value) pairs.
std::vector<std::pair<std::int64_t, FieldElement>> dirichlet_eta(const HeckeCharacter& chi);
FieldElement eta_value(const HeckeCharacter& chi, std::int64_t a);

// eps(n) = eta(n) * (-D | n). Throws DomainError unless gcd(n, D M) == 1.
FieldElement epsilon(const HeckeCharacter& chi, std::int64_t n);
// epsilon as +-1 when it is rational (always the case for the supported fields).
int epsilon_sign(const HeckeCharacter& chi, std::int64_t n);

struct EtaFactor {
  std::int64_t shift;
  std::int64_t exponent;
};

// prod_n prod_(s, e) (1 - q^(s n))^e as a power series, coefficients of q^0..q^(B-1).
std::vector<Integer> eta_product_raw(const std::vector<EtaFactor>& factors, std::int64_t B);

// q^L prod (1 - q^(s n))^e with L = sum(s e) / 24: returns the B coefficients
// of q^L, ..., q^(L + B - 1). Throws DomainError when L is not an integer.
std::vector<Integer> eta_product(const std::vector<EtaFactor>& factors, std::int64_t B);

}  // namespace cubiccm

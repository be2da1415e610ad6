#include "cubiccm/hecke.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <string>

#include "cubiccm/errors.hpp"

namespace cubiccm {

namespace {

bool is_supported(std::int64_t D) {
  return std::find(std::begin(kSupportedD), std::end(kSupportedD), D) != std::end(kSupportedD);
}

bool congruent(const FieldElement& x, const FieldElement& y, const IdealRep& m, const QuadField& K) {
  return contains(m, K, x - y);
}

bool units_inject(const QuadField& K, const IdealRep& m) {
  const auto us = units(K);
  for (std::size_t i = 0; i < us.size(); ++i)
    for (std::size_t j = i + 1; j < us.size(); ++j)
      if (congruent(us[i], us[j], m, K)) return false;
  return true;
}

IdealRep principal_ideal(std::int64_t a, const QuadField& K) {
  return {Integer(static_cast<long>(a)), 1, K.D() % 2};
}

}  // namespace

HeckeCharacter canonical_character(const QuadField& K) {
  if (!is_supported(K.D()) || K.class_number() != 1)
    throw UnsupportedFieldError("Hecke character needs a class-number-one field (D = " +
                                std::to_string(K.D()) + ", h = " +
                                std::to_string(K.class_number()) + ")");
  const auto us = units(K);
  if (us.size() == 2) return HeckeCharacter(K, unit_ideal(K), 1);

  // Extra units: search conjugation-stable moduli by increasing norm.
  for (std::int64_t n = 2; n <= 64; ++n) {
    for (const auto& m : ideals_of_norm(n, K)) {
      if (!(conjugate(m, K) == m) || !units_inject(K, m)) continue;
      for (const auto& u : us)
        if (congruent(u, FieldElement::rational(1, K.d()), m, K) &&
            !(u * u == FieldElement::rational(1, K.d())))
          throw InvariantViolation("unit congruent to 1 with u^2 != 1");
      return HeckeCharacter(K, m, n);
    }
  }
  throw UnsupportedFieldError("no conductor found for D = " + std::to_string(K.D()));
}

bool HeckeCharacter::coprime_to_conductor(const IdealRep& I) const {
  // Conductors here are 1 or supported on a single ramified prime, where
  // coprimality of ideals coincides with coprimality of norms.
  return gcd(I.norm(), Integer(static_cast<long>(conductor_norm_))) == 1;
}

FieldElement HeckeCharacter::normalized_generator(const IdealRep& I) const {
  const auto alpha = principal_generator(I, field_);
  if (!alpha) throw InvariantViolation("no generator for " + to_string(I));
  if (conductor_norm_ == 1) return *alpha;
  const FieldElement one = FieldElement::rational(1, field_.d());
  for (const auto& u : units(field_)) {
    const FieldElement candidate = u * *alpha;
    if (congruent(candidate, one, conductor_, field_)) return candidate;
  }
  throw DomainError("ideal " + to_string(I) + " has no generator = 1 mod conductor");
}

FieldElement evaluate(const HeckeCharacter& chi, const IdealRep& I) {
  if (!chi.coprime_to_conductor(I))
    throw DomainError("ideal " + to_string(I) + " is not coprime to the conductor");
  const FieldElement alpha = chi.normalized_generator(I);
  return alpha * alpha;
}

QExpansion qexpansion(const HeckeCharacter& chi, std::int64_t B, std::size_t workers) {
  if (B < 1) throw DomainError("q-expansion length must be >= 1");
  auto range = [&chi](std::int64_t lo, std::int64_t hi) {
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t n = lo; n <= hi; ++n) {
      FieldElement sum = FieldElement::rational(0, chi.field().d());
      for (const auto& I : ideals_of_norm(n, chi.field()))
        if (chi.coprime_to_conductor(I)) sum = sum + evaluate(chi, I);
      if (!sum.is_rational() || !is_integer(sum.x()))
        throw InvariantViolation("c_" + std::to_string(n) + " = " + to_string(sum) +
                                 " is not a rational integer");
      out.push_back(sum.x().get_num());
    }
    return out;
  };

  QExpansion q{chi.field().D(), chi.conductor_norm(), {}};
  workers = std::max<std::size_t>(1, std::min<std::size_t>(workers, static_cast<std::size_t>(B)));
  if (workers == 1) {
    q.coefficients = range(1, B);
    return q;
  }
  const std::int64_t chunk = (B + static_cast<std::int64_t>(workers) - 1) / static_cast<std::int64_t>(workers);
  std::vector<std::future<std::vector<Integer>>> parts;
  for (std::int64_t lo = 1; lo <= B; lo += chunk)
    parts.push_back(std::async(std::launch::async, range, lo, std::min(B, lo + chunk - 1)));
  for (auto& p : parts) {
    auto block = p.get();
    q.coefficients.insert(q.coefficients.end(), block.begin(), block.end());
  }
  return q;
}

FieldElement eta_value(const HeckeCharacter& chi, std::int64_t a) {
  const std::int64_t M = chi.conductor_norm();
  if (std::gcd(a, M) != 1) throw DomainError("eta needs a unit modulo M");
  const std::int64_t abs_a = a < 0 ? -a : a;
  const FieldElement value = evaluate(chi, principal_ideal(abs_a, chi.field()));
  const Rational a2 = Rational(abs_a) * abs_a;
  return {value.x() / a2, value.y() / a2, value.d()};
}

std::vector<std::pair<std::int64_t, FieldElement>> dirichlet_eta(const HeckeCharacter& chi) {
  const std::int64_t M = chi.conductor_norm();
  std::vector<std::pair<std::int64_t, FieldElement>> table;
  for (std::int64_t a = 1; a <= std::max<std::int64_t>(M - 1, 1); ++a)
    if (std::gcd(a, M) == 1) table.emplace_back(a, eta_value(chi, a));
  return table;
}

FieldElement epsilon(const HeckeCharacter& chi, std::int64_t n) {
  if (std::gcd(n, chi.level()) != 1)
    throw DomainError("epsilon(" + std::to_string(n) + ") undefined: not coprime to level " +
                      std::to_string(chi.level()));
  const FieldElement eta = eta_value(chi, n);
  const int phi = kronecker(chi.field().discriminant(), n);
  return {eta.x() * phi, eta.y() * phi, eta.d()};
}

int epsilon_sign(const HeckeCharacter& chi, std::int64_t n) {
  const FieldElement e = epsilon(chi, n);
  if (!e.is_rational() || abs(e.x()) != 1)
    throw InvariantViolation("epsilon(" + std::to_string(n) + ") is not +-1");
  return sgn(e.x());
}

std::vector<Integer> eta_product_raw(const std::vector<EtaFactor>& factors, std::int64_t B) {
  if (B < 1) throw DomainError("series length must be >= 1");
  std::vector<Integer> c(static_cast<std::size_t>(B));
  c[0] = 1;
  for (const auto& [shift, exponent] : factors) {
    if (shift < 1) throw DomainError("eta shift must be positive");
    for (std::int64_t step = shift; step < B; step += shift) {
      const auto s = static_cast<std::size_t>(step);
      for (std::int64_t e = 0; e < std::abs(exponent); ++e) {
        if (exponent > 0) {
          // multiply by (1 - q^step)
          for (std::size_t k = c.size(); k-- > s;) c[k] -= c[k - s];
        } else {
          // divide by (1 - q^step)
          for (std::size_t k = s; k < c.size(); ++k) c[k] += c[k - s];
        }
      }
    }
  }
  return c;
}

std::vector<Integer> eta_product(const std::vector<EtaFactor>& factors, std::int64_t B) {
  std::int64_t weight = 0;
  for (const auto& f : factors) weight += f.shift * f.exponent;
  if (weight % 24 != 0)
    throw DomainError("eta product has non-integral leading exponent " + std::to_string(weight) + "/24");
  return eta_product_raw(factors, B);
}

}  // namespace cubiccm

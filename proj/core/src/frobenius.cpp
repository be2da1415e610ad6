#include "cubiccm/frobenius.hpp"

#include <string>

#include "cubiccm/errors.hpp"

namespace cubiccm {

namespace {

Integer rational_integer(const FieldElement& z, const char* what) {
  if (!z.is_rational() || !is_integer(z.x()))
    throw InvariantViolation(std::string(what) + " is not a rational integer: " + to_string(z));
  return z.x().get_num();
}

bool is_bad(std::int64_t p, const HeckeCharacter& chi) { return chi.level() % p == 0; }

}  // namespace

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<std::int64_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(n + 1));
  for (std::int64_t i = 2; i <= n; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    for (std::int64_t j = i * i; j <= n; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return primes;
}

FrobeniusRow frob_row(std::int64_t p, const HeckeCharacter& chi) {
  const QuadField& K = chi.field();
  FrobeniusRow row;
  row.p = p;
  row.splitting = splitting_type(p, K);
  if (is_bad(p, chi)) {
    row.bad = true;
    return row;
  }
  const auto primes = primes_above(p, K);
  if (row.splitting == Splitting::split) {
    const FieldElement x = evaluate(chi, primes[0]);
    const FieldElement y = evaluate(chi, primes[1]);
    row.trace = rational_integer(x + y, "split trace");
    row.det = rational_integer(x * y, "split determinant");
  } else {
    row.trace = 0;
    row.det = -rational_integer(evaluate(chi, primes[0]), "psi((p))");
  }
  const Integer p2 = Integer(static_cast<long>(p)) * p;
  row.euler = std::array<Integer, 3>{1, -*row.trace, epsilon_sign(chi, p) * p2};
  return row;
}

std::array<Integer, 3> euler_factor(std::int64_t p, const HeckeCharacter& chi) {
  if (!is_prime(p)) throw DomainError("euler_factor needs a prime");
  if (is_bad(p, chi))
    throw BadPrimeError("p = " + std::to_string(p) + " divides the level " + std::to_string(chi.level()));
  const QExpansion q = qexpansion(chi, p);
  const Integer p2 = Integer(static_cast<long>(p)) * p;
  return {1, -q[static_cast<std::size_t>(p)], epsilon_sign(chi, p) * p2};
}

std::vector<LShiftRow> l_shift_table(const HeckeCharacter& chi, std::int64_t P) {
  if (P < 2) throw DomainError("prime bound must be >= 2");
  const QExpansion q = qexpansion(chi, P);
  std::vector<LShiftRow> rows;
  for (std::int64_t p : primes_up_to(P)) {
    if (is_bad(p, chi)) continue;
    const FrobeniusRow frob = frob_row(p, chi);
    LShiftRow row;
    row.p = p;
    row.splitting = frob.splitting;
    row.a_p = q[static_cast<std::size_t>(p)];
    const Integer pz = static_cast<long>(p);
    row.eps_p2 = epsilon_sign(chi, p) * pz * pz;
    row.rho_trace = pz * row.a_p;
    row.rho_det = row.eps_p2 * pz * pz;
    row.frob_trace = *frob.trace;
    row.consistent = row.frob_trace == row.a_p && row.rho_trace == pz * row.frob_trace &&
                     row.rho_det == pz * pz * row.eps_p2 && *frob.det == row.eps_p2;
    if (!row.consistent)
      throw InvariantViolation("L-shift row inconsistent at p = " + std::to_string(p));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cubiccm

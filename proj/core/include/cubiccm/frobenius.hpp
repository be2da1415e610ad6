#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cubiccm/bigint.hpp"
#include "cubiccm/hecke.hpp"
#include "cubiccm/quadfield.hpp"

namespace cubiccm {

// Trace and determinant of geometric Frobenius at p on the Tate-twisted
// rank-2 transcendental representation.
struct FrobeniusRow {
  std::int64_t p = 0;
  Splitting splitting = Splitting::split;
  // p | D M: reported without trace/det.
  bool bad = false;
  std::optional<Integer> trace;
  std::optional<Integer> det;
  // (1, -a_p, eps(p) p^2): Euler factor in the variable p^-s.
  std::optional<std::array<Integer, 3>> euler;
};

// Evaluates psi on the primes above p: split -> (psi(P) + psi(Pbar),
// psi(P) psi(Pbar)); inert -> (0, -psi((p))). Bad primes get bad = true.
FrobeniusRow frob_row(std::int64_t p, const HeckeCharacter& chi);

// (1, -c_p, eps(p) p^2). Throws BadPrimeError when p | D M.
std::array<Integer, 3> euler_factor(std::int64_t p, const HeckeCharacter& chi);

struct LShiftRow {
  std::int64_t p = 0;
  Splitting splitting = Splitting::split;
  Integer a_p;         // coefficient of the newform f
  Integer eps_p2;      // eps(p) p^2
  Integer rho_trace;   // p * a_p
  Integer rho_det;     // eps(p) p^4
  Integer frob_trace;  // independent prime-ideal evaluation
  bool consistent = false;
};

// Rows for the good primes p <= P. The f-normalized row (a_p, eps p^2) and the
// rho-normalized row (p a_p, eps p^4) realize L(rho, s) = L(f, s - 1).
std::vector<LShiftRow> l_shift_table(const HeckeCharacter& chi, std::int64_t P);

std::vector<std::int64_t> primes_up_to(std::int64_t n);

}  // namespace cubiccm

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cubiccm/bigint.hpp"
#include "cubiccm/lattices.hpp"

namespace cubiccm {

enum class OrthogonalType { split, nonsplit, odd };
std::string to_string(OrthogonalType t);
OrthogonalType parse_orthogonal_type(const std::string& s);

enum class OrderMethod { brute_force, formula };

struct FiniteOrthData {
  GramMatrix gram;  // entries reduced to [0, N)
  std::int64_t N = 0;
  std::optional<IntVector> fixed_vector;
  Integer order;
  OrderMethod method = OrderMethod::brute_force;
};

inline constexpr std::size_t kBruteForceMaxRank = 4;
inline constexpr std::int64_t kBruteForceMaxModulus = 5;

// Number of g over Z/N with g^T gram g = gram, det g = 1 and g fixed = fixed.
// Throws GuardExceededError beyond rank 4 or N > 5. First-column candidates
// are split across `workers` threads; the count does not depend on it.
Integer brute_force_order(const GramMatrix& gram, std::int64_t N,
                          const std::optional<IntVector>& fixed = std::nullopt, std::size_t workers = 1);

// |SO_n^(+-)(F_q)| from the classical product formulas; q an odd prime.
Integer formula_order(OrthogonalType type, std::size_t n, std::int64_t q);

// Type of the nondegenerate form `gram` over F_q: odd rank -> odd; even rank
// 2m -> split iff (-1)^m det is a square mod q.
OrthogonalType classify_form(const GramMatrix& gram, std::int64_t q);

FiniteOrthData orthogonal_order(const GramMatrix& gram, std::int64_t N,
                                const std::optional<IntVector>& fixed, OrderMethod method);

}  // namespace cubiccm

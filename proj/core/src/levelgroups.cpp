#include "cubiccm/levelgroups.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <future>
#include <vector>

#include "cubiccm/errors.hpp"
#include "cubiccm/quadfield.hpp"

namespace cubiccm {

std::string to_string(OrthogonalType t) {
  switch (t) {
    case OrthogonalType::split: return "split";
    case OrthogonalType::nonsplit: return "nonsplit";
    case OrthogonalType::odd: return "odd";
  }
  return "?";
}

OrthogonalType parse_orthogonal_type(const std::string& s) {
  if (s == "split" || s == "+") return OrthogonalType::split;
  if (s == "nonsplit" || s == "-") return OrthogonalType::nonsplit;
  if (s == "odd") return OrthogonalType::odd;
  throw DomainError("unknown orthogonal type: " + s);
}

namespace {

using Vec = std::array<std::int64_t, kBruteForceMaxRank>;

std::int64_t mod_n(std::int64_t x, std::int64_t N) { return ((x % N) + N) % N; }

std::int64_t det2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) { return a * d - b * c; }

// Determinant of the matrix whose columns are cols[0..n-1]; n <= 4.
std::int64_t small_det(const std::array<const Vec*, kBruteForceMaxRank>& cols, std::size_t n) {
  auto at = [&cols](std::size_t r, std::size_t c) { return (*cols[c])[r]; };
  switch (n) {
    case 1: return at(0, 0);
    case 2: return det2(at(0, 0), at(0, 1), at(1, 0), at(1, 1));
    case 3:
      return at(0, 0) * det2(at(1, 1), at(1, 2), at(2, 1), at(2, 2)) -
             at(0, 1) * det2(at(1, 0), at(1, 2), at(2, 0), at(2, 2)) +
             at(0, 2) * det2(at(1, 0), at(1, 1), at(2, 0), at(2, 1));
    default: {
      // Expansion along row 0 with 3x3 minors.
      std::int64_t total = 0;
      for (std::size_t k = 0; k < 4; ++k) {
        std::size_t c[3], m = 0;
        for (std::size_t j = 0; j < 4; ++j)
          if (j != k) c[m++] = j;
        const std::int64_t minor =
            at(1, c[0]) * det2(at(2, c[1]), at(2, c[2]), at(3, c[1]), at(3, c[2])) -
            at(1, c[1]) * det2(at(2, c[0]), at(2, c[2]), at(3, c[0]), at(3, c[2])) +
            at(1, c[2]) * det2(at(2, c[0]), at(2, c[1]), at(3, c[0]), at(3, c[1]));
        total += (k % 2 == 0 ? 1 : -1) * at(0, k) * minor;
      }
      return total;
    }
  }
}

}  // namespace

Integer brute_force_order(const GramMatrix& gram, std::int64_t N, const std::optional<IntVector>& fixed,
                          std::size_t workers) {
  const std::size_t n = gram.rank();
  if (n == 0 || n > kBruteForceMaxRank || N < 2 || N > kBruteForceMaxModulus)
    throw GuardExceededError("brute force limited to rank <= 4 and 2 <= N <= 5");
  if (fixed && fixed->size() != n) throw DomainError("fixed vector length mismatch");

  std::array<std::array<std::int64_t, kBruteForceMaxRank>, kBruteForceMaxRank> G{};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) G[i][j] = mod_n(to_int64(mod(gram(i, j), Integer(static_cast<long>(N)))), N);
  Vec v{};
  if (fixed)
    for (std::size_t i = 0; i < n; ++i) v[i] = to_int64(mod((*fixed)[i], Integer(static_cast<long>(N))));

  // Every vector of (Z/N)^n together with G x.
  std::vector<Vec> vecs, gvecs;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(N);
  for (std::size_t idx = 0; idx < total; ++idx) {
    Vec x{}, gx{};
    std::size_t t = idx;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = static_cast<std::int64_t>(t % static_cast<std::size_t>(N));
      t /= static_cast<std::size_t>(N);
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < n; ++j) s += G[i][j] * x[j];
      gx[i] = s % N;
    }
    vecs.push_back(x);
    gvecs.push_back(gx);
  }
  auto pair = [n, N](const Vec& x, const Vec& gy) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * gy[i];
    return s % N;
  };

  // Column j of g must satisfy g_i^T G g_j = G_ij for all i <= j; bucket the
  // candidates for column j by their norm first.
  std::array<std::vector<std::size_t>, kBruteForceMaxRank> by_column;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t c = 0; c < vecs.size(); ++c)
      if (pair(vecs[c], gvecs[c]) == G[j][j]) by_column[j].push_back(c);

  // Counts completions whose first column is by_column[0][lo..hi).
  auto count_range = [&](std::size_t lo, std::size_t hi) {
    std::array<const Vec*, kBruteForceMaxRank> cols{};
    std::array<std::size_t, kBruteForceMaxRank> chosen{};
    std::int64_t count = 0;
    std::function<void(std::size_t)> extend = [&](std::size_t j) {
      if (j == n) {
        if (mod_n(small_det(cols, n), N) != 1) return;
        if (fixed) {
          for (std::size_t i = 0; i < n; ++i) {
            std::int64_t s = 0;
            for (std::size_t k = 0; k < n; ++k) s += (*cols[k])[i] * v[k];
            if (mod_n(s - v[i], N) != 0) return;
          }
        }
        ++count;
        return;
      }
      for (std::size_t c : by_column[j]) {
        bool ok = true;
        for (std::size_t i = 0; ok && i < j; ++i) ok = pair(vecs[chosen[i]], gvecs[c]) == G[i][j];
        if (!ok) continue;
        chosen[j] = c;
        cols[j] = &vecs[c];
        extend(j + 1);
      }
    };
    for (std::size_t k = lo; k < hi; ++k) {
      chosen[0] = by_column[0][k];
      cols[0] = &vecs[chosen[0]];
      extend(1);
    }
    return count;
  };

  const std::size_t first = by_column[0].size();
  workers = std::max<std::size_t>(1, std::min(workers, first));
  std::int64_t count = 0;
  if (workers == 1) {
    count = count_range(0, first);
  } else {
    const std::size_t chunk = (first + workers - 1) / workers;
    std::vector<std::future<std::int64_t>> parts;
    for (std::size_t lo = 0; lo < first; lo += chunk)
      parts.push_back(std::async(std::launch::async, count_range, lo, std::min(first, lo + chunk)));
    for (auto& part : parts) count += part.get();
  }
  return Integer(static_cast<long>(count));
}

Integer formula_order(OrthogonalType type, std::size_t n, std::int64_t q) {
  if (q == 2) throw DomainError("characteristic 2 is not supported");
  if (!is_prime(q)) throw DomainError("q must be an odd prime");
  if (n == 0) throw DomainError("rank must be positive");
  const Integer Q = static_cast<long>(q);
  auto qpow = [&Q](std::size_t e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), Q.get_mpz_t(), e);
    return r;
  };
  if (n % 2 == 1) {
    if (type != OrthogonalType::odd) throw DomainError("odd rank needs type 'odd'");
    const std::size_t m = n / 2;
    Integer order = qpow(m * m);
    for (std::size_t i = 1; i <= m; ++i) order *= qpow(2 * i) - 1;
    return order;
  }
  if (type == OrthogonalType::odd) throw DomainError("even rank needs type split or nonsplit");
  const std::size_t m = n / 2;
  const int eps = type == OrthogonalType::split ? 1 : -1;
  Integer order = qpow(m * (m - 1)) * (qpow(m) - eps);
  for (std::size_t i = 1; i < m; ++i) order *= qpow(2 * i) - 1;
  return order;
}

OrthogonalType classify_form(const GramMatrix& gram, std::int64_t q) {
  if (!is_prime(q) || q == 2) throw DomainError("q must be an odd prime");
  const Integer det = determinant(gram.matrix());
  const std::int64_t det_q = to_int64(mod(det, Integer(static_cast<long>(q))));
  if (det_q == 0) throw DegenerateError("form is degenerate modulo " + std::to_string(q));
  const std::size_t n = gram.rank();
  if (n % 2 == 1) return OrthogonalType::odd;
  const std::int64_t disc = (n / 2) % 2 == 0 ? det_q : q - det_q;
  return kronecker(disc, q) == 1 ? OrthogonalType::split : OrthogonalType::nonsplit;
}

FiniteOrthData orthogonal_order(const GramMatrix& gram, std::int64_t N,
                                const std::optional<IntVector>& fixed, OrderMethod method) {
  FiniteOrthData data;
  IntMatrix reduced = gram.matrix();
  for (std::size_t i = 0; i < reduced.rows(); ++i)
    for (std::size_t j = 0; j < reduced.cols(); ++j) reduced(i, j) = mod(reduced(i, j), Integer(static_cast<long>(N)));
  data.gram = GramMatrix(std::move(reduced));
  data.N = N;
  data.fixed_vector = fixed;
  data.method = method;
  if (method == OrderMethod::brute_force) {
    data.order = brute_force_order(gram, N, fixed);
  } else {
    if (fixed) throw DomainError("formula path has no stabilizer variant");
    data.order = formula_order(classify_form(gram, N), gram.rank(), N);
  }
  return data;
}

}  // namespace cubiccm

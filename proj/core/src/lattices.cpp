#include "cubiccm/lattices.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "cubiccm/errors.hpp"

namespace cubiccm {

GramMatrix::GramMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  if (!entries_.is_square()) throw std::invalid_argument("Gram matrix must be square");
  if (!entries_.is_symmetric()) throw std::invalid_argument("Gram matrix must be symmetric");
}

GramMatrix GramMatrix::diagonal(const IntVector& entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return GramMatrix(std::move(m));
}

Integer GramMatrix::pair(const IntVector& x, const IntVector& y) const {
  if (x.size() != rank() || y.size() != rank())
    throw std::invalid_argument("vector length does not match lattice rank");
  Integer s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (sgn(x[i]) == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < rank(); ++j) row += entries_(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

namespace {

GramMatrix e8() {
  // Root basis: simple roots 0..6 form a chain, root 7 hangs off root 4.
  IntMatrix m(8, 8);
  for (std::size_t i = 0; i < 8; ++i) m(i, i) = 2;
  for (std::size_t i = 0; i + 1 < 7; ++i) m(i, i + 1) = m(i + 1, i) = -1;
  m(4, 7) = m(7, 4) = -1;
  return GramMatrix(std::move(m));
}

GramMatrix repeat(const GramMatrix& g, std::size_t times) {
  GramMatrix out;
  for (std::size_t i = 0; i < times; ++i) out = direct_sum(out, g);
  return out;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

}  // namespace

GramMatrix make_standard(const std::string& raw_name, std::optional<std::size_t> n) {
  const std::string name = trim(raw_name);
  if (name == "U") return GramMatrix(IntMatrix{{0, 1}, {1, 0}});
  if (name == "A2") return GramMatrix(IntMatrix{{2, 1}, {1, 2}});
  if (name == "E8") return e8();
  if (name == "diag+" || name == "diag-") {
    if (!n || *n == 0) throw DomainError("diagonal family needs a positive n");
    return GramMatrix::diagonal(IntVector(*n, Integer(name == "diag+" ? 1 : -1)));
  }
  if (name == "L0") {
    IntVector d(23, Integer(-1));
    d[0] = d[1] = 1;
    return GramMatrix::diagonal(d);
  }
  if (name == "L") {
    return direct_sum(direct_sum(repeat(make_standard("E8(-1)"), 2), repeat(make_standard("U"), 2)),
                      make_standard("A2(-1)"));
  }
  if (name.rfind("diag(", 0) == 0 && name.back() == ')') {
    const IntVector entries = parse_int_vector(name.substr(5, name.size() - 6));
    if (entries.empty()) throw DomainError("empty diagonal");
    return GramMatrix::diagonal(entries);
  }
  // Rescaled family, e.g. U(7), A2(-1), E8(-1).
  if (const auto open = name.rfind('('); open != std::string::npos && open > 0 && name.back() == ')') {
    Integer m;
    if (m.set_str(trim(name.substr(open + 1, name.size() - open - 2)), 10) != 0)
      throw DomainError("unknown lattice name: " + name);
    return rescale(make_standard(name.substr(0, open)), m);
  }
  throw DomainError("unknown lattice name: " + name);
}

GramMatrix direct_sum(const GramMatrix& a, const GramMatrix& b) {
  const std::size_t n = a.rank(), m = b.rank();
  IntMatrix out(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(n + i, n + j) = b(i, j);
  return GramMatrix(std::move(out));
}

GramMatrix rescale(const GramMatrix& g, const Integer& m) {
  if (sgn(m) == 0) throw DomainError("rescale factor must be nonzero");
  IntMatrix out = g.matrix();
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) *= m;
  return GramMatrix(std::move(out));
}

Inertia inertia(const GramMatrix& g) {
  const std::size_t n = g.rank();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = g(i, j);

  Inertia result;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a[p][p]) == 0) ++p;
      if (p < n) {
        std::swap(a[k], a[p]);
        for (auto& row : a) std::swap(row[k], row[p]);
      } else {
        // All remaining diagonal entries vanish: x_k += x_j turns a nonzero
        // off-diagonal a[k][j] into the diagonal entry 2 a[k][j].
        p = k + 1;
        while (p < n && sgn(a[k][p]) == 0) ++p;
        if (p == n) {
          ++result.zero;
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) a[k][j] += a[p][j];
        for (std::size_t i = 0; i < n; ++i) a[i][k] += a[i][p];
      }
    }
    const Rational pivot = a[k][k];
    const std::vector<Rational> pivot_row = a[k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(pivot_row[i]) == 0) continue;
      const Rational f = pivot_row[i] / pivot;
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= f * pivot_row[j];
      a[i][k] = 0;
      a[k][i] = 0;
    }
    (sgn(pivot) > 0 ? result.positive : result.negative) += 1;
  }
  return result;
}

LatticeInvariants invariants(const GramMatrix& g) {
  LatticeInvariants inv;
  inv.rank = g.rank();
  inv.determinant = determinant(g.matrix());
  if (sgn(inv.determinant) == 0) throw DegenerateError("degenerate Gram matrix (det = 0)");
  const Inertia in = inertia(g);
  inv.signature = {in.positive, in.negative};
  inv.even = true;
  for (std::size_t i = 0; i < g.rank(); ++i)
    if (mpz_odd_p(g(i, i).get_mpz_t())) inv.even = false;
  for (const auto& d : smith_diagonal(g.matrix()))
    if (d > 1) inv.disc_group.push_back(d);
  return inv;
}

bool is_primitive_vector(const IntVector& w) {
  Integer g = 0;
  for (const auto& x : w) g = gcd(g, x);
  return g == 1;
}

IntMatrix orthogonal_complement_basis(const GramMatrix& g, const std::vector<IntVector>& vectors) {
  IntMatrix pairing(vectors.size(), g.rank());
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != g.rank()) throw std::invalid_argument("vector length mismatch");
    for (std::size_t j = 0; j < g.rank(); ++j)
      for (std::size_t i = 0; i < g.rank(); ++i) pairing(r, j) += vectors[r][i] * g(i, j);
  }
  return integer_kernel(pairing);
}

GramMatrix restrict_to(const GramMatrix& g, const IntMatrix& basis) {
  return GramMatrix(basis.transposed() * g.matrix() * basis);
}

GramMatrix orthogonal_complement(const GramMatrix& g, const IntVector& w) {
  if (w.size() != g.rank()) throw std::invalid_argument("vector length mismatch");
  if (!is_primitive_vector(w)) throw DomainError("complement vector must be primitive and nonzero");
  if (sgn(g.norm(w)) == 0) throw DomainError("complement vector must be anisotropic");
  return restrict_to(g, orthogonal_complement_basis(g, {w}));
}

IntVector l0_distinguished_vector() {
  const GramMatrix l0 = make_standard("L0");
  constexpr int kPositive = 2;
  constexpr int kRank = 23;
  constexpr int kTarget = -3;
  // An even complement of a norm -3 vector in an odd unimodular lattice forces
  // the vector to be characteristic, so only odd coordinates are visited.
  constexpr int kValues[] = {-3, -1, 1, 3};

  std::vector<int> coords(kRank);
  std::optional<IntVector> found;
  std::function<void(int, int)> search = [&](int k, int partial) {
    if (found) return;
    if (k == kRank) {
      if (partial != kTarget) return;
      IntVector v(coords.begin(), coords.end());
      const GramMatrix comp = orthogonal_complement(l0, v);
      for (std::size_t i = 0; i < comp.rank(); ++i)
        if (mpz_odd_p(comp(i, i).get_mpz_t())) return;
      found = std::move(v);
      return;
    }
    const int pos_left = std::max(0, kPositive - k);
    const int neg_left = kRank - std::max(k, kPositive);
    if (partial + pos_left - 9 * neg_left > kTarget) return;
    if (partial + 9 * pos_left - neg_left < kTarget) return;
    for (int x : kValues) {
      coords[static_cast<std::size_t>(k)] = x;
      search(k + 1, partial + (k < kPositive ? x * x : -x * x));
      if (found) return;
    }
  };
  search(0, 0);
  if (!found) throw InvariantViolation("no distinguished vector in L0");
  return *found;
}

}  // namespace cubiccm

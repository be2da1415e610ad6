// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cubiccm/cubiccm.hpp"
#include "oracles.hpp"

using namespace cubiccm;

namespace {

class Failures {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++count_;
    if (shown_.size() < 5) shown_.push_back(what);
  }
  std::size_t count() const { return count_; }
  const std::vector<std::string>& shown() const { return shown_; }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> shown_;
};

template <class T>
std::string str(const T& x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0: no limit
  std::function<void(Failures&)> body;
};

bool same_invariants(const LatticeInvariants& a, const LatticeInvariants& b) {
  return a.rank == b.rank && a.signature == b.signature && abs(a.determinant) == abs(b.determinant) &&
         a.even == b.even && a.disc_group == b.disc_group;
}

void lattice_fixtures(Failures& f) {
  const LatticeInvariants l0 = invariants(make_standard("L0"));
  f.expect(l0.rank == 23 && l0.signature == Signature{2, 21} && l0.determinant == -1 && !l0.even &&
               l0.disc_group.empty(),
           "invariants(L0)");
  const LatticeInvariants l = invariants(make_standard("L"));
  f.expect(l.rank == 22 && l.signature == Signature{2, 20} && l.determinant == 3 && l.even &&
               l.disc_group == IntVector{3},
           "invariants(L)");
  const IntVector v = l0_distinguished_vector();
  const GramMatrix l0g = make_standard("L0");
  f.expect(l0g.norm(v) == -3, "v has norm -3");
  f.expect(same_invariants(invariants(orthogonal_complement(l0g, v)), l), "v-perp in L0 vs L");
}

void klein(Failures& f) {
  const GramMatrix t = direct_sum(make_standard("U(7)"), GramMatrix(IntMatrix{{-2, 1}, {1, 10}}));
  const LatticeInvariants inv = invariants(t);
  f.expect(inv.signature == Signature{2, 2}, "signature (2,2)");
  f.expect(inv.determinant == 1029, "det 1029, got " + inv.determinant.get_str());
  f.expect(inv.even, "even");
  f.expect(23 - inv.rank == 19, "algebraic rank 19");
  f.expect(run_fixture("klein").passed, "klein fixture report");
}

void cm_field(Failures& f) {
  const BinaryEvenForm t = BinaryEvenForm::from_gram(GramMatrix(IntMatrix{{-22, 11}, {11, -22}}));
  const BinaryEvenForm pos{-t.a, -t.b, -t.c};
  f.expect(endomorphism_field(pos) == -3, "endomorphism field");
  f.expect(endomorphism_field(t) == -3, "endomorphism field (negative definite input)");
  const auto g = finite_isometry(t, 2);
  f.expect(g.has_value(), "finite isometry exists");
  if (!g) return;
  f.expect(*g == IntMatrix{{1, -1}, {1, 0}}, "isometry is [[1,-1],[1,0]]");
  f.expect(matrix_order(*g) == 6, "order 6");
  const auto mp = period_eigenvalue(*g, period_points(pos).first).min_poly();
  f.expect(mp[0] == 1 && mp[1] == -1 && mp[2] == 1, "minimal polynomial x^2 - x + 1");
}

void embedding_sweep(Failures& f) {
  std::size_t fields = 0;
  for (std::int64_t D = 3; D <= 200; ++D) {
    std::optional<QuadField> K;
    try {
      K = QuadField::from_discriminant(-D);
    } catch (const DomainError&) {
      continue;
    }
    ++fields;
    const EmbeddingWitness w = embed_trace_form(*K);
    f.expect(w.gram_check.matrix() == trace_form_gram(*K).matrix(), "gram_check at D = " + str(D));
    f.expect(w.primitive, "primitive at D = " + str(D));
    f.expect(w.ambient.matrix() == make_standard("L").matrix(), "ambient is L at D = " + str(D));
  }
  f.expect(fields == 62, "62 fundamental discriminants, saw " + str(fields));
}

void d7_oracle(Failures& f) {
  const auto chi = canonical_character(QuadField::from_discriminant(-7));
  const auto q = qexpansion(chi, 200);
  const auto eta = eta_product({{1, 3}, {7, 3}}, 200);
  for (std::size_t n = 1; n <= 200; ++n)
    f.expect(q[n] == eta[n - 1], "c_" + str(n) + " = " + q[n].get_str() + " vs eta " + eta[n - 1].get_str());
  f.expect(q[1] == 1 && q[2] == -3 && q[3] == 0 && q[4] == 5, "(c1..c4) = (1,-3,0,5)");
  f.expect(q[7] == -7, "c7 = -7");
}

void newform_suite(Failures& f) {
  const std::int64_t small = 1000, large = 10000;
  const auto primes = primes_up_to(large);
  for (std::int64_t D : kSupportedD) {
    const auto chi = canonical_character(QuadField::from_discriminant(-D));
    const QuadField& K = chi.field();
    const auto q = qexpansion(chi, large);
    const auto c = [&q](std::int64_t n) -> const Integer& { return q[static_cast<std::size_t>(n)]; };
    const std::string tag = "D = " + str(D) + ": ";

    for (std::int64_t p : primes) {
      const Splitting s = splitting_type(p, K);
      if (p <= small && s == Splitting::inert) {
        f.expect(c(p) == 0, tag + "c_p != 0 at inert p = " + str(p));
        // Odd power of an inert prime kills the coefficient.
        for (std::int64_t n = p; n <= small; n += p) {
          std::int64_t e = 0, m = n;
          while (m % p == 0) m /= p, ++e;
          if (e % 2 == 1) f.expect(c(n) == 0, tag + "c_n != 0 at n = " + str(n));
        }
      }
      if (s == Splitting::split && chi.level() % p != 0)
        f.expect(abs(c(p)) <= 2 * p, tag + "|c_p| > 2p at p = " + str(p));
    }

    for (std::int64_t m = 2; m <= small; ++m)
      for (std::int64_t n = m + 1; m * n <= small; ++n)
        if (std::gcd(m, n) == 1)
          f.expect(c(m * n) == c(m) * c(n), tag + "multiplicativity at " + str(m) + "*" + str(n));

    for (std::int64_t p : primes) {
      if (p > small) break;
      if (chi.level() % p == 0) continue;
      const Integer e = Integer(static_cast<long>(epsilon_sign(chi, p))) * p * p;
      // c_{p^(k+1)} = c_p c_{p^k} - eps(p) p^2 c_{p^(k-1)}
      for (std::int64_t prev = 1, cur = p; cur * p <= small; prev = cur, cur *= p)
        f.expect(c(cur * p) == c(p) * c(cur) - e * c(prev), tag + "Euler recursion at " + str(cur * p));
    }
  }
}

void frobenius_consistency(Failures& f) {
  for (std::int64_t D : kSupportedD) {
    const auto chi = canonical_character(QuadField::from_discriminant(-D));
    const QuadField& K = chi.field();
    const auto q = qexpansion(chi, 1000);
    const std::string tag = "D = " + str(D) + ": ";
    for (std::int64_t p : primes_up_to(1000)) {
      const FrobeniusRow r = frob_row(p, chi);
      if (chi.level() % p == 0) {
        f.expect(r.bad && !r.trace && !r.det, tag + "bad prime reported at p = " + str(p));
        continue;
      }
      f.expect(!r.bad && r.trace && r.det, tag + "good row at p = " + str(p));
      if (!r.trace || !r.det) continue;
      f.expect(*r.trace == q[static_cast<std::size_t>(p)], tag + "trace != c_p at p = " + str(p));
      const Integer p2 = Integer(static_cast<long>(p)) * p;
      if (r.splitting == Splitting::split) {
        f.expect(*r.det == epsilon_sign(chi, p) * p2, tag + "split det at p = " + str(p));
      } else {
        const FieldElement psi_p = evaluate(chi, ideals_of_norm(p * p, K).at(0));
        f.expect(psi_p.is_rational() && *r.det == -psi_p.x(), tag + "inert det at p = " + str(p));
        f.expect(*r.det == epsilon_sign(chi, p) * p2, tag + "inert det vs eps(p) p^2 at p = " + str(p));
        // Euler recursion at k = 1 with c_p = 0: c_{p^2} = -eps(p) p^2 = -det.
        if (p * p <= 1000) f.expect(q[static_cast<std::size_t>(p * p)] == -*r.det, tag + "c_{p^2} at p = " + str(p));
      }
    }
    for (const auto& row : l_shift_table(chi, 1000)) {
      f.expect(row.rho_trace == row.p * row.a_p, tag + "rho trace at p = " + str(row.p));
      f.expect(row.rho_det == row.eps_p2 * row.p * row.p, tag + "rho det at p = " + str(row.p));
      f.expect(row.consistent, tag + "row consistency at p = " + str(row.p));
    }
  }
}

void class_enumeration(Failures& f) {
  f.expect(class_list(3).size() == 1, "det 3");
  f.expect(class_list(4).size() == 1, "det 4");
  f.expect(class_list(15).size() == 2, "det 15");
  for (std::int64_t det = 1; det <= 400; ++det) {
    const std::size_t ours = class_list(det).size();
    const std::size_t orbits = oracle::sl2_orbit_count(det);
    f.expect(ours == orbits, "det " + str(det) + ": " + str(ours) + " classes vs " + str(orbits) + " orbits");
  }
}

// All symmetric n x n matrices over Z/q, as Gram matrices with entries in [0, q).
std::vector<GramMatrix> all_forms(std::size_t n, std::int64_t q) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) slots.emplace_back(i, j);
  std::vector<GramMatrix> out;
  std::vector<std::int64_t> digits(slots.size(), 0);
  for (;;) {
    IntMatrix m(n, n);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      m(slots[k].first, slots[k].second) = digits[k];
      m(slots[k].second, slots[k].first) = digits[k];
    }
    if (mod(determinant(m), Integer(static_cast<long>(q))) != 0) out.emplace_back(std::move(m));
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == q) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  return out;
}

void finite_orthogonal(Failures& f) {
  for (std::int64_t q : {3, 5}) {
    for (std::size_t n : {2, 3}) {
      for (const GramMatrix& g : all_forms(n, q)) {
        const Integer brute = brute_force_order(g, q);
        const Integer formula = formula_order(classify_form(g, q), n, q);
        f.expect(brute == formula, "q = " + str(q) + ", gram " + format_matrix(g.matrix()) + ": " +
                                       brute.get_str() + " vs " + formula.get_str());
        // Stabilizers of the basis vectors and of the all-ones vector divide the group order.
        std::vector<IntVector> fixed;
        for (std::size_t i = 0; i < n; ++i) {
          IntVector e(n);
          e[i] = 1;
          fixed.push_back(e);
        }
        fixed.emplace_back(n, Integer(1));
        for (const auto& v : fixed) {
          const Integer stab = brute_force_order(g, q, v);
          f.expect(sgn(stab) > 0 && mpz_divisible_p(brute.get_mpz_t(), stab.get_mpz_t()),
                   "stabilizer index at gram " + format_matrix(g.matrix()));
        }
      }
    }
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "lattice fixtures L0, L and v-perp", 1.0, lattice_fixtures},
      {2, "Klein transcendental lattice", 0, klein},
      {3, "CM field and order-6 isometry", 0, cm_field},
      {4, "trace-form embedding sweep, D <= 200", 10.0, embedding_sweep},
      {5, "D = 7 q-expansion vs eta product, n <= 200", 5.0, d7_oracle},
      {6, "newform properties for all nine D", 60.0, newform_suite},
      {7, "Frobenius rows and L-shift, p <= 1000", 0, frobenius_consistency},
      {8, "class numbers vs SL2(Z) orbits, det <= 400", 30.0, class_enumeration},
      {9, "finite orthogonal groups over F3 and F5", 0, finite_orthogonal},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Failures f;
    const auto start = std::chrono::steady_clock::now();
    std::string crash;
    try {
      c.body(f);
    } catch (const std::exception& e) {
      crash = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool slow = c.limit_seconds > 0 && secs > c.limit_seconds;
    const bool ok = f.count() == 0 && crash.empty() && !slow;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " (" << timing;
    if (c.limit_seconds > 0) std::cout << ", limit " << c.limit_seconds << "s";
    std::cout << ")\n";
    if (!crash.empty()) std::cout << "      exception: " << crash << '\n';
    if (slow) std::cout << "      time limit exceeded\n";
    if (f.count() > 0) {
      std::cout << "      " << f.count() << " violation(s)\n";
      for (const auto& s : f.shown()) std::cout << "      - " << s << '\n';
    }
    if (!ok) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion(s) failed") << '\n';
  return failed == 0 ? 0 : 1;
}

#include "cubiccm/quadfield.hpp"

#include <algorithm>
#include <stdexcept>

#include "cubiccm/binforms.hpp"
#include "cubiccm/errors.hpp"

namespace cubiccm {

bool is_squarefree(std::int64_t n) {
  if (n < 1) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::int64_t fundamental_discriminant(std::int64_t d) {
  if (!is_squarefree(d)) throw DomainError("d must be a squarefree positive integer");
  return ((-d) % 4 + 4) % 4 == 1 ? -d : -4 * d;
}

namespace {

int jacobi_odd(std::int64_t a, std::int64_t n) {
  // n odd positive.
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

}  // namespace

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  while (n % 2 == 0) {
    n /= 2;
    if (a % 2 == 0) return 0;
    const std::int64_t r = ((a % 8) + 8) % 8;
    if (r == 3 || r == 5) result = -result;
  }
  if (n == 1) return result;
  return result * jacobi_odd(a, n);
}

QuadField::QuadField(std::int64_t D, std::int64_t d)
    : D_(D), d_(d), class_number_(class_list(Integer(static_cast<long>(D))).size()) {}

QuadField QuadField::from_d(std::int64_t d) {
  return QuadField(-fundamental_discriminant(d), d);
}

QuadField QuadField::from_discriminant(std::int64_t neg_disc) {
  if (neg_disc >= 0) throw DomainError("discriminant must be negative");
  const std::int64_t D = -neg_disc;
  if (D % 4 == 3 && is_squarefree(D)) return QuadField(D, D);
  if (D % 4 == 0) {
    const std::int64_t d = D / 4;
    if ((d % 4 == 1 || d % 4 == 2) && is_squarefree(d)) return QuadField(D, d);
  }
  throw DomainError("not a fundamental discriminant: " + std::to_string(neg_disc));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  const Rational n = o.norm();
  if (sgn(n) == 0) throw DomainError("division by zero in quadratic field");
  const FieldElement num = *this * o.conjugate();
  return {num.x_ / n, num.y_ / n, d_};
}

std::string to_string(const FieldElement& z) {
  if (z.is_rational()) return z.x().get_str();
  std::string out;
  if (sgn(z.x()) != 0) out = z.x().get_str() + (sgn(z.y()) < 0 ? "-" : "+");
  else if (sgn(z.y()) < 0) out = "-";
  const Rational ay = abs(z.y());
  if (ay != 1) out += ay.get_str() + "*";
  return out + "sqrt(-" + std::to_string(z.d()) + ")";
}

std::string to_string(Splitting s) {
  switch (s) {
    case Splitting::split: return "split";
    case Splitting::inert: return "inert";
    case Splitting::ramified: return "ramified";
  }
  return "?";
}

Splitting splitting_type(std::int64_t p, const QuadField& K) {
  if (!is_prime(p)) throw DomainError("splitting_type needs a prime, got " + std::to_string(p));
  if (K.D() % p == 0) return Splitting::ramified;
  return kronecker(K.discriminant(), p) == 1 ? Splitting::split : Splitting::inert;
}

FieldElement integral_basis_generator(const QuadField& K) {
  if (K.D() == K.d()) return {Rational(1, 2), Rational(1, 2), K.d()};
  return {Rational(0), Rational(1), K.d()};
}

GramMatrix trace_form_gram(const QuadField& K) {
  const FieldElement basis[2] = {FieldElement::rational(1, K.d()), integral_basis_generator(K)};
  IntMatrix m(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const Rational t = (basis[i] * basis[j].conjugate()).trace();
      if (!is_integer(t)) throw InvariantViolation("trace form is not integral");
      m(i, j) = t.get_num();
    }
  return GramMatrix(std::move(m));
}

namespace {

Integer normalize_b(const Integer& a, const Integer& b) {
  Integer r = mod(b, 2 * a);
  if (r > a) r -= 2 * a;
  return r;
}

bool valid_primitive(const QuadField& K, const Integer& a, const Integer& b) {
  const Integer D = static_cast<long>(K.D());
  return mpz_divisible_p(Integer(b * b + D).get_mpz_t(), Integer(4 * a).get_mpz_t()) != 0;
}

// 128-bit products for modular arithmetic on 64-bit operands.
__extension__ typedef __int128 Wide;

std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t m) {
  Wide result = 1, b = ((base % m) + m) % m;
  while (e > 0) {
    if (e & 1) result = result * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

// Square root of a quadratic residue modulo an odd prime (Tonelli-Shanks).
std::int64_t sqrt_mod(std::int64_t n, std::int64_t p) {
  n = ((n % p) + p) % p;
  if (n == 0) return 0;
  std::int64_t q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::int64_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::int64_t m = s, c = pow_mod(z, q, p), t = pow_mod(n, q, p), r = pow_mod(n, (q + 1) / 2, p);
  while (t != 1) {
    std::int64_t i = 0, t2 = t;
    while (t2 != 1) {
      t2 = static_cast<std::int64_t>(static_cast<Wide>(t2) * t2 % p);
      ++i;
    }
    std::int64_t b = c;
    for (std::int64_t j = 0; j < m - i - 1; ++j) b = static_cast<std::int64_t>(static_cast<Wide>(b) * b % p);
    m = i;
    c = static_cast<std::int64_t>(static_cast<Wide>(b) * b % p);
    t = static_cast<std::int64_t>(static_cast<Wide>(t) * c % p);
    r = static_cast<std::int64_t>(static_cast<Wide>(r) * b % p);
  }
  return r;
}

// b with b^2 = -D (mod 4p) and b = D (mod 2), for p prime not inert.
std::int64_t prime_b(std::int64_t p, const QuadField& K) {
  const std::int64_t D = K.D();
  if (p == 2) {
    for (std::int64_t b = -1; b <= 2; ++b)
      if (((b * b + D) % 8) == 0) return b;
    throw InvariantViolation("no prime ideal above 2");
  }
  std::int64_t r = sqrt_mod(-D, p);
  if ((r - D) % 2 != 0) r += p;
  return r;
}

// Primitive ideal P^e for the prime P = (p, b) (P^e is primitive for split or
// e = 1 ramified).
IdealRep prime_power(const QuadField& K, std::int64_t p, const Integer& b, int e) {
  Integer a = static_cast<long>(p);
  Integer cur = normalize_b(a, b);
  for (int k = 2; k <= e; ++k) {
    const Integer step = 2 * a;  // 2 p^(k-1)
    const Integer next_a = a * p;
    bool lifted = false;
    for (std::int64_t j = 0; j < p; ++j) {
      const Integer cand = cur + step * static_cast<long>(j);
      if (valid_primitive(K, next_a, cand)) {
        cur = normalize_b(next_a, cand);
        lifted = true;
        break;
      }
    }
    if (!lifted) throw InvariantViolation("Hensel lift failed for prime ideal power");
    a = next_a;
  }
  return {1, a, cur};
}

// Product of ideals whose primitive parts have coprime norms.
IdealRep combine(const IdealRep& x, const IdealRep& y) {
  if (x.a == 1) return {x.content * y.content, y.a, y.b};
  if (y.a == 1) return {x.content * y.content, x.a, x.b};
  // b = x.b (mod 2 x.a), b = y.b (mod 2 y.a); both share the parity of D.
  Integer inv;
  mpz_invert(inv.get_mpz_t(), x.a.get_mpz_t(), y.a.get_mpz_t());
  const Integer t = mod(inv * ((y.b - x.b) / 2), y.a);
  const Integer a = x.a * y.a;
  return {x.content * y.content, a, normalize_b(a, x.b + 2 * x.a * t)};
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> f;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

Integer ipow(std::int64_t p, int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

// Ideals of norm p^e.
std::vector<IdealRep> local_ideals(std::int64_t p, int e, const QuadField& K) {
  std::vector<IdealRep> out;
  switch (splitting_type(p, K)) {
    case Splitting::inert:
      if (e % 2 == 0) out.push_back({ipow(p, e / 2), 1, K.D() % 2});
      break;
    case Splitting::ramified: {
      IdealRep I{ipow(p, e / 2), 1, K.D() % 2};
      if (e % 2) {
        const IdealRep P = prime_power(K, p, prime_b(p, K), 1);
        I.a = P.a;
        I.b = P.b;
      }
      out.push_back(I);
      break;
    }
    case Splitting::split: {
      const Integer b = prime_b(p, K);
      for (int i = 0; i <= e; ++i) {
        const int lo = std::min(i, e - i);
        const int excess = std::abs(2 * i - e);
        IdealRep I{ipow(p, lo), 1, K.D() % 2};
        if (excess > 0) {
          const IdealRep P = prime_power(K, p, i > e - i ? b : Integer(-b), excess);
          I.a = P.a;
          I.b = P.b;
        }
        out.push_back(I);
      }
      break;
    }
  }
  return out;
}

bool ideal_less(const IdealRep& x, const IdealRep& y) {
  if (x.a != y.a) return x.a < y.a;
  if (x.b != y.b) return x.b < y.b;
  return x.content < y.content;
}

}  // namespace

std::string to_string(const IdealRep& I) {
  std::string s = "(" + I.a.get_str() + "," + I.b.get_str() + ")";
  if (I.content != 1) s = I.content.get_str() + "*" + s;
  return s;
}

IdealRep make_ideal(const QuadField& K, const Integer& content, const Integer& a, const Integer& b) {
  if (content < 1 || a < 1) throw DomainError("ideal content and norm must be positive");
  if (!valid_primitive(K, a, b)) throw DomainError("b^2 != -D (mod 4a): not an ideal");
  return {content, a, normalize_b(a, b)};
}

IdealRep unit_ideal(const QuadField& K) { return {1, 1, K.D() % 2}; }

IdealRep conjugate(const IdealRep& I, const QuadField&) {
  return {I.content, I.a, normalize_b(I.a, -I.b)};
}

std::pair<FieldElement, FieldElement> ideal_generators(const IdealRep& I, const QuadField& K) {
  const Rational c(I.content);
  const FieldElement first = FieldElement::rational(c * I.a, K.d());
  const FieldElement second{c * Rational(I.b) / 2, c * Rational(K.root_scale()) / 2, K.d()};
  return {first, second};
}

bool contains(const IdealRep& I, const QuadField& K, const FieldElement& z) {
  // z / content = u a + v (b + s sqrt(-d)) / 2.
  const Rational x = z.x() / I.content, y = z.y() / I.content;
  const Rational v = 2 * y / K.root_scale();
  if (!is_integer(v)) return false;
  const Rational u = (x - v * I.b / 2) / I.a;
  return is_integer(u);
}

bool generates(const FieldElement& alpha, const IdealRep& I, const QuadField& K) {
  if (alpha.is_zero() || !alpha.is_integral() || !contains(I, K, alpha)) return false;
  const auto [g1, g2] = ideal_generators(I, K);
  return (g1 / alpha).is_integral() && (g2 / alpha).is_integral();
}

std::vector<IdealRep> primes_above(std::int64_t p, const QuadField& K) {
  switch (splitting_type(p, K)) {
    case Splitting::inert: return {IdealRep{static_cast<long>(p), 1, K.D() % 2}};
    case Splitting::ramified: return {prime_power(K, p, prime_b(p, K), 1)};
    case Splitting::split: {
      const Integer b = prime_b(p, K);
      std::vector<IdealRep> out{prime_power(K, p, b, 1), prime_power(K, p, -b, 1)};
      std::sort(out.begin(), out.end(), ideal_less);
      return out;
    }
  }
  return {};
}

std::vector<IdealRep> ideals_of_norm(std::int64_t n, const QuadField& K) {
  if (n < 1) throw DomainError("ideal norm must be positive");
  std::vector<IdealRep> acc{unit_ideal(K)};
  for (const auto& [p, e] : factorize(n)) {
    const auto local = local_ideals(p, e, K);
    std::vector<IdealRep> next;
    for (const auto& x : acc)
      for (const auto& y : local) next.push_back(combine(x, y));
    acc = std::move(next);
    if (acc.empty()) break;
  }
  std::sort(acc.begin(), acc.end(), ideal_less);
  return acc;
}

std::optional<FieldElement> principal_generator(const IdealRep& I, const QuadField& K) {
  if (K.class_number() != 1)
    throw UnsupportedFieldError("principal generators need class number 1 (D = " +
                                std::to_string(K.D()) + " has h = " +
                                std::to_string(K.class_number()) + ")");
  // Norm form of the primitive part on (a, omega): a u^2 + b u v + c v^2 with
  // c = (b^2 + D) / 4a. A generator is a lattice point with value 1.
  const Integer D = static_cast<long>(K.D());
  const Integer c = (I.b * I.b + D) / (4 * I.a);
  const auto [g1, g2] = ideal_generators({1, I.a, I.b}, K);
  const Integer bound = sqrt(I.a * D) + 2;
  for (Integer v = 0; v <= bound; ++v) {
    for (int sign : {1, -1}) {
      if (sign < 0 && sgn(v) == 0) continue;
      const Integer vv = sign * v;
      // Roots u of a u^2 + b v u + (c v^2 - 1) = 0; discriminant 4a - D v^2.
      const Integer disc = 4 * I.a - D * vv * vv;
      if (sgn(disc) < 0) return std::nullopt;
      if (!mpz_perfect_square_p(disc.get_mpz_t())) continue;
      const Integer r = sqrt(disc);
      for (int rs : {1, -1}) {
        const Integer num = -I.b * vv + rs * r;
        if (!mpz_divisible_p(num.get_mpz_t(), Integer(2 * I.a).get_mpz_t())) continue;
        const Integer u = num / (2 * I.a);
        const FieldElement u_elem = FieldElement::rational(Rational(u), K.d());
        const FieldElement v_elem = FieldElement::rational(Rational(vv), K.d());
        const FieldElement alpha =
            FieldElement::rational(Rational(I.content), K.d()) * (u_elem * g1 + v_elem * g2);
        return alpha;
      }
    }
  }
  return std::nullopt;
}

std::vector<FieldElement> units(const QuadField& K) {
  const std::int64_t d = K.d();
  std::vector<FieldElement> out{FieldElement::rational(1, d), FieldElement::rational(-1, d)};
  if (K.D() == 4) {
    out.push_back({0, 1, d});
    out.push_back({0, -1, d});
  } else if (K.D() == 3) {
    for (int sx : {1, -1})
      for (int sy : {1, -1}) out.push_back({Rational(sx, 2), Rational(sy, 2), d});
  }
  return out;
}

FieldElement rx_action(const FieldElement& alpha) {
  if (alpha.is_zero()) throw DomainError("rx_action needs a nonzero element");
  return alpha.conjugate() / alpha;
}

}  // namespace cubiccm

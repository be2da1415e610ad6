#include "cubiccm/binforms.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <tuple>

#include "cubiccm/errors.hpp"

namespace cubiccm {

GramMatrix BinaryEvenForm::gram() const {
  IntMatrix m(2, 2);
  m(0, 0) = 2 * a;
  m(0, 1) = m(1, 0) = b;
  m(1, 1) = 2 * c;
  return GramMatrix(std::move(m));
}

BinaryEvenForm BinaryEvenForm::from_gram(const GramMatrix& g) {
  if (g.rank() != 2) throw std::invalid_argument("binary form needs a rank-2 Gram matrix");
  if (mpz_odd_p(g(0, 0).get_mpz_t()) || mpz_odd_p(g(1, 1).get_mpz_t()))
    throw std::invalid_argument("Gram matrix is not even");
  return {g(0, 0) / 2, g(0, 1), g(1, 1) / 2};
}

std::string to_string(const BinaryEvenForm& f) {
  return "(" + f.a.get_str() + "," + f.b.get_str() + "," + f.c.get_str() + ")";
}

NormalizedForm normalize_definite(const BinaryEvenForm& f) {
  const Integer det = f.determinant();
  if (sgn(det) == 0) throw DegenerateError("degenerate binary form " + to_string(f));
  if (sgn(det) < 0) throw IndefiniteError("indefinite binary form " + to_string(f));
  if (f.a > 0) return {f, false};
  return {{-f.a, -f.b, -f.c}, true};
}

namespace {

void require_positive_definite(const BinaryEvenForm& f) {
  const Integer det = f.determinant();
  if (sgn(det) == 0) throw DegenerateError("degenerate binary form " + to_string(f));
  if (sgn(det) < 0 || sgn(f.a) <= 0)
    throw IndefiniteError("binary form is not positive definite: " + to_string(f));
}

// Right-multiplies the accumulated transform by the 2x2 matrix [[p, q], [r, s]].
void compose(IntMatrix& t, long p, const Integer& q, long r, long s) {
  const Integer t00 = t(0, 0), t01 = t(0, 1), t10 = t(1, 0), t11 = t(1, 1);
  t(0, 0) = t00 * p + t01 * r;
  t(0, 1) = t00 * q + t01 * s;
  t(1, 0) = t10 * p + t11 * r;
  t(1, 1) = t10 * q + t11 * s;
}

}  // namespace

bool is_reduced(const BinaryEvenForm& f) {
  if (!f.positive_definite()) return false;
  if (abs(f.b) > f.a || f.a > f.c) return false;
  if ((abs(f.b) == f.a || f.a == f.c) && f.b < 0) return false;
  return true;
}

Reduction reduce_with_transform(const BinaryEvenForm& input) {
  require_positive_definite(input);
  BinaryEvenForm f = input;
  IntMatrix t = IntMatrix::identity(2);
  for (;;) {
    // Translate x -> x + k y so that b lands in (-a, a].
    const Integer two_a = 2 * f.a;
    Integer k = floor_div(f.a - f.b, two_a);
    if (sgn(k) != 0) {
      f = {f.a, f.b + two_a * k, f.a * k * k + f.b * k + f.c};
      compose(t, 1, k, 0, 1);
    }
    if (f.a > f.c) {
      // (x, y) -> (-y, x)
      f = {f.c, -f.b, f.a};
      compose(t, 0, Integer(-1), 1, 0);
      continue;
    }
    break;
  }
  if (f.a == f.c && f.b < 0) {
    f = {f.c, -f.b, f.a};
    compose(t, 0, Integer(-1), 1, 0);
  }
  return {f, t};
}

BinaryEvenForm reduce(const BinaryEvenForm& f) { return reduce_with_transform(f).form; }

std::vector<BinaryEvenForm> class_list(const Integer& det, std::size_t partitions) {
  if (sgn(det) <= 0) throw DomainError("class_list needs a positive determinant");
  // Reduced forms satisfy 3a^2 <= 4ac - b^2.
  Integer a_max = sqrt(det / 3);
  auto scan = [&det](Integer lo, Integer hi) {
    std::vector<BinaryEvenForm> out;
    for (Integer a = lo; a <= hi; ++a) {
      for (Integer b = -a + 1; b <= a; ++b) {
        const Integer num = det + b * b;
        if (!mpz_divisible_p(num.get_mpz_t(), Integer(4 * a).get_mpz_t())) continue;
        const Integer c = num / (4 * a);
        if (c < a) continue;
        if (a == c && b < 0) continue;
        out.push_back({a, b, c});
      }
    }
    return out;
  };

  std::vector<BinaryEvenForm> forms;
  if (partitions <= 1 || a_max < 2) {
    forms = scan(1, a_max);
  } else {
    const Integer chunk = (a_max + partitions - 1) / partitions;
    std::vector<std::future<std::vector<BinaryEvenForm>>> parts;
    for (Integer lo = 1; lo <= a_max; lo += chunk) {
      Integer hi = lo + chunk - 1;
      if (hi > a_max) hi = a_max;
      parts.push_back(std::async(std::launch::async, scan, lo, hi));
    }
    for (auto& p : parts) {
      auto chunk_forms = p.get();
      forms.insert(forms.end(), chunk_forms.begin(), chunk_forms.end());
    }
  }
  std::sort(forms.begin(), forms.end());
  return forms;
}

namespace {

// Splits n > 0 as s^2 * k with k squarefree.
std::pair<Integer, Integer> square_split(Integer n) {
  Integer s = 1, k = 1;
  for (Integer p = 2; p * p <= n; ++p) {
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) k *= p;
  }
  k *= n;
  return {s, k};
}

}  // namespace

std::int64_t endomorphism_field(const BinaryEvenForm& input) {
  const BinaryEvenForm f = normalize_definite(input).form;
  const Integer d0 = square_split(f.determinant()).second;
  // Q(sqrt(-d0)): discriminant -d0 if -d0 = 1 mod 4, else -4 d0.
  const Integer neg = -d0;
  const Integer disc = mod(neg, Integer(4)) == 1 ? neg : Integer(4 * neg);
  if (!fits_int64(disc)) throw DomainError("discriminant exceeds 64 bits");
  return to_int64(disc);
}

std::optional<int> matrix_order(const IntMatrix& g, int limit) {
  const IntMatrix id = IntMatrix::identity(g.rows());
  IntMatrix power = g;
  for (int k = 1; k <= limit; ++k) {
    if (power == id) return k;
    power = power * g;
  }
  return std::nullopt;
}

std::array<Rational, 3> QuadraticNumber::min_poly() const {
  return {Rational(1), Rational(-2 * p), Rational(p * p + q * q * delta)};
}

std::string to_string(const QuadraticNumber& z) {
  return z.p.get_str() + (sgn(z.q) < 0 ? "-" : "+") + Rational(abs(z.q)).get_str() +
         "*sqrt(-" + z.delta.get_str() + ")";
}

namespace {

QuadraticNumber mul(const QuadraticNumber& x, const QuadraticNumber& y) {
  return {x.p * y.p - x.q * y.q * x.delta, x.p * y.q + x.q * y.p, x.delta};
}

QuadraticNumber affine(const Integer& scale, const QuadraticNumber& z, const Integer& shift) {
  return {Rational(scale) * z.p + shift, Rational(scale) * z.q, z.delta};
}

}  // namespace

std::pair<PeriodPoint, PeriodPoint> period_points(const BinaryEvenForm& input) {
  require_positive_definite(input);
  const auto [s, k] = square_split(input.determinant());
  // z = (-b +- s sqrt(-k)) / (2a)
  Rational re(-input.b, 2 * input.a);
  Rational im(s, 2 * input.a);
  re.canonicalize();
  im.canonicalize();
  return {PeriodPoint{{re, im, k}}, PeriodPoint{{re, -im, k}}};
}

QuadraticNumber evaluate_form_polynomial(const BinaryEvenForm& f, const QuadraticNumber& z) {
  const QuadraticNumber z2 = mul(z, z);
  return {2 * f.a * z2.p + 2 * f.b * z.p + 2 * f.c, 2 * f.a * z2.q + 2 * f.b * z.q, z.delta};
}

QuadraticNumber period_eigenvalue(const IntMatrix& g, const PeriodPoint& point) {
  const QuadraticNumber& z = point.root;
  const QuadraticNumber lambda = affine(g(1, 0), z, g(1, 1));
  const QuadraticNumber first = affine(g(0, 0), z, g(0, 1));
  if (!(mul(lambda, z) == first)) throw InvariantViolation("matrix does not preserve the period line");
  return lambda;
}

std::optional<IntMatrix> finite_isometry(const BinaryEvenForm& input, int bound) {
  if (bound < 1) throw DomainError("isometry search bound must be >= 1");
  const BinaryEvenForm f = normalize_definite(input).form;
  const IntMatrix gram = f.gram().matrix();
  const PeriodPoint distinguished = period_points(f).first;

  struct Candidate {
    IntMatrix g;
    int max_entry;
    int order;
    int orientation;  // sign of Im(period eigenvalue)
    std::array<long, 4> entries;
  };
  std::optional<Candidate> best;
  auto better = [](const Candidate& x, const Candidate& y) {
    return std::tuple(x.max_entry, -x.order, -x.orientation, x.entries) <
           std::tuple(y.max_entry, -y.order, -y.orientation, y.entries);
  };

  for (long p = -bound; p <= bound; ++p)
    for (long q = -bound; q <= bound; ++q)
      for (long r = -bound; r <= bound; ++r)
        for (long s = -bound; s <= bound; ++s) {
          if (p * s - q * r != 1) continue;
          IntMatrix g{{p, q}, {r, s}};
          if (!(g.transposed() * gram * g == gram)) continue;
          const auto order = matrix_order(g);
          if (!order || *order <= 2) continue;
          const int max_entry = static_cast<int>(std::max({std::abs(p), std::abs(q), std::abs(r), std::abs(s)}));
          const QuadraticNumber lambda = period_eigenvalue(g, distinguished);
          Candidate c{g, max_entry, *order, sgn(lambda.q), {p, q, r, s}};
          if (!best || better(c, *best)) best = std::move(c);
        }
  if (!best) return std::nullopt;
  return best->g;
}

}  // namespace cubiccm

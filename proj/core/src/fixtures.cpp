#include "cubiccm/fixtures.hpp"

#include <functional>
#include <map>

#include "cubiccm/binforms.hpp"
#include "cubiccm/errors.hpp"
#include "cubiccm/quadfield.hpp"

namespace cubiccm {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::published_example: return "published-example";
    case Provenance::derived: return "derived";
    case Provenance::trivial: return "trivial";
  }
  return "?";
}

namespace {

std::string signature_string(const Signature& s) {
  return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + ")";
}

FixtureCheck check(std::string label, std::string expected, std::string actual, Provenance prov,
                   std::string source, bool informational = false) {
  FixtureCheck c{std::move(label), std::move(expected), std::move(actual), prov, std::move(source),
                 informational, false};
  c.passed = c.expected == c.actual;
  return c;
}

// Klein cubic fourfold: T(X) = U(7) + [[-2,1],[1,10]], rank A(X) = 19.
FixtureReport klein() {
  const GramMatrix t = direct_sum(make_standard("U(7)"), GramMatrix(IntMatrix{{-2, 1}, {1, 10}}));
  const LatticeInvariants inv = invariants(t);
  const std::string src = "Klein cubic fourfold with its order-7 automorphism";
  FixtureReport r{"klein", "transcendental lattice of the Klein cubic fourfold", {t}, {}, false};
  r.checks.push_back(check("rank T", "4", std::to_string(inv.rank), Provenance::published_example, src));
  r.checks.push_back(check("signature T", "(2,2)", signature_string(inv.signature), Provenance::derived, src));
  r.checks.push_back(check("det T", "1029", inv.determinant.get_str(), Provenance::derived, src));
  r.checks.push_back(check("even T", "true", inv.even ? "true" : "false", Provenance::derived, src));
  r.checks.push_back(check("rank A(X) = 23 - rank T", "19", std::to_string(23 - inv.rank),
                           Provenance::published_example, src));
  return r;
}

// Cubic fourfold with a symplectic automorphism of order 11: T = [[-22,11],[11,-22]].
FixtureReport order11() {
  const GramMatrix t(IntMatrix{{-22, 11}, {11, -22}});
  const BinaryEvenForm f = BinaryEvenForm::from_gram(t);
  const std::string src = "cubic fourfold with a symplectic automorphism of order 11";
  FixtureReport r{"order11", "rank-21 cubic fourfold with an order-11 symplectic automorphism", {t}, {}, false};
  r.checks.push_back(check("negative definite (sign flipped)", "true",
                           normalize_definite(f).negated ? "true" : "false", Provenance::trivial, src));
  r.checks.push_back(check("endomorphism field discriminant", "-3", std::to_string(endomorphism_field(f)),
                           Provenance::published_example, src));
  const auto g = finite_isometry(f, 2);
  r.checks.push_back(check("finite isometry", "1,-1;1,0", g ? format_matrix(*g) : "none",
                           Provenance::published_example, src));
  const auto order = g ? matrix_order(*g) : std::nullopt;
  r.checks.push_back(check("isometry order", "6", order ? std::to_string(*order) : "none",
                           Provenance::published_example, src));
  std::string poly = "none";
  if (g) {
    const BinaryEvenForm pos = normalize_definite(f).form;
    const auto mp = period_eigenvalue(*g, period_points(pos).first).min_poly();
    poly = mp[0].get_str() + "," + mp[1].get_str() + "," + mp[2].get_str();
  }
  r.checks.push_back(check("period eigenvalue minimal polynomial", "1,-1,1", poly,
                           Provenance::published_example, src));
  return r;
}

// Fermat cubic fourfold: only the reflex field Q(zeta_3) is recorded.
FixtureReport fermat() {
  FixtureReport r{"fermat", "Fermat cubic fourfold (reflex field datum only)", {}, {}, false};
  const QuadField K = QuadField::from_d(3);
  r.checks.push_back(check("reflex field discriminant", "-3", std::to_string(K.discriminant()),
                           Provenance::published_example, "Fermat cubic fourfold, reflex field Q(zeta_3)",
                           true));
  return r;
}

const std::map<std::string, std::function<FixtureReport()>>& registry() {
  static const std::map<std::string, std::function<FixtureReport()>> r{
      {"fermat", fermat}, {"klein", klein}, {"order11", order11}};
  return r;
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : registry()) names.push_back(name);
  return names;
}

FixtureReport run_fixture(const std::string& name) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw DomainError("unknown fixture: " + name);
  FixtureReport report = it->second();
  report.passed = true;
  for (const auto& c : report.checks) report.passed = report.passed && c.passed;
  return report;
}

}  // namespace cubiccm

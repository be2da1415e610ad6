#pragma once

#include <string>
#include <vector>

#include "cubiccm/lattices.hpp"

namespace cubiccm {

enum class Provenance { published_example, derived, trivial };
std::string to_string(Provenance p);

struct FixtureCheck {
  std::string label;
  std::string expected;
  std::string actual;
  Provenance provenance = Provenance::derived;
  std::string source;  // where the expected value comes from
  bool informational = false;
  bool passed = false;
};

struct FixtureReport {
  std::string name;
  std::string description;
  std::vector<GramMatrix> grams;
  std::vector<FixtureCheck> checks;
  bool passed = false;
};

std::vector<std::string> fixture_names();

// Throws DomainError for an unknown name.
FixtureReport run_fixture(const std::string& name);

}  // namespace cubiccm

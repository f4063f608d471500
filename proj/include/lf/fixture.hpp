#pragma once

#include "lf/fano.hpp"
#include "lf/inversion.hpp"
#include "lf/io.hpp"
#include "lf/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lf {

// Everything the invert stage produces for a fixture or job file.
struct Realisation {
  bool pfaffian = false;
  std::optional<LaurentPolynomial> polynomial;
  std::optional<Scaffolding> scaffolding;
  bool validated = false;
  std::string method;  // "pointstrut", "raymap" or "ambient"
  std::optional<IntMatrix> rays;

  GitPresentation inverted;  // omega by adjunction, before elimination
  std::vector<IntVector> inverted_bundles;
  std::vector<std::string> removed;

  GitPresentation ambient;  // after elimination, coordinates renamed
  std::vector<IntVector> bundles;
  std::vector<IntVector> pfaffian_weights;

  IntVector anticanonical() const;
  CiModel ci() const { return {ambient, bundles}; }
  PfaffianModel pfaffian_model() const { return {ambient, pfaffian_weights}; }
};

// Throws InputError on malformed data and ValidationFailure when the
// scaffolding does not cover the Newton polytope of the polynomial.
Realisation realise(const Json& job);

// Tabular layout: one row per weight-lattice basis vector, bundles after "|".
std::string layout(const GitPresentation& G, const std::vector<IntVector>& bundles);

// U with U * from = to, when both have the same row lattice up to a rational
// change of basis.
std::optional<RatMatrix> change_of_basis(const IntMatrix& from, const IntMatrix& to);

// A presentation stage of R set against an expected display. When the two
// differ by a unimodular change of basis, `ours` is rewritten in that basis.
struct PresentationComparison {
  bool model = true;  // stage: after elimination, or straight from inversion
  bool equal = false;
  GitPresentation ours;
  std::vector<IntVector> classes;
  GitPresentation expected;
  std::vector<IntVector> expected_classes;
  std::optional<IntMatrix> basis;  // ours -> expected
};
PresentationComparison compare_presentation(const Json& expected, const Realisation& R);

struct FieldResult {
  std::string field;
  bool pass = false;
  std::string expected;
  std::string actual;
  std::string note;
  double seconds = 0;
};

struct FixtureReport {
  std::string name;
  std::vector<FieldResult> fields;
  std::string error;  // set when the pipeline could not run
  int exit_code = 0;  // 0, 2, 3, 4 or 5
  double invert_seconds = 0;

  bool passed() const { return exit_code == 0; }
  const FieldResult* find(const std::string& field) const;
  std::string to_string() const;
  Json to_json() const;
};

FixtureReport check_fixture(const Json& fixture);

std::string default_fixture_dir();
// A path to an existing file, or the name of a fixture in dir.
std::string resolve_fixture(const std::string& name_or_path, const std::string& dir);
std::vector<std::string> list_fixtures(const std::string& dir);

// Maps library exceptions to the command-line exit codes.
int exit_code_for(const std::exception& e);

}  // namespace lf

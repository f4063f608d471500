#include "lf/errors.hpp"
#include "lf/fixture.hpp"
#include "lf/io.hpp"
#include "lf/laurent.hpp"
#include "lf/polytope.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

using namespace lf;

namespace {

struct Options {
  std::string fixtures = default_fixture_dir();
  std::string format = "text";
  std::string file;
  std::vector<std::string> names;
  int terms = 10;
  std::string mode = "classical";
  bool all = false;
  int threads = 1;
  std::string datum;
  int depth = 1;
  int w_bound = 3;
  std::string dot;
  std::string json_out;
};

Json load(const Options& o, const std::string& name) { return load_json(resolve_fixture(name, o.fixtures)); }

LaurentPolynomial polynomial_of(const Json& j) {
  if (j.is_object() && j.contains("rank")) return polynomial_from_json(j);
  if (j.is_object() && j.contains("polynomial")) return polynomial_from_json(j.at("polynomial"));
  throw InputError("input has no polynomial");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::string sequence_text(const std::vector<Int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
  return s;
}

int cmd_period(const Options& o) {
  if (o.terms < 0) throw InputError("terms must be non-negative");
  Json j = load(o, o.file);
  std::vector<Int> p;
  if (o.mode == "classical") {
    p = classical_period(polynomial_of(j), o.terms);
  } else {
    // a model file, or a job that inverts to one
    CiModel M = j.contains("scaffolding") || j.contains("ambient") ? realise(j).ci() : ci_model_from_json(j);
    p = quantum_period_ci(M, o.terms);
  }
  if (o.format == "json")
    std::cout << to_json(p).dump() << "\n";
  else
    std::cout << sequence_text(p) << "\n";
  return 0;
}

Json model_json(const Realisation& R) {
  return R.pfaffian ? to_json(R.pfaffian_model()) : to_json(R.ci());
}

int cmd_invert(const Options& o) {
  Json j = load(o, o.file);
  if (j.contains("struts")) j = Json{{"scaffolding", j}, {"validate", false}};
  Realisation R = realise(j);
  if (o.format == "json") {
    Json out = {{"method", R.method}, {"validated", R.validated}};
    if (R.rays) out["rays"] = to_json(*R.rays);
    out["inverted"] = to_json(CiModel{R.inverted, R.inverted_bundles});
    out["removed"] = R.removed;
    out["model"] = model_json(R);
    out["anticanonical"] = to_json(R.anticanonical());
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "method: " << R.method << (R.validated ? ", scaffolding validated" : "") << "\n";
  if (R.rays) std::cout << "ray map:\n" << to_string(*R.rays) << "\n";
  std::cout << "inverted ambient:\n" << layout(R.inverted, R.inverted_bundles);
  for (const auto& r : R.removed) std::cout << "eliminated " << r << "\n";
  std::cout << (R.pfaffian ? "model (Pfaffian equation weights after |):\n" : "model:\n")
            << layout(R.ambient, R.pfaffian ? R.pfaffian_weights : R.bundles);
  std::cout << " -K = " << to_string(to_rat(R.anticanonical())) << "\n";
  if (j.contains("expected") && j.at("expected").contains("presentation")) {
    auto c = compare_presentation(j.at("expected").at("presentation"), R);
    std::cout << (c.model ? "model" : "inverted ambient") << " in the basis of the expected presentation:\n"
              << layout(c.ours, c.classes) << (c.equal ? "equal" : "not equal") << " to the expected presentation\n";
  }
  return 0;
}

int cmd_check(const Options& o) {
  std::vector<std::string> paths;
  if (o.all) paths = list_fixtures(o.fixtures);
  for (const auto& n : o.names) paths.push_back(resolve_fixture(n, o.fixtures));
  if (paths.empty()) throw InputError("no fixtures given");
  std::vector<FixtureReport> reports(paths.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < paths.size();) {
      try {
        reports[i] = check_fixture(load_json(paths[i]));
      } catch (const std::exception& e) {
        reports[i].name = paths[i];
        reports[i].error = e.what();
        reports[i].exit_code = exit_code_for(e);
      }
    }
  };
  const int n = std::clamp(o.threads, 1, static_cast<int>(paths.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = 0;
  Json all = Json::array();
  for (const auto& r : reports) {
    if (o.format == "json")
      all.push_back(r.to_json());
    else
      std::cout << r.to_string();
    if (code == 0) code = r.exit_code;
  }
  if (o.format == "json") std::cout << all.dump(2) << "\n";
  return code;
}

Json datum_json(const MutationDatum& d) { return {{"w", to_json(d.w)}, {"a", to_json(d.a)}}; }

int cmd_mutate(const Options& o) {
  LaurentPolynomial f = polynomial_of(load(o, o.file));
  if (!o.datum.empty()) {
    Json d = load_json(o.datum);
    MutationDatum m{int_vector_from_json(d.at("w")), polynomial_from_json(d.at("a"))};
    if (!is_valid(m)) throw InputError("factor is not supported on the annihilator of w");
    if (!is_mutable(f, m)) throw NotMutable("polynomial is not mutable with respect to this datum");
    auto g = mutate(f, m);
    if (o.format == "json")
      std::cout << to_json(g).dump() << "\n";
    else
      std::cout << to_string(g) << "\n";
    return 0;
  }
  Json out = Json::array();
  for (const auto& m : mutation_candidates(f, o.w_bound)) {
    auto g = mutate(f, m);
    if (o.format == "json") {
      Json e = datum_json(m);
      e["result"] = to_json(g);
      out.push_back(e);
    } else {
      std::cout << "w = " << to_string(to_rat(m.w)) << "  a = " << to_string(m.a) << "\n  -> " << to_string(g) << "\n";
    }
  }
  if (o.format == "json") std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_graph(const Options& o) {
  if (o.depth < 0 || o.w_bound < 1) throw InputError("depth must be non-negative and w-bound positive");
  auto g = mutation_graph(polynomial_of(load(o, o.file)), o.depth, o.w_bound);
  if (!o.dot.empty()) write_file(o.dot, g.to_dot());
  if (!o.json_out.empty()) write_file(o.json_out, to_json(g).dump(2) + "\n");
  if (o.format == "json") {
    std::cout << to_json(g).dump(2) << "\n";
  } else {
    std::cout << g.vertices.size() << " vertices, " << g.edges.size() << " edges\n";
    for (size_t i = 0; i < g.vertices.size(); ++i)
      std::cout << "  " << i << " depth " << g.vertices[i].depth << ": " << to_string(g.vertices[i].representative)
                << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Laurent inversion and Fano threefold toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--fixtures", o.fixtures, "fixture directory")->capture_default_str();
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto* period = app.add_subcommand("period", "period sequence of a polynomial or model");
  period->add_option("file", o.file, "JSON file or fixture name")->required();
  period->add_option("--terms,-k", o.terms, "last index K")->capture_default_str();
  period->add_option("--mode", o.mode)->check(CLI::IsMember({"classical", "quantum-ci"}))->capture_default_str();

  auto* invert = app.add_subcommand("invert", "Laurent inversion of a scaffolding or job file");
  invert->add_option("file", o.file, "JSON file or fixture name")->required();

  auto* check = app.add_subcommand("check", "run fixtures and diff against expected values");
  check->add_option("names", o.names, "fixture names or files");
  check->add_flag("--all", o.all, "every fixture in the fixture directory");
  check->add_option("--threads,-j", o.threads, "worker threads")->capture_default_str();

  auto* mutate = app.add_subcommand("mutate", "apply a mutation, or list one-step mutations");
  mutate->add_option("file", o.file, "polynomial file or fixture name")->required();
  mutate->add_option("--datum", o.datum, "JSON file {\"w\": [...], \"a\": polynomial}");
  mutate->add_option("--w-bound", o.w_bound)->capture_default_str();

  auto* graph = app.add_subcommand("graph", "mutation graph to finite depth");
  graph->add_option("file", o.file, "polynomial file or fixture name")->required();
  graph->add_option("--depth", o.depth)->capture_default_str();
  graph->add_option("--w-bound", o.w_bound)->capture_default_str();
  graph->add_option("--dot", o.dot, "write Graphviz output here");
  graph->add_option("--json", o.json_out, "write JSON output here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*period) return cmd_period(o);
    if (*invert) return cmd_invert(o);
    if (*check) return cmd_check(o);
    if (*mutate) return cmd_mutate(o);
    if (*graph) return cmd_graph(o);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return 0;
}

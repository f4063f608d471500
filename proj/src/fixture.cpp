#include "lf/fixture.hpp"

#include "lf/errors.hpp"
#include "lf/intersect.hpp"
#include "lf/lattice.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>

#ifndef LF_FIXTURE_DIR
#define LF_FIXTURE_DIR "fixtures"
#endif

namespace lf {

namespace {

bool has_point_strut(const Scaffolding& S) {
  return std::any_of(S.struts.begin(), S.struts.end(), [](const Strut& s) { return is_zero(s.D); });
}

std::vector<std::string> default_names(int m) {
  std::vector<std::string> out;
  for (int i = 1; i <= m; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw InputError(std::string(what) + " must be an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::string vec(const RatVector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v(i));
  return s + ")";
}
std::string vec(const IntVector& v) { return vec(to_rat(v)); }

std::string seq(const std::vector<Int>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + "]";
}

template <class T>
std::string set_string(const std::set<T>& xs) {
  std::string s = "{";
  bool first = true;
  for (const auto& x : xs) {
    s += (first ? "" : ", ") + x;
    first = false;
  }
  return s + "}";
}

FieldResult outcome(bool pass, std::string expected, std::string actual) {
  FieldResult f;
  f.pass = pass;
  f.expected = std::move(expected);
  f.actual = std::move(actual);
  return f;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::vector<std::string> kKnownFields = {
    "presentation", "rays",     "anticanonical",  "entry_weights", "charts",           "singular_curves",
    "section",      "basket",   "degree",         "ratio",         "period",           "period_crosscheck",
    "fano_index",   "polarised_degree", "mutation"};

}  // namespace

IntVector Realisation::anticanonical() const {
  return pfaffian ? adjunction_pfaffian(ambient, pfaffian_weights) : adjunction_ci(ambient, bundles);
}

Realisation realise(const Json& job) {
  if (!job.is_object()) throw InputError("job must be a JSON object");
  Realisation R;
  const Json model = job.contains("model") ? job.at("model") : Json("ci");
  if (!model.is_string() || (model != "ci" && model != "pfaffian"))
    throw InputError("model must be \"ci\" or \"pfaffian\"");
  R.pfaffian = model == "pfaffian";
  if (job.contains("polynomial")) R.polynomial = polynomial_from_json(job.at("polynomial"));

  GitPresentation G;
  if (job.contains("scaffolding")) {
    Scaffolding S = scaffolding_from_json(job.at("scaffolding"));
    const Json validate = job.contains("validate") ? job.at("validate") : Json(true);
    if (!validate.is_boolean()) throw InputError("validate must be a boolean");
    if (validate.get<bool>()) {
      if (!R.polynomial) throw InputError("validation needs a polynomial");
      if (!S.shape) throw InputError("validation needs a shape");
      if (!validate_scaffolding(S, newton_polytope(*R.polynomial)))
        throw ValidationFailure("scaffolding does not reproduce the Newton polytope");
      R.validated = true;
    }
    if (has_point_strut(S)) {
      G = invert_pointstrut(S);
      R.method = "pointstrut";
    } else {
      auto r = invert_raymap(S);
      G = r.weights;
      R.rays = r.rays;
      R.method = "raymap";
    }
    R.scaffolding = S;
  } else if (job.contains("ambient")) {
    G = presentation_from_json(job.at("ambient"));
    R.method = "ambient";
  } else {
    throw InputError("job needs a scaffolding or an ambient");
  }

  std::vector<IntVector> bundles;
  if (job.contains("bundles")) {
    if (!job.at("bundles").is_array()) throw InputError("bundles must be an array");
    for (const auto& b : job.at("bundles")) bundles.push_back(class_from_json(b, G));
  } else if (R.scaffolding && R.scaffolding->shape && !R.pfaffian) {
    bundles = bundles_from_shape(*R.scaffolding, G);
  }
  std::vector<IntVector> E;
  if (R.pfaffian) {
    if (!job.contains("pfaffian_weights") || !job.at("pfaffian_weights").is_array())
      throw InputError("a Pfaffian job needs pfaffian_weights");
    for (const auto& b : job.at("pfaffian_weights")) E.push_back(class_from_json(b, G));
    IntVector k = adjunction_pfaffian(G, E);
    for (const auto& L : bundles) k -= L;
    G.omega = to_rat(k);
  } else {
    G.omega = to_rat(adjunction_ci(G, bundles));
  }
  R.inverted = G;
  R.inverted_bundles = bundles;

  auto el = eliminate_linear(G, bundles);
  R.removed = el.removed;
  R.ambient = el.ambient;
  R.bundles = el.bundles;
  if (R.pfaffian) {
    if (!R.bundles.empty()) throw InputError("bundles of a Pfaffian job must be eliminable linear equations");
    R.pfaffian_weights = E;
    R.ambient.omega = to_rat(adjunction_pfaffian(R.ambient, E));
  }
  if (job.contains("coordinates")) {
    auto names = string_list(job.at("coordinates"), "coordinates");
    if (static_cast<int>(names.size()) != R.ambient.size()) throw InputError("one coordinate name per column expected");
    R.ambient.names = names;
  } else if (R.method != "ambient") {
    R.ambient.names = default_names(R.ambient.size());
  }
  return R;
}

std::string layout(const GitPresentation& G, const std::vector<IntVector>& bundles) {
  std::vector<std::string> head;
  for (int i = 0; i < G.size(); ++i) head.push_back(G.name(i));
  for (size_t b = 0; b < bundles.size(); ++b) head.push_back("L" + std::to_string(b + 1));
  std::vector<std::vector<std::string>> rows(G.rank());
  for (int r = 0; r < G.rank(); ++r) {
    for (int i = 0; i < G.size(); ++i) rows[r].push_back(to_string(G.weights(r, i)));
    for (const auto& L : bundles) rows[r].push_back(to_string(L(r)));
  }
  std::vector<size_t> width(head.size());
  for (size_t c = 0; c < head.size(); ++c) {
    width[c] = head[c].size();
    for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (size_t c = 0; c < cells.size(); ++c) {
      if (c == static_cast<size_t>(G.size())) s += " |";
      s += " " + std::string(width[c] - cells[c].size(), ' ') + cells[c];
    }
    return s + "\n";
  };
  std::string out = line(head);
  for (const auto& row : rows) out += line(row);
  return out + " omega = " + vec(G.omega) + "\n";
}

std::optional<RatMatrix> change_of_basis(const IntMatrix& from, const IntMatrix& to) {
  if (from.rows() != to.rows() || from.cols() != to.cols()) return std::nullopt;
  const RatMatrix A = to_rat(IntMatrix(from.transpose()));
  RatMatrix U(to.rows(), from.rows());
  for (Eigen::Index i = 0; i < to.rows(); ++i) {
    auto u = solve(A, to_rat(IntVector(to.row(i).transpose())));
    if (!u) return std::nullopt;
    U.row(i) = u->transpose();
  }
  if (U * to_rat(from) != to_rat(to)) return std::nullopt;
  return U;
}

const FieldResult* FixtureReport::find(const std::string& field) const {
  for (const auto& f : fields)
    if (f.field == field) return &f;
  return nullptr;
}

std::string FixtureReport::to_string() const {
  std::ostringstream os;
  os << name << "\n";
  for (const auto& f : fields) {
    os << "  " << (f.pass ? "PASS " : "FAIL ") << f.field << "\n";
    if (!f.pass) {
      auto indent = [](const std::string& s) {
        std::string out;
        for (char c : s) out += c == '\n' ? std::string("\n             ") : std::string(1, c);
        while (!out.empty() && (out.back() == ' ' || out.back() == '\n')) out.pop_back();
        return out;
      };
      os << "       expected: " << indent(f.expected) << "\n";
      os << "       actual:   " << indent(f.actual) << "\n";
      if (!f.note.empty()) os << "       note:     " << f.note << "\n";
    }
  }
  if (!error.empty()) os << "  ERROR " << error << "\n";
  const auto passed_fields = std::count_if(fields.begin(), fields.end(), [](const FieldResult& f) { return f.pass; });
  os << "RESULT " << name << ": " << (passed() ? "PASS" : "FAIL") << " (" << passed_fields << "/" << fields.size()
     << " fields, exit " << exit_code << ")\n";
  return os.str();
}

Json FixtureReport::to_json() const {
  Json fs = Json::array();
  for (const auto& f : fields)
    fs.push_back({{"field", f.field}, {"pass", f.pass}, {"expected", f.expected}, {"actual", f.actual}, {"note", f.note}});
  Json j = {{"name", name}, {"exit_code", exit_code}, {"fields", fs}};
  if (!error.empty()) j["error"] = error;
  return j;
}

PresentationComparison compare_presentation(const Json& e, const Realisation& R) {
  PresentationComparison c;
  const std::string stage = e.contains("stage") ? e.at("stage").get<std::string>() : "model";
  if (stage != "model" && stage != "inverted") throw InputError("stage must be model or inverted");
  c.model = stage == "model";
  const GitPresentation& G = c.model ? R.ambient : R.inverted;
  c.classes = c.model ? (R.pfaffian ? R.pfaffian_weights : R.bundles) : R.inverted_bundles;
  std::vector<std::string> cols;
  if (e.contains("columns")) {
    cols = string_list(e.at("columns"), "columns");
  } else {
    for (int i = 0; i < G.size(); ++i) cols.push_back(G.name(i));
  }
  if (static_cast<int>(cols.size()) != G.size()) throw InputError("columns must list every coordinate");
  c.ours = select_columns(G, cols);
  c.expected = make_presentation(int_matrix_from_json(e.at("weights")), rat_vector_from_json(e.at("omega")), cols);
  for (const auto& b : e.at("bundles")) c.expected_classes.push_back(int_vector_from_json(b));
  c.equal = c.ours.rank() == c.expected.rank() && c.ours.size() == c.expected.size() &&
            c.classes.size() == c.expected_classes.size() &&
            same_presentation(c.ours, c.classes, c.expected, c.expected_classes);
  if (auto V = change_of_basis(c.ours.weights, c.expected.weights)) {
    bool integral = true;
    for (Eigen::Index i = 0; i < V->size(); ++i) integral = integral && is_integral(V->data()[i]);
    if (integral) {
      c.basis = IntMatrix(V->unaryExpr([](const Rat& q) { return numerator(q); }));
      if (!is_unimodular(*c.basis)) c.basis.reset();
    }
  }
  if (c.basis) {
    c.ours.weights = *c.basis * c.ours.weights;
    c.ours.omega = to_rat(*c.basis) * c.ours.omega;
    for (auto& L : c.classes) L = *c.basis * L;
  }
  return c;
}

FixtureReport check_fixture(const Json& fx) {
  FixtureReport rep;
  rep.name = fx.is_object() && fx.contains("name") && fx.at("name").is_string() ? fx.at("name").get<std::string>()
                                                                                : std::string("(unnamed)");
  try {
    const Json ex = fx.is_object() && fx.contains("expected") ? fx.at("expected") : Json::object();
    if (!ex.is_object()) throw InputError("expected must be an object");
    for (const auto& [key, value] : ex.items())
      if (std::find(kKnownFields.begin(), kKnownFields.end(), key) == kKnownFields.end())
        throw InputError("unknown expected field " + key);

    auto t0 = std::chrono::steady_clock::now();
    const Realisation R = realise(fx);
    rep.invert_seconds = elapsed(t0);
    if (R.validated) rep.fields.push_back({"validation", true, "covers", "covers", "", rep.invert_seconds});

    auto note = [](const Json& e) {
      return e.is_object() && e.contains("note") && e.at("note").is_string() ? e.at("note").get<std::string>()
                                                                           : std::string();
    };
    auto run = [&](const std::string& field, const Json& e, const std::function<FieldResult()>& body) {
      auto t = std::chrono::steady_clock::now();
      FieldResult f = body();
      f.field = field;
      f.note = note(e);
      f.seconds = elapsed(t);
      rep.fields.push_back(f);
    };

    // Basis change from the model's weight lattice to the expected one.
    std::optional<IntMatrix> U;
    auto ref = [&](const IntVector& v) -> IntVector { return U ? IntVector(*U * v) : v; };
    auto from_ref = [&](const IntVector& v) -> IntVector { return U ? IntVector(inverse_unimodular(*U) * v) : v; };
    auto expected_class = [&](const Json& j) -> IntVector {
      // monomials are read in the model's coordinates, vectors in the expected basis
      return j.is_object() ? ref(class_from_json(j, R.ambient)) : int_vector_from_json(j);
    };

    if (ex.contains("presentation")) {
      const Json& e = ex.at("presentation");
      run("presentation", e, [&] {
        PresentationComparison c = compare_presentation(e, R);
        FieldResult f;
        f.pass = c.equal;
        f.expected = layout(c.expected, c.expected_classes);
        f.actual = layout(c.ours, c.classes);
        if (c.equal && c.model) U = c.basis;
        return f;
      });
    }

    if (ex.contains("rays")) {
      const Json& e = ex.at("rays");
      run("rays", e, [&] {
        IntMatrix want = int_matrix_from_json(e.at("matrix"));
        FieldResult f;
        f.expected = to_string(want);
        f.actual = R.rays ? to_string(*R.rays) : "no ray map (point-strut inversion)";
        f.pass = R.rays && R.rays->rows() == want.rows() && R.rays->cols() == want.cols() && *R.rays == want;
        return f;
      });
    }

    if (ex.contains("anticanonical")) {
      const Json& e = ex.at("anticanonical");
      run("anticanonical", e, [&] {
        IntVector want = expected_class(e.at("value")), got = ref(R.anticanonical());
        return outcome(want.size() == got.size() && want == got, vec(want), vec(got));
      });
    }

    if (ex.contains("entry_weights")) {
      const Json& e = ex.at("entry_weights");
      run("entry_weights", e, [&] {
        if (!R.pfaffian) throw InputError("entry weights need a Pfaffian model");
        std::vector<IntVector> E;
        for (const auto& w : R.pfaffian_weights) E.push_back(ref(w));
        auto c = pfaffian_column_weights(E);
        std::vector<std::string> got, want;
        for (int j = 0; j < 5; ++j)
          for (int k = j + 1; k < 5; ++k) got.push_back(vec(entry_weight(c, j, k)));
        for (const auto& w : e.at("value")) want.push_back(vec(rat_vector_from_json(w)));
        auto join = [](const std::vector<std::string>& xs) {
          std::string s;
          for (const auto& x : xs) s += (s.empty() ? "" : " ") + x;
          return s;
        };
        return outcome(got == want, join(want), join(got));
      });
    }

    if (ex.contains("charts")) {
      const Json& e = ex.at("charts");
      const auto cs = charts(R.ambient);
      for (const char* kind : {"singular", "orbifold", "non_orbifold"}) {
        if (!e.contains(kind)) continue;
        run(std::string("charts.") + kind, e, [&] {
          std::set<std::string> got;
          for (const auto& c : cs) {
            bool in = std::string(kind) == "singular" ? c.kind != ChartKind::Smooth
                      : std::string(kind) == "orbifold" ? c.orbifold()
                                                        : !c.orbifold();
            if (in) got.insert(chart_name(c.indices));
          }
          auto v = string_list(e.at(kind), kind);
          std::set<std::string> want(v.begin(), v.end());
          return outcome(got == want, set_string(want), set_string(got));
        });
      }
      if (e.contains("types")) {
        run("charts.types", e, [&] {
          std::set<std::string> all;
          for (const auto& c : cs) all.insert(c.describe(R.ambient));
          FieldResult f = outcome(true, "", "");
          for (const auto& t : string_list(e.at("types"), "types")) {
            f.expected += t + "\n";
            std::string name = t.substr(0, t.find(' '));
            bool found = all.count(t) > 0;
            f.pass = f.pass && found;
            std::string actual = "(no chart " + name + ")";
            for (const auto& d : all)
              if (d.substr(0, d.find(' ')) == name) actual = d;
            f.actual += actual + "\n";
          }
          return f;
        });
      }
    }

    if (ex.contains("singular_curves")) {
      const Json& e = ex.at("singular_curves");
      run("singular_curves", e, [&] {
        auto curve = [](std::vector<std::string> names) {
          std::sort(names.begin(), names.end());
          std::string s;
          for (const auto& n : names) s += n + "=";
          return "{" + s + "0}";
        };
        std::set<std::string> got, want;
        for (const auto& st : singular_strata(R.ambient, 1)) {
          if (st.dim != 1) continue;
          std::vector<std::string> names;
          for (int i : st.zeros) names.push_back(R.ambient.name(i));
          got.insert(curve(names));
        }
        for (const auto& c : e.at("value")) {
          want.insert(curve(string_list(c, "curve")));
        }
        return outcome(got == want, set_string(want), set_string(got));
      });
    }

    if (ex.contains("section")) {
      const Json& e = ex.at("section");
      run("section", e, [&] {
        const Json& cls = e.at("class");
        IntVector lambda = cls.is_object() ? class_from_json(cls, R.ambient) : from_ref(int_vector_from_json(cls));
        std::set<std::string> got, want;
        for (const auto& m : monomial_basis(R.ambient, lambda))
          got.insert(to_string(Polynomial::monomial(to_exponent(m)), R.ambient.names));
        for (const auto& m : string_list(e.at("monomials"), "monomials")) want.insert(m);
        return outcome(got == want, set_string(want), set_string(got));
      });
    }

    if (ex.contains("basket")) {
      const Json& e = ex.at("basket");
      run("basket", e, [&] {
        const std::string want = e.at("value").get<std::string>();
        BasketReport b = R.pfaffian ? basket_report(R.pfaffian_model()) : basket_report(R.ci());
        FieldResult f = outcome(false, want, "");
        f.pass = b.ones.to_string() == want && b.random.to_string() == want && b.ones.verified() && b.random.verified();
        f.actual = "generic coefficients " + b.random.to_string() + ", unit coefficients " + b.ones.to_string();
        for (const auto& w : b.ones.warnings) f.actual += "\nwarning: " + w;
        for (const auto& w : b.random.warnings) f.actual += "\nwarning: " + w;
        return f;
      });
    }

    std::optional<Rat> degree;
    std::optional<PfaffianDegree> pdeg;
    auto get_degree = [&]() -> Rat {
      if (!degree) {
        if (R.pfaffian) {
          pdeg = degree_pfaffian(R.pfaffian_model());
          degree = pdeg->degree;
        } else {
          degree = degree_ci(R.ci());
        }
      }
      return *degree;
    };
    if (ex.contains("degree")) {
      const Json& e = ex.at("degree");
      run("degree", e, [&] {
        Rat want = rat_from_json(e.at("value")), got = get_degree();
        return outcome(want == got, to_string(want), to_string(got));
      });
    }
    if (ex.contains("ratio")) {
      const Json& e = ex.at("ratio");
      run("ratio", e, [&] {
        if (!R.pfaffian) throw InputError("ratio needs a Pfaffian model");
        get_degree();
        Rat want = rat_from_json(e.at("value"));
        return outcome(want == pdeg->ratio, to_string(want),
                           to_string(pdeg->ratio) + " (normalizer " + chart_name(pdeg->normalizer) + ")");
      });
    }

    std::optional<std::vector<Int>> classical, quantum;
    auto terms_of = [](const Json& e) {
      int k = e.contains("terms") ? e.at("terms").get<int>() : 10;
      if (k < 0) throw InputError("terms must be non-negative");
      return k;
    };
    auto get_classical = [&](int K) -> const std::vector<Int>& {
      if (!R.polynomial) throw InputError("a classical period needs a polynomial");
      if (!classical || static_cast<int>(classical->size()) < K + 1) classical = classical_period(*R.polynomial, K);
      return *classical;
    };
    auto get_quantum = [&](int K) -> const std::vector<Int>& {
      if (R.pfaffian) throw InputError("quantum periods are implemented for complete intersections only");
      if (!quantum || static_cast<int>(quantum->size()) < K + 1) quantum = quantum_period_ci(R.ci(), K);
      return *quantum;
    };
    auto prefix = [](const std::vector<Int>& v, int K) { return std::vector<Int>(v.begin(), v.begin() + K + 1); };
    // the sequence the index is read from
    auto get_period = [&](int K) { return R.pfaffian ? prefix(get_classical(K), K) : prefix(get_quantum(K), K); };

    if (ex.contains("period")) {
      const Json& e = ex.at("period");
      run("period", e, [&] {
        auto want = int_list_from_json(e.at("value"));
        const int K = static_cast<int>(want.size()) - 1;
        FieldResult f = outcome(true, seq(want), "");
        if (R.polynomial) {
          auto c = prefix(get_classical(K), K);
          f.pass = f.pass && c == want;
          f.actual += "classical " + seq(c);
        }
        if (!R.pfaffian) {
          auto q = prefix(get_quantum(K), K);
          f.pass = f.pass && q == want;
          f.actual += std::string(f.actual.empty() ? "" : "\n") + "quantum " + seq(q);
        }
        return f;
      });
    }
    if (ex.contains("period_crosscheck")) {
      const Json& e = ex.at("period_crosscheck");
      run("period_crosscheck", e, [&] {
        const int K = terms_of(e);
        auto c = prefix(get_classical(K), K), q = prefix(get_quantum(K), K);
        return outcome(c == q, "classical " + seq(c), "quantum   " + seq(q));
      });
    }
    if (ex.contains("fano_index")) {
      const Json& e = ex.at("fano_index");
      run("fano_index", e, [&] {
        long want = e.at("value").get<long>();
        int got = fano_index(get_period(terms_of(e)));
        return outcome(want == got, std::to_string(want), std::to_string(got));
      });
    }
    if (ex.contains("polarised_degree")) {
      const Json& e = ex.at("polarised_degree");
      run("polarised_degree", e, [&] {
        int r = fano_index(get_period(terms_of(e)));
        Rat want = rat_from_json(e.at("value")), got = get_degree() / Rat(r * r * r);
        return outcome(want == got, to_string(want), to_string(got) + " (index " + std::to_string(r) + ")");
      });
    }

    if (ex.contains("mutation")) {
      const Json& e = ex.at("mutation");
      run("mutation", e, [&] {
        if (!R.polynomial) throw InputError("mutation check needs a polynomial");
        auto source = polynomial_from_json(e.at("source"));
        int depth = e.contains("depth") ? e.at("depth").get<int>() : 1;
        int w_bound = e.contains("w_bound") ? e.at("w_bound").get<int>() : 3;
        auto g = mutation_graph(source, depth, w_bound);
        bool found = g.find(affine_normal_form(newton_polytope(*R.polynomial))).has_value();
        return outcome(found, "Newton polytope of the fixture polynomial within depth " + std::to_string(depth),
                           std::to_string(g.vertices.size()) + " vertices, " + (found ? "found" : "not found"));
      });
    }

    rep.exit_code = std::all_of(rep.fields.begin(), rep.fields.end(), [](const FieldResult& f) { return f.pass; }) ? 0 : 5;
  } catch (const nlohmann::json::exception& e) {
    rep.error = std::string("malformed fixture: ") + e.what();
    rep.exit_code = 2;
  } catch (const std::exception& e) {
    rep.error = e.what();
    rep.exit_code = exit_code_for(e);
  }
  return rep;
}

std::string default_fixture_dir() {
  if (const char* d = std::getenv("LF_FIXTURES")) return d;
  return LF_FIXTURE_DIR;
}

std::string resolve_fixture(const std::string& name_or_path, const std::string& dir) {
  namespace fs = std::filesystem;
  if (fs::is_regular_file(name_or_path)) return name_or_path;
  fs::path p = fs::path(dir) / (name_or_path + ".json");
  if (fs::is_regular_file(p)) return p.string();
  throw InputError("unknown fixture " + name_or_path);
}

std::vector<std::string> list_fixtures(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> out;
  if (!fs::is_directory(dir)) throw InputError("fixture directory " + dir + " not found");
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ValidationFailure*>(&e)) return 4;
  if (dynamic_cast<const ResourceLimit*>(&e) || dynamic_cast<const UnboundedEnumeration*>(&e) ||
      dynamic_cast<const TooManyVariables*>(&e))
    return 3;
  if (dynamic_cast<const Error*>(&e) || dynamic_cast<const nlohmann::json::exception*>(&e)) return 2;
  return 1;
}

}  // namespace lf

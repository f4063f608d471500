#include "lf/io.hpp"

#include "lf/errors.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace lf {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  return j;
}

long small_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<long>();
}

}  // namespace

Json to_json(const Int& x) {
  if (x >= std::numeric_limits<long>::min() && x <= std::numeric_limits<long>::max()) return x.convert_to<long>();
  return x.str();
}

Json to_json(const Rat& x) { return to_string(x); }

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(to_json(IntVector(m.row(i).transpose())));
  return out;
}

Json to_json(const std::vector<Int>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const LaurentPolynomial& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", e}, {"coeff", to_json(c)}});
  return {{"rank", f.rank()}, {"terms", terms}};
}

Json to_json(const GitPresentation& G) {
  return {{"weights", to_json(G.weights)}, {"omega", to_json(G.omega)}, {"names", G.names}};
}

Json to_json(const Scaffolding& S) {
  Json j = {{"nbar_rank", S.nbar_rank}, {"nu_rank", S.nu_rank}};
  if (S.shape) {
    Json rays = Json::array();
    for (int i = 0; i < S.shape->size(); ++i) rays.push_back(to_json(IntVector(S.shape->rays.col(i))));
    j["shape"] = {{"rays", rays}, {"max_cones", S.shape->max_cones}};
  }
  Json struts = Json::array();
  for (const auto& s : S.struts) struts.push_back({{"D", to_json(s.D)}, {"chi", to_json(s.chi)}});
  j["struts"] = struts;
  if (!S.levels.empty()) j["levels"] = S.levels;
  if (S.embedding) j["embedding"] = to_json(*S.embedding);
  return j;
}

Json to_json(const CiModel& M) {
  Json j = to_json(M.ambient);
  Json b = Json::array();
  for (const auto& L : M.bundles) b.push_back(to_json(L));
  j["bundles"] = b;
  return j;
}

Json to_json(const PfaffianModel& M) {
  Json j = to_json(M.ambient);
  Json b = Json::array();
  for (const auto& L : M.equation_weights) b.push_back(to_json(L));
  j["pfaffian_weights"] = b;
  return j;
}

Json to_json(const MutationGraph& g) {
  Json vs = Json::array();
  for (const auto& v : g.vertices)
    vs.push_back({{"depth", v.depth}, {"label", to_json(v.label)}, {"polynomial", to_json(v.representative)}});
  Json es = Json::array();
  for (const auto& [a, b] : g.edges) es.push_back({a, b});
  return {{"vertices", vs}, {"edges", es}};
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InputError("expected an integer, got " + j.dump());
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected a rational string, got " + j.dump());
}

IntVector int_vector_from_json(const Json& j) {
  array(j, "vector");
  IntVector v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = int_from_json(j[i]);
  return v;
}

RatVector rat_vector_from_json(const Json& j) {
  array(j, "vector");
  RatVector v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = rat_from_json(j[i]);
  return v;
}

IntMatrix int_matrix_from_json(const Json& j) {
  array(j, "matrix");
  if (j.empty()) return IntMatrix(0, 0);
  const size_t cols = array(j[0], "matrix row").size();
  IntMatrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (size_t i = 0; i < j.size(); ++i) {
    if (array(j[i], "matrix row").size() != cols) throw InputError("matrix rows have different lengths");
    for (size_t k = 0; k < cols; ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = int_from_json(j[i][k]);
  }
  return m;
}

std::vector<Int> int_list_from_json(const Json& j) {
  array(j, "list");
  std::vector<Int> out;
  for (const auto& x : j) out.push_back(int_from_json(x));
  return out;
}

LaurentPolynomial polynomial_from_json(const Json& j) {
  const int n = static_cast<int>(small_int(field(j, "rank"), "rank"));
  if (n < 0) throw InputError("rank must be non-negative");
  LaurentPolynomial f(n);
  for (const auto& t : array(field(j, "terms"), "terms")) {
    Exponent e;
    for (const auto& x : array(field(t, "exp"), "exp")) e.push_back(small_int(x, "exponent"));
    if (static_cast<int>(e.size()) != n) throw InputError("exponent length differs from rank");
    f.add_term(e, int_from_json(field(t, "coeff")));
  }
  return f;
}

GitPresentation presentation_from_json(const Json& j) {
  IntMatrix W = int_matrix_from_json(field(j, "weights"));
  RatVector omega = j.contains("omega") ? rat_vector_from_json(j.at("omega")) : RatVector(RatVector::Zero(W.rows()));
  std::vector<std::string> names;
  if (j.contains("names")) {
    for (const auto& n : array(j.at("names"), "names")) {
      if (!n.is_string()) throw InputError("names must be strings");
      names.push_back(n.get<std::string>());
    }
  }
  return make_presentation(W, omega, names);
}

Scaffolding scaffolding_from_json(const Json& j) {
  Scaffolding S;
  S.nbar_rank = static_cast<int>(small_int(field(j, "nbar_rank"), "nbar_rank"));
  S.nu_rank = static_cast<int>(small_int(field(j, "nu_rank"), "nu_rank"));
  if (j.contains("shape")) {
    const Json& sh = j.at("shape");
    IntMatrix rays = int_matrix_from_json(field(sh, "rays")).transpose();
    if (rays.rows() != S.nbar_rank) throw InputError("shape rays must have nbar_rank entries");
    if (sh.contains("max_cones")) {
      ToricShape Z{rays, {}};
      for (const auto& c : array(sh.at("max_cones"), "max_cones")) {
        IndexSet s;
        for (const auto& x : array(c, "cone")) {
          long i = small_int(x, "cone index");
          if (i < 0 || i >= Z.size()) throw InputError("cone index out of range");
          s.push_back(static_cast<int>(i));
        }
        std::sort(s.begin(), s.end());
        Z.max_cones.push_back(s);
      }
      if (!Z.smooth()) throw InputError("shape fan is not smooth");
      S.shape = Z;
    } else {
      S.shape = infer_shape(rays);
    }
  }
  for (const auto& s : array(field(j, "struts"), "struts")) {
    Strut t{int_vector_from_json(field(s, "D")), s.contains("chi") ? int_vector_from_json(s.at("chi")) : IntVector(0)};
    if (t.chi.size() != S.nu_rank) throw InputError("chi must have nu_rank entries");
    S.struts.push_back(t);
  }
  if (j.contains("levels"))
    for (const auto& l : array(j.at("levels"), "levels")) {
      IndexSet s;
      for (const auto& x : array(l, "level")) s.push_back(static_cast<int>(small_int(x, "level index")));
      std::sort(s.begin(), s.end());
      S.levels.push_back(s);
    }
  if (j.contains("embedding")) S.embedding = int_matrix_from_json(j.at("embedding"));
  return S;
}

IntVector class_from_json(const Json& j, const GitPresentation& G) {
  if (j.is_array()) {
    IntVector v = int_vector_from_json(j);
    if (v.size() != G.rank()) throw InputError("class has the wrong rank");
    return v;
  }
  if (!j.is_object()) throw InputError("class must be a weight vector or a monomial object");
  IntVector v = IntVector::Zero(G.rank());
  for (const auto& [name, e] : j.items()) {
    auto it = std::find(G.names.begin(), G.names.end(), name);
    if (it == G.names.end()) throw InputError("unknown coordinate " + name);
    v += Int(small_int(e, "exponent")) * G.column(static_cast<int>(it - G.names.begin()));
  }
  return v;
}

CiModel ci_model_from_json(const Json& j) {
  CiModel M{presentation_from_json(j), {}};
  if (j.contains("bundles"))
    for (const auto& b : array(j.at("bundles"), "bundles")) M.bundles.push_back(class_from_json(b, M.ambient));
  return M;
}

PfaffianModel pfaffian_model_from_json(const Json& j) {
  PfaffianModel M{presentation_from_json(j), {}};
  for (const auto& b : array(field(j, "pfaffian_weights"), "pfaffian_weights"))
    M.equation_weights.push_back(class_from_json(b, M.ambient));
  if (M.equation_weights.size() != 5) throw InputError("a Pfaffian model needs five equation weights");
  return M;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace lf

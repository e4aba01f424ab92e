#include "ttg/json_io.hpp"

#include <fstream>

#include "ttg/error.hpp"

namespace ttg {

namespace {

int degree_key(const std::string& k) {
  try {
    std::size_t pos = 0;
    int n = std::stoi(k, &pos);
    if (pos == k.size()) return n;
  } catch (const std::exception&) {
  }
  fail("ParseError", "degree key '" + k + "' is not an integer");
}

Scalar scalar_of(const json& e) {
  if (e.is_number_integer()) return Scalar(e.get<long>());
  if (e.is_string()) return Scalar::parse(e.get<std::string>());
  fail("ParseError", "matrix entry must be an integer or a string, got " + e.dump());
}

json scalar_json(const Scalar& s) {
  if (s.is_rational() && s.rational().get_den() == 1 && s.rational().get_num().fits_slong_p())
    return s.rational().get_num().get_si();
  return s.str();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail("ParseError", std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("ParseError", "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail("ParseError", path + ": " + e.what());
  }
}

Poset poset_from_json(const json& j) {
  std::vector<std::string> ids;
  std::map<std::string, int> dims;
  try {
    for (const auto& e : field(j, "elements")) {
      std::string id = e.is_string() ? e.get<std::string>() : field(e, "id").get<std::string>();
      ids.push_back(id);
      if (e.is_object() && e.contains("dim")) dims[id] = e.at("dim").get<int>();
    }
    std::vector<std::pair<std::string, std::string>> rel;
    if (j.contains("relations"))
      for (const auto& r : j.at("relations")) {
        if (!r.is_array() || r.size() != 2) fail("ParseError", "relation must be a pair, got " + r.dump());
        rel.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
      }
    if (!dims.empty() && dims.size() != ids.size()) fail("ParseError", "either every element has a dim or none");
    return validate_poset(ids, rel, dims.empty() ? std::nullopt : std::optional(dims));
  } catch (const json::exception& e) {
    fail("ParseError", e.what());
  }
}

json to_json(const BalmerPoset& P) {
  json j;
  j["elements"] = json::array();
  for (int i = 0; i < static_cast<int>(P.size()); ++i) j["elements"].push_back({{"id", P.id(i)}, {"dim", P.dim(i)}});
  j["relations"] = json::array();
  for (auto [a, b] : P.covers()) j["relations"].push_back({P.id(a), P.id(b)});
  return j;
}

AssemblyData assembly_from_json(const Poset& P, const json& j) {
  try {
    std::vector<std::string> sub = field(j, "subposet").get<std::vector<std::string>>();
    std::map<std::string, std::string> alpha;
    if (j.contains("alpha")) alpha = j.at("alpha").get<std::map<std::string, std::string>>();
    return validate_assembly(P, sub, alpha);
  } catch (const json::exception& e) {
    fail("ParseError", e.what());
  }
}

json to_json(const AssemblyData& A) {
  const auto& P = *A.ambient;
  json j;
  j["subposet"] = json::array();
  for (int x : A.sub) j["subposet"].push_back(P.id(x));
  j["alpha"] = json::object();
  for (int i = 0; i < static_cast<int>(P.size()); ++i) j["alpha"][P.id(i)] = P.id(A.alpha[i]);
  if (!A.scope.empty()) j["scope"] = A.scope;
  return j;
}

Complex complex_from_json(const json& j) {
  Complex C;
  try {
    if (j.contains("terms")) {
      for (const auto& [k, v] : j.at("terms").items()) {
        Terms t;
        for (const auto& w : v) t.push_back(World::parse(w.get<std::string>()));
        if (!t.empty()) C.terms[degree_key(k)] = t;
      }
    } else {
      World w = World::parse(field(j, "world").get<std::string>());
      for (const auto& [k, v] : field(j, "degrees").items()) {
        int r = v.get<int>();
        if (r < 0) fail("ParseError", "negative rank in degree " + k);
        if (r > 0) C.terms[degree_key(k)] = Terms(r, w);
      }
    }
    if (j.contains("diff"))
      for (const auto& [k, v] : j.at("diff").items()) {
        int n = degree_key(k);
        std::size_t rows = C.rank(n - 1), cols = C.rank(n);
        if (v.size() != rows) fail("ParseError", "d" + k + " needs " + std::to_string(rows) + " rows");
        Mat m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
          if (v[r].size() != cols) fail("ParseError", "d" + k + " needs " + std::to_string(cols) + " columns");
          for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_of(v[r][c]);
        }
        C.set_diff(n, m);
      }
  } catch (const json::exception& e) {
    fail("ParseError", e.what());
  }
  C.validate();
  check_window(C);
  return C;
}

json to_json(const Complex& C) {
  json j;
  auto sw = C.single_world();
  if (sw) {
    j["world"] = sw->name();
    j["degrees"] = json::object();
    for (auto& [n, t] : C.terms) j["degrees"][std::to_string(n)] = t.size();
  } else {
    j["terms"] = json::object();
    for (auto& [n, t] : C.terms) {
      json a = json::array();
      for (auto& w : t) a.push_back(w.name());
      j["terms"][std::to_string(n)] = a;
    }
  }
  j["diff"] = json::object();
  for (auto& [n, M] : C.d) {
    if (M.is_zero()) continue;
    json rows = json::array();
    for (std::size_t r = 0; r < M.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < M.cols(); ++c) row.push_back(scalar_json(M(r, c)));
      rows.push_back(row);
    }
    j["diff"][std::to_string(n)] = rows;
  }
  return j;
}

json to_json(const ModuleClass& m) { return m.piece_names(); }

json to_json(const Homology& h) {
  json j = json::object();
  for (auto& [n, m] : h)
    if (!m.is_zero()) j[std::to_string(n)] = to_json(m);
  return j;
}

json to_json(const IsoCertificate& c) {
  return {{"property", c.property}, {"hypothesis", c.hypothesis}, {"holds", c.holds},
          {"lhs", to_json(c.lhs)},  {"rhs", to_json(c.rhs)}};
}

json to_json(const CheckResult& c) { return {{"property", c.property}, {"where", c.where}, {"pass", c.pass}}; }

json to_json(const OracleResult& r) {
  auto prof = [](const LengthProfile& p) {
    json j = json::object();
    for (auto& [n, v] : p) j[std::to_string(n)] = {v.first, v.second};
    return j;
  };
  json j{{"property", "oracle_lengths_match_classification"}, {"entry", r.entry}, {"place", r.place},
         {"applicable", r.applicable}};
  if (r.applicable) {
    j["stabilized"] = r.stabilized;
    j["stable_at"] = r.stable_at;
    j["observed"] = prof(r.observed);
    j["predicted"] = prof(r.predicted);
  }
  j["pass"] = r.pass();
  return j;
}

json to_json(const CousinLayer& c) {
  json j{{"dim", c.dim}, {"prime", c.prime}};
  if (!c.slot.empty()) j["slot"] = c.slot;
  else j["homology"] = to_json(c.h);
  return j;
}

json to_json(const CubeDiagram& D) {
  const auto& I = D.index;
  json v = json::object();
  for (std::size_t i = 0; i < I.vertices.size(); ++i) {
    json e{{"ring", ring_name(D.ring[i])}, {"homology", to_json(homology(D.value[i]))}};
    e["terms"] = to_json(D.value[i]);
    v[I.vertices[i].label()] = e;
  }
  json arrows = json::array();
  for (std::size_t a = 0; a < I.arrows.size(); ++a) {
    const auto& ar = I.arrows[a];
    arrows.push_back({{"src", I.vertices[ar.src].label()},
                      {"dst", I.vertices[ar.dst].label()},
                      {"kind", arrow_kind_name(ar.kind)},
                      {"valued", D.arrow.count(static_cast<int>(a)) > 0}});
  }
  return {{"vertices", v}, {"arrows", arrows}};
}

}  // namespace ttg

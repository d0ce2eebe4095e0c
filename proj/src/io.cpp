#include "heckelab/io.hpp"

#include <stdexcept>

namespace heckelab {

Json scalar_to_json(const Scalar& s) { return to_string(s); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar((long)j.get<long long>());
  if (!j.is_string()) throw std::invalid_argument("scalar: expected string");
  return scalar_from_string(j.get<std::string>());
}

Json svec_to_json(const SVec& v) {
  Json a = Json::array();
  for (auto& x : v) a.push_back(scalar_to_json(x));
  return a;
}

SVec svec_from_json(const Json& j) {
  SVec v;
  for (auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

Json matrix_to_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(scalar_to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

ExactMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix: expected rows");
  int rows = (int)j.size(), cols = (int)j[0].size();
  ExactMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if ((int)j[i].size() != cols) throw std::invalid_argument("matrix: ragged rows");
    for (int c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(j[i][c]);
  }
  return m;
}

Json datum_description_to_json(const std::string& type, const std::string& gamma) {
  Json j;
  j["type"] = type;
  j["lattice"] = (type[0] == 'A') ? "gl" : "adjoint";
  j["gamma"] = gamma.empty() ? "none" : gamma;
  return j;
}

GradedHeckeAlgebraSpec spec_from_json(const Json& j) {
  const Json& d = j.at("datum");
  std::string type = d.at("type").get<std::string>();
  std::string gamma = d.value("gamma", std::string("none"));
  std::map<std::string, Rat> k;
  for (auto& [key, val] : j.at("k").items())
    k[key] = val.is_string() ? rat_from_string(val.get<std::string>())
                             : Rat((long)val.get<long long>());
  Scalar r = scalar_from_json(j.at("r"));
  return make_spec(type, gamma, k, r);
}

Json spec_to_json(const GradedHeckeAlgebraSpec& spec, const std::string& type,
                  const std::string& gamma, const std::map<std::string, Rat>& k) {
  Json j;
  j["datum"] = datum_description_to_json(type, gamma);
  Json kj;
  for (auto& [key, val] : k) kj[key] = rat_to_string(val);
  j["k"] = kj;
  j["r"] = scalar_to_json(spec.r);
  return j;
}

AdditiveParameter additive_from_json(const Json& j) {
  AdditiveParameter p;
  int n = j.at("n").get<int>();
  p.sigma.n = n;
  p.sigma.eigen = svec_from_json(j.at("sigma"));
  if ((int)p.sigma.eigen.size() != n) throw std::invalid_argument("sigma has wrong length");
  p.r = scalar_from_json(j.at("r"));
  p.y.n = n;
  p.y.mat = matrix_from_json(j.at("y"));
  if (p.y.mat.rows != n || p.y.mat.cols != n)
    throw std::invalid_argument("y has wrong shape");
  p.validate();
  return p;
}

Json additive_to_json(const AdditiveParameter& p) {
  Json j;
  j["n"] = p.sigma.n;
  j["sigma"] = svec_to_json(p.sigma.eigen);
  j["r"] = scalar_to_json(p.r);
  j["y"] = matrix_to_json(p.y.mat);
  return j;
}

Json multiplicative_to_json(const MultiplicativeParameter& m) {
  Json j;
  j["s_exp"] = svec_to_json(m.s_exp);
  j["q_exp"] = scalar_to_json(m.q_exp);
  j["N"] = matrix_to_json(m.nil);
  return j;
}

MultiplicativeParameter multiplicative_from_json(const Json& j) {
  MultiplicativeParameter m;
  m.s_exp = svec_from_json(j.at("s_exp"));
  m.n = (int)m.s_exp.size();
  m.q_exp = scalar_from_json(j.at("q_exp"));
  m.nil = matrix_from_json(j.at("N"));
  m.validate();
  return m;
}

Json module_to_json(const FiniteModule& m) {
  Json j;
  for (size_t i = 0; i < m.coord.size(); ++i)
    j["x" + std::to_string(i + 1)] = matrix_to_json(m.coord[i]);
  for (size_t s = 0; s < m.simple_gen.size(); ++s)
    j["Ns" + std::to_string(s + 1)] = matrix_to_json(m.simple_gen[s]);
  for (size_t g = 1; g < m.gamma_gen.size(); ++g)
    j["Ng" + std::to_string(g)] = matrix_to_json(m.gamma_gen[g]);
  return j;
}

Json weight_datum_to_json(const WeightDatum& w) {
  Json j;
  Json ws = Json::array();
  for (auto& [pt, mult] : w.weights) {
    Json e;
    e["point"] = svec_to_json(pt);
    e["multiplicity"] = mult;
    ws.push_back(e);
  }
  j["weights"] = ws;
  j["r"] = scalar_to_json(w.r);
  if (w.has_central_character) {
    j["central_character"] = svec_to_json(w.central_orbit_rep);
  } else {
    j["central_character"] = nullptr;
  }
  return j;
}

}  // namespace heckelab

#pragma once

// JSON views of the library objects.  Rationals are written as strings
// ("3/2"), root indices follow the RootSystem order, and key order is fixed.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chevalley/chevalley_lie.hpp"
#include "chevalley/counterexample_lab.hpp"
#include "chevalley/grading.hpp"
#include "chevalley/kernel_phi.hpp"
#include "chevalley/optimality.hpp"
#include "chevalley/root_system.hpp"

namespace chevalley::io {

using json = nlohmann::ordered_json;

inline std::string rat(const mpq_class& q) { return q.get_str(); }

inline json rat_vec(const RatVec& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(rat(c));
  return out;
}

template <class T>
json int_matrix(const Matrix<T>& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(row);
  }
  return out;
}

inline json rat_matrix(const Matrix<mpq_class>& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rat(m(r, c)));
    out.push_back(row);
  }
  return out;
}

inline json root_list(const RootSystem& rs, const std::vector<std::size_t>& roots) {
  json out = json::array();
  for (auto a : roots) out.push_back(rs.root_name(a));
  return out;
}

inline json to_json(const RootSystem& rs) {
  json j;
  j["type"] = rs.type_name();
  j["isogeny"] = to_string(rs.isogeny());
  j["rank"] = rs.rank();
  j["num_roots"] = rs.num_roots();
  j["num_positive"] = rs.num_positive();
  json roots = json::array();
  for (std::size_t a = 0; a < rs.num_roots(); ++a) {
    json r;
    r["index"] = a;
    r["name"] = rs.root_name(a);
    r["coords"] = rs.root(a);
    r["height"] = rs.height(a);
    r["coroot"] = rs.coroot(a);
    roots.push_back(r);
  }
  j["roots"] = roots;
  j["gram"] = rat_matrix(rs.gram());
  j["cartan_matrix"] = int_matrix(rs.cartan_matrix());
  j["pairing_matrix"] = int_matrix(rs.pairing_matrix());
  json coroots = json::array();
  for (int i = 0; i < rs.rank(); ++i) coroots.push_back(rs.coroot(rs.simple(i)));
  j["simple_coroot_matrix"] = coroots;
  return j;
}

inline json to_json(const StructureConstants& sc) {
  const RootSystem& rs = sc.root_system();
  json j;
  j["type"] = rs.type_name();
  j["isogeny"] = to_string(rs.isogeny());
  j["max_abs"] = sc.max_abs();
  json table;
  for (std::size_t a = 0; a < rs.num_roots(); ++a)
    for (std::size_t b = 0; b < rs.num_roots(); ++b)
      if (sc.root_sum(a, b)) table[std::to_string(a) + "," + std::to_string(b)] = sc.N(a, b);
  j["N"] = table;
  return j;
}

inline json to_json(const CocharRational& c) {
  json j;
  j["coords"] = rat_vec(c.coords);
  j["norm_sq"] = rat(c.norm_sq);
  return j;
}

inline json to_json(const RootSystem& rs, const CocharRational& lambda, const GradingReport& g) {
  json j;
  j["type"] = rs.type_name();
  j["isogeny"] = to_string(rs.isogeny());
  j["lambda"] = to_json(lambda);
  json spaces = json::array();
  for (const auto& [d, roots] : g.weight_spaces) {
    json s;
    s["degree"] = d;
    s["dim"] = g.dim(d);
    s["roots"] = root_list(rs, roots);
    spaces.push_back(s);
  }
  if (g.weight_spaces.find(0) == g.weight_spaces.end()) {
    json s;
    s["degree"] = 0;
    s["dim"] = g.dim(0);
    s["roots"] = json::array();
    spaces.push_back(s);
  }
  j["weight_spaces"] = spaces;
  return j;
}

inline json to_json(const RootSystem& rs, const OptimalityCertificate& cert,
                    const std::optional<BruteForceReport>& brute = std::nullopt) {
  json j;
  j["type"] = rs.type_name();
  j["isogeny"] = to_string(rs.isogeny());
  j["support"] = root_list(rs, cert.support);
  j["mu"] = to_json(cert.mu);
  j["lambda"] = rat_vec(cert.lambda.coords);
  j["k"] = cert.k;
  j["active"] = root_list(rs, cert.active);
  j["multipliers"] = rat_vec(cert.multipliers);
  bool homogeneous = true;
  for (auto a : cert.support) homogeneous = homogeneous && rs.pairing(a, cert.lambda.coords) == cert.k;
  if (homogeneous)
    j["kirwan_ness_torus"] = kirwan_ness_torus_check(rs, cert.support, cert.lambda);
  else
    j["kirwan_ness_torus"] = nullptr;
  if (brute) {
    json b;
    b["box_radius"] = brute->box_radius;
    b["candidates"] = brute->candidates;
    b["violator_count"] = brute->violator_count;
    b["violators"] = brute->violators;
    j["brute_force"] = b;
  }
  return j;
}

inline json to_json(const AbsValue& v) {
  json j;
  j["q"] = v.q;
  if (v.half_exponent)
    j["half_exponent"] = *v.half_exponent;
  else
    j["half_exponent"] = "inf";
  return j;
}

template <class F>
json kernel_blocks(const GradedBlockMap<F>& map) {
  json out = json::array();
  for (const auto& r : check_kernel(map)) {
    json b;
    b["i"] = r.i;
    b["dim_domain"] = r.domain_dim;
    b["dim_codomain"] = r.codomain_dim;
    b["rank"] = r.rank;
    b["injective"] = r.injective;
    out.push_back(b);
  }
  return out;
}

template <class F>
json coefficients(const RootSystem& rs, const LieElement<F>& x) {
  json out;
  for (const auto& [i, c] : x.terms()) {
    const std::string key = i < rs.num_roots() ? rs.root_name(i) : "h" + std::to_string(i - rs.num_roots() + 1);
    out[key] = x.field().to_string(c);
  }
  if (out.is_null()) out = json::object();
  return out;
}

inline json to_json(const RootSystem& rs, const RegularCounterexample& ce) {
  json j;
  j["type"] = rs.type_name();
  j["isogeny"] = to_string(rs.isogeny());
  j["rank"] = rs.rank();
  j["p"] = ce.p;
  j["found"] = true;
  j["X"] = coefficients(rs, ce.x);
  j["Y"] = coefficients(rs, ce.y);
  json transcript;
  transcript["lambda"] = rat_vec(ce.lambda.coords);
  transcript["k"] = ce.k;
  transcript["degree_of_X"] = ce.degree_of_x;
  transcript["cartan_component_of_bracket"] = ce.cartan_of_bracket;
  bool zero = true;
  for (auto v : ce.cartan_of_bracket) zero = zero && v == 0;
  transcript["cartan_component_zero"] = zero;
  transcript["X_in_degree_minus_k"] = ce.degree_of_x == -ce.k;
  j["verification"] = transcript;
  return j;
}

inline json to_json(const LatticeImageReport& r) {
  json j;
  j["i"] = r.i;
  j["m"] = r.m;
  json divs = json::array();
  for (const auto& v : r.divisor_valuations) {
    if (v)
      divs.push_back(*v);
    else
      divs.push_back("inf");
  }
  j["divisor_valuations"] = divs;
  j["capped"] = r.capped;
  j["full_rank"] = r.full_rank;
  if (r.det_valuation)
    j["det_valuation"] = *r.det_valuation;
  else
    j["det_valuation"] = nullptr;
  return j;
}

}  // namespace chevalley::io

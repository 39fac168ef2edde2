#pragma once

// The chev command line: one subcommand per library capability, JSON on
// standard output (or --out), exit 0 on success, 1 when a verification fails,
// 2 on usage errors.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "chevalley/chevalley_lie.hpp"
#include "chevalley/corpus.hpp"
#include "chevalley/counterexample_lab.hpp"
#include "chevalley/fields.hpp"
#include "chevalley/grading.hpp"
#include "chevalley/io.hpp"
#include "chevalley/kernel_phi.hpp"
#include "chevalley/notation.hpp"
#include "chevalley/optimality.hpp"
#include "chevalley/root_system.hpp"

namespace chevalley::cli {

using io::json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline const std::vector<std::string>& default_corpus_types() {
  static const std::vector<std::string> types{"A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"};
  return types;
}

struct Options {
  std::string type;
  int rank = 0;
  std::string isogeny = "simply_connected";
  std::string support;
  std::int64_t prime = 0;
  int q = 0;
  int trunc_m = 8;
  int box_radius = 0;
  std::uint64_t seed = 0;
  std::string corpus;
  std::string out;
  std::string lambda;
  std::string valuation;
  int block = 0;
  bool generate = false;
  std::string types;
};

inline RootSystem build_root_system(const Options& o) {
  if (o.type.empty()) throw UsageError("--type is required");
  std::string type = o.type;
  if (type.size() == 1) {
    if (o.rank < 1) throw UsageError("--type " + type + " needs --rank");
    type += std::to_string(o.rank);
  }
  const RootSystem rs = RootSystem::build(type, parse_isogeny(o.isogeny));
  if (o.rank > 0 && rs.rank() != o.rank) throw UsageError("--rank does not match --type");
  return rs;
}

inline const std::string& require(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string(flag) + " is required");
  return value;
}

// lambda from --lambda, else the optimal cocharacter of the support.
inline std::pair<CocharRational, int> cocharacter_for(const RootSystem& rs, const std::vector<std::size_t>& support,
                                                      const Options& o) {
  if (!o.lambda.empty()) {
    const auto lambda = CocharRational::make(rs, parse_int_vector(o.lambda, static_cast<std::size_t>(rs.rank())));
    return {lambda, m_of(rs, support, lambda).k};
  }
  const auto cert = optimal_cocharacter(rs, support);
  return {cert.lambda, cert.k};
}

inline void require_degree(const RootSystem& rs, const std::vector<std::size_t>& support, const CocharRational& lambda,
                           int k) {
  std::vector<std::size_t> top;
  for (auto a : support)
    if (rs.pairing(a, lambda.coords) == k) top.push_back(a);
  if (top.size() == support.size()) return;
  std::string names;
  for (auto a : top) names += (names.empty() ? "" : ",") + rs.root_name(a);
  throw UsageError("support is not concentrated in degree " + std::to_string(k) + "; its degree-" +
                   std::to_string(k) + " part is " + names);
}

inline json header(const RootSystem& rs) {
  json j;
  j["type"] = rs.type_name();
  j["isogeny"] = to_string(rs.isogeny());
  return j;
}

struct Outcome {
  json doc;
  int code = 0;
};

inline Outcome cmd_roots(const Options& o) { return {io::to_json(build_root_system(o)), 0}; }

inline Outcome cmd_constants(const Options& o) { return {io::to_json(StructureConstants(build_root_system(o))), 0}; }

inline Outcome cmd_grade(const Options& o) {
  const RootSystem rs = build_root_system(o);
  CocharRational lambda;
  if (!o.lambda.empty()) {
    lambda = CocharRational::make(rs, parse_int_vector(o.lambda, static_cast<std::size_t>(rs.rank())));
  } else {
    const StructureConstants sc(rs);
    const auto y = parse_element(sc, RationalField(), require(o.support, "--lambda or --support"));
    lambda = optimal_cocharacter(rs, root_support(sc, y)).lambda;
  }
  return {io::to_json(rs, lambda, grade(rs, lambda)), 0};
}

inline Outcome cmd_optimal(const Options& o) {
  const RootSystem rs = build_root_system(o);
  const StructureConstants sc(rs);
  const auto y = parse_element(sc, RationalField(), require(o.support, "--support"));
  const auto support = root_support(sc, y);
  auto cert = optimal_cocharacter(rs, support);
  std::optional<BruteForceReport> brute;
  if (o.box_radius > 0) {
    brute = brute_force_verify(rs, support, cert, o.box_radius);
    cert.brute_force_checked = true;
    cert.box_radius = o.box_radius;
  }
  json j = io::to_json(rs, cert, brute);
  bool homogeneous = true;
  for (auto a : support) homogeneous = homogeneous && rs.pairing(a, cert.lambda.coords) == cert.k;
  if (homogeneous)
    j["sl2_certificate"] = sl2_partner(sc, y, cert).has_value();
  else
    j["sl2_certificate"] = nullptr;
  return {j, brute && !brute->ok() ? 1 : 0};
}

inline Outcome cmd_kernel_check(const Options& o) {
  const RootSystem rs = build_root_system(o);
  const StructureConstants sc(rs);
  const RationalField q;
  const auto y = parse_element(sc, q, require(o.support, "--support"));
  const auto support = root_support(sc, y);
  const auto [lambda, k] = cocharacter_for(rs, support, o);
  require_degree(rs, support, lambda, k);
  json j = header(rs);
  j["support"] = io::coefficients(rs, y);
  j["lambda"] = io::rat_vec(lambda.coords);
  j["k"] = k;
  const auto map = graded_ad(sc, y, lambda, k);
  const GradingReport g = grade(rs, lambda);
  bool symmetric = true;
  for (int i = 1; i < k; ++i) symmetric = symmetric && g.dim(-i) == g.dim(k - i);
  j["dimension_symmetry"] = symmetric;
  json fields = json::array();
  bool ok = true;
  auto record = [&](const std::string& name, const json& blocks) {
    json f;
    f["field"] = name;
    f["blocks"] = blocks;
    bool inj = true;
    for (const auto& b : blocks) inj = inj && b["injective"].get<bool>();
    f["injective"] = inj;
    ok = ok && inj;
    fields.push_back(f);
  };
  record(q.name(), io::kernel_blocks(map));
  if (o.prime) {
    const PrimeField fp(o.prime);
    record(fp.name(), io::kernel_blocks(graded_ad(sc, parse_element(sc, fp, o.support), lambda, k)));
  }
  j["fields"] = fields;
  j["injective"] = ok;
  return {j, ok ? 0 : 1};
}

template <class F>
json phi_json(const StructureConstants& sc, const LieElement<F>& y, const CocharRational& lambda, int k) {
  const auto rep = phi_report(sc, y, lambda, k);
  json j;
  j["field"] = y.field().name();
  j["phi"] = io::to_json(rep.value);
  json dets = json::array();
  for (const auto& [i, v] : rep.det_valuations) {
    json d;
    d["i"] = i;
    if (v)
      d["det_valuation"] = *v;
    else
      d["det_valuation"] = "inf";
    dets.push_back(d);
  }
  j["blocks"] = dets;
  return j;
}

template <class F>
Outcome phi_in(const StructureConstants& sc, const F& field, const Options& o) {
  const RootSystem& rs = sc.root_system();
  const auto x = parse_element(sc, field, o.support);
  const auto support = root_support(sc, x);
  const auto [lambda, k] = cocharacter_for(rs, support, o);
  require_degree(rs, support, lambda, k);
  json j = header(rs);
  j["lambda"] = io::rat_vec(lambda.coords);
  j["k"] = k;
  const json body = phi_json(sc, x, lambda, k);
  for (const auto& [key, value] : body.items()) j[key] = value;
  return {j, 0};
}

inline Outcome cmd_phi(const Options& o) {
  const RootSystem rs = build_root_system(o);
  const StructureConstants sc(rs);
  require(o.support, "--support");
  if (!o.prime == !o.q) throw UsageError("give exactly one of --prime (Q with p-adic valuation) or --q (F_q(t))");
  return o.prime ? phi_in(sc, RationalField(o.prime), o) : phi_in(sc, RationalFunctionField(o.q), o);
}

template <class F>
json rrao_json(const StructureConstants& sc, const LieElement<F>& x, const CocharRational& lambda, int k,
               const IntVec& v, bool& ok) {
  const auto rep = verify_rrao(sc, x, lambda, k, v);
  const bool inverse = verify_phi_inverse(sc, x, lambda, k);
  json j;
  j["field"] = x.field().name();
  j["valuation"] = v;
  j["phi_before"] = io::to_json(rep.before);
  j["phi_after"] = io::to_json(rep.after);
  j["delta_exponent"] = rep.delta_exponent;
  j["rrao"] = rep.ok;
  j["phi_inverse"] = inverse;
  ok = rep.ok && inverse;
  return j;
}

template <class F>
Outcome rrao_in(const StructureConstants& sc, const F& field, const Options& o) {
  const RootSystem& rs = sc.root_system();
  const auto x = parse_element(sc, field, o.support);
  const auto support = root_support(sc, x);
  const auto [lambda, k] = cocharacter_for(rs, support, o);
  require_degree(rs, support, lambda, k);
  const IntVec v = parse_int_vector(o.valuation, static_cast<std::size_t>(rs.rank()));
  json j = header(rs);
  j["lambda"] = io::rat_vec(lambda.coords);
  j["k"] = k;
  bool ok = false;
  const json body = rrao_json(sc, x, lambda, k, v, ok);
  for (const auto& [key, value] : body.items()) j[key] = value;
  j["ok"] = ok;
  return {j, ok ? 0 : 1};
}

inline Outcome cmd_rrao(const Options& o) {
  const RootSystem rs = build_root_system(o);
  const StructureConstants sc(rs);
  require(o.support, "--support");
  require(o.valuation, "--valuation");
  if (!o.prime == !o.q) throw UsageError("give exactly one of --prime or --q");
  return o.prime ? rrao_in(sc, RationalField(o.prime), o) : rrao_in(sc, RationalFunctionField(o.q), o);
}

inline Outcome cmd_snf(const Options& o) {
  const RootSystem rs = build_root_system(o);
  json j = header(rs);
  if (o.support.empty()) {
    json divs = json::array();
    for (const auto& d : coker_eta(rs)) divs.push_back(d.get_str());
    j["coker_eta"] = divs;
    return {j, 0};
  }
  if (!o.q) throw UsageError("lattice images need --q");
  if (o.trunc_m < 1) throw UsageError("--trunc-m must be >= 1");
  const StructureConstants sc(rs);
  const RationalFunctionField field(o.q);
  const auto y = parse_element(sc, field, o.support);
  const auto support = root_support(sc, y);
  const auto [lambda, k] = cocharacter_for(rs, support, o);
  require_degree(rs, support, lambda, k);
  j["lambda"] = io::rat_vec(lambda.coords);
  j["k"] = k;
  j["q"] = o.q;
  json blocks = json::array();
  bool ok = true;
  for (int i = 1; i < k; ++i) {
    if (o.block && i != o.block) continue;
    const auto rep = lattice_image(sc, y, lambda, k, i, o.trunc_m);
    json b = io::to_json(rep);
    if (rep.full_rank && rep.det_valuation) {
      std::int64_t sum = 0;
      for (const auto& v : rep.divisor_valuations) sum += *v;
      b["sum_matches_det"] = sum == *rep.det_valuation;
      ok = ok && sum == *rep.det_valuation;
    }
    blocks.push_back(b);
  }
  j["lattice_images"] = blocks;
  return {j, ok ? 0 : 1};
}

inline Outcome cmd_counterexample(const Options& o) {
  const RootSystem rs = build_root_system(o);
  if (!o.prime) throw UsageError("--prime is required");
  const StructureConstants sc(rs);
  json divs = json::array();
  for (const auto& d : coker_eta(rs)) divs.push_back(d.get_str());
  const auto ce = regular_counterexample(sc, o.prime);
  if (!ce) {
    json j = header(rs);
    j["rank"] = rs.rank();
    j["p"] = o.prime;
    j["found"] = false;
    j["coker_eta"] = divs;
    return {j, 0};
  }
  json j = io::to_json(rs, *ce);
  j["coker_eta"] = divs;
  const bool ok = j["verification"]["cartan_component_zero"].get<bool>() &&
                  j["verification"]["X_in_degree_minus_k"].get<bool>();
  return {j, ok ? 0 : 1};
}

inline Outcome cmd_corpus(const Options& o) {
  if (o.generate) {
    std::vector<std::string> types = default_corpus_types();
    if (!o.types.empty()) types = split(o.types, ',');
    return {corpus_document(o.seed, generate_corpus(o.seed, types)), 0};
  }
  std::ifstream in(require(o.corpus, "--corpus"));
  if (!in) throw UsageError("cannot read corpus file " + o.corpus);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("corpus is not valid JSON: ") + e.what());
  }
  auto report = run_corpus(parse_corpus(doc));
  return {report.report, report.ok ? 0 : 1};
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Chevalley bases, optimal cocharacters and graded bracket maps", "chev"};
  app.require_subcommand(1, 1);
  Options o;

  auto lie = [&](CLI::App* sub) {
    sub->add_option("--type", o.type, "Cartan type, e.g. A2, B3xA1, or a series letter with --rank");
    sub->add_option("--rank", o.rank, "rank when --type is a series letter");
    sub->add_option("--isogeny", o.isogeny, "simply_connected (sc) or adjoint (ad)");
    sub->add_option("--out", o.out, "write JSON here instead of standard output");
  };
  auto with_support = [&](CLI::App* sub) {
    sub->add_option("--support", o.support, "roots with optional coefficients, e.g. a1,a1+a2=3");
    sub->add_option("--lambda", o.lambda, "integral cocharacter in lattice coordinates (default: optimal)");
  };

  auto* roots = app.add_subcommand("roots", "root system, Gram and coroot matrices");
  lie(roots);
  auto* constants = app.add_subcommand("constants", "structure constants N_{a,b}");
  lie(constants);
  auto* grade_cmd = app.add_subcommand("grade", "weight spaces of a cocharacter");
  lie(grade_cmd);
  with_support(grade_cmd);
  auto* optimal = app.add_subcommand("optimal", "optimal cocharacter of a nilpotent element");
  lie(optimal);
  with_support(optimal);
  optimal->add_option("--box-radius", o.box_radius, "brute-force search radius");
  auto* kernel = app.add_subcommand("kernel-check", "injectivity of the graded bracket blocks");
  lie(kernel);
  with_support(kernel);
  kernel->add_option("--prime", o.prime, "also check over F_p");
  auto* phi_cmd = app.add_subcommand("phi", "phi as a power of q^(-1/2)");
  lie(phi_cmd);
  with_support(phi_cmd);
  phi_cmd->add_option("--prime", o.prime, "Q with the p-adic valuation");
  phi_cmd->add_option("--q", o.q, "F_q(t) with the t-adic valuation");
  auto* rrao = app.add_subcommand("rrao-check", "torus transformation law of phi and phi(-X) = phi(X)");
  lie(rrao);
  with_support(rrao);
  rrao->add_option("--prime", o.prime, "Q with the p-adic valuation");
  rrao->add_option("--q", o.q, "F_q(t) with the t-adic valuation");
  rrao->add_option("--valuation", o.valuation, "valuation covector of the torus element");
  auto* snf = app.add_subcommand("snf", "coker(eta), or lattice images with --support and --q");
  lie(snf);
  with_support(snf);
  snf->add_option("--q", o.q, "F_q for lattice images over F_q[t]");
  snf->add_option("--trunc-m", o.trunc_m, "truncation exponent m");
  snf->add_option("--block", o.block, "only block i");
  auto* counter = app.add_subcommand("counterexample", "mod-p degeneracy for the regular nilpotent");
  lie(counter);
  counter->add_option("--prime", o.prime, "characteristic");
  auto* corpus = app.add_subcommand("corpus", "run or generate a corpus");
  corpus->add_option("--corpus", o.corpus, "corpus file to run");
  corpus->add_option("--out", o.out, "write JSON here instead of standard output");
  corpus->add_flag("--generate", o.generate, "write a fresh corpus instead of running one");
  corpus->add_option("--seed", o.seed, "seed for --generate");
  corpus->add_option("--types", o.types, "comma separated types for --generate");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "chev: " << e.what() << "\n" << app.help();
    return 2;
  }

  Outcome result;
  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "corpus" && o.generate && !o.corpus.empty()) throw UsageError("--generate and --corpus are exclusive");
    if (name == "roots") result = cmd_roots(o);
    else if (name == "constants") result = cmd_constants(o);
    else if (name == "grade") result = cmd_grade(o);
    else if (name == "optimal") result = cmd_optimal(o);
    else if (name == "kernel-check") result = cmd_kernel_check(o);
    else if (name == "phi") result = cmd_phi(o);
    else if (name == "rrao-check") result = cmd_rrao(o);
    else if (name == "snf") result = cmd_snf(o);
    else if (name == "counterexample") result = cmd_counterexample(o);
    else result = cmd_corpus(o);
  } catch (const std::invalid_argument& e) {
    err << "chev: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "chev: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "chev: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "chev: internal error: " << e.what() << "\n";
    return 1;
  }

  const std::string text = result.doc.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      err << "chev: cannot write " << o.out << "\n";
      return 2;
    }
    f << text;
  }
  return result.code;
}

}  // namespace chevalley::cli

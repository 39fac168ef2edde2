#pragma once

// Corpus of nilpotent instances (Y, lambda optimal) and the per-instance
// verification report: optimality certificates, graded block ranks over Q and
// prime fields, dimension symmetry, and phi over Q with a p-adic valuation.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chevalley/chevalley_lie.hpp"
#include "chevalley/fields.hpp"
#include "chevalley/grading.hpp"
#include "chevalley/io.hpp"
#include "chevalley/kernel_phi.hpp"
#include "chevalley/notation.hpp"
#include "chevalley/optimality.hpp"
#include "chevalley/root_system.hpp"

namespace chevalley {

inline constexpr const char* corpus_schema = "chevalley-corpus/1";
inline constexpr const char* corpus_report_schema = "chevalley-corpus-report/1";

struct CorpusEntry {
  std::string id;
  std::string type;
  Isogeny isogeny = Isogeny::simply_connected;
  std::string kind;     // single_root, simple_sum, random
  std::string support;  // notation.hpp syntax
  std::int64_t valuation_prime = 2;
  std::vector<std::int64_t> primes{2, 3, 5, 7};
};

inline io::json to_json(const CorpusEntry& e) {
  io::json j;
  j["id"] = e.id;
  j["type"] = e.type;
  j["isogeny"] = to_string(e.isogeny);
  j["kind"] = e.kind;
  j["support"] = e.support;
  j["valuation_prime"] = e.valuation_prime;
  j["primes"] = e.primes;
  return j;
}

inline std::vector<CorpusEntry> parse_corpus(const io::json& doc) {
  if (!doc.is_object() || !doc.contains("schema")) throw std::invalid_argument("corpus: missing schema field");
  if (doc["schema"] != corpus_schema)
    throw std::invalid_argument("corpus: unsupported schema " + doc["schema"].dump());
  std::vector<CorpusEntry> out;
  for (const auto& j : doc.at("entries")) {
    CorpusEntry e;
    e.id = j.at("id").get<std::string>();
    e.type = j.at("type").get<std::string>();
    e.isogeny = parse_isogeny(j.value("isogeny", std::string("simply_connected")));
    e.kind = j.value("kind", std::string("custom"));
    e.support = j.at("support").get<std::string>();
    e.valuation_prime = j.value("valuation_prime", std::int64_t{2});
    if (j.contains("primes")) e.primes = j["primes"].get<std::vector<std::int64_t>>();
    out.push_back(std::move(e));
  }
  return out;
}

inline bool all_simply_laced(const RootSystem& rs) {
  for (const auto& f : rs.cartan_type())
    if (f.series != 'A' && f.series != 'D' && f.series != 'E') return false;
  return true;
}

// p divides no coefficient of the highest root of any factor.  Good primes
// also divide no structure constant.
inline bool prime_is_good(const RootSystem& rs, std::int64_t p) {
  for (const auto& f : rs.cartan_type()) {
    std::int64_t worst = 1;
    if (f.series == 'B' || f.series == 'C' || f.series == 'D') worst = 2;
    if (f.series == 'F' || f.series == 'G' || (f.series == 'E' && f.rank < 8)) worst = 3;
    if (f.series == 'E' && f.rank == 8) worst = 5;
    if (p <= worst) return false;
  }
  return true;
}

struct EntryResult {
  io::json report;
  bool ok = false;                     // every asserted check passed
  std::size_t reported_failures = 0;  // non-injective blocks over unasserted primes
};

inline EntryResult evaluate_entry(const CorpusEntry& e) {
  const RootSystem rs = RootSystem::build(e.type, e.isogeny);
  const StructureConstants sc(rs);
  const RationalField qp(e.valuation_prime);
  const auto y = parse_element(sc, qp, e.support);
  if (y.is_zero()) throw std::invalid_argument("corpus entry " + e.id + ": Y = 0");
  const auto support = root_support(sc, y);
  const auto cert = optimal_cocharacter(rs, support);

  EntryResult res;
  io::json& j = res.report;
  j["id"] = e.id;
  j["type"] = rs.type_name();
  j["isogeny"] = to_string(rs.isogeny());
  j["kind"] = e.kind;
  j["support"] = io::coefficients(rs, y);
  j["mu"] = io::rat_vec(cert.mu.coords);
  j["lambda"] = io::rat_vec(cert.lambda.coords);
  j["k"] = cert.k;

  io::json checks;
  bool homogeneous = true;
  for (auto a : support) homogeneous = homogeneous && rs.pairing(a, cert.lambda.coords) == cert.k;
  checks["homogeneous"] = homogeneous;
  if (!homogeneous) {
    j["checks"] = checks;
    j["ok"] = false;
    return res;
  }
  const bool kn = kirwan_ness_torus_check(rs, support, cert.lambda);
  const bool sl2 = sl2_partner(sc, y, cert).has_value();
  checks["kirwan_ness_torus"] = kn;
  checks["sl2_certificate"] = sl2;

  const GradingReport g = grade(rs, cert.lambda);
  bool symmetric = true;
  for (int i = 1; i < cert.k; ++i) symmetric = symmetric && g.dim(-i) == g.dim(cert.k - i);
  checks["dimension_symmetry"] = symmetric;

  const auto map = graded_ad(sc, y, cert.lambda, cert.k);
  bool injective_q = true;
  io::json blocks = io::json::array();
  for (const auto& r : check_kernel(map)) {
    io::json b;
    b["i"] = r.i;
    b["dim_domain"] = r.domain_dim;
    b["dim_codomain"] = r.codomain_dim;
    b["rank"] = r.rank;
    b["injective"] = r.injective;
    const auto& m = map.blocks.at(r.i).matrix;
    if (m.square()) {
      const auto det = determinant(qp, m);
      if (qp.is_zero(det))
        b["det_valuation"] = "inf";
      else
        b["det_valuation"] = qp.valuation(det);
    } else {
      b["det_valuation"] = nullptr;
    }
    injective_q = injective_q && r.injective;
    blocks.push_back(b);
  }
  j["blocks"] = blocks;
  checks["injective_Q"] = injective_q;

  bool injective_fp = true;
  io::json primes = io::json::array();
  const bool simply_laced = all_simply_laced(rs);
  for (auto p : e.primes) {
    io::json pj;
    pj["p"] = p;
    const PrimeField fp(p);
    LieElement<PrimeField> yp(fp);
    bool reducible = true;
    for (const auto& [i, c] : y.terms()) {
      const mpz_class den = c.get_den() % p;
      const mpz_class num = c.get_num() % p;
      if (den == 0 || num == 0) {
        reducible = false;
        break;
      }
      yp.add_term(i, parse_coefficient(fp, c.get_str()));
    }
    if (!reducible) {
      pj["status"] = "skipped";
      primes.push_back(pj);
      continue;
    }
    const bool asserted = simply_laced || prime_is_good(rs, p);
    bool inj = true;
    for (const auto& r : check_kernel(graded_ad(sc, yp, cert.lambda, cert.k))) inj = inj && r.injective;
    pj["status"] = asserted ? "asserted" : "reported";
    pj["injective"] = inj;
    if (asserted)
      injective_fp = injective_fp && inj;
    else if (!inj)
      ++res.reported_failures;
    primes.push_back(pj);
  }
  j["primes"] = primes;
  checks["injective_Fp"] = injective_fp;

  const AbsValue value = symmetric && injective_q ? phi(sc, y, cert.lambda, cert.k) : AbsValue{e.valuation_prime, std::nullopt};
  j["phi"] = io::to_json(value);
  checks["phi_finite"] = !value.is_zero();

  j["checks"] = checks;
  res.ok = homogeneous && kn && sl2 && symmetric && injective_q && injective_fp && !value.is_zero();
  j["ok"] = res.ok;
  return res;
}

struct CorpusReport {
  io::json report;
  bool ok = false;
};

inline CorpusReport run_corpus(const std::vector<CorpusEntry>& entries) {
  CorpusReport out;
  io::json list = io::json::array();
  std::size_t passed = 0, reported = 0;
  for (const auto& e : entries) {
    auto r = evaluate_entry(e);
    passed += r.ok ? 1 : 0;
    reported += r.reported_failures;
    list.push_back(std::move(r.report));
  }
  out.report["schema"] = corpus_report_schema;
  out.report["entries"] = list;
  io::json summary;
  summary["entries"] = entries.size();
  summary["passed"] = passed;
  summary["failed"] = entries.size() - passed;
  summary["reported_bad_prime_failures"] = reported;
  out.report["summary"] = summary;
  out.ok = passed == entries.size();
  return out;
}

// Deterministic corpus: every positive root alone, the sum of the simple
// roots, and `random_per_type` random supports per type.  Random supports are
// linearly independent sets of positive roots; such a support S is replaced
// by its degree-k part S(k) and kept only when the optimum of S(k) passes both
// the torus check and the sl2-triple certificate.
inline std::vector<CorpusEntry> generate_corpus(std::uint64_t seed, const std::vector<std::string>& types,
                                                int random_per_type = 5) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> out;
  for (const auto& type : types) {
    const RootSystem rs = RootSystem::build(type, Isogeny::simply_connected);
    const StructureConstants sc(rs);
    const std::string name = rs.type_name();
    for (std::size_t a = 0; a < rs.num_positive(); ++a)
      out.push_back({name + "-root-" + std::to_string(a), name, rs.isogeny(), "single_root", rs.root_name(a)});
    std::string simple;
    for (int i = 0; i < rs.rank(); ++i) simple += (i ? "," : "") + rs.root_name(rs.simple(i));
    out.push_back({name + "-regular", name, rs.isogeny(), "simple_sum", simple});

    std::vector<std::size_t> simple_set;
    for (int i = 0; i < rs.rank(); ++i) simple_set.push_back(rs.simple(i));
    std::set<std::vector<std::size_t>> seen;
    int accepted = 0;
    for (int attempt = 0; accepted < random_per_type && attempt < 2000; ++attempt) {
      const std::size_t size = 2 + rng() % 3;
      std::set<std::size_t> pick;
      while (pick.size() < std::min(size, rs.num_positive())) pick.insert(rng() % rs.num_roots());
      std::vector<std::size_t> s(pick.begin(), pick.end());
      // independent roots: every minor of a +-1 element is 0 or +-1, so the
      // reduction mod p stays in the same orbit type
      Matrix<mpq_class> vecs(s.size(), static_cast<std::size_t>(rs.rank()), 0);
      for (std::size_t r = 0; r < s.size(); ++r)
        for (int c = 0; c < rs.rank(); ++c) vecs(r, static_cast<std::size_t>(c)) = rs.root(s[r])[static_cast<std::size_t>(c)];
      if (rank(RationalField(), vecs) < s.size()) continue;
      OptimalityCertificate cert;
      try {
        cert = optimal_cocharacter(rs, s);
      } catch (const std::invalid_argument&) {
        continue;
      }
      std::vector<std::size_t> top;
      for (auto r : s)
        if (rs.pairing(r, cert.lambda.coords) == cert.k) top.push_back(r);
      if (top.size() < 2 || top == simple_set || !seen.insert(top).second) continue;
      const auto cert_top = optimal_cocharacter(rs, top);
      if (!(cert_top.lambda == cert.lambda) || !kirwan_ness_torus_check(rs, top, cert_top.lambda)) continue;
      std::string text;
      LieElement<RationalField> y{RationalField()};
      for (auto r : top) {
        const int c = rng() % 2 ? 1 : -1;
        text += (text.empty() ? "" : ",") + rs.root_name(r) + (c == 1 ? "" : "=-1");
        y.add_term(r, c);
      }
      if (!sl2_partner(sc, y, cert_top)) continue;
      out.push_back({name + "-random-" + std::to_string(accepted), name, rs.isogeny(), "random", text});
      ++accepted;
    }
  }
  return out;
}

inline io::json corpus_document(std::uint64_t seed, const std::vector<CorpusEntry>& entries) {
  io::json doc;
  doc["schema"] = corpus_schema;
  doc["seed"] = seed;
  io::json list = io::json::array();
  for (const auto& e : entries) list.push_back(to_json(e));
  doc["entries"] = list;
  return doc;
}

}  // namespace chevalley

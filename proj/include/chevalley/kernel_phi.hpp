#pragma once

// Graded bracket maps [Y, .] : g_lambda(-i) -> g_lambda(k-i), their
// injectivity, the density phi as an exact power of q^(-1/2), its
// transformation laws, and elementary divisors of the blocks over the
// valuation ring.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chevalley/chevalley_lie.hpp"
#include "chevalley/fields.hpp"
#include "chevalley/grading.hpp"
#include "chevalley/linalg.hpp"

namespace chevalley {

template <class F>
struct GradedBlock {
  std::vector<std::size_t> domain;    // roots of degree -i, column order
  std::vector<std::size_t> codomain;  // roots of degree k-i, row order
  FieldMatrix<F> matrix;
};

template <class F>
struct GradedBlockMap {
  F field;
  int k = 0;
  std::map<int, GradedBlock<F>> blocks;  // i = 1..k-1, blocks between zero spaces omitted
};

// Throws unless every term of y is a root vector of degree k for lambda.
template <class F>
void require_homogeneous(const StructureConstants& sc, const LieElement<F>& y, const CocharRational& lambda, int k) {
  const RootSystem& rs = sc.root_system();
  if (!lambda.is_integral()) throw std::invalid_argument("cocharacter is not integral");
  for (const auto& [i, v] : y.terms())
    if (i >= rs.num_roots() || rs.pairing(i, lambda.coords) != k)
      throw std::invalid_argument("element has components outside degree " + std::to_string(k));
}

template <class F>
GradedBlockMap<F> graded_ad(const StructureConstants& sc, const LieElement<F>& y, const CocharRational& lambda, int k) {
  require_homogeneous(sc, y, lambda, k);
  const RootSystem& rs = sc.root_system();
  const F& field = y.field();
  const GradingReport g = grade(rs, lambda);
  GradedBlockMap<F> out{field, k, {}};
  for (int i = 1; i < k; ++i) {
    if (g.dim(-i) == 0 && g.dim(k - i) == 0) continue;
    GradedBlock<F> b{g.roots_in(-i), g.roots_in(k - i), zero_matrix(field, g.dim(k - i), g.dim(-i))};
    std::map<std::size_t, std::size_t> row_of;
    for (std::size_t r = 0; r < b.codomain.size(); ++r) row_of[b.codomain[r]] = r;
    for (std::size_t c = 0; c < b.domain.size(); ++c) {
      const auto image = bracket(sc, y, LieElement<F>::basis(field, b.domain[c], field.one()));
      for (const auto& [idx, v] : image.terms()) b.matrix(row_of.at(idx), c) = v;
    }
    out.blocks.emplace(i, std::move(b));
  }
  return out;
}

struct BlockKernelReport {
  int i = 0;
  std::size_t domain_dim = 0, codomain_dim = 0, rank = 0;
  bool injective = false, surjective = false;
};

template <class F>
std::vector<BlockKernelReport> check_kernel(const GradedBlockMap<F>& map) {
  std::vector<BlockKernelReport> out;
  for (const auto& [i, b] : map.blocks) {
    BlockKernelReport r;
    r.i = i;
    r.domain_dim = b.domain.size();
    r.codomain_dim = b.codomain.size();
    r.rank = rank(map.field, b.matrix);
    r.injective = r.rank == r.domain_dim;
    r.surjective = r.rank == r.codomain_dim;
    out.push_back(r);
  }
  return out;
}

// The same blocks reinterpreted over another field: integer entries are mapped
// through from_int.  Only meaningful for maps whose entries are integers.
template <class G>
GradedBlockMap<G> reduce_blocks(const GradedBlockMap<RationalField>& map, const G& target) {
  GradedBlockMap<G> out{target, map.k, {}};
  for (const auto& [i, b] : map.blocks) {
    GradedBlock<G> nb{b.domain, b.codomain, zero_matrix(target, b.matrix.rows(), b.matrix.cols())};
    for (std::size_t r = 0; r < b.matrix.rows(); ++r)
      for (std::size_t c = 0; c < b.matrix.cols(); ++c) {
        const mpq_class& v = b.matrix(r, c);
        if (v.get_den() != 1) throw std::domain_error("reduce_blocks: non-integral entry");
        nb.matrix(r, c) = target.from_int(v.get_num().get_si());
      }
    out.blocks.emplace(i, std::move(nb));
  }
  return out;
}

// q^(-e/2); a missing exponent encodes the value 0.
struct AbsValue {
  std::int64_t q = 0;
  std::optional<std::int64_t> half_exponent = 0;

  bool is_zero() const { return !half_exponent.has_value(); }
  AbsValue operator*(const AbsValue& o) const {
    if (is_zero() || o.is_zero()) return {q, std::nullopt};
    return {q, *half_exponent + *o.half_exponent};
  }
  bool operator==(const AbsValue&) const = default;
  std::string to_string() const {
    if (is_zero()) return "0";
    return std::to_string(q) + "^(" + std::to_string(-*half_exponent) + "/2)";
  }
};

struct PhiReport {
  AbsValue value;
  std::map<int, std::optional<std::int64_t>> det_valuations;  // per block, nullopt when det = 0
};

template <class F>
PhiReport phi_report(const StructureConstants& sc, const LieElement<F>& x, const CocharRational& lambda, int k) {
  const F& field = x.field();
  if (!field.has_valuation()) throw std::domain_error("phi: coefficient field carries no valuation");
  const auto map = graded_ad(sc, x, lambda, k);
  PhiReport rep;
  rep.value = AbsValue{field.residue_cardinality(), 0};
  for (const auto& [i, b] : map.blocks) {
    if (!b.matrix.square())
      throw std::domain_error("phi: block " + std::to_string(i) + " is not square");
    const auto det = determinant(field, b.matrix);
    if (field.is_zero(det)) {
      rep.det_valuations[i] = std::nullopt;
      rep.value.half_exponent = std::nullopt;
    } else {
      const auto v = field.valuation(det);
      rep.det_valuations[i] = v;
      if (rep.value.half_exponent) *rep.value.half_exponent += v;
    }
  }
  return rep;
}

template <class F>
AbsValue phi(const StructureConstants& sc, const LieElement<F>& x, const CocharRational& lambda, int k) {
  return phi_report(sc, x, lambda, k).value;
}

template <class F>
bool verify_phi_inverse(const StructureConstants& sc, const LieElement<F>& x, const CocharRational& lambda, int k) {
  return phi(sc, -x, lambda, k) == phi(sc, x, lambda, k);
}

// Ad_m for the torus element m = uniformizer^v: E_alpha -> uniformizer^<alpha,v> E_alpha.
template <class F>
LieElement<F> torus_act(const StructureConstants& sc, const LieElement<F>& x, const IntVec& valuation) {
  const RootSystem& rs = sc.root_system();
  const F& field = x.field();
  LieElement<F> out(field);
  for (const auto& [i, c] : x.terms()) {
    if (i >= rs.num_roots()) {
      out.add_term(i, c);
      continue;
    }
    out.add_term(i, field.mul(c, field.uniformizer_pow(rs.pairing(i, valuation))));
  }
  return out;
}

struct RraoReport {
  AbsValue before, after;
  std::int64_t delta_exponent = 0;  // delta_{lambda,(1,k)}(m) = q^-delta_exponent
  bool ok = false;
};

template <class F>
RraoReport verify_rrao(const StructureConstants& sc, const LieElement<F>& x, const CocharRational& lambda, int k,
                       const IntVec& valuation) {
  RraoReport rep;
  rep.before = phi(sc, x, lambda, k);
  rep.after = phi(sc, torus_act(sc, x, valuation), lambda, k);
  rep.delta_exponent = k > 1 ? chevalley::delta_exponent(sc.root_system(), lambda, 1, k, valuation) : 0;
  if (rep.before.is_zero() || rep.after.is_zero())
    rep.ok = rep.before.is_zero() && rep.after.is_zero();
  else
    rep.ok = *rep.after.half_exponent == *rep.before.half_exponent + 2 * rep.delta_exponent;
  return rep;
}

struct LatticeImageReport {
  int i = 0;
  int m = 0;
  std::vector<std::optional<std::int64_t>> divisor_valuations;  // ascending, nullopt = infinite
  std::vector<std::int64_t> capped;                             // min(v, m)
  bool full_rank = false;
  std::optional<std::int64_t> det_valuation;                    // square blocks only
};

// Elementary divisors of [Y, .] : g_lambda(-i; O) -> g_lambda(k-i; O) over the
// valuation ring O of F_q((t)), read modulo t^m.
inline LatticeImageReport lattice_image(const StructureConstants& sc, const LieElement<RationalFunctionField>& y,
                                        const CocharRational& lambda, int k, int i, int m) {
  if (m < 1) throw std::invalid_argument("lattice_image: truncation m must be >= 1");
  if (i < 1 || i >= k) throw std::invalid_argument("lattice_image: block index out of range");
  const RationalFunctionField& field = y.field();
  for (const auto& [idx, c] : y.terms())
    if (c.den != std::vector<int>{1}) throw std::invalid_argument("lattice_image: coefficients must be polynomials in t");
  const auto map = graded_ad(sc, y, lambda, k);
  LatticeImageReport rep;
  rep.i = i;
  rep.m = m;
  auto found = map.blocks.find(i);
  if (found == map.blocks.end()) {
    rep.full_rank = true;
    rep.det_valuation = 0;
    return rep;
  }
  const auto& b = found->second;
  rep.divisor_valuations = local_smith_valuations(field, b.matrix);
  rep.full_rank = b.matrix.rows() == b.matrix.cols();
  for (const auto& v : rep.divisor_valuations) {
    if (!v) rep.full_rank = false;
    rep.capped.push_back(v ? std::min<std::int64_t>(*v, m) : m);
  }
  if (b.matrix.square()) {
    const auto det = determinant(field, b.matrix);
    if (!field.is_zero(det)) rep.det_valuation = field.valuation(det);
  }
  return rep;
}

}  // namespace chevalley

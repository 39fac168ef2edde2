#pragma once

// The split Lie algebra in a Chevalley basis {E_alpha} u {H_b}, where H_b runs
// over the cocharacter lattice basis of the root system's isogeny type.
//
//   [H_b, E_beta]      = <beta, b> E_beta
//   [E_alpha, E_-alpha] = H_{coroot(alpha)}
//   [E_alpha, E_beta]  = N_{alpha,beta} E_{alpha+beta}   when alpha+beta is a root
//
// Signs of N follow the extraspecial-pair convention: positive roots are
// totally ordered by (height, coordinates descending), every extraspecial pair
// gets a positive constant and the remaining constants are forced by the
// standard identities (Carter, Simple Groups of Lie Type, 4.1-4.2).

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chevalley/root_system.hpp"

namespace chevalley {

class StructureConstants {
 public:
  explicit StructureConstants(RootSystem rs) : rs_(std::move(rs)), n_roots_(rs_.num_roots()) {
    const RootSystem& root_sys = rs_;
    sum_.assign(n_roots_ * n_roots_, -1);
    table_.assign(n_roots_ * n_roots_, 0);
    for (std::size_t a = 0; a < n_roots_; ++a)
      for (std::size_t b = 0; b < n_roots_; ++b) {
        IntVec v = root_sys.root(a);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += root_sys.root(b)[i];
        if (auto idx = root_sys.index_of(v)) sum_[a * n_roots_ + b] = static_cast<long>(*idx);
      }
    compute_positive();
    for (std::size_t a = 0; a < n_roots_; ++a)
      for (std::size_t b = 0; b < n_roots_; ++b)
        if (sum_[a * n_roots_ + b] >= 0) table_[a * n_roots_ + b] = general(a, b);
    build_basis_brackets();
  }

  const RootSystem& root_system() const { return rs_; }
  std::size_t dimension() const { return rs_.dimension(); }
  std::size_t cartan_index(int j) const { return n_roots_ + static_cast<std::size_t>(j); }

  // N_{alpha,beta}; zero when alpha+beta is not a root.
  int N(std::size_t a, std::size_t b) const { return table_[a * n_roots_ + b]; }
  std::optional<std::size_t> root_sum(std::size_t a, std::size_t b) const {
    const long s = sum_[a * n_roots_ + b];
    if (s < 0) return std::nullopt;
    return static_cast<std::size_t>(s);
  }

  // H_alpha in the Cartan basis.
  const IntVec& coroot_expansion(std::size_t a) const { return rs_.coroot(a); }

  // Nonzero terms of [basis_i, basis_j] with integer coefficients.
  const std::vector<std::pair<std::size_t, long>>& basis_bracket(std::size_t i, std::size_t j) const {
    return basis_brackets_[i * dimension() + j];
  }

  // Largest |N| over all pairs.
  int max_abs() const {
    int m = 0;
    for (int v : table_) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  // Positive pairs (xi < zeta) by increasing sum.
  void compute_positive() {
    const RootSystem& rs = rs_;
    const std::size_t npos = rs.num_positive();
    for (std::size_t eta = 0; eta < npos; ++eta) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t xi = 0; xi < npos; ++xi)
        for (std::size_t zeta = xi + 1; zeta < npos; ++zeta)
          if (sum_[xi * n_roots_ + zeta] == static_cast<long>(eta)) pairs.emplace_back(xi, zeta);
      if (pairs.empty()) continue;
      const auto [alpha, beta] = pairs.front();  // minimal first entry
      const int q = rs.alpha_chain(alpha, beta).first;
      positive_[{alpha, beta}] = q + 1;
      for (std::size_t k = 1; k < pairs.size(); ++k) {
        const auto [xi, zeta] = pairs[k];
        mpq_class acc = 0;
        const std::size_t mxi = rs.negative_of(xi), mzeta = rs.negative_of(zeta);
        if (sum_[beta * n_roots_ + mxi] >= 0) {
          const auto d = static_cast<std::size_t>(sum_[beta * n_roots_ + mxi]);
          acc += mpq_class(general(beta, mxi) * general(alpha, mzeta)) / rs.root_form(d, d);
        }
        if (sum_[mxi * n_roots_ + alpha] >= 0) {
          const auto d = static_cast<std::size_t>(sum_[mxi * n_roots_ + alpha]);
          acc += mpq_class(general(mxi, alpha) * general(beta, mzeta)) / rs.root_form(d, d);
        }
        const mpq_class value = rs.root_form(eta, eta) / (q + 1) * acc;
        if (value.get_den() != 1) throw std::logic_error("non-integral structure constant");
        positive_[{xi, zeta}] = static_cast<int>(value.get_num().get_si());
      }
    }
  }

  // N_{x,y} for any roots with x+y a root, from the positive table.
  int general(std::size_t x, std::size_t y) const {
    const RootSystem& rs = rs_;
    const bool px = rs.is_positive(x), py = rs.is_positive(y);
    if (px && py) {
      if (x < y) return positive_.at({x, y});
      return -positive_.at({y, x});
    }
    if (!px && !py) return -general(rs.negative_of(x), rs.negative_of(y));
    if (!px) return -general(y, x);
    // x > 0 > y; z = -(x+y)
    const auto s = static_cast<std::size_t>(sum_[x * n_roots_ + y]);
    const std::size_t z = rs.negative_of(s);
    mpq_class value;
    if (rs.is_positive(z))
      value = rs.root_form(z, z) / rs.root_form(y, y) * general(z, x);
    else
      value = rs.root_form(z, z) / rs.root_form(x, x) * general(y, z);
    if (value.get_den() != 1) throw std::logic_error("non-integral structure constant");
    return static_cast<int>(value.get_num().get_si());
  }

  void build_basis_brackets() {
    const RootSystem& rs = rs_;
    const std::size_t dim = dimension();
    basis_brackets_.assign(dim * dim, {});
    for (std::size_t a = 0; a < n_roots_; ++a) {
      for (std::size_t b = 0; b < n_roots_; ++b) {
        auto& out = basis_brackets_[a * dim + b];
        if (b == rs.negative_of(a)) {
          const auto& h = rs.coroot(a);
          for (std::size_t j = 0; j < h.size(); ++j)
            if (h[j] != 0) out.emplace_back(n_roots_ + j, h[j]);
        } else if (auto s = root_sum(a, b)) {
          out.emplace_back(*s, N(a, b));
        }
      }
      for (int j = 0; j < rs.rank(); ++j) {
        IntVec e(static_cast<std::size_t>(rs.rank()), 0);
        e[static_cast<std::size_t>(j)] = 1;
        const long c = rs.pairing(a, e);
        if (c == 0) continue;
        basis_brackets_[(n_roots_ + static_cast<std::size_t>(j)) * dim + a].emplace_back(a, c);
        basis_brackets_[a * dim + n_roots_ + static_cast<std::size_t>(j)].emplace_back(a, -c);
      }
    }
  }

  RootSystem rs_;
  std::size_t n_roots_;
  std::vector<long> sum_;
  std::vector<int> table_;
  std::map<std::pair<std::size_t, std::size_t>, int> positive_;
  std::vector<std::vector<std::pair<std::size_t, long>>> basis_brackets_;
};

// Sparse element of the Lie algebra over a field context; zero coefficients
// are never stored.
template <class F>
class LieElement {
 public:
  using value_type = typename F::value_type;

  explicit LieElement(F field) : field_(std::move(field)) {}

  static LieElement basis(F field, std::size_t index, value_type c) {
    LieElement x(std::move(field));
    x.add_term(index, c);
    return x;
  }

  const F& field() const { return field_; }
  const std::map<std::size_t, value_type>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  value_type coeff(std::size_t index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  void add_term(std::size_t index, const value_type& c) {
    if (field_.is_zero(c)) return;
    auto it = terms_.find(index);
    if (it == terms_.end()) {
      terms_.emplace(index, c);
      return;
    }
    it->second = field_.add(it->second, c);
    if (field_.is_zero(it->second)) terms_.erase(it);
  }
  void set(std::size_t index, const value_type& c) {
    terms_.erase(index);
    add_term(index, c);
  }

  LieElement scaled(const value_type& c) const {
    LieElement out(field_);
    for (const auto& [i, v] : terms_) out.add_term(i, field_.mul(c, v));
    return out;
  }
  LieElement operator-() const { return scaled(field_.neg(field_.one())); }

  LieElement& operator+=(const LieElement& o) {
    require_same(o);
    for (const auto& [i, v] : o.terms_) add_term(i, v);
    return *this;
  }
  LieElement& operator-=(const LieElement& o) {
    require_same(o);
    for (const auto& [i, v] : o.terms_) add_term(i, field_.neg(v));
    return *this;
  }
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }

  bool operator==(const LieElement& o) const {
    if (!(field_ == o.field_) || terms_.size() != o.terms_.size()) return false;
    for (const auto& [i, v] : terms_) {
      auto it = o.terms_.find(i);
      if (it == o.terms_.end() || !field_.equal(v, it->second)) return false;
    }
    return true;
  }

  void require_same(const LieElement& o) const {
    if (!(field_ == o.field_)) throw std::invalid_argument("LieElement: mixed coefficient fields");
  }

 private:
  F field_;
  std::map<std::size_t, value_type> terms_;
};

template <class F>
LieElement<F> bracket(const StructureConstants& sc, const LieElement<F>& x, const LieElement<F>& y) {
  x.require_same(y);
  const F& field = x.field();
  std::map<std::size_t, typename F::value_type> acc;
  for (const auto& [i, a] : x.terms())
    for (const auto& [j, b] : y.terms()) {
      const auto& terms = sc.basis_bracket(i, j);
      if (terms.empty()) continue;
      const auto ab = field.mul(a, b);
      for (const auto& [k, n] : terms) {
        auto c = field.mul(field.from_int(n), ab);
        auto it = acc.find(k);
        if (it == acc.end()) acc.emplace(k, std::move(c));
        else it->second = field.add(it->second, c);
      }
    }
  LieElement<F> out(field);
  for (const auto& [k, v] : acc) out.add_term(k, v);
  return out;
}

// Component of x on the Cartan subalgebra, in the lattice basis.
template <class F>
std::vector<typename F::value_type> cartan_component(const StructureConstants& sc, const LieElement<F>& x) {
  const int r = sc.root_system().rank();
  std::vector<typename F::value_type> out(static_cast<std::size_t>(r), x.field().zero());
  for (int j = 0; j < r; ++j) out[static_cast<std::size_t>(j)] = x.coeff(sc.cartan_index(j));
  return out;
}

}  // namespace chevalley

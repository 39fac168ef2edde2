#pragma once

// Reduced root systems of split groups, their invariant pairing, coroots and
// the cocharacter lattice of a chosen isogeny type.
//
// Roots are integer vectors in simple-root coordinates.  Cocharacters are
// rational vectors in a lattice basis: the simple coroots for the simply
// connected group, the fundamental coweights for the adjoint group.

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <cctype>
#include <numeric>
#include <type_traits>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chevalley/fields.hpp"
#include "chevalley/linalg.hpp"

namespace chevalley {

using IntVec = std::vector<int>;
using RatVec = std::vector<mpq_class>;

enum class Isogeny { simply_connected, adjoint };

inline std::string to_string(Isogeny iso) { return iso == Isogeny::adjoint ? "adjoint" : "simply_connected"; }

inline Isogeny parse_isogeny(std::string_view s) {
  if (s == "simply_connected" || s == "sc") return Isogeny::simply_connected;
  if (s == "adjoint" || s == "ad") return Isogeny::adjoint;
  throw std::invalid_argument("unknown isogeny '" + std::string(s) + "'");
}

struct CartanFactor {
  char series = 'A';
  int rank = 1;
  bool operator==(const CartanFactor&) const = default;
};

inline std::string to_string(const CartanFactor& f) { return std::string(1, f.series) + std::to_string(f.rank); }

inline std::string to_string(const std::vector<CartanFactor>& type) {
  std::string s;
  for (const auto& f : type) s += (s.empty() ? "" : "x") + to_string(f);
  return s;
}

// "A2", "B3xA1", "a1 x g2"
inline std::vector<CartanFactor> parse_cartan_type(std::string_view text) {
  std::vector<CartanFactor> out;
  std::string cleaned;
  for (char c : text)
    if (c != ' ') cleaned += c;
  std::size_t start = 0;
  while (start <= cleaned.size()) {
    std::size_t end = cleaned.find_first_of("xX*", start);
    if (end == std::string::npos) end = cleaned.size();
    const std::string piece = cleaned.substr(start, end - start);
    if (piece.size() < 2) throw std::invalid_argument("bad Cartan type '" + std::string(text) + "'");
    CartanFactor f;
    f.series = static_cast<char>(std::toupper(static_cast<unsigned char>(piece[0])));
    try {
      std::size_t used = 0;
      f.rank = std::stoi(piece.substr(1), &used);
      if (used != piece.size() - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad Cartan type '" + std::string(text) + "'");
    }
    out.push_back(f);
    start = end + 1;
  }
  return out;
}

class RootSystem {
 public:
  static RootSystem build(const std::vector<CartanFactor>& type, Isogeny isogeny) {
    if (type.empty()) throw std::invalid_argument("RootSystem: empty Cartan type");
    RootSystem rs;
    rs.type_ = type;
    rs.isogeny_ = isogeny;
    int offset = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<mpq_class> lengths;
    for (const auto& f : type) {
      auto [factor_lengths, factor_edges] = dynkin_data(f);
      for (auto [a, b] : factor_edges) edges.emplace_back(a + offset, b + offset);
      lengths.insert(lengths.end(), factor_lengths.begin(), factor_lengths.end());
      rs.factor_offsets_.push_back(offset);
      offset += f.rank;
    }
    rs.rank_ = offset;
    rs.factor_scale_.assign(type.size(), mpq_class(1));
    rs.base_lengths_ = lengths;
    rs.edges_ = edges;
    rs.rebuild_form();
    rs.generate_roots();
    rs.build_lattice();
    return rs;
  }

  static RootSystem build(std::string_view type, Isogeny isogeny) { return build(parse_cartan_type(type), isogeny); }

  // Copy with the invariant form rescaled by a positive rational on one
  // irreducible factor.  Roots and coroots are unchanged.
  RootSystem with_scaling(std::size_t factor, const mpq_class& scale) const {
    if (factor >= type_.size()) throw std::out_of_range("with_scaling: no such factor");
    mpq_class s = scale;
    s.canonicalize();
    if (s <= 0) throw std::invalid_argument("with_scaling: scale must be positive");
    RootSystem out = *this;
    out.factor_scale_[factor] *= s;
    out.rebuild_form();
    out.build_lattice();
    return out;
  }

  const std::vector<CartanFactor>& cartan_type() const { return type_; }
  std::string type_name() const { return to_string(type_); }
  Isogeny isogeny() const { return isogeny_; }
  int rank() const { return rank_; }
  std::size_t num_factors() const { return type_.size(); }

  std::size_t num_roots() const { return roots_.size(); }
  std::size_t num_positive() const { return roots_.size() / 2; }
  const std::vector<IntVec>& roots() const { return roots_; }
  const IntVec& root(std::size_t i) const { return roots_.at(i); }
  // Positive roots occupy [0, num_positive); simple root i sits at index i.
  bool is_positive(std::size_t i) const { return i < num_positive(); }
  std::size_t simple(int i) const { return static_cast<std::size_t>(i); }
  std::size_t negative_of(std::size_t i) const { return i < num_positive() ? i + num_positive() : i - num_positive(); }
  int height(std::size_t i) const {
    int h = 0;
    for (int c : roots_[i]) h += c;
    return h;
  }
  std::optional<std::size_t> index_of(const IntVec& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t factor_of(std::size_t root_index) const {
    const auto& r = roots_[root_index];
    for (std::size_t f = 0; f < type_.size(); ++f)
      if (support_in_factor(r, f)) return f;
    throw std::logic_error("root without support");
  }

  // (x, y) for vectors in simple-root coordinates.
  template <class V1, class V2>
  mpq_class form(const V1& x, const V2& y) const {
    mpq_class s = 0;
    for (int i = 0; i < rank_; ++i) {
      if (x[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; j < rank_; ++j) s += mpq_class(x[static_cast<std::size_t>(i)]) * gram_(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) * mpq_class(y[static_cast<std::size_t>(j)]);
    }
    return s;
  }
  mpq_class root_form(std::size_t a, std::size_t b) const { return form(roots_[a], roots_[b]); }
  const Matrix<mpq_class>& gram() const { return gram_; }

  // Cartan integers <alpha_j, coroot(alpha_i)> at (i, j).
  const Matrix<int>& cartan_matrix() const { return cartan_; }

  // Coroot of a root, integer coordinates in the cocharacter lattice basis.
  const IntVec& coroot(std::size_t root_index) const { return coroots_.at(root_index); }

  // <alpha_i, b_j> for simple roots alpha_i and lattice basis vectors b_j.
  const Matrix<int>& pairing_matrix() const { return pairing_; }

  // <alpha, mu>
  template <class V>
  auto pairing(std::size_t root_index, const V& cochar) const {
    using T = std::conditional_t<std::is_same_v<typename V::value_type, int>, long, mpq_class>;
    T s = 0;
    const auto& a = roots_[root_index];
    for (int i = 0; i < rank_; ++i) {
      if (a[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; j < rank_; ++j) s += T(a[static_cast<std::size_t>(i)]) * T(pairing_(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) * T(cochar[static_cast<std::size_t>(j)]);
    }
    return s;
  }

  // Gram matrix of the induced norm on cocharacters in the lattice basis.
  const Matrix<mpq_class>& cochar_gram() const { return cochar_gram_; }

  mpq_class cochar_form(const RatVec& x, const RatVec& y) const {
    mpq_class s = 0;
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        s += x[static_cast<std::size_t>(i)] * cochar_gram_(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) * y[static_cast<std::size_t>(j)];
    return s;
  }

  // Lattice coordinates of the cocharacter identified with a vector of the
  // root space through the invariant form: <beta, mu> = (beta, v).
  RatVec cochar_from_vector(const RatVec& v) const {
    RatVec rhs(static_cast<std::size_t>(rank_), 0);
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) rhs[static_cast<std::size_t>(i)] += gram_(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) * v[static_cast<std::size_t>(j)];
    // P m = B v
    RationalField q;
    Matrix<mpq_class> p(static_cast<std::size_t>(rank_), static_cast<std::size_t>(rank_), 0);
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) p(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = pairing_(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    auto m = solve(q, p, rhs);
    if (!m) throw std::logic_error("cochar_from_vector: singular pairing matrix");
    return *m;
  }
  // Inverse of cochar_from_vector.
  RatVec vector_from_cochar(const RatVec& m) const {
    RatVec rhs(static_cast<std::size_t>(rank_), 0);
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) rhs[static_cast<std::size_t>(i)] += mpq_class(pairing_(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) * m[static_cast<std::size_t>(j)];
    RationalField q;
    auto v = solve(q, gram_, rhs);
    if (!v) throw std::logic_error("vector_from_cochar: singular form");
    return *v;
  }

  // Maximal q, r >= 0 with beta + j alpha a root for j in [-q, r].
  std::pair<int, int> alpha_chain(std::size_t alpha, std::size_t beta) const {
    if (alpha == beta || negative_of(alpha) == beta)
      throw std::invalid_argument("alpha_chain: proportional roots");
    auto step = [&](int sign) {
      int j = 0;
      for (;;) {
        IntVec v = roots_[beta];
        for (int i = 0; i < rank_; ++i) v[static_cast<std::size_t>(i)] += sign * (j + 1) * roots_[alpha][static_cast<std::size_t>(i)];
        if (!index_of(v)) return j;
        ++j;
      }
    };
    return {step(-1), step(+1)};
  }

  // <beta, coroot(alpha)>
  int cartan_integer(std::size_t beta, std::size_t alpha) const {
    const mpq_class v = 2 * root_form(beta, alpha) / root_form(alpha, alpha);
    return static_cast<int>(v.get_num().get_si());
  }

  // s_alpha(beta)
  std::size_t reflect(std::size_t alpha, std::size_t beta) const {
    const int c = cartan_integer(beta, alpha);
    IntVec v = roots_[beta];
    for (int i = 0; i < rank_; ++i) v[static_cast<std::size_t>(i)] -= c * roots_[alpha][static_cast<std::size_t>(i)];
    auto idx = index_of(v);
    if (!idx) throw std::logic_error("reflection left the root system");
    return *idx;
  }

  // s_alpha(mu) = mu - <alpha, mu> coroot(alpha) on cocharacters.
  RatVec reflect_cochar(std::size_t alpha, const RatVec& mu) const {
    const mpq_class c = pairing(alpha, mu);
    RatVec out = mu;
    for (int j = 0; j < rank_; ++j) out[static_cast<std::size_t>(j)] -= c * coroots_[alpha][static_cast<std::size_t>(j)];
    return out;
  }

  // Dimension of the Lie algebra.
  std::size_t dimension() const { return roots_.size() + static_cast<std::size_t>(rank_); }

  // "a1+2*a2", "-a1-a2"
  std::string root_name(std::size_t i) const {
    const auto& r = roots_[i];
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j < rank_; ++j) {
      const int c = r[static_cast<std::size_t>(j)];
      if (c == 0) continue;
      if (c < 0) os << "-";
      else if (!first) os << "+";
      if (std::abs(c) != 1) os << std::abs(c) << "*";
      os << "a" << j + 1;
      first = false;
    }
    return os.str();
  }

 private:
  RootSystem() = default;

  bool support_in_factor(const IntVec& r, std::size_t f) const {
    const int lo = factor_offsets_[f];
    const int hi = lo + type_[f].rank;
    for (int i = lo; i < hi; ++i)
      if (r[static_cast<std::size_t>(i)] != 0) return true;
    return false;
  }

  // Squared lengths of simple roots (long roots 2) and Dynkin edges, Bourbaki numbering.
  static std::pair<std::vector<mpq_class>, std::vector<std::pair<int, int>>> dynkin_data(const CartanFactor& f) {
    const int n = f.rank;
    std::vector<mpq_class> len(static_cast<std::size_t>(std::max(n, 0)), mpq_class(2));
    std::vector<std::pair<int, int>> edges;
    auto chain = [&](int upto) {
      for (int i = 0; i + 1 < upto; ++i) edges.emplace_back(i, i + 1);
    };
    auto bad = [&]() { return std::invalid_argument("invalid Cartan type " + to_string(f)); };
    switch (f.series) {
      case 'A':
        if (n < 1) throw bad();
        chain(n);
        break;
      case 'B':
        if (n < 2) throw bad();
        chain(n);
        len[static_cast<std::size_t>(n - 1)] = 1;
        break;
      case 'C':
        if (n < 2) throw bad();
        chain(n);
        for (int i = 0; i < n - 1; ++i) len[static_cast<std::size_t>(i)] = 1;
        break;
      case 'D':
        if (n < 4) throw bad();
        chain(n - 1);
        edges.emplace_back(n - 3, n - 1);
        break;
      case 'E':
        if (n < 6 || n > 8) throw bad();
        edges.emplace_back(0, 2);
        edges.emplace_back(1, 3);
        for (int i = 2; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        break;
      case 'F':
        if (n != 4) throw bad();
        chain(4);
        len[2] = len[3] = 1;
        break;
      case 'G':
        if (n != 2) throw bad();
        edges.emplace_back(0, 1);
        len[0] = mpq_class(2, 3);
        break;
      default:
        throw bad();
    }
    return {len, edges};
  }

  void rebuild_form() {
    const auto n = static_cast<std::size_t>(rank_);
    gram_ = Matrix<mpq_class>(n, n, 0);
    std::vector<mpq_class> len(n);
    for (std::size_t f = 0; f < type_.size(); ++f)
      for (int i = 0; i < type_[f].rank; ++i) {
        const auto k = static_cast<std::size_t>(factor_offsets_[f] + i);
        len[k] = base_lengths_[k] * factor_scale_[f];
      }
    for (std::size_t i = 0; i < n; ++i) gram_(i, i) = len[i];
    for (auto [a, b] : edges_) {
      const auto ia = static_cast<std::size_t>(a), ib = static_cast<std::size_t>(b);
      // (alpha_a, alpha_b) = -max(|a|^2, |b|^2) / 2 on an edge
      const mpq_class v = -std::max(len[ia], len[ib]) / 2;
      gram_(ia, ib) = gram_(ib, ia) = v;
    }
    cartan_ = Matrix<int>(n, n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const mpq_class v = 2 * gram_(i, j) / gram_(i, i);
        if (v.get_den() != 1) throw std::logic_error("non-integral Cartan matrix");
        cartan_(i, j) = static_cast<int>(v.get_num().get_si());
      }
  }

  void generate_roots() {
    const auto n = static_cast<std::size_t>(rank_);
    std::set<IntVec> known;
    std::vector<IntVec> layer;
    for (std::size_t i = 0; i < n; ++i) {
      IntVec e(n, 0);
      e[i] = 1;
      layer.push_back(e);
      known.insert(e);
    }
    std::vector<IntVec> positive = layer;
    while (!layer.empty()) {
      std::set<IntVec> next;
      for (const auto& beta : layer) {
        for (std::size_t i = 0; i < n; ++i) {
          // q: how far beta - j alpha_i stays a root (or beta = alpha_i)
          int q = 0;
          for (;;) {
            IntVec v = beta;
            v[i] -= q + 1;
            if (known.count(v)) ++q;
            else break;
          }
          int pair = 0;  // <beta, coroot(alpha_i)>
          for (std::size_t j = 0; j < n; ++j) pair += beta[j] * cartan_(i, j);
          const bool is_simple_i = std::count(beta.begin(), beta.end(), 0) == static_cast<long>(n - 1) && beta[i] == 1;
          if (is_simple_i) continue;
          if (q - pair > 0) {
            IntVec v = beta;
            v[i] += 1;
            if (!known.count(v)) next.insert(v);
          }
        }
      }
      layer.assign(next.begin(), next.end());
      for (const auto& v : layer) {
        known.insert(v);
        positive.push_back(v);
      }
    }
    // height ascending, then coordinates lexicographically descending
    std::sort(positive.begin(), positive.end(), [](const IntVec& a, const IntVec& b) {
      const int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
      if (ha != hb) return ha < hb;
      return a > b;
    });
    roots_ = positive;
    for (const auto& p : positive) {
      IntVec m = p;
      for (auto& c : m) c = -c;
      roots_.push_back(m);
    }
    index_.clear();
    for (std::size_t i = 0; i < roots_.size(); ++i) index_[roots_[i]] = i;
  }

  void build_lattice() {
    const auto n = static_cast<std::size_t>(rank_);
    pairing_ = Matrix<int>(n, n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        pairing_(i, j) = isogeny_ == Isogeny::simply_connected ? cartan_(j, i) : (i == j ? 1 : 0);
    coroots_.assign(roots_.size(), IntVec(n, 0));
    for (std::size_t a = 0; a < roots_.size(); ++a) {
      const auto& r = roots_[a];
      const mpq_class len = form(r, r);
      for (std::size_t j = 0; j < n; ++j) {
        mpq_class c;
        if (isogeny_ == Isogeny::simply_connected) {
          c = mpq_class(r[j]) * gram_(j, j) / len;
        } else {
          IntVec e(n, 0);
          e[j] = 1;
          c = 2 * form(e, r) / len;
        }
        if (c.get_den() != 1) throw std::logic_error("non-integral coroot coordinates");
        coroots_[a][j] = static_cast<int>(c.get_num().get_si());
      }
    }
    // P^T B^{-1} P
    RationalField q;
    auto binv = inverse(q, gram_);
    if (!binv) throw std::logic_error("degenerate invariant form");
    Matrix<mpq_class> p(n, n, 0), pt(n, n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        p(i, j) = pairing_(i, j);
        pt(j, i) = pairing_(i, j);
      }
    cochar_gram_ = multiply(q, multiply(q, pt, *binv), p);
  }

  std::vector<CartanFactor> type_;
  Isogeny isogeny_ = Isogeny::simply_connected;
  int rank_ = 0;
  std::vector<int> factor_offsets_;
  std::vector<mpq_class> factor_scale_;
  std::vector<mpq_class> base_lengths_;
  std::vector<std::pair<int, int>> edges_;
  Matrix<mpq_class> gram_;
  Matrix<int> cartan_;
  Matrix<int> pairing_;
  Matrix<mpq_class> cochar_gram_;
  std::vector<IntVec> roots_;
  std::map<IntVec, std::size_t> index_;
  std::vector<IntVec> coroots_;
};

}  // namespace chevalley

#pragma once

// Exact coefficient fields.
//
// Every field is a small context object exposing arithmetic on its
// `value_type`.  Contexts compare equal iff they describe the same field, which
// is how mixed-field operations are detected at run time.
//
//   RationalField           Q, optionally carrying a p-adic valuation
//   PrimeField              F_p
//   GaloisField             F_q, q = p^r small (table driven)
//   RationalFunctionField   F_q(t) with the t-adic valuation

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chevalley {

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// ---------------------------------------------------------------------------
// Q

class RationalField {
 public:
  using value_type = mpq_class;

  RationalField() = default;
  explicit RationalField(std::int64_t valuation_prime) : prime_(valuation_prime) {
    if (!is_prime(valuation_prime))
      throw std::invalid_argument("RationalField: valuation prime must be prime");
  }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t n) const { return value_type(static_cast<long>(n)); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw std::domain_error("RationalField: inverse of zero");
    return 1 / a;
  }
  value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }
  bool is_zero(const value_type& a) const { return a == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  bool has_valuation() const { return prime_.has_value(); }
  std::int64_t residue_cardinality() const { return require_valued(); }

  std::int64_t valuation(const value_type& a) const {
    const std::int64_t p = require_valued();
    if (a == 0) throw std::domain_error("valuation of zero");
    return count_factor(a.get_num(), p) - count_factor(a.get_den(), p);
  }

  // p^n
  value_type uniformizer_pow(std::int64_t n) const {
    const std::int64_t p = require_valued();
    mpz_class base = static_cast<long>(p);
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n < 0 ? -n : n));
    return n < 0 ? value_type(mpz_class(1), r) : value_type(r);
  }

  std::string to_string(const value_type& a) const { return a.get_str(); }
  std::string name() const {
    return prime_ ? "Q(v_" + std::to_string(*prime_) + ")" : std::string("Q");
  }

  bool operator==(const RationalField&) const = default;

 private:
  std::int64_t require_valued() const {
    if (!prime_) throw std::domain_error("RationalField: no valuation attached");
    return *prime_;
  }
  static std::int64_t count_factor(mpz_class n, std::int64_t p) {
    std::int64_t c = 0;
    const mpz_class pp = static_cast<long>(p);
    if (n < 0) n = -n;
    while (n != 0 && mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
      n /= pp;
      ++c;
    }
    return c;
  }

  std::optional<std::int64_t> prime_;
};

// ---------------------------------------------------------------------------
// F_p

class PrimeField {
 public:
  using value_type = std::int64_t;

  explicit PrimeField(std::int64_t p) : p_(p) {
    if (!is_prime(p) || p > (std::int64_t{1} << 31))
      throw std::invalid_argument("PrimeField: modulus must be a prime below 2^31");
  }

  std::int64_t characteristic() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t n) const { return mod_floor(n, p_); }
  value_type add(value_type a, value_type b) const { return (a + b) % p_; }
  value_type sub(value_type a, value_type b) const { return mod_floor(a - b, p_); }
  value_type mul(value_type a, value_type b) const { return (a * b) % p_; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    // Fermat
    value_type r = 1, b = a, e = p_ - 2;
    while (e > 0) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }

  bool has_valuation() const { return false; }
  std::int64_t residue_cardinality() const {
    throw std::domain_error("PrimeField: no valuation on a finite field");
  }
  std::int64_t valuation(value_type) const {
    throw std::domain_error("PrimeField: no valuation on a finite field");
  }
  value_type uniformizer_pow(std::int64_t) const {
    throw std::domain_error("PrimeField: no uniformizer on a finite field");
  }

  std::string to_string(value_type a) const { return std::to_string(a); }
  std::string name() const { return "F_" + std::to_string(p_); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::int64_t p_;
};

// ---------------------------------------------------------------------------
// F_q, q = p^r.  Elements are integers 0..q-1 read as base-p digit vectors
// (polynomials in a root x of a fixed monic irreducible of degree r).

class GaloisField {
 public:
  using value_type = int;

  explicit GaloisField(int q) {
    int p = 0, r = 0;
    for (int d = 2; d <= q; ++d) {
      if (q % d == 0) {
        p = d;
        break;
      }
    }
    if (p == 0 || q > 1024) throw std::invalid_argument("GaloisField: q must be a prime power <= 1024");
    int m = q;
    while (m % p == 0) {
      m /= p;
      ++r;
    }
    if (m != 1) throw std::invalid_argument("GaloisField: q must be a prime power");
    auto t = std::make_shared<Tables>();
    t->p = p;
    t->r = r;
    t->q = q;
    t->modulus = find_irreducible(p, r);
    t->add.resize(static_cast<std::size_t>(q * q));
    t->mul.resize(static_cast<std::size_t>(q * q));
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        t->add[static_cast<std::size_t>(a * q + b)] = add_digits(a, b, p, r);
        t->mul[static_cast<std::size_t>(a * q + b)] = mul_poly(a, b, p, r, t->modulus);
      }
    t->inv.assign(static_cast<std::size_t>(q), 0);
    t->neg.assign(static_cast<std::size_t>(q), 0);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        if (t->mul[static_cast<std::size_t>(a * q + b)] == 1) t->inv[static_cast<std::size_t>(a)] = b;
        if (t->add[static_cast<std::size_t>(a * q + b)] == 0) t->neg[static_cast<std::size_t>(a)] = b;
      }
    tables_ = std::move(t);
  }

  int characteristic() const { return tables_->p; }
  int order() const { return tables_->q; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t n) const { return static_cast<int>(mod_floor(n, tables_->p)); }
  value_type add(int a, int b) const { return tables_->add[idx(a, b)]; }
  value_type neg(int a) const { return tables_->neg[static_cast<std::size_t>(a)]; }
  value_type sub(int a, int b) const { return add(a, neg(b)); }
  value_type mul(int a, int b) const { return tables_->mul[idx(a, b)]; }
  value_type inv(int a) const {
    if (a == 0) throw std::domain_error("GaloisField: inverse of zero");
    return tables_->inv[static_cast<std::size_t>(a)];
  }
  value_type div(int a, int b) const { return mul(a, inv(b)); }
  bool is_zero(int a) const { return a == 0; }
  bool equal(int a, int b) const { return a == b; }

  std::string to_string(int a) const { return std::to_string(a); }
  std::string name() const { return "F_" + std::to_string(tables_->q); }

  bool operator==(const GaloisField& o) const { return tables_->q == o.tables_->q; }

 private:
  struct Tables {
    int p = 0, r = 0, q = 0;
    std::vector<int> modulus;  // monic, degree r, low to high
    std::vector<int> add, mul, inv, neg;
  };

  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a * tables_->q + b); }

  static std::vector<int> digits(int a, int p, int r) {
    std::vector<int> d(static_cast<std::size_t>(r), 0);
    for (int i = 0; i < r; ++i) {
      d[static_cast<std::size_t>(i)] = a % p;
      a /= p;
    }
    return d;
  }
  static int from_digits(const std::vector<int>& d, int p) {
    int a = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) a = a * p + *it;
    return a;
  }
  static int add_digits(int a, int b, int p, int r) {
    auto da = digits(a, p, r), db = digits(b, p, r);
    for (int i = 0; i < r; ++i)
      da[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p;
    return from_digits(da, p);
  }
  static int mul_poly(int a, int b, int p, int r, const std::vector<int>& modulus) {
    auto da = digits(a, p, r), db = digits(b, p, r);
    std::vector<int> prod(static_cast<std::size_t>(2 * r), 0);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        prod[static_cast<std::size_t>(i + j)] =
            (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p;
    for (int d = 2 * r - 1; d >= r; --d) {
      const int c = prod[static_cast<std::size_t>(d)];
      if (c == 0) continue;
      for (int i = 0; i <= r; ++i) {
        auto& slot = prod[static_cast<std::size_t>(d - r + i)];
        slot = static_cast<int>(mod_floor(slot - c * modulus[static_cast<std::size_t>(i)], p));
      }
    }
    prod.resize(static_cast<std::size_t>(r));
    return from_digits(prod, p);
  }
  // Smallest monic polynomial of degree r over F_p without a factor of degree <= r/2.
  static std::vector<int> find_irreducible(int p, int r) {
    if (r == 1) return {0, 1};
    int total = 1;
    for (int i = 0; i < r; ++i) total *= p;
    for (int lower = 0; lower < total; ++lower) {
      std::vector<int> f = digits(lower, p, r);
      f.push_back(1);
      if (irreducible(f, p)) return f;
    }
    throw std::logic_error("GaloisField: no irreducible polynomial found");
  }
  static bool irreducible(const std::vector<int>& f, int p) {
    const int r = static_cast<int>(f.size()) - 1;
    for (int deg = 1; deg <= r / 2; ++deg) {
      int count = 1;
      for (int i = 0; i < deg; ++i) count *= p;
      for (int lower = 0; lower < count; ++lower) {
        std::vector<int> g = digits(lower, p, deg);
        g.push_back(1);
        if (divides(g, f, p)) return false;
      }
    }
    return true;
  }
  static bool divides(const std::vector<int>& g, std::vector<int> f, int p) {
    const int dg = static_cast<int>(g.size()) - 1;
    for (int d = static_cast<int>(f.size()) - 1; d >= dg; --d) {
      const int c = f[static_cast<std::size_t>(d)];
      if (c == 0) continue;
      for (int i = 0; i <= dg; ++i) {
        auto& slot = f[static_cast<std::size_t>(d - dg + i)];
        slot = static_cast<int>(mod_floor(slot - c * g[static_cast<std::size_t>(i)], p));
      }
    }
    return std::all_of(f.begin(), f.end(), [](int c) { return c == 0; });
  }

  std::shared_ptr<const Tables> tables_;
};

// ---------------------------------------------------------------------------
// Polynomials over F_q, coefficients low to high, no trailing zeros.

class PolynomialRing {
 public:
  using Poly = std::vector<int>;

  explicit PolynomialRing(GaloisField base) : k_(std::move(base)) {}
  const GaloisField& base() const { return k_; }

  static void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  static int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

  Poly constant(int c) const {
    Poly r{c};
    trim(r);
    return r;
  }
  Poly add(const Poly& a, const Poly& b) const {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = k_.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
  }
  Poly neg(const Poly& a) const {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = k_.neg(a[i]);
    return r;
  }
  Poly sub(const Poly& a, const Poly& b) const { return add(a, neg(b)); }
  Poly mul(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = k_.add(r[i + j], k_.mul(a[i], b[j]));
    }
    trim(r);
    return r;
  }
  Poly scale(const Poly& a, int c) const {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = k_.mul(a[i], c);
    trim(r);
    return r;
  }
  // a = quot * b + rem
  std::pair<Poly, Poly> divmod(Poly a, const Poly& b) const {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    const int lead_inv = k_.inv(b.back());
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (!a.empty() && a.size() >= b.size()) {
      const std::size_t shift = a.size() - b.size();
      const int c = k_.mul(a.back(), lead_inv);
      q[shift] = c;
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = k_.sub(a[shift + i], k_.mul(c, b[i]));
      trim(a);
    }
    trim(q);
    return {q, a};
  }
  Poly monic(const Poly& a) const { return a.empty() ? a : scale(a, k_.inv(a.back())); }
  Poly gcd(Poly a, Poly b) const {
    while (!b.empty()) {
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // t-adic valuation; the zero polynomial has none.
  static int order_at_zero(const Poly& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) return static_cast<int>(i);
    throw std::domain_error("t-adic valuation of zero");
  }

  std::string to_string(const Poly& a) const {
    if (a.empty()) return "0";
    std::string s;
    for (int i = degree(a); i >= 0; --i) {
      const int c = a[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      if (!s.empty()) s += "+";
      if (i == 0 || c != 1) s += std::to_string(c);
      if (i >= 1) s += (i == 1 ? "t" : "t^" + std::to_string(i));
    }
    return s;
  }

 private:
  GaloisField k_;
};

// ---------------------------------------------------------------------------
// F_q(t), the dense subfield of F_q((t)).

struct RationalFunction {
  std::vector<int> num;  // trimmed
  std::vector<int> den;  // monic, nonzero
  bool operator==(const RationalFunction&) const = default;
};

class RationalFunctionField {
 public:
  using value_type = RationalFunction;
  using Poly = PolynomialRing::Poly;

  explicit RationalFunctionField(int q) : ring_(GaloisField(q)) {}

  const PolynomialRing& ring() const { return ring_; }
  int order() const { return ring_.base().order(); }

  value_type zero() const { return {{}, {1}}; }
  value_type one() const { return {{1}, {1}}; }
  value_type from_int(std::int64_t n) const { return from_poly(ring_.constant(ring_.base().from_int(n))); }
  value_type from_poly(Poly p) const {
    PolynomialRing::trim(p);
    return {std::move(p), {1}};
  }
  value_type make(Poly num, Poly den) const {
    PolynomialRing::trim(num);
    PolynomialRing::trim(den);
    if (den.empty()) throw std::domain_error("RationalFunctionField: zero denominator");
    if (num.empty()) return zero();
    auto g = ring_.gcd(num, den);
    num = ring_.divmod(num, g).first;
    den = ring_.divmod(den, g).first;
    const int lead_inv = ring_.base().inv(den.back());
    return {ring_.scale(num, lead_inv), ring_.scale(den, lead_inv)};
  }

  value_type add(const value_type& a, const value_type& b) const {
    if (a.den == b.den) return make(ring_.add(a.num, b.num), a.den);
    return make(ring_.add(ring_.mul(a.num, b.den), ring_.mul(b.num, a.den)), ring_.mul(a.den, b.den));
  }
  value_type neg(const value_type& a) const { return {ring_.neg(a.num), a.den}; }
  value_type sub(const value_type& a, const value_type& b) const { return add(a, neg(b)); }
  value_type mul(const value_type& a, const value_type& b) const {
    if (a.num.empty() || b.num.empty()) return zero();
    return make(ring_.mul(a.num, b.num), ring_.mul(a.den, b.den));
  }
  value_type inv(const value_type& a) const {
    if (a.num.empty()) throw std::domain_error("RationalFunctionField: inverse of zero");
    return make(a.den, a.num);
  }
  value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }
  bool is_zero(const value_type& a) const { return a.num.empty(); }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  bool has_valuation() const { return true; }
  std::int64_t residue_cardinality() const { return order(); }
  std::int64_t valuation(const value_type& a) const {
    if (a.num.empty()) throw std::domain_error("valuation of zero");
    return PolynomialRing::order_at_zero(a.num) - PolynomialRing::order_at_zero(a.den);
  }
  value_type uniformizer_pow(std::int64_t n) const {
    Poly mono(static_cast<std::size_t>(n < 0 ? -n : n) + 1, 0);
    mono.back() = 1;
    return n < 0 ? value_type{{1}, mono} : value_type{mono, {1}};
  }

  std::string to_string(const value_type& a) const {
    if (a.den == Poly{1}) return ring_.to_string(a.num);
    return "(" + ring_.to_string(a.num) + ")/(" + ring_.to_string(a.den) + ")";
  }
  std::string name() const { return "F_" + std::to_string(order()) + "(t)"; }

  bool operator==(const RationalFunctionField& o) const { return order() == o.order(); }

 private:
  PolynomialRing ring_;
};

}  // namespace chevalley

#pragma once

// Exact fields: the rationals, prime fields GF(p) and cyclotomic fields
// Q(zeta_m) = Q[x]/Phi_m(x). A Field is an interned handle, so two handles
// compare equal exactly when they describe the same field.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schrod/error.hpp"
#include "schrod/rational.hpp"

namespace schrod {

enum class FieldKind { Rationals, Prime, Cyclotomic };

namespace detail {

struct FieldInfo {
  FieldKind kind;
  int64_t param;
  int degree;                // coefficients per element
  std::vector<int64_t> phi;  // Phi_m, lowest degree first, monic
};

inline bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  auto mulmod = [](uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
  };
  auto powmod = [&](uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    a %= m;
    while (e) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  };
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Integer polynomial helpers, lowest degree first.
using IntPoly = std::vector<int64_t>;

inline IntPoly poly_exact_div(IntPoly num, const IntPoly& den) {
  // den is monic
  size_t dn = den.size() - 1;
  IntPoly q(num.size() - dn, 0);
  for (size_t i = num.size(); i-- > dn;) {
    int64_t c = num[i];
    q[i - dn] = c;
    for (size_t k = 0; k <= dn; ++k) num[i - dn + k] -= c * den[k];
  }
  return q;
}

inline IntPoly cyclotomic_poly(int64_t m) {
  static std::map<int64_t, IntPoly> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  IntPoly p(static_cast<size_t>(m) + 1, 0);
  p[0] = -1;
  p[static_cast<size_t>(m)] = 1;
  for (int64_t d = 1; d < m; ++d) {
    if (m % d == 0) p = poly_exact_div(p, cyclotomic_poly(d));
  }
  cache[m] = p;
  return p;
}

inline const FieldInfo* intern(FieldKind kind, int64_t param) {
  static std::mutex mu;
  static std::map<std::pair<int, int64_t>, std::unique_ptr<FieldInfo>> table;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(kind), param);
  auto it = table.find(key);
  if (it != table.end()) return it->second.get();
  auto info = std::make_unique<FieldInfo>();
  info->kind = kind;
  info->param = param;
  info->degree = 1;
  if (kind == FieldKind::Cyclotomic) {
    info->phi = cyclotomic_poly(param);
    info->degree = static_cast<int>(info->phi.size()) - 1;
  }
  const FieldInfo* out = info.get();
  table.emplace(key, std::move(info));
  return out;
}

}  // namespace detail

class Field {
 public:
  Field() : info_(detail::intern(FieldKind::Rationals, 0)) {}

  static Field rationals() { return Field(); }
  static Field prime(int64_t p) {
    if (p < 2 || !detail::is_prime(static_cast<uint64_t>(p)))
      fail(ErrorKind::BadParameter, "GF(p) needs a prime p, got " + std::to_string(p));
    return Field(detail::intern(FieldKind::Prime, p));
  }
  static Field cyclotomic(int64_t m) {
    if (m < 1) fail(ErrorKind::BadParameter, "cyclotomic order must be positive");
    if (m > 4096) fail(ErrorKind::BadParameter, "cyclotomic order too large");
    return Field(detail::intern(FieldKind::Cyclotomic, m));
  }

  FieldKind kind() const { return info_->kind; }
  int64_t parameter() const { return info_->param; }
  int degree() const { return info_->degree; }
  const std::vector<int64_t>& phi() const { return info_->phi; }
  int64_t characteristic() const { return info_->kind == FieldKind::Prime ? info_->param : 0; }

  std::string str() const {
    switch (info_->kind) {
      case FieldKind::Rationals: return "Q";
      case FieldKind::Prime: return "GF(" + std::to_string(info_->param) + ")";
      case FieldKind::Cyclotomic: return "Cyc(" + std::to_string(info_->param) + ")";
    }
    return "?";
  }

  friend bool operator==(Field a, Field b) { return a.info_ == b.info_; }
  friend bool operator!=(Field a, Field b) { return a.info_ != b.info_; }

 private:
  explicit Field(const detail::FieldInfo* info) : info_(info) {}
  const detail::FieldInfo* info_;
};

// An element of a Field. Rationals and prime-field residues live in c_[0];
// cyclotomic elements store phi(m) rational coefficients in the power basis
// of zeta_m, the first two inline and the rest in extra_.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(Field f) : field_(f) { init_storage(); }
  Scalar(Field f, int64_t v) : field_(f) {
    init_storage();
    set_base(Rational(v));
  }
  Scalar(Field f, const Rational& v) : field_(f) {
    init_storage();
    set_base(v);
  }

  static Scalar zero(Field f) { return Scalar(f); }
  static Scalar one(Field f) { return Scalar(f, 1); }
  // The distinguished root of unity x mod Phi_m of a cyclotomic field.
  static Scalar zeta(Field f) {
    if (f.kind() != FieldKind::Cyclotomic) fail(ErrorKind::BadParameter, "zeta requires a cyclotomic field");
    std::vector<Rational> c(2);
    c[1] = Rational(1);
    return from_poly(f, std::move(c));
  }
  // Builds an element from an arbitrary-length coefficient list, reducing
  // modulo Phi_m (cyclotomic) or p (prime field).
  static Scalar from_poly(Field f, std::vector<Rational> c) {
    Scalar s(f);
    if (f.kind() != FieldKind::Cyclotomic) {
      Rational v;
      if (!c.empty()) v = c[0];
      for (size_t i = 1; i < c.size(); ++i)
        if (!c[i].is_zero()) fail(ErrorKind::ParseError, "polynomial entry in a non-cyclotomic field");
      s.set_base(v);
      return s;
    }
    reduce_poly(f, c);
    for (int i = 0; i < f.degree(); ++i) s.coef(i) = std::move(c[static_cast<size_t>(i)]);
    return s;
  }

  Field field() const { return field_; }
  int degree() const { return field_.degree(); }
  const Rational& coeff(int i) const { return i < 2 ? c_[i] : extra_[static_cast<size_t>(i - 2)]; }
  uint64_t residue() const { return static_cast<uint64_t>(c_[0].small_num()); }

  bool is_zero() const {
    for (int i = 0; i < degree(); ++i)
      if (!coeff(i).is_zero()) return false;
    return true;
  }
  bool is_one() const {
    if (!c_[0].is_one()) return false;
    for (int i = 1; i < degree(); ++i)
      if (!coeff(i).is_zero()) return false;
    return true;
  }
  // True when the element lies in the prime subfield (Q or GF(p)).
  bool is_rational() const {
    for (int i = 1; i < degree(); ++i)
      if (!coeff(i).is_zero()) return false;
    return true;
  }

  Scalar operator-() const {
    Scalar r(field_);
    if (prime()) {
      r.c_[0] = Rational(static_cast<int64_t>(residue() == 0 ? 0 : p() - residue()));
      return r;
    }
    for (int i = 0; i < degree(); ++i) r.coef(i) = -coeff(i);
    return r;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar r(a);
    r += b;
    return r;
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar r(a);
    r -= b;
    return r;
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    a.check(b);
    Scalar r(a.field_);
    r.add_mul_unchecked(a, b);
    return r;
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& b) {
    check(b);
    if (prime()) {
      uint64_t s = residue() + b.residue();
      if (s >= p()) s -= p();
      c_[0] = Rational(static_cast<int64_t>(s));
      return *this;
    }
    for (int i = 0; i < degree(); ++i)
      if (!b.coeff(i).is_zero()) coef(i) += b.coeff(i);
    return *this;
  }
  Scalar& operator-=(const Scalar& b) { return *this += -b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  // *this += a * b, the workhorse of every dense loop.
  void add_mul(const Scalar& a, const Scalar& b) {
    check(a);
    check(b);
    add_mul_unchecked(a, b);
  }

  Scalar inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in " + field_.str());
    Scalar r(field_);
    if (prime()) {
      r.c_[0] = Rational(static_cast<int64_t>(powmod(residue(), p() - 2, p())));
      return r;
    }
    if (degree() == 1) {
      r.c_[0] = c_[0].inverse();
      return r;
    }
    return cyclotomic_inverse();
  }

  Scalar pow(int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result = one(field_), base = *this;
    while (e) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) fail(ErrorKind::FieldMismatch, a.field_.str() + " vs " + b.field_.str());
    for (int i = 0; i < a.degree(); ++i)
      if (a.coeff(i) != b.coeff(i)) return false;
    return true;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Text form: "p/q" or "n" for Q, a decimal residue for GF(p), and a
  // bracketed coefficient list "[c0,c1,...]" for cyclotomic fields.
  std::string str() const {
    if (field_.kind() != FieldKind::Cyclotomic) return c_[0].str();
    std::string s = "[";
    for (int i = 0; i < degree(); ++i) {
      if (i) s += ",";
      s += coeff(i).str();
    }
    return s + "]";
  }

  static Scalar parse(Field f, std::string_view text) {
    std::string s(text);
    auto trim = [](std::string t) {
      size_t b = t.find_first_not_of(" \t");
      size_t e = t.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
    };
    s = trim(s);
    if (!s.empty() && s.front() == '[') {
      if (s.back() != ']') fail(ErrorKind::ParseError, "unterminated coefficient list '" + s + "'");
      std::string body = s.substr(1, s.size() - 2);
      std::vector<Rational> c;
      size_t pos = 0;
      if (trim(body).empty()) return Scalar(f);
      while (true) {
        size_t comma = body.find(',', pos);
        c.push_back(Rational::parse(trim(body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos))));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      return from_poly(f, std::move(c));
    }
    return Scalar(f, Rational::parse(s));
  }

 private:
  Field field_;
  Rational c_[2];
  std::vector<Rational> extra_;

  bool prime() const { return field_.kind() == FieldKind::Prime; }
  uint64_t p() const { return static_cast<uint64_t>(field_.parameter()); }

  Rational& coef(int i) { return i < 2 ? c_[i] : extra_[static_cast<size_t>(i - 2)]; }

  void init_storage() {
    if (field_.degree() > 2) extra_.resize(static_cast<size_t>(field_.degree() - 2));
  }

  void set_base(const Rational& v) {
    if (prime()) {
      c_[0] = Rational(static_cast<int64_t>(v.residue_mod(p())));
    } else {
      c_[0] = v;
    }
  }

  void check(const Scalar& b) const {
    if (field_ != b.field_) fail(ErrorKind::FieldMismatch, field_.str() + " vs " + b.field_.str());
  }

  static uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    a %= m;
    while (e) {
      if (e & 1) r = static_cast<uint64_t>(static_cast<unsigned __int128>(r) * a % m);
      a = static_cast<uint64_t>(static_cast<unsigned __int128>(a) * a % m);
      e >>= 1;
    }
    return r;
  }

  static void reduce_buffer(Field f, Rational* c, size_t len) {
    const auto& phi = f.phi();
    size_t n = phi.size() - 1;
    for (size_t t = len; t-- > n;) {
      if (c[t].is_zero()) continue;
      Rational lead = c[t];
      for (size_t k = 0; k < n; ++k)
        if (phi[k] != 0) c[t - n + k] -= lead * Rational(phi[k]);
      c[t] = Rational();
    }
  }

  static void reduce_poly(Field f, std::vector<Rational>& c) {
    const auto& phi = f.phi();
    size_t n = phi.size() - 1;
    for (size_t t = c.size(); t-- > n;) {
      if (c[t].is_zero()) continue;
      Rational lead = c[t];
      for (size_t k = 0; k < n; ++k)
        if (phi[k] != 0) c[t - n + k] -= lead * Rational(phi[k]);
      c[t] = Rational();
    }
    if (c.size() < n) c.resize(n);
  }

  void add_mul_unchecked(const Scalar& a, const Scalar& b) {
    if (prime()) {
      unsigned __int128 prod = static_cast<unsigned __int128>(a.residue()) * b.residue() + residue();
      c_[0] = Rational(static_cast<int64_t>(prod % p()));
      return;
    }
    int n = degree();
    if (n == 1) {
      c_[0].add_mul(a.c_[0], b.c_[0]);
      return;
    }
    Rational stack_buf[15];
    std::vector<Rational> heap_buf;
    Rational* prod = stack_buf;
    if (2 * n - 1 > 15) {
      heap_buf.resize(static_cast<size_t>(2 * n - 1));
      prod = heap_buf.data();
    }
    bool any = false;
    for (int i = 0; i < n; ++i) {
      if (a.coeff(i).is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (b.coeff(j).is_zero()) continue;
        prod[static_cast<size_t>(i + j)].add_mul(a.coeff(i), b.coeff(j));
        any = true;
      }
    }
    if (!any) return;
    reduce_buffer(field_, prod, static_cast<size_t>(2 * n - 1));
    for (int i = 0; i < n; ++i)
      if (!prod[static_cast<size_t>(i)].is_zero()) coef(i) += prod[static_cast<size_t>(i)];
  }

  // Solves (multiplication by *this) * y = 1 over Q in the power basis.
  Scalar cyclotomic_inverse() const {
    int n = degree();
    std::vector<std::vector<Rational>> m(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n + 1)));
    Scalar basis_elem(field_);
    for (int j = 0; j < n; ++j) {
      std::vector<Rational> xj(static_cast<size_t>(j + 1));
      xj[static_cast<size_t>(j)] = Rational(1);
      Scalar col = *this * from_poly(field_, xj);
      for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = col.coeff(i);
    }
    m[0][static_cast<size_t>(n)] = Rational(1);
    for (int c = 0; c < n; ++c) {
      int piv = -1;
      for (int r = c; r < n; ++r)
        if (!m[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) fail(ErrorKind::DivisionByZero, "element is not invertible");
      std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(c)]);
      Rational inv = m[static_cast<size_t>(c)][static_cast<size_t>(c)].inverse();
      for (int k = c; k <= n; ++k) m[static_cast<size_t>(c)][static_cast<size_t>(k)] *= inv;
      for (int r = 0; r < n; ++r) {
        if (r == c || m[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero()) continue;
        Rational f = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
        for (int k = c; k <= n; ++k)
          m[static_cast<size_t>(r)][static_cast<size_t>(k)] -= f * m[static_cast<size_t>(c)][static_cast<size_t>(k)];
      }
    }
    Scalar r(field_);
    for (int i = 0; i < n; ++i) r.coef(i) = m[static_cast<size_t>(i)][static_cast<size_t>(n)];
    return r;
  }
};

// Parses "Q", "GF(p)" or "Cyc(m)".
inline Field parse_field(std::string_view text) {
  std::string s(text);
  if (s == "Q") return Field::rationals();
  auto inner = [&](const std::string& prefix) -> std::optional<int64_t> {
    if (s.rfind(prefix, 0) != 0 || s.back() != ')') return std::nullopt;
    try {
      return std::stoll(s.substr(prefix.size(), s.size() - prefix.size() - 1));
    } catch (...) {
      return std::nullopt;
    }
  };
  if (auto p = inner("GF(")) return Field::prime(*p);
  if (auto m = inner("Cyc(")) return Field::cyclotomic(*m);
  fail(ErrorKind::ParseError, "unknown field '" + s + "'");
}

}  // namespace schrod

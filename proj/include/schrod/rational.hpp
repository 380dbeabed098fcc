#pragma once

// Exact rational numbers. Values that fit in a pair of 64-bit integers stay
// in machine words; anything larger is promoted to a GMP rational and demoted
// again as soon as it fits. The representation is canonical, so equality is
// a plain structural comparison.

#include <gmp.h>

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>

#include "schrod/error.hpp"

namespace schrod {

class Rational {
 public:
  Rational() noexcept = default;
  Rational(int64_t n) {  // NOLINT(google-explicit-constructor)
    if (n == std::numeric_limits<int64_t>::min()) {
      mpq_t q;
      mpq_init(q);
      set_mpq_si(q, n, 1);
      adopt(q);
    } else {
      num_ = n;
    }
  }
  Rational(int64_t n, int64_t d) {
    if (d == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
    mpq_t q;
    mpq_init(q);
    set_mpq_si(q, n, d);
    mpq_canonicalize(q);
    adopt(q);
  }

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) {
      big_ = new __mpq_struct;
      mpq_init(big_);
      mpq_set(big_, o.big_);
    }
  }
  Rational(Rational&& o) noexcept : num_(o.num_), den_(o.den_), big_(o.big_) { o.big_ = nullptr; }
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      Rational tmp(o);
      swap(tmp);
    }
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    swap(o);
    return *this;
  }
  ~Rational() { release(); }

  void swap(Rational& o) noexcept {
    std::swap(num_, o.num_);
    std::swap(den_, o.den_);
    std::swap(big_, o.big_);
  }

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const noexcept { return big_ ? mpz_cmp_ui(mpq_denref(big_), 1) == 0 : den_ == 1; }
  bool is_small() const noexcept { return big_ == nullptr; }
  int sign() const noexcept {
    if (big_) return mpq_sgn(big_);
    return (num_ > 0) - (num_ < 0);
  }
  // Only meaningful when is_small().
  int64_t small_num() const noexcept { return num_; }
  int64_t small_den() const noexcept { return den_; }

  // Residue of this rational modulo a prime p. Throws DivisionByZero if p
  // divides the denominator.
  uint64_t residue_mod(uint64_t p) const {
    if (!big_) {
      uint64_t n = mod_u(num_, p);
      uint64_t d = static_cast<uint64_t>(den_) % p;
      if (d == 0) fail(ErrorKind::DivisionByZero, "denominator divisible by the characteristic");
      return mulmod(n, invmod(d, p), p);
    }
    mpz_t r;
    mpz_init(r);
    mpz_fdiv_r_ui(r, mpq_numref(big_), p);
    uint64_t n = mpz_get_ui(r);
    mpz_fdiv_r_ui(r, mpq_denref(big_), p);
    uint64_t d = mpz_get_ui(r);
    mpz_clear(r);
    if (d == 0) fail(ErrorKind::DivisionByZero, "denominator divisible by the characteristic");
    return mulmod(n, invmod(d, p), p);
  }

  Rational operator-() const {
    if (!big_) return raw(-num_, den_);
    mpq_t q;
    mpq_init(q);
    mpq_neg(q, big_);
    Rational r;
    r.adopt(q);
    return r;
  }

  Rational inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
    if (!big_) {
      if (num_ > 0) return raw(den_, num_);
      return raw(-den_, -num_);
    }
    mpq_t q;
    mpq_init(q);
    mpq_inv(q, big_);
    Rational r;
    r.adopt(q);
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    if (!a.big_ && !b.big_ && small_add(a.num_, a.den_, b.num_, b.den_, r)) return r;
    return slow(a, b, mpq_add);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    if (!a.big_ && !b.big_ && small_mul(a.num_, a.den_, b.num_, b.den_, r)) return r;
    return slow(a, b, mpq_mul);
  }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  // *this += a * b
  void add_mul(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return;
    *this += a * b;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return a.big_ && b.big_ && mpq_equal(a.big_, b.big_);
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  std::string str() const {
    if (!big_) return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    char* s = mpq_get_str(nullptr, 10, big_);
    std::string out(s);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(s, out.size() + 1);
    return out;
  }

  // Accepts "n" or "p/q" with optional sign.
  static Rational parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    size_t start = 0;
    while (start < s.size() && (s[start] == ' ' || s[start] == '\t')) ++start;
    s = s.substr(start);
    if (s.empty()) fail(ErrorKind::ParseError, "empty rational");
    size_t slash = s.find('/');
    auto valid_int = [](const std::string& t, bool allow_sign) {
      size_t i = 0;
      if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
      if (i == t.size()) return false;
      for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') return false;
      return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) fail(ErrorKind::ParseError, "bad rational '" + s + "'");
    if (num[0] == '+') num = num.substr(1);
    mpq_t q;
    mpq_init(q);
    mpz_set_str(mpq_numref(q), num.c_str(), 10);
    mpz_set_str(mpq_denref(q), den.c_str(), 10);
    if (mpz_sgn(mpq_denref(q)) == 0) {
      mpq_clear(q);
      fail(ErrorKind::DivisionByZero, "rational with zero denominator");
    }
    mpq_canonicalize(q);
    Rational r;
    r.adopt(q);
    return r;
  }

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
  __mpq_struct* big_ = nullptr;

  static constexpr int64_t kMin = std::numeric_limits<int64_t>::min();

  static Rational raw(int64_t n, int64_t d) {
    Rational r;
    r.num_ = n;
    r.den_ = d;
    return r;
  }

  void release() noexcept {
    if (big_) {
      mpq_clear(big_);
      delete big_;
      big_ = nullptr;
    }
  }

  static uint64_t mod_u(int64_t n, uint64_t p) {
    __int128 r = static_cast<__int128>(n) % static_cast<__int128>(p);
    if (r < 0) r += p;
    return static_cast<uint64_t>(r);
  }
  static uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  static uint64_t invmod(uint64_t a, uint64_t p) {
    __int128 t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      __int128 q = r / nr;
      std::tie(t, nt) = std::make_pair(nt, t - q * nt);
      std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (t < 0) t += p;
    return static_cast<uint64_t>(t);
  }

  static void set_mpq_si(mpq_ptr q, int64_t n, int64_t d) {
    mpz_set_si_64(mpq_numref(q), n);
    mpz_set_si_64(mpq_denref(q), d);
  }
  static void mpz_set_si_64(mpz_ptr z, int64_t v) {
    if (v >= 0) {
      mpz_set_ui(z, static_cast<unsigned long>(v));
    } else {
      mpz_set_ui(z, static_cast<unsigned long>(-(v + 1)));
      mpz_add_ui(z, z, 1);
      mpz_neg(z, z);
    }
  }
  static void mpz_set_i128(mpz_ptr z, __int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    mpz_set_ui(z, static_cast<unsigned long>(u >> 64));
    mpz_mul_2exp(z, z, 64);
    mpz_add_ui(z, z, static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    if (neg) mpz_neg(z, z);
  }

  static bool fits(__int128 v) { return v > kMin && v <= std::numeric_limits<int64_t>::max(); }

  // Takes ownership of an initialised, canonical mpq_t; demotes when possible.
  void adopt(mpq_t q) {
    release();
    if (mpz_fits_slong_p(mpq_numref(q)) && mpz_fits_slong_p(mpq_denref(q))) {
      long n = mpz_get_si(mpq_numref(q));
      long d = mpz_get_si(mpq_denref(q));
      if (n != kMin) {
        num_ = n;
        den_ = d;
        mpq_clear(q);
        return;
      }
    }
    big_ = new __mpq_struct;
    *big_ = *q;  // steal limbs
  }

  static void set_from_i128(Rational& r, __int128 n, __int128 d) {
    if (fits(n) && fits(d)) {
      r.num_ = static_cast<int64_t>(n);
      r.den_ = static_cast<int64_t>(d);
      return;
    }
    mpq_t q;
    mpq_init(q);
    mpz_set_i128(mpq_numref(q), n);
    mpz_set_i128(mpq_denref(q), d);
    r.adopt(q);
  }

  static uint64_t uabs(int64_t v) { return v < 0 ? static_cast<uint64_t>(-(v + 1)) + 1 : static_cast<uint64_t>(v); }

  // Reduced-form addition following the usual gcd-on-denominators scheme.
  static bool small_add(int64_t an, int64_t ad, int64_t bn, int64_t bd, Rational& out) {
    if (ad == 1 && bd == 1) {
      int64_t s;
      if (__builtin_add_overflow(an, bn, &s) || s == kMin) return false;
      out.num_ = s;
      out.den_ = 1;
      return true;
    }
    uint64_t g = std::gcd(static_cast<uint64_t>(ad), static_cast<uint64_t>(bd));
    if (g == 1) {
      __int128 n = static_cast<__int128>(an) * bd + static_cast<__int128>(bn) * ad;
      __int128 d = static_cast<__int128>(ad) * bd;
      set_from_i128(out, n, d);
      return true;
    }
    int64_t adg = ad / static_cast<int64_t>(g), bdg = bd / static_cast<int64_t>(g);
    __int128 t = static_cast<__int128>(an) * bdg + static_cast<__int128>(bn) * adg;
    if (t == 0) {
      out.num_ = 0;
      out.den_ = 1;
      return true;
    }
    unsigned __int128 ta = t < 0 ? static_cast<unsigned __int128>(-t) : static_cast<unsigned __int128>(t);
    uint64_t g2 = std::gcd(static_cast<uint64_t>(ta % g), g);
    __int128 n = t / static_cast<__int128>(g2);
    __int128 d = static_cast<__int128>(adg) * (bd / static_cast<int64_t>(g2));
    set_from_i128(out, n, d);
    return true;
  }

  static bool small_mul(int64_t an, int64_t ad, int64_t bn, int64_t bd, Rational& out) {
    if (an == 0 || bn == 0) {
      out.num_ = 0;
      out.den_ = 1;
      return true;
    }
    int64_t g1 = static_cast<int64_t>(std::gcd(uabs(an), static_cast<uint64_t>(bd)));
    int64_t g2 = static_cast<int64_t>(std::gcd(uabs(bn), static_cast<uint64_t>(ad)));
    __int128 n = static_cast<__int128>(an / g1) * (bn / g2);
    __int128 d = static_cast<__int128>(ad / g2) * (bd / g1);
    set_from_i128(out, n, d);
    return true;
  }

  static void to_mpq(const Rational& a, mpq_ptr q) {
    if (a.big_) {
      mpq_set(q, a.big_);
    } else {
      set_mpq_si(q, a.num_, a.den_);
    }
  }

  static Rational slow(const Rational& a, const Rational& b, void (*op)(mpq_ptr, mpq_srcptr, mpq_srcptr)) {
    mpq_t x, y, z;
    mpq_init(x);
    mpq_init(y);
    mpq_init(z);
    to_mpq(a, x);
    to_mpq(b, y);
    op(z, x, y);
    mpq_clear(x);
    mpq_clear(y);
    Rational r;
    r.adopt(z);
    return r;
  }
};

}  // namespace schrod

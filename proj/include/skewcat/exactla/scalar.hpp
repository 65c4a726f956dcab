#pragma once

// Exact scalars: prime fields F_p (p < 2^31) and the rationals.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace skewcat {

class field_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FieldSpec {
  enum class Kind { prime, rational };

  Kind kind = Kind::rational;
  std::uint32_t p = 0;

  static FieldSpec prime(std::uint64_t p);
  static FieldSpec rational() { return FieldSpec{}; }

  bool is_prime() const { return kind == Kind::prime; }
  std::uint64_t characteristic() const { return is_prime() ? p : 0; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ull << 31)) throw field_error("modulus must be below 2^31");
  if (!is_prime_number(p)) throw field_error("modulus " + std::to_string(p) + " is not prime");
  FieldSpec f;
  f.kind = Kind::prime;
  f.p = static_cast<std::uint32_t>(p);
  return f;
}

// Residue modulo a prime. The modulus travels with the value; a
// default-constructed Fp is an "unbound" zero that adopts the modulus of
// whatever it is combined with.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t v, std::uint32_t p) : p_(p) {
    if (p == 0) throw field_error("Fp with zero modulus");
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp& operator+=(const Fp& o) {
    p_ = join(o);
    if (p_ == 0) return *this;
    std::uint64_t s = std::uint64_t(v_) + o.v_;
    v_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    p_ = join(o);
    if (p_ == 0) return *this;
    v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t(v_) + p_ - o.v_);
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    p_ = join(o);
    if (p_ == 0) return *this;
    v_ = static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % p_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  Fp operator-() const {
    Fp r = *this;
    if (v_ != 0) r.v_ = p_ - v_;
    return r;
  }

  Fp inverse() const {
    if (v_ == 0) throw field_error("division by zero in F_p");
    // extended Euclid
    std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
    while (m != 0) {
      std::int64_t q = a / m;
      std::int64_t t = a - q * m;
      a = m;
      m = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    return Fp(x0, p_);
  }

  Fp pow(std::uint64_t e) const {
    Fp base = *this, r(1, p_);
    while (e) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.v_; }

 private:
  std::uint32_t join(const Fp& o) const {
    if (p_ == 0) return o.p_;
    if (o.p_ != 0 && o.p_ != p_) throw field_error("field mismatch: F_" + std::to_string(p_) + " vs F_" + std::to_string(o.p_));
    return p_;
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

// Rational number in lowest terms.
class Rational {
 public:
  Rational() = default;
  explicit Rational(std::int64_t n) : q_(static_cast<long>(n)) {}
  Rational(std::int64_t n, std::int64_t d) : q_(static_cast<long>(n), static_cast<long>(d)) {
    if (d == 0) throw field_error("zero denominator");
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  const mpq_class& get() const { return q_; }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw field_error("division by zero in Q");
    q_ /= o.q_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational inverse() const {
    if (is_zero()) throw field_error("division by zero in Q");
    return Rational(mpq_class(1 / q_));
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.q_.get_str(); }

 private:
  mpq_class q_{0};
};

template <class K>
struct scalar_traits;

template <>
struct scalar_traits<Fp> {
  static constexpr FieldSpec::Kind kind = FieldSpec::Kind::prime;
  static Fp make(const FieldSpec& f, std::int64_t v) {
    if (!f.is_prime()) throw field_error("expected a prime field");
    return Fp(v, f.p);
  }
  static Fp parse(const FieldSpec& f, const std::string& s) {
    if (s.empty()) throw field_error("empty scalar");
    std::size_t slash = s.find('/');
    try {
      if (slash == std::string::npos) {
        mpz_class z(s, 10);
        mpz_class r = z % f.p;
        if (r < 0) r += f.p;
        return Fp(r.get_si(), f.p);
      }
      mpz_class n(s.substr(0, slash), 10), d(s.substr(slash + 1), 10);
      mpz_class rn = n % f.p, rd = d % f.p;
      if (rn < 0) rn += f.p;
      if (rd < 0) rd += f.p;
      if (rd == 0) throw field_error("denominator divisible by p in '" + s + "'");
      return Fp(rn.get_si(), f.p) / Fp(rd.get_si(), f.p);
    } catch (const std::invalid_argument&) {
      throw field_error("malformed scalar '" + s + "'");
    }
  }
  static std::string str(const Fp& a) { return std::to_string(a.value()); }
  static std::size_t hash(const Fp& a) { return a.value(); }
};

template <>
struct scalar_traits<Rational> {
  static constexpr FieldSpec::Kind kind = FieldSpec::Kind::rational;
  static Rational make(const FieldSpec&, std::int64_t v) { return Rational(v); }
  static Rational parse(const FieldSpec&, const std::string& s) {
    try {
      mpq_class q(s, 10);
      if (q.get_den() == 0) throw field_error("zero denominator in '" + s + "'");
      q.canonicalize();
      return Rational(q);
    } catch (const std::invalid_argument&) {
      throw field_error("malformed scalar '" + s + "'");
    }
  }
  static std::string str(const Rational& a) { return a.get().get_str(); }
  static std::size_t hash(const Rational& a) { return std::hash<std::string>{}(a.get().get_str()); }
};

template <class K>
K one(const FieldSpec& f) {
  return scalar_traits<K>::make(f, 1);
}

template <class K>
K from_int(const FieldSpec& f, std::int64_t v) {
  return scalar_traits<K>::make(f, v);
}

template <class K>
std::string to_string(const K& a) {
  return scalar_traits<K>::str(a);
}

template <class K>
inline constexpr bool is_prime_field_v = scalar_traits<K>::kind == FieldSpec::Kind::prime;

}  // namespace skewcat

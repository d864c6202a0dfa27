#pragma once
// Exact scalars: arbitrary-precision rationals and a prime field with runtime modulus.
//
// Everything above this layer is templated on the scalar type K.  The contract a
// scalar type must satisfy:
//   - default construction = 0, construction from long long = integer literal
//   - +, -, *, /, unary -, ==, !=
//   - is_zero(), inverse() (throws on 0), to_string()
//
// Fp elements carry their modulus.  A default- or literal-constructed Fp has
// modulus 0 ("integer literal, field not yet known") and adopts the modulus of
// the first genuine field element it meets.  This keeps generic code like
// Matrix<K>::identity(n) field-agnostic without threading a field context
// through every call.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace siltlab {

class Rational {
public:
  using rep = boost::multiprecision::cpp_rational;

  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}
  Rational(long long num, long long den)
      : v_(make_ratio(boost::multiprecision::cpp_int(num),
                      boost::multiprecision::cpp_int(den))) {}
  explicit Rational(rep v) : v_(std::move(v)) {}

  bool is_zero() const { return v_ == 0; }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(make_ratio(boost::multiprecision::denominator(v_),
                               boost::multiprecision::numerator(v_)));
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

  // Sign and ordering are meaningful over Q (used for rational root scans).
  int sign() const { return v_.sign(); }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  const rep& value() const { return v_; }

  std::string to_string() const {
    std::ostringstream os;
    os << v_;
    return os.str();
  }

  // Accepts "n", "-n", "n/d".
  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos)
        return Rational(rep(boost::multiprecision::cpp_int(s)));
      boost::multiprecision::cpp_int num(s.substr(0, slash));
      boost::multiprecision::cpp_int den(s.substr(slash + 1));
      return Rational(make_ratio(num, den));
    } catch (const std::exception&) {
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
  }

private:
  rep v_;

  // cpp_rational's (num, den) constructor insists on canonical input, so
  // normalize: positive denominator, coprime parts.
  static rep make_ratio(boost::multiprecision::cpp_int num,
                        boost::multiprecision::cpp_int den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    boost::multiprecision::cpp_int g = boost::multiprecision::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    return rep(num, den);
  }
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

class Fp {
public:
  Fp() : val_(0), p_(0) {}
  Fp(long long n) : val_(n), p_(0) {}
  Fp(long long n, std::uint32_t p) : val_(reduce(n, p)), p_(p) { check_modulus(p); }

  std::uint32_t modulus() const { return p_; }
  long long residue() const { return val_; }

  bool is_zero() const { return val_ == 0; }

  Fp inverse() const {
    if (p_ == 0) {
      if (val_ == 1 || val_ == -1) return *this;
      throw std::domain_error("Fp: inverse of an integer literal with unknown modulus");
    }
    if (val_ == 0) throw std::domain_error("Fp: inverse of zero");
    // Extended Euclid on (val, p).
    long long a = val_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      long long q = a / b;
      long long t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    if (a != 1) throw std::domain_error("Fp: element not invertible (modulus not prime?)");
    return Fp(x0, p_);
  }

  friend Fp operator+(Fp a, Fp b) { align(a, b); return make(a.val_ + b.val_, a.p_); }
  friend Fp operator-(Fp a, Fp b) { align(a, b); return make(a.val_ - b.val_, a.p_); }
  friend Fp operator*(Fp a, Fp b) { align(a, b); return make(a.val_ * b.val_, a.p_); }
  friend Fp operator/(Fp a, Fp b) { align(a, b); return a * b.inverse(); }
  Fp operator-() const { return make(-val_, p_); }
  Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
  Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
  Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }

  friend bool operator==(Fp a, Fp b) { align(a, b); return a.val_ == b.val_; }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  std::string to_string() const { return std::to_string(val_); }

  static Fp parse(const std::string& s, std::uint32_t p) {
    try {
      return Fp(std::stoll(s), p);
    } catch (const std::exception&) {
      throw std::invalid_argument("Fp: cannot parse '" + s + "'");
    }
  }

private:
  // Invariant: p_ > 0 implies 0 <= val_ < p_.  p_ == 0 means "plain integer".
  long long val_;
  std::uint32_t p_;

  static void check_modulus(std::uint32_t p) {
    if (p < 2) throw std::invalid_argument("Fp: modulus must be >= 2");
  }

  static long long reduce(long long n, std::uint32_t p) {
    check_modulus(p);
    long long r = n % static_cast<long long>(p);
    return r < 0 ? r + p : r;
  }

  static Fp make(long long n, std::uint32_t p) {
    Fp r;
    r.p_ = p;
    r.val_ = p ? reduce(n, p) : n;
    return r;
  }

  static void align(Fp& a, Fp& b) {
    if (a.p_ == b.p_) return;
    if (a.p_ == 0) { a.val_ = reduce(a.val_, b.p_); a.p_ = b.p_; return; }
    if (b.p_ == 0) { b.val_ = reduce(b.val_, a.p_); b.p_ = a.p_; return; }
    throw std::invalid_argument("Fp: mixing elements of F_" + std::to_string(a.p_) +
                                " and F_" + std::to_string(b.p_));
  }
};

inline std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.to_string(); }

// Name used in diagnostics and JSON output.
template <class K> const char* field_name();
template <> inline const char* field_name<Rational>() { return "Q"; }
template <> inline const char* field_name<Fp>() { return "Fp"; }

}  // namespace siltlab

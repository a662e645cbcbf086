#pragma once

// Exact arithmetic scalars used throughout: arbitrary-precision integers and
// rationals wrapped in thin value types so that Eigen expressions see a
// closed set of constructors and operators.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace gdhkit {

namespace bmp = boost::multiprecision;

using i64 = long long;

class Int {
 public:
  Int() : v_(0) {}
  Int(i64 n) : v_(n) {}
  Int(int n) : v_(n) {}
  explicit Int(bmp::cpp_int n) : v_(std::move(n)) {}
  explicit Int(const std::string& s) : v_(s) {}

  const bmp::cpp_int& raw() const { return v_; }

  friend Int operator+(const Int& a, const Int& b) { return Int(a.v_ + b.v_); }
  friend Int operator-(const Int& a, const Int& b) { return Int(a.v_ - b.v_); }
  friend Int operator*(const Int& a, const Int& b) { return Int(a.v_ * b.v_); }
  // Truncated division (C++ semantics).
  friend Int operator/(const Int& a, const Int& b) { return Int(a.v_ / b.v_); }
  friend Int operator%(const Int& a, const Int& b) { return Int(a.v_ % b.v_); }
  Int operator-() const { return Int(-v_); }
  Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
  Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
  Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }
  Int& operator/=(const Int& o) { v_ /= o.v_; return *this; }
  Int& operator%=(const Int& o) { v_ %= o.v_; return *this; }

  friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Int& a, const Int& b) { return a.v_ != b.v_; }
  friend bool operator<(const Int& a, const Int& b) { return a.v_ < b.v_; }
  friend bool operator>(const Int& a, const Int& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Int& a, const Int& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Int& a, const Int& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }
  bool is_odd() const { return bmp::bit_test(bmp::cpp_int(bmp::abs(v_)), 0); }

  i64 to_i64() const {
    if (v_ < std::numeric_limits<i64>::min() || v_ > std::numeric_limits<i64>::max())
      throw std::overflow_error("Int::to_i64: value out of range");
    return static_cast<i64>(v_);
  }
  double to_double() const { return static_cast<double>(v_); }
  std::string str() const { return v_.str(); }

  friend std::ostream& operator<<(std::ostream& os, const Int& x) { return os << x.v_; }

 private:
  bmp::cpp_int v_;
};

inline Int abs(const Int& x) { return x.sign() < 0 ? -x : x; }
inline Int gcd(const Int& a, const Int& b) { return Int(bmp::gcd(a.raw(), b.raw())); }
inline Int lcm(const Int& a, const Int& b) { return Int(bmp::lcm(a.raw(), b.raw())); }

// Floor division and the matching non-negative remainder.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (!(a - q * b).is_zero() && ((a.sign() < 0) != (b.sign() < 0))) q -= Int(1);
  return q;
}
inline Int floor_mod(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

class Rat {
 public:
  Rat() : v_(0) {}
  Rat(i64 n) : v_(n) {}
  Rat(int n) : v_(n) {}
  Rat(const Int& n) : v_(n.raw()) {}
  Rat(const Int& num, const Int& den) : v_(num.raw(), den.raw()) {
    if (den.is_zero()) throw std::domain_error("Rat: zero denominator");
  }
  Rat(i64 num, i64 den) : Rat(Int(num), Int(den)) {}
  explicit Rat(bmp::cpp_rational x) : v_(std::move(x)) {}

  const bmp::cpp_rational& raw() const { return v_; }
  Int num() const { return Int(bmp::numerator(v_)); }
  Int den() const { return Int(bmp::denominator(v_)); }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v_ + b.v_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v_ - b.v_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v_ * b.v_); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.v_.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(a.v_ / b.v_);
  }
  Rat operator-() const { return Rat(-v_); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }
  bool is_integer() const { return bmp::denominator(v_) == 1; }

  double to_double() const { return static_cast<double>(v_); }

  // "p/q" with the "/q" omitted for integers.
  std::string str() const {
    std::string s = bmp::numerator(v_).str();
    if (!is_integer()) s += "/" + bmp::denominator(v_).str();
    return s;
  }

  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s), Int(1));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.str(); }

 private:
  bmp::cpp_rational v_;
};

inline Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }

inline Int floor_rat(const Rat& x) { return floor_div(x.num(), x.den()); }
inline Int ceil_rat(const Rat& x) { return -floor_div(-x.num(), x.den()); }

inline i64 gcd_i64(i64 a, i64 b) { return std::gcd(a, b); }
inline i64 lcm_i64(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

}  // namespace gdhkit

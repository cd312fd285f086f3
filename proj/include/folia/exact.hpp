#pragma once

// Exact scalars in Q or a real quadratic field Q(sqrt(d)).
//
// A value is stored as  a + b*sqrt(d)  with a, b arbitrary-precision
// rationals and d a fixed square-free non-negative integer.  d = 0 means
// the value is plain rational.  All arithmetic and comparisons are exact;
// there is no rounding anywhere in this header.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace folia {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

class field_error : public std::runtime_error {
 public:
  explicit field_error(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_square_free(std::uint64_t d) {
  if (d < 2) return true;
  for (std::uint64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

class Exact {
 public:
  Exact() = default;
  Exact(long v) : a_(v) {}  // NOLINT: implicit by design, mirrors int literals
  explicit Exact(BigRat rational) : a_(std::move(rational)) {}

  Exact(BigRat rational, BigRat radical, std::uint64_t d)
      : a_(std::move(rational)), b_(std::move(radical)), d_(d) {
    if (!is_square_free(d_))
      throw field_error("radicand " + std::to_string(d_) + " is not square-free");
    normalize();
  }

  static Exact sqrt_term(std::uint64_t d) { return Exact(BigRat(0), BigRat(1), d); }

  const BigRat& rational_part() const { return a_; }
  const BigRat& radical_part() const { return b_; }
  std::uint64_t radicand() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  // Sign of a + b*sqrt(d), decided by squaring; exact.
  int sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2 d.
    const BigRat lhs = a_ * a_;
    const BigRat rhs = b_ * b_ * BigInt(d_);
    if (lhs == rhs) return 0;  // impossible for square-free d>1, but harmless
    return lhs > rhs ? sa : sb;
  }

  Exact operator-() const { return Exact(-a_, -b_, d_); }

  Exact& operator+=(const Exact& o) {
    const std::uint64_t d = joint_radicand(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    d_ = d;
    normalize();
    return *this;
  }
  Exact& operator-=(const Exact& o) { return *this += -o; }

  Exact& operator*=(const Exact& o) {
    const std::uint64_t d = joint_radicand(*this, o);
    const BigRat na = a_ * o.a_ + b_ * o.b_ * BigInt(d);
    const BigRat nb = a_ * o.b_ + b_ * o.a_;
    a_ = na;
    b_ = nb;
    d_ = d;
    normalize();
    return *this;
  }

  Exact& operator/=(const Exact& o) {
    if (o.is_zero()) throw field_error("division by zero");
    const std::uint64_t d = joint_radicand(*this, o);
    // 1/(a + b sqrt d) = (a - b sqrt d) / (a^2 - b^2 d)
    const BigRat den = o.a_ * o.a_ - o.b_ * o.b_ * BigInt(d);
    const BigRat na = (a_ * o.a_ - b_ * o.b_ * BigInt(d)) / den;
    const BigRat nb = (b_ * o.a_ - a_ * o.b_) / den;
    a_ = na;
    b_ = nb;
    d_ = d;
    normalize();
    return *this;
  }

  friend Exact operator+(Exact x, const Exact& y) { return x += y; }
  friend Exact operator-(Exact x, const Exact& y) { return x -= y; }
  friend Exact operator*(Exact x, const Exact& y) { return x *= y; }
  friend Exact operator/(Exact x, const Exact& y) { return x /= y; }

  friend bool operator==(const Exact& x, const Exact& y) {
    joint_radicand(x, y);
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Exact& x, const Exact& y) { return !(x == y); }
  friend bool operator<(const Exact& x, const Exact& y) { return (x - y).sign() < 0; }
  friend bool operator>(const Exact& x, const Exact& y) { return y < x; }
  friend bool operator<=(const Exact& x, const Exact& y) { return !(y < x); }
  friend bool operator>=(const Exact& x, const Exact& y) { return !(x < y); }

  Exact abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const {
    double r = static_cast<double>(a_);
    if (b_ != 0) r += static_cast<double>(b_) * std::sqrt(static_cast<double>(d_));
    return r;
  }

  // Text form: "a/b" or "a/b+c/e*sqrt(d)" (also accepts '-' joins and
  // bare "sqrt(d)" terms on input).
  std::string str() const;
  static Exact parse(const std::string& text);

  friend std::ostream& operator<<(std::ostream& os, const Exact& x) { return os << x.str(); }

 private:
  static std::uint64_t joint_radicand(const Exact& x, const Exact& y) {
    if (x.d_ == y.d_) return x.d_;
    if (x.b_ == 0) return y.d_;
    if (y.b_ == 0) return x.d_;
    throw field_error("incompatible field: sqrt(" + std::to_string(x.d_) + ") vs sqrt(" +
                      std::to_string(y.d_) + ")");
  }

  void normalize() {
    if (d_ == 1) {
      a_ += b_;
      b_ = 0;
    }
    if (d_ == 0) b_ = 0;  // b*sqrt(0) = 0
    if (b_ == 0) d_ = 0;
  }

  BigRat a_;
  BigRat b_;
  std::uint64_t d_ = 0;
};

namespace detail {

inline std::string rat_str(const BigRat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

// Parses a rational with optional leading sign, advancing pos.
inline BigRat parse_rat(const std::string& t, size_t& pos) {
  size_t start = pos;
  if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) ++pos;
  size_t dig = pos;
  while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
  if (pos == dig) throw field_error("expected number in '" + t + "' at " + std::to_string(start));
  BigInt num(t.substr(start, pos - start));
  BigInt den = 1;
  if (pos < t.size() && t[pos] == '/') {
    ++pos;
    size_t d0 = pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (pos == d0) throw field_error("expected denominator in '" + t + "'");
    den = BigInt(t.substr(d0, pos - d0));
    if (den == 0) throw field_error("zero denominator in '" + t + "'");
  }
  return BigRat(num, den);
}

}  // namespace detail

inline std::string Exact::str() const {
  if (b_ == 0) return detail::rat_str(a_);
  std::string s = detail::rat_str(a_);
  if (b_.sign() >= 0) s += "+";
  s += detail::rat_str(b_) + "*sqrt(" + std::to_string(d_) + ")";
  return s;
}

namespace detail {

inline std::uint64_t parse_radicand(const std::string& t, size_t& pos) {
  // expects pos at "sqrt("
  pos += 5;
  size_t d0 = pos;
  while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
  if (pos == d0 || pos >= t.size() || t[pos] != ')')
    throw field_error("malformed sqrt() in '" + t + "'");
  std::uint64_t dd = std::stoull(t.substr(d0, pos - d0));
  ++pos;
  return dd;
}

}  // namespace detail

inline Exact Exact::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw field_error("empty scalar");

  size_t pos = 0;
  BigRat a = 0, b = 0;
  std::uint64_t d = 0;
  bool first = true;
  while (pos < t.size()) {
    int sgn = 1;
    if (t[pos] == '+' || t[pos] == '-') {
      sgn = t[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw field_error("expected '+' or '-' in '" + text + "'");
    }
    first = false;

    BigRat coeff = 1;
    bool is_radical = false;
    std::uint64_t dd = 0;
    if (t.compare(pos, 5, "sqrt(") == 0) {
      dd = detail::parse_radicand(t, pos);
      is_radical = true;
    } else {
      coeff = detail::parse_rat(t, pos);
      if (pos < t.size() && t[pos] == '*') {
        ++pos;
        if (t.compare(pos, 5, "sqrt(") != 0)
          throw field_error("expected sqrt after '*' in '" + text + "'");
        dd = detail::parse_radicand(t, pos);
        is_radical = true;
      }
    }

    if (!is_radical) {
      a += sgn * coeff;
      continue;
    }
    if (!is_square_free(dd))
      throw field_error("radicand " + std::to_string(dd) + " is not square-free");
    if (dd == 0) continue;            // c*sqrt(0) = 0
    if (dd == 1) {                    // c*sqrt(1) = c
      a += sgn * coeff;
      continue;
    }
    if (d != 0 && d != dd) throw field_error("incompatible field in '" + text + "'");
    d = dd;
    b += sgn * coeff;
  }
  return Exact(a, b, d);
}

}  // namespace folia

#ifndef STONEWORK_RATIONAL_HPP
#define STONEWORK_RATIONAL_HPP

#include <cstdint>
#include <string>

namespace stonework {

/// Exact rational on 64-bit integers, always stored fully reduced with a
/// positive denominator. Arithmetic throws std::overflow_error instead of
/// wrapping; the desk-scale inputs this library handles stay far below that.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const;

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;

  std::string str() const;
  static Rational parse(const std::string& text);

private:
  void reduce();
  long long num_;
  long long den_;
};

long long checked_mul(long long a, long long b);
long long checked_add(long long a, long long b);

} // namespace stonework

#endif

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace jpavnf {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an instance, solution, or config violates a structural invariant.
struct ValidationError : Error {
    using Error::Error;
};

/// Exact rational number. All rate and capacity arithmetic in this project
/// goes through this type; nothing is ever rounded to floating point.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(std::int64_t n) : value_(n) {}  // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(BigRational v) : value_(std::move(v)) {}

    /// Numerator/denominator in lowest terms, denominator > 0.
    /// Throws Error if the reduced value does not fit in 64 bits.
    std::int64_t num() const;
    std::int64_t den() const;

    const BigRational& raw() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }
    int sign() const { return value_.sign(); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    /// "p" or "p/q".
    std::string str() const;
    /// Fixed-point decimal rendering with `digits` places, rounded half up.
    std::string decimal(int digits) const;
    /// Parses "p" or "p/q".
    static Rational parse(const std::string& text);

private:
    BigRational value_;
};

/// ceil(a / b) for a >= 0, b > 0, as a plain integer. ceil(0 / b) = 0.
std::int64_t ceil_div(const Rational& a, const Rational& b);

/// Largest integer <= v, for v >= 0.
std::int64_t floor_to_int(const Rational& v);

}  // namespace jpavnf

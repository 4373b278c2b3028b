#include "jpavnf/rational.hpp"

#include <limits>

namespace jpavnf {

namespace {

std::int64_t narrow(const BigInt& v, const char* what) {
    if (v < std::numeric_limits<std::int64_t>::min() ||
        v > std::numeric_limits<std::int64_t>::max()) {
        throw Error(std::string(what) + " does not fit in 64 bits: " + v.str());
    }
    return v.convert_to<std::int64_t>();
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw ValidationError("rational with zero denominator");
    }
    BigInt n(num), d(den);
    if (d < 0) {  // the backend requires a positive denominator
        n = -n;
        d = -d;
    }
    value_ = BigRational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw Error("rational division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::int64_t Rational::num() const { return narrow(numerator(value_), "numerator"); }

std::int64_t Rational::den() const { return narrow(denominator(value_), "denominator"); }

std::string Rational::str() const {
    if (denominator(value_) == 1) {
        return numerator(value_).str();
    }
    return numerator(value_).str() + "/" + denominator(value_).str();
}

std::string Rational::decimal(int digits) const {
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt n = numerator(value_) * scale * 2 + denominator(value_) * (value_ < 0 ? -1 : 1);
    BigInt q = n / (denominator(value_) * 2);  // round half away from zero
    bool neg = q < 0;
    if (neg) q = -q;
    std::string body = q.str();
    if (static_cast<int>(body.size()) <= digits) {
        body.insert(0, digits + 1 - body.size(), '0');
    }
    if (digits > 0) {
        body.insert(body.size() - digits, ".");
    }
    return neg ? "-" + body : body;
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    const std::string top = slash == std::string::npos ? text : text.substr(0, slash);
    const std::string bottom = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (top.empty() || bottom.empty()) {
        throw ValidationError("cannot parse rational '" + text + "'");
    }
    try {
        BigInt num(top);
        BigInt den(bottom);
        if (den == 0) {
            throw ValidationError("rational with zero denominator: " + text);
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(BigRational(num, den));
    } catch (const ValidationError&) {
        throw;
    } catch (const std::runtime_error&) {
        throw ValidationError("cannot parse rational '" + text + "'");
    }
}

std::int64_t ceil_div(const Rational& a, const Rational& b) {
    if (a.sign() < 0 || b.sign() <= 0) {
        throw Error("ceil_div requires a >= 0 and b > 0");
    }
    BigRational q = a.raw() / b.raw();
    BigInt r = (numerator(q) + denominator(q) - 1) / denominator(q);
    return r.convert_to<std::int64_t>();
}

std::int64_t floor_to_int(const Rational& v) {
    if (v.sign() < 0) {
        throw Error("floor_to_int requires v >= 0");
    }
    BigInt r = numerator(v.raw()) / denominator(v.raw());
    return r.convert_to<std::int64_t>();
}

}  // namespace jpavnf

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "bezout/errors.hpp"

namespace bezout {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. Always stored in lowest terms with a positive
// denominator; every arithmetic operation is exact. Constructing or dividing
// with a zero denominator throws Error("DivisionByZero").
class Rational {
public:
    Rational() = default;
    Rational(int n) : num_(n) {}
    Rational(long long n) : num_(n) {}
    Rational(BigInt n) : num_(std::move(n)) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) fail("DivisionByZero", "rational with zero denominator");
        normalize();
    }

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_one() const noexcept { return num_ == 1 && den_ == 1; }
    int sign() const noexcept { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) fail("DivisionByZero", "division by zero rational");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    Rational operator-() const {
        Rational r(*this);
        r.num_ = -r.num_;
        return r;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    double to_double() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

    // "p" when the denominator is 1, otherwise "p/q".
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    // Accepts "p", "p/q" and finite decimals like "-1.25".
    // Throws Error("BadRational") on anything else.
    static Rational parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    BigInt num_{0};
    BigInt den_{1};
};

inline Rational Rational::parse(std::string_view text) {
    const auto bad = [&]() -> Rational {
        fail("BadRational", "cannot parse rational from \"" + std::string(text) + "\"");
    };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    const auto read_digits = [&](std::string& out) {
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            out.push_back(text[pos++]);
    };
    std::string int_part;
    read_digits(int_part);
    if (int_part.empty()) return bad();

    BigInt num(int_part);
    BigInt den(1);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::string den_part;
        read_digits(den_part);
        if (den_part.empty() || pos != text.size()) return bad();
        den = BigInt(den_part);
        if (den == 0) fail("BadRational", "zero denominator in \"" + std::string(text) + "\"");
    } else if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::string frac_part;
        read_digits(frac_part);
        if (frac_part.empty() || pos != text.size()) return bad();
        for (char c : frac_part) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
    } else if (pos != text.size()) {
        return bad();
    }
    if (negative) num = -num;
    return Rational(std::move(num), std::move(den));
}

} // namespace bezout

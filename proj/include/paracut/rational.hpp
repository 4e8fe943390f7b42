#pragma once

// Exact arithmetic used throughout the library.  Cut capacities, ratio
// objectives and breakpoint positions are all rationals; nothing is ever
// rounded, so equality tests in the solver are meaningful.
//
// Rational wraps boost::multiprecision::cpp_rational behind a plain value
// type.  The wrapper keeps boost's expression templates out of the public
// API (auto-deduced intermediates of cpp_rational are lazy expression
// objects, which makes numerator()/denominator() calls on them ill-formed)
// and pins down construction, parsing and formatting in one place.

#include <boost/integer/common_factor_rt.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "paracut/errors.hpp"

namespace paracut {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                  // NOLINT: implicit by design
    Rational(long long n) : v_(n) {}            // NOLINT
    Rational(const BigInt& n) : v_(n) {}        // NOLINT
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw Error("rational with zero denominator");
        // boost's pair constructor reduces but insists on den > 0.
        if (den < 0)
            v_ = boost::multiprecision::cpp_rational(-num, -den);
        else
            v_ = boost::multiprecision::cpp_rational(num, den);
    }

    // Always canonical: denominator > 0, gcd(|num|, den) == 1.
    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    double to_double() const { return v_.convert_to<double>(); }

    // "p" when integral, "p/q" otherwise (q > 0).
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    // Accepts "p" or "p/q" with optional leading sign on p; q must be a
    // positive unsigned literal.  No whitespace, no empty parts.
    static std::optional<Rational> try_parse(std::string_view text) {
        auto digits = [](std::string_view t) {
            if (t.empty()) return false;
            for (char c : t)
                if (c < '0' || c > '9') return false;
            return true;
        };
        std::string_view num = text, den;
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            num = text.substr(0, slash);
            den = text.substr(slash + 1);
            if (!digits(den)) return std::nullopt;
        }
        std::string_view mag = num;
        bool negative = false;
        if (!mag.empty() && (mag.front() == '-' || mag.front() == '+')) {
            negative = mag.front() == '-';
            mag.remove_prefix(1);
        }
        if (!digits(mag)) return std::nullopt;
        BigInt p{std::string(mag)};
        if (negative) p = -p;
        if (den.empty()) return Rational(p);
        BigInt q{std::string(den)};
        if (q == 0) return std::nullopt;
        return Rational(p, q);
    }

    static Rational parse(std::string_view text) {
        if (auto r = try_parse(text)) return *r;
        throw ParseError("expected rational 'p' or 'p/q', got '" + std::string(text) + "'");
    }

    Rational& operator+=(const Rational& o) { v_ = raw(v_ + o.v_); return *this; }
    Rational& operator-=(const Rational& o) { v_ = raw(v_ - o.v_); return *this; }
    Rational& operator*=(const Rational& o) { v_ = raw(v_ * o.v_); return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error("rational division by zero");
        v_ = raw(v_ / o.v_);
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(0) - a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    using raw = boost::multiprecision::cpp_rational;
    raw v_;
};

inline Rational abs(const Rational& r) { return r < 0 ? -r : r; }

inline Rational midpoint(const Rational& a, const Rational& b) {
    return (a + b) / 2;
}

// Extended capacity: a finite rational or +infinity.  Infinite arcs encode
// hard constraints in the cut networks and are kept symbolic; they never
// degrade into large finite surrogates.
class ExtendedCapacity {
public:
    ExtendedCapacity() = default;
    ExtendedCapacity(Rational v) : value_(std::move(v)) {}  // NOLINT
    static ExtendedCapacity infinity() {
        ExtendedCapacity c;
        c.infinite_ = true;
        return c;
    }

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }
    const Rational& value() const {
        if (infinite_) throw Error("value() on infinite capacity");
        return value_;
    }

    ExtendedCapacity& operator+=(const ExtendedCapacity& o) {
        if (o.infinite_) infinite_ = true;
        if (!infinite_) value_ += o.value_;
        return *this;
    }
    friend ExtendedCapacity operator+(ExtendedCapacity a, const ExtendedCapacity& b) {
        return a += b;
    }

    // Total order with +infinity as the unique maximum.
    friend bool operator==(const ExtendedCapacity& a, const ExtendedCapacity& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ && b.infinite_;
        return a.value_ == b.value_;
    }
    friend bool operator!=(const ExtendedCapacity& a, const ExtendedCapacity& b) {
        return !(a == b);
    }
    friend bool operator<(const ExtendedCapacity& a, const ExtendedCapacity& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const ExtendedCapacity& a, const ExtendedCapacity& b) {
        return a < b || a == b;
    }

    std::string str() const { return infinite_ ? "inf" : value_.str(); }

private:
    Rational value_;
    bool infinite_ = false;
};

}  // namespace paracut

#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "coarse/errors.hpp"

namespace coarse {

/// Exact rational with 64-bit numerator and positive 64-bit denominator,
/// always stored in lowest terms. Intermediate products go through 128-bit
/// arithmetic; results that do not fit back into 64 bits throw Error rather
/// than silently wrapping. All comparisons are exact.
class Rat {
public:
    constexpr Rat() = default;
    constexpr Rat(long long value) : num_(value) {}
    Rat(long long num, long long den) : num_(num), den_(den) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }

    /// Largest integer <= value.
    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    /// Smallest integer >= value.
    long long ceil() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Canonical text form: "7" when integral, "7/2" otherwise.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Always-fraction text form: "7/1", "7/2".
    std::string str_fraction() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "a" or "a/b" with optional leading minus.
    static Rat parse(const std::string& text);

    friend Rat operator+(const Rat& a, const Rat& b) {
        __int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
        __int128 d = i128(a.den_) * b.den_;
        return from_i128(n, d);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        __int128 n = i128(a.num_) * b.den_ - i128(b.num_) * a.den_;
        __int128 d = i128(a.den_) * b.den_;
        return from_i128(n, d);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw Error("rational division by zero");
        return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

private:
    using i128 = __int128;

    static Rat from_i128(i128 n, i128 d) {
        if (d == 0) throw Error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi) throw Error("rational overflow");
        Rat r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ == 0) throw Error("rational with zero denominator");
        if (den_ < 0) {
            if (num_ == INT64_MIN || den_ == INT64_MIN) {
                *this = from_i128(i128(num_), i128(den_));
                return;
            }
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long long num_{0};
    long long den_{1};
};

inline Rat Rat::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        size_t used = 0;
        if (slash == std::string::npos) {
            long long n = std::stoll(text, &used);
            if (used != text.size()) throw InputError("trailing characters in rational: " + text);
            return Rat(n);
        }
        long long n = std::stoll(text.substr(0, slash), &used);
        if (used != slash) throw InputError("bad numerator in rational: " + text);
        std::string den_part = text.substr(slash + 1);
        long long d = std::stoll(den_part, &used);
        if (used != den_part.size()) throw InputError("bad denominator in rational: " + text);
        return Rat(n, d);
    } catch (const std::invalid_argument&) {
        throw InputError("cannot parse rational: " + text);
    } catch (const std::out_of_range&) {
        throw InputError("rational out of range: " + text);
    }
}

} // namespace coarse

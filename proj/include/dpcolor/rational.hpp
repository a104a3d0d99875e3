#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "dpcolor/errors.hpp"

namespace dpc {

// Exact rational arithmetic for the charge ledger. Charges stay tiny (denominators from
// halves, quarters, eighths and "evenly" splits), but every operation checks for overflow
// anyway; a rounded or wrapped charge would silently void the audit.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int64_t n) : num_(n), den_(1) {}
    Rational(int64_t n, int64_t d) : num_(n), den_(d) {
        require_internal(d != 0, "rational with zero denominator");
        normalize();
    }

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return Rational(checked(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_),
                        checked(static_cast<__int128>(den_) * o.den_));
    }
    Rational operator-(const Rational& o) const {
        return Rational(checked(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_),
                        checked(static_cast<__int128>(den_) * o.den_));
    }
    Rational operator*(const Rational& o) const {
        return Rational(checked(static_cast<__int128>(num_) * o.num_),
                        checked(static_cast<__int128>(den_) * o.den_));
    }
    Rational operator/(const Rational& o) const {
        require_internal(o.num_ != 0, "rational division by zero");
        return Rational(checked(static_cast<__int128>(num_) * o.den_),
                        checked(static_cast<__int128>(den_) * o.num_));
    }
    Rational operator-() const { return Rational(-num_, den_); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
    }
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    bool negative() const { return num_ < 0; }
    bool zero() const { return num_ == 0; }

    // Serialized as "p/q" in lowest terms; integers drop the "/q".
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    static int64_t checked(__int128 v) {
        require_internal(v <= INT64_MAX && v >= INT64_MIN, "rational overflow");
        return static_cast<int64_t>(v);
    }

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    int64_t num_;
    int64_t den_;
};

} // namespace dpc

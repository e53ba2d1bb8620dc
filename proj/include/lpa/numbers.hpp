#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <utility>

#include "lpa/errors.hpp"

namespace lpa {

// Exact arbitrary-precision rational, the coefficient field (K = Q).
using Rational = mpq_class;
using Integer = mpz_class;

// "num/den" (or plain "num" when den == 1).
std::string to_string(const Rational& q);

// Accepts "num" or "num/den" with an optional leading sign.
Rational parse_rational(const std::string& text);

// Countable cardinal: a nonnegative integer or omega. Omega compares greater
// than every integer.
class ExtendedNat {
public:
    ExtendedNat() : finite_(0) {}
    explicit ExtendedNat(Integer n) : finite_(std::move(n)) {}
    static ExtendedNat omega() {
        ExtendedNat e;
        e.is_omega_ = true;
        return e;
    }

    bool is_omega() const { return is_omega_; }
    const Integer& value() const {
        if (is_omega_) throw Error("ExtendedNat: omega has no finite value");
        return finite_;
    }

    friend bool operator==(const ExtendedNat& a, const ExtendedNat& b) {
        if (a.is_omega_ != b.is_omega_) return false;
        return a.is_omega_ || a.finite_ == b.finite_;
    }
    friend bool operator<(const ExtendedNat& a, const ExtendedNat& b) {
        if (a.is_omega_) return false;
        if (b.is_omega_) return true;
        return a.finite_ < b.finite_;
    }

    std::string str() const { return is_omega_ ? "omega" : finite_.get_str(); }

private:
    Integer finite_;
    bool is_omega_ = false;
};

}  // namespace lpa

/*
   Copyright 2026 The zeq authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ZEQ_RATIONAL_HPP
#define ZEQ_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

#include "zeq/errors.hpp"

namespace zeq {

using Int = mpz_class;

// Exact rational number. mpq_class keeps gcd(num, den) = 1 and den > 0
// canonical at all times.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) fail(errc::division_by_zero, "rational with zero denominator");
        v_.canonicalize();
    }
    Rational(const Int& n, const Int& d) : v_(n, d) {
        if (d == 0) fail(errc::division_by_zero, "rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) {}
    explicit Rational(const std::string& s) : v_(s) { v_.canonicalize(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    Int numerator() const { return v_.get_num(); }
    Int denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) fail(errc::division_by_zero, "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational inverse() const {
        if (is_zero()) fail(errc::division_by_zero, "inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    int sign() const { return sgn(v_); }

    // exact m-th root if one exists in Q (principal sign choice: positive
    // root for even m, sign-matching root for odd m)
    std::optional<Rational> nth_root(unsigned m) const {
        if (m == 0) return std::nullopt;
        if (is_zero()) return Rational(0);
        if (m % 2 == 0 && sign() < 0) return std::nullopt;
        Int n = numerator(), d = denominator();
        Int an = abs(n);
        Int rn, rd;
        if (!mpz_root(rn.get_mpz_t(), an.get_mpz_t(), m)) return std::nullopt;
        if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), m)) return std::nullopt;
        if (sign() < 0) rn = -rn;
        return Rational(rn, rd);
    }

    std::string str() const { return v_.get_str(); }

  private:
    mpq_class v_;
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

}  // namespace zeq

#endif

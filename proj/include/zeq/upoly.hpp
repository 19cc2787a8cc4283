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

#ifndef ZEQ_UPOLY_HPP
#define ZEQ_UPOLY_HPP

#include <vector>

#include "zeq/errors.hpp"

namespace zeq {

// Dense univariate polynomial over a field K, coefficients ascending.
// Kept pruned: no trailing zero (leading) coefficients.
template <class K>
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(const K& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    explicit UPoly(std::vector<K> c) : c_(std::move(c)) { prune(); }

    static UPoly x() { return UPoly(std::vector<K>{K(0), K(1)}); }
    static UPoly monomial(const K& c, std::size_t e) {
        std::vector<K> v(e + 1, K(0));
        v[e] = c;
        return UPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const K& leading() const { return c_.back(); }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
    const std::vector<K>& coeffs() const { return c_; }

    void set_coeff(std::size_t i, const K& v) {
        if (i >= c_.size()) {
            if (v.is_zero()) return;
            c_.resize(i + 1, K(0));
        }
        c_[i] = v;
        prune();
    }

    UPoly operator-() const {
        UPoly r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return UPoly(std::move(r));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return UPoly(std::move(r));
    }
    UPoly operator*(const K& s) const {
        UPoly r(*this);
        for (auto& c : r.c_) c = c * s;
        r.prune();
        return r;
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    K eval(const K& x) const {
        K r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<K> r(c_.size() - 1, K(0));
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * K(static_cast<long>(i));
        return UPoly(std::move(r));
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        return *this * leading().inverse();
    }

    // Euclidean division: *this = q*d + r with deg r < deg d
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        if (d.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
        UPoly r(*this);
        if (r.degree() < d.degree()) return {UPoly(), r};
        std::vector<K> q(r.c_.size() - d.c_.size() + 1, K(0));
        K linv = d.leading().inverse();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            std::size_t shift = r.degree() - d.degree();
            K f = r.leading() * linv;
            q[shift] = f;
            for (std::size_t i = 0; i < d.c_.size(); ++i) {
                r.c_[shift + i] = r.c_[shift + i] - f * d.c_[i];
            }
            r.prune();
        }
        return {UPoly(std::move(q)), r};
    }

    // substitute x -> a*x + b
    UPoly compose_linear(const K& a, const K& b) const {
        UPoly lin(std::vector<K>{b, a});
        UPoly r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + UPoly(*it);
        return r;
    }

  private:
    void prune() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        (void)q;
        a = b;
        b = r;
    }
    return a.monic();
}

// squarefree part f / gcd(f, f') over a field of characteristic 0
template <class K>
UPoly<K> squarefree_part(const UPoly<K>& f) {
    if (f.degree() <= 0) return f;
    auto g = gcd(f, f.derivative());
    if (g.degree() == 0) return f;
    return f.divmod(g).first;
}

}  // namespace zeq

#endif

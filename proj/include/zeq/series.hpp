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

#ifndef ZEQ_SERIES_HPP
#define ZEQ_SERIES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zeq/errors.hpp"
#include "zeq/rational.hpp"
#include "zeq/tower.hpp"

namespace zeq {

// precision sentinel for exact polynomials; half of INT_MAX so sums of two
// precisions cannot overflow
inline constexpr int PREC_INF = INT32_MAX / 2;

inline bool prec_is_inf(int p) { return p >= PREC_INF; }

// Ordered variable list. Weight-1 variables enter the total-degree grading
// that the precision bound cuts off; weight-0 variables are carried exactly
// (polynomially), which is how global parameters like tau are housed.
class VarTable {
  public:
    static std::shared_ptr<const VarTable> make(std::vector<std::string> names,
                                                std::vector<int> weights) {
        auto t = std::make_shared<VarTable>();
        t->names_ = std::move(names);
        t->weights_ = std::move(weights);
        if (t->names_.size() != t->weights_.size())
            fail(errc::internal, "variable/weight length mismatch");
        return t;
    }
    static std::shared_ptr<const VarTable> make(std::vector<std::string> names) {
        std::vector<int> w(names.size(), 1);
        return make(std::move(names), std::move(w));
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    int weight(std::size_t i) const { return weights_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& weights() const { return weights_; }

    int index_of(const std::string& n) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) return static_cast<int>(i);
        return -1;
    }

  private:
    std::vector<std::string> names_;
    std::vector<int> weights_;
};

using VarsPtr = std::shared_ptr<const VarTable>;
using Exp = std::vector<std::uint32_t>;

struct OrderInfo {
    int value = PREC_INF;
    bool at_least = false;  // true: "order >= value" only certified to precision
};

template <class K>
struct coeff_traits;

template <>
struct coeff_traits<Rational> {
    static std::optional<Rational> nth_root(const Rational& c, unsigned m) { return c.nth_root(m); }
    static std::string str(const Rational& c) { return c.str(); }
};

template <>
struct coeff_traits<TowerElem> {
    static std::optional<TowerElem> nth_root(const TowerElem& c, unsigned m) {
        if (c.is_rational()) {
            auto r = c.rational_value().nth_root(m);
            if (r) return TowerElem(*r);
        }
        return std::nullopt;
    }
    static std::string str(const TowerElem& c) { return c.str(); }
};

// Multivariate power series truncated at a weighted total-degree bound.
// Exact coefficients, sparse storage, no zero terms kept. precision ==
// PREC_INF means the value is an exact polynomial.
template <class K>
class Series {
  public:
    using TermMap = std::map<Exp, K>;

    Series() : vars_(VarTable::make({})), prec_(PREC_INF) {}
    explicit Series(VarsPtr vars, int prec = PREC_INF) : vars_(std::move(vars)), prec_(prec) {}

    static Series constant(VarsPtr vars, const K& c, int prec = PREC_INF) {
        Series s(std::move(vars), prec);
        if (!c.is_zero() && prec > 0) s.terms_[Exp(s.vars_->size(), 0)] = c;
        return s;
    }
    static Series variable(VarsPtr vars, const std::string& name, int prec = PREC_INF) {
        Series s(vars, prec);
        int i = vars->index_of(name);
        if (i < 0) fail(errc::internal, "unknown variable " + name);
        Exp e(vars->size(), 0);
        e[i] = 1;
        if (s.wdeg(e) < prec) s.terms_[e] = K(1);
        return s;
    }
    static Series monomial(VarsPtr vars, const Exp& e, const K& c, int prec = PREC_INF) {
        Series s(vars, prec);
        if (!c.is_zero()) {
            if (s.wdeg(e) < prec) s.terms_[e] = c;
        }
        return s;
    }

    const VarsPtr& vars() const { return vars_; }
    int precision() const { return prec_; }
    const TermMap& terms() const { return terms_; }
    bool is_exact() const { return prec_is_inf(prec_); }

    int wdeg(const Exp& e) const {
        int d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<int>(e[i]) * vars_->weight(i);
        return d;
    }

    // zero on every represented term (exact zero when also an exact polynomial)
    bool is_zero() const { return terms_.empty(); }
    bool is_exact_zero() const { return terms_.empty() && is_exact(); }

    K coeff(const Exp& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? K(0) : it->second;
    }
    K constant_term() const { return coeff(Exp(vars_->size(), 0)); }

    // weighted-degree-0 slice (pure weight-0-variable polynomial part)
    Series order0_part() const {
        Series r(vars_, prec_);
        for (const auto& [e, c] : terms_)
            if (wdeg(e) == 0) r.terms_[e] = c;
        return r;
    }

    // the order-0 part when it is a plain constant; nullopt otherwise
    std::optional<K> unit_constant() const {
        K c(0);
        for (const auto& [e, co] : terms_) {
            if (wdeg(e) > 0) continue;
            bool all0 = std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
            if (!all0) return std::nullopt;
            c = co;
        }
        if (c.is_zero()) return std::nullopt;
        return c;
    }

    OrderInfo order() const {
        if (terms_.empty()) return {prec_, !is_exact()};
        int m = PREC_INF;
        for (const auto& [e, c] : terms_) m = std::min(m, wdeg(e));
        return {m, false};
    }

    // minimal exponent of one variable across all terms
    OrderInfo order_in(const std::string& var) const {
        int i = idx(var);
        if (terms_.empty()) return {prec_, !is_exact()};
        int m = INT32_MAX;
        for (const auto& [e, c] : terms_) m = std::min(m, static_cast<int>(e[i]));
        return {m, false};
    }

    int degree_in(const std::string& var) const {
        int i = idx(var);
        int m = -1;
        for (const auto& [e, c] : terms_) m = std::max(m, static_cast<int>(e[i]));
        return m;
    }

    // total degree across weight-1 variables (for exact polynomials)
    int total_degree() const {
        int m = -1;
        for (const auto& [e, c] : terms_) m = std::max(m, wdeg(e));
        return m;
    }

    Series truncate(int new_prec) const {
        if (new_prec >= prec_) return *this;
        Series r(vars_, new_prec);
        for (const auto& [e, c] : terms_)
            if (wdeg(e) < new_prec) r.terms_[e] = c;
        return r;
    }

    Series with_precision_at_most(int p) const { return truncate(std::min(prec_, p)); }

    Series operator-() const {
        Series r(*this);
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend Series operator+(const Series& a, const Series& b) {
        auto [x, y] = aligned(a, b);
        Series r(x.vars_, std::min(x.prec_, y.prec_));
        r.terms_ = x.terms_;
        for (const auto& [e, c] : y.terms_) {
            auto it = r.terms_.find(e);
            if (it == r.terms_.end())
                r.terms_[e] = c;
            else {
                it->second = it->second + c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        r.chop();
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

    friend Series operator*(const Series& a, const Series& b) {
        auto [x, y] = aligned(a, b);
        int prec = std::min(x.prec_, y.prec_);
        // unknown tails enter products shifted by the other factor's order
        if (!prec_is_inf(prec)) {
            int ox = x.order().value, oy = y.order().value;
            int px = prec_is_inf(x.prec_) ? PREC_INF : x.prec_ + oy;
            int py = prec_is_inf(y.prec_) ? PREC_INF : y.prec_ + ox;
            prec = std::min(px, py);
        }
        Series r(x.vars_, prec);
        for (const auto& [ea, ca] : x.terms_) {
            int da = x.wdeg(ea);
            for (const auto& [eb, cb] : y.terms_) {
                if (!prec_is_inf(prec) && da + y.wdeg(eb) >= prec) continue;
                Exp e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                K p = ca * cb;
                if (p.is_zero()) continue;
                auto it = r.terms_.find(e);
                if (it == r.terms_.end())
                    r.terms_[e] = p;
                else {
                    it->second = it->second + p;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        }
        return r;
    }

    Series operator*(const K& s) const {
        if (s.is_zero()) return Series(vars_, prec_);
        Series r(vars_, prec_);
        for (const auto& [e, c] : terms_) {
            K p = c * s;
            if (!p.is_zero()) r.terms_[e] = p;
        }
        return r;
    }

    // equality of every represented term below the common precision
    friend bool equal_mod_precision(const Series& a, const Series& b) {
        Series d = a - b;
        return d.is_zero();
    }
    friend bool operator==(const Series& a, const Series& b) {
        auto [x, y] = aligned(a, b);
        return x.prec_ == y.prec_ && x.terms_ == y.terms_;
    }

    Series derive(const std::string& var) const {
        int i = idx(var);
        // d/dx maps certified degree < N to certified degree < N-1
        Series r(vars_, is_exact() ? PREC_INF : prec_ - vars_->weight(i));
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exp d(e);
            d[i] -= 1;
            K nc = c * K(static_cast<long>(e[i]));
            if (!nc.is_zero()) r.terms_[d] = nc;
        }
        r.chop();
        return r;
    }

    Series mul_monomial(const std::string& var, unsigned k) const {
        int i = idx(var);
        Series r(vars_, is_exact() ? PREC_INF : prec_ + k * vars_->weight(i));
        for (const auto& [e, c] : terms_) {
            Exp d(e);
            d[i] += k;
            r.terms_[d] = c;
        }
        return r;
    }

    // exact division by var^k; fails unless every term is divisible
    Series div_monomial(const std::string& var, unsigned k) const {
        int i = idx(var);
        int shift = static_cast<int>(k) * vars_->weight(i);
        Series r(vars_, is_exact() ? PREC_INF : prec_ - shift);
        for (const auto& [e, c] : terms_) {
            if (e[i] < k) fail(errc::divisibility_failure, "term not divisible by " + var);
            Exp d(e);
            d[i] -= k;
            r.terms_[d] = c;
        }
        return r;
    }

    // coefficient of var^k, as a series over the same table with that slot zeroed
    Series coeff_of(const std::string& var, unsigned k) const {
        int i = idx(var);
        int shift = static_cast<int>(k) * vars_->weight(i);
        Series r(vars_, is_exact() ? PREC_INF : prec_ - shift);
        for (const auto& [e, c] : terms_) {
            if (e[i] != k) continue;
            Exp d(e);
            d[i] = 0;
            r.terms_[d] = c;
        }
        r.chop();
        return r;
    }

    // slice of terms whose total exponent over `block` equals m
    Series block_degree_part(const std::vector<std::string>& block, int m) const {
        std::vector<int> ids;
        for (const auto& v : block) ids.push_back(idx(v));
        Series r(vars_, prec_);
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (int i : ids) d += e[i];
            if (d == m) r.terms_[e] = c;
        }
        return r;
    }

    int max_block_degree(const std::vector<std::string>& block) const {
        std::vector<int> ids;
        for (const auto& v : block) ids.push_back(idx(v));
        int m = -1;
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (int i : ids) d += e[i];
            m = std::max(m, d);
        }
        return m;
    }

    // weighted-homogeneous slice
    Series homogeneous_part(int d) const {
        Series r(vars_, prec_);
        for (const auto& [e, c] : terms_)
            if (wdeg(e) == d) r.terms_[e] = c;
        return r;
    }

    // substitute an exact rational value for one variable. Exact on weight-0
    // variables and on exact polynomials; otherwise only value 0 keeps the
    // truncation sound.
    Series subs_value(const std::string& var, const K& value) const {
        int i = idx(var);
        if (!value.is_zero() && !is_exact() && vars_->weight(i) != 0)
            fail(errc::precision_exhausted,
                 "nonzero specialization of a truncated series variable " + var);
        Series r(vars_, prec_);
        for (const auto& [e, c] : terms_) {
            K f = c;
            for (std::uint32_t k = 0; k < e[i]; ++k) f = f * value;
            if (f.is_zero()) continue;
            Exp d(e);
            d[i] = 0;
            auto it = r.terms_.find(d);
            if (it == r.terms_.end())
                r.terms_[d] = f;
            else {
                it->second = it->second + f;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        return r;
    }

    // substitute var -> var^k (ramification)
    Series subs_power(const std::string& var, unsigned k) const {
        int i = idx(var);
        // order-1 terms move to order k; certified bound scales conservatively
        int p = is_exact() ? PREC_INF : prec_;
        Series r(vars_, p);
        for (const auto& [e, c] : terms_) {
            Exp d(e);
            d[i] *= k;
            if (!prec_is_inf(p) && r.wdeg(d) >= p) continue;
            r.terms_[d] = c;
        }
        return r;
    }

    // substitute var -> var * m(other vars); m must not involve var
    Series rescale(const std::string& var, const Series& m) const {
        int i = idx(var);
        if (m.degree_in(var) > 0) fail(errc::internal, "rescale factor involves the variable");
        int dmax = degree_in(var);
        Series r(vars_, prec_);
        Series mp = constant(vars_, K(1));
        for (int k = 0; k <= dmax; ++k) {
            Series ck = coeff_of(var, k);
            if (!ck.is_zero()) {
                Series part = ck * mp;
                r = r + part.mul_monomial(var, k);
            }
            if (k < dmax) mp = mp * m;
        }
        if (!is_exact() || !m.is_exact()) r = r.truncate(std::min(prec_, m.prec_));
        return r;
    }

    struct SubsRule {
        std::string var;
        Series value;
        bool allow_constant = false;  // declared parameter shift
    };

    // simultaneous substitution; a right-hand side may not involve any
    // substituted variable (unless that variable maps identically to itself)
    Series subs(const std::vector<SubsRule>& rules) const {
        std::vector<SubsRule> active;
        for (const auto& r : rules) {
            if (is_identity_rule(r)) continue;
            active.push_back(r);
        }
        for (const auto& r : active) {
            for (const auto& q : active) {
                if (q.value.vars_->index_of(r.var) >= 0 && q.value.degree_in(r.var) > 0)
                    fail(errc::internal, "substitution rules are not simultaneous-safe: " + r.var);
            }
            if (!r.allow_constant && !r.value.constant_term().is_zero())
                fail(errc::internal,
                     "substituted series for " + r.var + " has a nonzero constant term");
            if (!r.allow_constant && !r.value.order0_part().is_zero() && r.value.order().value == 0)
                fail(errc::internal, "substituted series for " + r.var + " has weighted order 0");
        }
        Series cur = *this;
        for (const auto& r : active) cur = cur.subs_one(r);
        return cur;
    }

    // inversion of a unit to the stated precision
    Series invert_unit(int N) const {
        auto c = unit_constant();
        if (!c) fail(errc::not_a_unit, "series has no invertible constant term");
        int prec = std::min(N, prec_);
        K cinv = c->inverse();
        Series f = truncate(prec);
        Series one = constant(vars_, K(1), prec);
        Series r = one - f * cinv;  // weighted order >= 1
        Series acc = one, pw = one;
        for (int k = 1; k < prec; ++k) {
            pw = pw * r;
            if (pw.is_zero()) break;
            acc = acc + pw;
        }
        return acc * cinv;
    }

    // deterministic m-th root of a unit (principal rational root of the
    // constant term); Newton iteration on g^m = f
    Series unit_root(unsigned m, int N) const {
        auto c = unit_constant();
        if (!c) fail(errc::not_a_unit, "series has no invertible constant term");
        auto root = coeff_traits<K>::nth_root(*c, m);
        if (!root)
            fail(errc::no_exact_root, "constant term has no m-th root in the coefficient field");
        int prec = std::min(N, prec_);
        Series f = truncate(prec);
        Series g = constant(vars_, *root, prec);
        K minv = K(static_cast<long>(m)).inverse();
        while (true) {
            Series gm1 = constant(vars_, K(1), prec);
            for (unsigned i = 0; i + 1 < m; ++i) gm1 = gm1 * g;
            Series err = gm1 * g - f;
            if (err.is_zero()) break;
            Series corr = err * gm1.invert_unit(prec) * minv;
            g = g - corr;
        }
        return g;
    }

    // map coefficients into another field
    template <class L, class F>
    Series<L> map_coeffs(F&& fn) const {
        Series<L> r(vars_, prec_);
        for (const auto& [e, c] : terms_) {
            L nc = fn(c);
            if (!nc.is_zero()) r.terms_ref()[e] = nc;
        }
        return r;
    }

    TermMap& terms_ref() { return terms_; }

    // align two series onto a merged variable table
    static std::pair<Series, Series> aligned(const Series& a, const Series& b) {
        if (a.vars_ == b.vars_) return {a, b};
        if (a.vars_->names() == b.vars_->names() && a.vars_->weights() == b.vars_->weights()) {
            Series bb = b;
            bb.vars_ = a.vars_;
            return {a, bb};
        }
        std::vector<std::string> names = a.vars_->names();
        std::vector<int> weights = a.vars_->weights();
        for (std::size_t i = 0; i < b.vars_->size(); ++i) {
            if (a.vars_->index_of(b.vars_->name(i)) < 0) {
                names.push_back(b.vars_->name(i));
                weights.push_back(b.vars_->weight(i));
            } else {
                int j = a.vars_->index_of(b.vars_->name(i));
                if (a.vars_->weight(j) != b.vars_->weight(i))
                    fail(errc::incompatible_domains, "variable weight mismatch: " + b.vars_->name(i));
            }
        }
        VarsPtr merged = VarTable::make(std::move(names), std::move(weights));
        return {a.remap(merged), b.remap(merged)};
    }

    Series remap(const VarsPtr& target) const {
        std::vector<int> where(vars_->size());
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            int j = target->index_of(vars_->name(i));
            if (j < 0) fail(errc::internal, "remap drops variable " + vars_->name(i));
            where[i] = j;
        }
        Series r(target, prec_);
        for (const auto& [e, c] : terms_) {
            Exp d(target->size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) d[where[i]] = e[i];
            r.terms_[d] = c;
        }
        return r;
    }

    std::string str() const;  // rendering lives in io.hpp

  private:
    int idx(const std::string& var) const {
        int i = vars_->index_of(var);
        if (i < 0) fail(errc::internal, "unknown variable " + var);
        return i;
    }

    bool is_identity_rule(const SubsRule& r) const {
        if (r.value.terms_.size() != 1) return false;
        const auto& [e, c] = *r.value.terms_.begin();
        if (!(c == K(1))) return false;
        int j = r.value.vars_->index_of(r.var);
        if (j < 0) return false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (static_cast<int>(i) == j ? e[i] != 1 : e[i] != 0) return false;
        }
        return true;
    }

    Series subs_one(const SubsRule& rule) const {
        int i = idx(rule.var);
        int dmax = degree_in(rule.var);
        auto [self_al, val_al] = aligned(*this, rule.value);
        // Horner in the substituted variable
        Series r(self_al.vars_, PREC_INF);
        for (int k = dmax; k >= 0; --k) {
            Series ck = self_al.coeff_of(rule.var, k);
            r = r * val_al + ck;
        }
        int prec = std::min(prec_, dmax > 0 ? rule.value.prec_ : PREC_INF);
        (void)i;
        return r.truncate(prec);
    }

    void chop() {
        if (prec_is_inf(prec_)) return;
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (wdeg(it->first) >= prec_)
                it = terms_.erase(it);
            else
                ++it;
        }
    }

    VarsPtr vars_;
    TermMap terms_;
    int prec_;

    template <class L>
    friend class Series;
};

using QSeries = Series<Rational>;
using TSeries = Series<TowerElem>;

inline TSeries to_tower_series(const QSeries& s) {
    return s.map_coeffs<TowerElem>([](const Rational& c) { return TowerElem(c); });
}

// exact division f / g; fails when the quotient does not exist on the
// represented terms. Degree-graded elimination against the lowest
// homogeneous part of g.
template <class K>
Series<K> divide_exact(const Series<K>& f, const Series<K>& g) {
    if (g.is_zero()) fail(errc::division_by_zero, "series division by zero");
    auto [a, b] = Series<K>::aligned(f, g);
    int m = b.order().value;
    int bound = std::min(a.precision(), b.precision());
    int qprec = prec_is_inf(bound) ? PREC_INF : bound - m;
    Series<K> gm = b.homogeneous_part(m);
    Series<K> q(a.vars(), qprec);
    Series<K> r = a;
    while (!r.is_zero()) {
        OrderInfo o = r.order();
        if (o.at_least) break;
        if (!prec_is_inf(qprec) && o.value - m >= qprec) break;
        Series<K> h = r.homogeneous_part(o.value);
        // divide h by gm monomial-by-monomial (single-divisor division)
        Series<K> qp(a.vars(), PREC_INF);
        Series<K> hh = h;
        const auto& ltg = *gm.terms().rbegin();
        while (!hh.is_zero()) {
            const auto& lth = *hh.terms().rbegin();
            Exp d(lth.first);
            bool div = true;
            for (std::size_t i = 0; i < d.size(); ++i) {
                if (d[i] < ltg.first[i]) {
                    div = false;
                    break;
                }
                d[i] -= ltg.first[i];
            }
            if (!div) fail(errc::divisibility_failure, "inexact series division");
            K c = lth.second * ltg.second.inverse();
            Series<K> t = Series<K>::monomial(a.vars(), d, c);
            qp = qp + t;
            hh = hh - t * gm;
        }
        q = q + qp;
        r = r - qp * b;
        if (!r.is_zero() && r.order().value <= o.value)
            fail(errc::internal, "series division failed to reduce order");
    }
    if (!r.is_zero() && r.order().value < bound)
        fail(errc::divisibility_failure, "inexact series division (nonzero remainder)");
    return q.truncate(qprec);
}

}  // namespace zeq

#endif

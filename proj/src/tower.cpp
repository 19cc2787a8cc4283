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

#include "zeq/tower.hpp"

#include <algorithm>

#include "zeq/zfactor.hpp"

namespace zeq {

// ---- TowerElem ----------------------------------------------------------

TowerElem::TowerElem(TowerPtr tower, std::vector<TowerElem> coords)
    : tower_(std::move(tower)), base_(0), coords_(std::move(coords)) {
    while (!coords_.empty() && coords_.back().is_zero()) coords_.pop_back();
    if (!tower_) fail(errc::internal, "tower element above ground needs a tower");
}

int tower_depth(const TowerPtr& t) { return t ? t->depth() : 0; }

int TowerElem::level() const { return tower_depth(tower_); }

bool TowerElem::is_zero() const {
    if (!tower_) return base_.is_zero();
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

bool TowerElem::is_rational() const {
    if (!tower_) return true;
    if (coords_.empty()) return true;
    if (coords_.size() > 1) return false;
    return coords_[0].is_rational();
}

Rational TowerElem::rational_value() const {
    if (!tower_) return base_;
    if (coords_.empty()) return Rational(0);
    if (coords_.size() > 1) fail(errc::internal, "element is not rational");
    return coords_[0].rational_value();
}

bool tower_is_prefix(const TowerPtr& prefix, const TowerPtr& of) {
    TowerPtr t = of;
    while (true) {
        if (t == prefix) return true;
        if (!t) return false;
        t = t->parent();
    }
}

TowerPtr tower_join(const TowerPtr& a, const TowerPtr& b) {
    if (tower_is_prefix(a, b)) return b;
    if (tower_is_prefix(b, a)) return a;
    fail(errc::incompatible_domains, "elements live in unrelated towers");
}

TowerElem TowerElem::promote(const TowerPtr& target) const {
    if (tower_ == target) return *this;
    if (!tower_is_prefix(tower_, target))
        fail(errc::incompatible_domains, "cannot embed element into unrelated tower");
    TowerElem below = target->parent() == tower_ ? *this : promote(target->parent());
    std::vector<TowerElem> coords;
    if (!below.is_zero()) coords.push_back(below);
    return TowerElem(target, std::move(coords));
}

namespace {

// run a binary operation after aligning both operands to a common tower
template <class F>
TowerElem zip(const TowerElem& a, const TowerElem& b, F&& op) {
    TowerPtr t = tower_join(a.tower(), b.tower());
    TowerElem pa = a.promote(t), pb = b.promote(t);
    return op(t, pa, pb);
}

}  // namespace

TowerElem TowerElem::operator-() const {
    if (!tower_) return TowerElem(-base_);
    std::vector<TowerElem> c(coords_);
    for (auto& x : c) x = -x;
    return TowerElem(tower_, std::move(c));
}

TowerElem operator+(const TowerElem& a, const TowerElem& b) {
    return zip(a, b, [](const TowerPtr& t, const TowerElem& x, const TowerElem& y) {
        if (!t) return TowerElem(x.base() + y.base());
        std::vector<TowerElem> c(std::max(x.coords().size(), y.coords().size()), TowerElem());
        for (std::size_t i = 0; i < c.size(); ++i) {
            TowerElem xi = i < x.coords().size() ? x.coords()[i] : TowerElem();
            TowerElem yi = i < y.coords().size() ? y.coords()[i] : TowerElem();
            c[i] = xi + yi;
        }
        return TowerElem(t, std::move(c));
    });
}

TowerElem operator-(const TowerElem& a, const TowerElem& b) { return a + (-b); }

TowerElem operator*(const TowerElem& a, const TowerElem& b) {
    return zip(a, b, [](const TowerPtr& t, const TowerElem& x, const TowerElem& y) {
        if (!t) return TowerElem(x.base() * y.base());
        UPoly<TowerElem> px(x.coords()), py(y.coords());
        auto prod = (px * py).divmod(t->minpoly()).second;
        return TowerElem(t, prod.coeffs());
    });
}

bool operator==(const TowerElem& a, const TowerElem& b) { return (a - b).is_zero(); }

TowerElem TowerElem::inverse() const {
    if (is_zero()) fail(errc::division_by_zero, "inverse of zero tower element");
    if (!tower_) return TowerElem(base_.inverse());
    // extended euclid against the minimal polynomial
    UPoly<TowerElem> a = tower_->minpoly();
    UPoly<TowerElem> b(coords_);
    UPoly<TowerElem> ua, ub(std::vector<TowerElem>{TowerElem(1)});
    while (true) {
        auto [q, r] = a.divmod(b);
        if (r.is_zero()) break;
        UPoly<TowerElem> un = ua - q * ub;
        a = b;
        b = r;
        ua = ub;
        ub = un;
    }
    // b is a gcd; irreducibility of the minpoly makes it a nonzero constant
    if (b.degree() != 0) fail(errc::internal, "non-invertible element: reducible minimal polynomial");
    UPoly<TowerElem> inv = ub * b.coeff(0).inverse();
    auto red = inv.divmod(tower_->minpoly()).second;
    return TowerElem(tower_, red.coeffs());
}

int compare(const TowerElem& a, const TowerElem& b) {
    TowerPtr t = tower_join(a.tower(), b.tower());
    TowerElem x = a.promote(t), y = b.promote(t);
    if (!t) {
        if (x.base() < y.base()) return -1;
        if (y.base() < x.base()) return 1;
        return 0;
    }
    std::size_t n = std::max(x.coords().size(), y.coords().size());
    for (std::size_t i = 0; i < n; ++i) {
        TowerElem xi = i < x.coords().size() ? x.coords()[i] : TowerElem();
        TowerElem yi = i < y.coords().size() ? y.coords()[i] : TowerElem();
        int c = compare(xi, yi);
        if (c != 0) return c;
    }
    return 0;
}

std::string TowerElem::str() const {
    if (!tower_) return base_.str();
    if (coords_.empty()) return "0";
    std::string out;
    for (std::size_t i = coords_.size(); i-- > 0;) {
        if (coords_[i].is_zero()) continue;
        std::string c = coords_[i].str();
        bool needs_paren = c.find_first_of("+-") != std::string::npos && c.rfind('-', 0) != 0;
        if (c.find_first_of("+-", 1) != std::string::npos) needs_paren = true;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += c;
            continue;
        }
        std::string mono = tower_->gen_name();
        if (i > 1) mono += "^" + std::to_string(i);
        if (c == "1") {
            out += mono;
        } else if (c == "-1") {
            out += "-" + mono;
        } else {
            out += (needs_paren ? "(" + c + ")" : c) + "*" + mono;
        }
    }
    return out.empty() ? "0" : out;
}

// ---- Tower --------------------------------------------------------------

TowerPtr Tower::extend(TowerPtr parent, std::string gen_name, UPoly<TowerElem> minpoly) {
    auto t = std::shared_ptr<Tower>(new Tower());
    t->parent_ = std::move(parent);
    t->gen_name_ = std::move(gen_name);
    t->minpoly_ = std::move(minpoly);
    t->depth_ = tower_depth(t->parent_) + 1;
    return t;
}

TowerElem Tower::generator() const {
    std::vector<TowerElem> c{TowerElem(0), TowerElem(1)};
    return TowerElem(shared_from_this(), std::move(c));
}

std::vector<std::string> tower_generator_names(const TowerPtr& t) {
    std::vector<std::string> names;
    for (TowerPtr p = t; p; p = p->parent()) names.push_back(p->gen_name());
    std::reverse(names.begin(), names.end());
    return names;
}

// ---- factorization over the tower (Trager) -------------------------------

namespace {

UPoly<Rational> to_qpoly(const UPoly<TowerElem>& f) {
    std::vector<Rational> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!f.coeffs()[i].is_rational()) fail(errc::internal, "expected rational coefficients");
        c[i] = f.coeffs()[i].rational_value();
    }
    return UPoly<Rational>(std::move(c));
}

UPoly<TowerElem> from_qpoly(const UPoly<Rational>& f) {
    std::vector<TowerElem> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = TowerElem(f.coeffs()[i]);
    return UPoly<TowerElem>(std::move(c));
}

// entries are polynomials over the field `parent`; fraction-free gaussian
// elimination with exact divisions
UPoly<TowerElem> det_bareiss(std::vector<std::vector<UPoly<TowerElem>>> m) {
    std::size_t n = m.size();
    if (n == 0) return UPoly<TowerElem>(TowerElem(1));
    UPoly<TowerElem> prev(TowerElem(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return UPoly<TowerElem>();
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                auto num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto [q, r] = num.divmod(prev);
                if (!r.is_zero()) fail(errc::internal, "inexact division in fraction-free elimination");
                m[i][j] = q;
            }
            m[i][k] = UPoly<TowerElem>();
        }
        prev = m[k][k];
    }
    auto det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

// resultant in gamma of the minpoly m(gamma) and g = sum_i c_i(x) gamma^i
UPoly<TowerElem> norm_resultant(const UPoly<TowerElem>& minpoly,
                                const std::vector<UPoly<TowerElem>>& g_coeffs) {
    int dm = minpoly.degree();
    int dg = static_cast<int>(g_coeffs.size()) - 1;
    while (dg >= 0 && g_coeffs[dg].is_zero()) --dg;
    if (dg < 0) return UPoly<TowerElem>();
    std::size_t n = dm + dg;
    std::vector<std::vector<UPoly<TowerElem>>> syl(n, std::vector<UPoly<TowerElem>>(n));
    for (int r = 0; r < dg; ++r)
        for (int i = 0; i <= dm; ++i) syl[r][r + dm - i] = UPoly<TowerElem>(minpoly.coeff(i));
    for (int r = 0; r < dm; ++r)
        for (int i = 0; i <= dg; ++i) syl[dg + r][r + dg - i] = g_coeffs[i];
    return det_bareiss(std::move(syl));
}

// decompose an element of the tower into a polynomial in the top generator
// with coefficients one level down
std::vector<TowerElem> top_coords(const TowerPtr& t, const TowerElem& e) {
    TowerElem p = e.promote(t);
    if (!t) return {p};
    return p.coords();
}

std::vector<UPoly<TowerElem>> factor_squarefree_over_tower(const TowerPtr& tower,
                                                           const UPoly<TowerElem>& f);

// deterministic order: degree first, then coefficient sequence from the top
bool tower_poly_less(const UPoly<TowerElem>& a, const UPoly<TowerElem>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        int c = compare(a.coeff(i), b.coeff(i));
        if (c != 0) return c < 0;
    }
    return false;
}

std::vector<UPoly<TowerElem>> factor_squarefree_over_tower(const TowerPtr& tower,
                                                           const UPoly<TowerElem>& f) {
    if (f.degree() <= 1) return {f};
    if (!tower) {
        auto qf = factor_rational_poly(to_qpoly(f));
        std::vector<UPoly<TowerElem>> out;
        for (auto& x : qf) out.push_back(from_qpoly(x.poly));
        return out;
    }
    const auto& mp = tower->minpoly();
    TowerElem gamma = tower->generator();
    for (long s = 0;; ++s) {
        // g(x) = f(x - s*gamma), viewed as a polynomial in gamma with
        // coefficients in (parent tower)[x]
        UPoly<TowerElem> g = f.compose_linear(TowerElem(1), TowerElem(-s) * gamma);
        std::vector<UPoly<TowerElem>> g_by_gamma(mp.degree());
        for (int xi = 0; xi <= g.degree(); ++xi) {
            auto cs = top_coords(tower, g.coeff(xi));
            for (std::size_t gi = 0; gi < cs.size(); ++gi) {
                if (static_cast<int>(gi) >= mp.degree()) fail(errc::internal, "unreduced tower element");
                g_by_gamma[gi].set_coeff(xi, cs[gi]);
            }
        }
        // lower the minpoly coefficients one level as degree-0 polynomials
        UPoly<TowerElem> mp_low;
        std::vector<TowerElem> mp_c(mp.coeffs().size());
        for (std::size_t i = 0; i < mp_c.size(); ++i) {
            auto cs = top_coords(tower, mp.coeff(i));
            if (cs.size() > 1) fail(errc::internal, "minpoly coefficient above its level");
            mp_c[i] = cs.empty() ? TowerElem(0) : cs[0];
        }
        mp_low = UPoly<TowerElem>(std::move(mp_c));
        UPoly<TowerElem> norm = norm_resultant(mp_low, g_by_gamma);
        if (norm.degree() != f.degree() * mp.degree()) continue;  // degenerate shift
        if (gcd(norm, norm.derivative()).degree() != 0) continue; // norm not squarefree
        auto norm_factors = factor_squarefree_over_tower(tower->parent(), norm.monic());
        std::vector<UPoly<TowerElem>> out;
        for (auto& nf : norm_factors) {
            // lift back: gcd over the full tower of f(x) and nf(x + s*gamma)
            UPoly<TowerElem> shifted = nf.compose_linear(TowerElem(1), TowerElem(s) * gamma);
            auto h = gcd(f, shifted);
            if (h.degree() >= 1) out.push_back(h.monic());
        }
        int total = 0;
        for (auto& h : out) total += h.degree();
        if (total != f.degree()) fail(errc::internal, "norm factorization lost a factor");
        return out;
    }
}

}  // namespace

std::vector<TowerFactor> factor_over_tower(const TowerPtr& tower, const UPoly<TowerElem>& f) {
    if (f.degree() < 1) fail(errc::internal, "factoring a constant over the tower");
    UPoly<TowerElem> g = f.monic();
    std::vector<TowerFactor> out;
    // Yun squarefree decomposition (characteristic 0)
    auto gp = g.derivative();
    auto a = gcd(g, gp);
    auto b = g.divmod(a).first;
    auto c = gp.divmod(a).first;
    auto d = c - b.derivative();
    int mult = 1;
    while (b.degree() > 0) {
        auto ai = gcd(b, d);
        if (ai.degree() > 0) {
            for (auto& irr : factor_squarefree_over_tower(tower, ai.monic()))
                out.push_back({irr.monic(), mult});
        }
        b = b.divmod(ai).first;
        c = d.divmod(ai).first;
        d = c - b.derivative();
        ++mult;
    }
    std::sort(out.begin(), out.end(),
              [](const TowerFactor& x, const TowerFactor& y) { return tower_poly_less(x.poly, y.poly); });
    return out;
}

Adjoined adjoin(const TowerPtr& tower, const UPoly<TowerElem>& minpoly, const std::string& gen_name) {
    if (minpoly.degree() < 1 || !(minpoly.leading() == TowerElem(1)))
        fail(errc::not_monic, "adjoin requires a monic polynomial of degree >= 1");
    auto factors = factor_over_tower(tower, minpoly);
    const auto& chosen = factors.front().poly;
    Adjoined res;
    res.was_reducible = factors.size() > 1 || factors.front().multiplicity > 1 ||
                        chosen.degree() < minpoly.degree();
    res.factor = chosen;
    if (chosen.degree() == 1) {
        res.tower = tower;
        res.root = -chosen.coeff(0);
        return res;
    }
    res.tower = Tower::extend(tower, gen_name, chosen);
    res.root = res.tower->generator();
    return res;
}

RootList all_roots(const TowerPtr& tower, const UPoly<TowerElem>& f, const std::string& name_hint) {
    RootList rl;
    rl.tower = tower;
    UPoly<TowerElem> g = f.monic();
    int adjoin_count = 0;
    while (true) {
        auto factors = factor_over_tower(rl.tower, g);
        bool all_linear = true;
        for (auto& fa : factors)
            if (fa.poly.degree() > 1) all_linear = false;
        if (all_linear) {
            rl.roots.clear();
            for (auto& fa : factors) rl.roots.push_back({-fa.poly.coeff(0), fa.multiplicity});
            return rl;
        }
        // adjoin a root of the first nonlinear factor, then refactor everything
        for (auto& fa : factors) {
            if (fa.poly.degree() > 1) {
                std::string nm = name_hint + (adjoin_count ? std::to_string(adjoin_count) : "");
                ++adjoin_count;
                rl.tower = Tower::extend(rl.tower, nm, fa.poly);
                break;
            }
        }
    }
}

std::pair<TowerPtr, TowerElem> nth_root_elem(const TowerPtr& tower, const TowerElem& c, unsigned m) {
    if (c.is_zero()) fail(errc::not_a_unit, "m-th root of zero");
    if (m == 1) return {tower, c};
    std::vector<TowerElem> coeffs(m + 1, TowerElem(0));
    coeffs[0] = -c;
    coeffs[m] = TowerElem(1);
    auto adj = adjoin(tower, UPoly<TowerElem>(std::move(coeffs)), "r" + std::to_string(m));
    return {adj.tower, adj.root};
}

std::vector<std::pair<std::string, std::string>> tower_description(const TowerPtr& t) {
    std::vector<std::pair<std::string, std::string>> out;
    for (TowerPtr p = t; p; p = p->parent()) {
        std::string mp;
        for (int i = p->minpoly().degree(); i >= 0; --i) {
            if (p->minpoly().coeff(i).is_zero()) continue;
            if (!mp.empty()) mp += " + ";
            std::string c = p->minpoly().coeff(i).str();
            if (i == 0)
                mp += c;
            else if (c == "1")
                mp += p->gen_name() + (i > 1 ? "^" + std::to_string(i) : "");
            else
                mp += "(" + c + ")*" + p->gen_name() + (i > 1 ? "^" + std::to_string(i) : "");
        }
        out.push_back({p->gen_name(), mp});
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace zeq

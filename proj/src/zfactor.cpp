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

#include "zeq/zfactor.hpp"

#include <algorithm>
#include <cstdint>

namespace zeq {
namespace {

using ZPoly = std::vector<Int>;  // dense, ascending, pruned

int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

void zprune(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// exact division by a monic divisor; returns empty optional-style flag via ok
bool zdivmod_monic(const ZPoly& f, const ZPoly& d, ZPoly& q, ZPoly& r) {
    r = f;
    q.assign(f.size() >= d.size() ? f.size() - d.size() + 1 : 0, Int(0));
    while (zdeg(r) >= zdeg(d)) {
        std::size_t shift = zdeg(r) - zdeg(d);
        Int c = r.back();
        q[shift] = c;
        for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= c * d[i];
        zprune(r);
    }
    return true;
}

Int zcontent(const ZPoly& f) {
    Int g(0);
    for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly zprimitive(const ZPoly& f) {
    Int c = zcontent(f);
    if (c == 0) return f;
    if (sgn(f.back()) < 0) c = -c;
    ZPoly r(f);
    for (auto& x : r) x /= c;
    return r;
}

// ---- arithmetic mod a small prime -------------------------------------

using FpPoly = std::vector<std::uint64_t>;

struct Fp {
    std::uint64_t p;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const { return pow(a % p, p - 2); }
};

void fprune(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int fdeg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly fmul(const Fp& F, const FpPoly& a, const FpPoly& b) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    fprune(r);
    return r;
}

FpPoly fsub(const Fp& F, const FpPoly& a, const FpPoly& b) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    fprune(r);
    return r;
}

FpPoly fscale(const Fp& F, const FpPoly& a, std::uint64_t s) {
    FpPoly r(a);
    for (auto& c : r) c = F.mul(c, s);
    fprune(r);
    return r;
}

void fdivmod(const Fp& F, const FpPoly& f, const FpPoly& d, FpPoly& q, FpPoly& r) {
    r = f;
    fprune(r);
    q.clear();
    if (fdeg(r) >= fdeg(d)) q.assign(r.size() - d.size() + 1, 0);
    std::uint64_t linv = F.inv(d.back());
    while (fdeg(r) >= fdeg(d)) {
        std::size_t shift = fdeg(r) - fdeg(d);
        std::uint64_t c = F.mul(r.back(), linv);
        q[shift] = c;
        for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] = F.sub(r[shift + i], F.mul(c, d[i]));
        fprune(r);
    }
}

FpPoly fmod(const Fp& F, const FpPoly& f, const FpPoly& d) {
    FpPoly q, r;
    fdivmod(F, f, d, q, r);
    return r;
}

FpPoly fmonic(const Fp& F, const FpPoly& f) {
    if (f.empty()) return f;
    return fscale(F, f, F.inv(f.back()));
}

FpPoly fgcd(const Fp& F, FpPoly a, FpPoly b) {
    while (!b.empty()) {
        FpPoly r = fmod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fmonic(F, a);
}

FpPoly fderiv(const Fp& F, const FpPoly& f) {
    if (f.size() <= 1) return {};
    FpPoly r(f.size() - 1, 0);
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = F.mul(f[i], i % F.p);
    fprune(r);
    return r;
}

// x^p mod f by square and multiply on exponent bits
FpPoly fxpow(const Fp& F, std::uint64_t e, const FpPoly& f) {
    FpPoly base{0, 1}, r{1};
    while (e) {
        if (e & 1) r = fmod(F, fmul(F, r, base), f);
        base = fmod(F, fmul(F, base, base), f);
        e >>= 1;
    }
    return r;
}

// Berlekamp over F_p, deterministic splitting (p is small). f monic squarefree.
std::vector<FpPoly> berlekamp(const Fp& F, const FpPoly& f) {
    int d = fdeg(f);
    if (d <= 1) return {f};
    // rows of Q: x^{p*i} mod f
    std::vector<FpPoly> rows(d);
    FpPoly xp = fxpow(F, F.p, f);
    rows[0] = FpPoly{1};
    for (int i = 1; i < d; ++i) rows[i] = fmod(F, fmul(F, rows[i - 1], xp), f);
    // kernel of (Q - I)^T: v s.t. sum_i v_i (row_i - e_i) = 0
    std::vector<std::vector<std::uint64_t>> m(d, std::vector<std::uint64_t>(d, 0));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j)
            m[j][i] = F.sub(j < static_cast<int>(rows[i].size()) ? rows[i][j] : 0, i == j ? 1 : 0);
    }
    // gaussian elimination, track pivots
    std::vector<int> pivot_col(d, -1);
    int rank = 0;
    for (int col = 0; col < d && rank < d; ++col) {
        int pr = -1;
        for (int r = rank; r < d; ++r)
            if (m[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[rank], m[pr]);
        std::uint64_t inv = F.inv(m[rank][col]);
        for (int j = 0; j < d; ++j) m[rank][j] = F.mul(m[rank][j], inv);
        for (int r = 0; r < d; ++r) {
            if (r != rank && m[r][col] != 0) {
                std::uint64_t c = m[r][col];
                for (int j = 0; j < d; ++j) m[r][j] = F.sub(m[r][j], F.mul(c, m[rank][j]));
            }
        }
        pivot_col[rank] = col;
        ++rank;
    }
    std::vector<FpPoly> basis;
    std::vector<bool> is_pivot(d, false);
    for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
    for (int col = 0; col < d; ++col) {
        if (is_pivot[col]) continue;
        FpPoly v(d, 0);
        v[col] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = F.sub(0, m[r][col]);
        fprune(v);
        basis.push_back(v);
    }
    std::size_t nfactors = basis.size();
    std::vector<FpPoly> factors{f};
    if (nfactors <= 1) return factors;
    for (const auto& v : basis) {
        if (factors.size() >= nfactors) break;
        if (fdeg(v) < 1) continue;
        for (std::uint64_t s = 0; s < F.p && factors.size() < nfactors; ++s) {
            FpPoly vs(v);
            if (vs.empty()) vs.push_back(0);
            vs[0] = F.sub(vs[0], s);
            fprune(vs);
            std::vector<FpPoly> next;
            for (auto& g : factors) {
                if (fdeg(g) <= 1) {
                    next.push_back(g);
                    continue;
                }
                FpPoly h = fgcd(F, g, vs);
                if (fdeg(h) > 0 && fdeg(h) < fdeg(g)) {
                    FpPoly q, r;
                    fdivmod(F, g, h, q, r);
                    next.push_back(h);
                    next.push_back(fmonic(F, q));
                } else {
                    next.push_back(g);
                }
            }
            factors = std::move(next);
        }
    }
    return factors;
}

// ---- Hensel lifting -----------------------------------------------------

// polynomials over Z/m, coefficients stored in [0, m)
ZPoly mreduce(const ZPoly& f, const Int& m) {
    ZPoly r(f);
    for (auto& c : r) {
        c %= m;
        if (c < 0) c += m;
    }
    zprune(r);
    return r;
}

ZPoly mbalanced(const ZPoly& f, const Int& m) {
    ZPoly r = mreduce(f, m);
    Int half = m / 2;
    for (auto& c : r)
        if (c > half) c -= m;
    zprune(r);
    return r;
}

ZPoly mmul(const ZPoly& a, const ZPoly& b, const Int& m) { return mreduce(zmul(a, b), m); }

ZPoly madd(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = (i < a.size() ? a[i] : Int(0)) + (i < b.size() ? b[i] : Int(0));
    return mreduce(r, m);
}

ZPoly msub(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = (i < a.size() ? a[i] : Int(0)) - (i < b.size() ? b[i] : Int(0));
    return mreduce(r, m);
}

// divmod by monic divisor over Z/m
void mdivmod_monic(const ZPoly& f, const ZPoly& d, const Int& m, ZPoly& q, ZPoly& r) {
    r = mreduce(f, m);
    q.clear();
    if (zdeg(r) >= zdeg(d)) q.assign(r.size() - d.size() + 1, Int(0));
    while (zdeg(r) >= zdeg(d)) {
        std::size_t shift = zdeg(r) - zdeg(d);
        Int c = r.back();
        q[shift] = c;
        for (std::size_t i = 0; i < d.size(); ++i) {
            r[shift + i] -= c * d[i];
            r[shift + i] %= m;
            if (r[shift + i] < 0) r[shift + i] += m;
        }
        zprune(r);
    }
}

// one quadratic Hensel step: f = g*h (mod m), s*g + t*h = 1 (mod m), h monic.
// updates all four to hold mod m^2 (g stays monic, degrees preserved).
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Int& m) {
    Int m2 = m * m;
    ZPoly e = msub(f, mmul(g, h, m2), m2);
    ZPoly q, r;
    mdivmod_monic(mmul(s, e, m2), h, m2, q, r);
    ZPoly g1 = madd(g, madd(mmul(t, e, m2), mmul(q, g, m2), m2), m2);
    ZPoly h1 = madd(h, r, m2);
    ZPoly b = msub(madd(mmul(s, g1, m2), mmul(t, h1, m2), m2), ZPoly{Int(1)}, m2);
    ZPoly c, d;
    mdivmod_monic(mmul(s, b, m2), h1, m2, c, d);
    ZPoly s1 = msub(s, d, m2);
    ZPoly t1 = msub(t, madd(mmul(t, b, m2), mmul(c, g1, m2), m2), m2);
    g = g1;
    h = h1;
    s = s1;
    t = t1;
}

FpPoly to_fp(const Fp& F, const ZPoly& f) {
    FpPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        Int c = f[i] % static_cast<long>(F.p);
        if (c < 0) c += static_cast<long>(F.p);
        r[i] = c.get_ui();
    }
    fprune(r);
    return r;
}

ZPoly from_fp(const FpPoly& f) {
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = Int(static_cast<unsigned long>(f[i]));
    zprune(r);
    return r;
}

// lift factorization of monic f = prod(parts) mod p to mod target (a power of p)
std::vector<ZPoly> hensel_lift_tree(const ZPoly& f, const std::vector<FpPoly>& parts, const Fp& F,
                                    const Int& target) {
    if (parts.size() == 1) return {mreduce(f, target)};
    std::size_t half = parts.size() / 2;
    std::vector<FpPoly> left(parts.begin(), parts.begin() + half);
    std::vector<FpPoly> right(parts.begin() + half, parts.end());
    FpPoly gp{1}, hp{1};
    for (const auto& x : left) gp = fmul(F, gp, x);
    for (const auto& x : right) hp = fmul(F, hp, x);
    // bezout: s*g + t*h = 1 mod p via extended euclid
    FpPoly a = gp, b = hp;
    FpPoly sa{1}, sb{0}, ta{0}, tb{1};
    while (!b.empty()) {
        FpPoly q, r;
        fdivmod(F, a, b, q, r);
        FpPoly sn = fsub(F, sa, fmul(F, q, sb));
        FpPoly tn = fsub(F, ta, fmul(F, q, tb));
        a = b;
        b = r;
        sa = sb;
        sb = sn;
        ta = tb;
        tb = tn;
    }
    // a = gcd = constant (coprime since f squarefree mod p)
    std::uint64_t ainv = F.inv(a.empty() ? 1 : a[0]);
    FpPoly sp = fscale(F, sa, ainv), tp = fscale(F, ta, ainv);
    ZPoly g = from_fp(gp), h = from_fp(hp), s = from_fp(sp), t = from_fp(tp);
    Int m(static_cast<unsigned long>(F.p));
    while (m < target) {
        hensel_step(mreduce(f, m * m), g, h, s, t, m);
        m *= m;
    }
    g = mreduce(g, target);
    h = mreduce(h, target);
    auto lg = hensel_lift_tree(g, left, F, target);
    auto rg = hensel_lift_tree(h, right, F, target);
    lg.insert(lg.end(), rg.begin(), rg.end());
    return lg;
}

// ---- Zassenhaus ---------------------------------------------------------

Int mignotte_bound(const ZPoly& f) {
    Int norm2(0);
    for (const auto& c : f) norm2 += c * c;
    Int s = sqrt(norm2) + 1;
    Int b(1);
    mpz_mul_2exp(b.get_mpz_t(), s.get_mpz_t(), zdeg(f) + 1);
    return b;
}

// f monic squarefree primitive over Z, deg >= 1; returns monic irreducible Z factors
std::vector<ZPoly> zassenhaus_monic(const ZPoly& f) {
    if (zdeg(f) == 1) return {f};
    static const std::uint64_t primes[] = {3,  5,  7,  11, 13, 17, 19, 23,  29,  31,  37,  41,
                                           43, 47, 53, 59, 61, 67, 71, 73,  79,  83,  89,  97,
                                           101, 103, 107, 109, 113, 127, 131, 137, 139, 149};
    Fp F{0};
    FpPoly fp;
    bool found = false;
    for (std::uint64_t p : primes) {
        F.p = p;
        fp = to_fp(F, f);
        if (fdeg(fp) != zdeg(f)) continue;  // p divides lc (impossible, monic) — keep safe
        if (fdeg(fgcd(F, fp, fderiv(F, fp))) == 0) {
            found = true;
            break;
        }
    }
    if (!found) fail(errc::internal, "no good prime found for factorization");
    auto parts = berlekamp(F, fmonic(F, fp));
    if (parts.size() == 1) return {f};
    std::sort(parts.begin(), parts.end());
    Int bound = mignotte_bound(f);
    Int target(static_cast<unsigned long>(F.p));
    while (target <= 2 * bound) target *= static_cast<unsigned long>(F.p);
    auto lifted = hensel_lift_tree(mreduce(f, target), parts, F, target);

    // subset recombination
    std::vector<ZPoly> result;
    ZPoly rest = f;
    std::vector<ZPoly> pool = lifted;
    std::size_t take = 1;
    while (pool.size() > 0 && take <= pool.size() / 2) {
        // enumerate subsets of size `take` in lexicographic index order
        std::vector<std::size_t> idx(take);
        for (std::size_t i = 0; i < take; ++i) idx[i] = i;
        bool done_size = false;
        bool removed = false;
        while (!done_size) {
            ZPoly cand{Int(1)};
            for (std::size_t i : idx) cand = mmul(cand, pool[i], target);
            cand = mbalanced(cand, target);
            ZPoly q, r;
            zdivmod_monic(rest, cand, q, r);
            if (r.empty()) {
                result.push_back(cand);
                std::vector<ZPoly> np;
                for (std::size_t i = 0; i < pool.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) np.push_back(pool[i]);
                pool = std::move(np);
                rest = q;
                removed = true;
                break;
            }
            // next subset
            int pos = static_cast<int>(take) - 1;
            while (pos >= 0 && idx[pos] == pool.size() - take + pos) --pos;
            if (pos < 0) {
                done_size = true;
            } else {
                ++idx[pos];
                for (std::size_t i = pos + 1; i < take; ++i) idx[i] = idx[i - 1] + 1;
            }
        }
        if (!removed) ++take;
    }
    if (zdeg(rest) >= 1) result.push_back(rest);
    return result;
}

UPoly<Rational> zpoly_to_q(const ZPoly& f) {
    std::vector<Rational> c(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) c[i] = Rational(f[i], Int(1));
    return UPoly<Rational>(std::move(c));
}

ZPoly qpoly_to_primitive_z(const UPoly<Rational>& f) {
    Int lcm(1);
    for (const auto& c : f.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
    ZPoly r(f.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = f.coeffs()[i].numerator() * (lcm / f.coeffs()[i].denominator());
    zprune(r);
    return zprimitive(r);
}

bool qpoly_less(const UPoly<Rational>& a, const UPoly<Rational>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    }
    return false;
}

}  // namespace

std::vector<QFactor> factor_rational_poly(const UPoly<Rational>& f, Rational* lead) {
    if (f.is_zero()) fail(errc::internal, "factoring the zero polynomial");
    if (lead) *lead = f.leading();
    std::vector<QFactor> out;
    if (f.degree() == 0) return out;

    // Yun squarefree decomposition over Q
    UPoly<Rational> g = f.monic();
    std::vector<std::pair<UPoly<Rational>, int>> sqf;
    {
        auto gp = g.derivative();
        auto a = gcd(g, gp);
        auto b = g.divmod(a).first;
        auto c = gp.divmod(a).first;
        auto d = c - b.derivative();
        int i = 1;
        while (b.degree() > 0) {
            auto ai = gcd(b, d);
            if (ai.degree() > 0) sqf.push_back({ai, i});
            b = b.divmod(ai).first;
            c = d.divmod(ai).first;
            d = c - b.derivative();
            ++i;
        }
    }

    for (auto& [sq, mult] : sqf) {
        ZPoly z = qpoly_to_primitive_z(sq);
        std::vector<ZPoly> zfactors;
        if (z.back() == 1) {
            zfactors = zassenhaus_monic(z);
        } else {
            // x -> x/lc transform to a monic polynomial
            Int L = z.back();
            int d = zdeg(z);
            ZPoly m(z.size());
            Int pw(1);
            // coeff of x^i becomes c_i * L^(d-1-i)
            for (int i = d; i >= 0; --i) {
                m[i] = z[i] * pw;
                if (i > 0) pw *= L;
            }
            auto mf = zassenhaus_monic(m);
            for (auto& h : mf) {
                // map back: primitive part of h(L*x)
                ZPoly back(h.size());
                Int lp(1);
                for (std::size_t i = 0; i < h.size(); ++i) {
                    back[i] = h[i] * lp;
                    lp *= L;
                }
                zfactors.push_back(zprimitive(back));
            }
        }
        for (auto& zf : zfactors) {
            UPoly<Rational> qf = zpoly_to_q(zf).monic();
            out.push_back({qf, mult});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const QFactor& a, const QFactor& b) { return qpoly_less(a.poly, b.poly); });
    return out;
}

bool is_irreducible_q(const UPoly<Rational>& f) {
    if (f.degree() <= 0) return false;
    auto fs = factor_rational_poly(f);
    return fs.size() == 1 && fs[0].multiplicity == 1;
}

}  // namespace zeq

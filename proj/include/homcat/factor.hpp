#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "homcat/field.hpp"
#include "homcat/poly.hpp"

namespace homcat {

// Partial factorization support for the idempotent-splitting machinery. Over
// F_p root search and low-degree trial division are complete; over Q the root
// search is complete only when the coefficient divisor enumeration stays
// within bounds, and the `complete` flag records that.

struct SearchStatus {
    bool complete = true;
};

inline std::vector<mpz_class> divisors_within(const mpz_class& n_in, SearchStatus& status,
                                              size_t cap = 4096) {
    mpz_class n = abs(n_in);
    std::vector<mpz_class> divs;
    if (n == 0) return divs;
    mpz_class d = 1;
    while (d * d <= n) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d * d != n) divs.push_back(n / d);
            if (divs.size() > cap) {
                status.complete = false;
                divs.resize(cap);
                return divs;
            }
        }
        ++d;
        if (d > 2000000) {  // trial division budget
            if (d * d <= n) status.complete = false;
            break;
        }
    }
    return divs;
}

// Distinct roots of p in F_p by exhaustive scan (complete for word-size p).
inline std::vector<Fp> field_roots(const Poly<Fp>& f, SearchStatus& status) {
    std::vector<Fp> roots;
    uint32_t p = f.zero_proto().p;
    if (p > 2000000) {
        status.complete = false;
        return roots;
    }
    for (uint32_t v = 0; v < p; ++v) {
        Fp x(static_cast<int64_t>(v), p);
        if (f.eval(x).is_zero()) roots.push_back(x);
    }
    return roots;
}

// Distinct rational roots via the rational root theorem on the cleared form.
inline std::vector<Rat> field_roots(const Poly<Rat>& f, SearchStatus& status) {
    std::vector<Rat> roots;
    if (f.degree() < 1) return roots;
    mpz_class lcm_den = 1;
    for (int i = 0; i <= f.degree(); ++i) lcm_den = lcm(lcm_den, f.coeff(i).v.get_den());
    std::vector<mpz_class> c(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) {
        mpq_class q = f.coeff(i).v * lcm_den;
        c[i] = q.get_num();
    }
    int low = 0;
    while (low <= f.degree() && c[low] == 0) ++low;
    if (low > 0) roots.push_back(Rat(0));
    if (low > f.degree()) return roots;

    std::vector<mpz_class> nums = divisors_within(c[low], status);
    std::vector<mpz_class> dens = divisors_within(c[f.degree()], status);
    for (const mpz_class& n : nums)
        for (const mpz_class& d : dens)
            for (int sign : {1, -1}) {
                mpq_class cand(n * sign, d);
                cand.canonicalize();
                Rat x(cand);
                if (f.eval(x).is_zero()) {
                    bool seen = false;
                    for (const Rat& r : roots) seen = seen || r == x;
                    if (!seen) roots.push_back(x);
                }
            }
    return roots;
}

// Split f into two coprime nonconstant monic factors if possible. Returns
// {g, h} with f = g*h (up to a unit), gcd(g, h) = 1. Strategy: peel off a root
// with its full multiplicity; if rootless, look for a low-degree factor.
template <class K>
std::optional<std::pair<Poly<K>, Poly<K>>> coprime_split(const Poly<K>& f_in, SearchStatus& status);

namespace detail {

// Trial division of a monic F_p polynomial by all monic polynomials of the
// given degree; complete whenever p^deg stays within budget.
inline std::optional<Poly<Fp>> monic_factor_fp(const Poly<Fp>& f, int deg, SearchStatus& status) {
    uint32_t p = f.zero_proto().p;
    double count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    if (count > 2e6) {
        status.complete = false;
        return std::nullopt;
    }
    std::vector<uint32_t> digits(deg, 0);
    while (true) {
        std::vector<Fp> c;
        c.reserve(deg + 1);
        for (int i = 0; i < deg; ++i) c.push_back(Fp(digits[i], p));
        c.push_back(Fp(1, p));
        Poly<Fp> g(std::move(c), f.zero_proto());
        if (f.mod(g).is_zero() && g.degree() < f.degree()) return g;
        int pos = 0;
        while (pos < deg && ++digits[pos] == p) digits[pos++] = 0;
        if (pos == deg) break;
    }
    return std::nullopt;
}

// Search for a monic integer factor of the given degree of a monic integer
// polynomial, using the Cauchy root bound to box the coefficients.
inline std::optional<Poly<Rat>> monic_factor_q(const Poly<Rat>& f, int deg, SearchStatus& status) {
    mpz_class lcm_den = 1;
    for (int i = 0; i <= f.degree(); ++i) lcm_den = lcm(lcm_den, f.coeff(i).v.get_den());
    // Substitute x = y/m so the polynomial becomes monic with integer
    // coefficients; a degree-d monic factor pulls back along y = m*x.
    mpz_class m = lcm_den;
    int n = f.degree();
    std::vector<mpz_class> c(n + 1);
    mpz_class mpow = 1;
    for (int i = n; i >= 0; --i) {
        mpq_class q = f.coeff(i).v * mpow;
        if (q.get_den() != 1) {
            mpq_class q2 = q * lcm_den;  // defensive; should already be integral
            c[i] = q2.get_num();
        } else {
            c[i] = q.get_num();
        }
        mpow *= m;
    }
    // c is monic (c[n] = 1). Cauchy bound on roots of the transformed poly.
    mpz_class bound = 0;
    for (int i = 0; i < n; ++i) {
        mpz_class a = abs(c[i]);
        if (a > bound) bound = a;
    }
    bound += 1;

    std::vector<mpz_class> box(deg);
    mpz_class binom = 1, bpow = 1;
    double total = 1;
    for (int i = 0; i < deg; ++i) {
        binom = binom * (deg - i) / (i + 1);
        bpow *= bound;
        box[deg - 1 - i] = binom * bpow;  // bound on coefficient of y^(deg-1-i)
        total *= 2.0 * box[deg - 1 - i].get_d() + 1.0;
    }
    if (total > 4e6) {
        status.complete = false;
        return std::nullopt;
    }

    Poly<Rat> fz(f.zero_proto());
    {
        std::vector<Rat> rc(n + 1, Rat());
        for (int i = 0; i <= n; ++i) rc[i] = Rat(mpq_class(c[i]));
        fz = Poly<Rat>(std::move(rc), Rat());
    }
    std::vector<mpz_class> digit(deg);
    for (int i = 0; i < deg; ++i) digit[i] = -box[i];
    while (true) {
        std::vector<Rat> gc(deg + 1, Rat());
        for (int i = 0; i < deg; ++i) gc[i] = Rat(mpq_class(digit[i]));
        gc[deg] = Rat(1);
        Poly<Rat> g(std::move(gc), Rat());
        if (fz.mod(g).is_zero()) {
            // pull back y = m*x: factor of f is g(m*x)/m^deg, made monic
            std::vector<Rat> hc(deg + 1, Rat());
            mpz_class mp = 1;
            for (int i = 0; i <= deg; ++i) {
                hc[i] = Rat(mpq_class(g.coeff(i).v * mp));
                mp *= m;
            }
            Poly<Rat> h(std::move(hc), Rat());
            return make_monic(h);
        }
        int pos = 0;
        while (pos < deg) {
            digit[pos] += 1;
            if (digit[pos] <= box[pos]) break;
            digit[pos] = -box[pos];
            ++pos;
        }
        if (pos == deg) break;
    }
    return std::nullopt;
}

template <class K>
std::optional<Poly<K>> monic_factor(const Poly<K>& f, int deg, SearchStatus& status) {
    if constexpr (std::is_same_v<K, Fp>)
        return monic_factor_fp(f, deg, status);
    else
        return monic_factor_q(f, deg, status);
}

}  // namespace detail

template <class K>
std::optional<std::pair<Poly<K>, Poly<K>>> coprime_split(const Poly<K>& f_in, SearchStatus& status) {
    Poly<K> f = make_monic(f_in);
    if (f.degree() < 2) return std::nullopt;

    SearchStatus root_status;
    std::vector<K> roots = field_roots(f, root_status);
    status.complete = status.complete && root_status.complete;
    for (const K& r : roots) {
        Poly<K> lin = Poly<K>::monomial(1, f.zero_proto().one()) - Poly<K>::constant(r);
        Poly<K> g = Poly<K>::constant(f.zero_proto().one());
        Poly<K> rest = f;
        while (rest.mod(lin).is_zero()) {
            rest = rest.divmod(lin).first;
            g = g * lin;
        }
        if (rest.degree() >= 1) return std::make_pair(g, rest);
    }

    // Rootless: try low-degree monic factors and peel to full multiplicity.
    for (int d = 2; d <= f.degree() / 2; ++d) {
        SearchStatus fs;
        auto g0 = detail::monic_factor(f, d, fs);
        status.complete = status.complete && fs.complete;
        if (!g0) continue;
        Poly<K> g = Poly<K>::constant(f.zero_proto().one());
        Poly<K> rest = f;
        while (rest.degree() >= g0->degree() && rest.mod(*g0).is_zero()) {
            rest = rest.divmod(*g0).first;
            g = g * (*g0);
        }
        if (rest.degree() >= 1 && poly_gcd(g, rest).degree() == 0) return std::make_pair(g, rest);
        // factor found but not coprime to the rest; recurse on smaller pieces
        if (rest.degree() >= 1) {
            SearchStatus ss;
            auto sub = coprime_split(rest, ss);
            status.complete = status.complete && ss.complete;
            if (sub) {
                // f = g * rest, rest = a*b coprime; regroup as (g*a... ) only
                // when coprimality with g survives on one side.
                if (poly_gcd(*g0, sub->first).degree() == 0)
                    return std::make_pair(g * sub->second, sub->first);
                if (poly_gcd(*g0, sub->second).degree() == 0)
                    return std::make_pair(g * sub->first, sub->second);
            }
        }
    }
    return std::nullopt;
}

// Certified irreducibility over the coefficient field where we can decide it;
// nullopt when the bounded searches were not exhaustive.
template <class K>
std::optional<bool> irreducible(const Poly<K>& f_in) {
    Poly<K> f = make_monic(f_in);
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    SearchStatus status;
    std::vector<K> roots = field_roots(f, status);
    if (!roots.empty()) return false;
    if (!status.complete) return std::nullopt;
    for (int d = 2; d <= f.degree() / 2; ++d) {
        SearchStatus fs;
        auto g = detail::monic_factor(f, d, fs);
        if (g) return false;
        if (!fs.complete) return std::nullopt;
    }
    return true;
}

}  // namespace homcat

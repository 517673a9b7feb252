#pragma once

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "homcat/errors.hpp"
#include "homcat/field.hpp"

namespace homcat {

// Dense univariate polynomial over an exact field, trimmed so the leading
// coefficient is nonzero. The zero polynomial has an empty coefficient list.
template <class K>
class Poly {
public:
    explicit Poly(const K& zero) : zero_(zero) {}
    Poly(std::vector<K> coeffs, const K& zero) : zero_(zero), c_(std::move(coeffs)) { trim(); }

    static Poly monomial(int degree, const K& coeff) {
        std::vector<K> c(degree + 1, coeff.zero());
        c[degree] = coeff;
        return Poly(std::move(c), coeff.zero());
    }
    static Poly constant(const K& value) { return monomial(0, value); }

    const K& zero_proto() const { return zero_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    K coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : zero_;
    }
    K leading() const { return is_zero() ? zero_ : c_.back(); }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const {
        std::vector<K> r(std::max(c_.size(), o.c_.size()), zero_);
        for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
        return Poly(std::move(r), zero_);
    }
    Poly operator-(const Poly& o) const {
        std::vector<K> r(std::max(c_.size(), o.c_.size()), zero_);
        for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
        return Poly(std::move(r), zero_);
    }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly(zero_);
        std::vector<K> r(c_.size() + o.c_.size() - 1, zero_);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
        return Poly(std::move(r), zero_);
    }
    Poly operator-() const {
        std::vector<K> r = c_;
        for (K& x : r) x = -x;
        return Poly(std::move(r), zero_);
    }
    Poly scaled(const K& s) const {
        std::vector<K> r = c_;
        for (K& x : r) x = x * s;
        return Poly(std::move(r), zero_);
    }

    // Euclidean division; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw Error(ErrorKind::Validation, "polynomial division by zero");
        Poly rem = *this;
        std::vector<K> q(std::max<int>(degree() - d.degree() + 1, 0), zero_);
        K lead_inv = d.leading().inv();
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            int k = rem.degree() - d.degree();
            K f = rem.leading() * lead_inv;
            q[k] = f;
            rem = rem - (d * monomial(k, f));
        }
        return {Poly(std::move(q), zero_), rem};
    }
    Poly mod(const Poly& d) const { return divmod(d).second; }

    K eval(const K& x) const {
        K acc = zero_;
        for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
        return acc;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            if (i == 0) {
                s += c_[i].str();
            } else {
                if (!c_[i].is_one()) s += c_[i].str() + "*";
                s += (i == 1) ? "x" : "x^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    K zero_;
    std::vector<K> c_;
};

template <class K>
Poly<K> make_monic(const Poly<K>& p) {
    if (p.is_zero()) return p;
    return p.scaled(p.leading().inv());
}

template <class K>
Poly<K> derivative(const Poly<K>& p) {
    if (p.degree() < 1) return Poly<K>(p.zero_proto());
    std::vector<K> c(p.degree(), p.zero_proto());
    for (int i = 1; i <= p.degree(); ++i)
        c[i - 1] = p.coeff(i) * scalar_from_int(i, p.zero_proto());
    return Poly<K>(std::move(c), p.zero_proto());
}

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> r = a.mod(b);
        a = b;
        b = r;
    }
    return make_monic(a);
}

// Extended Euclid: returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
template <class K>
struct PolyExtGcd {
    Poly<K> g, s, t;
};

template <class K>
PolyExtGcd<K> poly_ext_gcd(const Poly<K>& a, const Poly<K>& b) {
    const K zero = a.zero_proto();
    Poly<K> r0 = a, r1 = b;
    Poly<K> s0 = Poly<K>::constant(zero.one()), s1 = Poly<K>(zero);
    Poly<K> t0 = Poly<K>(zero), t1 = Poly<K>::constant(zero.one());
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = r1;
        r1 = r;
        Poly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    K lead_inv = r0.leading().inv();
    return {r0.scaled(lead_inv), s0.scaled(lead_inv), t0.scaled(lead_inv)};
}

// Parser for the polynomial grammar: terms joined by + or -, each term one of
// coeff, coeff*x^k, x^k, x, with coeff a decimal integer or a/b rational.
template <class K>
Poly<K> parse_poly(const std::string& text, const K& proto) {
    struct Cursor {
        const std::string& s;
        size_t i = 0;
        void skip_ws() {
            while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        }
        bool done() {
            skip_ws();
            return i >= s.size();
        }
        char peek() {
            skip_ws();
            return i < s.size() ? s[i] : '\0';
        }
    } cur{text};

    const K zero = field_prototype(proto);
    Poly<K> result(zero);
    bool first = true;
    while (!cur.done()) {
        K sign = zero.one();
        char c = cur.peek();
        if (c == '+' || c == '-') {
            if (c == '-') sign = -sign;
            ++cur.i;
        } else if (!first) {
            throw Error(ErrorKind::Parse, "expected '+' or '-' in polynomial at position " +
                                              std::to_string(cur.i));
        }
        first = false;
        cur.skip_ws();

        // coefficient part
        K coeff = zero.one();
        bool have_coeff = false;
        size_t start = cur.i;
        while (cur.i < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[cur.i])) || text[cur.i] == '/'))
            ++cur.i;
        if (cur.i > start) {
            coeff = scalar_from_string(text.substr(start, cur.i - start), proto);
            have_coeff = true;
        }

        cur.skip_ws();
        bool have_star = false;
        if (cur.peek() == '*') {
            if (!have_coeff) throw Error(ErrorKind::Parse, "dangling '*' in polynomial");
            have_star = true;
            ++cur.i;
            cur.skip_ws();
        }

        int degree = 0;
        if (cur.peek() == 'x') {
            ++cur.i;
            degree = 1;
            if (cur.peek() == '^') {
                ++cur.i;
                cur.skip_ws();
                size_t ds = cur.i;
                while (cur.i < text.size() && std::isdigit(static_cast<unsigned char>(text[cur.i])))
                    ++cur.i;
                if (cur.i == ds) throw Error(ErrorKind::Parse, "missing exponent after '^'");
                degree = std::stoi(text.substr(ds, cur.i - ds));
            }
        } else if (!have_coeff) {
            throw Error(ErrorKind::Parse, "expected term in polynomial at position " +
                                              std::to_string(cur.i));
        } else if (have_star) {
            throw Error(ErrorKind::Parse, "expected 'x' after '*'");
        }

        result = result + Poly<K>::monomial(degree, coeff * sign);
    }
    return result;
}

}  // namespace homcat

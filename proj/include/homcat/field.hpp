#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "homcat/errors.hpp"

namespace homcat {

// ---------------------------------------------------------------------------
// Field descriptor: characteristic 0 means Q, a prime p < 2^31 means F_p.
// ---------------------------------------------------------------------------

inline bool is_prime_u32(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct FieldDesc {
    uint32_t characteristic = 0;

    static FieldDesc rationals() { return FieldDesc{0}; }

    static FieldDesc prime(uint32_t p) {
        if (!is_prime_u32(p) || p >= (1u << 31))
            throw Error(ErrorKind::Validation, "characteristic must be 0 or a prime < 2^31");
        return FieldDesc{p};
    }

    static FieldDesc of_char(uint32_t c) { return c == 0 ? rationals() : prime(c); }

    bool operator==(const FieldDesc&) const = default;
};

// ---------------------------------------------------------------------------
// Rationals: thin value wrapper over GMP's mpq_class. mpq_class keeps values
// canonical (lowest terms, positive denominator), so equality is exact.
// ---------------------------------------------------------------------------

struct Rat {
    mpq_class v;

    Rat() : v(0) {}
    Rat(long n) : v(n) {}
    Rat(const mpq_class& q) : v(q) { v.canonicalize(); }
    Rat(long num, long den) : v(num, den) { v.canonicalize(); }

    Rat operator+(const Rat& o) const { return Rat(mpq_class(v + o.v)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v - o.v)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v * o.v)); }
    Rat operator/(const Rat& o) const {
        if (o.v == 0) throw Error(ErrorKind::Validation, "division by zero");
        return Rat(mpq_class(v / o.v));
    }
    Rat operator-() const { return Rat(mpq_class(-v)); }
    bool operator==(const Rat& o) const { return v == o.v; }
    bool operator!=(const Rat& o) const { return v != o.v; }
    bool operator<(const Rat& o) const { return v < o.v; }

    bool is_zero() const { return v == 0; }
    bool is_one() const { return v == 1; }
    Rat zero() const { return Rat(); }
    Rat one() const { return Rat(1); }
    Rat inv() const { return Rat(1) / *this; }

    std::string str() const { return v.get_str(); }
};

// ---------------------------------------------------------------------------
// Prime field F_p with machine-word p. Elements carry their modulus so values
// from different fields cannot be mixed silently. Inverses via Fermat.
// ---------------------------------------------------------------------------

struct Fp {
    uint32_t r = 0;
    uint32_t p = 0;  // 0 only for a default-constructed placeholder

    Fp() = default;
    Fp(int64_t value, uint32_t prime) : p(prime) {
        int64_t m = value % static_cast<int64_t>(prime);
        if (m < 0) m += prime;
        r = static_cast<uint32_t>(m);
    }

    static void check(const Fp& a, const Fp& b) {
        if (a.p != b.p) throw Error(ErrorKind::Validation, "mixed prime fields");
    }

    Fp operator+(const Fp& o) const {
        check(*this, o);
        uint64_t s = static_cast<uint64_t>(r) + o.r;
        return from_raw(s >= p ? s - p : s, p);
    }
    Fp operator-(const Fp& o) const {
        check(*this, o);
        return from_raw(r >= o.r ? r - o.r : r + p - o.r, p);
    }
    Fp operator*(const Fp& o) const {
        check(*this, o);
        return from_raw(static_cast<uint64_t>(r) * o.r % p, p);
    }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }
    Fp operator-() const { return from_raw(r == 0 ? 0 : p - r, p); }
    bool operator==(const Fp& o) const { return r == o.r && p == o.p; }
    bool operator!=(const Fp& o) const { return !(*this == o); }
    bool operator<(const Fp& o) const { return r < o.r; }

    bool is_zero() const { return r == 0; }
    bool is_one() const { return r == 1; }
    Fp zero() const { return from_raw(0, p); }
    Fp one() const { return from_raw(p > 1 ? 1 : 0, p); }

    Fp pow(uint64_t e) const {
        Fp acc = one(), base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }
    Fp inv() const {
        if (r == 0) throw Error(ErrorKind::Validation, "division by zero");
        return pow(p - 2);
    }

    std::string str() const { return std::to_string(r); }

private:
    static Fp from_raw(uint64_t v, uint32_t prime) {
        Fp x;
        x.r = static_cast<uint32_t>(v);
        x.p = prime;
        return x;
    }
};

// Parse "a" or "a/b" with decimal integers into a field element shaped like
// the prototype. This is the single coefficient grammar used by all file
// formats and the polynomial parser.
inline Rat scalar_from_string(const std::string& s, const Rat&) {
    try {
        mpq_class q(s);
        if (q.get_den() == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
        q.canonicalize();
        return Rat(q);
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::Parse, "bad coefficient '" + s + "'");
    }
}

inline Fp scalar_from_string(const std::string& s, const Fp& proto) {
    try {
        mpq_class q(s);
        if (q.get_den() == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
        q.canonicalize();
        mpz_class num = q.get_num(), den = q.get_den();
        mpz_class pz(static_cast<unsigned long>(proto.p));
        mpz_class nr = num % pz, dr = den % pz;
        if (dr == 0) throw Error(ErrorKind::Parse, "denominator of '" + s + "' vanishes mod p");
        Fp n(nr.get_si(), proto.p), d(dr.get_si(), proto.p);
        return n / d;
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::Parse, "bad coefficient '" + s + "'");
    }
}

inline Rat scalar_from_int(long n, const Rat&) { return Rat(n); }
inline Fp scalar_from_int(long n, const Fp& proto) { return Fp(n, proto.p); }

inline uint32_t field_characteristic(const Rat&) { return 0; }
inline uint32_t field_characteristic(const Fp& proto) { return proto.p; }

inline Rat field_prototype(const Rat&) { return Rat(); }
inline Fp field_prototype(const Fp& proto) { return Fp(0, proto.p); }

}  // namespace homcat

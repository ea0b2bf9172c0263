#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stralg {

// Arithmetic over the prime field F_p. Elements are stored reduced to
// [0, p). Products go through uint64_t, so p must stay below 2^31.
struct PrimeField {
    using Elem = std::uint32_t;

    std::uint32_t p = 32003;

    static constexpr bool is_rational = false;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += p;
        return static_cast<Elem>(r);
    }

    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem add(Elem a, Elem b) const {
        std::uint32_t s = a + b;
        if (s >= p) s -= p;
        return s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p);
    }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = 1, base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        return pow(a, p - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    std::string to_string(Elem a) const { return std::to_string(a); }

    bool operator==(const PrimeField& o) const { return p == o.p; }
};

// Exact rationals for audit runs; slower, but free of the p > dim End
// requirement of the radical machinery.
struct RationalField {
    using Elem = boost::multiprecision::cpp_rational;

    static constexpr bool is_rational = true;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long v) const { return Elem(v); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("RationalField: inverse of zero");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }

    std::string to_string(const Elem& a) const { return a.str(); }

    bool operator==(const RationalField&) const { return true; }
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace stralg

#ifndef LEF_SCALAR_HPP
#define LEF_SCALAR_HPP

#include "lef/combin.hpp"
#include "lef/errors.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <type_traits>

namespace lef {

/// Exact rational scalar. GMP-backed; always canonical (lowest terms,
/// positive denominator), which is exactly the representation invariant
/// the library relies on.
using Rational = boost::multiprecision::mpq_rational;

/// Parses "2", "-3/7", "0" ... into an exact rational.
inline Rational parse_rational(const std::string& text) {
    try {
        Rational q(text);
        return q;
    } catch (const std::exception&) {
        throw input_error("cannot parse rational number from \"" + text + "\"");
    }
}

namespace detail {
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t out = 1 % p;
    while (e) {
        if (e & 1) out = mulmod(out, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return out;
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}
} // namespace detail

/// Element of Z/p for a fixed prime p > 2^30. The modulus is configured
/// per computation context (see PrimeContext); all residues live in [0, p).
///
/// Prime mode is an acceleration device: any verdict computed here is
/// re-checkable in rational mode, and rational mode is authoritative.
class Fp {
public:
    Fp() : v_(0) {}
    Fp(long long x) {
        const std::uint64_t p = modulus();
        long long r = x % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        v_ = static_cast<std::uint64_t>(r);
    }
    explicit Fp(const Integer& z) {
        Integer r = z % Integer(modulus());
        if (r < 0) r += Integer(modulus());
        v_ = static_cast<std::uint64_t>(r);
    }

    static std::uint64_t modulus() {
        if (modulus_ == 0)
            throw input_error("prime modulus not set; create a PrimeContext first");
        return modulus_;
    }

    std::uint64_t residue() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator-() const { return from_raw(v_ ? modulus() - v_ : 0); }
    Fp& operator+=(const Fp& o) {
        v_ += o.v_;
        if (v_ >= modulus()) v_ -= modulus();
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + modulus() - o.v_;
        return *this;
    }
    Fp& operator*=(const Fp& o) {
        v_ = detail::mulmod(v_, o.v_, modulus());
        return *this;
    }
    Fp& operator/=(const Fp& o) {
        if (o.is_zero()) throw error("division by zero in Z/p");
        v_ = detail::mulmod(v_, detail::powmod(o.v_, modulus() - 2, modulus()),
                            modulus());
        return *this;
    }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

private:
    static Fp from_raw(std::uint64_t v) {
        Fp x;
        x.v_ = v;
        return x;
    }
    static inline std::uint64_t modulus_ = 0;
    friend class PrimeContext;

    std::uint64_t v_;
};

/// RAII scope that fixes the prime for Fp arithmetic. One prime is active
/// per process at a time; nested contexts restore the previous modulus.
class PrimeContext {
public:
    explicit PrimeContext(std::uint64_t p) : saved_(Fp::modulus_) {
        if (p <= (1ull << 30) || !detail::is_prime_u64(p))
            throw input_error("prime mode requires a prime p > 2^30");
        Fp::modulus_ = p;
    }
    ~PrimeContext() { Fp::modulus_ = saved_; }
    PrimeContext(const PrimeContext&) = delete;
    PrimeContext& operator=(const PrimeContext&) = delete;

private:
    std::uint64_t saved_;
};

template <class K>
inline constexpr bool is_rational_field_v = std::is_same_v<K, Rational>;

inline bool scalar_is_zero(const Rational& x) { return x.is_zero(); }
inline bool scalar_is_zero(const Fp& x) { return x.is_zero(); }

/// Field-generic injections of exact integers / rationals.
template <class K> K scalar_from_integer(const Integer& z);
template <> inline Rational scalar_from_integer<Rational>(const Integer& z) {
    return Rational(z);
}
template <> inline Fp scalar_from_integer<Fp>(const Integer& z) { return Fp(z); }

template <class K> K scalar_from_rational(const Rational& q);
template <> inline Rational scalar_from_rational<Rational>(const Rational& q) {
    return q;
}
template <> inline Fp scalar_from_rational<Fp>(const Rational& q) {
    Fp num(Integer(numerator(q)));
    Fp den(Integer(denominator(q)));
    if (den.is_zero())
        throw input_error("rational denominator vanishes modulo the chosen prime");
    return num / den;
}

} // namespace lef

#endif // LEF_SCALAR_HPP

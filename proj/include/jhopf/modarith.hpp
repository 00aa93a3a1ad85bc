#pragma once

#include <cstdint>

namespace jhopf::modarith {

// Exact 64-bit coefficient arithmetic.  Everything is overflow-checked; an
// operation whose true result does not fit in int64_t throws
// std::overflow_error instead of wrapping.

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// base^exp with the same overflow guarantee.  exp must be nonnegative.
std::int64_t checked_pow(std::int64_t base, std::int64_t exp);

// Trial division.  Values below 2 are not prime.
bool is_prime(std::int64_t p);

/* The coefficient ring of every element type in this library: the integers
   when modulus() == 0, otherwise Z/m with canonical representatives in
   [0, m).  Modulus 1 is rejected (the zero ring makes every check vacuous).
   The default-constructed ring is the integers. */
class CoefficientRing {
public:
    CoefficientRing() = default;
    explicit CoefficientRing(std::int64_t modulus);

    std::int64_t modulus() const { return modulus_; }
    bool is_integers() const { return modulus_ == 0; }

    // Canonical representative of v: v itself over the integers, otherwise
    // the residue in [0, m) (correct for negative v as well).
    std::int64_t reduce(std::int64_t v) const;

    std::int64_t add(std::int64_t a, std::int64_t b) const;
    std::int64_t sub(std::int64_t a, std::int64_t b) const;
    std::int64_t mul(std::int64_t a, std::int64_t b) const;
    std::int64_t negate(std::int64_t a) const;

    friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

private:
    std::int64_t modulus_ = 0;
};

/* p-adic valuation.  is_infinite is set exactly for the valuation of 0;
   value is meaningful only when is_infinite is false.  The infinite
   valuation compares greater than every finite one. */
struct Valuation {
    bool is_infinite = false;
    std::int64_t value = 0;

    static Valuation infinite() { return {true, 0}; }
    static Valuation finite(std::int64_t v) { return {false, v}; }

    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.is_infinite) return false;
        if (b.is_infinite) return true;
        return a.value < b.value;
    }
};

// Largest e with p^e dividing n (p must be prime, else std::invalid_argument).
Valuation p_valuation(std::int64_t n, std::int64_t p);

// Binomial coefficient C(a, b) for a, b >= 0; zero when b > a.  Exact;
// throws std::overflow_error when the value does not fit in 64 bits.
std::int64_t binomial(std::int64_t a, std::int64_t b);

// nu_p(n!) by Legendre's formula.  n >= 0, p prime.
std::int64_t factorial_valuation(std::int64_t n, std::int64_t p);

/* nu_p(C(p^a, k)) for 1 <= k <= p^a, computed from factorial valuations so
   the binomial itself is never materialized.  By Kummer's theorem this
   equals a - nu_p(k). */
std::int64_t binomial_prime_power_valuation(std::int64_t p, std::int64_t a, std::int64_t k);

}  // namespace jhopf::modarith

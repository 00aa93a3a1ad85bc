#include "jhopf/modarith.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace jhopf::modarith {

namespace {

[[noreturn]] void overflow(const char* op) {
    throw std::overflow_error(std::string("integer overflow in ") + op);
}

}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) overflow("addition");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) overflow("subtraction");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) overflow("multiplication");
    return r;
}

std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
    if (exp < 0) throw std::invalid_argument("checked_pow: negative exponent");
    std::int64_t acc = 1;
    for (std::int64_t i = 0; i < exp; ++i) acc = checked_mul(acc, base);
    return acc;
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

CoefficientRing::CoefficientRing(std::int64_t modulus) : modulus_(modulus) {
    if (modulus < 0 || modulus == 1)
        throw std::invalid_argument("CoefficientRing: modulus must be 0 (integers) or >= 2");
}

std::int64_t CoefficientRing::reduce(std::int64_t v) const {
    if (modulus_ == 0) return v;
    std::int64_t r = v % modulus_;
    return r < 0 ? r + modulus_ : r;
}

std::int64_t CoefficientRing::add(std::int64_t a, std::int64_t b) const {
    if (modulus_ == 0) return checked_add(a, b);
    return reduce(reduce(a) + reduce(b));
}

std::int64_t CoefficientRing::sub(std::int64_t a, std::int64_t b) const {
    if (modulus_ == 0) return checked_sub(a, b);
    return reduce(reduce(a) - reduce(b));
}

std::int64_t CoefficientRing::mul(std::int64_t a, std::int64_t b) const {
    if (modulus_ == 0) return checked_mul(a, b);
    // Reduced representatives fit in 63 bits; the product may not, so go
    // through 128-bit arithmetic before reducing.
    __int128 p = static_cast<__int128>(reduce(a)) * static_cast<__int128>(reduce(b));
    return static_cast<std::int64_t>(p % modulus_);
}

std::int64_t CoefficientRing::negate(std::int64_t a) const {
    if (modulus_ == 0) return checked_sub(0, a);
    return reduce(-reduce(a));
}

Valuation p_valuation(std::int64_t n, std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("p_valuation: p must be prime");
    if (n == 0) return Valuation::infinite();
    if (n < 0) n = (n == INT64_MIN) ? INT64_MIN : -n;
    std::int64_t v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return Valuation::finite(v);
}

std::int64_t binomial(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0) throw std::invalid_argument("binomial: arguments must be nonnegative");
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    std::int64_t result = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        // Divide i out of both factors before multiplying: result/g is coprime
        // to i/g, so i/g divides a - b + i and the product is exactly
        // C(a-b+i, i).  That keeps every intermediate no larger than the
        // largest prefix coefficient, so overflow means the result overflows.
        const std::int64_t g = std::gcd(result, i);
        result = checked_mul(result / g, (a - b + i) / (i / g));
    }
    return result;
}

std::int64_t factorial_valuation(std::int64_t n, std::int64_t p) {
    if (n < 0) throw std::invalid_argument("factorial_valuation: n must be nonnegative");
    if (!is_prime(p)) throw std::invalid_argument("factorial_valuation: p must be prime");
    std::int64_t total = 0;
    while (n > 0) {
        n /= p;
        total += n;
    }
    return total;
}

std::int64_t binomial_prime_power_valuation(std::int64_t p, std::int64_t a, std::int64_t k) {
    if (!is_prime(p)) throw std::invalid_argument("binomial_prime_power_valuation: p must be prime");
    if (a < 0) throw std::invalid_argument("binomial_prime_power_valuation: a must be nonnegative");
    std::int64_t n = checked_pow(p, a);
    if (k < 1 || k > n)
        throw std::invalid_argument("binomial_prime_power_valuation: k must be in [1, p^a]");
    return factorial_valuation(n, p) - factorial_valuation(k, p) - factorial_valuation(n - k, p);
}

}  // namespace jhopf::modarith

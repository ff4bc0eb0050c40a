#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace porder {

using Int = mpz_class;
using Rat = mpq_class;

// Sentinel for v(0) = +infinity; small enough that sums of a few of them
// never overflow a long.
inline constexpr long kValInf = std::numeric_limits<long>::max() / 8;

inline long to_long(const Int& n) {
    if (!n.fits_slong_p()) throw std::overflow_error("integer does not fit in long: " + n.get_str());
    return n.get_si();
}

inline Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// v_p(n) for n != 0; kValInf for n = 0.
inline long int_valuation(const Int& n, const Int& p) {
    if (n == 0) return kValInf;
    Int m = abs(n);
    long v = 0;
    Int q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        m = q;
        ++v;
    }
    return v;
}

inline bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

/// Rational primes up to limit, by sieve.
inline std::vector<long> sieve_primes(long limit) {
    std::vector<long> out;
    if (limit < 2) return out;
    std::vector<bool> comp(static_cast<size_t>(limit) + 1, false);
    for (long i = 2; i <= limit; ++i) {
        if (comp[static_cast<size_t>(i)]) continue;
        out.push_back(i);
        for (long j = i * i; j <= limit; j += i) comp[static_cast<size_t>(j)] = true;
    }
    return out;
}

struct RationalFactor {
    Int p;
    long e = 0;
};

/// Trial division up to `bound`. The leftover cofactor (if any) is returned
/// in `cofactor`; at desk scale a cofactor below bound^2 is prime.
struct FactorResult {
    std::vector<RationalFactor> factors;  // ascending p
    Int cofactor = 1;                     // 1 when fully factored
};

inline FactorResult factor_trial(Int n, long bound = 1000000) {
    if (n < 0) n = -n;
    if (n == 0) throw std::invalid_argument("factor_trial: zero");
    FactorResult res;
    if (n == 1) return res;
    auto strip = [&](const Int& p) {
        long e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n /= p;
            ++e;
        }
        if (e > 0) res.factors.push_back({p, e});
    };
    strip(2);
    for (Int p = 3; p * p <= n && p <= bound; p += 2) strip(p);
    if (n > 1) {
        if (n <= Int(bound) * Int(bound) || is_probable_prime(n)) {
            // Cofactor is certainly (or probabilistically) prime.
            res.factors.push_back({n, 1});
        } else {
            res.cofactor = n;
        }
    }
    return res;
}

}  // namespace porder

#pragma once

#include <map>
#include <string>
#include <vector>

#include "porder/primeideal.hpp"
#include "porder/quadring.hpp"

namespace porder {

/// Finite map prime ideal -> positive exponent; exponent 0 elsewhere.
struct IdealFactorization {
    std::map<PrimeIdeal, long, PrimeIdealLess> exps;

    void set(const PrimeIdeal& P, long e);
    long exponent(const PrimeIdeal& P) const;
    bool is_unit() const { return exps.empty(); }

    Int norm() const;
    double log_norm() const;

    bool operator==(const IdealFactorization& o) const;

    /// Valuation-wise divisibility: *this | o.
    bool divides(const IdealFactorization& o) const;

    IdealFactorization times(const IdealFactorization& o) const;
    IdealFactorization pow(long k) const;

    std::string str() const;
};

/**
 * Factorization of the principal ideal (x), x != 0.  Support comes from
 * trial division of N(x); a leftover cofactor is a prime beyond the trial
 * bound and is split using x itself as the root witness (theta = -a/b mod p),
 * so no generic sqrt mod p is ever needed.
 */
IdealFactorization factor_element(const QuadRing& R, const QElem& x);

/// Primes above p, where p may exceed the trial bound provided the witness
/// element x with p | N(x) is supplied for root recovery.
std::vector<PrimeIdeal> primes_above(const QuadRing& R, const Int& p, const QElem* witness = nullptr);

/// Union of primes dividing some pairwise difference of the set.
std::vector<PrimeIdeal> difference_support(const QuadRing& R, const std::vector<QElem>& S);

}  // namespace porder

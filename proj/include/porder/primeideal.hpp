#pragma once

#include <string>
#include <vector>

#include "porder/quadring.hpp"

namespace porder {

enum class SplitKind { rational, split, inert, ramified };

std::string to_string(SplitKind k);

/**
 * Prime ideal above a rational prime p.  For split and ramified primes the
 * ideal is (p, theta - root) with minpoly(theta)(root) = 0 mod p; an inert
 * prime is (p) itself.  The rational kind models a prime of Z.
 */
struct PrimeIdeal {
    Int p;
    SplitKind kind = SplitKind::rational;
    Int root;  // meaningful for split/ramified only

    Int norm() const { return kind == SplitKind::inert ? Int(p * p) : p; }

    /// Residue degree f: 2 for inert, else 1.
    int residue_degree() const { return kind == SplitKind::inert ? 2 : 1; }

    /// Ramification index e: 2 for ramified, else 1.
    int ramification_index() const { return kind == SplitKind::ramified ? 2 : 1; }

    std::string str() const;
};

/// Order by (norm, p, root): the deterministic order of the whole toolkit.
bool prime_less(const PrimeIdeal& x, const PrimeIdeal& y);
inline bool prime_eq(const PrimeIdeal& x, const PrimeIdeal& y) {
    return x.p == y.p && x.kind == y.kind && (x.kind != SplitKind::split || x.root == y.root);
}

struct PrimeIdealLess {
    bool operator()(const PrimeIdeal& x, const PrimeIdeal& y) const { return prime_less(x, y); }
};

/// All primes above p: two split, or one inert, or one ramified.
std::vector<PrimeIdeal> split_prime(const QuadRing& R, const Int& p);

/// All prime ideals of norm <= B, each once, ordered by (norm, p, root).
std::vector<PrimeIdeal> primes_up_to_norm(const QuadRing& R, const Int& B);

/// v_P(x); kValInf iff x = 0.  Split primes use Hensel lifting of the root
/// to modulus p^(v_p(N(x))+1), which decides any finite valuation exactly.
long valuation(const QuadRing& R, const PrimeIdeal& P, const QElem& x);

/// Root of minpoly(theta) mod p^k obtained by Newton lifting of P.root.
Int lift_root(const QuadRing& R, const PrimeIdeal& P, long k);

/// Kronecker symbol (disc(R) | p); decides the splitting kind.
int kronecker_disc(const QuadRing& R, const Int& p);

}  // namespace porder

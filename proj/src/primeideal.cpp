#include "porder/primeideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace porder {

std::string to_string(SplitKind k) {
    switch (k) {
        case SplitKind::rational: return "rational";
        case SplitKind::split: return "split";
        case SplitKind::inert: return "inert";
        case SplitKind::ramified: return "ramified";
    }
    return "?";
}

std::string PrimeIdeal::str() const {
    if (kind == SplitKind::rational) return "(" + p.get_str() + ")";
    if (kind == SplitKind::inert) return "(" + p.get_str() + ")";
    return "(" + p.get_str() + ", w-" + root.get_str() + ")";
}

bool prime_less(const PrimeIdeal& x, const PrimeIdeal& y) {
    Int nx = x.norm(), ny = y.norm();
    if (nx != ny) return nx < ny;
    if (x.p != y.p) return x.p < y.p;
    Int rx = (x.kind == SplitKind::split || x.kind == SplitKind::ramified) ? x.root : Int(-1);
    Int ry = (y.kind == SplitKind::split || y.kind == SplitKind::ramified) ? y.root : Int(-1);
    return rx < ry;
}

int kronecker_disc(const QuadRing& R, const Int& p) {
    Int disc = R.discriminant();
    return mpz_kronecker(disc.get_mpz_t(), p.get_mpz_t());
}

namespace {

// minpoly(theta)(x) = x^2 - t*x + n
Int minpoly_at(const QuadRing& R, const Int& x) {
    return x * x - R.theta_trace() * x + R.theta_norm();
}

std::vector<Int> minpoly_roots_mod_p(const QuadRing& R, const Int& p) {
    std::vector<Int> roots;
    for (Int r = 0; r < p; ++r) {
        if (mpz_divisible_p(Int(minpoly_at(R, r)).get_mpz_t(), p.get_mpz_t())) roots.push_back(r);
    }
    return roots;
}

}  // namespace

std::vector<PrimeIdeal> split_prime(const QuadRing& R, const Int& p) {
    if (p < 2 || !is_probable_prime(p)) throw std::invalid_argument("not a prime: " + p.get_str());
    if (R.rational()) return {PrimeIdeal{p, SplitKind::rational, Int(0)}};

    int kr = kronecker_disc(R, p);
    if (kr == -1) return {PrimeIdeal{p, SplitKind::inert, Int(0)}};

    std::vector<Int> roots = minpoly_roots_mod_p(R, p);
    if (kr == 0) {
        if (roots.size() != 1) throw std::logic_error("ramified prime with unexpected root count");
        return {PrimeIdeal{p, SplitKind::ramified, roots.front()}};
    }
    if (roots.size() != 2) throw std::logic_error("split prime with unexpected root count");
    std::vector<PrimeIdeal> out = {PrimeIdeal{p, SplitKind::split, roots[0]},
                                   PrimeIdeal{p, SplitKind::split, roots[1]}};
    return out;
}

std::vector<PrimeIdeal> primes_up_to_norm(const QuadRing& R, const Int& B) {
    std::vector<PrimeIdeal> out;
    if (B < 2) return out;
    long limit = to_long(B);
    std::vector<long> ps = sieve_primes(limit);
    if (R.rational()) {
        for (long p : ps) out.push_back(PrimeIdeal{Int(p), SplitKind::rational, Int(0)});
        return out;
    }
    for (long p : ps) {
        for (auto& P : split_prime(R, Int(p))) {
            if (P.norm() <= B) out.push_back(P);
        }
    }
    std::sort(out.begin(), out.end(), prime_less);
    return out;
}

Int lift_root(const QuadRing& R, const PrimeIdeal& P, long k) {
    if (P.kind != SplitKind::split) throw std::invalid_argument("lift_root: split primes only");
    Int mod = P.p;
    Int r = P.root;
    long have = 1;
    Int t = R.theta_trace(), n = R.theta_norm();
    while (have < k) {
        have = std::min(2 * have, k);
        mod = ipow(P.p, static_cast<unsigned long>(have));
        // Newton step: r <- r - f(r)/f'(r) mod p^have; f'(r) = 2r - t is a
        // unit mod p since the root is simple.
        Int fr = (r * r - t * r + n) % mod;
        Int dfr = (2 * r - t) % mod;
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), dfr.get_mpz_t(), mod.get_mpz_t()) == 0)
            throw std::logic_error("lift_root: derivative not invertible");
        r = (r - fr * inv) % mod;
        if (r < 0) r += mod;
    }
    return r % mod;
}

long valuation(const QuadRing& R, const PrimeIdeal& P, const QElem& x) {
    if (x.is_zero()) return kValInf;
    if (P.kind == SplitKind::rational || R.rational()) {
        if (!R.rational() || P.kind != SplitKind::rational)
            throw std::invalid_argument("valuation: ring/prime mismatch");
        return int_valuation(x.a, P.p);
    }
    Int N = norm(R, x);
    long vN = int_valuation(N, P.p);
    switch (P.kind) {
        case SplitKind::inert:
            if (vN % 2 != 0) throw std::logic_error("odd norm valuation at inert prime");
            return vN / 2;
        case SplitKind::ramified:
            return vN;
        case SplitKind::split: {
            if (vN == 0) return 0;
            long k = vN + 1;
            Int mod = ipow(P.p, static_cast<unsigned long>(k));
            Int r = lift_root(R, P, k);
            Int img = (x.a + x.b * r) % mod;
            if (img < 0) img += mod;
            if (img == 0) throw std::logic_error("split valuation exceeded lifting depth");
            long v = 0;
            while (mpz_divisible_p(img.get_mpz_t(), P.p.get_mpz_t())) {
                img /= P.p;
                ++v;
            }
            return v;
        }
        default:
            throw std::logic_error("valuation: bad kind");
    }
}

}  // namespace porder

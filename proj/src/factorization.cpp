#include "porder/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace porder {

void IdealFactorization::set(const PrimeIdeal& P, long e) {
    if (e < 0) throw std::invalid_argument("negative ideal exponent");
    if (e == 0)
        exps.erase(P);
    else
        exps[P] = e;
}

long IdealFactorization::exponent(const PrimeIdeal& P) const {
    auto it = exps.find(P);
    return it == exps.end() ? 0 : it->second;
}

Int IdealFactorization::norm() const {
    Int n = 1;
    for (const auto& [P, e] : exps) n *= ipow(P.norm(), static_cast<unsigned long>(e));
    return n;
}

double IdealFactorization::log_norm() const {
    double s = 0;
    for (const auto& [P, e] : exps) s += static_cast<double>(e) * std::log(P.norm().get_d());
    return s;
}

bool IdealFactorization::operator==(const IdealFactorization& o) const {
    if (exps.size() != o.exps.size()) return false;
    auto it = exps.begin(), jt = o.exps.begin();
    for (; it != exps.end(); ++it, ++jt) {
        if (!prime_eq(it->first, jt->first) || it->second != jt->second) return false;
    }
    return true;
}

bool IdealFactorization::divides(const IdealFactorization& o) const {
    for (const auto& [P, e] : exps)
        if (e > o.exponent(P)) return false;
    return true;
}

IdealFactorization IdealFactorization::times(const IdealFactorization& o) const {
    IdealFactorization r = *this;
    for (const auto& [P, e] : o.exps) r.set(P, r.exponent(P) + e);
    return r;
}

IdealFactorization IdealFactorization::pow(long k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    IdealFactorization r;
    for (const auto& [P, e] : exps) r.set(P, e * k);
    return r;
}

std::string IdealFactorization::str() const {
    if (exps.empty()) return "(1)";
    std::string s;
    for (const auto& [P, e] : exps) {
        if (!s.empty()) s += "*";
        s += P.str();
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::vector<PrimeIdeal> primes_above(const QuadRing& R, const Int& p, const QElem* witness) {
    if (R.rational()) return {PrimeIdeal{p, SplitKind::rational, Int(0)}};
    if (p <= 1000000) return split_prime(R, p);
    // Beyond the trial bound: recover the theta-root from the witness.
    int kr = kronecker_disc(R, p);
    if (kr == -1) return {PrimeIdeal{p, SplitKind::inert, Int(0)}};
    if (kr == 0) throw std::logic_error("large ramified prime cannot divide the small discriminant");
    if (!witness) throw std::invalid_argument("large split prime needs a witness element");
    // p | N(a + b*theta) with p not dividing b gives theta = -a/b mod p.
    // Strip any p-content first (both coordinates divisible).
    QElem w = *witness;
    while (mpz_divisible_p(w.a.get_mpz_t(), p.get_mpz_t()) && mpz_divisible_p(w.b.get_mpz_t(), p.get_mpz_t())) {
        w.a /= p;
        w.b /= p;
    }
    witness = &w;
    Int bmod = witness->b % p;
    if (bmod < 0) bmod += p;
    if (bmod == 0) throw std::invalid_argument("witness element does not determine a root mod p");
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), bmod.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::logic_error("non-invertible witness coordinate");
    Int r = ((-witness->a % p) + p) * inv % p;
    // Verify and derive the conjugate root r' = trace(theta) - r.
    Int t = R.theta_trace(), n = R.theta_norm();
    Int check = r * r - t * r + n;
    if (!mpz_divisible_p(check.get_mpz_t(), p.get_mpz_t())) throw std::logic_error("witness root failed verification");
    Int r2 = ((t - r) % p + p) % p;
    PrimeIdeal P1{p, SplitKind::split, std::min(r, r2)};
    PrimeIdeal P2{p, SplitKind::split, std::max(r, r2)};
    return {P1, P2};
}

IdealFactorization factor_element(const QuadRing& R, const QElem& x) {
    if (x.is_zero()) throw std::invalid_argument("cannot factor the zero ideal");
    IdealFactorization out;
    Int N = abs(norm(R, x));
    if (N == 1) return out;
    FactorResult f = factor_trial(N);
    if (f.cofactor != 1)
        throw std::invalid_argument("norm has an unfactored composite cofactor: " + f.cofactor.get_str());
    for (const auto& [p, e] : f.factors) {
        for (const auto& P : primes_above(R, p, &x)) {
            long v = valuation(R, P, x);
            if (v > 0) out.set(P, v);
        }
    }
    return out;
}

std::vector<PrimeIdeal> difference_support(const QuadRing& R, const std::vector<QElem>& S) {
    std::set<Int> ps;
    for (size_t i = 0; i < S.size(); ++i) {
        for (size_t j = i + 1; j < S.size(); ++j) {
            QElem d = sub(S[i], S[j]);
            if (d.is_zero()) throw std::invalid_argument("duplicate elements in set");
            Int N = abs(norm(R, d));
            if (N == 1) continue;
            FactorResult f = factor_trial(N);
            if (f.cofactor != 1)
                throw std::invalid_argument("difference norm has unfactored cofactor: " + f.cofactor.get_str());
            for (const auto& [p, e] : f.factors) ps.insert(p);
        }
    }
    std::vector<PrimeIdeal> out;
    for (const Int& p : ps) {
        // Witness: any difference divisible by p.
        const QElem* w = nullptr;
        QElem wd;
        if (p > 1000000) {
            for (size_t i = 0; i < S.size() && !w; ++i)
                for (size_t j = i + 1; j < S.size(); ++j) {
                    QElem d = sub(S[i], S[j]);
                    if (mpz_divisible_p(Int(abs(norm(R, d))).get_mpz_t(), p.get_mpz_t())) {
                        wd = d;
                        w = &wd;
                        break;
                    }
                }
        }
        for (const auto& P : primes_above(R, p, w)) out.push_back(P);
    }
    std::sort(out.begin(), out.end(), prime_less);
    return out;
}

}  // namespace porder

#pragma once

#include <string>
#include <vector>

#include "porder/primeideal.hpp"
#include "porder/quadring.hpp"

namespace porder {

/// Element of the fraction field K = Q(theta): x + y*theta with rational
/// coordinates.  For the rational ring y = 0.
struct KScalar {
    Rat x, y;
    KScalar() : x(0), y(0) {}
    KScalar(Rat x_, Rat y_) : x(std::move(x_)), y(std::move(y_)) {}
    explicit KScalar(const QElem& e) : x(e.a), y(e.b) {}
    bool is_zero() const { return x == 0 && y == 0; }
    bool is_integral() const {
        return x.get_den() == 1 && y.get_den() == 1;
    }
    bool operator==(const KScalar& o) const { return x == o.x && y == o.y; }
};

KScalar kadd(const KScalar& u, const KScalar& v);
KScalar ksub(const KScalar& u, const KScalar& v);
KScalar kmul(const QuadRing& R, const KScalar& u, const KScalar& v);
KScalar kinv(const QuadRing& R, const KScalar& u);
KScalar kdiv(const QuadRing& R, const KScalar& u, const KScalar& v);

std::string format_kscalar(const KScalar& s);

/// v_P extended to K: v(num) - v(den).
long kscalar_valuation(const QuadRing& R, const PrimeIdeal& P, const KScalar& s);

/// Polynomial over K, coefficients ascending by degree, normalized (no
/// trailing zeros; zero polynomial = empty vector).
struct KPoly {
    std::vector<KScalar> c;
    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void normalize();
};

KPoly kpoly_add(const KPoly& f, const KPoly& g);
KPoly kpoly_mul(const QuadRing& R, const KPoly& f, const KPoly& g);
KPoly kpoly_scale(const QuadRing& R, const KScalar& a, const KPoly& f);

/// Monic linear factor X - r.
KPoly kpoly_linear(const QElem& r);

KScalar kpoly_eval(const QuadRing& R, const KPoly& f, const QElem& at);
KScalar kpoly_eval_k(const QuadRing& R, const KPoly& f, const KScalar& at);

std::string format_kpoly(const KPoly& f);

/// Smallest positive integer m with m*f having O_K coefficients.
Int kpoly_denominator(const KPoly& f);

}  // namespace porder

#include "porder/kpoly.hpp"

#include <stdexcept>

namespace porder {

KScalar kadd(const KScalar& u, const KScalar& v) { return KScalar(u.x + v.x, u.y + v.y); }
KScalar ksub(const KScalar& u, const KScalar& v) { return KScalar(u.x - v.x, u.y - v.y); }

KScalar kmul(const QuadRing& R, const KScalar& u, const KScalar& v) {
    if (R.rational()) {
        if (u.y != 0 || v.y != 0) throw std::invalid_argument("theta coordinate over Q");
        return KScalar(u.x * v.x, Rat(0));
    }
    Rat t(R.theta_trace()), n(R.theta_norm());
    Rat yy = u.y * v.y;
    return KScalar(u.x * v.x - n * yy, u.x * v.y + u.y * v.x + t * yy);
}

KScalar kinv(const QuadRing& R, const KScalar& u) {
    if (u.is_zero()) throw std::invalid_argument("division by zero");
    if (R.rational()) return KScalar(1 / u.x, Rat(0));
    // 1/u = conj(u)/N(u)
    Rat t(R.theta_trace()), n(R.theta_norm());
    KScalar conj(u.x + t * u.y, -u.y);
    Rat N = u.x * u.x + t * u.x * u.y + n * u.y * u.y;
    return KScalar(conj.x / N, conj.y / N);
}

KScalar kdiv(const QuadRing& R, const KScalar& u, const KScalar& v) { return kmul(R, u, kinv(R, v)); }

std::string format_kscalar(const KScalar& s) {
    auto rat = [](const Rat& r) { return r.get_str(); };
    if (s.y == 0) return rat(s.x);
    std::string ys = rat(abs(s.y));
    std::string term = (ys == "1") ? "w" : ys + "*w";
    if (s.x == 0) return (s.y < 0 ? "-" : "") + term;
    return rat(s.x) + (s.y < 0 ? "-" : "+") + term;
}

long kscalar_valuation(const QuadRing& R, const PrimeIdeal& P, const KScalar& s) {
    if (s.is_zero()) return kValInf;
    Int da = s.x.get_den(), db = s.y.get_den();
    Int m;
    mpz_lcm(m.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
    QElem num(Int(s.x.get_num() * (m / da)), Int(s.y.get_num() * (m / db)));
    long vm = int_valuation(m, P.p) * (P.kind == SplitKind::ramified ? 2 : 1);
    return valuation(R, P, num) - vm;
}

void KPoly::normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

KPoly kpoly_add(const KPoly& f, const KPoly& g) {
    KPoly r;
    r.c.resize(std::max(f.c.size(), g.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) {
        KScalar a = i < f.c.size() ? f.c[i] : KScalar();
        KScalar b = i < g.c.size() ? g.c[i] : KScalar();
        r.c[i] = kadd(a, b);
    }
    r.normalize();
    return r;
}

KPoly kpoly_mul(const QuadRing& R, const KPoly& f, const KPoly& g) {
    if (f.is_zero() || g.is_zero()) return KPoly{};
    KPoly r;
    r.c.resize(f.c.size() + g.c.size() - 1);
    for (size_t i = 0; i < f.c.size(); ++i)
        for (size_t j = 0; j < g.c.size(); ++j) r.c[i + j] = kadd(r.c[i + j], kmul(R, f.c[i], g.c[j]));
    r.normalize();
    return r;
}

KPoly kpoly_scale(const QuadRing& R, const KScalar& a, const KPoly& f) {
    KPoly r;
    r.c.reserve(f.c.size());
    for (const auto& ci : f.c) r.c.push_back(kmul(R, a, ci));
    r.normalize();
    return r;
}

KPoly kpoly_linear(const QElem& r) {
    KPoly p;
    p.c.push_back(KScalar(Rat(-r.a), Rat(-r.b)));
    p.c.push_back(KScalar(Rat(1), Rat(0)));
    return p;
}

KScalar kpoly_eval_k(const QuadRing& R, const KPoly& f, const KScalar& at) {
    KScalar acc;
    for (size_t i = f.c.size(); i-- > 0;) acc = kadd(kmul(R, acc, at), f.c[i]);
    return acc;
}

KScalar kpoly_eval(const QuadRing& R, const KPoly& f, const QElem& at) {
    return kpoly_eval_k(R, f, KScalar(at));
}

std::string format_kpoly(const KPoly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string coef = format_kscalar(f.c[i]);
        if (i == 0) {
            s += coef;
        } else {
            s += "(" + coef + ")*X" + (i > 1 ? "^" + std::to_string(i) : "");
        }
    }
    return s;
}

Int kpoly_denominator(const KPoly& f) {
    Int m = 1;
    for (const auto& ci : f.c) {
        mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), ci.x.get_den().get_mpz_t());
        mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), ci.y.get_den().get_mpz_t());
    }
    return m;
}

}  // namespace porder

#include "porder/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace porder {

bool ideal_less(const IdealHNF& x, const IdealHNF& y) {
    Int nx = x.norm(), ny = y.norm();
    if (nx != ny) return nx < ny;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
}

IdealHNF parse_ideal(const std::string& s) {
    if (s.rfind("hnf(", 0) != 0 || s.back() != ')') throw std::invalid_argument("bad ideal syntax: " + s);
    std::string body = s.substr(4, s.size() - 5);
    std::vector<Int> parts;
    size_t pos = 0;
    while (true) {
        size_t comma = body.find(',', pos);
        std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        parts.emplace_back(tok);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (parts.size() != 3) throw std::invalid_argument("ideal wants hnf(a,b,c): " + s);
    IdealHNF I(parts[0], parts[1], parts[2]);
    if (I.a <= 0 || I.c <= 0 || I.b < 0 || I.b >= I.a) throw std::invalid_argument("non-normalized hnf: " + s);
    return I;
}

IdealHNF hnf_from_columns(const std::vector<QElem>& cols) {
    // Column HNF of a 2xN coordinate matrix, echelon in the theta row first
    // so the result is [[a, b], [0, c]].
    std::vector<QElem> w;
    for (const auto& x : cols)
        if (!x.is_zero()) w.push_back(x);
    if (w.empty()) throw std::invalid_argument("hnf_from_columns: zero lattice");

    // Step 1: gcd of theta-coordinates into one column by Euclid.
    for (;;) {
        long piv = -1;
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i].b != 0 && (piv < 0 || abs(w[i].b) < abs(w[static_cast<size_t>(piv)].b)))
                piv = static_cast<long>(i);
        if (piv < 0) break;
        bool done = true;
        for (size_t i = 0; i < w.size(); ++i) {
            if (static_cast<long>(i) == piv || w[i].b == 0) continue;
            Int q = w[i].b / w[static_cast<size_t>(piv)].b;
            w[i] = sub(w[i], QElem(q * w[static_cast<size_t>(piv)].a, q * w[static_cast<size_t>(piv)].b));
            if (w[i].b != 0) done = false;
        }
        if (done) {
            if (piv != 0) std::swap(w[0], w[static_cast<size_t>(piv)]);
            break;
        }
    }
    QElem tcol(Int(0), Int(0));
    size_t start = 0;
    if (!w.empty() && w[0].b != 0) {
        tcol = w[0];
        if (tcol.b < 0) tcol = neg(tcol);
        start = 1;
    }
    // Step 2: gcd of the remaining pure-integer columns.
    Int a = 0;
    for (size_t i = start; i < w.size(); ++i) {
        if (w[i].b != 0) throw std::logic_error("hnf: residual theta coordinate");
        Int g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), w[i].a.get_mpz_t());
        a = g;
    }
    if (tcol.b == 0) {
        // Rank-1 lattice is not a (full) ideal of the order.
        throw std::invalid_argument("hnf_from_columns: lattice has rank < 2");
    }
    if (a == 0) throw std::invalid_argument("hnf_from_columns: lattice has rank < 2");
    Int b = tcol.a, c = tcol.b;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
    b -= q * a;
    return IdealHNF(a, b, c);
}

IdealHNF ideal_from_element(const QuadRing& R, const QElem& x) {
    if (x.is_zero()) throw std::invalid_argument("zero ideal");
    if (R.rational()) return IdealHNF(abs(x.a), Int(0), Int(1));
    QElem tx = mul(R, x, QElem(Int(0), Int(1)));
    return hnf_from_columns({x, tx});
}

IdealHNF ideal_mul(const QuadRing& R, const IdealHNF& I, const IdealHNF& J) {
    if (R.rational()) return IdealHNF(I.a * J.a, Int(0), Int(1));
    QElem i1(I.a, Int(0)), i2(I.b, I.c);
    QElem j1(J.a, Int(0)), j2(J.b, J.c);
    return hnf_from_columns({mul(R, i1, j1), mul(R, i1, j2), mul(R, i2, j1), mul(R, i2, j2)});
}

IdealHNF prime_ideal_hnf(const QuadRing& R, const PrimeIdeal& P) {
    if (P.kind == SplitKind::rational) return IdealHNF(P.p, Int(0), Int(1));
    if (P.kind == SplitKind::inert) return IdealHNF(P.p, Int(0), P.p);
    // (p, theta - root): columns p and theta - root generate.
    Int b = ((-P.root) % P.p + P.p) % P.p;
    return IdealHNF(P.p, b, Int(1));
}

IdealHNF prime_power_hnf(const QuadRing& R, const PrimeIdeal& P, long e) {
    if (e < 0) throw std::invalid_argument("negative ideal exponent");
    IdealHNF acc;
    IdealHNF base = prime_ideal_hnf(R, P);
    for (long i = 0; i < e; ++i) acc = ideal_mul(R, acc, base);
    return acc;
}

bool lattice_contains(const IdealHNF& I, const QElem& x) {
    Int s, t;
    return solve_hnf2(I.a, I.b, I.c, x.a, x.b, s, t);
}

bool is_ideal_lattice(const QuadRing& R, const IdealHNF& I) {
    if (I.a <= 0 || I.c <= 0 || I.b < 0 || I.b >= I.a) return false;
    if (R.rational()) return I.c == 1 && I.b == 0;
    QElem theta(Int(0), Int(1));
    QElem c1(I.a, Int(0)), c2(I.b, I.c);
    return lattice_contains(I, mul(R, theta, c1)) && lattice_contains(I, mul(R, theta, c2));
}

std::vector<QElem> residues_mod(const QuadRing& R, const IdealHNF& I) {
    (void)R;
    long a = to_long(I.a), c = to_long(I.c);
    std::vector<QElem> out;
    out.reserve(static_cast<size_t>(a * c));
    for (long y = 0; y < c; ++y)
        for (long x = 0; x < a; ++x) out.push_back(QElem(Int(x), Int(y)));
    return out;
}

QElem reduce_mod(const QElem& x, const IdealHNF& I) {
    Int qy;
    mpz_fdiv_q(qy.get_mpz_t(), x.b.get_mpz_t(), I.c.get_mpz_t());
    Int y = x.b - qy * I.c;
    Int ax = x.a - qy * I.b;
    Int qx;
    mpz_fdiv_q(qx.get_mpz_t(), ax.get_mpz_t(), I.a.get_mpz_t());
    return QElem(ax - qx * I.a, y);
}

std::vector<IdealHNF> ideals_of_norm(const QuadRing& R, const Int& m) {
    if (m <= 0) throw std::invalid_argument("ideal norm must be positive");
    if (m == 1) return {IdealHNF()};
    if (R.rational()) return {IdealHNF(m, Int(0), Int(1))};

    FactorResult f = factor_trial(m);
    if (f.cofactor != 1) throw std::invalid_argument("norm too large to factor: " + m.get_str());

    std::vector<IdealHNF> acc = {IdealHNF()};
    for (const auto& [p, e] : f.factors) {
        std::vector<IdealHNF> local;  // ideals of norm p^e
        std::vector<PrimeIdeal> above = split_prime(R, p);
        if (above[0].kind == SplitKind::inert) {
            if (e % 2 == 0) local.push_back(prime_power_hnf(R, above[0], e / 2));
        } else if (above[0].kind == SplitKind::ramified) {
            local.push_back(prime_power_hnf(R, above[0], e));
        } else {
            for (long i = 0; i <= e; ++i) {
                IdealHNF I = ideal_mul(R, prime_power_hnf(R, above[0], i), prime_power_hnf(R, above[1], e - i));
                local.push_back(I);
            }
        }
        if (local.empty()) return {};
        std::vector<IdealHNF> next;
        for (const auto& x : acc)
            for (const auto& y : local) next.push_back(ideal_mul(R, x, y));
        acc = std::move(next);
    }
    std::sort(acc.begin(), acc.end(), ideal_less);
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    return acc;
}

IdealHNF lattice_intersection(const IdealHNF& I, const IdealHNF& J) {
    // Kernel of [cols(I) | -cols(J)]: x = I s = J t.
    IntMat A(2, 4);
    A.at(0, 0) = I.a; A.at(0, 1) = I.b; A.at(1, 0) = 0; A.at(1, 1) = I.c;
    A.at(0, 2) = -J.a; A.at(0, 3) = -J.b; A.at(1, 2) = 0; A.at(1, 3) = -J.c;
    IntMat K = kernel_columns(A);
    std::vector<QElem> gens;
    for (long j = 0; j < K.cols; ++j) {
        Int s0 = K.at(0, j), s1 = K.at(1, j);
        gens.push_back(QElem(I.a * s0 + I.b * s1, I.c * s1));
    }
    return hnf_from_columns(gens);
}

std::optional<Coset> intersect_cosets(const Coset& x, const Coset& y) {
    // Solve L1 s - L2 t = y.rep - x.rep.
    IntMat A(2, 4);
    A.at(0, 0) = x.lat.a; A.at(0, 1) = x.lat.b; A.at(1, 0) = 0; A.at(1, 1) = x.lat.c;
    A.at(0, 2) = -y.lat.a; A.at(0, 3) = -y.lat.b; A.at(1, 2) = 0; A.at(1, 3) = -y.lat.c;
    QElem rhs = sub(y.rep, x.rep);

    IntMat H = A;
    IntMat U;
    hnf_columns(H, &U);
    // Both lattices have full rank, so H = [[h00,0,0,0],[h10,h11,0,0]].
    if (H.at(0, 0) == 0 || H.at(1, 1) == 0) throw std::logic_error("coset lattice lost rank");
    std::vector<Int> z(4, Int(0));
    if (!mpz_divisible_p(rhs.a.get_mpz_t(), H.at(0, 0).get_mpz_t())) return std::nullopt;
    z[0] = rhs.a / H.at(0, 0);
    Int rem1 = rhs.b - z[0] * H.at(1, 0);
    if (!mpz_divisible_p(rem1.get_mpz_t(), H.at(1, 1).get_mpz_t())) return std::nullopt;
    z[1] = rem1 / H.at(1, 1);
    // Back-transform: w = U z gives [s; t].
    std::vector<Int> w(4, Int(0));
    for (long r = 0; r < 4; ++r)
        for (long c = 0; c < 4; ++c) w[static_cast<size_t>(r)] += U.at(r, c) * z[static_cast<size_t>(c)];
    QElem sol = add(x.rep, QElem(x.lat.a * w[0] + x.lat.b * w[1], x.lat.c * w[1]));

    IdealHNF meet = lattice_intersection(x.lat, y.lat);
    return Coset{reduce_mod(sol, meet), meet};
}

}  // namespace porder

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "porder/factorization.hpp"
#include "porder/primeideal.hpp"
#include "porder/quadring.hpp"

using namespace porder;

TEST_CASE("ring descriptors") {
    QuadRing Z = QuadRing::rationals();
    CHECK(Z.rational());
    CHECK(Z.discriminant() == 1);

    QuadRing Gi = QuadRing::quadratic(-1);
    CHECK(!Gi.half_integer_basis());
    CHECK(Gi.discriminant() == -4);

    QuadRing E = QuadRing::quadratic(-3);
    CHECK(E.half_integer_basis());
    CHECK(E.discriminant() == -3);

    CHECK_THROWS_AS(QuadRing::quadratic(12), std::invalid_argument);  // 4 | 12
    CHECK_THROWS_AS(QuadRing::quadratic(1), std::invalid_argument);
    CHECK_THROWS_AS(QuadRing::quadratic(-4), std::invalid_argument);
}

TEST_CASE("norms") {
    QuadRing Gi = QuadRing::quadratic(-1);
    CHECK(norm(Gi, QElem(Int(1), Int(1))) == 2);
    CHECK(norm(Gi, QElem(Int(0), Int(0))) == 0);

    QuadRing E = QuadRing::quadratic(-3);
    CHECK(norm(E, QElem(Int(0), Int(1))) == 1);  // theta*conj(theta) = (1-d)/4

    QuadRing Z = QuadRing::rationals();
    CHECK(norm(Z, QElem(Int(-7), Int(0))) == -7);
}

TEST_CASE("ring arithmetic") {
    QuadRing Gi = QuadRing::quadratic(-1);
    QElem x(Int(1), Int(1)), y(Int(1), Int(-1));
    CHECK(mul(Gi, x, y) == QElem(Int(2), Int(0)));  // theta^2 = -1
    CHECK(conjugate(Gi, QElem(Int(3), Int(2))) == QElem(Int(3), Int(-2)));
    CHECK(add(x, QElem(Int(0), Int(0))) == x);

    QuadRing E = QuadRing::quadratic(-3);
    // theta^2 = theta - 1 for d = -3
    CHECK(mul(E, QElem(Int(0), Int(1)), QElem(Int(0), Int(1))) == QElem(Int(-1), Int(1)));
    // conj distributes over products
    QElem u(Int(2), Int(3)), v(Int(-1), Int(4));
    CHECK(conjugate(E, mul(E, u, v)) == mul(E, conjugate(E, u), conjugate(E, v)));
}

TEST_CASE("element text format round trip") {
    QuadRing Gi = QuadRing::quadratic(-1);
    for (const char* s : {"0", "5", "-12", "1+w", "3-2*w", "-w", "7*w", "-4-w"}) {
        QElem x = parse_elem(Gi, s);
        CHECK(parse_elem(Gi, format_elem(x)) == x);
    }
    CHECK(format_elem(QElem(Int(3), Int(-2))) == "3-2*w");
    CHECK_THROWS_AS(parse_elem(QuadRing::rationals(), "1+w"), std::invalid_argument);
    CHECK_THROWS_AS(parse_elem(Gi, "abc"), std::invalid_argument);
    CHECK(parse_elem_list(Gi, "0,1,w").size() == 3);
}

TEST_CASE("prime splitting in Z[i]") {
    QuadRing Gi = QuadRing::quadratic(-1);

    auto five = split_prime(Gi, Int(5));
    REQUIRE(five.size() == 2);
    CHECK(five[0].kind == SplitKind::split);
    CHECK(five[0].root == 2);
    CHECK(five[1].root == 3);

    auto three = split_prime(Gi, Int(3));
    REQUIRE(three.size() == 1);
    CHECK(three[0].kind == SplitKind::inert);
    CHECK(three[0].norm() == 9);

    auto two = split_prime(Gi, Int(2));
    REQUIRE(two.size() == 1);
    CHECK(two[0].kind == SplitKind::ramified);

    CHECK_THROWS_AS(split_prime(Gi, Int(6)), std::invalid_argument);
}

TEST_CASE("splitting covers p^2 by norm") {
    // product of norms with ramified multiplicity equals p^2
    std::mt19937_64 rng(7);
    for (long d : {-1L, -2L, -3L, -7L, 5L, 2L}) {
        QuadRing R = QuadRing::quadratic(d);
        for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L}) {
            auto Ps = split_prime(R, Int(p));
            Int prod = 1;
            for (auto& P : Ps) prod *= ipow(P.norm(), static_cast<unsigned long>(P.ramification_index()));
            CHECK(prod == Int(p) * Int(p));
        }
    }
}

TEST_CASE("primes up to norm") {
    QuadRing Gi = QuadRing::quadratic(-1);
    auto ps = primes_up_to_norm(Gi, Int(2));
    REQUIRE(ps.size() == 1);
    CHECK(ps[0].kind == SplitKind::ramified);

    ps = primes_up_to_norm(Gi, Int(5));
    REQUIRE(ps.size() == 3);  // (1+i), two above 5; inert 3 has norm 9
    CHECK(ps[0].norm() == 2);
    CHECK(ps[1].norm() == 5);
    CHECK(ps[2].norm() == 5);

    auto zn = primes_up_to_norm(QuadRing::rationals(), Int(10));
    REQUIRE(zn.size() == 4);
    CHECK(zn[3].p == 7);
}

TEST_CASE("valuations") {
    QuadRing Gi = QuadRing::quadratic(-1);
    auto two = split_prime(Gi, Int(2))[0];
    CHECK(valuation(Gi, two, QElem(Int(2), Int(0))) == 2);  // 2 = -i(1+i)^2
    CHECK(valuation(Gi, two, QElem(Int(0), Int(0))) == kValInf);

    auto five = split_prime(Gi, Int(5));
    // at (5, w-2) the element 2-w has valuation 1
    CHECK(valuation(Gi, five[0], QElem(Int(2), Int(-1))) == 1);
    CHECK(valuation(Gi, five[1], QElem(Int(2), Int(-1))) == 0);

    auto three = split_prime(Gi, Int(3))[0];
    CHECK(valuation(Gi, three, QElem(Int(9), Int(0))) == 2);
}

TEST_CASE("valuation is additive and matches norm decomposition") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> coord(-40, 40);
    for (long d : {-1L, -2L, -3L, -7L, 5L}) {
        QuadRing R = QuadRing::quadratic(d);
        for (int trial = 0; trial < 60; ++trial) {
            QElem x(Int(coord(rng)), Int(coord(rng)));
            QElem y(Int(coord(rng)), Int(coord(rng)));
            if (x.is_zero() || y.is_zero()) continue;
            for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 47L}) {
                auto Ps = split_prime(R, Int(p));
                long vN = int_valuation(abs(norm(R, x)), Int(p));
                long sum = 0;
                for (auto& P : Ps) {
                    long vx = valuation(R, P, x);
                    long vy = valuation(R, P, y);
                    CHECK(valuation(R, P, mul(R, x, y)) == vx + vy);
                    sum += P.residue_degree() * vx;
                }
                // v_p(N(x)) = sum of f * v over the primes above p.
                CHECK(vN == sum);
            }
        }
    }
}

TEST_CASE("factor element recomposes the norm") {
    QuadRing Gi = QuadRing::quadratic(-1);
    QElem x(Int(10), Int(5));  // N = 125
    auto f = factor_element(Gi, x);
    CHECK(f.norm() == 125);

    QuadRing Z = QuadRing::rationals();
    auto g = factor_element(Z, QElem(Int(120), Int(0)));
    CHECK(g.norm() == 120);
    CHECK(g.exps.size() == 3);
}

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "porder/bigint.hpp"

namespace porder {

/**
 * Descriptor of either the rational integers Z or a quadratic order
 * Z[theta] for squarefree d != 0, 1.  For d = 1 mod 4 the maximal order is
 * used, theta = (1+sqrt(d))/2; otherwise theta = sqrt(d).  Z is encoded as
 * d = 0 and rejects (or degrades) quadratic-only operations.
 */
class QuadRing {
public:
    static QuadRing rationals() { return QuadRing(0); }
    static QuadRing quadratic(long d);

    bool rational() const { return d_ == 0; }
    long d() const { return d_; }

    /// theta = (1+sqrt d)/2 iff this holds (d = 1 mod 4).
    bool half_integer_basis() const { return half_; }

    /// Field discriminant: d if d = 1 mod 4, else 4d; 1 for Z.
    Int discriminant() const;

    // Minimal polynomial of theta is x^2 - t*x + n.
    Int theta_trace() const { return half_ ? 1 : 0; }
    Int theta_norm() const { return half_ ? Int((1 - Int(d_)) / 4) : Int(-Int(d_)); }

    bool imaginary() const { return d_ < 0; }

    /// Torsion units; {1,-1} except Z[i] (4) and the d=-3 maximal order (6).
    std::vector<struct QElem> units() const;

    std::string name() const;

    bool operator==(const QuadRing& o) const { return d_ == o.d_; }

private:
    explicit QuadRing(long d) : d_(d), half_(d != 0 && ((d % 4 + 4) % 4 == 1)) {}
    long d_;
    bool half_;
};

/// Ring element a + b*theta; b = 0 always for the rational ring.
struct QElem {
    Int a, b;
    QElem() : a(0), b(0) {}
    QElem(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}
    explicit QElem(long v) : a(v), b(0) {}
    bool operator==(const QElem& o) const { return a == o.a && b == o.b; }
    bool operator!=(const QElem& o) const { return !(*this == o); }
    bool is_zero() const { return a == 0 && b == 0; }
};

/// Deterministic element order used everywhere a canonical choice is needed.
bool elem_less(const QElem& x, const QElem& y);

QElem add(const QElem& x, const QElem& y);
QElem sub(const QElem& x, const QElem& y);
QElem neg(const QElem& x);
QElem mul(const QuadRing& R, const QElem& x, const QElem& y);
QElem conjugate(const QuadRing& R, const QElem& x);
Int norm(const QuadRing& R, const QElem& x);
Int trace(const QuadRing& R, const QElem& x);

/// Text format: decimal integers, or "a+b*w" / "a-b*w" where w is theta.
std::string format_elem(const QElem& x);
QElem parse_elem(const QuadRing& R, const std::string& s);

std::vector<QElem> parse_elem_list(const QuadRing& R, const std::string& s);
std::string format_elem_list(const std::vector<QElem>& xs);

/// Parses "Z" or "d=<squarefree>" ring descriptors.
QuadRing parse_ring(const std::string& s);

}  // namespace porder

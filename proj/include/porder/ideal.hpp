#pragma once

#include <optional>
#include <string>
#include <vector>

#include "porder/intmat.hpp"
#include "porder/primeideal.hpp"
#include "porder/quadring.hpp"

namespace porder {

/**
 * Ideal of the order as a 2x2 upper-triangular lattice basis in the
 * coordinates (1, theta): columns (a, 0) and (b, c), with a, c > 0 and
 * 0 <= b < a.  Norm = a*c.  For the rational ring c = 1 and b = 0.
 */
struct IdealHNF {
    Int a, b, c;
    IdealHNF() : a(1), b(0), c(1) {}
    IdealHNF(Int a_, Int b_, Int c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}
    Int norm() const { return a * c; }
    bool is_unit() const { return a == 1 && c == 1; }
    bool operator==(const IdealHNF& o) const { return a == o.a && b == o.b && c == o.c; }
    std::string str() const { return "hnf(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ")"; }
};

bool ideal_less(const IdealHNF& x, const IdealHNF& y);

IdealHNF parse_ideal(const std::string& s);

/// HNF basis of the lattice spanned by the given coordinate columns.
IdealHNF hnf_from_columns(const std::vector<QElem>& cols);

/// Principal ideal (x), x != 0.
IdealHNF ideal_from_element(const QuadRing& R, const QElem& x);

IdealHNF ideal_mul(const QuadRing& R, const IdealHNF& I, const IdealHNF& J);

IdealHNF prime_ideal_hnf(const QuadRing& R, const PrimeIdeal& P);
IdealHNF prime_power_hnf(const QuadRing& R, const PrimeIdeal& P, long e);

/// Lattice closed under multiplication by theta (the ideal test).
bool is_ideal_lattice(const QuadRing& R, const IdealHNF& I);

bool lattice_contains(const IdealHNF& I, const QElem& x);

/// All N(I) residues in the fundamental box {x + y*theta : 0<=x<a, 0<=y<c}.
std::vector<QElem> residues_mod(const QuadRing& R, const IdealHNF& I);

/// Canonical representative of x inside the box.
QElem reduce_mod(const QElem& x, const IdealHNF& I);

/// All ideals of norm exactly m, deterministically ordered; empty when no
/// ideal of that norm exists (e.g. an inert prime to an odd power).
std::vector<IdealHNF> ideals_of_norm(const QuadRing& R, const Int& m);

/// x = rep + lattice; lattice columns from an IdealHNF.
struct Coset {
    QElem rep;
    IdealHNF lat;
};

IdealHNF lattice_intersection(const IdealHNF& I, const IdealHNF& J);

/// Intersection of two affine cosets, empty when incompatible.  This is the
/// CRT workhorse (no coprimality assumption).
std::optional<Coset> intersect_cosets(const Coset& x, const Coset& y);

}  // namespace porder

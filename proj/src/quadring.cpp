#include "porder/quadring.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace porder {

QuadRing QuadRing::quadratic(long d) {
    if (d == 0 || d == 1) throw std::invalid_argument("quadratic ring needs d != 0, 1");
    Int ad = abs(Int(d));
    for (Int p = 2; p * p <= ad; ++p) {
        if (mpz_divisible_p(ad.get_mpz_t(), Int(p * p).get_mpz_t()))
            throw std::invalid_argument("d must be squarefree: " + std::to_string(d));
    }
    return QuadRing(d);
}

Int QuadRing::discriminant() const {
    if (rational()) return 1;
    return half_ ? Int(d_) : Int(4 * Int(d_));
}

std::string QuadRing::name() const {
    if (rational()) return "Z";
    return "d=" + std::to_string(d_);
}

std::vector<QElem> QuadRing::units() const {
    std::vector<QElem> u = {QElem(Int(1), Int(0)), QElem(Int(-1), Int(0))};
    if (d_ == -1) {
        u.push_back(QElem(Int(0), Int(1)));
        u.push_back(QElem(Int(0), Int(-1)));
    } else if (d_ == -3) {
        // theta = (1+sqrt(-3))/2 is a primitive 6th root of unity.
        u.push_back(QElem(Int(0), Int(1)));
        u.push_back(QElem(Int(0), Int(-1)));
        u.push_back(QElem(Int(-1), Int(1)));
        u.push_back(QElem(Int(1), Int(-1)));
    }
    return u;
}

bool elem_less(const QElem& x, const QElem& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
}

QElem add(const QElem& x, const QElem& y) { return QElem(x.a + y.a, x.b + y.b); }
QElem sub(const QElem& x, const QElem& y) { return QElem(x.a - y.a, x.b - y.b); }
QElem neg(const QElem& x) { return QElem(-x.a, -x.b); }

QElem mul(const QuadRing& R, const QElem& x, const QElem& y) {
    if (R.rational()) {
        if (x.b != 0 || y.b != 0) throw std::invalid_argument("rational ring element with theta part");
        return QElem(x.a * y.a, Int(0));
    }
    // theta^2 = t*theta - n
    Int t = R.theta_trace(), n = R.theta_norm();
    Int bb = x.b * y.b;
    return QElem(x.a * y.a - n * bb, x.a * y.b + x.b * y.a + t * bb);
}

QElem conjugate(const QuadRing& R, const QElem& x) {
    if (R.rational()) return x;
    // conj(theta) = t - theta
    return QElem(x.a + R.theta_trace() * x.b, -x.b);
}

Int norm(const QuadRing& R, const QElem& x) {
    if (R.rational()) return x.a;
    Int t = R.theta_trace(), n = R.theta_norm();
    return x.a * x.a + t * x.a * x.b + n * x.b * x.b;
}

Int trace(const QuadRing& R, const QElem& x) {
    if (R.rational()) return 2 * x.a;
    return 2 * x.a + R.theta_trace() * x.b;
}

std::string format_elem(const QElem& x) {
    if (x.b == 0) return x.a.get_str();
    std::string bs;
    Int ab = abs(x.b);
    if (ab == 1)
        bs = "w";
    else
        bs = ab.get_str() + "*w";
    if (x.a == 0) return (x.b < 0 ? "-" : "") + bs;
    return x.a.get_str() + (x.b < 0 ? "-" : "+") + bs;
}

namespace {

// Grammar: [sign] term {('+'|'-') term}, term = int | [int '*'] 'w'.
QElem parse_elem_impl(const QuadRing& R, const std::string& s) {
    QElem out;
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    if (i == s.size()) throw std::invalid_argument("empty element");
    bool first = true;
    while (true) {
        skip_ws();
        if (i == s.size()) {
            if (first) throw std::invalid_argument("empty element");
            break;
        }
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in element: " + s);
        }
        skip_ws();
        Int coeff = 1;
        bool have_digits = false;
        size_t dig_start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i > dig_start) {
            coeff = Int(s.substr(dig_start, i - dig_start));
            have_digits = true;
        }
        skip_ws();
        bool is_w = false;
        if (i < s.size() && (s[i] == '*' || s[i] == 'w')) {
            if (s[i] == '*') {
                ++i;
                skip_ws();
                if (i >= s.size() || s[i] != 'w') throw std::invalid_argument("expected w after '*': " + s);
            }
            if (i < s.size() && s[i] == 'w') {
                is_w = true;
                ++i;
            }
        }
        if (!have_digits && !is_w) throw std::invalid_argument("malformed element: " + s);
        if (is_w)
            out.b += sign * coeff;
        else
            out.a += sign * coeff;
        first = false;
    }
    if (R.rational() && out.b != 0) throw std::invalid_argument("w is not an element of Z: " + s);
    return out;
}

}  // namespace

QElem parse_elem(const QuadRing& R, const std::string& s) { return parse_elem_impl(R, s); }

std::vector<QElem> parse_elem_list(const QuadRing& R, const std::string& s) {
    std::vector<QElem> out;
    std::string cur;
    std::stringstream ss(s);
    while (std::getline(ss, cur, ',')) out.push_back(parse_elem(R, cur));
    if (out.empty()) throw std::invalid_argument("empty element list");
    return out;
}

std::string format_elem_list(const std::vector<QElem>& xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += format_elem(xs[i]);
    }
    return out;
}

QuadRing parse_ring(const std::string& s) {
    if (s == "Z" || s == "z") return QuadRing::rationals();
    if (s.rfind("d=", 0) == 0) {
        try {
            return QuadRing::quadratic(std::stol(s.substr(2)));
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("bad ring descriptor: " + s);
        }
    }
    throw std::invalid_argument("unknown ring (want Z or d=<squarefree>): " + s);
}

}  // namespace porder

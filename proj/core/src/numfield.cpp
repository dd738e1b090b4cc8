#include "vaw/numfield.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace vaw {

namespace {

using IPoly = std::vector<Integer>;   // constant term first
using QPoly = std::vector<Rational>;  // constant term first

void itrim(IPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; the remainder must vanish.
IPoly idiv(IPoly num, const IPoly& den) {
    IPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Integer(0));
    while (num.size() >= den.size() && !num.empty()) {
        Integer lead = num.back() / den.back();
        size_t shift = num.size() - den.size();
        q[shift] = lead;
        for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= lead * den[j];
        itrim(num);
    }
    if (!num.empty()) throw Error("internal: non-exact polynomial division");
    return q;
}

// Cyclotomic polynomial of order n, via x^n - 1 = prod_{d|n} Phi_d.
IPoly cyclotomic(unsigned n) {
    std::vector<IPoly> phi(n + 1);
    for (unsigned k = 1; k <= n; ++k) {
        if (n % k != 0) continue;
        IPoly num(k + 1, Integer(0));
        num[0] = -1;
        num[k] = 1;
        for (unsigned d = 1; d < k; ++d)
            if (k % d == 0) num = idiv(std::move(num), phi[d]);
        phi[k] = std::move(num);
    }
    return phi[n];
}

Rational ieval(const IPoly& p, const Rational& x) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

int rational_sign(const Rational& q) {
    if (q == 0) return 0;
    return q < 0 ? -1 : 1;
}

// Interval Horner evaluation over a rational bracket.
std::pair<Rational, Rational> interval_eval(const QPoly& p, const Rational& lo, const Rational& hi) {
    Rational a(0), b(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        Rational p1 = a * lo, p2 = a * hi, p3 = b * lo, p4 = b * hi;
        Rational nlo = std::min(std::min(p1, p2), std::min(p3, p4));
        Rational nhi = std::max(std::max(p1, p2), std::max(p3, p4));
        a = nlo + *it;
        b = nhi + *it;
    }
    return {a, b};
}

// Reduce a rational polynomial modulo the (monic, integer) minimal polynomial.
void reduce(QPoly& p, const IPoly& psi) {
    const size_t deg = psi.size() - 1;
    while (p.size() > deg) {
        Rational lead = p.back();
        size_t shift = p.size() - 1 - deg;
        if (lead != 0)
            for (size_t j = 0; j < deg; ++j) p[shift + j] -= lead * Rational(psi[j]);
        p.pop_back();
    }
    p.resize(deg, Rational(0));
}

}  // namespace

std::string rational_str(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational");
    size_t slash = text.find('/');
    auto check_int = [&](const std::string& s) {
        if (s.empty()) throw ParseError("bad rational: '" + text + "'");
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw ParseError("bad rational: '" + text + "'");
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw ParseError("bad rational: '" + text + "'");
    };
    if (slash == std::string::npos) {
        check_int(text);
        return Rational(Integer(text));
    }
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    Integer d(den);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(Integer(num), d);
}

FieldContextPtr FieldContext::make(const std::set<unsigned>& finite_labels) {
    unsigned L = 1;
    for (unsigned m : finite_labels) {
        if (m < 2) throw PreconditionError("Coxeter label must be >= 2");
        L = std::lcm(L, m);
    }
    auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
    ctx->L_ = L;
    if (L == 1) {
        ctx->minpoly_ = {Integer(2), Integer(1)};  // x + 2, theta = -2
        ctx->lo_ = Rational(-3);
        ctx->hi_ = Rational(-1);
        return ctx;
    }

    IPoly phi = cyclotomic(2 * L);
    // The cyclotomic polynomial of order 2L (L >= 2) is palindromic of even
    // degree 2e; collapse it by x = z + 1/z with z^k + z^-k = p_k(x).
    const size_t e = (phi.size() - 1) / 2;
    IPoly psi(e + 1, Integer(0));
    psi[0] = phi[e];
    IPoly pk_prev = {Integer(2)};              // p_0
    IPoly pk = {Integer(0), Integer(1)};       // p_1
    for (size_t j = 1; j <= e; ++j) {
        for (size_t i = 0; i < pk.size(); ++i) psi[i] += phi[e + j] * pk[i];
        if (j == e) break;
        IPoly next(pk.size() + 1, Integer(0));
        for (size_t i = 0; i < pk.size(); ++i) next[i + 1] = pk[i];
        for (size_t i = 0; i < pk_prev.size(); ++i) next[i] -= pk_prev[i];
        pk_prev = std::move(pk);
        pk = std::move(next);
    }
    ctx->minpoly_ = std::move(psi);

    if (e == 1) {
        Rational theta = -Rational(ctx->minpoly_[0]);
        ctx->lo_ = theta - 1;
        ctx->hi_ = theta + 1;
        return ctx;
    }

    // theta = 2cos(pi/L) is the largest root; seed the lower bracket endpoint
    // between theta and the next root down, then certify with exact signs.
    double theta = 2.0 * std::cos(std::numbers::pi / L);
    unsigned k2 = 2;
    while (std::gcd(k2, 2 * L) != 1) ++k2;
    double theta2 = 2.0 * std::cos(k2 * std::numbers::pi / L);
    Rational hi(2);
    for (double f : {0.5, 0.25, 0.75, 0.125}) {
        Rational lo(theta2 + (theta - theta2) * f);
        if (rational_sign(ieval(ctx->minpoly_, lo)) * rational_sign(ieval(ctx->minpoly_, hi)) < 0) {
            ctx->lo_ = lo;
            ctx->hi_ = hi;
            return ctx;
        }
    }
    throw Error("internal: failed to certify the isolating bracket");
}

FieldElement FieldElement::zero(const FieldContextPtr& ctx) {
    return FieldElement(ctx, std::vector<Rational>(ctx->degree(), Rational(0)));
}

FieldElement FieldElement::one(const FieldContextPtr& ctx) { return integer(ctx, 1); }

FieldElement FieldElement::integer(const FieldContextPtr& ctx, long n) {
    return rational(ctx, Rational(n));
}

FieldElement FieldElement::rational(const FieldContextPtr& ctx, const Rational& q) {
    std::vector<Rational> c(ctx->degree(), Rational(0));
    c[0] = q;
    return FieldElement(ctx, std::move(c));
}

FieldElement FieldElement::theta(const FieldContextPtr& ctx) {
    if (ctx->degree() == 1) {
        // theta is rational here: x + c0 = 0 at theta = -c0
        return rational(ctx, -Rational(ctx->minimal_polynomial()[0]));
    }
    std::vector<Rational> c(ctx->degree(), Rational(0));
    c[1] = 1;
    return FieldElement(ctx, std::move(c));
}

FieldElement FieldElement::from_coefficients(const FieldContextPtr& ctx, std::vector<Rational> coeffs) {
    if (coeffs.size() != ctx->degree())
        throw PreconditionError("coefficient vector does not match the field degree");
    return FieldElement(ctx, std::move(coeffs));
}

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool FieldElement::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational FieldElement::rational_value() const {
    if (!is_rational()) throw PreconditionError("field element is irrational");
    return c_[0];
}

namespace {
void check_ctx(const FieldElement& a, const FieldElement& b) {
    if (!a.context()->same_field(*b.context()))
        throw PreconditionError("field elements from different contexts");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_ctx(*this, o);
    std::vector<Rational> c(c_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
    return FieldElement(ctx_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_ctx(*this, o);
    std::vector<Rational> c(c_);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
    return FieldElement(ctx_, std::move(c));
}

FieldElement FieldElement::operator-() const {
    std::vector<Rational> c(c_);
    for (auto& q : c) q = -q;
    return FieldElement(ctx_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_ctx(*this, o);
    const size_t d = c_.size();
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (size_t i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < d; ++j)
            if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
    }
    reduce(prod, ctx_->minimal_polynomial());
    return FieldElement(ctx_, std::move(prod));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw PreconditionError("inversion of zero");
    const auto& psi = ctx_->minimal_polynomial();
    // Extended Euclid in Q[x]: find u with u*a == 1 modulo the minimal
    // polynomial (which is irreducible, so the gcd is a unit).
    QPoly r0(psi.size());
    for (size_t i = 0; i < psi.size(); ++i) r0[i] = Rational(psi[i]);
    QPoly r1(c_);
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    QPoly s0 = {}, s1 = {Rational(1)};
    auto qtrim = [](QPoly& p) { while (!p.empty() && p.back() == 0) p.pop_back(); };
    while (r1.size() > 1) {
        // divide r0 by r1
        QPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rational(0));
        QPoly rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rational lead = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] = lead;
            for (size_t j = 0; j < r1.size(); ++j) rem[shift + j] -= lead * r1[j];
            qtrim(rem);
        }
        // s_next = s0 - q * s1
        QPoly snext = s0;
        snext.resize(std::max(snext.size(), q.size() + s1.size()), Rational(0));
        for (size_t i = 0; i < q.size(); ++i)
            if (q[i] != 0)
                for (size_t j = 0; j < s1.size(); ++j) snext[i + j] -= q[i] * s1[j];
        qtrim(snext);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snext);
        if (r1.empty()) throw Error("internal: gcd degenerated in field inversion");
    }
    Rational unit = r1[0];
    QPoly u = std::move(s1);
    for (auto& q : u) q /= unit;
    reduce(u, psi);
    return FieldElement(ctx_, std::move(u));
}

bool FieldElement::operator==(const FieldElement& o) const {
    return ctx_->same_field(*o.ctx_) && c_ == o.c_;
}

int FieldElement::sign() const {
    if (is_zero()) return 0;
    if (is_rational()) return rational_sign(c_[0]);
    const auto& psi = ctx_->minimal_polynomial();
    auto [lo, hi] = ctx_->bracket();
    int slo = rational_sign(ieval(psi, lo));
    // A nonzero reduced residue has nonzero value (its degree is below the
    // minimal polynomial's), so the bisection terminates.
    for (;;) {
        auto [vlo, vhi] = interval_eval(c_, lo, hi);
        if (vlo > 0) return 1;
        if (vhi < 0) return -1;
        Rational mid = (lo + hi) / 2;
        int smid = rational_sign(ieval(psi, mid));
        if (smid == 0) throw Error("internal: rational root of an irreducible polynomial");
        if (slo * smid < 0) {
            hi = mid;
        } else {
            lo = mid;
            slo = smid;
        }
    }
}

std::string FieldElement::str() const {
    if (is_rational()) return rational_str(c_[0]);
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        Rational q = c_[k];
        if (first) {
            first = false;
            if (q < 0) {
                os << '-';
                q = -q;
            }
        } else {
            os << (q < 0 ? " - " : " + ");
            if (q < 0) q = -q;
        }
        if (k == 0) {
            os << rational_str(q);
        } else {
            os << rational_str(q) << "*x";
            if (k > 1) os << '^' << k;
        }
    }
    os << ')';
    return os.str();
}

int FieldElement::compare_structural(const FieldElement& a, const FieldElement& b) {
    for (size_t i = 0; i < a.c_.size() && i < b.c_.size(); ++i) {
        if (a.c_[i] < b.c_[i]) return -1;
        if (b.c_[i] < a.c_[i]) return 1;
    }
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size() ? -1 : 1;
    return 0;
}

FieldElement coxeter_value(Label m, const FieldContextPtr& ctx) {
    if (m.is_infinite()) return FieldElement::integer(ctx, -2);
    unsigned mv = m.value();
    if (mv < 2) throw PreconditionError("coxeter_value needs a label >= 2");
    if (mv == 2) return FieldElement::zero(ctx);  // cos(pi/2) needs no extension
    if (ctx->order() % mv != 0)
        throw PreconditionError("label " + std::to_string(mv) + " does not divide the field order " +
                                std::to_string(ctx->order()));
    // -2cos(pi/m) = -p_k(theta) with k = L/m, via 2cos(k a) = p_k(2cos a).
    unsigned k = ctx->order() / mv;
    FieldElement prev = FieldElement::integer(ctx, 2);
    FieldElement cur = FieldElement::theta(ctx);
    if (k == 0) throw PreconditionError("label exceeds the field order");
    for (unsigned i = 1; i < k; ++i) {
        FieldElement next = FieldElement::theta(ctx) * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return -cur;
}

FieldElement parse_field_element(const std::string& text, const FieldContextPtr& ctx) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty field element");
    if (s.front() == '(') {
        if (s.back() != ')') throw ParseError("unbalanced parentheses in '" + text + "'");
        s = s.substr(1, s.size() - 2);
    }
    if (s.empty()) throw ParseError("empty field element");
    std::vector<Rational> c(ctx->degree(), Rational(0));
    size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        int sgn = 1;
        if (s[i] == '+' || s[i] == '-') {
            sgn = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw ParseError("expected '+' or '-' in '" + text + "'");
        }
        first = false;
        size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        i = j;
        if (term.empty()) throw ParseError("empty term in '" + text + "'");
        Rational coeff(1);
        unsigned power = 0;
        size_t star = term.find('*');
        std::string numpart = term, xpart;
        if (star != std::string::npos) {
            numpart = term.substr(0, star);
            xpart = term.substr(star + 1);
        } else if (term[0] == 'x') {
            numpart = "1";
            xpart = term;
        }
        coeff = parse_rational(numpart);
        if (!xpart.empty()) {
            if (xpart[0] != 'x') throw ParseError("bad term '" + term + "'");
            if (xpart.size() == 1) {
                power = 1;
            } else {
                if (xpart[1] != '^') throw ParseError("bad term '" + term + "'");
                power = static_cast<unsigned>(std::stoul(xpart.substr(2)));
            }
        }
        if (power >= ctx->degree())
            throw ParseError("power x^" + std::to_string(power) + " exceeds the field degree");
        c[power] += sgn * coeff;
    }
    return FieldElement::from_coefficients(ctx, std::move(c));
}

}  // namespace vaw

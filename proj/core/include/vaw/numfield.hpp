#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vaw/label.hpp"

namespace vaw {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string rational_str(const Rational& q);
Rational parse_rational(const std::string& text);

class FieldContext;
using FieldContextPtr = std::shared_ptr<const FieldContext>;

/// The real number field Q(theta), theta = 2cos(pi/L), where L is the lcm of
/// the finite Coxeter labels of a graph (L = 1 when there are none).  Elements
/// are reduced residues modulo the minimal polynomial of theta, so structural
/// equality is field equality.
class FieldContext {
public:
    /// Every label must be finite and >= 2.  The empty set gives L = 1 and the
    /// field degenerates to the rationals (theta = -2).
    static FieldContextPtr make(const std::set<unsigned>& finite_labels);

    unsigned order() const { return L_; }
    unsigned degree() const { return static_cast<unsigned>(minpoly_.size() - 1); }
    /// Minimal polynomial of theta; integer coefficients, monic, constant term first.
    const std::vector<Integer>& minimal_polynomial() const { return minpoly_; }
    /// Rational bracket isolating theta among the roots of the minimal polynomial.
    std::pair<Rational, Rational> bracket() const { return {lo_, hi_}; }

    bool same_field(const FieldContext& o) const {
        return L_ == o.L_ && minpoly_ == o.minpoly_;
    }

private:
    FieldContext() = default;
    unsigned L_ = 1;
    std::vector<Integer> minpoly_;
    Rational lo_, hi_;
};

class FieldElement {
public:
    static FieldElement zero(const FieldContextPtr& ctx);
    static FieldElement one(const FieldContextPtr& ctx);
    static FieldElement integer(const FieldContextPtr& ctx, long n);
    static FieldElement rational(const FieldContextPtr& ctx, const Rational& q);
    static FieldElement theta(const FieldContextPtr& ctx);
    /// Builds the element directly from residue coefficients (must already be
    /// reduced, i.e. size == degree).
    static FieldElement from_coefficients(const FieldContextPtr& ctx, std::vector<Rational> coeffs);

    const FieldContextPtr& context() const { return ctx_; }
    const std::vector<Rational>& coefficients() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Value as a rational; only valid when is_rational().
    Rational rational_value() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Exact sign of the real value: -1, 0 or +1.  Zero is the zero residue;
    /// otherwise the isolating bracket is bisected until interval evaluation
    /// decides.
    int sign() const;

    /// Renders `(c0 + c1*x + ... )` with rationals in lowest terms, where x
    /// denotes theta; plain rational when the element lies in Q.
    std::string str() const;

    /// Structural order (lexicographic on coefficients), used for dedup keys.
    /// This is not the numeric order of the real values.
    static int compare_structural(const FieldElement& a, const FieldElement& b);

private:
    FieldElement(FieldContextPtr ctx, std::vector<Rational> c)
        : ctx_(std::move(ctx)), c_(std::move(c)) {}
    FieldContextPtr ctx_;
    std::vector<Rational> c_;
};

/// -2cos(pi/m) as an exact field element; -2 for the infinite label.  Finite
/// labels must divide the context order L.
FieldElement coxeter_value(Label m, const FieldContextPtr& ctx);

/// Parses the textual rendering produced by FieldElement::str().
FieldElement parse_field_element(const std::string& text, const FieldContextPtr& ctx);

}  // namespace vaw

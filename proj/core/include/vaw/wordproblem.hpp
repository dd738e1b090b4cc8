#pragma once

#include <string>
#include <vector>

#include "vaw/presentation.hpp"

namespace vaw {

enum class Verdict { trivial, nontrivial, unsupported };
std::string verdict_str(Verdict v);

/// Word over the generators of a component, as (local generator index, +-1).
using SignedWord = std::vector<std::pair<int, int>>;

/// Left-greedy Garside normal form Delta^inf x_1 ... x_r of an element of a
/// spherical-type Artin group; factors are elements of the finite Coxeter
/// group, consecutive factors left-weighted.
struct GarsideForm {
    int inf = 0;
    std::vector<WElement> factors;

    bool trivial() const { return inf == 0 && factors.empty(); }
    bool equal(const GarsideForm& o) const;
    std::string str() const;
};

struct ComponentOutcome {
    std::vector<int> vertices;       // indices into the ambient vertex set
    std::vector<std::string> roots;  // rendered root coordinates
    Kind kind;
    std::string family;
    std::string tier;  // "free" | "spherical" | "raag" | "unsupported"
    Verdict verdict;
    std::string certificate;
};

struct SolveOutcome {
    Verdict verdict;
    std::string reason;   // set when unsupported
    std::string warning;  // set when the base graph falls outside the supported hypotheses
    std::string detail;   // e.g. the nontrivial tau-image
    std::vector<ComponentOutcome> components;
};

/// Splits the support along the commuting pairs (label 2): the word is
/// trivial iff every component projection is.  Returns, per component, the
/// vertex indices and the projected word in component-local indices.
std::vector<std::pair<std::vector<int>, SignedWord>> component_split(const GammaHat& h,
                                                                     const KernelWord& k);

/// Normal form in the Artin group of a spherical component.  The component
/// graph must classify spherical (hence all labels finite).
GarsideForm garside_normal_form(const GraphPtr& component, const SignedWord& word);

/// Concatenation of two normal forms, renormalized.
GarsideForm garside_product(const GraphPtr& component, const GarsideForm& a, const GarsideForm& b);

/// Shuffle normal form in a right-angled Artin group (labels 2 and infinity
/// only): free cancellation across commuting letters, then commuting
/// transpositions to the lexicographically least stable word.
SignedWord raag_normal_form(const LabelMatrix& labels, const SignedWord& word);

/// Per-component dispatch: free reduction first, then the spherical Garside
/// tier or the {2,infinity} shuffle tier; anything else is reported
/// unsupported rather than guessed.
SolveOutcome artin_solve(const GammaHat& h, const KernelWord& k);

/// Word problem for the full group: a word with nontrivial tau-image is
/// nontrivial; otherwise it is rewritten into the kernel generators and
/// dispatched per support component.
SolveOutcome va_solve(const GraphPtr& g, const VAWord& w, const MhatOracle& oracle);

}  // namespace vaw

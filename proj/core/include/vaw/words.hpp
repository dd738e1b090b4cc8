#pragma once

#include <string>
#include <vector>

#include "vaw/roots.hpp"

namespace vaw {

enum class LetterKind { sigma, tau };

struct VALetter {
    LetterKind kind;
    int vertex;
    int exp;  // +1 or -1; tau letters are normalized to +1
};

/// A word over the generators sigma_s, tau_s and their inverses.
class VAWord {
public:
    explicit VAWord(GraphPtr g) : g_(std::move(g)) {}

    /// Whitespace-separated tokens `s:<v>` / `t:<v>`, optional suffix `^-1`.
    static VAWord parse(const GraphPtr& g, const std::string& text);

    const GraphPtr& graph() const { return g_; }
    const std::vector<VALetter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }

    void push(LetterKind kind, int vertex, int exp);
    VAWord operator*(const VAWord& o) const;
    VAWord inverse() const;
    std::string str() const;

private:
    GraphPtr g_;
    std::vector<VALetter> letters_;
};

/// Projection killing the sigma letters (sigma -> 1, tau -> s).
WElement pi_K(const VAWord& w);
/// Projection identifying both kinds with the Coxeter generator.
WElement pi_P(const VAWord& w);

/// tau-word section of the Coxeter group.
VAWord iota_W(const GraphPtr& g, const Word& word);
/// sigma-word image of a signed word over S.
VAWord iota_A(const GraphPtr& g, const std::vector<std::pair<int, int>>& signed_word);

struct KernelLetter {
    Root root;
    int exp;  // +1 or -1
};

/// A word over the root-indexed kernel generators, with its support and the
/// derived Coxeter labels on the support.
class KernelWord {
public:
    KernelWord(GraphPtr g, std::vector<KernelLetter> letters, std::vector<Root> support,
               std::vector<std::vector<MHatEntry>> labels)
        : g_(std::move(g)),
          letters_(std::move(letters)),
          support_(std::move(support)),
          labels_(std::move(labels)) {}

    const GraphPtr& graph() const { return g_; }
    const std::vector<KernelLetter>& letters() const { return letters_; }
    /// Distinct roots in order of first occurrence.
    const std::vector<Root>& support() const { return support_; }
    const std::vector<std::vector<MHatEntry>>& labels() const { return labels_; }
    int support_index(const Vec& coords) const;

    std::string str() const;

private:
    GraphPtr g_;
    std::vector<KernelLetter> letters_;
    std::vector<Root> support_;
    std::vector<std::vector<MHatEntry>> labels_;
};

/// Rewrites a kernel word into root-indexed generators: splitting at the
/// sigma letters, the i-th letter becomes (beta_i, eps_i) with beta_i the
/// image of alpha_{s_i} under the product of the tau-prefix.  Throws
/// PreconditionError when the word does not project to the identity, and
/// UndeterminedLabelError when a support label cannot be decided.
KernelWord kernel_rewrite(const VAWord& w, const MhatOracle& oracle);

/// The action w . delta_beta = delta_{w(beta)} extended letterwise.
KernelWord w_action(const WElement& w, const KernelWord& k, const MhatOracle& oracle);

/// Expansion delta_beta = iota_W(u) sigma_s^e iota_W(u)^-1 using each root's
/// recorded witness.
VAWord expand_kernel(const KernelWord& k);

}  // namespace vaw

#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "vaw/numfield.hpp"

namespace vaw {

using Word = std::vector<int>;  // vertex indices
using Vec = std::vector<FieldElement>;
using LabelMatrix = std::vector<std::vector<Label>>;

class CoxeterGraph;
using GraphPtr = std::shared_ptr<const CoxeterGraph>;

/// A Coxeter graph: ordered vertices plus the symmetric label matrix, with the
/// number field generated by the finite labels attached.
class CoxeterGraph {
public:
    /// labels must be symmetric, with 1 on the diagonal and entries >= 2 (or
    /// infinite) elsewhere.
    static GraphPtr make(std::vector<std::string> names, LabelMatrix labels);

    /// Line- or ';'-separated stanzas, '#' comments:
    ///   vertices <name>...
    ///   edge <a> <b> <m|inf>
    ///   family <code> <n>     code in {A,B,D,E,F,H,I2,tA,tB,tC,tD,tE,tF,tG}
    /// Unlisted pairs default to label 2; repeated stanzas build disjoint
    /// unions; family vertices are named s1, s2, ... continuing the count.
    static GraphPtr parse(const std::string& text);

    int rank() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& vertex_name(int s) const { return names_[static_cast<size_t>(s)]; }
    int vertex(const std::string& name) const;  // throws ParseError when unknown

    Label label(int s, int t) const { return m_[static_cast<size_t>(s)][static_cast<size_t>(t)]; }
    const LabelMatrix& labels() const { return m_; }

    const FieldContextPtr& context() const { return ctx_; }
    /// Canonical bilinear form on the simple roots: 2 on the diagonal,
    /// -2cos(pi/m) off it (-2 for infinite labels).
    const std::vector<Vec>& gram() const { return gram_; }

    bool simply_laced() const;
    /// Off-diagonal finite labels >= 3 (the ones generating the number field).
    std::set<unsigned> field_labels() const;
    /// All off-diagonal finite labels, 2 included.
    std::set<unsigned> finite_label_set() const;

    /// Connected components under the edges with label != 2.
    std::vector<std::vector<int>> components() const;

    bool same_graph(const CoxeterGraph& o) const;
    std::string str() const;

private:
    CoxeterGraph() = default;
    std::vector<std::string> names_;
    LabelMatrix m_;
    FieldContextPtr ctx_;
    std::vector<Vec> gram_;
};

Vec simple_root(const GraphPtr& g, int s);
Vec zero_vector(const GraphPtr& g);
FieldElement inner(const GraphPtr& g, const Vec& u, const Vec& v);
/// s(v) = v - <v, alpha_s> alpha_s.
Vec generator_action(const GraphPtr& g, int s, const Vec& v);
std::string vec_str(const Vec& v);
Vec parse_vec(const std::string& text, const GraphPtr& g);

/// An element of the Coxeter group in the canonical linear representation,
/// together with a witness word (not necessarily reduced).
class WElement {
public:
    static WElement identity(const GraphPtr& g);
    static WElement generator(const GraphPtr& g, int s);

    const GraphPtr& graph() const { return g_; }
    /// column(j) = image of the j-th simple root, in the basis of simple roots.
    const Vec& column(int j) const { return cols_[static_cast<size_t>(j)]; }
    Vec apply(const Vec& v) const;

    WElement operator*(const WElement& o) const;
    WElement inverse() const;

    bool is_identity() const;
    bool operator==(const WElement& o) const;
    bool operator!=(const WElement& o) const { return !(*this == o); }

    const Word& witness() const { return witness_; }
    WElement with_witness(Word w) const;

    /// Canonical dedup key derived from the matrix entries.
    std::string key() const;

private:
    WElement(GraphPtr g, std::vector<Vec> cols, Word wit)
        : g_(std::move(g)), cols_(std::move(cols)), witness_(std::move(wit)) {}
    GraphPtr g_;
    std::vector<Vec> cols_;
    Word witness_;
};

WElement element_of_word(const GraphPtr& g, const Word& word);
bool w_equal(const WElement& a, const WElement& b);

/// Word length via the descent walk; also recovers a reduced word.
Word reduced_word(const WElement& w);
unsigned length(const WElement& w);

/// The longest element of a finite Coxeter group, by the ascent walk from the
/// identity.  Requires a spherical graph.
WElement longest_element(const GraphPtr& g);

/// Breadth-first closure of the Cayley graph in ShortLex order; throws
/// CapExceededError when more than cap elements appear.
std::vector<WElement> enumerate_group(const GraphPtr& g, std::size_t cap);

enum class Side { left, right };

/// Alternating products: side=left gives aba... of length m, side=right gives
/// ...aba of length m (ending with a).
template <typename T>
std::vector<T> alternating_product(const T& a, const T& b, unsigned m, Side side) {
    std::vector<T> out;
    out.reserve(m);
    for (unsigned i = 0; i < m; ++i) {
        unsigned parity = (side == Side::left) ? i % 2 : (m - 1 - i) % 2;
        out.push_back(parity == 0 ? a : b);
    }
    return out;
}

enum class Kind { spherical, affine, other };
std::string kind_str(Kind k);

struct FormType {
    Kind kind;  // spherical = positive definite, affine = positive semidefinite with kernel
    int rank;
};

/// Exact definiteness of a symmetric matrix over the field, by symmetric
/// Gaussian elimination with pivot-sign bookkeeping.
FormType classify_form(const std::vector<Vec>& a);

struct GraphComponent {
    std::vector<int> vertices;
    Kind kind;
    std::string family;  // catalog name when matched, else empty
};

struct Classification {
    Kind kind;
    std::vector<GraphComponent> components;
};

Classification classify(const GraphPtr& g);

/// Label matrix of a named family; throws ParseError for unknown codes or
/// ranks outside the family's range.
std::pair<std::vector<std::string>, LabelMatrix> family_graph(const std::string& code, unsigned n);

/// Catalog name of a connected label matrix (spherical and affine families,
/// up to 10 vertices); empty string when no catalog entry matches.
std::string match_family(const LabelMatrix& labels);

}  // namespace vaw

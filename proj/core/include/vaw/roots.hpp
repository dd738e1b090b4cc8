#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vaw/coxeter.hpp"

namespace vaw {

struct RootWitness {
    Word word;   // w with w(alpha_simple) = coords
    int simple;  // vertex index
};

/// A root: an exact coordinate vector over the simple roots, plus a witness
/// pair.  Coordinates are all-nonnegative or all-nonpositive.
class Root {
public:
    Root(Vec coords, RootWitness wit) : coords_(std::move(coords)), wit_(std::move(wit)) {}

    const Vec& coords() const { return coords_; }
    const RootWitness& witness() const { return wit_; }

    std::string str() const { return vec_str(coords_); }
    bool same_coords(const Root& o) const;

private:
    Vec coords_;
    RootWitness wit_;
};

/// True when every coordinate is >= 0; throws on mixed signs (which would
/// violate the positive/negative dichotomy of roots).
bool is_positive(const Root& beta);

/// -beta, with the witness extended by one letter ((w s)(alpha_s) = -beta).
Root negate_root(const GraphPtr& g, const Root& beta);

/// simple root alpha_s as a Root.
Root simple_as_root(const GraphPtr& g, int s);

class RootSystem {
public:
    /// Orbit closure of the simple roots under the generator actions, BFS by
    /// witness length.  depth == nullopt requires a spherical graph and
    /// returns the complete system; otherwise all roots with witness length
    /// <= depth are returned, completed under negation.  cap bounds the
    /// number of roots.
    static RootSystem enumerate(const GraphPtr& g, std::optional<unsigned> depth,
                                std::size_t cap = 1u << 20);

    const GraphPtr& graph() const { return g_; }
    const std::vector<Root>& roots() const { return roots_; }
    bool complete() const { return complete_; }
    std::optional<unsigned> depth() const { return depth_; }

    /// Index of a root with the given coordinates, or -1.
    int find(const Vec& coords) const;

private:
    RootSystem() = default;
    GraphPtr g_;
    std::vector<Root> roots_;
    std::map<std::string, int> index_;
    bool complete_ = false;
    std::optional<unsigned> depth_;
};

/// r_beta = w s w^-1 as a group element; its matrix is the reflection
/// v -> v - <v,beta> beta.
WElement reflection_of_root(const GraphPtr& g, const Root& beta);

/// Membership test by bounded orbit search: finds a witness for the given
/// coordinate vector, searching the orbit of the simple roots.
std::optional<Root> find_root(const GraphPtr& g, const Vec& coords, unsigned depth,
                              std::size_t cap = 1u << 20);

/// For finite groups: every W-image of a simple pair {alpha_s, alpha_t} with
/// finite label, mapped to that label.  Label collisions are impossible (the
/// pairing value determines the label) and are asserted against.
class PairOrbitTable {
public:
    static PairOrbitTable build(const GraphPtr& g, std::size_t cap = 1u << 20);

    std::optional<unsigned> find(const Vec& beta, const Vec& gamma) const;
    std::size_t size() const { return entries_.size(); }
    const std::map<std::pair<std::string, std::string>, unsigned>& entries() const {
        return entries_;
    }

private:
    std::map<std::pair<std::string, std::string>, unsigned> entries_;
};

/// Derived Coxeter label of a root pair.
///
/// 1 on the diagonal; otherwise the pairing <beta,gamma> is screened against
/// the interval ]-2,0] (outside: infinity), the simply laced closed form is
/// applied when available, and otherwise membership of {beta,gamma} in the
/// orbit of a simple pair is decided: exhaustively via the pair-orbit table
/// when the group is finite, by breadth-first search over pair images up to
/// search_depth otherwise (undetermined(depth) when the search is
/// inconclusive).
MHatEntry mhat(const GraphPtr& g, const Root& beta, const Root& gamma, unsigned search_depth,
               const PairOrbitTable* table = nullptr);

/// Bundles a graph with whatever the derived-label computation needs: the
/// exhaustive pair-orbit table when the group is finite, the search depth
/// otherwise.
class MhatOracle {
public:
    explicit MhatOracle(GraphPtr g, unsigned search_depth = 8, std::size_t cap = 1u << 20);

    const GraphPtr& graph() const { return g_; }
    unsigned search_depth() const { return depth_; }
    bool finite_group() const { return table_.has_value(); }
    const PairOrbitTable* table() const { return table_ ? &*table_ : nullptr; }

    MHatEntry operator()(const Root& beta, const Root& gamma) const {
        return mhat(g_, beta, gamma, depth_, table());
    }

private:
    GraphPtr g_;
    unsigned depth_;
    std::optional<PairOrbitTable> table_;
};

}  // namespace vaw

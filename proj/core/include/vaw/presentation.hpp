#pragma once

#include <string>
#include <vector>

#include "vaw/words.hpp"

namespace vaw {

/// The derived Coxeter graph restricted to a finite root set X: vertices are
/// roots, labels the derived Coxeter matrix entries.  No undetermined entries
/// are allowed here; construction fails instead.
class GammaHat {
public:
    static GammaHat build(const GraphPtr& base, std::vector<Root> verts, const MhatOracle& oracle);
    /// Reuses the support and labels already attached to a kernel word.
    static GammaHat from_kernel(const KernelWord& k);

    const GraphPtr& base() const { return base_; }
    int size() const { return static_cast<int>(verts_.size()); }
    const std::vector<Root>& vertices() const { return verts_; }
    const Root& vertex(int i) const { return verts_[static_cast<size_t>(i)]; }
    MHatEntry label(int i, int j) const { return labels_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    const std::vector<std::vector<MHatEntry>>& labels() const { return labels_; }

    GammaHat restrict_to(const std::vector<int>& sub) const;
    LabelMatrix label_matrix() const;
    /// The restriction as a plain Coxeter graph, vertices named by their root
    /// coordinates.
    GraphPtr as_coxeter_graph() const;
    FormType form_type() const;
    Classification classification() const;

private:
    GammaHat() = default;
    GraphPtr base_;
    std::vector<Root> verts_;
    std::vector<std::vector<MHatEntry>> labels_;
};

struct Presentation {
    std::vector<std::string> generators;
    /// Relation words as generator indices, lhs = rhs.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> relations;
    std::string word_str(const std::vector<int>& word) const;
    std::string str() const;
};

/// Artin presentation of the kernel of the tau-projection on the generators
/// delta_beta, beta in X: one braid relation per pair with finite label.
Presentation kva_presentation(const GammaHat& h);

/// The root sequence beta_1..beta_m with beta_1 = beta and
/// beta_k = Prod_R(r_gamma, r_beta, k-1)(gamma) for even k,
///          Prod_R(r_beta, r_gamma, k-1)(beta) for odd k.
/// Z(gamma, beta, m) is then zeta_{beta_m} ... zeta_{beta_1}.
std::vector<Root> z_word(const GraphPtr& g, const Root& beta, const Root& gamma, unsigned m);

/// Presentation of the kernel of the identifying projection on the generators
/// zeta_beta: one relation Z(gamma,beta,m) = Z(beta,gamma,m) per pair with
/// finite label.  The root set must contain every root occurring in the Z
/// words (always true for a complete root system).
Presentation pva_presentation(const GammaHat& h);

struct FoiRow {
    std::vector<int> subset;  // indices into the GammaHat vertex list
    Kind kind;
    std::string family;  // per-component catalog names joined by '+'
    int nsph;
};

struct FoiReport {
    int base_nsph;           // spherical dimension of the base graph
    int gammahat_nsph;       // max over the rows
    int max_subset_size;
    std::vector<FoiRow> rows;
    bool all_spherical_or_affine;
    bool nsph_bound_ok;  // every row's nsph <= base_nsph
    bool size_bound_ok;  // max_subset_size <= 2 * base_nsph
};

/// Classifies every free-of-infinity subset of the vertex set.  The base
/// graph must be of spherical or affine type; a subset classifying as
/// "other" is an internal error (it would falsify the structure theorem).
FoiReport foi_analysis(const GammaHat& h);

/// Spherical dimension: maximal size of a vertex subset whose restriction is
/// positive definite (search runs over free-of-infinity subsets only, which
/// is no loss).
int n_sph(const GraphPtr& g);
int n_sph(const GammaHat& h);

struct DimensionReport {
    Kind kind;
    int n;     // vertex count
    int nsph;  // spherical dimension
    int cd;    // cohomological dimension of the kernel (exact or upper bound)
    bool cd_exact;
    int vcd;   // virtual cohomological dimension (exact or upper bound)
    bool vcd_exact;
};

/// Spherical graphs get exact values cd = vcd = n; affine graphs get the
/// upper bounds cd <= nsph + 1, vcd <= 2 nsph + 1.
DimensionReport dimension_report(const GraphPtr& g);

}  // namespace vaw

#include "vaw/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace vaw {

GammaHat GammaHat::build(const GraphPtr& base, std::vector<Root> verts, const MhatOracle& oracle) {
    if (!base->same_graph(*oracle.graph()))
        throw PreconditionError("oracle is for a different graph");
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (verts[i].same_coords(verts[j]))
                throw PreconditionError("duplicate root " + verts[i].str() + " in the vertex set");
    GammaHat h;
    h.base_ = base;
    const size_t n = verts.size();
    h.labels_.assign(n, std::vector<MHatEntry>(n, MHatEntry::finite(1)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            MHatEntry e = oracle(verts[i], verts[j]);
            if (e.is_undetermined())
                throw UndeterminedLabelError("derived label of " + verts[i].str() + ", " +
                                                 verts[j].str() + " undetermined at depth " +
                                                 std::to_string(e.depth()),
                                             e.depth());
            h.labels_[i][j] = e;
            h.labels_[j][i] = e;
        }
    h.verts_ = std::move(verts);
    return h;
}

GammaHat GammaHat::from_kernel(const KernelWord& k) {
    GammaHat h;
    h.base_ = k.graph();
    h.verts_ = k.support();
    h.labels_ = k.labels();
    return h;
}

GammaHat GammaHat::restrict_to(const std::vector<int>& sub) const {
    GammaHat h;
    h.base_ = base_;
    for (int i : sub) h.verts_.push_back(verts_[static_cast<size_t>(i)]);
    const size_t n = sub.size();
    h.labels_.assign(n, std::vector<MHatEntry>(n, MHatEntry::finite(1)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            h.labels_[i][j] = labels_[static_cast<size_t>(sub[i])][static_cast<size_t>(sub[j])];
    return h;
}

LabelMatrix GammaHat::label_matrix() const {
    const size_t n = verts_.size();
    LabelMatrix m(n, std::vector<Label>(n, Label::finite(1)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const MHatEntry& e = labels_[i][j];
            if (e.is_undetermined())
                throw UndeterminedLabelError("undetermined label in the derived graph", e.depth());
            m[i][j] = e.is_infinite() ? Label::infinity() : Label::finite(e.value());
        }
    return m;
}

GraphPtr GammaHat::as_coxeter_graph() const {
    std::vector<std::string> names;
    names.reserve(verts_.size());
    for (const auto& r : verts_) names.push_back(r.str());
    return CoxeterGraph::make(std::move(names), label_matrix());
}

FormType GammaHat::form_type() const { return classify_form(as_coxeter_graph()->gram()); }

Classification GammaHat::classification() const { return classify(as_coxeter_graph()); }

std::string Presentation::word_str(const std::vector<int>& word) const {
    std::string out;
    for (int i : word) {
        if (!out.empty()) out += ' ';
        out += generators[static_cast<size_t>(i)];
    }
    return out;
}

std::string Presentation::str() const {
    std::ostringstream os;
    for (const auto& g : generators) os << "gen " << g << "\n";
    for (const auto& [lhs, rhs] : relations)
        os << "rel " << word_str(lhs) << " = " << word_str(rhs) << "\n";
    return os.str();
}

Presentation kva_presentation(const GammaHat& h) {
    Presentation p;
    for (const auto& r : h.vertices()) p.generators.push_back("d" + r.str());
    for (int i = 0; i < h.size(); ++i)
        for (int j = i + 1; j < h.size(); ++j) {
            MHatEntry e = h.label(i, j);
            if (!e.is_finite()) continue;
            unsigned m = e.value();
            p.relations.emplace_back(alternating_product(i, j, m, Side::right),
                                     alternating_product(j, i, m, Side::right));
        }
    return p;
}

std::vector<Root> z_word(const GraphPtr& g, const Root& beta, const Root& gamma, unsigned m) {
    if (m < 2) throw PreconditionError("z_word needs a finite label >= 2");
    WElement rb = reflection_of_root(g, beta);
    WElement rg = reflection_of_root(g, gamma);
    {
        WElement pow = WElement::identity(g);
        for (unsigned i = 0; i < m; ++i) pow = pow * rb * rg;
        if (!pow.is_identity())
            throw PreconditionError("label mismatch: (r_beta r_gamma)^" + std::to_string(m) +
                                    " is not the identity");
    }
    std::vector<Root> out;
    out.reserve(m);
    out.push_back(beta);
    for (unsigned k = 2; k <= m; ++k) {
        bool even = k % 2 == 0;
        auto seq = even ? alternating_product(rb, rg, k - 1, Side::right)
                        : alternating_product(rg, rb, k - 1, Side::right);
        WElement prod = WElement::identity(g);
        for (const auto& e : seq) prod = prod * e;
        const Root& root = even ? gamma : beta;
        Vec coords = prod.apply(root.coords());
        RootWitness wit;
        wit.word = prod.witness();
        wit.word.insert(wit.word.end(), root.witness().word.begin(), root.witness().word.end());
        wit.simple = root.witness().simple;
        out.push_back(Root(std::move(coords), std::move(wit)));
    }
    return out;
}

Presentation pva_presentation(const GammaHat& h) {
    Presentation p;
    for (const auto& r : h.vertices()) p.generators.push_back("z" + r.str());
    auto index_of = [&](const Root& r) {
        for (int i = 0; i < h.size(); ++i)
            if (h.vertex(i).same_coords(r)) return i;
        throw PreconditionError("root set is not closed under Z-words: " + r.str() +
                                " occurs in a relation but is not a vertex");
    };
    for (int i = 0; i < h.size(); ++i)
        for (int j = i + 1; j < h.size(); ++j) {
            MHatEntry e = h.label(i, j);
            if (!e.is_finite()) continue;
            unsigned m = e.value();
            auto lhs_roots = z_word(h.base(), h.vertex(i), h.vertex(j), m);
            auto rhs_roots = z_word(h.base(), h.vertex(j), h.vertex(i), m);
            std::vector<int> lhs, rhs;
            for (auto it = lhs_roots.rbegin(); it != lhs_roots.rend(); ++it)
                lhs.push_back(index_of(*it));
            for (auto it = rhs_roots.rbegin(); it != rhs_roots.rend(); ++it)
                rhs.push_back(index_of(*it));
            p.relations.emplace_back(std::move(lhs), std::move(rhs));
        }
    return p;
}

namespace {

// Maximal positive-definite subset size, searched over the cliques of the
// finite-label graph (definiteness is inherited by subsets, so failing
// extensions prune).
int nsph_search(const std::vector<Vec>& gram, const std::vector<std::vector<bool>>& finite_pair) {
    const int n = static_cast<int>(gram.size());
    int best = 0;
    std::vector<int> current;
    auto spherical_with = [&](int v) {
        std::vector<int> sub = current;
        sub.push_back(v);
        std::vector<Vec> m(sub.size());
        for (size_t i = 0; i < sub.size(); ++i)
            for (size_t j = 0; j < sub.size(); ++j)
                m[i].push_back(gram[static_cast<size_t>(sub[i])][static_cast<size_t>(sub[j])]);
        return classify_form(m).kind == Kind::spherical;
    };
    auto rec = [&](auto&& self, int from) -> void {
        best = std::max(best, static_cast<int>(current.size()));
        for (int v = from; v < n; ++v) {
            if (static_cast<int>(current.size()) + (n - v) <= best) break;
            bool clique = true;
            for (int u : current)
                if (!finite_pair[static_cast<size_t>(u)][static_cast<size_t>(v)]) {
                    clique = false;
                    break;
                }
            if (!clique || !spherical_with(v)) continue;
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return best;
}

std::vector<std::vector<bool>> finite_pairs_of(const LabelMatrix& labels) {
    const size_t n = labels.size();
    std::vector<std::vector<bool>> out(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i][j] = i == j || labels[i][j].is_finite();
    return out;
}

}  // namespace

int n_sph(const GraphPtr& g) { return nsph_search(g->gram(), finite_pairs_of(g->labels())); }

int n_sph(const GammaHat& h) {
    GraphPtr g = h.as_coxeter_graph();
    return nsph_search(g->gram(), finite_pairs_of(g->labels()));
}

FoiReport foi_analysis(const GammaHat& h) {
    Classification base_cls = classify(h.base());
    if (base_cls.kind == Kind::other)
        throw PreconditionError("free-of-infinity analysis requires a spherical or affine base graph");
    if (h.size() > 20)
        throw PreconditionError("free-of-infinity analysis is limited to 20 vertices");

    GraphPtr hg = h.as_coxeter_graph();
    auto finite_pair = finite_pairs_of(hg->labels());

    FoiReport report;
    report.base_nsph = n_sph(h.base());
    report.gammahat_nsph = 0;
    report.max_subset_size = 0;
    report.all_spherical_or_affine = true;
    std::vector<int> current;
    auto rec = [&](auto&& self, int from) -> void {
        if (!current.empty()) {
            GammaHat sub = h.restrict_to(current);
            GraphPtr sg = sub.as_coxeter_graph();
            FormType ft = classify_form(sg->gram());
            if (ft.kind == Kind::other)
                throw Error("free-of-infinity subset classified 'other': " +
                            std::to_string(current.size()) + " roots (implementation bug)");
            Classification cls = classify(sg);
            FoiRow row;
            row.subset = current;
            row.kind = ft.kind;
            std::string fam;
            for (const auto& c : cls.components) {
                if (!fam.empty()) fam += '+';
                fam += c.family.empty() ? "?" : c.family;
            }
            row.family = fam;
            row.nsph = ft.rank;
            report.gammahat_nsph = std::max(report.gammahat_nsph, row.nsph);
            report.max_subset_size = std::max(report.max_subset_size,
                                              static_cast<int>(current.size()));
            report.rows.push_back(std::move(row));
        }
        for (int v = from; v < h.size(); ++v) {
            bool clique = true;
            for (int u : current)
                if (!finite_pair[static_cast<size_t>(u)][static_cast<size_t>(v)]) {
                    clique = false;
                    break;
                }
            if (!clique) continue;
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);

    report.nsph_bound_ok = true;
    for (const auto& row : report.rows)
        report.nsph_bound_ok = report.nsph_bound_ok && row.nsph <= report.base_nsph;
    report.size_bound_ok = report.max_subset_size <= 2 * report.base_nsph;
    for (const auto& row : report.rows)
        report.all_spherical_or_affine =
            report.all_spherical_or_affine && row.kind != Kind::other;
    return report;
}

DimensionReport dimension_report(const GraphPtr& g) {
    Classification cls = classify(g);
    if (cls.kind == Kind::other)
        throw PreconditionError("dimension report requires a spherical or affine graph");
    DimensionReport r;
    r.kind = cls.kind;
    r.n = g->rank();
    r.nsph = n_sph(g);
    if (cls.kind == Kind::spherical) {
        r.cd = r.n;
        r.cd_exact = true;
        r.vcd = r.n;
        r.vcd_exact = true;
    } else {
        r.cd = r.nsph + 1;
        r.cd_exact = false;
        r.vcd = 2 * r.nsph + 1;
        r.vcd_exact = false;
    }
    return r;
}

}  // namespace vaw

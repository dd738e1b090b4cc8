#include "vaw/wordproblem.hpp"

#include <algorithm>
#include <sstream>

namespace vaw {

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::trivial: return "trivial";
        case Verdict::nontrivial: return "nontrivial";
        default: return "unsupported";
    }
}

bool GarsideForm::equal(const GarsideForm& o) const {
    if (inf != o.inf || factors.size() != o.factors.size()) return false;
    for (size_t i = 0; i < factors.size(); ++i)
        if (!(factors[i] == o.factors[i])) return false;
    return true;
}

std::string GarsideForm::str() const {
    if (trivial()) return "1";
    std::ostringstream os;
    os << "D^" << inf;
    for (const auto& f : factors) {
        os << " . ";
        Word w = f.witness();
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) os << '*';
            os << f.graph()->vertex_name(w[i]);
        }
    }
    return os.str();
}

std::vector<std::pair<std::vector<int>, SignedWord>> component_split(const GammaHat& h,
                                                                     const KernelWord& k) {
    const int n = h.size();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> groups;
    for (int v = 0; v < n; ++v) {
        if (comp[static_cast<size_t>(v)] != -1) continue;
        std::vector<int> stack = {v};
        comp[static_cast<size_t>(v)] = static_cast<int>(groups.size());
        std::vector<int> verts;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            verts.push_back(u);
            for (int w = 0; w < n; ++w) {
                if (w == u || comp[static_cast<size_t>(w)] != -1) continue;
                MHatEntry e = h.label(u, w);
                bool edge = e.is_infinite() || (e.is_finite() && e.value() >= 3);
                if (edge) {
                    comp[static_cast<size_t>(w)] = comp[static_cast<size_t>(v)];
                    stack.push_back(w);
                }
            }
        }
        std::sort(verts.begin(), verts.end());
        groups.push_back(std::move(verts));
    }
    std::vector<std::pair<std::vector<int>, SignedWord>> out;
    out.reserve(groups.size());
    std::vector<std::vector<int>> local(groups.size(), std::vector<int>(static_cast<size_t>(n), -1));
    for (size_t gi = 0; gi < groups.size(); ++gi)
        for (size_t li = 0; li < groups[gi].size(); ++li)
            local[gi][static_cast<size_t>(groups[gi][li])] = static_cast<int>(li);
    std::vector<SignedWord> words(groups.size());
    for (const auto& l : k.letters()) {
        int idx = k.support_index(l.root.coords());
        if (idx < 0) throw PreconditionError("kernel letter outside the support");
        int gi = comp[static_cast<size_t>(idx)];
        words[static_cast<size_t>(gi)].emplace_back(local[static_cast<size_t>(gi)][static_cast<size_t>(idx)],
                                                    l.exp);
    }
    for (size_t gi = 0; gi < groups.size(); ++gi)
        out.emplace_back(groups[gi], std::move(words[gi]));
    return out;
}

namespace {

// A Garside simple: an element of the finite Coxeter group with its inverse
// and a reduced witness, kept canonical for cheap descent-set queries.
struct Simple {
    WElement w;
    WElement winv;
};

struct Engine {
    GraphPtr g;
    WElement delta;
    unsigned delta_len;

    explicit Engine(GraphPtr graph) : g(std::move(graph)), delta(longest_element(g)) {
        delta_len = static_cast<unsigned>(delta.witness().size());
    }

    Simple mk(const WElement& x) const {
        Word rw = reduced_word(x);
        Word rev(rw.rbegin(), rw.rend());
        return Simple{x.with_witness(rw), element_of_word(g, rev)};
    }

    bool is_delta(const Simple& s) const { return s.w.witness().size() == delta_len; }

    Simple tau(const Simple& s) const { return mk(delta * s.w * delta); }

    // right descent s of a: a(alpha_s) negative
    bool finisher(const Simple& a, int s) const {
        for (const auto& c : a.w.column(s))
            if (c.sign() > 0) return false;
        return true;
    }
    // left descent s of b: b^-1(alpha_s) negative
    bool starter(const Simple& b, int s) const {
        for (const auto& c : b.winv.column(s))
            if (c.sign() > 0) return false;
        return true;
    }

    // Slides letters from the head of b into a until the pair is
    // left-weighted (every starter of b is a finisher of a).
    bool local_normalize(Simple& a, Simple& b) const {
        bool changed = false;
        for (;;) {
            int move = -1;
            for (int s = 0; s < g->rank(); ++s)
                if (starter(b, s) && !finisher(a, s)) {
                    move = s;
                    break;
                }
            if (move < 0) return changed;
            WElement gen = WElement::generator(g, move);
            a = mk(a.w * gen);
            b = mk(gen * b.w);
            changed = true;
        }
    }

    void normalize(int& inf, std::vector<Simple>& fs) const {
        auto drop_identities = [&]() {
            fs.erase(std::remove_if(fs.begin(), fs.end(),
                                    [](const Simple& s) { return s.w.witness().empty(); }),
                     fs.end());
        };
        drop_identities();
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = fs.size(); i-- > 1;) {
                if (local_normalize(fs[i - 1], fs[i])) changed = true;
            }
            drop_identities();
        }
        while (!fs.empty() && is_delta(fs.front())) {
            fs.erase(fs.begin());
            ++inf;
        }
    }

    GarsideForm finish(int inf, std::vector<Simple> fs) const {
        normalize(inf, fs);
        GarsideForm out;
        out.inf = inf;
        out.factors.reserve(fs.size());
        for (auto& s : fs) out.factors.push_back(std::move(s.w));
        return out;
    }
};

}  // namespace

GarsideForm garside_normal_form(const GraphPtr& component, const SignedWord& word) {
    if (classify(component).kind != Kind::spherical)
        throw PreconditionError("Garside normal form requires a spherical component");
    Engine eng(component);
    int inf = 0;
    std::vector<Simple> fs;
    for (auto [gen, exp] : word) {
        if (gen < 0 || gen >= component->rank()) throw PreconditionError("generator out of range");
        WElement s = WElement::generator(component, gen);
        if (exp > 0) {
            fs.push_back(eng.mk(s));
        } else {
            // s^-1 = Delta^-1 (Delta s^-1); the power moves to the front,
            // twisting everything already accumulated
            for (auto& f : fs) f = eng.tau(f);
            --inf;
            fs.push_back(eng.mk(eng.delta * s));
        }
    }
    return eng.finish(inf, std::move(fs));
}

GarsideForm garside_product(const GraphPtr& component, const GarsideForm& a, const GarsideForm& b) {
    Engine eng(component);
    int inf = a.inf + b.inf;
    std::vector<Simple> fs;
    for (const auto& f : a.factors) {
        Simple s = eng.mk(f);
        if (b.inf % 2 != 0) s = eng.tau(s);  // tau is an involution
        fs.push_back(std::move(s));
    }
    for (const auto& f : b.factors) fs.push_back(eng.mk(f));
    return eng.finish(inf, std::move(fs));
}

SignedWord raag_normal_form(const LabelMatrix& labels, const SignedWord& word) {
    const size_t n = labels.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (labels[i][j].is_finite() && labels[i][j].value() != 2)
                throw PreconditionError("shuffle normal form needs labels in {2, inf}");
    auto commute = [&](int a, int b) {
        return a == b ? false : labels[static_cast<size_t>(a)][static_cast<size_t>(b)] == Label::finite(2);
    };
    SignedWord out = word;
    // cancellation across commuting letters
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < out.size() && !changed; ++i) {
            for (size_t j = i + 1; j < out.size(); ++j) {
                if (out[j].first == out[i].first) {
                    if (out[j].second == -out[i].second) {
                        out.erase(out.begin() + static_cast<long>(j));
                        out.erase(out.begin() + static_cast<long>(i));
                        changed = true;
                    }
                    break;
                }
                if (!commute(out[i].first, out[j].first)) break;
            }
        }
    }
    // leftmost-lexicographic order on commuting adjacent pairs
    changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < out.size(); ++i) {
            auto &a = out[i], &b = out[i + 1];
            bool out_of_order = b.first < a.first || (b.first == a.first && b.second > a.second);
            if (out_of_order && commute(a.first, b.first)) {
                std::swap(out[i], out[i + 1]);
                changed = true;
            }
        }
    }
    return out;
}

namespace {

SignedWord free_reduce(SignedWord word) {
    SignedWord out;
    for (auto& l : word) {
        if (!out.empty() && out.back().first == l.first && out.back().second == -l.second) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

std::string signed_word_str(const GammaHat& sub, const SignedWord& w) {
    std::string out;
    for (auto [gen, exp] : w) {
        if (!out.empty()) out += ' ';
        out += "d:" + sub.vertex(gen).str();
        if (exp == -1) out += "^-1";
    }
    return out.empty() ? "1" : out;
}

}  // namespace

SolveOutcome artin_solve(const GammaHat& h, const KernelWord& k) {
    SolveOutcome out;
    out.verdict = Verdict::trivial;
    for (auto& [verts, word] : component_split(h, k)) {
        GammaHat sub = h.restrict_to(verts);
        GraphPtr sg = sub.as_coxeter_graph();
        Classification cls = classify(sg);
        ComponentOutcome co;
        co.vertices = verts;
        for (int v : verts) co.roots.push_back(h.vertex(v).str());
        co.kind = cls.kind;
        if (cls.components.size() == 1) co.family = cls.components[0].family;
        SignedWord reduced = free_reduce(word);
        if (reduced.empty()) {
            co.tier = "free";
            co.verdict = Verdict::trivial;
            co.certificate = "1";
        } else if (cls.kind == Kind::spherical) {
            co.tier = "spherical";
            GarsideForm nf = garside_normal_form(sg, reduced);
            co.verdict = nf.trivial() ? Verdict::trivial : Verdict::nontrivial;
            co.certificate = nf.str();
        } else {
            bool raag = true;
            for (int i = 0; i < sub.size() && raag; ++i)
                for (int j = i + 1; j < sub.size(); ++j) {
                    MHatEntry e = sub.label(i, j);
                    if (e.is_finite() && e.value() > 2) {
                        raag = false;
                        break;
                    }
                }
            if (raag) {
                co.tier = "raag";
                SignedWord nf = raag_normal_form(sub.label_matrix(), reduced);
                co.verdict = nf.empty() ? Verdict::trivial : Verdict::nontrivial;
                co.certificate = signed_word_str(sub, nf);
            } else {
                co.tier = "unsupported";
                co.verdict = Verdict::unsupported;
                std::string fam = co.family.empty() ? kind_str(cls.kind) : co.family;
                co.certificate = "no solver tier for a " + kind_str(cls.kind) + " component (" +
                                 std::to_string(verts.size()) + " roots, " + fam + ")";
            }
        }
        out.components.push_back(co);
    }
    bool any_nontrivial = false, any_unsupported = false;
    std::string reason;
    for (const auto& co : out.components) {
        any_nontrivial = any_nontrivial || co.verdict == Verdict::nontrivial;
        if (co.verdict == Verdict::unsupported && reason.empty()) reason = co.certificate;
        any_unsupported = any_unsupported || co.verdict == Verdict::unsupported;
    }
    if (any_nontrivial) {
        out.verdict = Verdict::nontrivial;
    } else if (any_unsupported) {
        out.verdict = Verdict::unsupported;
        out.reason = reason;
    }
    return out;
}

SolveOutcome va_solve(const GraphPtr& g, const VAWord& w, const MhatOracle& oracle) {
    SolveOutcome out;
    if (classify(g).kind == Kind::other)
        out.warning = "base graph is neither spherical nor affine; the decision procedure is "
                      "outside its guaranteed range";
    WElement image = pi_K(w);
    if (!image.is_identity()) {
        out.verdict = Verdict::nontrivial;
        Word rw = reduced_word(image);
        std::string names;
        for (int s : rw) {
            if (!names.empty()) names += ' ';
            names += g->vertex_name(s);
        }
        out.detail = "tau-image is nontrivial: " + names;
        return out;
    }
    KernelWord k = kernel_rewrite(w, oracle);
    GammaHat h = GammaHat::from_kernel(k);
    SolveOutcome solved = artin_solve(h, k);
    solved.warning = out.warning;
    return solved;
}

}  // namespace vaw

#include "vaw/words.hpp"

#include <sstream>

namespace vaw {

VAWord VAWord::parse(const GraphPtr& g, const std::string& text) {
    VAWord w(g);
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        int exp = 1;
        std::string body = tok;
        size_t caret = tok.find('^');
        if (caret != std::string::npos) {
            std::string suffix = tok.substr(caret + 1);
            if (suffix == "-1") {
                exp = -1;
            } else if (suffix == "1") {
                exp = 1;
            } else {
                throw ParseError("bad exponent in token '" + tok + "'");
            }
            body = tok.substr(0, caret);
        }
        if (body.size() < 3 || body[1] != ':')
            throw ParseError("bad word token '" + tok + "' (expected s:<v> or t:<v>)");
        LetterKind kind;
        if (body[0] == 's') {
            kind = LetterKind::sigma;
        } else if (body[0] == 't') {
            kind = LetterKind::tau;
        } else {
            throw ParseError("bad letter kind in token '" + tok + "'");
        }
        w.push(kind, g->vertex(body.substr(2)), exp);
    }
    return w;
}

void VAWord::push(LetterKind kind, int vertex, int exp) {
    if (vertex < 0 || vertex >= g_->rank()) throw PreconditionError("letter vertex out of range");
    if (exp != 1 && exp != -1) throw PreconditionError("letter exponent must be +-1");
    if (kind == LetterKind::tau) exp = 1;  // tau_s^2 = 1
    letters_.push_back({kind, vertex, exp});
}

VAWord VAWord::operator*(const VAWord& o) const {
    if (!g_->same_graph(*o.g_)) throw PreconditionError("words over different graphs");
    VAWord w(g_);
    w.letters_ = letters_;
    w.letters_.insert(w.letters_.end(), o.letters_.begin(), o.letters_.end());
    return w;
}

VAWord VAWord::inverse() const {
    VAWord w(g_);
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.push(it->kind, it->vertex, -it->exp);
    return w;
}

std::string VAWord::str() const {
    std::string out;
    for (const auto& l : letters_) {
        if (!out.empty()) out += ' ';
        out += (l.kind == LetterKind::sigma) ? "s:" : "t:";
        out += g_->vertex_name(l.vertex);
        if (l.exp == -1) out += "^-1";
    }
    return out;
}

namespace {
WElement project(const VAWord& w, bool keep_sigma) {
    WElement out = WElement::identity(w.graph());
    for (const auto& l : w.letters()) {
        if (l.kind == LetterKind::sigma && !keep_sigma) continue;
        out = out * WElement::generator(w.graph(), l.vertex);
    }
    return out;
}
}  // namespace

WElement pi_K(const VAWord& w) { return project(w, false); }
WElement pi_P(const VAWord& w) { return project(w, true); }

VAWord iota_W(const GraphPtr& g, const Word& word) {
    VAWord w(g);
    for (int s : word) w.push(LetterKind::tau, s, 1);
    return w;
}

VAWord iota_A(const GraphPtr& g, const std::vector<std::pair<int, int>>& signed_word) {
    VAWord w(g);
    for (auto [s, e] : signed_word) w.push(LetterKind::sigma, s, e);
    return w;
}

int KernelWord::support_index(const Vec& coords) const {
    for (size_t i = 0; i < support_.size(); ++i) {
        bool eq = true;
        for (size_t j = 0; j < coords.size(); ++j)
            if (!(support_[i].coords()[j] == coords[j])) {
                eq = false;
                break;
            }
        if (eq) return static_cast<int>(i);
    }
    return -1;
}

std::string KernelWord::str() const {
    std::string out;
    for (const auto& l : letters_) {
        if (!out.empty()) out += ' ';
        out += "d:" + l.root.str();
        if (l.exp == -1) out += "^-1";
    }
    return out;
}

namespace {
std::vector<std::vector<MHatEntry>> support_labels(const std::vector<Root>& support,
                                                   const MhatOracle& oracle) {
    const size_t n = support.size();
    std::vector<std::vector<MHatEntry>> labels(n, std::vector<MHatEntry>(n, MHatEntry::finite(1)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            MHatEntry e = oracle(support[i], support[j]);
            if (e.is_undetermined())
                throw UndeterminedLabelError("derived label of " + support[i].str() + ", " +
                                                 support[j].str() + " undetermined at depth " +
                                                 std::to_string(e.depth()),
                                             e.depth());
            labels[i][j] = e;
            labels[j][i] = e;
        }
    return labels;
}
}  // namespace

KernelWord kernel_rewrite(const VAWord& w, const MhatOracle& oracle) {
    const GraphPtr& g = w.graph();
    if (!g->same_graph(*oracle.graph())) throw PreconditionError("oracle is for a different graph");
    if (!pi_K(w).is_identity())
        throw PreconditionError("word is not in the kernel: its tau-image is nontrivial");
    WElement prefix = WElement::identity(g);
    Word prefix_word;
    std::vector<KernelLetter> letters;
    std::vector<Root> support;
    for (const auto& l : w.letters()) {
        if (l.kind == LetterKind::tau) {
            prefix = prefix * WElement::generator(g, l.vertex);
            prefix_word.push_back(l.vertex);
            continue;
        }
        Vec coords = prefix.apply(simple_root(g, l.vertex));
        Root beta(coords, RootWitness{prefix_word, l.vertex});
        letters.push_back({beta, l.exp});
        bool seen = false;
        for (const auto& r : support)
            if (r.same_coords(beta)) {
                seen = true;
                break;
            }
        if (!seen) support.push_back(beta);
    }
    auto labels = support_labels(support, oracle);
    return KernelWord(g, std::move(letters), std::move(support), std::move(labels));
}

KernelWord w_action(const WElement& w, const KernelWord& k, const MhatOracle& oracle) {
    const GraphPtr& g = k.graph();
    if (!g->same_graph(*w.graph())) throw PreconditionError("action element is over a different graph");
    auto move_root = [&](const Root& r) {
        Vec coords = w.apply(r.coords());
        RootWitness wit;
        wit.word = w.witness();
        wit.word.insert(wit.word.end(), r.witness().word.begin(), r.witness().word.end());
        wit.simple = r.witness().simple;
        return Root(std::move(coords), std::move(wit));
    };
    std::vector<KernelLetter> letters;
    letters.reserve(k.letters().size());
    for (const auto& l : k.letters()) letters.push_back({move_root(l.root), l.exp});
    std::vector<Root> support;
    support.reserve(k.support().size());
    for (const auto& r : k.support()) support.push_back(move_root(r));
    // labels are recomputed; by equivariance they agree with the originals
    auto labels = support_labels(support, oracle);
    return KernelWord(g, std::move(letters), std::move(support), std::move(labels));
}

VAWord expand_kernel(const KernelWord& k) {
    VAWord out(k.graph());
    for (const auto& l : k.letters()) {
        const RootWitness& wit = l.root.witness();
        for (int s : wit.word) out.push(LetterKind::tau, s, 1);
        out.push(LetterKind::sigma, wit.simple, l.exp);
        for (auto it = wit.word.rbegin(); it != wit.word.rend(); ++it)
            out.push(LetterKind::tau, *it, 1);
    }
    return out;
}

}  // namespace vaw

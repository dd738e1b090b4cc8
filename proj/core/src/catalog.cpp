#include <algorithm>
#include <climits>

#include "vaw/coxeter.hpp"

namespace vaw {

namespace {

LabelMatrix blank(unsigned k) {
    LabelMatrix m(k, std::vector<Label>(k, Label::finite(2)));
    for (unsigned i = 0; i < k; ++i) m[i][i] = Label::finite(1);
    return m;
}

void set_edge(LabelMatrix& m, unsigned a, unsigned b, Label l) {
    m[a][b] = l;
    m[b][a] = l;
}

LabelMatrix path(unsigned k, const std::vector<unsigned>& edge_labels) {
    LabelMatrix m = blank(k);
    for (unsigned i = 0; i + 1 < k; ++i) set_edge(m, i, i + 1, Label::finite(edge_labels[i]));
    return m;
}

std::vector<std::string> default_names(unsigned k) {
    std::vector<std::string> names;
    names.reserve(k);
    for (unsigned i = 1; i <= k; ++i) names.push_back("s" + std::to_string(i));
    return names;
}

unsigned label_code(Label l) { return l.is_infinite() ? UINT_MAX : l.value(); }

// Labeled-graph isomorphism by backtracking with vertex-signature pruning.
bool isomorphic(const LabelMatrix& a, const LabelMatrix& b) {
    const size_t n = a.size();
    if (b.size() != n) return false;
    auto signature = [](const LabelMatrix& m, size_t v) {
        std::vector<unsigned> sig;
        for (size_t j = 0; j < m.size(); ++j) {
            if (j == v) continue;
            unsigned c = label_code(m[v][j]);
            if (c != 2) sig.push_back(c);
        }
        std::sort(sig.begin(), sig.end());
        return sig;
    };
    std::vector<std::vector<unsigned>> siga(n), sigb(n);
    for (size_t v = 0; v < n; ++v) {
        siga[v] = signature(a, v);
        sigb[v] = signature(b, v);
    }
    {
        auto sa = siga, sb = sigb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, size_t v) -> bool {
        if (v == n) return true;
        for (size_t w = 0; w < n; ++w) {
            if (used[w] || siga[v] != sigb[w]) continue;
            bool ok = true;
            for (size_t u = 0; u < v; ++u)
                if (a[v][u] != b[w][static_cast<size_t>(map[u])]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            map[v] = static_cast<int>(w);
            used[w] = true;
            if (self(self, v + 1)) return true;
            used[w] = false;
            map[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

std::pair<std::vector<std::string>, LabelMatrix> family_graph(const std::string& code, unsigned n) {
    auto bad = [&](const std::string& why) -> ParseError {
        return ParseError("family " + code + " " + std::to_string(n) + ": " + why);
    };
    LabelMatrix m;
    if (code == "A") {
        if (n < 1) throw bad("rank must be >= 1");
        m = path(n, std::vector<unsigned>(n ? n - 1 : 0, 3));
    } else if (code == "B") {
        if (n < 2) throw bad("rank must be >= 2");
        std::vector<unsigned> e(n - 1, 3);
        e[n - 2] = 4;
        m = path(n, e);
    } else if (code == "D") {
        if (n < 4) throw bad("rank must be >= 4");
        m = blank(n);
        for (unsigned i = 0; i + 2 < n; ++i) set_edge(m, i, i + 1, Label::finite(3));
        set_edge(m, n - 1, n - 3, Label::finite(3));
    } else if (code == "E") {
        if (n < 6 || n > 8) throw bad("rank must be 6, 7 or 8");
        m = blank(n);
        for (unsigned i = 0; i + 2 < n; ++i) set_edge(m, i, i + 1, Label::finite(3));
        set_edge(m, n - 1, 2, Label::finite(3));
    } else if (code == "F") {
        if (n != 4) throw bad("rank must be 4");
        m = path(4, {3, 4, 3});
    } else if (code == "H") {
        if (n != 3 && n != 4) throw bad("rank must be 3 or 4");
        std::vector<unsigned> e(n - 1, 3);
        e[0] = 5;
        m = path(n, e);
    } else if (code == "I2") {
        if (n < 3) throw bad("label must be >= 3");
        m = blank(2);
        set_edge(m, 0, 1, Label::finite(n));
        return {default_names(2), m};
    } else if (code == "tA") {
        if (n < 1) throw bad("rank must be >= 1");
        m = blank(n + 1);
        if (n == 1) {
            set_edge(m, 0, 1, Label::infinity());
        } else {
            for (unsigned i = 0; i <= n; ++i) set_edge(m, i, (i + 1) % (n + 1), Label::finite(3));
        }
    } else if (code == "tB") {
        if (n < 3) throw bad("rank must be >= 3");
        m = blank(n + 1);
        set_edge(m, 0, 2, Label::finite(3));
        set_edge(m, 1, 2, Label::finite(3));
        for (unsigned i = 2; i + 1 < n; ++i) set_edge(m, i, i + 1, Label::finite(3));
        set_edge(m, n - 1, n, Label::finite(4));
    } else if (code == "tC") {
        if (n < 2) throw bad("rank must be >= 2");
        std::vector<unsigned> e(n, 3);
        e[0] = 4;
        e[n - 1] = 4;
        m = path(n + 1, e);
    } else if (code == "tD") {
        if (n < 4) throw bad("rank must be >= 4");
        m = blank(n + 1);
        set_edge(m, 0, 2, Label::finite(3));
        set_edge(m, 1, 2, Label::finite(3));
        for (unsigned i = 2; i + 1 < n - 1; ++i) set_edge(m, i, i + 1, Label::finite(3));
        set_edge(m, n - 2, n - 1, Label::finite(3));
        set_edge(m, n - 2, n, Label::finite(3));
    } else if (code == "tE") {
        if (n < 6 || n > 8) throw bad("rank must be 6, 7 or 8");
        m = blank(n + 1);
        for (unsigned i = 0; i + 2 < n; ++i) set_edge(m, i, i + 1, Label::finite(3));
        set_edge(m, n - 1, 2, Label::finite(3));
        unsigned attach = (n == 6) ? n - 1 : (n == 7) ? 0 : n - 2;
        set_edge(m, n, attach, Label::finite(3));
    } else if (code == "tF") {
        if (n != 4) throw bad("rank must be 4");
        m = path(5, {3, 3, 4, 3});
    } else if (code == "tG") {
        if (n != 2) throw bad("rank must be 2");
        m = path(3, {3, 6});
    } else {
        throw ParseError("unknown family code '" + code + "'");
    }
    return {default_names(static_cast<unsigned>(m.size())), m};
}

std::string match_family(const LabelMatrix& labels) {
    const size_t k = labels.size();
    if (k == 0 || k > 10) return "";
    if (k == 1) return "A1";
    if (k == 2) {
        Label l = labels[0][1];
        if (l.is_infinite()) return "tA1";
        switch (l.value()) {
            case 3: return "A2";
            case 4: return "B2";
            default: return l.value() >= 5 ? "I2(" + std::to_string(l.value()) + ")" : "";
        }
    }
    struct Candidate {
        std::string code;
        unsigned n;
    };
    std::vector<Candidate> cands;
    const unsigned ku = static_cast<unsigned>(k);
    cands.push_back({"A", ku});
    cands.push_back({"B", ku});
    if (ku >= 4) cands.push_back({"D", ku});
    if (ku >= 6 && ku <= 8) cands.push_back({"E", ku});
    if (ku == 4) cands.push_back({"F", 4});
    if (ku == 3 || ku == 4) cands.push_back({"H", ku});
    if (ku >= 3) cands.push_back({"tA", ku - 1});
    if (ku >= 4) cands.push_back({"tB", ku - 1});
    if (ku >= 3) cands.push_back({"tC", ku - 1});
    if (ku >= 5) cands.push_back({"tD", ku - 1});
    if (ku >= 7 && ku <= 9) cands.push_back({"tE", ku - 1});
    if (ku == 5) cands.push_back({"tF", 4});
    if (ku == 3) cands.push_back({"tG", 2});
    for (const auto& c : cands) {
        auto [names, m] = family_graph(c.code, c.n);
        (void)names;
        if (isomorphic(labels, m)) return c.code + std::to_string(c.n);
    }
    return "";
}

}  // namespace vaw

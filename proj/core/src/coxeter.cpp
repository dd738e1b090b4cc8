#include "vaw/coxeter.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace vaw {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

Label parse_label(const std::string& tok) {
    if (tok == "inf" || tok == "infinity") return Label::infinity();
    for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("bad label '" + tok + "'");
    unsigned long v = std::stoul(tok);
    if (v < 2) throw ParseError("label must be >= 2 or inf, got '" + tok + "'");
    return Label::finite(static_cast<unsigned>(v));
}

}  // namespace

GraphPtr CoxeterGraph::make(std::vector<std::string> names, LabelMatrix labels) {
    const size_t n = names.size();
    if (n == 0) throw ParseError("graph needs at least one vertex");
    if (labels.size() != n) throw PreconditionError("label matrix does not match vertex count");
    for (size_t i = 0; i < n; ++i) {
        if (labels[i].size() != n) throw PreconditionError("label matrix is not square");
        if (labels[i][i] != Label::finite(1)) throw PreconditionError("diagonal labels must be 1");
        for (size_t j = i + 1; j < n; ++j) {
            if (labels[i][j] != labels[j][i]) throw PreconditionError("label matrix is not symmetric");
            if (labels[i][j].is_finite() && labels[i][j].value() < 2)
                throw PreconditionError("off-diagonal labels must be >= 2");
        }
    }
    {
        std::set<std::string> uniq(names.begin(), names.end());
        if (uniq.size() != n) throw ParseError("duplicate vertex name");
    }
    auto g = std::shared_ptr<CoxeterGraph>(new CoxeterGraph());
    g->names_ = std::move(names);
    g->m_ = std::move(labels);
    g->ctx_ = FieldContext::make(g->field_labels());
    g->gram_.assign(n, Vec());
    for (size_t s = 0; s < n; ++s) {
        g->gram_[s].reserve(n);
        for (size_t t = 0; t < n; ++t)
            g->gram_[s].push_back(s == t ? FieldElement::integer(g->ctx_, 2)
                                         : coxeter_value(g->m_[s][t], g->ctx_));
    }
    return g;
}

GraphPtr CoxeterGraph::parse(const std::string& text) {
    std::vector<std::string> names;
    std::vector<std::tuple<std::string, std::string, Label>> edges;

    std::string norm = text;
    std::replace(norm.begin(), norm.end(), ';', '\n');
    std::istringstream is(norm);
    std::string line;
    while (std::getline(is, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& cmd = toks[0];
        if (cmd == "vertices") {
            if (toks.size() < 2) throw ParseError("'vertices' needs at least one name");
            for (size_t i = 1; i < toks.size(); ++i) {
                for (char c : toks[i])
                    if (c == ':' || c == '^' || c == '[' || c == ']' || c == ',')
                        throw ParseError("vertex name '" + toks[i] + "' contains a reserved character");
                names.push_back(toks[i]);
            }
        } else if (cmd == "edge") {
            if (toks.size() != 4) throw ParseError("'edge' needs: edge <a> <b> <m|inf>");
            edges.emplace_back(toks[1], toks[2], parse_label(toks[3]));
        } else if (cmd == "family") {
            if (toks.size() != 3) throw ParseError("'family' needs: family <code> <n>");
            unsigned n = 0;
            try {
                n = static_cast<unsigned>(std::stoul(toks[2]));
            } catch (...) {
                throw ParseError("bad family rank '" + toks[2] + "'");
            }
            auto [fnames, fm] = family_graph(toks[1], n);
            size_t base = names.size();
            for (size_t i = 0; i < fnames.size(); ++i)
                names.push_back("s" + std::to_string(base + i + 1));
            for (size_t i = 0; i < fm.size(); ++i)
                for (size_t j = i + 1; j < fm.size(); ++j)
                    if (fm[i][j] != Label::finite(2))
                        edges.emplace_back(names[base + i], names[base + j], fm[i][j]);
        } else {
            throw ParseError("unknown stanza '" + cmd + "'");
        }
    }
    if (names.empty()) throw ParseError("graph needs at least one vertex");
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < names.size(); ++i) {
        if (index.count(names[i])) throw ParseError("duplicate vertex '" + names[i] + "'");
        index[names[i]] = i;
    }
    LabelMatrix m(names.size(), std::vector<Label>(names.size(), Label::finite(2)));
    for (size_t i = 0; i < names.size(); ++i) m[i][i] = Label::finite(1);
    for (auto& [a, b, l] : edges) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end()) throw ParseError("unknown vertex '" + a + "' in edge");
        if (ib == index.end()) throw ParseError("unknown vertex '" + b + "' in edge");
        size_t i = ia->second, j = ib->second;
        if (i == j) throw ParseError("edge endpoints must differ: '" + a + "'");
        if (m[i][j] != Label::finite(2) && m[i][j] != l)
            throw ParseError("conflicting labels for edge " + a + " " + b);
        m[i][j] = l;
        m[j][i] = l;
    }
    return make(std::move(names), std::move(m));
}

int CoxeterGraph::vertex(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    throw ParseError("unknown vertex '" + name + "'");
}

bool CoxeterGraph::simply_laced() const {
    for (size_t i = 0; i < m_.size(); ++i)
        for (size_t j = i + 1; j < m_.size(); ++j)
            if (m_[i][j].is_infinite() || m_[i][j].value() > 3) return false;
    return true;
}

std::set<unsigned> CoxeterGraph::field_labels() const {
    std::set<unsigned> out;
    for (size_t i = 0; i < m_.size(); ++i)
        for (size_t j = i + 1; j < m_.size(); ++j)
            if (m_[i][j].is_finite() && m_[i][j].value() >= 3) out.insert(m_[i][j].value());
    return out;
}

std::set<unsigned> CoxeterGraph::finite_label_set() const {
    std::set<unsigned> out;
    for (size_t i = 0; i < m_.size(); ++i)
        for (size_t j = i + 1; j < m_.size(); ++j)
            if (m_[i][j].is_finite()) out.insert(m_[i][j].value());
    return out;
}

std::vector<std::vector<int>> CoxeterGraph::components() const {
    const int n = rank();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int v = 0; v < n; ++v) {
        if (comp[static_cast<size_t>(v)] != -1) continue;
        std::vector<int> stack = {v}, verts;
        comp[static_cast<size_t>(v)] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            verts.push_back(u);
            for (int w = 0; w < n; ++w)
                if (comp[static_cast<size_t>(w)] == -1 && label(u, w) != Label::finite(2) && u != w) {
                    comp[static_cast<size_t>(w)] = comp[static_cast<size_t>(v)];
                    stack.push_back(w);
                }
        }
        std::sort(verts.begin(), verts.end());
        out.push_back(std::move(verts));
    }
    return out;
}

bool CoxeterGraph::same_graph(const CoxeterGraph& o) const {
    if (this == &o) return true;
    if (names_ != o.names_) return false;
    for (size_t i = 0; i < m_.size(); ++i)
        for (size_t j = 0; j < m_.size(); ++j)
            if (m_[i][j] != o.m_[i][j]) return false;
    return true;
}

std::string CoxeterGraph::str() const {
    std::ostringstream os;
    os << "vertices";
    for (const auto& n : names_) os << ' ' << n;
    for (size_t i = 0; i < m_.size(); ++i)
        for (size_t j = i + 1; j < m_.size(); ++j)
            if (m_[i][j] != Label::finite(2))
                os << "; edge " << names_[i] << ' ' << names_[j] << ' ' << m_[i][j].str();
    return os.str();
}

Vec simple_root(const GraphPtr& g, int s) {
    Vec v(static_cast<size_t>(g->rank()), FieldElement::zero(g->context()));
    v[static_cast<size_t>(s)] = FieldElement::one(g->context());
    return v;
}

Vec zero_vector(const GraphPtr& g) {
    return Vec(static_cast<size_t>(g->rank()), FieldElement::zero(g->context()));
}

FieldElement inner(const GraphPtr& g, const Vec& u, const Vec& v) {
    FieldElement acc = FieldElement::zero(g->context());
    const auto& gram = g->gram();
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        for (size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) acc += u[i] * gram[i][j] * v[j];
    }
    return acc;
}

Vec generator_action(const GraphPtr& g, int s, const Vec& v) {
    if (v.size() != static_cast<size_t>(g->rank()))
        throw PreconditionError("vector dimension does not match the graph rank");
    FieldElement c = inner(g, v, simple_root(g, s));
    Vec out = v;
    out[static_cast<size_t>(s)] -= c;
    return out;
}

std::string vec_str(const Vec& v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v[i].str();
    }
    out += ']';
    return out;
}

Vec parse_vec(const std::string& text, const GraphPtr& g) {
    std::string s = text;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("coordinates must be bracketed: '" + text + "'");
    s = s.substr(1, s.size() - 2);
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    if (parts.size() != static_cast<size_t>(g->rank()))
        throw ParseError("expected " + std::to_string(g->rank()) + " coordinates in '" + text + "'");
    Vec v;
    v.reserve(parts.size());
    for (const auto& p : parts) v.push_back(parse_field_element(p, g->context()));
    return v;
}

WElement WElement::identity(const GraphPtr& g) {
    std::vector<Vec> cols;
    cols.reserve(static_cast<size_t>(g->rank()));
    for (int j = 0; j < g->rank(); ++j) cols.push_back(simple_root(g, j));
    return WElement(g, std::move(cols), {});
}

WElement WElement::generator(const GraphPtr& g, int s) {
    std::vector<Vec> cols;
    cols.reserve(static_cast<size_t>(g->rank()));
    for (int j = 0; j < g->rank(); ++j) cols.push_back(generator_action(g, s, simple_root(g, j)));
    return WElement(g, std::move(cols), {s});
}

Vec WElement::apply(const Vec& v) const {
    Vec out = zero_vector(g_);
    for (size_t j = 0; j < v.size(); ++j) {
        if (v[j].is_zero()) continue;
        for (size_t i = 0; i < out.size(); ++i) out[i] += v[j] * cols_[j][i];
    }
    return out;
}

WElement WElement::operator*(const WElement& o) const {
    if (!g_->same_graph(*o.g_)) throw PreconditionError("elements of different Coxeter graphs");
    std::vector<Vec> cols;
    cols.reserve(cols_.size());
    for (size_t j = 0; j < cols_.size(); ++j) cols.push_back(apply(o.cols_[j]));
    Word wit = witness_;
    wit.insert(wit.end(), o.witness_.begin(), o.witness_.end());
    return WElement(g_, std::move(cols), std::move(wit));
}

WElement WElement::inverse() const {
    Word rev(witness_.rbegin(), witness_.rend());
    return element_of_word(g_, rev);
}

bool WElement::is_identity() const {
    for (size_t j = 0; j < cols_.size(); ++j)
        for (size_t i = 0; i < cols_.size(); ++i) {
            bool want_one = i == j;
            if (want_one != !cols_[j][i].is_zero()) return false;
            if (want_one && !(cols_[j][i] == FieldElement::one(g_->context()))) return false;
        }
    return true;
}

bool WElement::operator==(const WElement& o) const {
    if (!g_->same_graph(*o.g_)) return false;
    for (size_t j = 0; j < cols_.size(); ++j)
        for (size_t i = 0; i < cols_.size(); ++i)
            if (!(cols_[j][i] == o.cols_[j][i])) return false;
    return true;
}

WElement WElement::with_witness(Word w) const { return WElement(g_, cols_, std::move(w)); }

std::string WElement::key() const {
    std::string out;
    for (const auto& col : cols_)
        for (const auto& e : col) {
            out += e.str();
            out += '|';
        }
    return out;
}

WElement element_of_word(const GraphPtr& g, const Word& word) {
    WElement w = WElement::identity(g);
    for (int s : word) {
        if (s < 0 || s >= g->rank()) throw PreconditionError("letter out of range");
        w = w * WElement::generator(g, s);
    }
    return w;
}

bool w_equal(const WElement& a, const WElement& b) {
    if (!a.graph()->same_graph(*b.graph()))
        throw PreconditionError("comparing elements of different Coxeter graphs");
    return a == b;
}

namespace {

// Sign pattern of a column, which is a root: +1 when all coordinates are >= 0.
bool column_nonnegative(const Vec& v) {
    for (const auto& c : v)
        if (c.sign() < 0) return false;
    return true;
}

bool column_nonpositive(const Vec& v) {
    for (const auto& c : v)
        if (c.sign() > 0) return false;
    return true;
}

}  // namespace

Word reduced_word(const WElement& w) {
    WElement cur = w;
    const GraphPtr& g = w.graph();
    Word rev;
    while (!cur.is_identity()) {
        int descent = -1;
        for (int s = 0; s < g->rank(); ++s)
            if (column_nonpositive(cur.column(s))) {
                descent = s;
                break;
            }
        if (descent < 0) throw Error("internal: non-identity element without a descent");
        cur = cur * WElement::generator(g, descent);
        rev.push_back(descent);
    }
    return Word(rev.rbegin(), rev.rend());
}

unsigned length(const WElement& w) { return static_cast<unsigned>(reduced_word(w).size()); }

WElement longest_element(const GraphPtr& g) {
    if (classify(g).kind != Kind::spherical)
        throw PreconditionError("longest element requires a spherical graph");
    WElement w = WElement::identity(g);
    Word word;
    for (;;) {
        int ascent = -1;
        for (int s = 0; s < g->rank(); ++s)
            if (column_nonnegative(w.column(s))) {
                ascent = s;
                break;
            }
        if (ascent < 0) break;
        w = w * WElement::generator(g, ascent);
        word.push_back(ascent);
    }
    WElement w0 = w.with_witness(std::move(word));
    if (!(w0 * w0).is_identity()) throw Error("internal: longest element is not an involution");
    for (int s = 0; s < g->rank(); ++s) {
        WElement conj = w0 * WElement::generator(g, s) * w0;
        bool in_s = false;
        for (int t = 0; t < g->rank() && !in_s; ++t) in_s = conj == WElement::generator(g, t);
        if (!in_s) throw Error("internal: longest element does not normalize the generators");
    }
    return w0;
}

std::vector<WElement> enumerate_group(const GraphPtr& g, std::size_t cap) {
    if (cap == 0) throw PreconditionError("enumeration cap must be positive");
    std::vector<WElement> out;
    std::map<std::string, size_t> seen;
    out.push_back(WElement::identity(g));
    seen[out[0].key()] = 0;
    for (size_t i = 0; i < out.size(); ++i) {
        for (int s = 0; s < g->rank(); ++s) {
            WElement cand = out[i] * WElement::generator(g, s);
            std::string k = cand.key();
            if (seen.count(k)) continue;
            if (out.size() >= cap)
                throw CapExceededError("group enumeration exceeded cap " + std::to_string(cap) +
                                       " (group is infinite or too large)");
            seen[k] = out.size();
            out.push_back(std::move(cand));
        }
    }
    return out;
}

std::string kind_str(Kind k) {
    switch (k) {
        case Kind::spherical: return "spherical";
        case Kind::affine: return "affine";
        default: return "other";
    }
}

FormType classify_form(const std::vector<Vec>& a) {
    const size_t n = a.size();
    if (n == 0) return {Kind::spherical, 0};
    std::vector<Vec> m = a;
    std::vector<bool> active(n, true);
    int rank = 0;
    size_t remaining = n;
    while (remaining > 0) {
        size_t pivot = n;
        bool negative_diag = false;
        for (size_t i = 0; i < n; ++i) {
            if (!active[i]) continue;
            int s = m[i][i].sign();
            if (s > 0) {
                pivot = i;
                break;
            }
            if (s < 0) negative_diag = true;
        }
        if (pivot == n) {
            if (negative_diag) return {Kind::other, rank};
            // all remaining diagonal entries vanish: positive semidefinite
            // only if the whole remaining block vanishes
            for (size_t i = 0; i < n; ++i) {
                if (!active[i]) continue;
                for (size_t j = 0; j < n; ++j)
                    if (active[j] && !m[i][j].is_zero()) return {Kind::other, rank};
            }
            return {Kind::affine, rank};
        }
        FieldElement inv = m[pivot][pivot].inverse();
        for (size_t i = 0; i < n; ++i) {
            if (!active[i] || i == pivot || m[i][pivot].is_zero()) continue;
            FieldElement f = m[i][pivot] * inv;
            for (size_t j = 0; j < n; ++j) {
                if (!active[j] || j == pivot) continue;
                m[i][j] -= f * m[pivot][j];
            }
        }
        active[pivot] = false;
        --remaining;
        ++rank;
    }
    return {Kind::spherical, rank};
}

Classification classify(const GraphPtr& g) {
    Classification out;
    for (const auto& comp : g->components()) {
        std::vector<Vec> sub(comp.size());
        for (size_t i = 0; i < comp.size(); ++i)
            for (size_t j = 0; j < comp.size(); ++j)
                sub[i].push_back(g->gram()[static_cast<size_t>(comp[i])][static_cast<size_t>(comp[j])]);
        FormType ft = classify_form(sub);
        GraphComponent gc;
        gc.vertices = comp;
        gc.kind = ft.kind;
        if (ft.kind != Kind::other && comp.size() <= 10) {
            LabelMatrix sublab(comp.size(), std::vector<Label>(comp.size(), Label::finite(2)));
            for (size_t i = 0; i < comp.size(); ++i)
                for (size_t j = 0; j < comp.size(); ++j)
                    sublab[i][j] = g->label(comp[i], comp[j]);
            gc.family = match_family(sublab);
        }
        out.components.push_back(std::move(gc));
    }
    bool all_sph = true, all_sph_or_aff = true;
    for (const auto& c : out.components) {
        all_sph = all_sph && c.kind == Kind::spherical;
        all_sph_or_aff = all_sph_or_aff && c.kind != Kind::other;
    }
    out.kind = all_sph ? Kind::spherical : (all_sph_or_aff ? Kind::affine : Kind::other);
    return out;
}

}  // namespace vaw

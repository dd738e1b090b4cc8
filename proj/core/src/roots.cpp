#include "vaw/roots.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace vaw {

bool Root::same_coords(const Root& o) const {
    if (coords_.size() != o.coords_.size()) return false;
    for (size_t i = 0; i < coords_.size(); ++i)
        if (!(coords_[i] == o.coords_[i])) return false;
    return true;
}

bool is_positive(const Root& beta) {
    bool has_pos = false, has_neg = false;
    for (const auto& c : beta.coords()) {
        int s = c.sign();
        has_pos = has_pos || s > 0;
        has_neg = has_neg || s < 0;
    }
    if (has_pos && has_neg)
        throw PreconditionError("mixed-sign coordinates: " + beta.str() + " is not a root");
    return !has_neg;
}

Root negate_root(const GraphPtr& g, const Root& beta) {
    (void)g;
    Vec c;
    c.reserve(beta.coords().size());
    for (const auto& e : beta.coords()) c.push_back(-e);
    RootWitness wit = beta.witness();
    wit.word.push_back(wit.simple);
    return Root(std::move(c), std::move(wit));
}

Root simple_as_root(const GraphPtr& g, int s) {
    return Root(simple_root(g, s), RootWitness{{}, s});
}

RootSystem RootSystem::enumerate(const GraphPtr& g, std::optional<unsigned> depth, std::size_t cap) {
    if (!depth && classify(g).kind != Kind::spherical)
        throw PreconditionError("unbounded root enumeration requires a spherical graph");
    RootSystem rs;
    rs.g_ = g;
    rs.depth_ = depth;
    auto push = [&](Root r) -> bool {
        std::string k = vec_str(r.coords());
        if (rs.index_.count(k)) return false;
        if (rs.roots_.size() >= cap)
            throw CapExceededError("root enumeration exceeded cap " + std::to_string(cap));
        rs.index_[k] = static_cast<int>(rs.roots_.size());
        rs.roots_.push_back(std::move(r));
        return true;
    };
    for (int s = 0; s < g->rank(); ++s) push(simple_as_root(g, s));
    size_t level_begin = 0;
    unsigned level = 0;
    bool closed = true;
    while (level_begin < rs.roots_.size()) {
        if (depth && level >= *depth) {
            // roots at the frontier might still have unexplored images
            closed = rs.roots_.size() == level_begin;
            break;
        }
        size_t level_end = rs.roots_.size();
        for (size_t i = level_begin; i < level_end; ++i)
            for (int s = 0; s < g->rank(); ++s) {
                Vec img = generator_action(g, s, rs.roots_[i].coords());
                RootWitness wit = rs.roots_[i].witness();
                wit.word.insert(wit.word.begin(), s);
                push(Root(std::move(img), std::move(wit)));
            }
        if (rs.roots_.size() == level_end) break;  // closure reached
        level_begin = level_end;
        ++level;
    }
    rs.complete_ = closed || !depth;
    if (!rs.complete_) {
        // truncations are completed under negation so the invariant
        // beta in Phi => -beta in Phi survives the cutoff
        size_t n = rs.roots_.size();
        for (size_t i = 0; i < n; ++i) {
            Vec neg;
            neg.reserve(rs.roots_[i].coords().size());
            for (const auto& e : rs.roots_[i].coords()) neg.push_back(-e);
            if (rs.find(neg) < 0) push(negate_root(g, rs.roots_[i]));
        }
    }
    return rs;
}

int RootSystem::find(const Vec& coords) const {
    auto it = index_.find(vec_str(coords));
    return it == index_.end() ? -1 : it->second;
}

WElement reflection_of_root(const GraphPtr& g, const Root& beta) {
    WElement w = element_of_word(g, beta.witness().word);
    // sanity: the witness must reproduce the coordinates
    Vec img = w.apply(simple_root(g, beta.witness().simple));
    for (size_t i = 0; i < img.size(); ++i)
        if (!(img[i] == beta.coords()[i]))
            throw PreconditionError("root witness does not reproduce the coordinates of " + beta.str());
    Word word = beta.witness().word;
    word.push_back(beta.witness().simple);
    word.insert(word.end(), beta.witness().word.rbegin(), beta.witness().word.rend());
    return element_of_word(g, word);
}

std::optional<Root> find_root(const GraphPtr& g, const Vec& coords, unsigned depth, std::size_t cap) {
    std::string target = vec_str(coords);
    std::set<std::string> seen;
    std::deque<Root> queue;
    for (int s = 0; s < g->rank(); ++s) {
        Root r = simple_as_root(g, s);
        seen.insert(vec_str(r.coords()));
        queue.push_back(std::move(r));
    }
    while (!queue.empty()) {
        Root r = std::move(queue.front());
        queue.pop_front();
        if (vec_str(r.coords()) == target) return r;
        if (r.witness().word.size() >= depth) continue;
        for (int s = 0; s < g->rank(); ++s) {
            Vec img = generator_action(g, s, r.coords());
            std::string k = vec_str(img);
            if (seen.count(k)) continue;
            if (seen.size() >= cap) throw CapExceededError("root search exceeded cap");
            seen.insert(k);
            RootWitness wit = r.witness();
            wit.word.insert(wit.word.begin(), s);
            queue.push_back(Root(std::move(img), std::move(wit)));
        }
    }
    return std::nullopt;
}

PairOrbitTable PairOrbitTable::build(const GraphPtr& g, std::size_t cap) {
    if (classify(g).kind != Kind::spherical)
        throw PreconditionError("pair-orbit table requires a finite group (spherical graph)");
    PairOrbitTable table;
    auto elements = enumerate_group(g, cap);
    for (const auto& w : elements) {
        for (int s = 0; s < g->rank(); ++s)
            for (int t = s + 1; t < g->rank(); ++t) {
                Label l = g->label(s, t);
                if (l.is_infinite()) continue;
                std::string ks = vec_str(w.column(s));
                std::string kt = vec_str(w.column(t));
                auto key = ks < kt ? std::make_pair(ks, kt) : std::make_pair(kt, ks);
                auto [it, inserted] = table.entries_.emplace(key, l.value());
                if (!inserted && it->second != l.value())
                    throw Error("internal: pair-orbit table label collision");
            }
    }
    return table;
}

std::optional<unsigned> PairOrbitTable::find(const Vec& beta, const Vec& gamma) const {
    std::string kb = vec_str(beta), kg = vec_str(gamma);
    auto key = kb < kg ? std::make_pair(kb, kg) : std::make_pair(kg, kb);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

namespace {

// BFS over unordered pair images, looking for a simple pair; used when the
// group is infinite.  Returns the label when found, infinity when the orbit
// closes without one, nothing when the depth runs out first.
std::optional<MHatEntry> pair_orbit_search(const GraphPtr& g, const Vec& beta, const Vec& gamma,
                                           unsigned search_depth, std::size_t cap) {
    auto pair_key = [](const Vec& u, const Vec& v) {
        std::string a = vec_str(u), b = vec_str(v);
        return a < b ? a + "|" + b : b + "|" + a;
    };
    auto simple_index = [&](const Vec& u) -> int {
        int idx = -1;
        for (size_t i = 0; i < u.size(); ++i) {
            if (u[i].is_zero()) continue;
            if (idx != -1 || !(u[i] == FieldElement::one(g->context()))) return -1;
            idx = static_cast<int>(i);
        }
        return idx;
    };
    std::set<std::string> seen;
    std::deque<std::tuple<Vec, Vec, unsigned>> queue;
    seen.insert(pair_key(beta, gamma));
    queue.emplace_back(beta, gamma, 0);
    bool cut = false;
    while (!queue.empty()) {
        auto [u, v, d] = std::move(queue.front());
        queue.pop_front();
        int su = simple_index(u), sv = simple_index(v);
        if (su >= 0 && sv >= 0) {
            Label l = g->label(su, sv);
            if (l.is_finite()) return MHatEntry::finite(l.value());
        }
        if (d >= search_depth) {
            cut = true;
            continue;
        }
        for (int s = 0; s < g->rank(); ++s) {
            Vec nu = generator_action(g, s, u);
            Vec nv = generator_action(g, s, v);
            std::string k = pair_key(nu, nv);
            if (seen.count(k)) continue;
            if (seen.size() >= cap) throw CapExceededError("pair-orbit search exceeded cap");
            seen.insert(k);
            queue.emplace_back(std::move(nu), std::move(nv), d + 1);
        }
    }
    if (cut) return std::nullopt;
    return MHatEntry::infinity();
}

}  // namespace

MHatEntry mhat(const GraphPtr& g, const Root& beta, const Root& gamma, unsigned search_depth,
               const PairOrbitTable* table) {
    if (beta.coords().size() != static_cast<size_t>(g->rank()) ||
        gamma.coords().size() != static_cast<size_t>(g->rank()))
        throw PreconditionError("roots do not match the graph");
    if (beta.same_coords(gamma)) return MHatEntry::finite(1);

    FieldElement c = inner(g, beta.coords(), gamma.coords());
    FieldElement two = FieldElement::integer(g->context(), 2);
    // the pairing of any orbit-related pair lies in ]-2, 0]
    if (c.sign() > 0 || (c + two).sign() <= 0) return MHatEntry::infinity();

    if (g->simply_laced()) {
        if (c.is_zero()) return MHatEntry::finite(2);
        if (c == -FieldElement::one(g->context())) return MHatEntry::finite(3);
        return MHatEntry::infinity();
    }

    std::optional<unsigned> candidate;
    for (unsigned m : g->finite_label_set())
        if (coxeter_value(Label::finite(m), g->context()) == c) {
            candidate = m;
            break;
        }
    if (!candidate) return MHatEntry::infinity();

    if (table) {
        auto found = table->find(beta.coords(), gamma.coords());
        return found ? MHatEntry::finite(*found) : MHatEntry::infinity();
    }
    auto res = pair_orbit_search(g, beta.coords(), gamma.coords(), search_depth, 1u << 20);
    return res ? *res : MHatEntry::undetermined(search_depth);
}

MhatOracle::MhatOracle(GraphPtr g, unsigned search_depth, std::size_t cap)
    : g_(std::move(g)), depth_(search_depth) {
    if (classify(g_).kind == Kind::spherical) table_ = PairOrbitTable::build(g_, cap);
}

}  // namespace vaw

// vaw — command line workbench for virtual Artin groups.
//
// Exit codes: 0 success, 2 parse error, 3 precondition violation,
// 4 unsupported verdict, 5 undetermined derived label.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "vaw/wordproblem.hpp"

using json = nlohmann::ordered_json;
using namespace vaw;

namespace {

struct Options {
    std::string graph_text;
    std::string graph_file;
    std::string format = "text";
    unsigned depth = 8;
    std::size_t cap = 1000000;
    bool full = false;
    std::vector<std::string> support;
    std::string variant;
    std::string word;
    std::string root_a, root_b;
};

GraphPtr load_graph(const Options& opt) {
    if (!opt.graph_file.empty()) {
        std::ifstream in(opt.graph_file);
        if (!in) throw ParseError("cannot open graph file '" + opt.graph_file + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return CoxeterGraph::parse(ss.str());
    }
    if (opt.graph_text.empty()) throw ParseError("a graph is required (--graph or --graph-file)");
    return CoxeterGraph::parse(opt.graph_text);
}

std::string witness_str(const GraphPtr& g, const RootWitness& wit) {
    std::string out;
    for (size_t i = 0; i < wit.word.size(); ++i) {
        if (i) out += '.';
        out += g->vertex_name(wit.word[i]);
    }
    out += ':';
    out += g->vertex_name(wit.simple);
    return out;
}

// Roots come either as coordinates `[c1,...,cn]` (validated by a bounded
// orbit check) or as witness pairs `w1.w2:s`.
Root parse_root(const GraphPtr& g, const std::string& text, unsigned depth, std::size_t cap) {
    if (!text.empty() && text.front() == '[') {
        Vec coords = parse_vec(text, g);
        if (classify(g).kind == Kind::spherical) {
            RootSystem rs = RootSystem::enumerate(g, std::nullopt, cap);
            int idx = rs.find(coords);
            if (idx < 0) throw PreconditionError("'" + text + "' is not a root");
            return rs.roots()[static_cast<size_t>(idx)];
        }
        auto found = find_root(g, coords, depth, cap);
        if (!found)
            throw PreconditionError("'" + text + "' was not reached by the orbit search (depth " +
                                    std::to_string(depth) + ")");
        return *found;
    }
    size_t colon = text.rfind(':');
    if (colon == std::string::npos)
        throw ParseError("root must be '[coords]' or 'word:simple', got '" + text + "'");
    Word word;
    std::string head = text.substr(0, colon);
    if (!head.empty()) {
        std::istringstream is(head);
        std::string part;
        while (std::getline(is, part, '.')) word.push_back(g->vertex(part));
    }
    int s = g->vertex(text.substr(colon + 1));
    Vec coords = element_of_word(g, word).apply(simple_root(g, s));
    return Root(std::move(coords), RootWitness{std::move(word), s});
}

std::vector<Root> resolve_support(const GraphPtr& g, const Options& opt) {
    if (opt.full && !opt.support.empty())
        throw ParseError("--full and --support are mutually exclusive");
    if (!opt.support.empty()) {
        std::vector<Root> out;
        out.reserve(opt.support.size());
        for (const auto& s : opt.support) out.push_back(parse_root(g, s, opt.depth, opt.cap));
        return out;
    }
    if (classify(g).kind != Kind::spherical)
        throw PreconditionError("--support is required for non-spherical graphs "
                                "(the full root system is infinite)");
    return RootSystem::enumerate(g, std::nullopt, opt.cap).roots();
}

json graph_json(const GraphPtr& g) {
    json j;
    j["vertices"] = g->vertex_names();
    json edges = json::array();
    for (int i = 0; i < g->rank(); ++i)
        for (int k = i + 1; k < g->rank(); ++k)
            if (g->label(i, k) != Label::finite(2))
                edges.push_back({g->vertex_name(i), g->vertex_name(k), g->label(i, k).str()});
    j["edges"] = edges;
    return j;
}

json labels_json(const GammaHat& h) {
    json out = json::array();
    for (int i = 0; i < h.size(); ++i)
        for (int j = i + 1; j < h.size(); ++j)
            out.push_back({h.vertex(i).str(), h.vertex(j).str(), h.label(i, j).str()});
    return out;
}

void emit(const Options& opt, const std::string& text, const json& j) {
    if (opt.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

int cmd_classify(const Options& opt) {
    GraphPtr g = load_graph(opt);
    Classification cls = classify(g);
    std::ostringstream os;
    os << "kind: " << kind_str(cls.kind) << "\n";
    json jc = json::array();
    for (const auto& c : cls.components) {
        os << "component:";
        json names = json::array();
        for (int v : c.vertices) {
            os << ' ' << g->vertex_name(v);
            names.push_back(g->vertex_name(v));
        }
        os << " | kind: " << kind_str(c.kind);
        if (!c.family.empty()) os << " | family: " << c.family;
        os << "\n";
        jc.push_back({{"vertices", names}, {"kind", kind_str(c.kind)}, {"family", c.family}});
    }
    json j{{"command", "classify"},
           {"graph", graph_json(g)},
           {"kind", kind_str(cls.kind)},
           {"components", jc}};
    emit(opt, os.str(), j);
    return 0;
}

int cmd_roots(const Options& opt, bool depth_given) {
    GraphPtr g = load_graph(opt);
    std::optional<unsigned> depth;
    if (depth_given || classify(g).kind != Kind::spherical) depth = opt.depth;
    RootSystem rs = RootSystem::enumerate(g, depth, opt.cap);
    std::ostringstream os;
    os << "count: " << rs.roots().size() << "\n";
    os << "complete: " << (rs.complete() ? "true" : "false") << "\n";
    json jr = json::array();
    for (const auto& r : rs.roots()) {
        os << "root: " << r.str() << " | positive: " << (is_positive(r) ? "true" : "false")
           << " | witness: " << witness_str(g, r.witness()) << "\n";
        json w;
        w["coords"] = r.str();
        w["positive"] = is_positive(r);
        json word = json::array();
        for (int s : r.witness().word) word.push_back(g->vertex_name(s));
        w["witness"] = {{"word", word}, {"simple", g->vertex_name(r.witness().simple)}};
        jr.push_back(w);
    }
    json j{{"command", "roots"}, {"graph", graph_json(g)}, {"count", rs.roots().size()},
           {"complete", rs.complete()}};
    if (rs.depth())
        j["depth"] = *rs.depth();
    else
        j["depth"] = "complete";
    j["roots"] = jr;
    emit(opt, os.str(), j);
    return 0;
}

int cmd_mhat(const Options& opt) {
    GraphPtr g = load_graph(opt);
    Root a = parse_root(g, opt.root_a, opt.depth, opt.cap);
    Root b = parse_root(g, opt.root_b, opt.depth, opt.cap);
    MhatOracle oracle(g, opt.depth, opt.cap);
    MHatEntry e = oracle(a, b);
    std::ostringstream os;
    os << "beta: " << a.str() << "\n"
       << "gamma: " << b.str() << "\n"
       << "mhat: " << e.str() << "\n";
    json j{{"command", "mhat"},
           {"graph", graph_json(g)},
           {"beta", a.str()},
           {"gamma", b.str()},
           {"mhat", e.str()}};
    emit(opt, os.str(), j);
    return e.is_undetermined() ? 5 : 0;
}

int cmd_present(const Options& opt) {
    GraphPtr g = load_graph(opt);
    if (opt.variant != "kva" && opt.variant != "pva")
        throw ParseError("presentation variant must be 'kva' or 'pva'");
    MhatOracle oracle(g, opt.depth, opt.cap);
    GammaHat h = GammaHat::build(g, resolve_support(g, opt), oracle);
    Presentation p = opt.variant == "kva" ? kva_presentation(h) : pva_presentation(h);
    std::ostringstream os;
    os << p.str();
    json rels = json::array();
    for (const auto& [lhs, rhs] : p.relations) {
        json l = json::array(), r = json::array();
        for (int i : lhs) l.push_back(p.generators[static_cast<size_t>(i)]);
        for (int i : rhs) r.push_back(p.generators[static_cast<size_t>(i)]);
        rels.push_back({{"lhs", l}, {"rhs", r}});
    }
    json j{{"command", "present"},   {"graph", graph_json(g)},    {"variant", opt.variant},
           {"generators", p.generators}, {"relations", rels},     {"labels", labels_json(h)}};
    emit(opt, os.str(), j);
    return 0;
}

int cmd_rewrite(const Options& opt) {
    GraphPtr g = load_graph(opt);
    VAWord w = VAWord::parse(g, opt.word);
    MhatOracle oracle(g, opt.depth, opt.cap);
    KernelWord k = kernel_rewrite(w, oracle);
    GammaHat h = GammaHat::from_kernel(k);
    std::ostringstream os;
    os << "support:";
    for (const auto& r : k.support()) os << ' ' << r.str();
    os << "\n";
    for (int i = 0; i < h.size(); ++i)
        for (int j = i + 1; j < h.size(); ++j)
            os << "label: " << h.vertex(i).str() << " | " << h.vertex(j).str() << " | "
               << h.label(i, j).str() << "\n";
    os << "word: " << (k.letters().empty() ? "1" : k.str()) << "\n";
    json supp = json::array();
    for (const auto& r : k.support()) supp.push_back(r.str());
    json letters = json::array();
    for (const auto& l : k.letters()) letters.push_back({{"root", l.root.str()}, {"exp", l.exp}});
    json j{{"command", "rewrite"}, {"graph", graph_json(g)}, {"support", supp},
           {"labels", labels_json(h)}, {"word", letters}};
    emit(opt, os.str(), j);
    return 0;
}

int cmd_solve(const Options& opt) {
    GraphPtr g = load_graph(opt);
    VAWord w = VAWord::parse(g, opt.word);
    MhatOracle oracle(g, opt.depth, opt.cap);
    SolveOutcome out = va_solve(g, w, oracle);
    std::ostringstream os;
    os << "verdict: " << verdict_str(out.verdict);
    if (out.verdict == Verdict::unsupported) os << ": " << out.reason;
    os << "\n";
    if (!out.warning.empty()) os << "warning: " << out.warning << "\n";
    if (!out.detail.empty()) os << "detail: " << out.detail << "\n";
    if (!out.reason.empty()) os << "reason: " << out.reason << "\n";
    json jc = json::array();
    for (const auto& c : out.components) {
        os << "component:";
        json roots = json::array();
        for (const auto& r : c.roots) {
            os << ' ' << r;
            roots.push_back(r);
        }
        os << " | kind: " << kind_str(c.kind) << " | tier: " << c.tier
           << " | verdict: " << verdict_str(c.verdict) << " | certificate: " << c.certificate
           << "\n";
        jc.push_back({{"roots", roots},
                      {"kind", kind_str(c.kind)},
                      {"family", c.family},
                      {"tier", c.tier},
                      {"verdict", verdict_str(c.verdict)},
                      {"certificate", c.certificate}});
    }
    json j{{"command", "solve"}, {"graph", graph_json(g)}, {"verdict", verdict_str(out.verdict)},
           {"warning", out.warning}, {"detail", out.detail}, {"reason", out.reason},
           {"components", jc}};
    emit(opt, os.str(), j);
    return out.verdict == Verdict::unsupported ? 4 : 0;
}

int cmd_analyze(const Options& opt) {
    GraphPtr g = load_graph(opt);
    MhatOracle oracle(g, opt.depth, opt.cap);
    GammaHat h = GammaHat::build(g, resolve_support(g, opt), oracle);
    FoiReport rep = foi_analysis(h);
    std::ostringstream os;
    os << "base_nsph: " << rep.base_nsph << "\n"
       << "gammahat_nsph: " << rep.gammahat_nsph << "\n"
       << "max_subset: " << rep.max_subset_size << "\n"
       << "all_spherical_or_affine: " << (rep.all_spherical_or_affine ? "true" : "false") << "\n"
       << "nsph_bound: " << (rep.nsph_bound_ok ? "ok" : "violated") << "\n"
       << "size_bound: " << (rep.size_bound_ok ? "ok" : "violated") << "\n";
    json rows = json::array();
    for (const auto& row : rep.rows) {
        os << "subset:";
        json verts = json::array();
        for (int v : row.subset) {
            os << ' ' << h.vertex(v).str();
            verts.push_back(h.vertex(v).str());
        }
        os << " | kind: " << kind_str(row.kind) << " | family: " << row.family
           << " | nsph: " << row.nsph << "\n";
        rows.push_back({{"subset", verts},
                        {"kind", kind_str(row.kind)},
                        {"family", row.family},
                        {"nsph", row.nsph}});
    }
    json j{{"command", "analyze"},
           {"graph", graph_json(g)},
           {"base_nsph", rep.base_nsph},
           {"gammahat_nsph", rep.gammahat_nsph},
           {"max_subset", rep.max_subset_size},
           {"all_spherical_or_affine", rep.all_spherical_or_affine},
           {"nsph_bound_ok", rep.nsph_bound_ok},
           {"size_bound_ok", rep.size_bound_ok},
           {"rows", rows}};
    emit(opt, os.str(), j);
    return 0;
}

int cmd_dims(const Options& opt) {
    GraphPtr g = load_graph(opt);
    DimensionReport r = dimension_report(g);
    std::ostringstream os;
    os << "kind: " << kind_str(r.kind) << "\n"
       << "n: " << r.n << "\n"
       << "nsph: " << r.nsph << "\n"
       << "cd(KVA) " << (r.cd_exact ? "= " : "<= ") << r.cd
       << (r.cd_exact ? " (exact)" : " (bound)") << "\n"
       << "vcd(VA) " << (r.vcd_exact ? "= " : "<= ") << r.vcd
       << (r.vcd_exact ? " (exact)" : " (bound)") << "\n";
    json j{{"command", "dims"},     {"graph", graph_json(g)}, {"kind", kind_str(r.kind)},
           {"n", r.n},              {"nsph", r.nsph},
           {"cd", r.cd},            {"cd_exact", r.cd_exact},
           {"vcd", r.vcd},          {"vcd_exact", r.vcd_exact}};
    emit(opt, os.str(), j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for virtual Artin groups: root systems, derived Coxeter "
                 "graphs, kernel presentations and the word problem"};
    app.require_subcommand(1);

    Options opt;
    if (const char* cap_env = std::getenv("VAW_CAP")) opt.cap = std::strtoull(cap_env, nullptr, 10);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--graph", opt.graph_text, "inline graph description");
        sub->add_option("--graph-file", opt.graph_file, "path to a graph description file");
        sub->add_option("--format", opt.format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--cap", opt.cap, "enumeration cap");
        return sub;
    };

    auto* c_classify = add_common(app.add_subcommand("classify", "classify the graph"));
    auto* c_roots = add_common(app.add_subcommand("roots", "enumerate the root system"));
    auto* roots_depth = c_roots->add_option("--depth", opt.depth, "witness-length bound");
    auto* c_mhat = add_common(app.add_subcommand("mhat", "derived Coxeter label of a root pair"));
    c_mhat->add_option("beta", opt.root_a, "first root")->required();
    c_mhat->add_option("gamma", opt.root_b, "second root")->required();
    c_mhat->add_option("--depth", opt.depth, "pair-orbit search depth");
    auto* c_present = add_common(app.add_subcommand("present", "emit a kernel presentation"));
    c_present->add_option("variant", opt.variant, "kva or pva")->required();
    c_present->add_option("--support", opt.support, "a root; repeat for each support root (default: full root system)")->allow_extra_args(false);
    c_present->add_flag("--full", opt.full, "use the full root system");
    c_present->add_option("--depth", opt.depth, "pair-orbit search depth");
    auto* c_rewrite = add_common(app.add_subcommand("rewrite", "rewrite a kernel word"));
    c_rewrite->add_option("word", opt.word, "word over s:<v> t:<v> tokens")->required();
    c_rewrite->add_option("--depth", opt.depth, "pair-orbit search depth");
    auto* c_solve = add_common(app.add_subcommand("solve", "decide triviality of a word"));
    c_solve->add_option("word", opt.word, "word over s:<v> t:<v> tokens")->required();
    c_solve->add_option("--depth", opt.depth, "pair-orbit search depth");
    auto* c_analyze = add_common(app.add_subcommand("analyze", "free-of-infinity analysis"));
    c_analyze->add_option("--support", opt.support, "a root; repeat for each support root (default: full root system)")->allow_extra_args(false);
    c_analyze->add_option("--depth", opt.depth, "pair-orbit search depth");
    auto* c_dims = add_common(app.add_subcommand("dims", "cohomological dimension report"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_classify->parsed()) return cmd_classify(opt);
        if (c_roots->parsed()) return cmd_roots(opt, roots_depth->count() > 0);
        if (c_mhat->parsed()) return cmd_mhat(opt);
        if (c_present->parsed()) return cmd_present(opt);
        if (c_rewrite->parsed()) return cmd_rewrite(opt);
        if (c_solve->parsed()) return cmd_solve(opt);
        if (c_analyze->parsed()) return cmd_analyze(opt);
        if (c_dims->parsed()) return cmd_dims(opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UndeterminedLabelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "vaw/roots.hpp"

using namespace vaw;

namespace {

Vec coords(const GraphPtr& g, std::initializer_list<long> cs) {
    Vec v;
    for (long c : cs) v.push_back(FieldElement::integer(g->context(), c));
    return v;
}

}  // namespace

TEST_CASE("root system of A2", "[roots]") {
    auto a2 = CoxeterGraph::parse("family A 2");
    RootSystem rs = RootSystem::enumerate(a2, std::nullopt);
    REQUIRE(rs.roots().size() == 6);
    CHECK(rs.complete());
    std::set<std::string> expect = {"[1,0]", "[0,1]", "[-1,0]", "[0,-1]", "[1,1]", "[-1,-1]"};
    std::set<std::string> got;
    for (const auto& r : rs.roots()) got.insert(r.str());
    CHECK(got == expect);
    SECTION("negation closure and positivity dichotomy") {
        for (const auto& r : rs.roots()) {
            Root neg = negate_root(a2, r);
            CHECK(rs.find(neg.coords()) >= 0);
            CHECK(is_positive(r) != is_positive(neg));
        }
    }
    SECTION("witnesses reproduce coordinates") {
        for (const auto& r : rs.roots()) {
            Vec img = element_of_word(a2, r.witness().word).apply(simple_root(a2, r.witness().simple));
            CHECK(vec_str(img) == r.str());
        }
    }
}

TEST_CASE("root counts match longest elements", "[roots]") {
    for (auto desc : {"family A 2", "family B 2", "family A 3"}) {
        auto g = CoxeterGraph::parse(desc);
        RootSystem rs = RootSystem::enumerate(g, std::nullopt);
        unsigned l0 = length(longest_element(g));
        CHECK(rs.roots().size() == 2 * l0);
        size_t positive = 0;
        for (const auto& r : rs.roots())
            if (is_positive(r)) ++positive;
        CHECK(positive == l0);
    }
}

TEST_CASE("truncated enumeration of an affine system", "[roots]") {
    auto ta2 = CoxeterGraph::parse("family tA 2");
    RootSystem rs = RootSystem::enumerate(ta2, 3);
    CHECK_FALSE(rs.complete());
    for (int s = 0; s < 3; ++s) CHECK(rs.find(simple_root(ta2, s)) >= 0);
    // s1(alpha_s2) = alpha_s1 + alpha_s2
    CHECK(rs.find(coords(ta2, {1, 1, 0})) >= 0);
    SECTION("still closed under negation") {
        for (const auto& r : rs.roots()) {
            Vec neg;
            for (const auto& c : r.coords()) neg.push_back(-c);
            CHECK(rs.find(neg) >= 0);
        }
    }
    SECTION("unbounded enumeration requires spherical") {
        CHECK_THROWS_AS(RootSystem::enumerate(ta2, std::nullopt), PreconditionError);
    }
}

TEST_CASE("reflections", "[roots]") {
    auto a2 = CoxeterGraph::parse("family A 2");
    RootSystem rs = RootSystem::enumerate(a2, std::nullopt);
    SECTION("simple roots reflect to generators") {
        for (int s = 0; s < 2; ++s)
            CHECK(w_equal(reflection_of_root(a2, simple_as_root(a2, s)), WElement::generator(a2, s)));
    }
    SECTION("r_beta = r_{-beta} and r_beta(beta) = -beta") {
        for (const auto& r : rs.roots()) {
            WElement rb = reflection_of_root(a2, r);
            CHECK(rb == reflection_of_root(a2, negate_root(a2, r)));
            Vec img = rb.apply(r.coords());
            for (size_t i = 0; i < img.size(); ++i) CHECK(img[i] == -r.coords()[i]);
        }
    }
    SECTION("the highest root of A2 reflects to sts") {
        int idx = rs.find(coords(a2, {1, 1}));
        REQUIRE(idx >= 0);
        CHECK(w_equal(reflection_of_root(a2, rs.roots()[static_cast<size_t>(idx)]),
                      element_of_word(a2, {0, 1, 0})));
    }
    SECTION("orthogonal vectors are fixed") {
        auto b2 = CoxeterGraph::parse("family B 2");
        RootSystem rsb = RootSystem::enumerate(b2, std::nullopt);
        for (const auto& r : rsb.roots()) {
            WElement rb = reflection_of_root(b2, r);
            for (int s = 0; s < 2; ++s) {
                Vec probe = simple_root(b2, s);
                if (!inner(b2, probe, r.coords()).is_zero()) continue;
                CHECK(vec_str(rb.apply(probe)) == vec_str(probe));
            }
        }
    }
}

TEST_CASE("positivity", "[roots]") {
    auto a2 = CoxeterGraph::parse("family A 2");
    CHECK(is_positive(simple_as_root(a2, 0)));
    CHECK_FALSE(is_positive(negate_root(a2, simple_as_root(a2, 0))));
    SECTION("mixed signs are rejected") {
        Root bad(coords(a2, {1, -1}), RootWitness{{}, 0});
        CHECK_THROWS_AS(is_positive(bad), PreconditionError);
    }
}

TEST_CASE("derived labels in A2", "[roots]") {
    auto a2 = CoxeterGraph::parse("family A 2");
    MhatOracle oracle(a2);
    RootSystem rs = RootSystem::enumerate(a2, std::nullopt);
    Root a12 = simple_as_root(a2, 0), a23 = simple_as_root(a2, 1);
    int i13 = rs.find(coords(a2, {1, 1}));
    REQUIRE(i13 >= 0);
    Root a13 = rs.roots()[static_cast<size_t>(i13)];

    CHECK(oracle(a12, a12) == MHatEntry::finite(1));
    CHECK(oracle(a12, a23) == MHatEntry::finite(3));
    CHECK(oracle(a12, a13).is_infinite());
    CHECK(inner(a2, a12.coords(), a13.coords()) == FieldElement::one(a2->context()));  // outside ]-2,0]
    CHECK(oracle(a12, negate_root(a2, a12)).is_infinite());
}

TEST_CASE("pair orbit tables", "[roots]") {
    SECTION("A2: six unordered pairs labeled 3") {
        auto a2 = CoxeterGraph::parse("family A 2");
        PairOrbitTable t = PairOrbitTable::build(a2);
        CHECK(t.size() == 6);
        for (const auto& [key, label] : t.entries()) CHECK(label == 3);
    }
    SECTION("commuting case: all sign combinations labeled 2") {
        auto g = CoxeterGraph::parse("vertices a b");
        PairOrbitTable t = PairOrbitTable::build(g);
        CHECK(t.size() == 4);
        for (const auto& [key, label] : t.entries()) CHECK(label == 2);
    }
    SECTION("B2 has pairs labeled 4") {
        auto b2 = CoxeterGraph::parse("family B 2");
        PairOrbitTable t = PairOrbitTable::build(b2);
        bool has4 = false;
        for (const auto& [key, label] : t.entries()) has4 = has4 || label == 4;
        CHECK(has4);
    }
    SECTION("infinite groups are rejected") {
        CHECK_THROWS_AS(PairOrbitTable::build(CoxeterGraph::parse("family tA 2")),
                        PreconditionError);
    }
}

TEST_CASE("derived label properties", "[roots]") {
    auto b2 = CoxeterGraph::parse("family B 2");
    MhatOracle oracle(b2);
    RootSystem rs = RootSystem::enumerate(b2, std::nullopt);
    SECTION("symmetry and the pairing law") {
        for (const auto& b : rs.roots())
            for (const auto& c : rs.roots()) {
                MHatEntry e = oracle(b, c);
                CHECK(e == oracle(c, b));
                if (e.is_finite() && e.value() >= 2) {
                    FieldElement expect = coxeter_value(Label::finite(e.value()), b2->context());
                    CHECK(inner(b2, b.coords(), c.coords()) == expect);
                }
            }
    }
    SECTION("equivariance under sampled elements") {
        std::mt19937 rng(5);
        auto elements = enumerate_group(b2, 100);
        for (int iter = 0; iter < 12; ++iter) {
            const WElement& w = elements[rng() % elements.size()];
            const Root& b = rs.roots()[rng() % rs.roots().size()];
            const Root& c = rs.roots()[rng() % rs.roots().size()];
            Root wb(w.apply(b.coords()), RootWitness{{}, 0});
            Root wc(w.apply(c.coords()), RootWitness{{}, 0});
            CHECK(oracle(b, c) == oracle(wb, wc));
        }
    }
}

TEST_CASE("pair-orbit search over an infinite group", "[roots]") {
    auto tc2 = CoxeterGraph::parse("family tC 2");  // labels 4, 4; affine
    // the pair {s1(alpha_1), s1(alpha_2)} is in the orbit of a simple pair
    WElement s1 = WElement::generator(tc2, 0);
    Root b(s1.apply(simple_root(tc2, 0)), RootWitness{{0}, 0});
    Root c(s1.apply(simple_root(tc2, 1)), RootWitness{{0}, 1});
    CHECK(mhat(tc2, b, c, 3) == MHatEntry::finite(4));
    SECTION("insufficient depth reports undetermined, never infinity") {
        MHatEntry e = mhat(tc2, b, c, 0);
        CHECK(e.is_undetermined());
        CHECK(e.depth() == 0);
    }
}

TEST_CASE("non-crystallographic systems", "[roots]") {
    SECTION("the pentagon group") {
        auto i25 = CoxeterGraph::parse("family I2 5");
        RootSystem rs = RootSystem::enumerate(i25, std::nullopt);
        CHECK(rs.roots().size() == 10);
        CHECK(length(longest_element(i25)) == 5);
        MhatOracle oracle(i25);
        CHECK(oracle(simple_as_root(i25, 0), simple_as_root(i25, 1)) == MHatEntry::finite(5));
        // coordinates live in Q(golden ratio): theta = 2cos(pi/5)
        bool irrational = false;
        for (const auto& r : rs.roots())
            for (const auto& c : r.coords()) irrational = irrational || !c.is_rational();
        CHECK(irrational);
    }
    SECTION("H3") {
        auto h3 = CoxeterGraph::parse("family H 3");
        CHECK(enumerate_group(h3, 200).size() == 120);
        RootSystem rs = RootSystem::enumerate(h3, std::nullopt);
        CHECK(rs.roots().size() == 30);
        CHECK(length(longest_element(h3)) == 15);
    }
}

TEST_CASE("bounded membership search", "[roots]") {
    auto a2 = CoxeterGraph::parse("family A 2");
    CHECK(find_root(a2, coords(a2, {1, 1}), 5).has_value());
    CHECK_FALSE(find_root(a2, coords(a2, {2, 1}), 6).has_value());
    auto a1a1 = CoxeterGraph::parse("vertices a b");
    CHECK_FALSE(find_root(a1a1, coords(a1a1, {1, 1}), 6).has_value());
}

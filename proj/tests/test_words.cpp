#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "vaw/words.hpp"

using namespace vaw;

namespace {

VAWord random_vaword(const GraphPtr& g, std::mt19937& rng, size_t len) {
    VAWord w(g);
    for (size_t i = 0; i < len; ++i) {
        bool sigma = rng() % 2 == 0;
        int v = static_cast<int>(rng() % g->rank());
        int e = rng() % 2 == 0 ? 1 : -1;
        w.push(sigma ? LetterKind::sigma : LetterKind::tau, v, e);
    }
    return w;
}

}  // namespace

TEST_CASE("word parsing and rendering", "[words]") {
    auto a2 = CoxeterGraph::parse("family A 2");
    VAWord w = VAWord::parse(a2, "t:s1 s:s2 t:s1 s:s2^-1 t:s1^-1 s:s2^-1");
    REQUIRE(w.letters().size() == 6);
    CHECK(w.letters()[0].kind == LetterKind::tau);
    CHECK(w.letters()[1].kind == LetterKind::sigma);
    CHECK(w.letters()[3].exp == -1);
    SECTION("tau exponents normalize to +1") {
        CHECK(w.letters()[4].exp == 1);
        CHECK(w.str() == "t:s1 s:s2 t:s1 s:s2^-1 t:s1 s:s2^-1");
    }
    SECTION("parse errors") {
        CHECK_THROWS_AS(VAWord::parse(a2, "x:s1"), ParseError);
        CHECK_THROWS_AS(VAWord::parse(a2, "s:zz"), ParseError);
        CHECK_THROWS_AS(VAWord::parse(a2, "s:s1^2"), ParseError);
    }
}

TEST_CASE("projections", "[words]") {
    auto a2 = CoxeterGraph::parse("family A 2");
    SECTION("tau maps to the generator under both projections") {
        VAWord w(a2);
        w.push(LetterKind::tau, 0, 1);
        CHECK(w_equal(pi_K(w), WElement::generator(a2, 0)));
        CHECK(w_equal(pi_P(w), WElement::generator(a2, 0)));
    }
    SECTION("sigma dies under pi_K and survives under pi_P") {
        for (int e : {1, -1}) {
            VAWord w(a2);
            w.push(LetterKind::sigma, 0, e);
            CHECK(pi_K(w).is_identity());
            CHECK(w_equal(pi_P(w), WElement::generator(a2, 0)));
        }
    }
    SECTION("tau tau cancels; tau sigma^-1 dies under pi_P") {
        VAWord w(a2);
        w.push(LetterKind::tau, 0, 1);
        w.push(LetterKind::tau, 0, 1);
        CHECK(pi_K(w).is_identity());
        VAWord v(a2);
        v.push(LetterKind::tau, 0, 1);
        v.push(LetterKind::sigma, 0, -1);
        CHECK(pi_P(v).is_identity());
        CHECK(pi_P(VAWord(a2)).is_identity());
    }
    SECTION("both projections are homomorphisms on concatenation") {
        std::mt19937 rng(3);
        auto a3 = CoxeterGraph::parse("family A 3");
        for (int iter = 0; iter < 30; ++iter) {
            VAWord u = random_vaword(a3, rng, rng() % 8);
            VAWord v = random_vaword(a3, rng, rng() % 8);
            CHECK(w_equal(pi_K(u * v), pi_K(u) * pi_K(v)));
            CHECK(w_equal(pi_P(u * v), pi_P(u) * pi_P(v)));
        }
    }
}

TEST_CASE("sections", "[words]") {
    auto a3 = CoxeterGraph::parse("family A 3");
    std::mt19937 rng(17);
    SECTION("pi_K composed with iota_W is the identity") {
        for (int iter = 0; iter < 100; ++iter) {
            Word u;
            for (size_t i = 0; i < rng() % 10; ++i) u.push_back(static_cast<int>(rng() % 3));
            VAWord w = iota_W(a3, u);
            for (const auto& l : w.letters()) CHECK(l.kind == LetterKind::tau);
            CHECK(w_equal(pi_K(w), element_of_word(a3, u)));
        }
    }
    SECTION("iota_A produces signed sigma words") {
        VAWord w = iota_A(a3, {{0, -1}, {2, 1}});
        REQUIRE(w.letters().size() == 2);
        CHECK(w.letters()[0].kind == LetterKind::sigma);
        CHECK(w.letters()[0].exp == -1);
        CHECK(w_equal(pi_P(w), element_of_word(a3, {0, 2})));
    }
}

TEST_CASE("kernel rewriting", "[words]") {
    auto a2 = CoxeterGraph::parse("family A 2");
    MhatOracle oracle(a2);
    SECTION("tau_s sigma_t tau_s becomes a single letter at the moved root") {
        KernelWord k = kernel_rewrite(VAWord::parse(a2, "t:s1 s:s2 t:s1"), oracle);
        REQUIRE(k.letters().size() == 1);
        CHECK(k.letters()[0].root.str() == "[1,1]");
        CHECK(k.letters()[0].exp == 1);
        REQUIRE(k.support().size() == 1);
    }
    SECTION("a bare sigma letter stays at the simple root") {
        KernelWord k = kernel_rewrite(VAWord::parse(a2, "s:s1"), oracle);
        REQUIRE(k.letters().size() == 1);
        CHECK(k.letters()[0].root.str() == "[1,0]");
    }
    SECTION("sigma_s tau_s sigma_s^-1 tau_s gives the free pair with an infinite label") {
        KernelWord k = kernel_rewrite(VAWord::parse(a2, "s:s1 t:s1 s:s1^-1 t:s1"), oracle);
        REQUIRE(k.letters().size() == 2);
        CHECK(k.letters()[0].root.str() == "[1,0]");
        CHECK(k.letters()[0].exp == 1);
        CHECK(k.letters()[1].root.str() == "[-1,0]");
        CHECK(k.letters()[1].exp == -1);
        REQUIRE(k.support().size() == 2);
        CHECK(k.labels()[0][1].is_infinite());
    }
    SECTION("words outside the kernel are rejected") {
        CHECK_THROWS_AS(kernel_rewrite(VAWord::parse(a2, "t:s1"), oracle), PreconditionError);
    }
    SECTION("well-definedness: equal roots from different witnesses") {
        // s1(alpha_s2) = s2(alpha_s1) in A2
        VAWord u = VAWord::parse(a2, "t:s1 s:s2 t:s1");
        VAWord v = VAWord::parse(a2, "t:s2 s:s1 t:s2");
        KernelWord ku = kernel_rewrite(u, oracle);
        KernelWord kv = kernel_rewrite(v, oracle);
        REQUIRE(ku.letters().size() == 1);
        REQUIRE(kv.letters().size() == 1);
        CHECK(ku.letters()[0].root.str() == kv.letters()[0].root.str());
        CHECK(ku.letters()[0].exp == kv.letters()[0].exp);
    }
}

TEST_CASE("the group action on kernel words", "[words]") {
    auto a2 = CoxeterGraph::parse("family A 2");
    MhatOracle oracle(a2);
    KernelWord k = kernel_rewrite(VAWord::parse(a2, "s:s2"), oracle);
    SECTION("the identity acts trivially") {
        KernelWord moved = w_action(WElement::identity(a2), k, oracle);
        CHECK(moved.letters()[0].root.str() == "[0,1]");
    }
    SECTION("s moves delta at alpha_t to the highest root") {
        KernelWord moved = w_action(WElement::generator(a2, 0), k, oracle);
        CHECK(moved.letters()[0].root.str() == "[1,1]");
    }
    SECTION("the longest element of B2 negates the simple roots") {
        auto b2 = CoxeterGraph::parse("family B 2");
        MhatOracle ob(b2);
        KernelWord kb = kernel_rewrite(VAWord::parse(b2, "s:s1"), ob);
        KernelWord moved = w_action(longest_element(b2), kb, ob);
        CHECK(moved.letters()[0].root.str() == "[-1,0]");
    }
}

TEST_CASE("kernel expansion", "[words]") {
    auto a2 = CoxeterGraph::parse("family A 2");
    MhatOracle oracle(a2);
    SECTION("delta at a simple root expands to the bare sigma") {
        KernelWord k = kernel_rewrite(VAWord::parse(a2, "s:s1"), oracle);
        CHECK(expand_kernel(k).str() == "s:s1");
    }
    SECTION("a moved letter expands to the conjugated form") {
        KernelWord k = kernel_rewrite(VAWord::parse(a2, "t:s1 s:s2 t:s1"), oracle);
        CHECK(expand_kernel(k).str() == "t:s1 s:s2 t:s1");
    }
    SECTION("round trip reproduces the letters exactly") {
        std::mt19937 rng(23);
        for (int iter = 0; iter < 20; ++iter) {
            VAWord u = iota_W(a2, {static_cast<int>(rng() % 2)});
            VAWord g = u * iota_A(a2, {{static_cast<int>(rng() % 2), rng() % 2 ? 1 : -1}}) * u.inverse();
            KernelWord k = kernel_rewrite(g, oracle);
            KernelWord k2 = kernel_rewrite(expand_kernel(k), oracle);
            REQUIRE(k.letters().size() == k2.letters().size());
            for (size_t i = 0; i < k.letters().size(); ++i) {
                CHECK(k.letters()[i].root.str() == k2.letters()[i].root.str());
                CHECK(k.letters()[i].exp == k2.letters()[i].exp);
            }
        }
    }
    SECTION("equivariance: conjugating the word matches acting on the letters") {
        std::mt19937 rng(29);
        auto b2 = CoxeterGraph::parse("family B 2");
        MhatOracle ob(b2);
        for (int iter = 0; iter < 15; ++iter) {
            Word conj;
            for (size_t i = 0; i < rng() % 5; ++i) conj.push_back(static_cast<int>(rng() % 2));
            VAWord g(b2);
            for (int j = 0; j < 3; ++j) {
                Word u;
                for (size_t i = 0; i < rng() % 3; ++i) u.push_back(static_cast<int>(rng() % 2));
                VAWord tw = iota_W(b2, u);
                g = g * tw * iota_A(b2, {{static_cast<int>(rng() % 2), rng() % 2 ? 1 : -1}}) *
                    tw.inverse();
            }
            WElement w = element_of_word(b2, conj);
            VAWord conjugated = iota_W(b2, conj) * g * iota_W(b2, conj).inverse();
            KernelWord lhs = kernel_rewrite(conjugated, ob);
            KernelWord rhs = w_action(w, kernel_rewrite(g, ob), ob);
            REQUIRE(lhs.letters().size() == rhs.letters().size());
            for (size_t i = 0; i < lhs.letters().size(); ++i) {
                CHECK(lhs.letters()[i].root.str() == rhs.letters()[i].root.str());
                CHECK(lhs.letters()[i].exp == rhs.letters()[i].exp);
            }
        }
    }
}

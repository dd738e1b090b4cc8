// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line each.  Exits nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "vaw/wordproblem.hpp"

using namespace vaw;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& what, const std::function<bool(std::string&)>& body) {
    std::string note;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        note = std::string("exception: ") + e.what();
        ok = false;
    }
    auto secs = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count() /
                1000.0;
    std::ostringstream line;
    line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << what << " ("
         << secs << "s)";
    if (!note.empty()) line << " -- " << note;
    std::cout << line.str() << std::endl;
    if (!ok) ++g_failures;
}

Vec coords(const GraphPtr& g, const std::vector<long>& cs) {
    Vec v;
    for (long c : cs) v.push_back(FieldElement::integer(g->context(), c));
    return v;
}

// Decodes a type-A root into its index pair (i,j), 1-based: a positive root
// is a consecutive run of ones.
std::pair<int, int> decode_a(const Root& r) {
    int first = -1, last = -1, sign = 0;
    const auto& c = r.coords();
    for (size_t k = 0; k < c.size(); ++k) {
        int s = c[k].sign();
        if (s == 0) continue;
        if (first < 0) {
            first = static_cast<int>(k);
            sign = s;
        }
        last = static_cast<int>(k);
    }
    int i = first + 1, j = last + 2;
    return sign > 0 ? std::make_pair(i, j) : std::make_pair(j, i);
}

MHatEntry index_rule(std::pair<int, int> p, std::pair<int, int> q) {
    if (p == q) return MHatEntry::finite(1);
    auto [a, b] = p;
    auto [c, d] = q;
    if ((b == c && a != d) || (d == a && c != b)) return MHatEntry::finite(3);
    if (a != c && a != d && b != c && b != d) return MHatEntry::finite(2);
    return MHatEntry::infinity();
}

MHatEntry orbit_based(const GraphPtr& g, const PairOrbitTable& table, const Root& b, const Root& c) {
    (void)g;
    if (b.same_coords(c)) return MHatEntry::finite(1);
    auto found = table.find(b.coords(), c.coords());
    return found ? MHatEntry::finite(*found) : MHatEntry::infinity();
}

VAWord sigma_relator(const GraphPtr& g, int s, int t) {
    unsigned m = g->label(s, t).value();
    VAWord w(g);
    for (int v : alternating_product(s, t, m, Side::right)) w.push(LetterKind::sigma, v, 1);
    auto rhs = alternating_product(t, s, m, Side::right);
    for (auto it = rhs.rbegin(); it != rhs.rend(); ++it) w.push(LetterKind::sigma, *it, -1);
    return w;
}

VAWord tau_relator(const GraphPtr& g, int s, int t) {
    unsigned m = g->label(s, t).value();
    VAWord w(g);
    for (int v : alternating_product(s, t, m, Side::right)) w.push(LetterKind::tau, v, 1);
    auto rhs = alternating_product(t, s, m, Side::right);
    for (auto it = rhs.rbegin(); it != rhs.rend(); ++it) w.push(LetterKind::tau, *it, 1);
    return w;
}

VAWord mixed_relator(const GraphPtr& g, int s, int t) {
    unsigned m = g->label(s, t).value();
    int r = (m % 2 == 0) ? s : t;
    VAWord w(g);
    auto prod = alternating_product(t, s, m - 1, Side::right);
    for (int v : prod) w.push(LetterKind::tau, v, 1);
    w.push(LetterKind::sigma, s, 1);
    for (auto it = prod.rbegin(); it != prod.rend(); ++it) w.push(LetterKind::tau, *it, 1);
    w.push(LetterKind::sigma, r, -1);
    return w;
}

VAWord random_conjugator(const GraphPtr& g, std::mt19937& rng, size_t len) {
    VAWord w(g);
    for (size_t i = 0; i < len; ++i) {
        bool sigma = rng() % 2 == 0;
        w.push(sigma ? LetterKind::sigma : LetterKind::tau, static_cast<int>(rng() % g->rank()),
               rng() % 2 ? 1 : -1);
    }
    return w;
}

VAWord random_relator_product(const GraphPtr& g, std::mt19937& rng) {
    std::vector<std::pair<int, int>> finite_pairs;
    for (int s = 0; s < g->rank(); ++s)
        for (int t = s + 1; t < g->rank(); ++t)
            if (g->label(s, t).is_finite()) finite_pairs.emplace_back(s, t);
    VAWord out(g);
    size_t blocks = 1 + rng() % 3;
    for (size_t b = 0; b < blocks; ++b) {
        auto [s, t] = finite_pairs[rng() % finite_pairs.size()];
        VAWord relator(g);
        switch (rng() % 4) {
            case 0: relator = sigma_relator(g, s, t); break;
            case 1: relator = tau_relator(g, s, t); break;
            case 2: relator = mixed_relator(g, s, t); break;
            default: {
                relator.push(LetterKind::tau, s, 1);
                relator.push(LetterKind::tau, s, 1);
                break;
            }
        }
        if (rng() % 2) relator = relator.inverse();
        VAWord conj = random_conjugator(g, rng, rng() % 5);
        out = out * conj * relator * conj.inverse();
    }
    return out;
}

// A kernel word is within the implemented tiers when every support component
// either free-reduces to nothing or classifies spherical or carries only
// labels 2 and infinity.  Decided from the exact label table, not from the
// solver's verdict.
bool within_tiers(const GammaHat& h, const KernelWord& k) {
    for (auto& [verts, word] : component_split(h, k)) {
        SignedWord reduced;
        for (auto& l : word) {
            if (!reduced.empty() && reduced.back().first == l.first &&
                reduced.back().second == -l.second) {
                reduced.pop_back();
            } else {
                reduced.push_back(l);
            }
        }
        if (reduced.empty()) continue;
        GammaHat sub = h.restrict_to(verts);
        if (classify(sub.as_coxeter_graph()).kind == Kind::spherical) continue;
        bool raag = true;
        for (int i = 0; i < sub.size() && raag; ++i)
            for (int j = i + 1; j < sub.size(); ++j) {
                MHatEntry e = sub.label(i, j);
                if (e.is_finite() && e.value() > 2) {
                    raag = false;
                    break;
                }
            }
        if (!raag) return false;
    }
    return true;
}

VAWord center_witness(const GraphPtr& g) {
    WElement w0 = longest_element(g);
    VAWord w(g);
    for (int s : w0.witness()) w.push(LetterKind::tau, s, 1);
    w.push(LetterKind::sigma, 0, 1);
    for (auto it = w0.witness().rbegin(); it != w0.witness().rend(); ++it)
        w.push(LetterKind::tau, *it, 1);
    w.push(LetterKind::sigma, 0, -1);
    return w;
}

}  // namespace

int main() {
    criterion(1, "index rules for the derived labels of A2 and A3", [](std::string& note) {
        for (int n : {2, 3}) {
            auto g = CoxeterGraph::parse("family A " + std::to_string(n));
            RootSystem rs = RootSystem::enumerate(g, std::nullopt);
            if (rs.roots().size() != static_cast<size_t>(n * (n + 1))) {
                note = "unexpected root count";
                return false;
            }
            PairOrbitTable table = PairOrbitTable::build(g);
            for (const auto& b : rs.roots())
                for (const auto& c : rs.roots()) {
                    MHatEntry got = orbit_based(g, table, b, c);
                    MHatEntry want = index_rule(decode_a(b), decode_a(c));
                    if (got != want) {
                        note = "A" + std::to_string(n) + ": " + b.str() + ", " + c.str() +
                               " gave " + got.str() + ", expected " + want.str();
                        return false;
                    }
                }
        }
        return true;
    });

    criterion(2, "simply laced closed form against orbits on D4", [](std::string& note) {
        auto g = CoxeterGraph::parse("family D 4");
        RootSystem rs = RootSystem::enumerate(g, std::nullopt);
        if (rs.roots().size() != 24) {
            note = "expected 24 roots, got " + std::to_string(rs.roots().size());
            return false;
        }
        PairOrbitTable table = PairOrbitTable::build(g);
        FieldElement zero = FieldElement::zero(g->context());
        FieldElement minus_one = FieldElement::integer(g->context(), -1);
        for (const auto& b : rs.roots())
            for (const auto& c : rs.roots()) {
                MHatEntry got = orbit_based(g, table, b, c);
                MHatEntry want = MHatEntry::infinity();
                FieldElement pairing = inner(g, b.coords(), c.coords());
                if (b.same_coords(c)) {
                    want = MHatEntry::finite(1);
                } else if (pairing == zero) {
                    want = MHatEntry::finite(2);
                } else if (pairing == minus_one) {
                    want = MHatEntry::finite(3);
                }
                if (got != want) {
                    note = b.str() + ", " + c.str() + " gave " + got.str() + ", expected " +
                           want.str();
                    return false;
                }
            }
        return true;
    });

    criterion(3, "root counts, group orders and the longest elements", [](std::string& note) {
        auto a2 = CoxeterGraph::parse("family A 2");
        auto b2 = CoxeterGraph::parse("family B 2");
        if (RootSystem::enumerate(a2, std::nullopt).roots().size() != 6) {
            note = "|Phi(A2)| != 6";
            return false;
        }
        if (RootSystem::enumerate(b2, std::nullopt).roots().size() != 8) {
            note = "|Phi(B2)| != 8";
            return false;
        }
        if (enumerate_group(a2, 100).size() != 6 || enumerate_group(b2, 100).size() != 8) {
            note = "group orders are off";
            return false;
        }
        for (auto g : {a2, b2}) {
            RootSystem rs = RootSystem::enumerate(g, std::nullopt);
            size_t positives = 0;
            for (const auto& r : rs.roots())
                if (is_positive(r)) ++positives;
            if (positives != length(longest_element(g))) {
                note = "lg(w0) != |Phi+|";
                return false;
            }
        }
        WElement w0 = longest_element(b2);
        for (int s = 0; s < 2; ++s) {
            if (!w_equal(w0 * WElement::generator(b2, s), WElement::generator(b2, s) * w0)) {
                note = "w0 of B2 is not central";
                return false;
            }
            Vec img = w0.apply(simple_root(b2, s));
            Vec neg = simple_root(b2, s);
            for (auto& e : neg) e = -e;
            if (vec_str(img) != vec_str(neg)) {
                note = "w0 does not negate alpha_" + std::to_string(s);
                return false;
            }
        }
        return true;
    });

    criterion(4, "free-of-infinity subsets stay spherical or affine with both bounds",
              [](std::string& note) {
                  for (auto desc : {"family A 2", "family B 2", "family A 3"}) {
                      auto g = CoxeterGraph::parse(desc);
                      MhatOracle oracle(g);
                      RootSystem rs = RootSystem::enumerate(g, std::nullopt);
                      GammaHat h = GammaHat::build(g, rs.roots(), oracle);
                      FoiReport rep = foi_analysis(h);
                      if (!rep.all_spherical_or_affine || !rep.nsph_bound_ok || !rep.size_bound_ok) {
                          note = std::string(desc) + ": a bound failed";
                          return false;
                      }
                  }
                  // the positive-negative triangle of A2 is the affine cycle
                  auto a2 = CoxeterGraph::parse("family A 2");
                  MhatOracle oracle(a2);
                  RootSystem rs = RootSystem::enumerate(a2, std::nullopt);
                  std::vector<Root> tri;
                  for (auto c : std::vector<std::vector<long>>{{1, 0}, {0, 1}, {-1, -1}})
                      tri.push_back(rs.roots()[static_cast<size_t>(rs.find(coords(a2, c)))]);
                  GammaHat h = GammaHat::build(a2, tri, oracle);
                  Classification cls = h.classification();
                  if (cls.kind != Kind::affine || cls.components[0].family != "tA2") {
                      note = "the A2 triangle is not affine of cycle type";
                      return false;
                  }
                  return true;
              });

    criterion(5, "reversal law for the Z-words of B2", [](std::string& note) {
        auto b2 = CoxeterGraph::parse("family B 2");
        MhatOracle oracle(b2);
        RootSystem rs = RootSystem::enumerate(b2, std::nullopt);
        GammaHat h = GammaHat::build(b2, rs.roots(), oracle);
        int finite_pairs = 0;
        for (int i = 0; i < h.size(); ++i)
            for (int j = i + 1; j < h.size(); ++j) {
                MHatEntry e = h.label(i, j);
                if (!e.is_finite()) continue;
                ++finite_pairs;
                auto fwd = z_word(b2, h.vertex(i), h.vertex(j), e.value());
                auto bwd = z_word(b2, h.vertex(j), h.vertex(i), e.value());
                for (size_t k = 0; k < fwd.size(); ++k)
                    if (fwd[k].str() != bwd[fwd.size() - 1 - k].str()) {
                        note = "reversal failed at " + h.vertex(i).str() + ", " + h.vertex(j).str();
                        return false;
                    }
            }
        if (finite_pairs == 0) {
            note = "no finite pairs were exercised";
            return false;
        }
        Presentation p = pva_presentation(h);
        for (const auto& [lhs, rhs] : p.relations) {
            std::vector<int> rev(rhs.rbegin(), rhs.rend());
            if (rev != lhs) {
                note = "a printed relation is not a palindrome pair";
                return false;
            }
        }
        return true;
    });

    criterion(6, "presentations restricted to the simples and the full A2 system",
              [](std::string& note) {
                  for (auto desc : {"family A 3", "family B 2", "family tA 2"}) {
                      auto g = CoxeterGraph::parse(desc);
                      MhatOracle oracle(g);
                      std::vector<Root> pi;
                      for (int s = 0; s < g->rank(); ++s) pi.push_back(simple_as_root(g, s));
                      GammaHat h = GammaHat::build(g, pi, oracle);
                      Presentation p = kva_presentation(h);
                      if (p.generators.size() != static_cast<size_t>(g->rank())) {
                          note = std::string(desc) + ": generator count mismatch";
                          return false;
                      }
                      for (int i = 0; i < g->rank(); ++i)
                          for (int j = i + 1; j < g->rank(); ++j) {
                              Label l = g->label(i, j);
                              MHatEntry e = h.label(i, j);
                              bool match = l.is_infinite() ? e.is_infinite()
                                                           : e == MHatEntry::finite(l.value());
                              if (!match) {
                                  note = std::string(desc) + ": label mismatch on the simples";
                                  return false;
                              }
                          }
                  }
                  auto a2 = CoxeterGraph::parse("family A 2");
                  MhatOracle oracle(a2);
                  RootSystem rs = RootSystem::enumerate(a2, std::nullopt);
                  GammaHat h = GammaHat::build(a2, rs.roots(), oracle);
                  Presentation p = pva_presentation(h);
                  if (p.generators.size() != 6 || p.relations.size() != 6) {
                      note = "full A2 should give 6 generators and 6 relations";
                      return false;
                  }
                  for (const auto& [lhs, rhs] : p.relations) {
                      if (lhs.size() != 3) {
                          note = "a relation is not of length 3";
                          return false;
                      }
                      std::vector<int> rev(rhs.rbegin(), rhs.rend());
                      if (rev != lhs) {
                          note = "a relation is not the reverse of its partner";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(7, "random relator products are trivial, named words nontrivial",
              [](std::string& note) {
                  std::mt19937 rng(20260812);
                  for (auto desc : {"family A 2", "family B 2"}) {
                      auto g = CoxeterGraph::parse(desc);
                      MhatOracle oracle(g);
                      int accepted = 0, attempts = 0;
                      while (accepted < 200 && attempts < 4000) {
                          ++attempts;
                          VAWord w = random_relator_product(g, rng);
                          KernelWord k = kernel_rewrite(w, oracle);
                          GammaHat h = GammaHat::from_kernel(k);
                          SolveOutcome out = artin_solve(h, k);
                          if (out.verdict == Verdict::nontrivial) {
                              note = std::string(desc) + ": a relator product was called nontrivial";
                              return false;
                          }
                          if (within_tiers(h, k)) {
                              ++accepted;
                              if (out.verdict != Verdict::trivial) {
                                  note = std::string(desc) +
                                         ": an in-tier relator product was not declared trivial";
                                  return false;
                              }
                          }
                      }
                      if (accepted < 200) {
                          note = std::string(desc) + ": only " + std::to_string(accepted) +
                                 " in-tier samples";
                          return false;
                      }
                  }
                  for (auto desc : {"family A 2", "family B 2"}) {
                      auto g = CoxeterGraph::parse(desc);
                      MhatOracle oracle(g);
                      std::vector<VAWord> nontrivial;
                      VAWord tau(g);
                      tau.push(LetterKind::tau, 0, 1);
                      nontrivial.push_back(tau);
                      VAWord sigma(g);
                      sigma.push(LetterKind::sigma, 0, 1);
                      nontrivial.push_back(sigma);
                      VAWord pair(g);  // delta_beta delta_{-beta}^-1
                      pair.push(LetterKind::sigma, 0, 1);
                      pair.push(LetterKind::tau, 0, 1);
                      pair.push(LetterKind::sigma, 0, -1);
                      pair.push(LetterKind::tau, 0, 1);
                      nontrivial.push_back(pair);
                      nontrivial.push_back(center_witness(g));
                      if (g->rank() == 2 && g->label(0, 1) == Label::finite(3)) {
                          VAWord comm(g);
                          comm.push(LetterKind::sigma, 0, 1);
                          comm.push(LetterKind::sigma, 1, 1);
                          comm.push(LetterKind::sigma, 0, -1);
                          comm.push(LetterKind::sigma, 1, -1);
                          nontrivial.push_back(comm);
                      }
                      for (const auto& w : nontrivial)
                          if (va_solve(g, w, oracle).verdict != Verdict::nontrivial) {
                              note = std::string(desc) + ": '" + w.str() +
                                     "' was not declared nontrivial";
                              return false;
                          }
                  }
                  return true;
              });

    criterion(8, "Garside engine determinism and cancellation", [](std::string& note) {
        auto a2 = CoxeterGraph::parse("family A 2");
        GarsideForm f1 = garside_normal_form(a2, {{0, 1}, {1, 1}, {0, 1}});
        GarsideForm f2 = garside_normal_form(a2, {{1, 1}, {0, 1}, {1, 1}});
        if (!f1.equal(f2)) {
            note = "the two halves of Delta disagree";
            return false;
        }
        std::mt19937 rng(99);
        MhatOracle oracle(a2);
        for (int iter = 0; iter < 100; ++iter) {
            VAWord w(a2);
            for (int i = 0; i < 30; ++i) {
                bool sigma = rng() % 2 == 0;
                w.push(sigma ? LetterKind::sigma : LetterKind::tau,
                       static_cast<int>(rng() % 2), rng() % 2 ? 1 : -1);
            }
            SolveOutcome out = va_solve(a2, w * w.inverse(), oracle);
            if (out.verdict != Verdict::trivial) {
                note = "w w^-1 was not declared trivial";
                return false;
            }
        }
        for (int iter = 0; iter < 30; ++iter) {
            SignedWord w;
            for (int i = 0; i < 20; ++i)
                w.emplace_back(static_cast<int>(rng() % 2), rng() % 2 ? 1 : -1);
            size_t cut = 1 + rng() % (w.size() - 1);
            SignedWord left(w.begin(), w.begin() + static_cast<long>(cut));
            SignedWord right(w.begin() + static_cast<long>(cut), w.end());
            GarsideForm whole = garside_normal_form(a2, w);
            GarsideForm split = garside_product(a2, garside_normal_form(a2, left),
                                                garside_normal_form(a2, right));
            if (!whole.equal(split)) {
                note = "normal form depends on the evaluation order";
                return false;
            }
        }
        return true;
    });

    criterion(9, "rewrite round trips and equivariance", [](std::string& note) {
        std::mt19937 rng(4242);
        for (auto desc : {"family A 2", "family B 2", "family A 3"}) {
            auto g = CoxeterGraph::parse(desc);
            MhatOracle oracle(g);
            RootSystem rs = RootSystem::enumerate(g, std::nullopt);
            for (int iter = 0; iter < 34; ++iter) {
                VAWord word(g);
                size_t letters = 1 + rng() % 6;
                for (size_t i = 0; i < letters; ++i) {
                    const Root& r = rs.roots()[rng() % rs.roots().size()];
                    for (int s : r.witness().word) word.push(LetterKind::tau, s, 1);
                    word.push(LetterKind::sigma, r.witness().simple, rng() % 2 ? 1 : -1);
                    for (auto it = r.witness().word.rbegin(); it != r.witness().word.rend(); ++it)
                        word.push(LetterKind::tau, *it, 1);
                }
                KernelWord k = kernel_rewrite(word, oracle);
                KernelWord back = kernel_rewrite(expand_kernel(k), oracle);
                if (k.letters().size() != back.letters().size()) {
                    note = std::string(desc) + ": letter count changed in a round trip";
                    return false;
                }
                for (size_t i = 0; i < k.letters().size(); ++i)
                    if (k.letters()[i].root.str() != back.letters()[i].root.str() ||
                        k.letters()[i].exp != back.letters()[i].exp) {
                        note = std::string(desc) + ": a round trip changed a letter";
                        return false;
                    }
                // equivariance under a sampled element
                Word conj;
                for (size_t i = 0; i < rng() % 4; ++i)
                    conj.push_back(static_cast<int>(rng() % g->rank()));
                WElement w = element_of_word(g, conj);
                KernelWord lhs =
                    kernel_rewrite(iota_W(g, conj) * word * iota_W(g, conj).inverse(), oracle);
                KernelWord rhs = w_action(w, k, oracle);
                if (lhs.letters().size() != rhs.letters().size()) {
                    note = std::string(desc) + ": equivariance letter counts differ";
                    return false;
                }
                for (size_t i = 0; i < lhs.letters().size(); ++i)
                    if (lhs.letters()[i].root.str() != rhs.letters()[i].root.str() ||
                        lhs.letters()[i].exp != rhs.letters()[i].exp) {
                        note = std::string(desc) + ": equivariance failed";
                        return false;
                    }
            }
        }
        return true;
    });

    criterion(10, "dimension reports", [](std::string& note) {
        struct Case {
            const char* desc;
            int cd, vcd;
            bool exact;
        };
        for (auto c : {Case{"family A 1", 1, 1, true}, Case{"family A 3", 3, 3, true},
                       Case{"family B 2", 2, 2, true}, Case{"family tA 2", 3, 5, false},
                       Case{"family tA 1", 2, 3, false}}) {
            DimensionReport r = dimension_report(CoxeterGraph::parse(c.desc));
            if (r.cd != c.cd || r.vcd != c.vcd || r.cd_exact != c.exact ||
                r.vcd_exact != c.exact) {
                note = std::string(c.desc) + ": got cd " + std::to_string(r.cd) + ", vcd " +
                       std::to_string(r.vcd);
                return false;
            }
        }
        return true;
    });

    if (g_failures == 0) {
        std::cout << "all acceptance criteria passed" << std::endl;
        return 0;
    }
    std::cout << g_failures << " acceptance criteria failed" << std::endl;
    return 1;
}

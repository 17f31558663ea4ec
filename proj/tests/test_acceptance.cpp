#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <iostream>
#include <random>
#include <set>

#include "cycdes/bijections.hpp"
#include "cycdes/distributions.hpp"
#include "cycdes/schur.hpp"
#include "cycdes/verify.hpp"
#include "oracles.hpp"

using namespace cycdes;

namespace {

double run_and_report(const std::string& label, const std::function<std::string()>& body,
                      std::string* witness_out) {
    auto start = std::chrono::steady_clock::now();
    std::string witness;
    try {
        witness = body();
    } catch (const std::exception& e) {
        witness = std::string("exception: ") + e.what();
    }
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cout << (witness.empty() ? "[PASS] " : "[FAIL] ") << label << "  ("
              << elapsed.count() << "s)";
    if (!witness.empty()) std::cout << "  " << witness;
    std::cout << "\n" << std::flush;
    *witness_out = witness;
    return elapsed.count();
}

std::string claim_failures(const std::string& id, int lo, int hi) {
    VerifyOptions options;
    options.run_all = false;
    for (const VerificationReport& r : run_claim(id, lo, hi, options))
        if (!r.pass) return id + " " + r.params_str() + ": " + r.counterexample;
    return "";
}

}  // namespace

TEST_CASE("criterion 1: ground-truth examples") {
    std::string witness;
    double elapsed = run_and_report("criterion 1: ground-truth worked examples", []() -> std::string {
        if (cdes_set(Permutation::parse("21453")) != Mask(5, {1, 4, 5})) return "cdes(21453)";

        Tableau fig1(SkewShape::parse("5,4,2/1,1"), {1, 3, 4, 8, 2, 5, 7, 6, 9});
        if (des_set_syt(fig1) != Mask(8, {1, 4, 5, 8})) return "skew tableau descent set";

        Tableau vert(SkewShape::parse("(1^2)+(2)"), {3, 4, 1, 2});
        Mask vexp[4] = {Mask(4, {1, 4}), Mask(4, {1, 2}), Mask(4, {2, 3}), Mask(4, {3, 4})};
        for (int j = 0; j < 4; ++j)
            if (cdes_strip(rotate_strip(vert, j)) != vexp[j]) return "vertical strip quadruple";
        Tableau horiz(SkewShape::parse("(2)+(2)"), {3, 4, 1, 2});
        Mask hexp[4] = {Mask(4, {4}), Mask(4, {1}), Mask(4, {2}), Mask(4, {3})};
        for (int j = 0; j < 4; ++j)
            if (cdes_strip(rotate_strip(horiz, j)) != hexp[j]) return "horizontal strip quadruple";

        if (cdes_set(Permutation::parse("2143")) != Mask(4, {1, 3, 4})) return "cdes(2143)";
        if (cdes_set(Permutation::parse("2413")) != Mask(4, {2, 4})) return "cdes(2413)";

        // two-run, multi-run and interleaving rearrangements
        Permutation two = Permutation::parse("1,2,3,8,9,4,10,11,5,6,12,7");
        Word w = encode_shuffle(two, Composition{{7, 5}});
        if (decode_shuffle(word_f(w), Composition{{5, 7}}) !=
            Permutation::parse("1,6,7,8,9,2,3,10,4,11,12,5"))
            return "two-run rearrangement";
        Permutation multi = Permutation::parse("1,6,7,2,12,3,8,9,13,10,4,14,5,11");
        if (multi_shuffle_phi(multi, Composition{{5, 6, 3}}) !=
            Permutation::parse("1,10,11,4,12,5,6,7,13,8,2,14,3,9"))
            return "multi-run rearrangement";
        if (circledast(Permutation::parse("1342"), Permutation::parse("561423"),
                       Composition{{2, 2, 0}, true}, Composition{{3, 1, 2}, true}) !=
            Permutation::parse("1,6,7,2,9,10,3,8,4,5"))
            return "interleaving product";

        Permutation psi_in = Permutation::parse("13,6,14,15,7,16,1,8,9,10,2,3,4,11,12,5");
        if (psi_singleton(psi_in, 7) !=
            Permutation::parse("13,6,14,15,7,16,1,2,8,9,3,4,10,11,12,5"))
            return "singleton bijection at n=16";

        if (arc_phi(Permutation::parse("672819435")) != Permutation::parse("675849312"))
            return "arc map example";
        if (arc_psi(Permutation::parse("675849312")) != Permutation::parse("672819435"))
            return "arc map inverse example";

        Tableau ftau = arc_to_syt(Permutation::parse("342156"));
        if (ftau != Tableau(SkewShape::near_hook(6, 2), {6, 1, 2, 5, 3, 4}))
            return "near-hook image of tau";
        Tableau fsigma = arc_to_syt(Permutation::parse("215634"));
        if (fsigma != Tableau(SkewShape::near_hook(6, 2), {4, 1, 3, 6, 2, 5}))
            return "near-hook image of sigma";
        if (arc_perm_to_syt(Permutation::parse("213645")) != fsigma)
            return "arc permutation image";
        return "";
    }, &witness);
    REQUIRE(witness.empty());
    CHECK(elapsed < 1.0);
}

TEST_CASE("criterion 2: equidistribution with t-tracking") {
    std::string witness;
    double elapsed = run_and_report(
        "criterion 2: cDes/t equidistribution on rotated inverse descent classes, n=3..8",
        []() { return claim_failures("thm-equid", 3, 8); }, &witness);
    REQUIRE(witness.empty());
    CHECK(elapsed < 60.0);
}

TEST_CASE("criterion 3: verified certificates for the rotated classes") {
    std::string witness;
    run_and_report(
        "criterion 3: certificates on vertical/horizontal rotations, count classes and orbits",
        []() -> std::string {
            if (std::string f = claim_failures("thm-csp-vertical", 3, 8); !f.empty()) return f;
            if (std::string f = claim_failures("thm-csp-horizontal", 3, 8); !f.empty()) return f;
            if (std::string f = claim_failures("cor-cnk", 3, 7); !f.empty()) return f;
            if (std::string f = claim_failures("cor-orbit", 3, 7); !f.empty()) return f;
            return "";
        },
        &witness);
    REQUIRE(witness.empty());
}

TEST_CASE("criterion 4: arc permutations against the near-hook family") {
    std::string witness;
    run_and_report("criterion 4: arc permutations match near-hook tableaux bijectively, n=2..9",
                   []() { return claim_failures("thm-arc-syt", 2, 9); }, &witness);
    REQUIRE(witness.empty());
}

TEST_CASE("criterion 5: bijection sweeps") {
    std::string witness;
    run_and_report("criterion 5: exhaustive bijection sweeps", []() -> std::string {
        // the binary block swap over every word of length <= 12
        for (int n = 1; n <= 12; ++n) {
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
                Word w;
                for (int i = 0; i < n; ++i) w.letters.push_back((bits >> i) & 1 ? 2 : 1);
                Word fw = word_f(w);
                if (!(word_f(fw) == w)) return "block swap is not an involution";
                for (int i = 0; i + 1 < n; ++i) {
                    bool before = w.letters[static_cast<std::size_t>(i)] > w.letters[static_cast<std::size_t>(i + 1)];
                    bool after = fw.letters[static_cast<std::size_t>(i)] > fw.letters[static_cast<std::size_t>(i + 1)];
                    if (before != after) return "block swap moved a descent";
                }
            }
        }
        for (int a = 0; a <= 12; ++a)
            for (int b = 0; a + b <= 12; ++b) {
                if (a + b == 0) continue;
                Composition g{{a, b}, true};
                Composition rev{{b, a}, true};
                std::set<Permutation> images;
                for (const Permutation& pi : shuffle_set(g)) {
                    Permutation out = decode_shuffle(word_f(encode_shuffle(pi, g)), rev);
                    if (des_set(out) != des_set(pi)) return "two-run map moved a descent";
                    if (!in_shuffle_set(out, rev)) return "two-run map left the target";
                    images.insert(out);
                }
                if (images.size() != shuffle_set(rev).size()) return "two-run map not bijective";
            }

        // the multi-run rearrangement over every composition of n <= 8
        for (int n = 2; n <= 8; ++n) {
            const std::uint64_t lim = std::uint64_t{1} << (n - 1);
            for (std::uint64_t bits = 0; bits < lim; ++bits) {
                Composition g = subset_to_composition(Mask::from_bits(n - 1, bits), n);
                Composition rev;
                rev.parts.assign(g.parts.rbegin(), g.parts.rend());
                std::set<Permutation> images;
                for (const Permutation& pi : shuffle_set(g)) {
                    Permutation out = multi_shuffle_phi(pi, g);
                    if (des_set(out) != des_set(pi)) return "multi-run map moved a descent";
                    if (!in_shuffle_set(out, rev)) return "multi-run map left the target";
                    images.insert(out);
                }
                if (images.size() != shuffle_set(g).size()) return "multi-run map not bijective";
            }
        }

        // the singleton-class bijection for every j, n <= 9
        for (int n = 3; n <= 9; ++n)
            for (int j = 1; j <= n - 2; ++j) {
                Mask jm(n - 1, {j});
                PermSet base = inverse_descent_class(n - 1, jm);
                PermSet domain = vertical_closure(base, n);
                PermSet target = horizontal_closure(base, n);
                std::set<Permutation> images;
                for (const Permutation& pi : domain) {
                    Permutation out = psi_singleton(pi, j);
                    if (cdes_set(out) != cdes_set(pi)) return "singleton map moved cDes";
                    if (out.position_of_max() != pi.position_of_max())
                        return "singleton map moved the largest letter";
                    if (!target.contains(out)) return "singleton map left the target";
                    images.insert(out);
                }
                if (images.size() != target.size()) return "singleton map not bijective";
            }

        // the arc maps for n <= 9
        for (int n = 2; n <= 9; ++n) {
            PermSet domain = horizontal_closure(left_unimodal(n - 1), n);
            PermSet arcs = arc_permutations(n);
            std::set<Permutation> images;
            for (const Permutation& pi : domain) {
                Permutation out = arc_phi(pi);
                if (cdes_set(out) != cdes_set(pi)) return "arc map moved cDes";
                if (out.position_of_max() != pi.position_of_max())
                    return "arc map moved the largest letter";
                if (!arcs.contains(out)) return "arc map left the arc class";
                if (!(arc_psi(out) == pi)) return "arc maps are not mutually inverse";
                images.insert(out);
            }
            if (images.size() != arcs.size()) return "arc map not bijective";
        }
        return "";
    }, &witness);
    REQUIRE(witness.empty());
}

TEST_CASE("criterion 6: fiber inversion dual paths") {
    std::string witness;
    run_and_report("criterion 6: fiber inversion vs explicit maps, n=2..8",
                   []() { return claim_failures("lemma-fibers", 2, 8); }, &witness);
    REQUIRE(witness.empty());
}

TEST_CASE("criterion 7: structural identities") {
    std::string witness;
    run_and_report("criterion 7: decomposition lemmas and closed-form certificates",
                   []() -> std::string {
                       if (std::string f = claim_failures("lemma-v", 2, 7); !f.empty()) return f;
                       if (std::string f = claim_failures("lemma-simpl", 2, 7); !f.empty()) return f;
                       if (std::string f = claim_failures("eq-hook-strip", 2, 9); !f.empty()) return f;
                       if (std::string f = claim_failures("ex-sn-identity", 2, 7); !f.empty()) return f;
                       return "";
                   },
                   &witness);
    REQUIRE(witness.empty());
}

TEST_CASE("criterion 8: exact solver round trips") {
    std::string witness;
    run_and_report(
        "criterion 8: 100 random unions of inverse descent classes round-trip exactly",
        []() -> std::string {
            std::mt19937_64 rng(577215664901532860ULL);
            for (int trial = 0; trial < 100; ++trial) {
                int n = 3 + static_cast<int>(rng() % 6);  // 3..8
                const std::uint64_t lim = std::uint64_t{1} << (n - 1);
                std::set<std::uint64_t> chosen;
                for (std::uint64_t bits = 0; bits < lim; ++bits)
                    if (rng() & 1) chosen.insert(bits);
                std::vector<Permutation> members;
                oracles::for_each_perm(n, [&](const Permutation& pi) {
                    if (chosen.count(des_set(pi.inverse()).bits())) members.push_back(pi);
                });
                PermSet a(n, std::move(members));
                SchurExpansion e = schur_expand(a);
                if (!e.ok()) return "expansion failed on trial " + std::to_string(trial);

                SytDesMatrix m = syt_des_matrix(n);
                GenDist rebuilt(n - 1, false);
                for (std::size_t c = 0; c < m.partitions.size(); ++c) {
                    auto it = e.coeffs.find(m.partitions[c]);
                    if (it == e.coeffs.end()) continue;
                    for (std::uint64_t bits = 0; bits < lim; ++bits) {
                        long long v = m.by_column[c][static_cast<std::size_t>(bits)];
                        if (v != 0) rebuilt.add(Mask::from_bits(n - 1, bits), v * it->second);
                    }
                }
                if (!(rebuilt == des_dist(a)))
                    return "round trip differs on trial " + std::to_string(trial);

                for (int k = 0; k < n; ++k) {
                    Partition hook{n - k};
                    for (int i = 0; i < k; ++i) hook.push_back(1);
                    auto it = e.coeffs.find(hook);
                    long long expansion_hook = it == e.coeffs.end() ? 0 : it->second;
                    if (hook_multiplicity(a, k) != expansion_hook)
                        return "hook coefficient differs on trial " + std::to_string(trial);
                }
            }
            return "";
        },
        &witness);
    REQUIRE(witness.empty());
}

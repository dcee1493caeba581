#include <random>
#include <set>

#include "doctest.h"
#include "ncode/classify.hpp"
#include "reference_codes.hpp"

using namespace ncode;

namespace {

// Small helper matrices with distinct content for the matrix-tuple tests.
BitMatrix mat_a_3x7() { return BitMatrix::from_strings({"1010101", "0110011", "0001111"}); }
BitMatrix mat_b_5x5() { return BitMatrix::from_strings({"10000", "11000", "11100", "11110", "11111"}); }
BitMatrix mat_a_4x6() { return BitMatrix::from_strings({"101010", "010101", "110011", "001100"}); }
BitMatrix mat_b_3x3() { return BitMatrix::from_strings({"100", "010", "001"}); }

}  // namespace

TEST_CASE("equality partition") {
    SUBCASE("interleaved blocks") {
        std::vector<int> items = {5, 7, 5, 7, 5, 7, 5, 7, 5};  // a at odd slots, b at even
        const EqualityPartition p = partition_by_equality(items);
        CHECK(p.count() == 2);
        CHECK(p.sorted_sizes() == std::vector<int>{5, 4});
        CHECK(p.blocks[0].members == std::vector<int>{0, 2, 4, 6, 8});
        CHECK(p.blocks[0].representative == 0);
        CHECK(p.to_string() == "{1,3,5,7,9}{2,4,6,8}");
    }
    SUBCASE("degenerate shapes") {
        CHECK(partition_by_equality(std::vector<int>{3, 3, 3}).count() == 1);
        CHECK(partition_by_equality(std::vector<int>{1, 2, 3}).count() == 3);
        CHECK_THROWS_AS(partition_by_equality(std::vector<int>{}), input_error);
    }
}

TEST_CASE("matrix tuple classification") {
    SUBCASE("five equal copies are a false tuple") {
        const NMatrixClass c = classify_nmatrix(std::vector<BitMatrix>(5, mat_a_3x7()));
        CHECK(c.kind == NMatrixClass::Kind::False);
        CHECK(*c.shape == MatrixShape::Rectangular);
    }
    SUBCASE("block sizes 5 and 2 over seven matrices") {
        std::vector<BitMatrix> mats = {mat_a_3x7(), mat_b_5x5(), mat_a_3x7(), mat_a_3x7(),
                                       mat_a_3x7(), mat_a_3x7(), mat_b_5x5()};
        const NMatrixClass c = classify_nmatrix(mats);
        CHECK(c.kind == NMatrixClass::Kind::PseudoFalse);
        CHECK(c.m == 2);
        CHECK(*c.shape == MatrixShape::Mixed);
    }
    SUBCASE("alternating nine matrices give a 4-pseudo tuple") {
        std::vector<BitMatrix> mats;
        for (int i = 0; i < 9; ++i) mats.push_back(i % 2 == 0 ? mat_a_3x7() : mat_b_5x5());
        const NMatrixClass c = classify_nmatrix(mats);
        CHECK(c.kind == NMatrixClass::Kind::PseudoFalse);
        CHECK(c.m == 4);
        CHECK(c.m != 5);  // the smaller block decides; 5-pseudo would need n >= 10
    }
    SUBCASE("rectangular-vs-square pair of blocks is mixed") {
        std::vector<BitMatrix> mats;
        for (int i = 0; i < 9; ++i) mats.push_back(i % 2 == 0 ? mat_a_4x6() : mat_b_3x3());
        const NMatrixClass c = classify_nmatrix(mats);
        CHECK(c.kind == NMatrixClass::Kind::PseudoFalse);
        CHECK(c.m == 4);
        CHECK(*c.shape == MatrixShape::Mixed);
    }
    SUBCASE("same-shape blocks") {
        std::vector<BitMatrix> sq = {mat_b_3x3(), mat_b_3x3(), BitMatrix::from_strings({"110", "011", "101"})};
        CHECK(*classify_nmatrix(sq).shape == MatrixShape::Square);
        std::vector<BitMatrix> ms = {mat_b_5x5(), mat_b_3x3(), mat_b_5x5()};
        CHECK(*classify_nmatrix(ms).shape == MatrixShape::MixedSquare);
        std::vector<BitMatrix> mr = {mat_a_3x7(), mat_a_4x6(), mat_a_3x7()};
        CHECK(*classify_nmatrix(mr).shape == MatrixShape::MixedRectangular);
    }
    SUBCASE("a pair of distinct matrices is not false") {
        CHECK(classify_nmatrix({mat_a_3x7(), mat_b_5x5()}).kind == NMatrixClass::Kind::NotFalse);
        CHECK(classify_nmatrix({mat_a_3x7(), mat_b_5x5(), mat_a_4x6()}).kind == NMatrixClass::Kind::NotFalse);
    }
}

TEST_CASE("false-code profiles") {
    SUBCASE("five equal components") {
        const NCode nc = compose(std::vector<LinearCode>(5, refs::c84_false()));
        CHECK(false_code_profile(nc).kind == FalseProfile::Kind::False);
        CHECK(!nc.proper());
    }
    SUBCASE("one odd component among six") {
        const NCode nc = compose({refs::c72_onepseudo(), refs::c73_onepseudo(), refs::c72_onepseudo(),
                                  refs::c72_onepseudo(), refs::c72_onepseudo(), refs::c72_onepseudo()});
        CHECK(false_code_profile(nc).kind == FalseProfile::Kind::OnePseudo);
    }
    SUBCASE("the (1,1) six-part shape") {
        const FalseProfile p = false_code_profile(refs::mux_six_code());
        CHECK(p.kind == FalseProfile::Kind::OneOne);
    }
    SUBCASE("m-pseudo shapes") {
        const LinearCode a = refs::c42_pair(), b = refs::c63_pair();
        const NCode nc = compose({a, b, a, b, a, b, a, b, a});
        const FalseProfile p = false_code_profile(nc);
        CHECK(p.kind == FalseProfile::Kind::MPseudo);
        CHECK(p.m == 4);
    }
    SUBCASE("(t,t) and (t,m) shapes") {
        const LinearCode a = refs::c42_pair(), b = refs::c63_pair(), c = refs::c52_mux();
        CHECK(false_code_profile(compose({a, a, b, b, c})).kind == FalseProfile::Kind::TT);
        CHECK(false_code_profile(compose({a, a, b, b, c})).t == 2);
        const FalseProfile tm = false_code_profile(compose({a, b, b, c, c, c}));
        CHECK(tm.kind == FalseProfile::Kind::TM);
        CHECK(tm.t == 1);
        CHECK(tm.m == 2);
    }
    SUBCASE("proper codes are not false") {
        CHECK(false_code_profile(compose({refs::c42_pair(), refs::c63_pair()})).kind == FalseProfile::Kind::NotFalse);
        CHECK(false_code_profile(compose({refs::c42_pair(), refs::c63_pair(), refs::c52_mux()})).kind ==
              FalseProfile::Kind::NotFalse);
    }
}

TEST_CASE("P-linearity predicates") {
    const LinearCode c53 = LinearCode::from_generator(BitMatrix::from_strings({"10011", "01001", "00110"}));
    CHECK(is_p_linear(compose({c53, refs::hamming74()})));
    CHECK(!is_p_linear(compose({refs::c73_p1(), refs::c73_p2()})));
    CHECK(is_p_linear(compose({refs::c73_p1(), refs::hamming74()})));  // same length, different k

    CHECK(is_weak_p_linear(compose({refs::c73_p1(), refs::c73_p2()})) == Tri::NotApplicable);
    CHECK(is_weak_p_linear(compose(refs::duo_four_code())) == Tri::Yes);
    CHECK(is_weak_p_linear(compose({repetition_code(3), repetition_code(5), repetition_code(7)})) == Tri::No);
    CHECK(is_weak_p_linear(compose(refs::weak_only_four_code())) == Tri::Yes);

    CHECK(is_duo_p_linear(compose(refs::duo_four_code())) == Tri::Yes);
    CHECK(is_duo_p_linear(compose(refs::duo_mixed_four_code())) == Tri::Yes);
    CHECK(is_duo_p_linear(compose(refs::weak_only_four_code())) == Tri::No);
    CHECK(is_duo_p_linear(compose(refs::plinear_only_tricode())) == Tri::No);
    CHECK(is_p_linear(compose(refs::plinear_only_tricode())));
}

TEST_CASE("distinct parameter pairs always give a P-linear code") {
    std::mt19937_64 rng(79);
    for (int round = 0; round < 50; ++round) {
        // build components with pairwise distinct (n, k)
        std::vector<LinearCode> comps;
        std::set<std::pair<int, int>> used;
        const int parts = 2 + static_cast<int>(rng() % 4);
        while (static_cast<int>(comps.size()) < parts) {
            const int n = 3 + static_cast<int>(rng() % 8);
            const int k = 1 + static_cast<int>(rng() % (n - 1));
            if (!used.insert({n, k}).second) continue;
            BitMatrix G(k, n);
            do {
                for (int r = 0; r < k; ++r) G.set_row(r, BitWord(n, rng() & ((1ull << n) - 1)));
            } while (G.rank() != k);
            comps.push_back(LinearCode::from_generator(G));
        }
        CHECK(is_p_linear(compose(std::move(comps))));
    }
}

TEST_CASE("repetition and parity-check families are P-linear but never weak") {
    const NCode reps = compose({repetition_code(4), repetition_code(6), repetition_code(7), repetition_code(9)});
    CHECK(is_p_linear(reps));
    CHECK(is_weak_p_linear(reps) == Tri::No);
    CHECK(is_duo_p_linear(reps) == Tri::No);
    CHECK(family_p_profile(reps).repetition);
    CHECK(!family_p_profile(reps).mixed);

    const NCode pars = compose({parity_check_code(5), parity_check_code(4), parity_check_code(6),
                                parity_check_code(8), parity_check_code(3)});
    CHECK(family_p_profile(pars).parity_check);
    CHECK(is_p_linear(pars));
    CHECK(is_weak_p_linear(pars) == Tri::No);
}

TEST_CASE("family profiles") {
    const NCode hb = compose({refs::hamming74(), refs::hamming1511()});
    CHECK(family_p_profile(hb).hamming);
    // same length, different word sets: still a Hamming pair but not the
    // distinct-length family
    const NCode hb2 = compose({refs::hamming74(), refs::hamming74_alt()});
    CHECK(!family_p_profile(hb2).hamming);

    const FamilyProfile mixed = family_p_profile(compose(refs::mixed_five_code()));
    CHECK(mixed.mixed);
    CHECK(!mixed.repetition);
    CHECK(!mixed.parity_check);

    // two family kinds suffice
    CHECK(family_p_profile(compose({repetition_code(4), parity_check_code(5)})).mixed);
    CHECK(!family_p_profile(compose({repetition_code(4), refs::hamming74()})).mixed);
}

TEST_CASE("whole profiles") {
    const NCode whole = compose({refs::whole_c1(), refs::whole_c1_dual()});
    CHECK(whole_profile(whole) == WholeKind::Whole2n);

    const NCode pw = compose({refs::pwhole_c1(), refs::pwhole_c1_dual(), refs::pwhole_c2()});
    CHECK(whole_profile(pw) == WholeKind::PseudoWhole);

    // third length collides with the pair: no longer pseudo-whole
    const NCode collide = compose({refs::pwhole_c1(), refs::pwhole_c1_dual(), refs::c73_p1()});
    CHECK(whole_profile(collide) == WholeKind::NotWhole);

    CHECK(whole_profile(compose({refs::whole_c1(), refs::c73_p1()})) == WholeKind::NotWhole);

    // the relaxed search finds non-adjacent pairings
    const NCode shuffled = compose({refs::whole_c1(), refs::pwhole_c1(), refs::whole_c1_dual(),
                                    LinearCode::from_generator(refs::pwhole_c1().parity())});
    CHECK(whole_profile(shuffled) == WholeKind::NotWhole);
    CHECK(whole_profile(shuffled, /*relaxed=*/true) == WholeKind::Whole2n);
}

TEST_CASE("whole codes are weak-only when the pair parameters coincide") {
    // k = n/2 makes (n, k) and (n, n-k) the same pair
    const LinearCode c63 = refs::c63_pair();
    const NCode whole4 = compose({c63, dual(c63), refs::c42_pair(), dual(refs::c42_pair())});
    REQUIRE(whole_profile(whole4) == WholeKind::Whole2n);
    CHECK(is_weak_p_linear(whole4) == Tri::Yes);
    CHECK(!is_p_linear(whole4));
    CHECK(is_duo_p_linear(whole4) == Tri::No);
}

TEST_CASE("pseudo-whole codes with a unique extra length are duo") {
    const NCode pw = compose({refs::pwhole_c1(), refs::pwhole_c1_dual(), refs::pwhole_c2()});
    CHECK(is_duo_p_linear(pw) == Tri::Yes);
}

TEST_CASE("cyclic profiles") {
    CHECK(cyclic_p_profile(compose(refs::pcyclic_four_code())) == CyclicProfile::PCyclic);
    CHECK(cyclic_p_profile(compose(refs::pseudo_pcyclic_four_code())) == CyclicProfile::PseudoPCyclic);
    CHECK(cyclic_p_profile(compose(refs::pseudo_strong_six_code())) == CyclicProfile::PseudoStrongPCyclic);
    CHECK(cyclic_p_profile(compose(refs::known_divergence_weak_cyclic_four())) == CyclicProfile::WeakPCyclic);
    CHECK(cyclic_p_profile(compose({refs::c73_demo(), refs::c53_demo()})) == CyclicProfile::NotCyclicFamily);
}

TEST_CASE("weak-false flags") {
    const LinearCode a = refs::c42_pair(), b = refs::c63_pair();
    // every m-pseudo (m >= 2) profile is weak-false
    CHECK(weak_p_false(compose({a, a, b, b})).weak_p_false);
    CHECK(weak_p_false(compose({a, b, a, b, a, b, a, b, a})).weak_p_false);
    // a pure false code is not
    CHECK(!weak_p_false(compose(std::vector<LinearCode>(5, refs::c84_false()))).weak_p_false);
    // the flag->profile equivalence
    const NCode pf = compose(refs::pfalse_five_code());
    CHECK(weak_p_false(pf).p_false);
    CHECK(false_code_profile(pf).kind == FalseProfile::Kind::OnePseudo);
}

TEST_CASE("two-block partitions never exceed m = n/2") {
    std::mt19937_64 rng(83);
    const LinearCode a = refs::c42_pair(), b = refs::c63_pair();
    for (int round = 0; round < 60; ++round) {
        const int n = 2 + static_cast<int>(rng() % 9);
        std::vector<LinearCode> comps;
        bool has_a = false, has_b = false;
        for (int i = 0; i < n; ++i) {
            const bool pick_a = rng() & 1;
            comps.push_back(pick_a ? a : b);
            (pick_a ? has_a : has_b) = true;
        }
        if (!has_a || !has_b) continue;
        const NCode nc = compose(std::move(comps));
        const FalseProfile p = false_code_profile(nc);
        if (p.kind == FalseProfile::Kind::MPseudo) {
            CHECK(p.m <= n / 2);
            // every m-pseudo profile with m >= 2 is weak-false
            if (p.m >= 2) CHECK(weak_p_false(nc).weak_p_false);
        }
    }
}

TEST_CASE("random distinct-length repetition and parity-check families") {
    std::mt19937_64 rng(89);
    for (int round = 0; round < 40; ++round) {
        std::set<int> lengths;
        while (lengths.size() < 3 + rng() % 3) lengths.insert(2 + static_cast<int>(rng() % 12));
        std::vector<LinearCode> reps, pars;
        for (int n : lengths) {
            reps.push_back(repetition_code(n));
            pars.push_back(parity_check_code(n));
        }
        for (auto* family : {&reps, &pars}) {
            const NCode nc = compose(*family);
            CHECK(is_p_linear(nc));
            CHECK(is_weak_p_linear(nc) == Tri::No);
            CHECK(is_duo_p_linear(nc) == Tri::No);
        }
        CHECK(family_p_profile(compose(reps)).repetition);
        CHECK(family_p_profile(compose(pars)).parity_check);
    }
}

TEST_CASE("full report and its consistency rules") {
    const ClassificationReport duo = classify_all(compose(refs::duo_mixed_four_code()));
    CHECK(*duo.p_linear);
    CHECK(*duo.weak_p_linear == Tri::Yes);
    CHECK(*duo.duo_p_linear == Tri::Yes);

    const ClassificationReport fr = classify_all(compose(std::vector<LinearCode>(5, refs::c84_false())));
    CHECK(fr.false_profile.value->kind == FalseProfile::Kind::False);
    CHECK(!*fr.weak_p_false);
    CHECK(!fr.proper);

    const ClassificationReport rep = classify_all(
        compose({repetition_code(4), repetition_code(6), repetition_code(7), repetition_code(9)}));
    CHECK(rep.family.value->repetition);
    CHECK(*rep.p_linear);
    CHECK(*rep.weak_p_linear == Tri::No);

    for (const ClassificationReport* r : {&duo, &fr, &rep}) {
        if (*r->duo_p_linear == Tri::Yes) {
            CHECK(*r->p_linear);
            CHECK(*r->weak_p_linear == Tri::Yes);
        }
        if (r->false_profile.value->kind == FalseProfile::Kind::False) CHECK(!r->proper);
        if (*r->cyclic == CyclicProfile::PCyclic)
            for (const auto& c : r->components) CHECK(*c.cyclic);
        CHECK((r->false_profile.value->kind == FalseProfile::Kind::OnePseudo) == *r->p_false);
    }
}

TEST_CASE("report serialization") {
    const ClassificationReport r = classify_all(compose({refs::c42_pair(), refs::c63_pair()}));
    const std::string text = r.to_text();
    CHECK(text.find("p_linear: true") != std::string::npos);
    CHECK(text.find("false_profile: not_false") != std::string::npos);
    CHECK(text.find("weak_p_linear: n/a") != std::string::npos);
    const std::string json = r.to_json();
    CHECK(json.find("\"p_linear\": true") != std::string::npos);
}

TEST_CASE("caps surface as per-predicate errors, not as report failures") {
    // k = 21 exceeds the enumeration cap; rank-based predicates still work
    const NCode nc = compose({parity_check_code(22), repetition_code(3)});
    const ClassificationReport r = classify_all(nc);
    CHECK(r.p_linear.ok());
    CHECK(*r.p_linear);
    CHECK(r.false_profile.ok());
    CHECK(!r.cyclic.ok());  // needs enumeration of the big component
    CHECK(!r.cyclic.error.empty());
    CHECK(!r.components[0].cyclic.has_value());
    CHECK(r.to_text().find("cyclic_profile: error:") != std::string::npos);
}

TEST_CASE("cyclic codes need not be reversible: the search finds a witness") {
    const auto witness = find_cyclic_not_reversible(8);
    REQUIRE(witness.has_value());
    CHECK(witness->is_cyclic());
    CHECK(!witness->is_reversible());
}

// The defining clause and the worked verdicts disagree for collections whose
// lengths collide but whose parameter pairs stay distinct. The predicate
// follows the defining clause (a unique pair suffices), so these two
// collections classify as P-linear even though the worked discussion calls
// them weak-only. Kept as expected divergences, not silent passes.
TEST_CASE("known divergence: same-length collections with distinct pairs") {
    const NCode five = compose(refs::known_divergence_weak_cyclic_five());
    CHECK(is_weak_p_linear(five) == Tri::Yes);         // both readings agree here
    CHECK(is_p_linear(five));                          // divergent: worked verdict says no
    const NCode four = compose(refs::known_divergence_weak_cyclic_four());
    CHECK(is_weak_p_linear(four) == Tri::Yes);
    CHECK(is_p_linear(four));                          // divergent: worked verdict says no
}

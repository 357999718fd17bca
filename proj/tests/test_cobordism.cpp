#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "etacalc/cobordism.hpp"
#include "etacalc/random_models.hpp"
#include "test_util.hpp"

#include <map>
#include <random>
#include <stdexcept>

using namespace etacalc;
using etacalc::testutil::ch;
using etacalc::testutil::mono_of;

namespace {

std::vector<Character> chars_of(int q, const std::vector<std::vector<int>>& lists) {
    std::vector<Character> out;
    for (const auto& l : lists)
        out.push_back(ch(l, q));
    return out;
}

ConjugationModel flag11(int q = 2) {
    return real_flag_space(FlagSpec(GroupRank(q), chars_of(q, {{1}, {2}}), {1, 1}));
}

} // namespace

TEST_CASE("eta on projective spaces") {
    const FixedPointModel rp1 = proj_space(ProjSpec(GroupRank(2), chars_of(2, {{1}, {2}})));
    CHECK(eta(rp1).is_zero());
    CHECK(is_null_cobordant(rp1));

    const FixedPointModel rp2 =
        proj_space(ProjSpec(GroupRank(3), chars_of(3, {{1}, {2}, {3}})));
    CHECK(eta(rp2).terms().size() == 3);
    CHECK_FALSE(is_null_cobordant(rp2));
}

TEST_CASE("eta cancels doubled spaces") {
    const ConjugationModel x = real_flag_space(
        FlagSpec(GroupRank(2), chars_of(2, {{1}, {2}, {1, 2}}), {1, 2}));
    CHECK_FALSE(eta(x.real_part).is_zero());
    CHECK(eta(disjoint_union(x, x).real_part).is_zero());
}

TEST_CASE("null-cobordism decisions") {
    CHECK(is_null_cobordant(flag11().real_part));
    CHECK_FALSE(is_null_cobordant(point_space(GroupRank(2)).real_part));

    // squaring preserves (non)vanishing
    std::mt19937 rng(3);
    RandomModelParams params;
    for (int t = 0; t < 60; ++t) {
        const ConjugationModel x = random_conjugation_model(rng, params);
        CHECK(is_null_cobordant(complex_from_real(x)) ==
              is_null_cobordant(x.real_part));
    }
}

TEST_CASE("pairing witness structure") {
    {
        const PairingWitness w = pairing_witness(flag11().real_part);
        REQUIRE(w.pairs.size() == 1);
        CHECK(w.pairs[0] == std::pair<std::string, std::string>{"({1}|{2})", "({2}|{1})"});
        CHECK(w.residual.empty());
    }
    {
        const FixedPointModel rp2 =
            proj_space(ProjSpec(GroupRank(3), chars_of(3, {{1}, {2}, {3}})));
        const PairingWitness w = pairing_witness(rp2);
        CHECK(w.pairs.empty());
        CHECK(w.residual == std::vector<std::string>{"[e_1]", "[e_2]", "[e_3]"});
    }
    {
        // odd class: lowest label goes to the residual, the rest pair greedily
        const Monomial rep = mono_of(2, {{1}});
        const FixedPointModel m(GroupRank(2), 1,
                                {{"b", rep}, {"c", rep}, {"a", rep}});
        const PairingWitness w = pairing_witness(m);
        CHECK(w.residual == std::vector<std::string>{"a"});
        REQUIRE(w.pairs.size() == 1);
        CHECK(w.pairs[0] == std::pair<std::string, std::string>{"b", "c"});
    }
}

TEST_CASE("pairing witness residual parity matches class counts") {
    std::mt19937 rng(17);
    RandomModelParams params;
    for (int t = 0; t < 40; ++t) {
        const FixedPointModel x = random_conjugation_model(rng, params).real_part;
        const PairingWitness w = pairing_witness(x);
        std::map<Monomial, int> counts;
        for (const FixedPoint& p : x.points())
            ++counts[p.rep];
        std::size_t odd_classes = 0, covered = 0;
        for (const auto& [rep, count] : counts)
            odd_classes += count % 2;
        covered = 2 * w.pairs.size() + w.residual.size();
        CHECK(w.residual.size() == odd_classes);
        CHECK(covered == x.points().size());
        CHECK(w.residual.empty() == is_null_cobordant(x));
    }
}

TEST_CASE("dold eta formula: pinned values") {
    // over the point base the formula reduces to eta of the projective space
    const ProjSpec proj(GroupRank(2), chars_of(2, {{1}, {2}, {1, 2}}));
    const RepRingElement direct = dold_eta_formula(proj, point_space(GroupRank(2)));
    const FixedPointModel rp = proj_space(proj);
    std::vector<Monomial> embedded;
    for (const FixedPoint& p : rp.points())
        embedded.push_back(mono_embed_first(p.rep, GroupRank(2)));
    CHECK(direct == RepRingElement::from_monomials(GroupRank(4), embedded));

    // cancellation across the two stationary flags, for each coordinate
    CHECK(dold_eta_formula(ProjSpec(GroupRank(2), chars_of(2, {{1}, {2}})), flag11())
              .is_zero());
}

TEST_CASE("dold eta formula agrees with the fixed-point assembly") {
    std::mt19937 rng(5);
    RandomModelParams params;
    for (int t = 0; t < 80; ++t) {
        const ProjSpec proj = random_proj_spec(rng, 3, 4);
        const ConjugationModel base = random_conjugation_model(rng, params);
        CHECK(dold_eta_formula(proj, base) == eta(dold_fixed_data(proj, base)));
    }
}

TEST_CASE("vanishing equivalence on hypothesis-satisfying bases") {
    // null base via a repeated part size -> null bundle
    const ConjugationModel null_base = real_flag_space(
        FlagSpec(GroupRank(3), chars_of(3, {{1}, {2}, {3}, {1, 2}}), {2, 2}));
    REQUIRE(is_null_cobordant(null_base.real_part));
    const ProjSpec proj(GroupRank(2), chars_of(2, {{1}, {2}, {1, 2}}));
    const DoldEquivalenceReport r1 = check_dold_equivalence(proj, null_base);
    CHECK(r1.base_null);
    CHECK(r1.dold_null);
    CHECK(r1.equivalent);
    CHECK(r1.dold_witness.residual.empty());

    // non-null base via odd Euler parity -> non-null bundle
    const ConjugationModel odd_base = real_flag_space(
        FlagSpec(GroupRank(2), chars_of(2, {{1}, {2}, {1, 2}}), {1, 2}));
    REQUIRE(euler_parity({1, 2}) == Parity::odd);
    const DoldEquivalenceReport r2 = check_dold_equivalence(proj, odd_base);
    CHECK_FALSE(r2.base_null);
    CHECK_FALSE(r2.dold_null);
    CHECK(r2.equivalent);
    CHECK_FALSE(r2.dold_witness.residual.empty());
}

TEST_CASE("vanishing equivalence boundary: a point base is honestly reported") {
    // For a zero-dimensional base the two sides can genuinely differ: the
    // point is non-null while its bundle over a null projective space is
    // null.  The checker must report the inequivalence, not mask it.
    const ProjSpec rp1(GroupRank(2), chars_of(2, {{1}, {2}}));
    const DoldEquivalenceReport r = check_dold_equivalence(rp1, point_space(GroupRank(1)));
    CHECK_FALSE(r.base_null);
    CHECK(r.dold_null);
    CHECK_FALSE(r.equivalent);
}

TEST_CASE("euler parity") {
    CHECK(euler_parity({1, 2}) == Parity::odd);   // 3
    CHECK(euler_parity({1, 3}) == Parity::even);  // 4
    CHECK(euler_parity({1, 2, 3}) == Parity::even); // 60
    CHECK(euler_parity({1}) == Parity::odd);
    CHECK_THROWS_AS(euler_parity({}), std::invalid_argument);
    CHECK_THROWS_AS(euler_parity({2, 0}), std::invalid_argument);
}

TEST_CASE("projective nonvanishing criterion") {
    CHECK_FALSE(rp_nonvanishing_criterion(ProjSpec(GroupRank(2), chars_of(2, {{1}, {2}}))));
    CHECK(rp_nonvanishing_criterion(ProjSpec(GroupRank(3), chars_of(3, {{1}, {2}, {3}}))));
    // a single coordinate line is a point, never null
    CHECK(rp_nonvanishing_criterion(ProjSpec(GroupRank(2), chars_of(2, {{1}}))));

    // closed under translation by {1}: all tangent reps pair up
    CHECK_FALSE(rp_nonvanishing_criterion(
        ProjSpec(GroupRank(2), chars_of(2, {{1}, {2}, {1, 2}, {}}))));

    // agreement with the direct computation on a small family
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
        std::vector<Character> chars;
        for (int b = 0; b < 4; ++b)
            if (mask & (1u << b))
                chars.emplace_back(static_cast<std::uint32_t>(b), GroupRank(2));
        if (chars.size() < 2) continue;
        const ProjSpec spec(GroupRank(2), chars);
        CHECK(rp_nonvanishing_criterion(spec) == !is_null_cobordant(proj_space(spec)));
    }
}

TEST_CASE("translation family reports") {
    {
        const TranslationFamilyReport r =
            translation_family(GroupRank(2), ch({1, 2}, 2), {1, 1});
        CHECK(r.null);
        CHECK(r.head_part_odd);
        CHECK(r.claim_holds);
        CHECK(r.translation_fixed_point_free);
        CHECK(r.translation_rep_preserving);
        REQUIRE(r.translation_pairs.size() == 1);
        CHECK(r.translation_pairs[0] ==
              std::pair<std::string, std::string>{"({1}|{2})", "({2}|{1})"});
    }
    {
        const TranslationFamilyReport r =
            translation_family(GroupRank(3), ch({1, 2, 3}, 3), {1, 2, 3});
        CHECK(r.null);
        CHECK(r.translation_fixed_point_free);
        CHECK(r.translation_rep_preserving);
        CHECK(r.translation_pairs.size() == 30);
    }
    {
        const TranslationFamilyReport r = translation_family(GroupRank(3), ch({1}, 3), {1, 5});
        CHECK(r.null);
        CHECK(r.claim_holds);
    }
    {
        // even first part: the claim is not made; translation can have fixed
        // flags and the class need not vanish
        const TranslationFamilyReport r = translation_family(GroupRank(2), ch({1}, 2), {2});
        CHECK_FALSE(r.head_part_odd);
        CHECK(r.claim_holds);
        CHECK_FALSE(r.translation_fixed_point_free);
        CHECK(r.translation_fixed.size() == 1);
        CHECK_FALSE(r.null);
    }
}

TEST_CASE("translation family argument validation") {
    CHECK_THROWS_WITH_AS(
        translation_family(GroupRank(2), Character::trivial(GroupRank(2)), {1, 1}),
        "gamma must be a nontrivial character", std::invalid_argument);
    CHECK_THROWS_WITH_AS(translation_family(GroupRank(2), ch({1}, 2), {1, 2}),
                         "parts must sum to 2^q - 2", std::invalid_argument);
    CHECK_THROWS_WITH_AS(translation_family(GroupRank(3), ch({1}, 2), {1, 5}),
                         "rank mismatch", std::invalid_argument);
    CHECK_THROWS_AS(translation_family(GroupRank(2), ch({1}, 2), {-1, 3}),
                    std::invalid_argument);
}

TEST_CASE("eta is a ring homomorphism on models") {
    std::mt19937 rng(29);
    RandomModelParams params;
    params.max_depth = 1;
    std::map<std::pair<int, int>, std::vector<ConjugationModel>> by_rank_dim;
    for (int t = 0; t < 40; ++t) {
        const ConjugationModel x = random_conjugation_model(rng, params);
        by_rank_dim[{x.real_part.rank().value(), x.real_part.dimension()}].push_back(x);
    }
    int union_checks = 0;
    for (const auto& [key, models] : by_rank_dim) {
        for (std::size_t i = 0; i + 1 < models.size(); i += 2) {
            const auto& a = models[i];
            const auto& b = models[i + 1];
            CHECK(eta(disjoint_union(a, b).real_part) ==
                  elem_add(eta(a.real_part), eta(b.real_part)));
            ++union_checks;
        }
    }
    CHECK(union_checks > 0);
    for (int t = 0; t < 20; ++t) {
        const ConjugationModel a = random_conjugation_model(rng, params);
        const ConjugationModel b =
            random_conjugation_model(rng, a.real_part.rank(), params);
        CHECK(eta(product_space(a, b).real_part) ==
              elem_mul(eta(a.real_part), eta(b.real_part)));
    }
}

TEST_CASE("squaring law at the data level") {
    std::mt19937 rng(31);
    RandomModelParams params;
    for (int t = 0; t < 100; ++t) {
        const ConjugationModel x = random_conjugation_model(rng, params);
        CHECK(eta(complex_from_real(x)) == elem_square(eta(x.real_part)));
    }
}

// Seeded generators of random specs and models for the randomized suites.
// Deterministic for a fixed seed.
#pragma once

#include "etacalc/spaces.hpp"

#include <random>

namespace etacalc {

struct RandomModelParams {
    int max_q = 3;
    int max_n = 6;        // characters per flag spec
    int max_depth = 2;    // nesting of products / unions
    int max_points = 400;
    int min_dimension = 0;
};

FlagSpec random_flag_spec(std::mt19937& rng, GroupRank q, int max_n);

ProjSpec random_proj_spec(std::mt19937& rng, int max_s, int max_m);

/// Random conjugation model over the given group: flags, points and
/// dimension-compatible products and unions of them.
ConjugationModel random_conjugation_model(std::mt19937& rng, GroupRank q,
                                          const RandomModelParams& params);

/// Same, with the rank also drawn at random from 1..max_q.
ConjugationModel random_conjugation_model(std::mt19937& rng,
                                          const RandomModelParams& params);

Monomial random_monomial(std::mt19937& rng, GroupRank q, int max_factors, int max_mult);

RepRingElement random_element(std::mt19937& rng, GroupRank q, int max_terms,
                              int max_factors, int max_mult);

} // namespace etacalc

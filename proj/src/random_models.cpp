#include "etacalc/random_models.hpp"

#include <algorithm>
#include <numeric>

namespace etacalc {

namespace {

int uniform(std::mt19937& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<int> random_composition(std::mt19937& rng, int n) {
    std::vector<int> parts;
    int remaining = n;
    while (remaining > 0) {
        int part = uniform(rng, 1, remaining);
        parts.push_back(part);
        remaining -= part;
    }
    return parts;
}

ConjugationModel random_model_impl(std::mt19937& rng, GroupRank q,
                                   const RandomModelParams& params, int depth) {
    const int roll = uniform(rng, 0, 9);
    if (depth > 0 && roll < 2) { // product
        ConjugationModel a = random_model_impl(rng, q, params, depth - 1);
        ConjugationModel b = random_model_impl(rng, q, params, depth - 1);
        if (a.real_part.points().size() * b.real_part.points().size() <=
            static_cast<std::size_t>(params.max_points))
            return product_space(a, b);
        return a;
    }
    if (depth > 0 && roll < 4) { // disjoint union, dimensions must match
        ConjugationModel a = random_model_impl(rng, q, params, depth - 1);
        for (int attempt = 0; attempt < 12; ++attempt) {
            ConjugationModel b = random_model_impl(rng, q, params, depth - 1);
            if (b.real_part.dimension() == a.real_part.dimension() &&
                a.real_part.points().size() + b.real_part.points().size() <=
                    static_cast<std::size_t>(params.max_points))
                return disjoint_union(a, b);
        }
        return disjoint_union(a, a);
    }
    if (roll < 5)
        return point_space(q);
    return real_flag_space(random_flag_spec(rng, q, params.max_n));
}

} // namespace

FlagSpec random_flag_spec(std::mt19937& rng, GroupRank q, int max_n) {
    const int char_count = 1 << q.value();
    const int n = uniform(rng, 1, std::min(max_n, char_count));
    std::vector<std::uint32_t> all(char_count);
    std::iota(all.begin(), all.end(), 0u);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Character> chars;
    chars.reserve(n);
    for (int i = 0; i < n; ++i)
        chars.emplace_back(all[i], q);
    return FlagSpec(q, std::move(chars), random_composition(rng, n));
}

ProjSpec random_proj_spec(std::mt19937& rng, int max_s, int max_m) {
    const GroupRank s(uniform(rng, 1, max_s));
    const int char_count = 1 << s.value();
    const int size = uniform(rng, 1, std::min(max_m + 1, char_count));
    std::vector<std::uint32_t> all(char_count);
    std::iota(all.begin(), all.end(), 0u);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Character> chars;
    chars.reserve(size);
    for (int i = 0; i < size; ++i)
        chars.emplace_back(all[i], s);
    return ProjSpec(s, std::move(chars));
}

ConjugationModel random_conjugation_model(std::mt19937& rng, GroupRank q,
                                          const RandomModelParams& params) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        ConjugationModel m = random_model_impl(rng, q, params, params.max_depth);
        if (m.real_part.dimension() >= params.min_dimension)
            return m;
    }
    // guaranteed fallback: a product of two 1-dimensional flag spaces has
    // dimension 2, enough for every use of min_dimension here
    const std::vector<Character> pair = {Character(0, q), Character(1, q)};
    const ConjugationModel line = real_flag_space(FlagSpec(q, pair, {1, 1}));
    ConjugationModel m = product_space(line, line);
    while (m.real_part.dimension() < params.min_dimension)
        m = product_space(m, line);
    return m;
}

ConjugationModel random_conjugation_model(std::mt19937& rng,
                                          const RandomModelParams& params) {
    return random_conjugation_model(rng, GroupRank(uniform(rng, 1, params.max_q)), params);
}

Monomial random_monomial(std::mt19937& rng, GroupRank q, int max_factors, int max_mult) {
    if (q.value() == 0)
        return Monomial(q); // only the unit exists: no nontrivial characters
    const int factor_count = uniform(rng, 0, max_factors);
    std::vector<std::pair<Character, int>> factors;
    for (int i = 0; i < factor_count; ++i) {
        const std::uint32_t bits =
            static_cast<std::uint32_t>(uniform(rng, 1, (1 << q.value()) - 1));
        factors.emplace_back(Character(bits, q), uniform(rng, 1, max_mult));
    }
    return Monomial(q, std::move(factors));
}

RepRingElement random_element(std::mt19937& rng, GroupRank q, int max_terms,
                              int max_factors, int max_mult) {
    const int term_count = uniform(rng, 0, max_terms);
    std::vector<Monomial> terms;
    for (int i = 0; i < term_count; ++i)
        terms.push_back(random_monomial(rng, q, max_factors, max_mult));
    return RepRingElement::from_monomials(q, std::move(terms));
}

} // namespace etacalc

#include "etacalc/oracle.hpp"

#include "etacalc/cobordism.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace etacalc {

namespace {

constexpr int kOracleMaxRank = 3;
constexpr int kOracleMaxFlagChars = 6;
constexpr int kOracleMaxProjChars = 7; // m <= 6
constexpr std::size_t kOracleMaxDoldProj = 64;
constexpr std::size_t kOracleMaxDoldBasePoints = 4096;

// The sign of generator t_r on the line spanned by e_a (x) e_b is the product
// of the signs on the two tensor legs; the collected signs over all
// generators determine the character of the line uniquely.
Character character_from_signs(const Character& a, const Character& b, GroupRank q) {
    std::uint32_t bits = 0;
    for (int r = 1; r <= q.value(); ++r) {
        const Character t = Character::from_elements({r}, q);
        if (char_eval(a, t) * char_eval(b, t) < 0)
            bits |= 1u << (r - 1);
    }
    return Character(bits, q);
}

// Applies generator t to each basis vector of the block's span and tests that
// the image lies back in the span.
bool block_stable_under(const Block& block, const Character& t) {
    for (const Character& a : block) {
        // image of e_a is char_eval(a, t) * e_a: a one-coordinate vector
        std::map<Character, int> image;
        image[a] += char_eval(a, t);
        for (const auto& [coord, coeff] : image) {
            if (coeff == 0) continue;
            if (!std::binary_search(block.begin(), block.end(), coord))
                return false;
        }
    }
    return true;
}

void require_flag_scale(const FlagSpec& spec) {
    if (spec.rank().value() > kOracleMaxRank || spec.n() > kOracleMaxFlagChars)
        throw std::invalid_argument("scale cap exceeded");
}

} // namespace

std::vector<OrderedPartition> oracle_flag_fixed_points(const FlagSpec& spec) {
    require_flag_scale(spec);

    std::vector<Character> arrangement = spec.chars(); // ascending start
    std::set<OrderedPartition> found;
    do {
        OrderedPartition candidate;
        std::size_t offset = 0;
        for (int size : spec.parts()) {
            Block block(arrangement.begin() + offset, arrangement.begin() + offset + size);
            std::sort(block.begin(), block.end());
            candidate.push_back(std::move(block));
            offset += size;
        }
        bool stable = true;
        for (int r = 1; r <= spec.rank().value() && stable; ++r) {
            const Character t = Character::from_elements({r}, spec.rank());
            for (const Block& block : candidate) {
                if (!block_stable_under(block, t)) {
                    stable = false;
                    break;
                }
            }
        }
        if (stable)
            found.insert(std::move(candidate));
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));

    return {found.begin(), found.end()};
}

Monomial oracle_tangent_rep(const FlagSpec& spec, const OrderedPartition& partition) {
    require_flag_scale(spec);
    std::vector<Character> factors;
    for (std::size_t i = 0; i < partition.size(); ++i)
        for (std::size_t j = i + 1; j < partition.size(); ++j)
            for (const Character& a : partition[i])
                for (const Character& b : partition[j])
                    factors.push_back(character_from_signs(a, b, spec.rank()));
    return Monomial::from_characters(spec.rank(), factors);
}

Monomial oracle_proj_rep(const ProjSpec& spec, int j) {
    if (spec.rank().value() > kOracleMaxRank ||
        static_cast<int>(spec.chars().size()) > kOracleMaxProjChars)
        throw std::invalid_argument("scale cap exceeded");
    const int count = static_cast<int>(spec.chars().size());
    if (j < 1 || j > count)
        throw std::invalid_argument("point index out of range");
    std::vector<Character> factors;
    for (int i = 0; i < count; ++i)
        if (i != j - 1)
            factors.push_back(
                character_from_signs(spec.chars()[i], spec.chars()[j - 1], spec.rank()));
    return Monomial::from_characters(spec.rank(), factors);
}

bool oracle_dold_consistency(const ProjSpec& proj, const ConjugationModel& base) {
    if (proj.chars().size() > kOracleMaxDoldProj ||
        base.real_part.points().size() > kOracleMaxDoldBasePoints)
        throw std::invalid_argument("scale cap exceeded");
    return eta(dold_fixed_data(proj, base)) == dold_eta_formula(proj, base);
}

} // namespace etacalc

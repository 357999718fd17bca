// Exact arithmetic for characters of elementary abelian 2-groups (Z_2)^q
// and of product groups D x G.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace etacalc {

inline constexpr int kMaxGroupRank = 30;

/// Rank q of an elementary abelian 2-group G = (Z_2)^q.  Bounded by 30 so
/// that subsets of [q] always fit in a single 32-bit word.
class GroupRank {
public:
    explicit GroupRank(int q);
    int value() const { return q_; }
    friend bool operator==(const GroupRank&, const GroupRank&) = default;

private:
    int q_;
};

/// A character of (Z_2)^q, identified with the subset of [q] = {1,...,q} of
/// basis generators it sends to -1.  Bit i-1 of `bits` encodes membership of
/// i; the empty subset is the trivial character.  Group elements are encoded
/// the same way, as the subset of basis generators occurring in them.
/// Canonical ordering of characters is integer ordering of the bit vectors.
class Character {
public:
    Character(std::uint32_t bits, GroupRank rank);

    static Character trivial(GroupRank rank);
    static Character from_elements(const std::vector<int>& elements, GroupRank rank);

    std::uint32_t bits() const { return bits_; }
    int rank() const { return rank_; }
    bool is_trivial() const { return bits_ == 0; }

    /// Members of the subset, ascending, 1-based.
    std::vector<int> elements() const;
    /// Set notation, e.g. "{1,3}"; the trivial character prints as "{}".
    std::string to_string() const;

    friend auto operator<=>(const Character&, const Character&) = default;

private:
    std::uint32_t bits_;
    int rank_;
};

/// Product of two characters (equally, of two group elements): the symmetric
/// difference of the subsets.  Abelian 2-group law; every element is its own
/// inverse and the trivial character is the identity.
Character char_compose(const Character& a, const Character& b);

/// Sign y(t) in {+1,-1}; equals -1 exactly when the two subsets intersect in
/// an odd number of elements.
int char_eval(const Character& y, const Character& t);

/// Character (chi, y) of the product group D x G: the rank-s D part occupies
/// bit positions 1..s and the rank-q G part is shifted to positions s+1..s+q.
/// Injective group homomorphism in each argument.
Character char_embed_product(const Character& d_char, const Character& g_char);

} // namespace etacalc

#include "etacalc/char_algebra.hpp"

#include <bit>
#include <stdexcept>

namespace etacalc {

GroupRank::GroupRank(int q) : q_(q) {
    if (q < 0 || q > kMaxGroupRank)
        throw std::invalid_argument("group rank must be between 0 and 30");
}

Character::Character(std::uint32_t bits, GroupRank rank)
    : bits_(bits), rank_(rank.value()) {
    if ((bits >> rank_) != 0)
        throw std::invalid_argument("character bits exceed group rank");
}

Character Character::trivial(GroupRank rank) { return Character(0, rank); }

Character Character::from_elements(const std::vector<int>& elements, GroupRank rank) {
    std::uint32_t bits = 0;
    for (int e : elements) {
        if (e < 1 || e > rank.value())
            throw std::invalid_argument("character element out of range 1..q");
        std::uint32_t bit = 1u << (e - 1);
        if (bits & bit)
            throw std::invalid_argument("character element repeated");
        bits |= bit;
    }
    return Character(bits, rank);
}

std::vector<int> Character::elements() const {
    std::vector<int> out;
    for (int i = 0; i < rank_; ++i)
        if (bits_ & (1u << i))
            out.push_back(i + 1);
    return out;
}

std::string Character::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
        if (!first) s += ",";
        s += std::to_string(e);
        first = false;
    }
    s += "}";
    return s;
}

Character char_compose(const Character& a, const Character& b) {
    if (a.rank() != b.rank())
        throw std::invalid_argument("rank mismatch");
    return Character(a.bits() ^ b.bits(), GroupRank(a.rank()));
}

int char_eval(const Character& y, const Character& t) {
    if (y.rank() != t.rank())
        throw std::invalid_argument("rank mismatch");
    return (std::popcount(y.bits() & t.bits()) % 2 == 1) ? -1 : +1;
}

Character char_embed_product(const Character& d_char, const Character& g_char) {
    GroupRank rank(d_char.rank() + g_char.rank());
    return Character(d_char.bits() | (g_char.bits() << d_char.rank()), rank);
}

} // namespace etacalc

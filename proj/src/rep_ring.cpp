#include "etacalc/rep_ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace etacalc {

namespace {

void canonicalize_factors(int rank, std::vector<std::pair<Character, int>>& factors) {
    for (const auto& [chi, mult] : factors) {
        if (chi.rank() != rank)
            throw std::invalid_argument("rank mismatch");
        if (chi.is_trivial())
            throw std::invalid_argument("monomial factor must be a nontrivial character");
        if (mult <= 0)
            throw std::invalid_argument("monomial multiplicity must be positive");
    }
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge duplicate keys
    std::vector<std::pair<Character, int>> merged;
    for (const auto& f : factors) {
        if (!merged.empty() && merged.back().first == f.first)
            merged.back().second += f.second;
        else
            merged.push_back(f);
    }
    factors = std::move(merged);
}

} // namespace

Monomial::Monomial(GroupRank rank) : rank_(rank.value()), degree_(0) {}

Monomial::Monomial(GroupRank rank, std::vector<std::pair<Character, int>> factors)
    : rank_(rank.value()), degree_(0), factors_(std::move(factors)) {
    canonicalize_factors(rank_, factors_);
    for (const auto& f : factors_)
        degree_ += f.second;
}

Monomial Monomial::from_characters(GroupRank rank, const std::vector<Character>& chars) {
    std::vector<std::pair<Character, int>> factors;
    factors.reserve(chars.size());
    for (const Character& c : chars)
        factors.emplace_back(c, 1);
    return Monomial(rank, std::move(factors));
}

std::string Monomial::to_string() const {
    if (factors_.empty())
        return "1";
    std::string s;
    for (const auto& [chi, mult] : factors_) {
        if (!s.empty()) s += " ";
        s += "v[" + chi.to_string() + "]";
        if (mult > 1)
            s += "^" + std::to_string(mult);
    }
    return s;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0)
        return c;
    return a.factors_ <=> b.factors_;
}

bool operator==(const Monomial& a, const Monomial& b) {
    return a.rank_ == b.rank_ && a.factors_ == b.factors_;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    if (a.rank() != b.rank())
        throw std::invalid_argument("rank mismatch");
    std::vector<std::pair<Character, int>> factors = a.factors();
    factors.insert(factors.end(), b.factors().begin(), b.factors().end());
    return Monomial(a.rank(), std::move(factors));
}

Monomial mono_pow(const Monomial& a, int k) {
    if (k < 0)
        throw std::invalid_argument("monomial power must be non-negative");
    if (k == 0)
        return Monomial(a.rank());
    std::vector<std::pair<Character, int>> factors = a.factors();
    for (auto& f : factors)
        f.second *= k;
    return Monomial(a.rank(), std::move(factors));
}

Monomial mono_substitute_twist(const Monomial& m, const Character& chi) {
    GroupRank product_rank(chi.rank() + m.rank().value());
    std::vector<std::pair<Character, int>> factors;
    factors.reserve(m.factors().size());
    for (const auto& [y, mult] : m.factors())
        factors.emplace_back(char_embed_product(chi, y), mult);
    return Monomial(product_rank, std::move(factors));
}

Monomial mono_embed_first(const Monomial& d_mono, GroupRank g_rank) {
    GroupRank product_rank(d_mono.rank().value() + g_rank.value());
    const Character trivial_g = Character::trivial(g_rank);
    std::vector<std::pair<Character, int>> factors;
    factors.reserve(d_mono.factors().size());
    for (const auto& [chi, mult] : d_mono.factors())
        factors.emplace_back(char_embed_product(chi, trivial_g), mult);
    return Monomial(product_rank, std::move(factors));
}

Monomial mono_embed_second(const Monomial& g_mono, GroupRank d_rank) {
    return mono_substitute_twist(g_mono, Character::trivial(d_rank));
}

RepRingElement::RepRingElement(GroupRank rank) : rank_(rank.value()) {}

RepRingElement RepRingElement::zero(GroupRank rank) { return RepRingElement(rank); }

RepRingElement RepRingElement::one(GroupRank rank) {
    return from_monomial(Monomial(rank));
}

RepRingElement RepRingElement::from_monomial(const Monomial& m) {
    RepRingElement e(m.rank());
    e.terms_.push_back(m);
    return e;
}

RepRingElement RepRingElement::from_monomials(GroupRank rank, std::vector<Monomial> monomials) {
    for (const Monomial& m : monomials)
        if (m.rank() != rank)
            throw std::invalid_argument("rank mismatch");
    std::sort(monomials.begin(), monomials.end());
    RepRingElement e(rank);
    std::size_t i = 0;
    while (i < monomials.size()) {
        std::size_t j = i;
        while (j < monomials.size() && monomials[j] == monomials[i])
            ++j;
        if ((j - i) % 2 == 1)
            e.terms_.push_back(monomials[i]);
        i = j;
    }
    return e;
}

std::string RepRingElement::to_string() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (const Monomial& m : terms_) {
        if (!s.empty()) s += " + ";
        s += m.to_string();
    }
    return s;
}

bool operator==(const RepRingElement& a, const RepRingElement& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
}

RepRingElement elem_add(const RepRingElement& a, const RepRingElement& b) {
    if (a.rank() != b.rank())
        throw std::invalid_argument("rank mismatch");
    std::vector<Monomial> all = a.terms();
    all.insert(all.end(), b.terms().begin(), b.terms().end());
    return RepRingElement::from_monomials(a.rank(), std::move(all));
}

RepRingElement elem_mul(const RepRingElement& a, const RepRingElement& b) {
    if (a.rank() != b.rank())
        throw std::invalid_argument("rank mismatch");
    std::vector<Monomial> products;
    products.reserve(a.terms().size() * b.terms().size());
    for (const Monomial& ma : a.terms())
        for (const Monomial& mb : b.terms())
            products.push_back(mono_mul(ma, mb));
    return RepRingElement::from_monomials(a.rank(), std::move(products));
}

RepRingElement elem_square(const RepRingElement& a) {
    std::vector<Monomial> squares;
    squares.reserve(a.terms().size());
    for (const Monomial& m : a.terms())
        squares.push_back(mono_pow(m, 2));
    return RepRingElement::from_monomials(a.rank(), std::move(squares));
}

} // namespace etacalc

// The graded polynomial algebra over Z_2 on indeterminates v_chi indexed by
// nontrivial characters of (Z_2)^q, with canonical forms throughout.
#pragma once

#include "etacalc/char_algebra.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace etacalc {

/// A monomial prod v_chi^k: the isomorphism class of one isotropy
/// representation, i.e. a finite multiset of nontrivial characters.
///
/// Factors are kept as a sorted, duplicate-free list of (character,
/// multiplicity) pairs with positive multiplicities.  The empty monomial is
/// the unit of the algebra (class of the zero representation).  Trivial
/// characters are rejected at construction: isotropy representations at
/// isolated stationary points contain no trivial summand.
class Monomial {
public:
    explicit Monomial(GroupRank rank);
    Monomial(GroupRank rank, std::vector<std::pair<Character, int>> factors);

    /// Multiset of characters, duplicates allowed; they merge into
    /// multiplicities.
    static Monomial from_characters(GroupRank rank, const std::vector<Character>& chars);

    GroupRank rank() const { return GroupRank(rank_); }
    const std::vector<std::pair<Character, int>>& factors() const { return factors_; }
    /// Sum of multiplicities = real dimension of the representation.
    int degree() const { return degree_; }
    bool is_unit() const { return factors_.empty(); }

    /// "v[{1}]^2 v[{1,2}]"; the unit renders as "1".
    std::string to_string() const;

    /// Canonical order: lexicographic on the sorted (character, multiplicity)
    /// list.  Total, deterministic, used for all term ordering.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b);

private:
    int rank_;
    int degree_;
    std::vector<std::pair<Character, int>> factors_;
};

/// Product in R(G): direct sum of representations, i.e. multiset union of
/// factors.  Degrees add.
Monomial mono_mul(const Monomial& a, const Monomial& b);

/// k-fold product of a monomial with itself (k >= 0).
Monomial mono_pow(const Monomial& a, int k);

/// chi tensor (-): replaces every factor y_beta of a rank-q monomial by the
/// product-group character (chi, y_beta) with chi of rank s; the result lives
/// over D x G with rank s+q.  Multiplicities and degree are preserved.
Monomial mono_substitute_twist(const Monomial& m, const Character& chi);

/// Embedding R(D) -> R(D x G) of the first tensor factor (chi -> chi tensor 1).
Monomial mono_embed_first(const Monomial& d_mono, GroupRank g_rank);

/// Embedding R(G) -> R(D x G) of the second tensor factor (y -> 1 tensor y).
Monomial mono_embed_second(const Monomial& g_mono, GroupRank d_rank);

/// An element of R_*(G) with Z_2 coefficients: the set of monomials present
/// with coefficient 1, sorted canonically.  The empty set is zero; presence
/// is the entire coefficient.
class RepRingElement {
public:
    explicit RepRingElement(GroupRank rank);

    static RepRingElement zero(GroupRank rank);
    static RepRingElement one(GroupRank rank);
    static RepRingElement from_monomial(const Monomial& m);
    /// Mod-2 accumulation: monomials occurring an even number of times cancel.
    static RepRingElement from_monomials(GroupRank rank, std::vector<Monomial> monomials);

    GroupRank rank() const { return GroupRank(rank_); }
    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// " + "-joined monomials in canonical order; zero renders as "0".
    std::string to_string() const;

    friend bool operator==(const RepRingElement& a, const RepRingElement& b);

private:
    int rank_;
    std::vector<Monomial> terms_;
};

/// Sum: symmetric difference of term sets (disjoint union of manifolds).
RepRingElement elem_add(const RepRingElement& a, const RepRingElement& b);

/// Product: all pairwise monomial products, accumulated mod 2 (cartesian
/// product of manifolds).
RepRingElement elem_mul(const RepRingElement& a, const RepRingElement& b);

/// Square.  In characteristic 2 cross terms cancel, so this is term-wise
/// squaring; agrees with elem_mul(a, a).
RepRingElement elem_square(const RepRingElement& a);

} // namespace etacalc

// Constructors turning geometric inputs (flag manifolds, projective spaces
// with diagonal subgroup actions, twisted sphere-bundle quotients) into
// fixed-point models: the complete cobordism-relevant data of a G-space.
#pragma once

#include "etacalc/rep_ring.hpp"

#include <string>
#include <vector>

namespace etacalc {

struct FixedPoint {
    std::string label;
    Monomial rep;
};

/// Fixed-point data of a closed G-manifold with finite stationary set: one
/// isotropy monomial per stationary point.  Invariants enforced at
/// construction: every monomial has degree equal to `dimension`, labels are
/// unique, and no trivial character occurs (guaranteed by Monomial).
class FixedPointModel {
public:
    FixedPointModel(GroupRank rank, int dimension, std::vector<FixedPoint> points);

    GroupRank rank() const { return GroupRank(rank_); }
    int dimension() const { return dimension_; }
    const std::vector<FixedPoint>& points() const { return points_; }

    friend bool operator==(const FixedPointModel& a, const FixedPointModel& b);

private:
    int rank_;
    int dimension_;
    std::vector<FixedPoint> points_;
};

bool operator==(const FixedPoint& a, const FixedPoint& b);

/// Fixed-point data of the real locus X_R of a conjugation space, with the
/// restricted G-action.  Only models of this kind are admissible bases for
/// the twisted sphere-bundle (Dold) construction; the complex side is always
/// derived from the real one by squaring (complex_from_real).
struct ConjugationModel {
    FixedPointModel real_part;
};

/// Diagonal (Z_2)^q-action on the flag manifold of an n-dimensional module
/// whose distinct characters are S, with flag dimensions parts = n_1..n_r.
/// Distinctness of S is exactly finiteness of the stationary set.  S may
/// contain the trivial character; tangent factors stay nontrivial regardless.
class FlagSpec {
public:
    FlagSpec(GroupRank q, std::vector<Character> chars, std::vector<int> parts);

    GroupRank rank() const { return GroupRank(q_); }
    /// Ascending; canonicalized at construction.
    const std::vector<Character>& chars() const { return chars_; }
    const std::vector<int>& parts() const { return parts_; }
    int n() const { return static_cast<int>(chars_.size()); }
    int r() const { return static_cast<int>(parts_.size()); }
    /// Dimension of the real flag manifold: sum of n_i * n_j over i < j.
    int dimension() const;

private:
    int q_;
    std::vector<Character> chars_;
    std::vector<int> parts_;
};

/// Action of a rank-s diagonal subgroup D on RP^m through m+1 pairwise
/// distinct characters chi_1..chi_{m+1} (one per coordinate line).  The order
/// of `chars` is significant: it indexes the stationary points [e_j].
class ProjSpec {
public:
    ProjSpec(GroupRank s, std::vector<Character> chars);

    GroupRank rank() const { return GroupRank(s_); }
    const std::vector<Character>& chars() const { return chars_; }
    int m() const { return static_cast<int>(chars_.size()) - 1; }

private:
    int s_;
    std::vector<Character> chars_;
};

/// One component of a coordinate flag: the set of characters spanning it,
/// kept ascending.
using Block = std::vector<Character>;
/// A stationary flag, encoded as the ordered partition (alpha(1),...,alpha(r))
/// of the character set S with |alpha(i)| = n_i.
using OrderedPartition = std::vector<Block>;

/// The one-point space with rank-q action; the degenerate conjugation base.
ConjugationModel point_space(GroupRank q);

/// All stationary flags of the diagonal action: the ordered partitions of S
/// with the prescribed block sizes, in lexicographic order (blocks ascending,
/// chosen left to right).  Count equals the multinomial coefficient.
std::vector<OrderedPartition> flag_fixed_points(const FlagSpec& spec);

/// Canonical label for a stationary flag, e.g. "({1}|{2},{1,2})": blocks
/// separated by '|', characters within a block by ','.
std::string partition_label(const OrderedPartition& partition);

/// Isotropy representation of the real flag manifold at a stationary flag:
/// the multiset { a xor b : i < j, a in alpha(i), b in alpha(j) }, one factor
/// per (i, j, a, b).  Degree is sum of n_i * n_j over i < j.
Monomial real_flag_tangent(const FlagSpec& spec, const OrderedPartition& partition);

/// Full fixed-point model of the real flag manifold.
ConjugationModel real_flag_space(const FlagSpec& spec);

/// Fixed-point data of the complex side of a conjugation space, restricted to
/// its real stationary set: reps square, dimension doubles.  Stationary
/// points off the real locus are omitted; their isotropy classes cancel in
/// conjugate pairs and carry no cobordism information.
FixedPointModel complex_from_real(const ConjugationModel& x);

/// Fixed-point model of RP^m under the diagonal D-action: points [e_j] with
/// isotropy { chi_i xor chi_j : i != j }.
FixedPointModel proj_space(const ProjSpec& spec);

/// Fixed-point model of the twisted sphere-bundle quotient P(m, X) over a
/// conjugation base X, for the product group D x G (flattened to rank s+q).
/// Point [e_j, p] carries (RP^m isotropy at e_j) * f_p * (chi_j-twist of f_p),
/// where f_p is the base isotropy monomial; dimension is m + 2 dim X_R.
FixedPointModel dold_fixed_data(const ProjSpec& proj, const ConjugationModel& base);

/// Cartesian product: points pair up, isotropy monomials multiply, dimensions
/// add.  Requires equal rank.
FixedPointModel product_space(const FixedPointModel& a, const FixedPointModel& b);
ConjugationModel product_space(const ConjugationModel& a, const ConjugationModel& b);

/// Disjoint union: point lists concatenate with disambiguated labels.
/// Requires equal rank and equal dimension.
FixedPointModel disjoint_union(const FixedPointModel& a, const FixedPointModel& b);
ConjugationModel disjoint_union(const ConjugationModel& a, const ConjugationModel& b);

} // namespace etacalc

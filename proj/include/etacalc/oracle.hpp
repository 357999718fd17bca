// Independent brute-force verifiers.  They recompute stationary flags and
// isotropy characters from first principles - explicit sign actions on basis
// vectors - sharing nothing with the fast combinatorial paths except
// char_eval, the agreed semantic ground.  Hard scale caps keep them honest
// test tools rather than silently slow production code.
#pragma once

#include "etacalc/spaces.hpp"

namespace etacalc {

/// Enumerates every ordered partition of S with the prescribed block sizes
/// and keeps those whose coordinate flag is stabilized by each generator,
/// verified by acting on basis vectors and testing span membership rather
/// than by the structural description.  Capped at q <= 3, n <= 6.
std::vector<OrderedPartition> oracle_flag_fixed_points(const FlagSpec& spec);

/// Isotropy monomial at a stationary flag, recovered by evaluating the sign
/// of every generator on each basis vector e_a (x) e_b of the pairwise block
/// tensor products and reconstructing the character from the sign vector.
Monomial oracle_tangent_rep(const FlagSpec& spec, const OrderedPartition& partition);

/// Isotropy monomial of RP^m at [e_j] (1-based j), recovered the same way
/// from the basis of E_j (x) E_j-perp.  Capped at s <= 3, m <= 6.
Monomial oracle_proj_rep(const ProjSpec& spec, int j);

/// True when the fixed-point assembly and the direct polynomial formula give
/// the same eta for the sphere-bundle quotient.
bool oracle_dold_consistency(const ProjSpec& proj, const ConjugationModel& base);

} // namespace etacalc

// The eta invariant (sum of isotropy monomials over stationary points),
// vanishing decisions with pairing certificates, and the named vanishing
// criteria as checkable predicates.  Since eta is injective on equivariant
// cobordism classes with finite stationary sets, eta = 0 decides nullity.
#pragma once

#include "etacalc/spaces.hpp"

#include <string>
#include <utility>
#include <vector>

namespace etacalc {

/// A human-checkable certificate for eta = 0: a matching of stationary
/// points with identical isotropy monomials.  Points in classes of odd size
/// cannot all be matched; one representative per odd class is listed in
/// `residual`, so residual is empty exactly when eta vanishes.
struct PairingWitness {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<std::string> residual;
};

/// Sum of the isotropy monomials over all stationary points, with mod-2
/// cancellation.  Ring homomorphism: unions add, products multiply.
RepRingElement eta(const FixedPointModel& x);

/// True exactly when eta(x) = 0, i.e. every isotropy monomial occurs an even
/// number of times among the points.
bool is_null_cobordant(const FixedPointModel& x);

/// Greedy pairing within equal-isotropy classes, in label order; each
/// odd-size class contributes its lowest label to the residual.
PairingWitness pairing_witness(const FixedPointModel& x);

/// Eta of the twisted sphere-bundle quotient P(m, X), evaluated directly as
/// a polynomial: sum over stationary points p of the base and coordinates j
/// of (prod_{i != j} chi_i chi_j) * f_p * (chi_j-twist of f_p).  Coded
/// independently of dold_fixed_data; the two routes must agree.
RepRingElement dold_eta_formula(const ProjSpec& proj, const ConjugationModel& base);

/// Two-sided vanishing check for the sphere-bundle construction: the complex
/// side of the base is null exactly when the total space is.  Both sides are
/// computed independently; `equivalent` records whether they agree.
struct DoldEquivalenceReport {
    bool base_null = false;
    bool dold_null = false;
    bool equivalent = false;
    PairingWitness base_witness;
    PairingWitness dold_witness;
};

DoldEquivalenceReport check_dold_equivalence(const ProjSpec& proj,
                                             const ConjugationModel& base);

enum class Parity { even, odd };

/// Parity of the multinomial coefficient n!/(n_1! ... n_r!) = Euler
/// characteristic of the real flag manifold: odd exactly when the dyadic
/// digit sums satisfy popcount(n) = sum popcount(n_i), i.e. the parts add
/// without binary carries.
Parity euler_parity(const std::vector<int>& parts);

/// Non-vanishing test for RP^m with a diagonal D-action, decided purely on
/// the character list: true when some product chi_i chi_k (i != k) occurs as
/// a tangent factor at no coordinate point other than [e_i] and [e_k], and
/// the isotropy representations at [e_i], [e_k] themselves differ.  Agrees
/// with the direct eta computation.
bool rp_nonvanishing_criterion(const ProjSpec& spec);

/// Vanishing family: the flag manifold of the module whose character set is
/// every nonempty subset of [q] except gamma (so n = 2^q - 2).  Translation
/// by gamma permutes the stationary flags, preserves isotropy, and is free
/// whenever the first part is odd, so eta vanishes in that case.
struct TranslationFamilyReport {
    bool null = false;
    bool head_part_odd = false;
    /// Vanishing is claimed only for odd first part; true when not claimed
    /// or when the claim is confirmed by the computation.
    bool claim_holds = false;
    bool translation_fixed_point_free = false;
    bool translation_rep_preserving = false;
    /// The gamma-translation matching E <-> E^gamma on stationary flags.
    std::vector<std::pair<std::string, std::string>> translation_pairs;
    /// Flags fixed by the translation (possible only with even parts).
    std::vector<std::string> translation_fixed;
};

TranslationFamilyReport translation_family(GroupRank q, const Character& gamma,
                                           const std::vector<int>& parts);

/// The flag spec built by translation_family (exposed for reporting).
FlagSpec translation_family_spec(GroupRank q, const Character& gamma,
                                 const std::vector<int>& parts);

} // namespace etacalc

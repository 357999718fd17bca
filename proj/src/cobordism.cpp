#include "etacalc/cobordism.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace etacalc {

RepRingElement eta(const FixedPointModel& x) {
    std::vector<Monomial> monomials;
    monomials.reserve(x.points().size());
    for (const FixedPoint& p : x.points())
        monomials.push_back(p.rep);
    return RepRingElement::from_monomials(x.rank(), std::move(monomials));
}

bool is_null_cobordant(const FixedPointModel& x) { return eta(x).is_zero(); }

PairingWitness pairing_witness(const FixedPointModel& x) {
    std::map<Monomial, std::vector<std::string>> classes;
    for (const FixedPoint& p : x.points())
        classes[p.rep].push_back(p.label);
    PairingWitness w;
    for (auto& [rep, labels] : classes) {
        std::sort(labels.begin(), labels.end());
        std::size_t start = 0;
        if (labels.size() % 2 == 1) {
            w.residual.push_back(labels.front());
            start = 1;
        }
        for (std::size_t i = start; i + 1 < labels.size(); i += 2)
            w.pairs.emplace_back(labels[i], labels[i + 1]);
    }
    return w;
}

RepRingElement dold_eta_formula(const ProjSpec& proj, const ConjugationModel& base) {
    const auto& chars = proj.chars();
    const int count = static_cast<int>(chars.size());
    const GroupRank s = proj.rank();
    const GroupRank q = base.real_part.rank();
    const GroupRank product_rank(s.value() + q.value());
    const Character trivial_d = Character::trivial(s);
    const Character trivial_g = Character::trivial(q);

    std::vector<Monomial> terms;
    terms.reserve(base.real_part.points().size() * count);
    for (const FixedPoint& p : base.real_part.points()) {
        for (int j = 0; j < count; ++j) {
            std::vector<std::pair<Character, int>> factors;
            for (int i = 0; i < count; ++i)
                if (i != j)
                    factors.emplace_back(
                        char_embed_product(char_compose(chars[i], chars[j]), trivial_g), 1);
            for (const auto& [y, mult] : p.rep.factors()) {
                factors.emplace_back(char_embed_product(trivial_d, y), mult);
                factors.emplace_back(char_embed_product(chars[j], y), mult);
            }
            terms.emplace_back(product_rank, std::move(factors));
        }
    }
    return RepRingElement::from_monomials(product_rank, std::move(terms));
}

DoldEquivalenceReport check_dold_equivalence(const ProjSpec& proj,
                                             const ConjugationModel& base) {
    DoldEquivalenceReport report;
    const FixedPointModel complex_side = complex_from_real(base);
    const FixedPointModel dold = dold_fixed_data(proj, base);
    report.base_null = is_null_cobordant(complex_side);
    report.dold_null = is_null_cobordant(dold);
    report.equivalent = (report.base_null == report.dold_null);
    report.base_witness = pairing_witness(complex_side);
    report.dold_witness = pairing_witness(dold);
    return report;
}

Parity euler_parity(const std::vector<int>& parts) {
    if (parts.empty())
        throw std::invalid_argument("parts must be non-empty");
    long long n = 0;
    int digit_sum = 0;
    for (int p : parts) {
        if (p <= 0)
            throw std::invalid_argument("parts must be positive");
        n += p;
        digit_sum += std::popcount(static_cast<unsigned long long>(p));
    }
    const int n_digits = std::popcount(static_cast<unsigned long long>(n));
    return n_digits == digit_sum ? Parity::odd : Parity::even;
}

bool rp_nonvanishing_criterion(const ProjSpec& spec) {
    const auto& chars = spec.chars();
    const int count = static_cast<int>(chars.size());
    // RP^0 is a single point; its class never vanishes and no character pair
    // exists to witness it
    if (count == 1)
        return true;
    std::set<std::uint32_t> char_set;
    for (const Character& c : chars)
        char_set.insert(c.bits());

    for (int i = 0; i < count; ++i) {
        for (int k = i + 1; k < count; ++k) {
            const Character c = char_compose(chars[i], chars[k]);
            // c must occur as a tangent factor chi_l chi_j at no point other
            // than [e_i] and [e_k]
            bool unique = true;
            for (int j = 0; j < count && unique; ++j) {
                if (j == i || j == k) continue;
                for (int l = 0; l < count; ++l) {
                    if (char_compose(chars[l], chars[j]) == c) {
                        unique = false;
                        break;
                    }
                }
            }
            if (!unique) continue;
            // and the isotropy representations at [e_i], [e_k] must differ;
            // they coincide exactly when translation by c maps the character
            // set onto itself
            bool translation_closed = true;
            for (const Character& a : chars) {
                if (!char_set.count(a.bits() ^ c.bits())) {
                    translation_closed = false;
                    break;
                }
            }
            if (!translation_closed)
                return true;
        }
    }
    return false;
}

namespace {

Block translate_block(const Block& block, const Character& gamma) {
    Block out;
    out.reserve(block.size());
    for (const Character& a : block)
        out.push_back(char_compose(a, gamma));
    std::sort(out.begin(), out.end());
    return out;
}

OrderedPartition translate_partition(const OrderedPartition& partition,
                                     const Character& gamma) {
    OrderedPartition out;
    out.reserve(partition.size());
    for (const Block& block : partition)
        out.push_back(translate_block(block, gamma));
    return out;
}

} // namespace

FlagSpec translation_family_spec(GroupRank q, const Character& gamma,
                                 const std::vector<int>& parts) {
    if (gamma.rank() != q.value())
        throw std::invalid_argument("rank mismatch");
    if (gamma.is_trivial())
        throw std::invalid_argument("gamma must be a nontrivial character");
    long long total = 0;
    for (int p : parts) {
        if (p <= 0)
            throw std::invalid_argument("parts must be positive");
        total += p;
    }
    const long long n = (1ll << q.value()) - 2;
    if (total != n)
        throw std::invalid_argument("parts must sum to 2^q - 2");

    std::vector<Character> chars;
    for (std::uint32_t bits = 1; bits < (1u << q.value()); ++bits)
        if (bits != gamma.bits())
            chars.emplace_back(bits, q);
    return FlagSpec(q, std::move(chars), parts);
}

TranslationFamilyReport translation_family(GroupRank q, const Character& gamma,
                                           const std::vector<int>& parts) {
    const FlagSpec spec = translation_family_spec(q, gamma, parts);
    const auto flags = flag_fixed_points(spec);

    TranslationFamilyReport report;
    report.null = is_null_cobordant(real_flag_space(spec).real_part);
    report.head_part_odd = (parts.front() % 2 == 1);
    report.claim_holds = !report.head_part_odd || report.null;
    report.translation_fixed_point_free = true;
    report.translation_rep_preserving = true;

    for (const OrderedPartition& flag : flags) {
        const OrderedPartition image = translate_partition(flag, gamma);
        if (image == flag) {
            report.translation_fixed_point_free = false;
            report.translation_fixed.push_back(partition_label(flag));
            continue;
        }
        if (real_flag_tangent(spec, flag) != real_flag_tangent(spec, image))
            report.translation_rep_preserving = false;
        if (flag < image)
            report.translation_pairs.emplace_back(partition_label(flag),
                                                  partition_label(image));
    }
    return report;
}

} // namespace etacalc

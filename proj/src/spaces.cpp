#include "etacalc/spaces.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace etacalc {

namespace {

// Refuse to materialize absurdly large fixed-point sets.
constexpr unsigned long long kMaxFlagCount = 1ull << 22;

unsigned long long binomial_clamped(unsigned long long n, unsigned long long k,
                                    unsigned long long cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (unsigned long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return static_cast<unsigned long long>(r);
}

unsigned long long multinomial_clamped(const std::vector<int>& parts,
                                       unsigned long long cap) {
    unsigned long long total = 0, result = 1;
    for (int p : parts) {
        total += static_cast<unsigned long long>(p);
        unsigned __int128 r = (unsigned __int128)result * binomial_clamped(total, p, cap);
        if (r > cap) return cap + 1;
        result = static_cast<unsigned long long>(r);
    }
    return result;
}

void enumerate_partitions(const std::vector<Character>& remaining,
                          const std::vector<int>& parts, std::size_t part_index,
                          OrderedPartition& acc,
                          std::vector<OrderedPartition>& out) {
    if (part_index == parts.size()) {
        out.push_back(acc);
        return;
    }
    const int k = parts[part_index];
    // choose k elements of `remaining` (already ascending) in lex order
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    const int n = static_cast<int>(remaining.size());
    while (true) {
        Block block;
        block.reserve(k);
        std::vector<Character> rest;
        rest.reserve(n - k);
        int next = 0;
        for (int i = 0; i < n; ++i) {
            if (next < k && idx[next] == i) {
                block.push_back(remaining[i]);
                ++next;
            } else {
                rest.push_back(remaining[i]);
            }
        }
        acc.push_back(std::move(block));
        enumerate_partitions(rest, parts, part_index + 1, acc, out);
        acc.pop_back();

        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::string block_string(const Block& block) {
    std::string s;
    for (const Character& c : block) {
        if (!s.empty()) s += ",";
        s += c.to_string();
    }
    return s;
}

} // namespace

FixedPointModel::FixedPointModel(GroupRank rank, int dimension,
                                 std::vector<FixedPoint> points)
    : rank_(rank.value()), dimension_(dimension), points_(std::move(points)) {
    if (dimension < 0)
        throw std::invalid_argument("dimension must be non-negative");
    std::set<std::string> labels;
    for (const FixedPoint& p : points_) {
        if (p.rep.rank() != rank)
            throw std::invalid_argument("rank mismatch");
        if (p.rep.degree() != dimension_)
            throw std::invalid_argument("isotropy degree differs from dimension");
        if (!labels.insert(p.label).second)
            throw std::invalid_argument("duplicate point label: " + p.label);
    }
}

bool operator==(const FixedPoint& a, const FixedPoint& b) {
    return a.label == b.label && a.rep == b.rep;
}

bool operator==(const FixedPointModel& a, const FixedPointModel& b) {
    return a.rank_ == b.rank_ && a.dimension_ == b.dimension_ && a.points_ == b.points_;
}

FlagSpec::FlagSpec(GroupRank q, std::vector<Character> chars, std::vector<int> parts)
    : q_(q.value()), chars_(std::move(chars)), parts_(std::move(parts)) {
    if (chars_.empty())
        throw std::invalid_argument("character set must be non-empty");
    for (const Character& c : chars_)
        if (c.rank() != q_)
            throw std::invalid_argument("rank mismatch");
    std::sort(chars_.begin(), chars_.end());
    for (std::size_t i = 1; i < chars_.size(); ++i)
        if (chars_[i] == chars_[i - 1])
            throw std::invalid_argument("flag characters must be distinct");
    if (parts_.empty())
        throw std::invalid_argument("parts must be non-empty");
    long long total = 0;
    for (int p : parts_) {
        if (p <= 0)
            throw std::invalid_argument("parts must be positive");
        total += p;
    }
    if (total != static_cast<long long>(chars_.size()))
        throw std::invalid_argument("parts must sum to the number of characters");
}

int FlagSpec::dimension() const {
    int d = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i)
        for (std::size_t j = i + 1; j < parts_.size(); ++j)
            d += parts_[i] * parts_[j];
    return d;
}

ProjSpec::ProjSpec(GroupRank s, std::vector<Character> chars)
    : s_(s.value()), chars_(std::move(chars)) {
    if (chars_.empty())
        throw std::invalid_argument("character list must be non-empty");
    for (const Character& c : chars_)
        if (c.rank() != s_)
            throw std::invalid_argument("rank mismatch");
    std::set<Character> seen(chars_.begin(), chars_.end());
    if (seen.size() != chars_.size())
        throw std::invalid_argument("stationary set not finite: characters must be pairwise distinct");
}

ConjugationModel point_space(GroupRank q) {
    std::vector<FixedPoint> points;
    points.push_back({"pt", Monomial(q)});
    return ConjugationModel{FixedPointModel(q, 0, std::move(points))};
}

std::vector<OrderedPartition> flag_fixed_points(const FlagSpec& spec) {
    if (multinomial_clamped(spec.parts(), kMaxFlagCount) > kMaxFlagCount)
        throw std::invalid_argument("fixed-point set too large to enumerate");
    std::vector<OrderedPartition> out;
    OrderedPartition acc;
    enumerate_partitions(spec.chars(), spec.parts(), 0, acc, out);
    return out;
}

std::string partition_label(const OrderedPartition& partition) {
    std::string s = "(";
    for (std::size_t i = 0; i < partition.size(); ++i) {
        if (i > 0) s += "|";
        s += block_string(partition[i]);
    }
    s += ")";
    return s;
}

Monomial real_flag_tangent(const FlagSpec& spec, const OrderedPartition& partition) {
    if (partition.size() != spec.parts().size())
        throw std::invalid_argument("invalid partition");
    std::vector<Character> all;
    for (std::size_t i = 0; i < partition.size(); ++i) {
        if (static_cast<int>(partition[i].size()) != spec.parts()[i])
            throw std::invalid_argument("invalid partition");
        all.insert(all.end(), partition[i].begin(), partition[i].end());
    }
    std::sort(all.begin(), all.end());
    if (!std::equal(all.begin(), all.end(), spec.chars().begin(), spec.chars().end()))
        throw std::invalid_argument("invalid partition");

    std::vector<Character> factors;
    factors.reserve(spec.dimension());
    for (std::size_t i = 0; i < partition.size(); ++i) {
        for (std::size_t j = i + 1; j < partition.size(); ++j) {
            for (const Character& a : partition[i]) {
                for (const Character& b : partition[j]) {
                    Character c = char_compose(a, b);
                    if (c.is_trivial())
                        throw std::invalid_argument("invalid partition");
                    factors.push_back(c);
                }
            }
        }
    }
    return Monomial::from_characters(spec.rank(), factors);
}

ConjugationModel real_flag_space(const FlagSpec& spec) {
    std::vector<FixedPoint> points;
    for (const OrderedPartition& p : flag_fixed_points(spec))
        points.push_back({partition_label(p), real_flag_tangent(spec, p)});
    return ConjugationModel{FixedPointModel(spec.rank(), spec.dimension(), std::move(points))};
}

FixedPointModel complex_from_real(const ConjugationModel& x) {
    const FixedPointModel& r = x.real_part;
    std::vector<FixedPoint> points;
    points.reserve(r.points().size());
    for (const FixedPoint& p : r.points())
        points.push_back({p.label, mono_pow(p.rep, 2)});
    return FixedPointModel(r.rank(), 2 * r.dimension(), std::move(points));
}

FixedPointModel proj_space(const ProjSpec& spec) {
    const auto& chars = spec.chars();
    const int count = static_cast<int>(chars.size());
    std::vector<FixedPoint> points;
    points.reserve(count);
    for (int j = 0; j < count; ++j) {
        std::vector<Character> factors;
        factors.reserve(count - 1);
        for (int i = 0; i < count; ++i)
            if (i != j)
                factors.push_back(char_compose(chars[i], chars[j]));
        points.push_back({"[e_" + std::to_string(j + 1) + "]",
                          Monomial::from_characters(spec.rank(), factors)});
    }
    return FixedPointModel(spec.rank(), spec.m(), std::move(points));
}

FixedPointModel dold_fixed_data(const ProjSpec& proj, const ConjugationModel& base) {
    const FixedPointModel rp = proj_space(proj);
    const FixedPointModel& x = base.real_part;
    const GroupRank s = proj.rank();
    const GroupRank q = x.rank();
    const GroupRank product_rank(s.value() + q.value());

    std::vector<FixedPoint> points;
    points.reserve(rp.points().size() * x.points().size());
    for (std::size_t j = 0; j < rp.points().size(); ++j) {
        const Monomial rp_part = mono_embed_first(rp.points()[j].rep, q);
        const Character& chi_j = proj.chars()[j];
        for (const FixedPoint& p : x.points()) {
            Monomial rep = mono_mul(mono_mul(rp_part, mono_embed_second(p.rep, s)),
                                    mono_substitute_twist(p.rep, chi_j));
            points.push_back({"[e_" + std::to_string(j + 1) + ", " + p.label + "]",
                              std::move(rep)});
        }
    }
    return FixedPointModel(product_rank, proj.m() + 2 * x.dimension(), std::move(points));
}

FixedPointModel product_space(const FixedPointModel& a, const FixedPointModel& b) {
    if (a.rank() != b.rank())
        throw std::invalid_argument("rank mismatch");
    std::vector<FixedPoint> points;
    points.reserve(a.points().size() * b.points().size());
    for (const FixedPoint& pa : a.points())
        for (const FixedPoint& pb : b.points())
            points.push_back({"(" + pa.label + " x " + pb.label + ")",
                              mono_mul(pa.rep, pb.rep)});
    return FixedPointModel(a.rank(), a.dimension() + b.dimension(), std::move(points));
}

ConjugationModel product_space(const ConjugationModel& a, const ConjugationModel& b) {
    return ConjugationModel{product_space(a.real_part, b.real_part)};
}

FixedPointModel disjoint_union(const FixedPointModel& a, const FixedPointModel& b) {
    if (a.rank() != b.rank())
        throw std::invalid_argument("rank mismatch");
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("dimension mismatch");
    std::vector<FixedPoint> points;
    points.reserve(a.points().size() + b.points().size());
    for (const FixedPoint& p : a.points())
        points.push_back({"L:" + p.label, p.rep});
    for (const FixedPoint& p : b.points())
        points.push_back({"R:" + p.label, p.rep});
    return FixedPointModel(a.rank(), a.dimension(), std::move(points));
}

ConjugationModel disjoint_union(const ConjugationModel& a, const ConjugationModel& b) {
    return ConjugationModel{disjoint_union(a.real_part, b.real_part)};
}

} // namespace etacalc

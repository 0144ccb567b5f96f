#include "ranklab/rank_stats.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "ranklab/errors.hpp"
#include "ranklab/intmath.hpp"

namespace ranklab {

namespace {

void require_weight_in_bound(long long n, long long brute_max, const char* who) {
    if (n > brute_max) {
        throw brute_bound_error(std::string(who) + ": weight " + std::to_string(n) +
                                " exceeds enumeration limit " + std::to_string(brute_max));
    }
}

void require_modulus(long long m) {
    if (m < 1) throw std::invalid_argument("modulus must be >= 1");
}

} // namespace

ExactCount RankHistogram::at(long long rank_value) const {
    auto it = counts.find(rank_value);
    return it == counts.end() ? ExactCount(0) : it->second;
}

ExactCount RankHistogram::total() const {
    ExactCount sum = 0;
    for (const auto& [_, c] : counts) sum += c;
    return sum;
}

RankHistogram rank_histogram(long long n, long long brute_max) {
    if (n < 1) throw std::invalid_argument("rank_histogram: weight must be >= 1");
    require_weight_in_bound(n, brute_max, "rank_histogram");

    // dense tally indexed by rank + (n-1); per-rank counts stay far below
    // 2^64 for any weight that is enumerable at all
    std::vector<unsigned long> tally(static_cast<std::size_t>(2 * n - 1), 0);
    for (const Partition& p : PartitionRange(n)) {
        ++tally[static_cast<std::size_t>(rank(p) + n - 1)];
    }

    RankHistogram hist;
    hist.n = n;
    for (long long r = -(n - 1); r <= n - 1; ++r) {
        unsigned long c = tally[static_cast<std::size_t>(r + n - 1)];
        if (c != 0) hist.counts.emplace(r, ExactCount(c));
    }
    return hist;
}

ExactCount g_count(long long k) {
    if (k < 1) return 0;
    return partition_count(k - 1) - partition_count(k - 2);
}

ExactCount g_count_brute(long long k, long long brute_max) {
    if (k < 1) return 0;
    require_weight_in_bound(k, brute_max, "g_count_brute");
    unsigned long c = 0;
    for (const Partition& p : PartitionRange(k)) {
        if (p.contains(static_cast<int>(p.size()))) ++c;
    }
    return ExactCount(c);
}

ExactCount rank_count(long long m, long long n, long long brute_max) {
    if (n <= 0) return 0;
    long long am = m < 0 ? -m : m;
    if (am > n - 1) return 0;
    if (2 * am >= n - 4) return g_count(n - am); // closed-form region
    if (n <= brute_max) return rank_histogram(n, brute_max).at(m);
    throw small_rank_error("rank_count: no closed form for rank " + std::to_string(m) +
                           " at weight " + std::to_string(n) +
                           " (2|m| < n-4) and weight exceeds enumeration limit " +
                           std::to_string(brute_max));
}

ExactCount rank_cumulative(long long n, long long r, long long brute_max) {
    if (n < 0) return 0;
    if (n == 0) return r >= 0 ? 1 : 0; // empty partition, rank 0
    if (r >= n - 1) return partition_count(n);
    if (r < -(n - 1)) return 0;
    RankHistogram hist = rank_histogram(n, brute_max);
    ExactCount sum = 0;
    for (const auto& [rho, c] : hist.counts) {
        if (rho > r) break;
        sum += c;
    }
    return sum;
}

ExactCount residue_rank_count(long long r, long long m, long long n, long long brute_max) {
    require_modulus(m);
    if (n < 1) return 0;
    RankHistogram hist = rank_histogram(n, brute_max);
    ExactCount sum = 0;
    for (const auto& [rho, c] : hist.counts) {
        if (mod_floor(rho - r, m) == 0) sum += c;
    }
    return sum;
}

ExactCount nplus_brute(const LargeRankQuery& q, long long brute_max) {
    require_modulus(q.m);
    if (q.n < 1) return 0;
    RankHistogram hist = rank_histogram(q.n, brute_max);
    ExactCount sum = 0;
    for (const auto& [rho, c] : hist.counts) {
        long long mag = rho < 0 ? -rho : rho;
        if (2 * mag >= q.n && mod_floor(rho - q.r, q.m) == 0) sum += c;
    }
    return sum;
}

ExactCount nplus_fast(const LargeRankQuery& q) {
    require_modulus(q.m);
    if (q.n < 1) return 0;
    // qualifying ranks: rho ≡ r (mod m), ceil(n/2) <= |rho| <= n-1; each
    // contributes N(rho, n) = g(n - |rho|) because 2|rho| >= n > n - 4
    long long lo = (q.n + 1) / 2;
    long long hi = q.n - 1;
    ExactCount sum = 0;
    for (long long rho = lo + mod_floor(q.r - lo, q.m); rho <= hi; rho += q.m) {
        sum += g_count(q.n - rho);
    }
    for (long long rho = -hi + mod_floor(q.r + hi, q.m); rho <= -lo; rho += q.m) {
        sum += g_count(q.n + rho);
    }
    return sum;
}

ExactCount rank_interval_count(long long n, long long a, long long b) {
    if (b < a || 2 * a < n - 4) {
        throw formula_domain_error("rank_interval_count: formula requires b >= a and 2a >= n-4 "
                                   "(got n=" + std::to_string(n) + ", a=" + std::to_string(a) +
                                   ", b=" + std::to_string(b) + ")");
    }
    return partition_count(n - a - 1) - partition_count(n - b - 2);
}

Partition fine_dyson_map(const Partition& p, long long r) {
    if (r < 1) throw std::invalid_argument("fine_dyson_map: requires r >= 1");
    if (p.empty() || rank(p) > r) {
        throw std::invalid_argument("fine_dyson_map: defined only for nonempty partitions of rank <= r");
    }
    std::vector<int> out;
    out.reserve(p.size() + 1);
    out.push_back(static_cast<int>(p.size() + r - 1)); // detached column, lengthened
    for (int part : p.parts()) {
        if (part > 1) out.push_back(part - 1);
    }
    return Partition(std::move(out));
}

Partition f_map(const Partition& p) {
    if (p.empty() || rank(p) < 0) {
        throw std::invalid_argument("f_map: defined for nonnegative rank (conjugate first)");
    }
    std::vector<int> out(p.parts().begin() + 1, p.parts().end());
    out.push_back(static_cast<int>(p.size()));
    return Partition(std::move(out));
}

Partition g_bijection_forward(const Partition& p) {
    if (p.contains(1)) throw std::invalid_argument("g_bijection_forward: input may not contain a part 1");
    std::vector<int> out;
    out.reserve(p.size() + 1);
    for (int part : p.parts()) out.push_back(part - 1);
    out.push_back(static_cast<int>(p.size() + 1));
    return Partition(std::move(out));
}

Partition g_bijection_inverse(const Partition& p) {
    int s = static_cast<int>(p.size());
    if (p.empty() || !p.contains(s)) {
        throw std::invalid_argument("g_bijection_inverse: number of parts must occur as a part");
    }
    std::vector<int> out;
    out.reserve(p.size() - 1);
    bool removed = false;
    for (int part : p.parts()) {
        if (!removed && part == s) {
            removed = true;
            continue;
        }
        out.push_back(part + 1);
    }
    return Partition(std::move(out));
}

} // namespace ranklab

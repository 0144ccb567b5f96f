#ifndef RANKLAB_RANK_STATS_HPP
#define RANKLAB_RANK_STATS_HPP

#include <map>

#include "ranklab/partition.hpp"
#include "ranklab/partition_count.hpp"

namespace ranklab {

// Enumeration guard: operations that walk all partitions of n refuse weights
// above this unless the caller raises the limit (p(50) = 204226 partitions
// enumerate in well under a second; the cost grows subexponentially but
// steeply).
inline constexpr long long kDefaultBruteMax = 50;

// Exact tally of rank over all partitions of a fixed weight n. Ranks with
// zero count are not stored; at() defaults them to 0.
struct RankHistogram {
    long long n = 0;
    std::map<long long, ExactCount> counts;

    ExactCount at(long long rank_value) const;
    ExactCount total() const;
};

// Arguments of the large-rank count: partitions of n with rank congruent to
// r mod m and |rank| >= n/2 (evaluated exactly as 2|rank| >= n).
struct LargeRankQuery {
    long long r = 0;
    long long m = 1;
    long long n = 0;
};

// Brute tally over all partitions of n; requires 1 <= n <= brute_max, else
// brute_bound_error.
RankHistogram rank_histogram(long long n, long long brute_max = kDefaultBruteMax);

// g(k): partitions of k whose number of parts occurs as a part, by the
// closed form p(k-1) - p(k-2) (OEIS A002865 for k >= 1). 0 for k <= 0.
ExactCount g_count(long long k);

// Same count by direct enumeration; the oracle for g_count.
ExactCount g_count_brute(long long k, long long brute_max = kDefaultBruteMax);

// N(m, n): partitions of n with rank exactly m. Closed form g_count(n - |m|)
// applies when 2|m| >= n - 4; below that the histogram tally is used, and
// weights beyond brute_max raise small_rank_error (no formula is available
// in that region).
ExactCount rank_count(long long m, long long n, long long brute_max = kDefaultBruteMax);

// h(n, r): partitions of n with rank <= r. The empty partition counts as
// rank 0, so h(0, r) = 1 for r >= 0; that convention is what makes the
// symmetry h(n, r) = h(n + r - 1, 2 - r) hold down to its edge cases.
ExactCount rank_cumulative(long long n, long long r, long long brute_max = kDefaultBruteMax);

// N(r, m, n): partitions of n with rank congruent to r mod m.
ExactCount residue_rank_count(long long r, long long m, long long n,
                              long long brute_max = kDefaultBruteMax);

// Large-rank count by enumeration.
ExactCount nplus_brute(const LargeRankQuery& q, long long brute_max = kDefaultBruteMax);

// Large-rank count by formula: every counted rank rho has 2|rho| >= n, which
// puts N(rho, n) in the closed-form region, so the count is the finite sum
// of g_count(n - |rho|) over qualifying rho. No enumeration, no bound.
ExactCount nplus_fast(const LargeRankQuery& q);

// Partitions of n with rank in [a, b], by the telescoped closed form
// p(n-a-1) - p(n-b-2); valid only under b >= a and 2a >= n - 4, else
// formula_domain_error.
ExactCount rank_interval_count(long long n, long long a, long long b);

// The rank-symmetry bijection behind h(n, r) = h(n + r - 1, 2 - r): removes
// the leftmost column (k squares), extends it by r - 1, and reattaches it as
// the new top row. Requires r >= 1 and rank(p) <= r; the image of
// {partitions of n, rank <= r} is exactly {partitions of n+r-1, rank >= r-2}.
Partition fine_dyson_map(const Partition& p, long long r);

// For p with rank m >= 0 and c parts: replaces the largest part (m + c) by c,
// giving a partition of n - m with c parts one of which is c. Injective on
// rank-m partitions of n; onto the number-of-parts-is-a-part set when
// 2m >= n - 4. Negative rank: conjugate first.
Partition f_map(const Partition& p);

// Bijection behind g(k) = p(k-1) - p(k-2): takes a partition of k - 1 with
// no part 1 (b parts) to (parts each - 1) adjoin (b + 1), a partition of k
// whose number of parts b + 1 is a part.
Partition g_bijection_forward(const Partition& p);

// Inverse: requires the number of parts to occur as a part.
Partition g_bijection_inverse(const Partition& p);

} // namespace ranklab

#endif

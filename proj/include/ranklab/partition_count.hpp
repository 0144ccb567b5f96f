#ifndef RANKLAB_PARTITION_COUNT_HPP
#define RANKLAB_PARTITION_COUNT_HPP

#include <gmpxx.h>

#include <mutex>
#include <vector>

namespace ranklab {

// All counts are exact arbitrary-precision integers; p(n) alone overflows 64
// bits near n ~ 400.
using ExactCount = mpz_class;

// Dense memo table for p(n), filled by the Euler pentagonal-number
// recurrence
//   p(n) = sum_{k>=1} (-1)^{k+1} [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ].
// Thread safe: each entry is computed once under a lock; extending the table
// never changes cached entries.
class PartitionCountTable {
public:
    PartitionCountTable();

    // p(n); 0 for n < 0.
    ExactCount at(long long n);

    long long max_cached() const;

private:
    void extend(long long n); // requires lock held

    mutable std::mutex mutex_;
    std::vector<ExactCount> cache_;
};

// p(n) from a process-wide shared table.
ExactCount partition_count(long long n);

} // namespace ranklab

#endif

#include "ranklab/partition_count.hpp"

namespace ranklab {

PartitionCountTable::PartitionCountTable() : cache_{ExactCount(1)} {}

ExactCount PartitionCountTable::at(long long n) {
    if (n < 0) return 0;
    std::lock_guard<std::mutex> lock(mutex_);
    extend(n);
    return cache_[static_cast<std::size_t>(n)];
}

long long PartitionCountTable::max_cached() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return static_cast<long long>(cache_.size()) - 1;
}

void PartitionCountTable::extend(long long n) {
    for (long long i = static_cast<long long>(cache_.size()); i <= n; ++i) {
        ExactCount sum = 0;
        for (long long k = 1;; ++k) {
            long long g1 = k * (3 * k - 1) / 2; // pentagonal numbers
            long long g2 = k * (3 * k + 1) / 2;
            if (g1 > i) break;
            if (k % 2 == 1) {
                sum += cache_[static_cast<std::size_t>(i - g1)];
                if (g2 <= i) sum += cache_[static_cast<std::size_t>(i - g2)];
            } else {
                sum -= cache_[static_cast<std::size_t>(i - g1)];
                if (g2 <= i) sum -= cache_[static_cast<std::size_t>(i - g2)];
            }
        }
        cache_.push_back(std::move(sum));
    }
}

ExactCount partition_count(long long n) {
    static PartitionCountTable table;
    return table.at(n);
}

} // namespace ranklab

#include "ranklab/partition.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace ranklab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("partition parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

long long Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

bool Partition::contains(int part) const {
    return std::binary_search(parts_.begin(), parts_.end(), part, std::greater<int>());
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    const auto& v = p.parts();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os;
}

int rank(const Partition& p) {
    if (p.empty()) throw std::invalid_argument("rank of the empty partition is undefined");
    return p.largest() - static_cast<int>(p.size());
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    // column j of the Young diagram has one square per row of length > j
    std::vector<int> cols(p.largest());
    for (int part : p.parts()) {
        for (int j = 0; j < part; ++j) ++cols[j];
    }
    return Partition(std::move(cols)); // already nonincreasing; ctor re-sorts cheaply
}

Partition union_partitions(const Partition& a, const Partition& b) {
    std::vector<int> merged;
    merged.reserve(a.size() + b.size());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(merged), std::greater<int>());
    return Partition(std::move(merged));
}

PartitionRange::iterator::iterator(long long n) {
    if (n >= 1) {
        current_.parts_.assign(1, static_cast<int>(n));
        done_ = false;
    }
}

// Reverse-lexicographic successor: find the last part > 1, decrement it, and
// redistribute that part's excess plus all trailing 1s greedily.
PartitionRange::iterator& PartitionRange::iterator::operator++() {
    auto& a = current_.parts_;
    std::size_t ones = 0;
    while (ones < a.size() && a[a.size() - 1 - ones] == 1) ++ones;
    if (ones == a.size()) { // (1,...,1) is last
        done_ = true;
        a.clear();
        return *this;
    }
    std::size_t i = a.size() - 1 - ones;
    int v = a[i] - 1;
    long long rem = 1 + static_cast<long long>(ones);
    a.resize(i);
    a.push_back(v);
    while (rem >= v) {
        a.push_back(v);
        rem -= v;
    }
    if (rem > 0) a.push_back(static_cast<int>(rem));
    return *this;
}

} // namespace ranklab

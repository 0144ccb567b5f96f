#ifndef RANKLAB_PARTITION_HPP
#define RANKLAB_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <vector>

namespace ranklab {

// A partition of n: nonincreasing sequence of positive parts summing to n.
// Parts are machine integers (weights stay at desk scale); counts of
// partitions are arbitrary precision elsewhere.
class Partition {
public:
    Partition() = default;

    // Sorts the given parts nonincreasing; throws std::invalid_argument on a
    // part < 1.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }
    int largest() const { return parts_.front(); }
    long long weight() const;
    bool contains(int part) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    friend class PartitionRange;
    std::vector<int> parts_;
};

// Prints "6,3,3,2" (empty partition prints nothing).
std::ostream& operator<<(std::ostream& os, const Partition& p);

// Largest part minus number of parts; throws std::invalid_argument on the
// empty partition (rank is undefined there).
int rank(const Partition& p);

// Transpose of the Young diagram. Involution; negates rank.
Partition conjugate(const Partition& p);

// Multiset union of parts.
Partition union_partitions(const Partition& a, const Partition& b);

// All partitions of n in reverse-lexicographic order, (n) first and
// (1,...,1) last; empty range for n <= 0. Single-pass input range: the
// iterator yields a reference to an internal partition that is advanced in
// place.
//
//   for (const Partition& p : PartitionRange(5)) ...
class PartitionRange {
public:
    explicit PartitionRange(long long n) : n_(n) {}

    class iterator {
    public:
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(long long n);

        const Partition& operator*() const { return current_; }
        const Partition* operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& a, const iterator& b) {
            return a.done_ == b.done_;
        }

    private:
        Partition current_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(n_); }
    iterator end() const { return iterator(); }

private:
    long long n_;
};

} // namespace ranklab

#endif

#ifndef RANKLAB_ERRORS_HPP
#define RANKLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ranklab {

// Resource guard: an operation would enumerate more partitions than the
// caller allowed (default limit kDefaultBruteMax in rank_stats.hpp).
class brute_bound_error : public std::runtime_error {
public:
    explicit brute_bound_error(const std::string& what) : std::runtime_error(what) {}
};

// rank_count in the small-|m| region, where no closed formula applies and
// the weight exceeds the enumeration limit. Distinct from brute_bound_error
// so callers can tell "raise the limit" apart from "restrict to large |m|".
class small_rank_error : public brute_bound_error {
public:
    explicit small_rank_error(const std::string& what) : brute_bound_error(what) {}
};

// rank_interval_count outside the hypothesis under which its formula counts
// correctly (b >= a and 2a >= n-4).
class formula_domain_error : public std::domain_error {
public:
    explicit formula_domain_error(const std::string& what) : std::domain_error(what) {}
};

// Identity search over more (a, r) cells than the configured limit.
class search_limit_error : public std::runtime_error {
public:
    explicit search_limit_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ranklab

#endif

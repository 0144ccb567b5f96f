#ifndef RANKLAB_IDENTITIES_HPP
#define RANKLAB_IDENTITIES_HPP

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ranklab/partition_count.hpp"
#include "ranklab/rank_stats.hpp"

namespace ranklab {

// Candidate parameters for a two-term vs two-term large-rank identity
//   N+(r1,m,2mn+a1) + N+(r2,m,2mn+a2) = N+(r3,m,2mn+a3) + N+(r4,m,2mn+a4)
// holding for every n >= 0 once the four residual conditions (see
// check_conditions) are met.
struct IdentityTuple {
    long long m = 1;
    std::array<long long, 4> a{1, 1, 1, 1};
    std::array<long long, 4> r{0, 0, 0, 0};

    friend bool operator==(const IdentityTuple&, const IdentityTuple&) = default;
    friend std::strong_ordering operator<=>(const IdentityTuple&, const IdentityTuple&) = default;
};

// Throws std::invalid_argument unless m >= 1 and every a_i >= 1.
void validate_tuple(const IdentityTuple& t);

enum class Sign { minus, plus };

// a -/+ r - m * ceil((a -/+ 2r) / (2m)), with the true mathematical ceiling
// (floor toward minus infinity underneath); m >= 1.
long long ceiling_residual(long long a, long long r, long long m, Sign sign);

// The four coupling equations between the tuple's ceiling residuals:
//   minus(1) = minus(3),  plus(1) = minus(4),
//   minus(2) = plus(4),   plus(2) = plus(3).
bool check_conditions(const IdentityTuple& t);

// Representative of r's residue class mod m inside (-m/2, m/2].
long long normalize_residue(long long r, long long m);

// Canonical orbit representative under the transformations that preserve
// the condition system (term swaps within and across the two sides, with
// the forced residue negations), with every r normalized into (-m/2, m/2].
// Lexicographically least (a, r) over the orbit.
IdentityTuple canonicalize(const IdentityTuple& t);

inline constexpr long long kDefaultSearchCells = 1'000'000;

// All condition-satisfying tuples with 1 <= a_i <= a_max and |r_i| <=
// r_window, canonicalized and deduplicated, in increasing order. Tuples with
// a1 = a2 = a3 = a4 are dropped (the identity is vacuous there). Refuses
// searches over more than max_cells (a, r) cells.
std::vector<IdentityTuple> search_identities(long long m, long long a_max, long long r_window,
                                             long long max_cells = kDefaultSearchCells);

enum class VerifyMethod { brute, fast, both };

struct VerificationRow {
    long long n = 0;
    ExactCount lhs, rhs;
    std::string method; // "brute", "fast", or "both" (cross-checked)
    bool pass = false;
    std::string note;
};

struct VerificationReport {
    std::optional<IdentityTuple> tuple;
    bool conditions_ok = true;
    std::vector<VerificationRow> rows;
    std::string note; // e.g. truncation notice

    bool all_pass() const;
    std::optional<long long> counterexample_n() const; // first failing n
    std::string verdict() const;                       // "all-pass" | "counterexample"
};

// Evaluates both sides of the tuple's identity for n = 0..n_max. fast uses
// the closed-form large-rank count; brute enumerates (rows whose four
// weights exceed brute_max are downgraded to fast, with a note); both runs
// fast everywhere and cross-checks brute where affordable. Tuples failing
// check_conditions are still verified (falsification runs) but flagged via
// conditions_ok.
VerificationReport verify_identity(const IdentityTuple& t, long long n_max,
                                   VerifyMethod method = VerifyMethod::both,
                                   long long brute_max = kDefaultBruteMax);

// Checks N(a, p, pn+4|5) = p(pn+4|5)/prime for prime 5 (weights 5n+4) or 7
// (weights 7n+5), every residue a, n = 0..n_max. One row per (n, a).
// Weights beyond brute_max truncate the run with a notice in the report.
VerificationReport verify_dyson_congruence(int prime, long long n_max,
                                           long long brute_max = kDefaultBruteMax);

// One side's term in a residue-count relation: counts partitions of
// stride*n + offset with rank congruent to r mod m.
struct RelationTerm {
    long long r = 0;
    long long m = 1;
    long long stride = 0;
    long long offset = 0;
};

// Sums residue_rank_count over each side for n = 0..n_max and compares.
// Truncates with a notice once any weight passes brute_max.
VerificationReport verify_residue_relation(const std::vector<RelationTerm>& lhs,
                                           const std::vector<RelationTerm>& rhs,
                                           long long n_max,
                                           long long brute_max = kDefaultBruteMax);

// The classical mod-7 two-vs-two relation at weights 7n+6:
// ranks = 0,1 on the left against ranks = 2,3 on the right.
std::pair<std::vector<RelationTerm>, std::vector<RelationTerm>> dyson_relation_terms();

// Exact share of partitions of n whose rank reaches n/2, as the unreduced
// pair p(floor(n/2)-1) / p(n), next to its decay approximation
// 2 exp(pi (1-sqrt 2) sqrt(n/3)).
struct TailFraction {
    long long n = 0;
    ExactCount num, den;
    double asymptote = 0.0;

    double exact_value() const; // num/den rounded to double
    double ratio() const;       // exact_value / asymptote
};

// Requires n >= 2.
TailFraction tail_fraction(long long n);

} // namespace ranklab

#endif

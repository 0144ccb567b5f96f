#include "ranklab/identities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "ranklab/errors.hpp"
#include "ranklab/intmath.hpp"

namespace ranklab {

void validate_tuple(const IdentityTuple& t) {
    if (t.m < 1) throw std::invalid_argument("identity tuple: m must be >= 1");
    for (long long ai : t.a) {
        if (ai < 1) throw std::invalid_argument("identity tuple: every a_i must be >= 1");
    }
}

long long ceiling_residual(long long a, long long r, long long m, Sign sign) {
    if (m < 1) throw std::invalid_argument("ceiling_residual: m must be >= 1");
    long long s = sign == Sign::minus ? -1 : 1;
    return a + s * r - m * ceil_div(a + s * 2 * r, 2 * m);
}

bool check_conditions(const IdentityTuple& t) {
    validate_tuple(t);
    std::array<long long, 4> mi, pl;
    for (int i = 0; i < 4; ++i) {
        mi[i] = ceiling_residual(t.a[i], t.r[i], t.m, Sign::minus);
        pl[i] = ceiling_residual(t.a[i], t.r[i], t.m, Sign::plus);
    }
    return mi[0] == mi[2] && pl[0] == mi[3] && mi[1] == pl[3] && pl[1] == pl[2];
}

long long normalize_residue(long long r, long long m) {
    if (m < 1) throw std::invalid_argument("normalize_residue: m must be >= 1");
    long long v = mod_floor(r, m);
    if (v > m / 2) v -= m;
    return v;
}

namespace {

// The condition system is preserved by these three involutions (each swaps
// terms and negates the residues whose minus/plus roles the swap exchanges);
// both residuals are invariant under r -> r + m, so normalization afterwards
// is also safe.
IdentityTuple apply_swap(const IdentityTuple& t, int which) {
    IdentityTuple u;
    u.m = t.m;
    const auto& a = t.a;
    const auto& r = t.r;
    switch (which) {
        case 0: // swap terms 1<->2 and 3<->4
            u.a = {a[1], a[0], a[3], a[2]};
            u.r = {r[1], r[0], -r[3], -r[2]};
            break;
        case 1: // swap the two sides
            u.a = {a[2], a[3], a[0], a[1]};
            u.r = {r[2], -r[3], r[0], -r[1]};
            break;
        default: // swap terms 3<->4 only
            u.a = {a[0], a[1], a[3], a[2]};
            u.r = {-r[0], -r[1], r[3], r[2]};
            break;
    }
    for (auto& x : u.r) x = normalize_residue(x, u.m);
    return u;
}

} // namespace

IdentityTuple canonicalize(const IdentityTuple& t) {
    validate_tuple(t);
    IdentityTuple start = t;
    for (auto& x : start.r) x = normalize_residue(x, start.m);

    std::set<IdentityTuple> orbit{start};
    std::vector<IdentityTuple> frontier{start};
    while (!frontier.empty()) {
        std::vector<IdentityTuple> next;
        for (const auto& u : frontier) {
            for (int which = 0; which < 3; ++which) {
                IdentityTuple v = apply_swap(u, which);
                if (orbit.insert(v).second) next.push_back(v);
            }
        }
        frontier = std::move(next);
    }
    return *orbit.begin();
}

std::vector<IdentityTuple> search_identities(long long m, long long a_max, long long r_window,
                                             long long max_cells) {
    if (m < 1 || a_max < 1 || r_window < 0) {
        throw std::invalid_argument("search_identities: require m >= 1, a_max >= 1, r_window >= 0");
    }
    long long r_lo = std::max(-((m - 1) / 2), -r_window);
    long long r_hi = std::min(m / 2, r_window);
    long long n_res = std::max<long long>(0, r_hi - r_lo + 1);
    if (a_max * n_res > max_cells) {
        throw search_limit_error("search_identities: " + std::to_string(a_max * n_res) +
                                 " cells exceed limit " + std::to_string(max_cells));
    }

    struct Cell {
        long long a, r, mi, pl;
    };
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(a_max * n_res));
    std::unordered_map<long long, std::vector<int>> by_minus, by_plus;
    for (long long a = 1; a <= a_max; ++a) {
        for (long long r = r_lo; r <= r_hi; ++r) {
            Cell c{a, r, ceiling_residual(a, r, m, Sign::minus),
                   ceiling_residual(a, r, m, Sign::plus)};
            int idx = static_cast<int>(cells.size());
            by_minus[c.mi].push_back(idx);
            by_plus[c.pl].push_back(idx);
            cells.push_back(c);
        }
    }

    // conditions: mi1=mi3, pl1=mi4, mi2=pl4, pl2=pl3. Pair terms 1 and 3 on
    // a shared minus residual; term 4 comes from by_minus[pl1] and term 2
    // from by_plus[pl3], joined on mi2 = pl4.
    std::set<IdentityTuple> found;
    const std::vector<int> kNone;
    auto bucket_or_empty = [&](const std::unordered_map<long long, std::vector<int>>& map,
                               long long key) -> const std::vector<int>& {
        auto it = map.find(key);
        return it == map.end() ? kNone : it->second;
    };
    for (const auto& [mi_val, bucket] : by_minus) {
        (void)mi_val;
        for (int i1 : bucket) {
            const Cell& t1 = cells[i1];
            const auto& c4 = bucket_or_empty(by_minus, t1.pl);
            if (c4.empty()) continue;
            std::unordered_map<long long, std::vector<int>> c4_by_plus;
            for (int i4 : c4) c4_by_plus[cells[i4].pl].push_back(i4);
            for (int i3 : bucket) {
                const Cell& t3 = cells[i3];
                for (int i2 : bucket_or_empty(by_plus, t3.pl)) {
                    const Cell& t2 = cells[i2];
                    auto it = c4_by_plus.find(t2.mi);
                    if (it == c4_by_plus.end()) continue;
                    for (int i4 : it->second) {
                        const Cell& t4 = cells[i4];
                        if (t1.a == t2.a && t1.a == t3.a && t1.a == t4.a) continue;
                        IdentityTuple t{m,
                                        {t1.a, t2.a, t3.a, t4.a},
                                        {t1.r, t2.r, t3.r, t4.r}};
                        found.insert(canonicalize(t));
                    }
                }
            }
        }
    }
    return {found.begin(), found.end()};
}

bool VerificationReport::all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const auto& row) { return row.pass; });
}

std::optional<long long> VerificationReport::counterexample_n() const {
    for (const auto& row : rows) {
        if (!row.pass) return row.n;
    }
    return std::nullopt;
}

std::string VerificationReport::verdict() const {
    return all_pass() ? "all-pass" : "counterexample";
}

namespace {

std::pair<ExactCount, ExactCount> identity_sides_fast(const IdentityTuple& t, long long n) {
    auto term = [&](int i) {
        return nplus_fast({t.r[i], t.m, 2 * t.m * n + t.a[i]});
    };
    return {term(0) + term(1), term(2) + term(3)};
}

std::pair<ExactCount, ExactCount> identity_sides_brute(const IdentityTuple& t, long long n,
                                                       long long brute_max) {
    auto term = [&](int i) {
        return nplus_brute({t.r[i], t.m, 2 * t.m * n + t.a[i]}, brute_max);
    };
    return {term(0) + term(1), term(2) + term(3)};
}

} // namespace

VerificationReport verify_identity(const IdentityTuple& t, long long n_max, VerifyMethod method,
                                   long long brute_max) {
    validate_tuple(t);
    VerificationReport report;
    report.tuple = t;
    report.conditions_ok = check_conditions(t);

    for (long long n = 0; n <= n_max; ++n) {
        VerificationRow row;
        row.n = n;
        long long max_weight = 2 * t.m * n + *std::max_element(t.a.begin(), t.a.end());
        bool brute_ok = max_weight <= brute_max;

        if (method == VerifyMethod::fast || !brute_ok) {
            std::tie(row.lhs, row.rhs) = identity_sides_fast(t, n);
            row.method = "fast";
            if (method != VerifyMethod::fast) {
                row.note = "weights exceed enumeration limit " + std::to_string(brute_max) +
                           "; formula only";
            }
            row.pass = row.lhs == row.rhs;
        } else if (method == VerifyMethod::brute) {
            std::tie(row.lhs, row.rhs) = identity_sides_brute(t, n, brute_max);
            row.method = "brute";
            row.pass = row.lhs == row.rhs;
        } else {
            auto [flhs, frhs] = identity_sides_fast(t, n);
            std::tie(row.lhs, row.rhs) = identity_sides_brute(t, n, brute_max);
            row.method = "both";
            row.pass = row.lhs == row.rhs;
            if (flhs != row.lhs || frhs != row.rhs) {
                row.pass = false;
                row.note = "formula disagrees with enumeration";
            }
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

VerificationReport verify_dyson_congruence(int prime, long long n_max, long long brute_max) {
    if (prime != 5 && prime != 7) {
        throw std::invalid_argument("verify_dyson_congruence: prime must be 5 or 7");
    }
    long long offset = prime == 5 ? 4 : 5;
    VerificationReport report;
    for (long long n = 0; n <= n_max; ++n) {
        long long w = prime * n + offset;
        if (w > brute_max) {
            report.note = "truncated at n=" + std::to_string(n) + ": weight " + std::to_string(w) +
                          " exceeds enumeration limit " + std::to_string(brute_max);
            break;
        }
        ExactCount pw = partition_count(w);
        ExactCount share = pw / prime;
        bool divisible = share * prime == pw;
        RankHistogram hist = rank_histogram(w, brute_max);
        for (long long a = 0; a < prime; ++a) {
            VerificationRow row;
            row.n = n;
            row.note = "rank residue " + std::to_string(a) + " mod " + std::to_string(prime);
            row.method = "brute";
            ExactCount count = 0;
            for (const auto& [rho, c] : hist.counts) {
                if (mod_floor(rho - a, prime) == 0) count += c;
            }
            row.lhs = count;
            row.rhs = share;
            row.pass = divisible && row.lhs == row.rhs;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

VerificationReport verify_residue_relation(const std::vector<RelationTerm>& lhs,
                                           const std::vector<RelationTerm>& rhs, long long n_max,
                                           long long brute_max) {
    VerificationReport report;
    for (long long n = 0; n <= n_max; ++n) {
        long long max_weight = 0;
        for (const auto& terms : {lhs, rhs}) {
            for (const auto& t : terms) max_weight = std::max(max_weight, t.stride * n + t.offset);
        }
        if (max_weight > brute_max) {
            report.note = "truncated at n=" + std::to_string(n) + ": weight " +
                          std::to_string(max_weight) + " exceeds enumeration limit " +
                          std::to_string(brute_max);
            break;
        }
        auto side = [&](const std::vector<RelationTerm>& terms) {
            ExactCount sum = 0;
            for (const auto& t : terms) {
                sum += residue_rank_count(t.r, t.m, t.stride * n + t.offset, brute_max);
            }
            return sum;
        };
        VerificationRow row;
        row.n = n;
        row.lhs = side(lhs);
        row.rhs = side(rhs);
        row.method = "brute";
        row.pass = row.lhs == row.rhs;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::pair<std::vector<RelationTerm>, std::vector<RelationTerm>> dyson_relation_terms() {
    return {{{0, 7, 7, 6}, {1, 7, 7, 6}}, {{2, 7, 7, 6}, {3, 7, 7, 6}}};
}

double TailFraction::exact_value() const {
    mpq_class q(num, den);
    q.canonicalize();
    return q.get_d();
}

double TailFraction::ratio() const {
    return exact_value() / asymptote;
}

TailFraction tail_fraction(long long n) {
    if (n < 2) throw std::invalid_argument("tail_fraction: requires n >= 2");
    TailFraction t;
    t.n = n;
    t.num = partition_count(n / 2 - 1);
    t.den = partition_count(n);
    t.asymptote = 2.0 * std::exp(std::numbers::pi * (1.0 - std::sqrt(2.0)) * std::sqrt(n / 3.0));
    return t;
}

} // namespace ranklab

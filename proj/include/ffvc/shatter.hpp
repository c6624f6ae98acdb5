#pragma once

#include <optional>

#include "ffvc/stars.hpp"

namespace ffvc {

// Q(B): the members z of E satisfying z . b = t for every b in B.
// B empty means no constraint, so Q = E.
struct WitnessSet {
    std::vector<Point> constraints;
    std::vector<uint32_t> members; // sorted point indices
};

WitnessSet witness_set(const PointSet& e, std::span<const Point> b, FieldElement t);

// A proper subset A of the leaf set L is bad when every z in Q(A) is also
// adjacent to some leaf outside A. The empty subset is permitted: it is bad
// exactly when every z in E is adjacent to some leaf, which is the missing
// all-zeros witness case of the direct shattering test.
bool is_bad(std::span<const Point> a, std::span<const Point> l, const PointSet& e,
            FieldElement t);

// Outcome of a direct shattering test over the canonical ordering of the
// candidate set (sorted by point_index). Subset masks bind bit i to the
// i-th smallest candidate.
struct ShatterCertificate {
    std::vector<Point> candidate;      // canonical order
    bool shattered = false;
    std::vector<uint32_t> witnesses;   // per mask: member index of a witness, size 2^|C|
    uint64_t failing_mask = 0;         // smallest unrealized mask when not shattered

    std::vector<Point> failing_subset(const PointSet& e) const;
};

// Searches, for every subset S of C, a witness y in E whose adjacency
// pattern on C is exactly S. Masks are scanned in increasing order and the
// first unrealized one is reported.
ShatterCertificate is_shattered_direct(std::span<const Point> c, const PointSet& e,
                                       FieldElement t);

// Star characterization: C (of size exactly d) is shattered iff Q(C) is
// nonempty and no proper subset of C, the empty one included, is bad.
bool is_shattered_stars(std::span<const Point> c, const PointSet& e, FieldElement t);

// Per-star bad-subset inventory; masks are over the star's leaf order.
struct BadSetReport {
    StarTuple star;
    std::vector<uint64_t> bad_subset_masks;
    bool is_good = false; // no bad subset of any size 0..d-1
};

BadSetReport analyze_star(const PointSet& e, const StarTuple& star, FieldElement t);

// Greedy witness for the span lemma: requires y in Q, |Q| > q^(r-1) and
// r <= d-1; scans Q in point_index order keeping anything outside the span
// of {y} and the rows kept so far. Exhausting Q below size r under a
// satisfied precondition is an InternalError, never a soft failure.
std::vector<Point> greedy_independent_subset(const WitnessSet& q_set, const Point& y,
                                             uint32_t r, const PointSet& e);

struct BadStarTotals {
    std::vector<BigInt> by_size; // index k = 1..d-1; [0] unused
    BigInt any_size;             // M(E): at least one bad subset of size 1..d-1
    BigInt independent_stars;    // matches count_indep_dstars
};

// Exact census over ordered d-stars with independent leaves, at brute-force
// scale; the work estimate is checked against the budget before any
// enumeration starts.
BadStarTotals bad_star_totals(const PointSet& e, FieldElement t, uint64_t budget);
BigInt count_bad_stars(const PointSet& e, FieldElement t, uint32_t k, uint64_t budget);

struct SearchResult {
    std::optional<ShatterCertificate> certificate;
    uint64_t stars_explored = 0;
    bool budget_exhausted = false;
};

// Looks for a d-star whose leaf set has no bad subset: centers in a seeded
// random order, leaves by independent-combination backtracking. Success is
// confirmed with is_shattered_direct before the certificate is returned.
SearchResult find_shattered_dset(const PointSet& e, FieldElement t, uint64_t budget,
                                 uint64_t seed);

enum class VcMode { exhaustive, star_guided };

struct VcResult {
    uint32_t dimension = 0;
    bool resolved = true; // false: budget-limited, true dimension may exceed
    VcMode mode = VcMode::exhaustive;
    std::optional<ShatterCertificate> certificate; // largest shattered set found
    uint64_t stars_explored = 0;
    uint32_t first_unshattered_size = 0; // exhaustive: n with no shattered n-set
};

BigInt exhaustive_vc_work_estimate(uint64_t size, uint32_t d);

// exhaustive: exact, gated by the work estimate (rejection advises
// star_guided). star_guided: d when the star search succeeds (hyperplane
// classes cannot shatter d+1 points, so d is exact, and that cap is itself
// verified exhaustively in the test suite); otherwise the best shattered
// size found below d, flagged unresolved.
VcResult vc_dimension(const PointSet& e, FieldElement t, VcMode mode,
                      uint64_t budget = 200'000'000, uint64_t seed = 0);

} // namespace ffvc

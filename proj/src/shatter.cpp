#include "ffvc/shatter.hpp"

#include <algorithm>

#include "ffvc/rng.hpp"

namespace ffvc {

namespace {

void require_from_space(const PointSet& e, const Point& p, const char* what) {
    if (p.field() != e.field() || p.dim() != e.d())
        throw ValidationError(std::string(what) + " from a different space than E");
}

std::vector<uint32_t> coords_of(const PointSet& e, uint32_t idx) {
    std::vector<uint32_t> c(e.d());
    index_coords(idx, e.q(), e.d(), c);
    return c;
}

unsigned long long clamp_u64(const BigInt& v) {
    static const BigInt kMax = BigInt(~uint64_t(0));
    return (v > kMax ? kMax : v).convert_to<unsigned long long>();
}

} // namespace

WitnessSet witness_set(const PointSet& e, std::span<const Point> b, FieldElement t) {
    require_nonzero_t(t);
    if (t.field() != e.field())
        throw ValidationError("t from a different field than E");
    WitnessSet w;
    w.constraints.assign(b.begin(), b.end());
    for (const Point& p : b) require_from_space(e, p, "constraint point");

    if (b.empty()) {
        w.members = e.members();
        return w;
    }
    auto satisfies_all = [&](std::span<const uint32_t> z) {
        for (const Point& p : b)
            if (dot_mod(z, p.coords(), e.q()) != t.value()) return false;
        return true;
    };
    uint64_t hyperplane_size = e.space() / e.q();
    if (hyperplane_size < e.size() && !b.front().is_zero()) {
        HyperplaneIter it(b.front(), t);
        std::vector<uint32_t> coords(e.d());
        while (auto idx = it.next()) {
            if (!e.contains(*idx)) continue;
            index_coords(*idx, e.q(), e.d(), coords);
            if (satisfies_all(coords)) w.members.push_back(static_cast<uint32_t>(*idx));
        }
    } else {
        std::vector<uint32_t> coords(e.d());
        for (uint32_t idx : e.members()) {
            index_coords(idx, e.q(), e.d(), coords);
            if (satisfies_all(coords)) w.members.push_back(idx);
        }
    }
    return w;
}

bool is_bad(std::span<const Point> a, std::span<const Point> l, const PointSet& e,
            FieldElement t) {
    require_nonzero_t(t);
    for (const Point& p : l) require_from_space(e, p, "leaf");
    std::vector<Point> complement;
    for (const Point& x : l)
        if (std::find(a.begin(), a.end(), x) == a.end()) complement.push_back(x);
    for (const Point& x : a)
        if (std::find(l.begin(), l.end(), x) == l.end())
            throw ValidationError("bad-set candidate contains a point outside the leaf set");
    if (complement.empty())
        throw ValidationError("bad-set candidate must be a proper subset of the leaf set");

    WitnessSet q = witness_set(e, a, t);
    std::vector<uint32_t> coords(e.d());
    for (uint32_t idx : q.members) {
        index_coords(idx, e.q(), e.d(), coords);
        bool hits = false;
        for (const Point& x : complement)
            if (dot_mod(coords, x.coords(), e.q()) == t.value()) { hits = true; break; }
        if (!hits) return false;
    }
    return true; // vacuously true when Q(A) is empty
}

std::vector<Point> ShatterCertificate::failing_subset(const PointSet& e) const {
    (void)e;
    std::vector<Point> out;
    for (size_t i = 0; i < candidate.size(); ++i)
        if ((failing_mask >> i) & 1) out.push_back(candidate[i]);
    return out;
}

namespace {

constexpr uint32_t kMaxDirectCandidates = 20; // 2^20 witness slots

std::vector<Point> canonical_candidate(std::span<const Point> c, const PointSet& e) {
    if (c.empty())
        throw ValidationError("candidate set must be nonempty");
    if (c.size() > kMaxDirectCandidates)
        throw ValidationError("candidate set too large for a direct 2^|C| check");
    std::vector<Point> sorted(c.begin(), c.end());
    for (const Point& p : sorted) {
        require_from_space(e, p, "candidate point");
        if (!e.contains(p))
            throw ValidationError("candidate point " + p.to_string() + " is not in E");
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const Point& x, const Point& y) { return point_index(x) < point_index(y); });
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1])
            throw ValidationError("candidate set has a repeated point " +
                                  sorted[i].to_string());
    return sorted;
}

} // namespace

ShatterCertificate is_shattered_direct(std::span<const Point> c, const PointSet& e,
                                       FieldElement t) {
    require_nonzero_t(t);
    ShatterCertificate cert;
    cert.candidate = canonical_candidate(c, e);
    size_t n = cert.candidate.size();
    uint64_t patterns = uint64_t(1) << n;

    constexpr uint32_t kNone = ~uint32_t(0);
    std::vector<uint32_t> first_witness(patterns, kNone);
    std::vector<uint32_t> coords(e.d());
    uint64_t seen = 0;
    for (uint32_t idx : e.members()) {
        index_coords(idx, e.q(), e.d(), coords);
        uint64_t mask = 0;
        for (size_t i = 0; i < n; ++i)
            if (dot_mod(coords, cert.candidate[i].coords(), e.q()) == t.value())
                mask |= uint64_t(1) << i;
        if (first_witness[mask] == kNone) {
            first_witness[mask] = idx;
            if (++seen == patterns) break; // every labeling already realized
        }
    }
    for (uint64_t mask = 0; mask < patterns; ++mask) {
        if (first_witness[mask] == kNone) {
            cert.shattered = false;
            cert.failing_mask = mask;
            return cert;
        }
    }
    cert.shattered = true;
    cert.witnesses = std::move(first_witness);
    return cert;
}

bool is_shattered_stars(std::span<const Point> c, const PointSet& e, FieldElement t) {
    require_nonzero_t(t);
    std::vector<Point> sorted = canonical_candidate(c, e);
    if (sorted.size() != e.d())
        throw ValidationError("star characterization needs exactly d candidate points");
    if (witness_set(e, sorted, t).members.empty())
        return false; // no d-star on this leaf set
    uint64_t full = (uint64_t(1) << sorted.size()) - 1;
    for (uint64_t mask = 0; mask < full; ++mask) {
        std::vector<Point> subset;
        for (size_t i = 0; i < sorted.size(); ++i)
            if ((mask >> i) & 1) subset.push_back(sorted[i]);
        if (is_bad(subset, sorted, e, t)) return false;
    }
    return true;
}

BadSetReport analyze_star(const PointSet& e, const StarTuple& star, FieldElement t) {
    require_nonzero_t(t);
    if (!star.non_degenerate())
        throw ValidationError("bad-set analysis requires pairwise distinct leaves");
    BadSetReport report{star, {}, false};
    const auto& leaves = star.leaves();
    uint64_t full = (uint64_t(1) << leaves.size()) - 1;
    for (uint64_t mask = 0; mask < full; ++mask) {
        std::vector<Point> subset;
        for (size_t i = 0; i < leaves.size(); ++i)
            if ((mask >> i) & 1) subset.push_back(leaves[i]);
        if (is_bad(subset, leaves, e, t)) report.bad_subset_masks.push_back(mask);
    }
    report.is_good = report.bad_subset_masks.empty();
    return report;
}

std::vector<Point> greedy_independent_subset(const WitnessSet& q_set, const Point& y,
                                             uint32_t r, const PointSet& e) {
    require_from_space(e, y, "pivot point");
    if (r + 1 > e.d())
        throw ValidationError("requested rank r must satisfy r <= d-1");
    uint64_t y_idx = point_index(y);
    if (!std::binary_search(q_set.members.begin(), q_set.members.end(),
                            static_cast<uint32_t>(y_idx)))
        throw ValidationError("pivot point must belong to the witness set");
    // |Q| > q^(r-1), written as |Q| * q > q^r to stay in integers at r = 0.
    BigInt lhs = BigInt(q_set.members.size()) * e.q();
    if (lhs <= bpow(BigInt(e.q()), r))
        throw ValidationError("witness set too small: the size hypothesis |Q| > q^(r-1) fails");

    std::vector<Point> j;
    if (r == 0) return j;
    Basis basis(e.field(), e.d());
    basis.try_extend(y);
    for (uint32_t idx : q_set.members) {
        if (idx == y_idx) continue;
        auto coords = coords_of(e, idx);
        if (basis.try_extend(coords)) {
            j.push_back(Point(e.field(), coords));
            if (j.size() == r) return j;
        }
    }
    throw InternalError("greedy independent subset exhausted the witness set below rank " +
                        std::to_string(r) + "; the size hypothesis should forbid this");
}

namespace {

// Work estimate for the bad-star census: combinations times the cost of the
// witness-set scans for every proper subset.
BigInt bad_star_work_estimate(const PointSet& e) {
    uint32_t d = e.d();
    if (e.size() < d) return 0;
    BigInt combos = 1;
    for (uint32_t i = 0; i < d; ++i) combos = combos * BigInt(e.size() - i) / (i + 1);
    return combos * BigInt(e.size()) * bpow(BigInt(2), d);
}

// All size-d combinations of E's members with independent coordinates,
// invoking fn(points, member_indices).
template <typename Fn>
void for_each_independent_combination(const PointSet& e, Fn&& fn) {
    uint32_t d = e.d();
    if (e.size() < d) return;
    const auto& members = e.members();
    std::vector<std::vector<uint32_t>> coords(members.size());
    for (size_t i = 0; i < members.size(); ++i) coords[i] = coords_of(e, members[i]);

    Basis basis(e.field(), d);
    std::vector<size_t> chosen;
    size_t pos = 0;
    while (true) {
        if (chosen.size() == d) {
            fn(chosen, coords);
            basis.pop();
            pos = chosen.back() + 1;
            chosen.pop_back();
            continue;
        }
        if (pos + (d - chosen.size()) > members.size()) {
            if (chosen.empty()) break;
            basis.pop();
            pos = chosen.back() + 1;
            chosen.pop_back();
            continue;
        }
        if (basis.try_extend(coords[pos])) {
            chosen.push_back(pos);
            ++pos;
        } else {
            ++pos;
        }
    }
}

} // namespace

BadStarTotals bad_star_totals(const PointSet& e, FieldElement t, uint64_t budget) {
    require_nonzero_t(t);
    uint32_t d = e.d();
    BigInt estimate = bad_star_work_estimate(e);
    if (estimate > BigInt(budget))
        throw BudgetError("bad-star census work estimate " + estimate.str() +
                              " exceeds budget " + std::to_string(budget),
                          clamp_u64(estimate));

    BadStarTotals totals;
    totals.by_size.assign(d, BigInt(0));
    totals.any_size = 0;
    totals.independent_stars = 0;
    if (e.size() < d) return totals;
    BigInt orderings = big_factorial(d);

    for_each_independent_combination(e, [&](const std::vector<size_t>& chosen,
                                            const std::vector<std::vector<uint32_t>>& coords) {
        std::vector<Point> leaves;
        leaves.reserve(d);
        for (size_t i : chosen)
            leaves.push_back(Point(e.field(), coords[i]));
        BigInt centers(witness_set(e, leaves, t).members.size());
        if (centers == 0) return;
        BigInt weight = centers * orderings;
        totals.independent_stars += weight;

        bool any = false;
        std::vector<bool> size_seen(d, false);
        uint64_t full = (uint64_t(1) << d) - 1;
        for (uint64_t mask = 1; mask < full; ++mask) { // sizes 1..d-1 only
            uint32_t k = static_cast<uint32_t>(__builtin_popcountll(mask));
            std::vector<Point> subset;
            for (uint32_t i = 0; i < d; ++i)
                if ((mask >> i) & 1) subset.push_back(leaves[i]);
            if (is_bad(subset, leaves, e, t)) {
                any = true;
                size_seen[k] = true;
            }
        }
        if (any) totals.any_size += weight;
        for (uint32_t k = 1; k < d; ++k)
            if (size_seen[k]) totals.by_size[k] += weight;
    });
    return totals;
}

BigInt count_bad_stars(const PointSet& e, FieldElement t, uint32_t k, uint64_t budget) {
    if (k < 1 || k + 1 > e.d())
        throw ValidationError("bad-set size k must satisfy 1 <= k <= d-1");
    return bad_star_totals(e, t, budget).by_size[k];
}

SearchResult find_shattered_dset(const PointSet& e, FieldElement t, uint64_t budget,
                                 uint64_t seed) {
    require_nonzero_t(t);
    uint32_t d = e.d();
    SearchResult result;
    if (e.size() < d) return result;
    // A shattered d-set needs 2^d distinct adjacency patterns, hence 2^d
    // distinct witnesses in E.
    if (d >= 63 || (uint64_t(1) << d) > e.size()) return result;

    // Seeded center order; ties in outcome are impossible because the search
    // is sequential and stops at the first good star.
    std::vector<uint32_t> order(e.members());
    CounterRng rng(derive_seed(seed, "find_shattered_dset.centers"));
    for (size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng.next_below(i)]);

    uint64_t all_patterns = uint64_t(1) << d;
    std::vector<uint64_t> covered((all_patterns + 63) / 64);
    std::vector<uint32_t> zc(e.d());
    for (uint32_t center_idx : order) {
        Point y = index_point(center_idx, e.field(), e.d());
        if (y.is_zero()) continue;
        auto neighbors = neighbor_indices(e, y, t);
        if (neighbors.size() < d) continue;
        std::vector<std::vector<uint32_t>> coords(neighbors.size());
        for (size_t i = 0; i < neighbors.size(); ++i) coords[i] = coords_of(e, neighbors[i]);

        bool exhausted = false;
        std::optional<std::vector<Point>> found;
        Basis basis(e.field(), d);
        std::vector<size_t> chosen;
        size_t pos = 0;
        while (true) {
            if (chosen.size() == d) {
                if (result.stars_explored == budget) { exhausted = true; break; }
                ++result.stars_explored;
                // Leaf set is good iff every adjacency pattern on it is
                // realized by some z in E; the center realizes the full one.
                std::fill(covered.begin(), covered.end(), 0);
                uint64_t patterns_seen = 0;
                for (uint32_t z_idx : e.members()) {
                    index_coords(z_idx, e.q(), e.d(), zc);
                    uint64_t m = 0;
                    for (uint32_t i = 0; i < d; ++i)
                        if (dot_mod(zc, coords[chosen[i]], e.q()) == t.value())
                            m |= uint64_t(1) << i;
                    uint64_t bit = uint64_t(1) << (m & 63);
                    if (!(covered[m >> 6] & bit)) {
                        covered[m >> 6] |= bit;
                        if (++patterns_seen == all_patterns) break;
                    }
                }
                if (patterns_seen == all_patterns) {
                    std::vector<Point> leaves;
                    for (size_t i : chosen) leaves.push_back(Point(e.field(), coords[i]));
                    found = std::move(leaves);
                    break;
                }
                basis.pop();
                pos = chosen.back() + 1;
                chosen.pop_back();
                continue;
            }
            if (pos + (d - chosen.size()) > neighbors.size()) {
                if (chosen.empty()) break;
                basis.pop();
                pos = chosen.back() + 1;
                chosen.pop_back();
                continue;
            }
            if (basis.try_extend(coords[pos])) {
                chosen.push_back(pos);
                ++pos;
            } else {
                ++pos;
            }
        }
        if (found) {
            ShatterCertificate cert = is_shattered_direct(*found, e, t);
            if (!cert.shattered)
                throw InternalError("good star disagreed with the direct shattering check");
            result.certificate = std::move(cert);
            return result;
        }
        if (exhausted) {
            result.budget_exhausted = true;
            return result;
        }
    }
    return result;
}

BigInt exhaustive_vc_work_estimate(uint64_t size, uint32_t d) {
    BigInt total = 0;
    uint64_t top = std::min<uint64_t>(size, uint64_t(d) + 1);
    BigInt combos = 1;
    for (uint64_t n = 1; n <= top; ++n) {
        combos = combos * BigInt(size - (n - 1)) / n;
        total += combos * bpow(BigInt(2), static_cast<unsigned>(n)) * BigInt(size);
    }
    return total;
}

namespace {

// Lexicographic n-combinations of [0, size); fn returns false to stop.
template <typename Fn>
void for_each_combination(size_t size, uint32_t n, Fn&& fn) {
    if (n == 0 || n > size) return;
    std::vector<size_t> idx(n);
    for (uint32_t i = 0; i < n; ++i) idx[i] = i;
    while (true) {
        if (!fn(idx)) return;
        size_t i = n;
        while (i > 0) {
            --i;
            if (idx[i] + (n - i) < size) {
                ++idx[i];
                for (size_t j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

// First shattered n-subset of E in lexicographic member order, if any.
std::optional<ShatterCertificate> first_shattered_subset(const PointSet& e, FieldElement t,
                                                         uint32_t n) {
    std::optional<ShatterCertificate> found;
    for_each_combination(e.size(), n, [&](const std::vector<size_t>& idx) {
        std::vector<Point> c;
        c.reserve(n);
        for (size_t i : idx) c.push_back(e.member_point(i));
        ShatterCertificate cert = is_shattered_direct(c, e, t);
        if (cert.shattered) {
            found = std::move(cert);
            return false;
        }
        return true;
    });
    return found;
}

} // namespace

VcResult vc_dimension(const PointSet& e, FieldElement t, VcMode mode, uint64_t budget,
                      uint64_t seed) {
    require_nonzero_t(t);
    if (e.empty())
        throw ValidationError("VC-dimension of an empty point set is undefined");

    VcResult result;
    result.mode = mode;
    if (mode == VcMode::exhaustive) {
        BigInt estimate = exhaustive_vc_work_estimate(e.size(), e.d());
        if (estimate > BigInt(budget))
            throw BudgetError(
                "exhaustive VC work estimate " + estimate.str() + " exceeds budget " +
                    std::to_string(budget) + "; use the star_guided mode",
                clamp_u64(estimate));
        // The empty set is shattered by convention for nonempty E, so the
        // dimension starts at 0 and grows while some n-set is shattered.
        uint32_t n = 1;
        for (;; ++n) {
            if (n > e.size()) break;
            auto cert = first_shattered_subset(e, t, n);
            if (!cert) break;
            result.certificate = std::move(cert);
            result.dimension = n;
        }
        result.first_unshattered_size = n;
        result.resolved = true;
        return result;
    }

    SearchResult search = find_shattered_dset(e, t, budget, seed);
    result.stars_explored = search.stars_explored;
    if (search.certificate) {
        result.dimension = e.d();
        result.certificate = std::move(search.certificate);
        result.resolved = true; // d+1 points can never be shattered by hyperplanes
        return result;
    }
    // The d-question stays open; report the best size settled below d.
    result.resolved = false;
    BigInt spent = 0;
    for (uint32_t n = 1; n < e.d() && n <= e.size(); ++n) {
        BigInt combos = 1;
        for (uint32_t i = 0; i < n; ++i) combos = combos * BigInt(e.size() - i) / (i + 1);
        spent += combos * bpow(BigInt(2), n) * BigInt(e.size());
        if (spent > BigInt(budget)) break;
        auto cert = first_shattered_subset(e, t, n);
        if (!cert) {
            result.first_unshattered_size = n;
            result.resolved = true; // settled: nothing of size n shatters, so dim < d anyway
            break;
        }
        result.certificate = std::move(cert);
        result.dimension = n;
    }
    return result;
}

} // namespace ffvc

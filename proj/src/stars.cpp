#include "ffvc/stars.hpp"

#include <algorithm>

#include "ffvc/parallel.hpp"

namespace ffvc {

StarTuple::StarTuple(Point center, std::vector<Point> leaves, FieldElement t)
    : center_(std::move(center)), leaves_(std::move(leaves)) {
    require_nonzero_t(t);
    for (const Point& leaf : leaves_)
        if (dot(center_, leaf) != t)
            throw ValidationError("star leaf " + leaf.to_string() +
                                  " is not adjacent to the center");
    non_degenerate_ = true;
    for (size_t i = 0; i < leaves_.size() && non_degenerate_; ++i)
        for (size_t j = i + 1; j < leaves_.size(); ++j)
            if (leaves_[i] == leaves_[j]) { non_degenerate_ = false; break; }
}

std::vector<uint32_t> neighbor_indices(const PointSet& e, const Point& y, FieldElement t) {
    std::vector<uint32_t> out;
    if (y.is_zero()) return out;
    uint64_t hyperplane_size = e.space() / e.q();
    if (hyperplane_size < e.size()) {
        HyperplaneIter it(y, t);
        while (auto idx = it.next())
            if (e.contains(*idx)) out.push_back(static_cast<uint32_t>(*idx));
    } else {
        std::vector<uint32_t> coords(e.d());
        for (uint32_t idx : e.members()) {
            index_coords(idx, e.q(), e.d(), coords);
            if (dot_mod(coords, y.coords(), e.q()) == t.value()) out.push_back(idx);
        }
    }
    return out; // both strategies emit increasing point_index order
}

BigInt count_kstars(const PointSet& e, FieldElement t, uint32_t k, int threads) {
    require_nonzero_t(t);
    if (t.field() != e.field())
        throw ValidationError("t from a different field than E");
    if (k < 1 || k > e.d())
        throw ValidationError("k must satisfy 1 <= k <= d");
    return parallel_reduce<BigInt>(e.size(), threads, [&](BigInt& acc, uint64_t i) {
        Point y = e.member_point(i);
        if (y.is_zero()) return;
        uint64_t deg = psi(e, y, t);
        if (deg < k) return;
        BigInt term = 1;
        for (uint32_t j = 0; j < k; ++j) term *= BigInt(deg - j);
        acc += term;
    });
}

namespace {

// Ordered independent d-tuple count for one center, divided by d!:
// combinations x_1 < ... < x_d in point_index order, pruning any candidate
// inside the span of the chosen prefix.
uint64_t indep_combinations(const PointSet& e, const std::vector<uint32_t>& neighbors) {
    uint32_t d = e.d();
    if (neighbors.size() < d) return 0;
    std::vector<std::vector<uint32_t>> coords(neighbors.size(),
                                              std::vector<uint32_t>(d));
    for (size_t i = 0; i < neighbors.size(); ++i)
        index_coords(neighbors[i], e.q(), d, coords[i]);

    Basis basis(e.field(), d);
    uint64_t count = 0;
    // Iterative DFS over combination start positions.
    std::vector<size_t> chosen;
    chosen.reserve(d);
    size_t pos = 0;
    while (true) {
        if (chosen.size() == d) {
            ++count;
            basis.pop();
            pos = chosen.back() + 1;
            chosen.pop_back();
            continue;
        }
        // Not enough candidates left to finish the tuple.
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
    return count;
}

} // namespace

BigInt count_indep_dstars(const PointSet& e, FieldElement t, int threads) {
    require_nonzero_t(t);
    if (t.field() != e.field())
        throw ValidationError("t from a different field than E");
    BigInt combos = parallel_reduce<BigInt>(e.size(), threads, [&](BigInt& acc, uint64_t i) {
        Point y = e.member_point(i);
        if (y.is_zero()) return;
        acc += BigInt(indep_combinations(e, neighbor_indices(e, y, t)));
    });
    return combos * big_factorial(e.d());
}

StarCensus star_census(const PointSet& e, FieldElement t, uint32_t k,
                       const StarBoundConstants& constants, int threads) {
    require_nonzero_t(t);
    if (constants.c_k <= 0 || constants.c_d <= 0)
        throw ValidationError("bound constants must be positive");
    StarCensus c;
    c.k = k;
    c.n_k = count_kstars(e, t, k, threads);
    uint32_t d = e.d();
    BigInt size(e.size()), q(e.q());

    c.kstar_lower_bound = Rational(bpow(size, k + 1), 2 * bpow(q, k));
    c.indep_lower_bound = Rational(bpow(size, d + 1), 3 * bpow(q, d));
    c.kstar_bound_met = Rational(c.n_k) >= c.kstar_lower_bound;

    if (k == d) {
        c.n_indep = count_indep_dstars(e, t, threads);
        c.n_dep = c.n_k - *c.n_indep;
        c.indep_bound_met = Rational(*c.n_indep) >= c.indep_lower_bound;
    }

    // |E| >= c_k q^((d+1)/2): compare |E|^2 den^2 >= num^2 q^(d+1).
    BigInt ck_num = boost::multiprecision::numerator(constants.c_k);
    BigInt ck_den = boost::multiprecision::denominator(constants.c_k);
    c.kstar_hyp_met = size * size * ck_den * ck_den >= ck_num * ck_num * bpow(q, d + 1);

    // |E| >= c_d q^(d - 1/(d-1)): raise to the (d-1)-th power. For d = 1 the
    // exponent degenerates; treat the hypothesis as met only for d >= 2.
    if (d >= 2) {
        BigInt cd_num = boost::multiprecision::numerator(constants.c_d);
        BigInt cd_den = boost::multiprecision::denominator(constants.c_d);
        c.indep_hyp_met = bpow(size, d - 1) * bpow(cd_den, d - 1) >=
                          bpow(cd_num, d - 1) * bpow(q, d * (d - 1) - 1);
    } else {
        c.indep_hyp_met = false;
    }
    return c;
}

} // namespace ffvc

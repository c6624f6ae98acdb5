#include "ffvc/incidence.hpp"

#include "ffvc/parallel.hpp"

namespace ffvc {

void require_nonzero_t(FieldElement t) {
    if (t.is_zero())
        throw ValidationError("t must be nonzero");
}

namespace {

void require_compatible(const PointSet& e, const Point& y, FieldElement t) {
    if (y.field() != e.field() || y.dim() != e.d())
        throw ValidationError("point from a different space than E");
    if (t.field() != e.field())
        throw ValidationError("t from a different field than E");
}

} // namespace

uint64_t psi_by_hyperplane(const PointSet& e, const Point& y, FieldElement t) {
    uint64_t count = 0;
    HyperplaneIter it(y, t);
    while (auto idx = it.next())
        if (e.contains(*idx)) ++count;
    return count;
}

uint64_t psi_by_members(const PointSet& e, const Point& y, FieldElement t) {
    uint64_t count = 0;
    std::vector<uint32_t> coords(e.d());
    for (uint32_t idx : e.members()) {
        index_coords(idx, e.q(), e.d(), coords);
        if (dot_mod(coords, y.coords(), e.q()) == t.value()) ++count;
    }
    return count;
}

uint64_t psi(const PointSet& e, const Point& y, FieldElement t) {
    require_compatible(e, y, t);
    require_nonzero_t(t);
    if (y.is_zero()) return 0; // x . 0 = 0 != t
    uint64_t hyperplane_size = e.space() / e.q();
    return hyperplane_size < e.size() ? psi_by_hyperplane(e, y, t)
                                      : psi_by_members(e, y, t);
}

uint64_t edge_count(const PointSet& e, FieldElement t, int threads) {
    if (t.field() != e.field())
        throw ValidationError("t from a different field than E");
    require_nonzero_t(t);
    uint64_t hyperplane_size = e.space() / e.q();
    bool via_hyperplane = hyperplane_size < e.size();
    return parallel_reduce<uint64_t>(
        e.size(), threads, [&](uint64_t& acc, uint64_t i) {
            Point y = e.member_point(i);
            if (y.is_zero()) return;
            acc += via_hyperplane ? psi_by_hyperplane(e, y, t)
                                  : psi_by_members(e, y, t);
        });
}

IncidenceSummary residual_check(const PointSet& e, FieldElement t, int threads) {
    require_nonzero_t(t);
    if (e.empty())
        throw ValidationError("residual check requires a nonempty set");
    IncidenceSummary s;
    s.t = t.value();
    s.edge_count = edge_count(e, t, threads);
    BigInt size(e.size()), q(e.q());
    s.main_term = Rational(size * size, q);
    BigInt numerator = q * BigInt(s.edge_count) - size * size; // residual * q
    s.residual = Rational(numerator, q);
    s.bound_sq = size * size * bpow(q, e.d() - 1);
    // residual^2 <= |E|^2 q^(d-1), cross-multiplied by q^2.
    s.bound_holds = numerator * numerator <= s.bound_sq * q * q;
    return s;
}

} // namespace ffvc

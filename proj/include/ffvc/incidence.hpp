#pragma once

#include "ffvc/bigint.hpp"
#include "ffvc/pointset.hpp"

namespace ffvc {

// Edge statistics of the dot-product graph on E at parameter t != 0.
// edge_count is over ordered pairs; residual = edge_count - |E|^2/q as an
// exact rational; the bound comparison residual^2 <= |E|^2 q^(d-1) is done
// entirely in integers.
struct IncidenceSummary {
    uint32_t t = 0;
    uint64_t edge_count = 0;
    Rational main_term;     // |E|^2 / q
    Rational residual;      // edge_count - |E|^2/q
    BigInt bound_sq;        // |E|^2 q^(d-1)
    bool bound_holds = false;
};

void require_nonzero_t(FieldElement t);

// |{x in E : x . y = t}|. Iterates the hyperplane when q^(d-1) < |E|,
// otherwise the member list; y = 0 yields 0 without error.
uint64_t psi(const PointSet& e, const Point& y, FieldElement t);

// Both strategies, for cross-testing.
uint64_t psi_by_hyperplane(const PointSet& e, const Point& y, FieldElement t);
uint64_t psi_by_members(const PointSet& e, const Point& y, FieldElement t);

// Ordered pairs (x, y) in E^2 with x . y = t; the sum of psi over centers.
uint64_t edge_count(const PointSet& e, FieldElement t, int threads = 1);

IncidenceSummary residual_check(const PointSet& e, FieldElement t, int threads = 1);

} // namespace ffvc

#pragma once

#include <optional>

#include "ffvc/incidence.hpp"

namespace ffvc {

// A center y with ordered leaves (x_1,...,x_k), every leaf satisfying
// y . x_i = t. The center may coincide with a leaf when y . y = t.
class StarTuple {
public:
    StarTuple(Point center, std::vector<Point> leaves, FieldElement t);

    const Point& center() const { return center_; }
    const std::vector<Point>& leaves() const { return leaves_; }
    uint32_t k() const { return static_cast<uint32_t>(leaves_.size()); }
    bool non_degenerate() const { return non_degenerate_; } // leaves pairwise distinct

private:
    Point center_;
    std::vector<Point> leaves_;
    bool non_degenerate_;
};

struct StarBoundConstants {
    Rational c_k = 1; // k-star size-hypothesis constant
    Rational c_d = 1; // independent-star size-hypothesis constant
};

struct StarCensus {
    uint32_t k = 0;
    BigInt n_k;                          // non-degenerate ordered k-stars
    std::optional<BigInt> n_indep;       // independent-leaf d-stars, k == d only
    std::optional<BigInt> n_dep;         // n_k - n_indep
    Rational kstar_lower_bound;          // |E|^(k+1) / (2 q^k)
    Rational indep_lower_bound;          // |E|^(d+1) / (3 q^d)
    bool kstar_bound_met = false;        // n_k >= kstar_lower_bound
    std::optional<bool> indep_bound_met;
    bool kstar_hyp_met = false;          // |E| >= c_k q^((d+1)/2), exact squared compare
    bool indep_hyp_met = false;          // |E| >= c_d q^(d - 1/(d-1))
};

// Sorted member indices x of E with x . y = t.
std::vector<uint32_t> neighbor_indices(const PointSet& e, const Point& y, FieldElement t);

// Exact count of non-degenerate ordered k-stars, via the falling-factorial
// identity sum_y psi(y)(psi(y)-1)...(psi(y)-k+1). Wide integers throughout;
// no silent wraparound.
BigInt count_kstars(const PointSet& e, FieldElement t, uint32_t k, int threads = 1);

// Exact count of ordered d-stars whose leaf set is linearly independent.
// Per center, leaf combinations are enumerated in increasing point_index
// order with an incremental basis pruning any span-contained extension;
// each combination contributes d! orderings.
BigInt count_indep_dstars(const PointSet& e, FieldElement t, int threads = 1);

StarCensus star_census(const PointSet& e, FieldElement t, uint32_t k,
                       const StarBoundConstants& constants = {}, int threads = 1);

} // namespace ffvc

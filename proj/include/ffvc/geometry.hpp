#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ffvc/field.hpp"

namespace ffvc {

// A vector in F_q^d. Coordinates are canonical representatives in [0, q).
class Point {
public:
    Point() = default;
    Point(FieldSpec field, std::vector<uint32_t> coords);

    FieldSpec field() const { return field_; }
    uint32_t q() const { return field_.q; }
    uint32_t dim() const { return static_cast<uint32_t>(coords_.size()); }
    std::span<const uint32_t> coords() const { return coords_; }
    uint32_t operator[](size_t i) const { return coords_[i]; }
    bool is_zero() const;

    std::string to_string() const; // "(a,b,c)"

    friend bool operator==(const Point&, const Point&) = default;

private:
    FieldSpec field_{};
    std::vector<uint32_t> coords_;
};

// q^d, rejecting anything that does not fit in a uint64 index space.
uint64_t space_size(uint32_t q, uint32_t d);

// Mixed-radix little-endian bijection: coordinate 0 is the least
// significant digit, so index = sum_i coords[i] * q^i.
uint64_t point_index(const Point& x);
Point index_point(uint64_t index, FieldSpec field, uint32_t d);

// Raw-kernel versions used by enumeration loops.
uint64_t coords_index(std::span<const uint32_t> coords, uint32_t q);
void index_coords(uint64_t index, uint32_t q, uint32_t d, std::span<uint32_t> out);

FieldElement dot(const Point& x, const Point& y);
uint32_t dot_mod(std::span<const uint32_t> x, std::span<const uint32_t> y, uint32_t q);

// Incrementally built row basis over F_q with stack discipline, so a
// backtracking search can push a candidate leaf and pop it on retreat.
// Each stored row is reduced against the rows inserted before it; pivot is
// the first nonzero coordinate after reduction.
class Basis {
public:
    Basis(FieldSpec field, uint32_t dim);

    uint32_t rank() const { return static_cast<uint32_t>(rows_.size()); }
    uint32_t dim() const { return dim_; }

    bool in_span(std::span<const uint32_t> v) const;
    bool in_span(const Point& p) const;

    // Inserts v if it enlarges the span; returns whether it did.
    bool try_extend(std::span<const uint32_t> v);
    bool try_extend(const Point& p);

    // Removes the most recently inserted row.
    void pop();

private:
    // Returns the reduced residue of v against the current rows.
    std::vector<uint32_t> reduce(std::span<const uint32_t> v) const;

    FieldSpec field_;
    uint32_t dim_;
    std::vector<std::vector<uint32_t>> rows_; // insertion order, pivot-normalized
    std::vector<uint32_t> pivots_;
};

uint32_t rank_of(std::span<const Point> vs);

// Lazily yields the q^(d-1) solutions of x . y = t in increasing
// point_index order. The solved pivot is the lowest-index nonzero
// coordinate of y; all other coordinates are free.
class HyperplaneIter {
public:
    HyperplaneIter(const Point& y, FieldElement t);

    // Next solution's point index, or nullopt when exhausted.
    std::optional<uint64_t> next();

    uint64_t total() const { return total_; }

private:
    uint32_t q_, d_, pivot_, inv_pivot_coef_, t_;
    std::vector<uint32_t> y_;
    uint64_t lo_count_, hi_count_;     // q^pivot and q^(d-1-pivot)
    uint64_t lo_, hi_, total_, emitted_;
    uint64_t pivot_radix_, hi_radix_;  // q^pivot and q^(pivot+1)
    uint64_t pivot_digit_;             // solved digit for the current hi block
    void solve_pivot();
};

std::vector<Point> hyperplane_solutions(const Point& y, FieldElement t);

} // namespace ffvc

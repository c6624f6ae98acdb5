#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffvc/geometry.hpp"

namespace ffvc {

// Desk-scale guard: index spaces beyond 2^31 are refused outright.
constexpr uint64_t kMaxSpaceSize = uint64_t(1) << 31;

struct HyperplaneSpec {
    Point normal;   // nonzero
    uint32_t t = 0; // right-hand side, any canonical value
};

struct GenSpec {
    enum class Kind { full, random_exact, random_density, union_hyperplanes, explicit_list };

    Kind kind = Kind::full;
    uint64_t size = 0;                       // random_exact
    double density = 0.0;                    // random_density, in [0,1]
    std::vector<HyperplaneSpec> planes;      // union_hyperplanes
    std::vector<Point> points;               // explicit_list (deduplicated)
    uint64_t seed = 0;

    static GenSpec full();
    static GenSpec random_exact(uint64_t size, uint64_t seed);
    static GenSpec random_density(double density, uint64_t seed);
    static GenSpec union_hyperplanes(std::vector<HyperplaneSpec> planes);
    static GenSpec explicit_list(std::vector<Point> points);

    static const char* kind_name(Kind k);
    // Stable generator identifier: kind plus an FNV hash of the seed-free
    // parameters, e.g. "random_exact#1a2b3c4d5e6f7788".
    std::string digest() const;
};

// An immutable subset E of F_q^d: a membership bit per point index plus the
// sorted member list. Safe to share across worker threads.
class PointSet {
public:
    PointSet(FieldSpec field, uint32_t d, std::vector<uint32_t> member_indices);

    FieldSpec field() const { return field_; }
    uint32_t q() const { return field_.q; }
    uint32_t d() const { return d_; }
    uint64_t space() const { return space_; }
    uint64_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    bool contains(uint64_t index) const {
        return (mask_[index >> 6] >> (index & 63)) & 1;
    }
    bool contains(const Point& p) const;

    const std::vector<uint32_t>& members() const { return members_; }
    Point member_point(size_t i) const;

    // Mask/members cross-check; false only for fault-injected copies.
    bool consistent() const;

private:
    PointSet() = default;

    FieldSpec field_{};
    uint32_t d_ = 0;
    uint64_t space_ = 0;
    std::vector<uint64_t> mask_;
    std::vector<uint32_t> members_;

    friend PointSet corrupt_mask_bit_for_test(const PointSet& e, uint64_t index);
};

PointSet generate(const GenSpec& spec, FieldSpec field, uint32_t d);

// Text format, bit-exact:
//   line 1: "ffvc-pointset v1"   (comment lines starting with '#' may precede it)
//   line 2: "q=<int> d=<int> n=<int>"
//   then n lines of d comma-separated coordinates, LF endings.
// The writer emits members in increasing point_index order. Duplicate points
// in input are an error, not a deduplication opportunity.
PointSet read_pointset(const std::string& text);
std::string write_pointset(const PointSet& e);

// Diagnostic back door for the verify suite's fault-injection check: the
// returned object intentionally violates the mask/members invariant.
PointSet corrupt_mask_bit_for_test(const PointSet& e, uint64_t index);

} // namespace ffvc

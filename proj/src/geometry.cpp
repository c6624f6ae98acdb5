#include "ffvc/geometry.hpp"

#include <limits>

namespace ffvc {

Point::Point(FieldSpec field, std::vector<uint32_t> coords)
    : field_(field), coords_(std::move(coords)) {
    if (field_.q < 2)
        throw ValidationError("point requires a constructed FieldSpec");
    if (coords_.empty())
        throw ValidationError("point dimension must be at least 1");
    for (uint32_t c : coords_)
        if (c >= field_.q)
            throw ValidationError("coordinate " + std::to_string(c) +
                                  " not canonical for q=" + std::to_string(field_.q));
}

bool Point::is_zero() const {
    for (uint32_t c : coords_)
        if (c != 0) return false;
    return true;
}

std::string Point::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(coords_[i]);
    }
    s += ')';
    return s;
}

uint64_t space_size(uint32_t q, uint32_t d) {
    if (d == 0) throw ValidationError("dimension must be at least 1");
    uint64_t n = 1;
    for (uint32_t i = 0; i < d; ++i) {
        if (n > std::numeric_limits<uint64_t>::max() / q)
            throw ValidationError("q^d exceeds the supported index range");
        n *= q;
    }
    return n;
}

uint64_t coords_index(std::span<const uint32_t> coords, uint32_t q) {
    uint64_t idx = 0;
    for (size_t i = coords.size(); i-- > 0;)
        idx = idx * q + coords[i];
    return idx;
}

void index_coords(uint64_t index, uint32_t q, uint32_t d, std::span<uint32_t> out) {
    for (uint32_t i = 0; i < d; ++i) {
        out[i] = static_cast<uint32_t>(index % q);
        index /= q;
    }
}

uint64_t point_index(const Point& x) {
    return coords_index(x.coords(), x.q());
}

Point index_point(uint64_t index, FieldSpec field, uint32_t d) {
    if (index >= space_size(field.q, d))
        throw ValidationError("point index " + std::to_string(index) + " out of range");
    std::vector<uint32_t> coords(d);
    index_coords(index, field.q, d, coords);
    return Point(field, std::move(coords));
}

uint32_t dot_mod(std::span<const uint32_t> x, std::span<const uint32_t> y, uint32_t q) {
    // Each product is < 2^32 and d * q^2 stays well under 2^64 for any
    // practical d, so one reduction at the end per chunk would also work;
    // reducing per term keeps it simple.
    uint64_t acc = 0;
    for (size_t i = 0; i < x.size(); ++i)
        acc += static_cast<uint64_t>(x[i]) * y[i] % q;
    return static_cast<uint32_t>(acc % q);
}

FieldElement dot(const Point& x, const Point& y) {
    if (x.field() != y.field())
        throw ValidationError("dot product requires a common field");
    if (x.dim() != y.dim())
        throw ValidationError("dot product dimension mismatch: " + std::to_string(x.dim()) +
                              " vs " + std::to_string(y.dim()));
    return FieldElement(dot_mod(x.coords(), y.coords(), x.q()), x.field());
}

Basis::Basis(FieldSpec field, uint32_t dim) : field_(field), dim_(dim) {
    if (dim_ == 0) throw ValidationError("basis dimension must be at least 1");
}

std::vector<uint32_t> Basis::reduce(std::span<const uint32_t> v) const {
    std::vector<uint32_t> r(v.begin(), v.end());
    // Rows were reduced against their predecessors at insertion, so killing
    // pivots in insertion order never reintroduces an earlier pivot.
    for (size_t i = 0; i < rows_.size(); ++i) {
        uint32_t c = r[pivots_[i]];
        if (c == 0) continue;
        const auto& row = rows_[i];
        for (uint32_t j = 0; j < dim_; ++j)
            r[j] = sub_mod(r[j], mul_mod(c, row[j], field_.q), field_.q);
    }
    return r;
}

bool Basis::in_span(std::span<const uint32_t> v) const {
    auto r = reduce(v);
    for (uint32_t c : r)
        if (c != 0) return false;
    return true;
}

bool Basis::in_span(const Point& p) const { return in_span(p.coords()); }

bool Basis::try_extend(std::span<const uint32_t> v) {
    if (v.size() != dim_)
        throw ValidationError("basis row dimension mismatch");
    auto r = reduce(v);
    uint32_t pivot = dim_;
    for (uint32_t j = 0; j < dim_; ++j)
        if (r[j] != 0) { pivot = j; break; }
    if (pivot == dim_) return false;
    uint32_t scale = inv_mod(r[pivot], field_.q);
    for (uint32_t j = 0; j < dim_; ++j)
        r[j] = mul_mod(r[j], scale, field_.q);
    rows_.push_back(std::move(r));
    pivots_.push_back(pivot);
    return true;
}

bool Basis::try_extend(const Point& p) { return try_extend(p.coords()); }

void Basis::pop() {
    if (rows_.empty())
        throw InternalError("basis pop on empty stack");
    rows_.pop_back();
    pivots_.pop_back();
}

uint32_t rank_of(std::span<const Point> vs) {
    if (vs.empty()) return 0;
    Basis b(vs.front().field(), vs.front().dim());
    for (const Point& p : vs) {
        if (p.field() != vs.front().field() || p.dim() != vs.front().dim())
            throw ValidationError("rank_of requires points from one space");
        b.try_extend(p);
    }
    return b.rank();
}

HyperplaneIter::HyperplaneIter(const Point& y, FieldElement t) {
    if (y.field() != t.field())
        throw ValidationError("hyperplane normal and t must share a field");
    if (y.is_zero())
        throw ValidationError("hyperplane normal must be nonzero");
    q_ = y.q();
    d_ = y.dim();
    t_ = t.value();
    y_.assign(y.coords().begin(), y.coords().end());
    pivot_ = 0;
    while (y_[pivot_] == 0) ++pivot_;
    inv_pivot_coef_ = inv_mod(y_[pivot_], q_);
    lo_count_ = 1;
    for (uint32_t i = 0; i < pivot_; ++i) lo_count_ *= q_;
    hi_count_ = 1;
    for (uint32_t i = pivot_ + 1; i < d_; ++i) hi_count_ *= q_;
    pivot_radix_ = lo_count_;
    hi_radix_ = pivot_radix_ * q_;
    total_ = lo_count_ * hi_count_;
    lo_ = hi_ = emitted_ = 0;
    solve_pivot();
}

void HyperplaneIter::solve_pivot() {
    // Digits above the pivot determine the solved digit; digits below the
    // pivot have zero normal coefficient and never enter the equation.
    uint64_t h = hi_;
    uint64_t s = 0;
    for (uint32_t i = pivot_ + 1; i < d_; ++i) {
        uint32_t digit = static_cast<uint32_t>(h % q_);
        h /= q_;
        s += static_cast<uint64_t>(digit) * y_[i] % q_;
    }
    uint32_t rhs = sub_mod(t_, static_cast<uint32_t>(s % q_), q_);
    pivot_digit_ = mul_mod(rhs, inv_pivot_coef_, q_);
}

std::optional<uint64_t> HyperplaneIter::next() {
    if (emitted_ >= total_) return std::nullopt;
    uint64_t idx = lo_ + pivot_digit_ * pivot_radix_ + hi_ * hi_radix_;
    ++emitted_;
    if (++lo_ == lo_count_) {
        lo_ = 0;
        if (++hi_ < hi_count_) solve_pivot();
    }
    return idx;
}

std::vector<Point> hyperplane_solutions(const Point& y, FieldElement t) {
    HyperplaneIter it(y, t);
    std::vector<Point> out;
    out.reserve(it.total());
    while (auto idx = it.next())
        out.push_back(index_point(*idx, y.field(), y.dim()));
    return out;
}

} // namespace ffvc

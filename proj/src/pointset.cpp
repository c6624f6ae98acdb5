#include "ffvc/pointset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <sstream>
#include <unordered_map>

#include "ffvc/rng.hpp"

namespace ffvc {

GenSpec GenSpec::full() {
    return GenSpec{};
}

GenSpec GenSpec::random_exact(uint64_t size, uint64_t seed) {
    GenSpec s;
    s.kind = Kind::random_exact;
    s.size = size;
    s.seed = seed;
    return s;
}

GenSpec GenSpec::random_density(double density, uint64_t seed) {
    GenSpec s;
    s.kind = Kind::random_density;
    s.density = density;
    s.seed = seed;
    return s;
}

GenSpec GenSpec::union_hyperplanes(std::vector<HyperplaneSpec> planes) {
    GenSpec s;
    s.kind = Kind::union_hyperplanes;
    s.planes = std::move(planes);
    return s;
}

GenSpec GenSpec::explicit_list(std::vector<Point> points) {
    GenSpec s;
    s.kind = Kind::explicit_list;
    s.points = std::move(points);
    return s;
}

const char* GenSpec::kind_name(Kind k) {
    switch (k) {
        case Kind::full: return "full";
        case Kind::random_exact: return "random_exact";
        case Kind::random_density: return "random_density";
        case Kind::union_hyperplanes: return "union_hyperplanes";
        case Kind::explicit_list: return "explicit";
    }
    return "?";
}

std::string GenSpec::digest() const {
    std::string canon = kind_name(kind);
    canon += ';';
    switch (kind) {
        case Kind::full: break;
        case Kind::random_exact: canon += "size=" + std::to_string(size); break;
        case Kind::random_density: {
            char buf[40];
            std::snprintf(buf, sizeof buf, "density=%.17g", density);
            canon += buf;
            break;
        }
        case Kind::union_hyperplanes:
            for (const auto& h : planes)
                canon += h.normal.to_string() + "@" + std::to_string(h.t) + ";";
            break;
        case Kind::explicit_list:
            for (const auto& p : points) canon += p.to_string() + ";";
            break;
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canon)));
    return std::string(kind_name(kind)) + "#" + hex;
}

PointSet::PointSet(FieldSpec field, uint32_t d, std::vector<uint32_t> member_indices)
    : field_(field), d_(d), members_(std::move(member_indices)) {
    space_ = space_size(field_.q, d_);
    if (space_ > kMaxSpaceSize)
        throw ValidationError("q^d = " + std::to_string(space_) +
                              " exceeds the desk-scale cap 2^31");
    std::sort(members_.begin(), members_.end());
    for (size_t i = 0; i + 1 < members_.size(); ++i)
        if (members_[i] == members_[i + 1])
            throw ValidationError("duplicate point index " + std::to_string(members_[i]));
    if (!members_.empty() && members_.back() >= space_)
        throw ValidationError("member index out of range");
    mask_.assign((space_ + 63) / 64, 0);
    for (uint32_t idx : members_)
        mask_[idx >> 6] |= uint64_t(1) << (idx & 63);
}

bool PointSet::contains(const Point& p) const {
    if (p.field() != field_ || p.dim() != d_)
        throw ValidationError("membership query from a different space");
    return contains(point_index(p));
}

Point PointSet::member_point(size_t i) const {
    return index_point(members_.at(i), field_, d_);
}

bool PointSet::consistent() const {
    uint64_t pop = 0;
    for (uint64_t w : mask_) pop += static_cast<uint64_t>(__builtin_popcountll(w));
    if (pop != members_.size()) return false;
    for (uint32_t idx : members_)
        if (!contains(idx)) return false;
    return true;
}

namespace {

// Partial Fisher-Yates over [0, n): draws exactly k distinct indices using
// O(k) memory, with displaced slots tracked in a hash map.
std::vector<uint32_t> sample_exact(uint64_t n, uint64_t k, uint64_t seed) {
    std::unordered_map<uint64_t, uint64_t> displaced;
    displaced.reserve(static_cast<size_t>(k) * 2);
    CounterRng rng(seed);
    std::vector<uint32_t> out;
    out.reserve(static_cast<size_t>(k));
    auto slot = [&](uint64_t i) {
        auto it = displaced.find(i);
        return it == displaced.end() ? i : it->second;
    };
    for (uint64_t i = 0; i < k; ++i) {
        uint64_t j = i + rng.next_below(n - i);
        uint64_t vi = slot(i);
        uint64_t vj = slot(j);
        out.push_back(static_cast<uint32_t>(vj));
        displaced[j] = vi;
    }
    return out;
}

} // namespace

PointSet generate(const GenSpec& spec, FieldSpec field, uint32_t d) {
    uint64_t n = space_size(field.q, d);
    if (n > kMaxSpaceSize)
        throw ValidationError("q^d = " + std::to_string(n) +
                              " exceeds the desk-scale cap 2^31");
    switch (spec.kind) {
        case GenSpec::Kind::full: {
            std::vector<uint32_t> all(n);
            for (uint64_t i = 0; i < n; ++i) all[i] = static_cast<uint32_t>(i);
            return PointSet(field, d, std::move(all));
        }
        case GenSpec::Kind::random_exact: {
            if (spec.size > n)
                throw ValidationError("requested size " + std::to_string(spec.size) +
                                      " exceeds q^d = " + std::to_string(n));
            return PointSet(field, d, sample_exact(n, spec.size, spec.seed));
        }
        case GenSpec::Kind::random_density: {
            if (!(spec.density >= 0.0 && spec.density <= 1.0))
                throw ValidationError("density must lie in [0,1]");
            // Inclusion iff draw < density * 2^64; draw i depends only on
            // (seed, i), so the set is independent of evaluation order.
            uint64_t threshold =
                spec.density >= 1.0
                    ? ~uint64_t(0)
                    : static_cast<uint64_t>(std::ldexp(spec.density, 64));
            std::vector<uint32_t> members;
            for (uint64_t i = 0; i < n; ++i) {
                uint64_t u = splitmix64(spec.seed ^ splitmix64(i));
                bool in = spec.density >= 1.0 ? true : u < threshold;
                if (in) members.push_back(static_cast<uint32_t>(i));
            }
            return PointSet(field, d, std::move(members));
        }
        case GenSpec::Kind::union_hyperplanes: {
            std::vector<uint64_t> bits((n + 63) / 64, 0);
            for (const auto& h : spec.planes) {
                if (h.normal.field() != field || h.normal.dim() != d)
                    throw ValidationError("hyperplane normal from a different space");
                if (h.normal.is_zero())
                    throw ValidationError("hyperplane normal must be nonzero");
                HyperplaneIter it(h.normal, FieldElement(h.t, field));
                while (auto idx = it.next())
                    bits[*idx >> 6] |= uint64_t(1) << (*idx & 63);
            }
            std::vector<uint32_t> members;
            for (uint64_t i = 0; i < n; ++i)
                if ((bits[i >> 6] >> (i & 63)) & 1) members.push_back(static_cast<uint32_t>(i));
            return PointSet(field, d, std::move(members));
        }
        case GenSpec::Kind::explicit_list: {
            std::vector<uint32_t> members;
            members.reserve(spec.points.size());
            for (const auto& p : spec.points) {
                if (p.field() != field || p.dim() != d)
                    throw ValidationError("explicit point from a different space");
                members.push_back(static_cast<uint32_t>(point_index(p)));
            }
            std::sort(members.begin(), members.end());
            members.erase(std::unique(members.begin(), members.end()), members.end());
            return PointSet(field, d, std::move(members));
        }
    }
    throw ValidationError("unknown generator kind");
}

namespace {

const char* kMagic = "ffvc-pointset v1";

} // namespace

PointSet read_pointset(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    // Comment lines are allowed only ahead of the magic line.
    bool magic_seen = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            throw ParseError("pointset file must use LF line endings");
        if (!line.empty() && line[0] == '#') continue;
        if (line == kMagic) { magic_seen = true; break; }
        throw ParseError("pointset file must begin with '" + std::string(kMagic) + "'");
    }
    if (!magic_seen)
        throw ParseError("pointset file must begin with '" + std::string(kMagic) + "'");

    if (!std::getline(in, line))
        throw ParseError("missing pointset header line");
    unsigned long long q = 0, d = 0, count = 0;
    char tail = 0;
    if (std::sscanf(line.c_str(), "q=%llu d=%llu n=%llu%c", &q, &d, &count, &tail) != 3)
        throw ParseError("malformed pointset header: '" + line + "'");
    FieldSpec field = make_field(static_cast<uint32_t>(q));
    if (d == 0 || d > 64)
        throw ParseError("pointset dimension out of range");

    std::vector<uint32_t> members;
    members.reserve(static_cast<size_t>(count));
    for (unsigned long long row = 0; row < count; ++row) {
        if (!std::getline(in, line))
            throw ParseError("pointset file ends after " + std::to_string(row) +
                             " of " + std::to_string(count) + " points");
        std::vector<uint32_t> coords;
        coords.reserve(static_cast<size_t>(d));
        size_t pos = 0;
        while (pos <= line.size()) {
            size_t comma = line.find(',', pos);
            std::string tok = line.substr(pos, comma == std::string::npos
                                                   ? std::string::npos
                                                   : comma - pos);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("bad coordinate '" + tok + "' on line " +
                                 std::to_string(row + 3));
            unsigned long long v = std::stoull(tok);
            if (v >= field.q)
                throw ParseError("coordinate " + std::to_string(v) +
                                 " out of range for q=" + std::to_string(field.q));
            coords.push_back(static_cast<uint32_t>(v));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (coords.size() != d)
            throw ParseError("expected " + std::to_string(d) + " coordinates, got " +
                             std::to_string(coords.size()) + " on line " +
                             std::to_string(row + 3));
        uint64_t idx = coords_index(coords, field.q);
        members.push_back(static_cast<uint32_t>(idx));
    }
    while (std::getline(in, line))
        if (!line.empty())
            throw ParseError("unexpected trailing content: '" + line + "'");

    // The PointSet constructor sorts; duplicate detection happens there, but
    // report it as a parse error with the format's vocabulary.
    std::vector<uint32_t> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1])
            throw ParseError("duplicate point with index " + std::to_string(sorted[i]));
    return PointSet(make_field(static_cast<uint32_t>(q)), static_cast<uint32_t>(d),
                    std::move(members));
}

std::string write_pointset(const PointSet& e) {
    std::string out = kMagic;
    out += '\n';
    out += "q=" + std::to_string(e.q()) + " d=" + std::to_string(e.d()) +
           " n=" + std::to_string(e.size()) + "\n";
    std::vector<uint32_t> coords(e.d());
    for (uint32_t idx : e.members()) {
        index_coords(idx, e.q(), e.d(), coords);
        for (uint32_t i = 0; i < e.d(); ++i) {
            if (i) out += ',';
            out += std::to_string(coords[i]);
        }
        out += '\n';
    }
    return out;
}

PointSet corrupt_mask_bit_for_test(const PointSet& e, uint64_t index) {
    PointSet bad = e;
    bad.mask_[index >> 6] ^= uint64_t(1) << (index & 63);
    return bad;
}

} // namespace ffvc

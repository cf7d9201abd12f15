#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "hermcode/field.hpp"

namespace hermcode {

struct ProjPoint {
    std::vector<Felt> coords;  // canonical: first nonzero coordinate is 1
    int w_index = 0;           // position of that coordinate
};

// Canonical enumeration of P^n(F_q): points grouped by the position of the
// first nonzero coordinate (w_index 0..n), ordered lexicographically on the
// coordinate vector inside each group.  Group i holds q^{n-i} points.
//
// Hyperplanes use the same enumeration applied to dual coefficient vectors,
// so one PointList serves both roles; indices are comparable across them.
class PointList {
public:
    static constexpr std::uint64_t kDefaultMaxPoints = 50'000'000;

    PointList(int n, std::shared_ptr<const FieldSpec> field,
              std::uint64_t max_points = kDefaultMaxPoints);

    int dim() const { return n_; }
    std::size_t size() const { return count_; }
    const FieldSpec& field() const { return *field_; }
    const std::shared_ptr<const FieldSpec>& field_ptr() const { return field_; }

    std::span<const Felt> coords(std::size_t i) const {
        return {flat_.data() + i * width(), width()};
    }
    int w_index(std::size_t i) const;
    ProjPoint point(std::size_t i) const;

    // Index of a canonical coordinate vector; O(n), no lookup table.
    std::size_t index_of(std::span<const Felt> canonical) const;
    // Canonicalize an arbitrary nonzero vector, then index it.
    std::size_t canonical_index(std::span<const Felt> raw) const;

    static std::vector<Felt> canonicalize(std::span<const Felt> raw, const FieldSpec& f);
    // pi_n = q^n + ... + q + 1.
    static std::uint64_t count(int n, std::uint64_t q);

private:
    std::size_t width() const { return static_cast<std::size_t>(n_) + 1; }

    int n_;
    std::shared_ptr<const FieldSpec> field_;
    std::size_t count_ = 0;
    std::vector<Felt> flat_;
    std::vector<std::uint64_t> group_base_;  // start index of each w group
};

struct LineRef {
    std::uint32_t a = 0, b = 0;  // the two smallest point indices on the line
};

// All lines of P^3(F_q), each stored as its q+1 point indices in ascending
// order, discovered by accepting a point pair exactly when it is the minimal
// spanning pair of its line.
class LineSet {
public:
    static constexpr std::uint64_t kDefaultMaxPairs = 20'000'000;

    explicit LineSet(const PointList& space, std::uint64_t max_pairs = kDefaultMaxPairs);

    std::size_t size() const { return refs_.size(); }
    std::span<const std::uint32_t> points_on(std::size_t line) const {
        std::size_t w = width();
        return {flat_.data() + line * w, w};
    }
    LineRef spanning(std::size_t line) const { return refs_[line]; }

    static std::uint64_t count(std::uint64_t q) { return (q * q + 1) * (q * q + q + 1); }

private:
    std::size_t width() const { return q_ + 1; }

    std::size_t q_;
    std::vector<LineRef> refs_;
    std::vector<std::uint32_t> flat_;
};

// Dual/primal incidence: point i lies on hyperplane j (dot product zero).
bool incident(const PointList& space, std::size_t point, std::size_t hyperplane);

// The q+1 hyperplanes containing the line spanned by two points (n = 3),
// as ascending dual indices into the same enumeration.
std::vector<std::uint32_t> planes_through_line(const PointList& space,
                                               std::uint32_t p0, std::uint32_t p1);

// Points of the codimension-2 subspace cut out by two independent
// hyperplanes (any n >= 2), ascending.
std::vector<std::uint32_t> codim2_points(const PointList& space,
                                         std::uint32_t h0, std::uint32_t h1);

}  // namespace hermcode

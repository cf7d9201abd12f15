#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hermcode/field.hpp"
#include "hermcode/forms.hpp"
#include "hermcode/projective.hpp"

namespace hermcode {

// Membership mask over a PointList, with the members also kept as an ordered
// index list so callers can iterate without rescanning the space.
class PointSet {
public:
    PointSet() = default;
    PointSet(std::size_t universe, std::vector<std::uint32_t> members);

    bool contains(std::uint32_t index) const { return mask_[index]; }
    std::size_t size() const { return members_.size(); }
    std::span<const std::uint32_t> members() const { return members_; }

private:
    std::vector<bool> mask_;
    std::vector<std::uint32_t> members_;
};

// Rational point set of the form sum_i x_i^{t+1} = 0 in P^n over a field of
// order t^2, together with its defining form of degree t+1.
struct HermitianVariety {
    unsigned n = 0;
    std::shared_ptr<const FieldSpec> field;
    std::shared_ptr<const PointList> space;
    PointSet points;
    Form form;

    std::size_t size() const { return points.size(); }
};

// Number of rational points: (t^{n+1} - (-1)^{n+1}) (t^n - (-1)^n) / (t^2 - 1).
std::uint64_t hermitian_point_count(unsigned n, std::uint32_t t);

// Builds the variety and checks the point count against the closed formula.
HermitianVariety hermitian_variety(unsigned n, std::shared_ptr<const FieldSpec> field,
                                   std::shared_ptr<const PointList> space = nullptr);

// Dual coordinates of the tangent hyperplane at a point of X: a_i^t.
std::vector<Felt> tangent_plane_at(const HermitianVariety& X, std::uint32_t point);

// Index of the point of tangency if the hyperplane (given by its point index
// in the self-dual enumeration) is tangent to X, otherwise nullopt.  A
// hyperplane with dual coords h is tangent iff the candidate pole a_i = h_i^t
// lies on X.
std::optional<std::uint32_t> tangency_point(const HermitianVariety& X,
                                            std::uint32_t hyperplane);

bool is_tangent_hyperplane(const HermitianVariety& X, std::uint32_t hyperplane);

enum class LineClass { Generator, Tangent, Secant };

const char* to_string(LineClass c);

// Classifies by |line cap X|: t^2+1 generator, 1 tangent, t+1 secant.
LineClass classify_line(const HermitianVariety& X, const LineSet& lines,
                        std::uint32_t line);

struct LineCensus {
    std::uint64_t generator = 0;
    std::uint64_t tangent = 0;
    std::uint64_t secant = 0;

    std::uint64_t total() const { return generator + tangent + secant; }
};

// Closed forms for the n = 3 line census.
LineCensus line_census_expected(std::uint32_t t);

// Full enumeration over a LineSet; throws logic_error on any unexpected
// section size.
LineCensus line_census(const HermitianVariety& X, const LineSet& lines);

// Projective equivalence class of a quadric surface in P^3, keyed by its
// rational point count (with the two (q^2+q+1)-point classes split by rank).
enum class QuadricClass {
    RepeatedPlane,     // q^2 + q + 1 points, rank 1
    DistinctPlanePair, // 2q^2 + q + 1 points
    Cone,              // q^2 + q + 1 points, rank > 1
    LineQuadric,       // q + 1 points (rank-2 pair conjugate over F_{q^2})
    Hyperbolic,        // (q+1)^2 points
    Elliptic           // q^2 + 1 points
};

const char* to_string(QuadricClass c);

// Classifies a nonzero quadratic form on P^3 from its zero count and, for the
// q^2+q+1 case, the dimension of the zero set's linear span.
QuadricClass classify_quadric(const Form& f, const PointList& space);

struct QuadricCensus {
    // Class counts over all (q^D - 1)/(q - 1) scalar classes, D = C(5, 2).
    std::array<std::uint64_t, 6> by_class{};
    // Largest Hermitian section of any elliptic quadric seen.
    std::uint64_t max_elliptic_section = 0;

    std::uint64_t total() const;
};

std::uint64_t& census_slot(QuadricCensus& c, QuadricClass cls);

// Enumerates every scalar class of quadrics on P^3, classifying each and
// recording the largest |X cap Q| over the elliptic ones.
QuadricCensus quadric_census(const HermitianVariety& X, unsigned threads = 1);

} // namespace hermcode

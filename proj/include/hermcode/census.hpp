#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hermcode/code.hpp"
#include "hermcode/forms.hpp"
#include "hermcode/varieties.hpp"

namespace hermcode {

// Per-hyperplane facts against X, indexed like the point enumeration:
// section size |X cap H| and whether H is tangent, plus the incidence bits
// of each hyperplane over the members of X for fast axis sections.
struct HyperplaneProfiles {
    std::vector<std::uint32_t> section;
    std::vector<bool> tangent;
    std::vector<std::uint64_t> bits;  // per hyperplane: ceil(#X/64) words
    std::size_t words = 0;

    const std::uint64_t* row(std::size_t h) const { return bits.data() + h * words; }
};

HyperplaneProfiles hyperplane_profiles(const HermitianVariety& X);

// One cell of a union census: unions of h hyperplanes through a common
// codimension-2 axis, grouped by how many of them are tangent and by the
// axis section |X cap axis|.  Each cell carries one weight; a second weight
// for the same key would be a geometry bug and is asserted against.
struct UnionCell {
    unsigned tangent_count = 0;
    std::uint64_t axis_section = 0;
    std::uint64_t forms = 0;   // scalar classes (one per hyperplane set)
    std::uint32_t weight = 0;
};

struct UnionCensus {
    unsigned n = 0;
    int h = 0;
    std::uint32_t q = 0;
    std::uint64_t total_forms = 0;
    std::vector<UnionCell> cells;  // ascending (weight, tangent_count)

    std::map<std::uint32_t, std::uint64_t> classes_by_weight() const;
    // Codeword counts: classes times q-1.
    std::map<std::uint32_t, std::uint64_t> codewords_by_weight() const;
    std::vector<std::uint32_t> distinct_weights() const;  // ascending
    const UnionCell& min_weight_cell() const;
};

// h = 2: every unordered pair of distinct hyperplanes (any two meet in
// codimension 2), any n >= 2.  h >= 3: n = 3 only, all h-subsets of the
// pencil of planes through each line.  Weights come from inclusion-exclusion
// over the profiles; a deterministic stride of forms is cross-checked against
// direct evaluation of the expanded product.
UnionCensus union_census(const FunctionalCode& code, unsigned threads = 1,
                         std::uint64_t max_forms = 5'000'000);

// Comparison of one weight's codeword count against the two numbers the
// source claims for it: a stated closed form and the product of the stated
// counting factors.  The census count is authoritative.
struct CountComparison {
    std::uint32_t weight = 0;
    bool weight_in_census = false;
    std::uint64_t closed_form = 0;
    std::uint64_t factor_product = 0;
    std::uint64_t census_codewords = 0;
    bool closed_form_matches = false;
    bool factor_product_matches = false;
};

struct FourthFifthReport {
    CountComparison fourth, fifth;
    bool any_mismatch() const;
};

// Fourth weight t^5-t^3+t^2 (non-tangent pairs through a tangent line) and
// fifth weight t^5-t^3+t^2+t (non-tangent pairs through a secant line),
// with their claimed codeword counts, against the n=3 pair census.
FourthFifthReport verify_fourth_fifth(const UnionCensus& census, std::uint32_t t);

// Zero-count bound for a degree-h form: #Z(f) <= h q^{n-1} + pi_{n-2}.
struct TssCheck {
    std::uint64_t zeros = 0;
    std::uint64_t bound = 0;
    bool holds = false;
    bool attained = false;
};

TssCheck tss_check(const Form& f, const PointList& space);

// Findings on the three-part claim about the first 2h+1 weights: unions of h
// hyperplanes through a common codimension-2 axis realize the smallest 2h+1
// weights (1), minimum-weight codewords are exactly the unions whose axis
// meets X in a non-degenerate section, tangent for odd n and non-tangent for
// even n (2), and union weights never pass the (2h+1)-th weight (3).
//
// With a full spectrum the three parts are decided against it; without one
// the census stands alone: part 1 becomes "exactly 2h+1 distinct union
// weights", part 2 checks only the shape of the minimum union cell, and
// part 3 only that no extra union weights exist.
struct ConjectureReport {
    unsigned n = 0;
    int h = 0;
    std::uint32_t t = 0;
    bool exhaustive = false;
    UnionCensus census;
    std::vector<std::uint32_t> spectrum_head;  // first 2h+1 weights when exhaustive
    std::uint64_t expected_axis_section = 0;   // Hermitian count in the axis dimension
    bool min_cell_shape_ok = false;
    bool part1 = false;
    bool part2 = false;
    bool part3 = false;

    bool all_parts() const { return part1 && part2 && part3; }
};

ConjectureReport conjecture_check(const FunctionalCode& code,
                                  const WeightSpectrum* spectrum,
                                  unsigned threads = 1,
                                  std::uint64_t max_forms = 5'000'000);

}  // namespace hermcode

#include <algorithm>
#include <memory>
#include <vector>

#include "doctest.h"

#include "hermcode/code.hpp"
#include "hermcode/errors.hpp"
#include "hermcode/field.hpp"
#include "hermcode/forms.hpp"
#include "hermcode/formtext.hpp"
#include "hermcode/varieties.hpp"

using namespace hermcode;

namespace {

std::shared_ptr<const HermitianVariety> variety(unsigned n, unsigned p, unsigned a = 1) {
    return std::make_shared<const HermitianVariety>(hermitian_variety(n, make_field(p, a)));
}

// Independent rank of the evaluation matrix: naive monomial evaluation and a
// fresh Gaussian elimination, no shared code with the library implementation.
std::size_t reference_rank(const FunctionalCode& code) {
    const FieldSpec& field = code.field();
    const auto& X = code.variety();
    const MonomialBasis basis(X.n, code.degree());
    std::vector<std::vector<Felt>> rows;
    for (std::size_t m = 0; m < basis.size(); ++m) {
        std::vector<Felt> row;
        const auto exps = basis.exponents(m);
        for (const std::uint32_t pt : X.points.members()) {
            const auto coords = X.space->coords(pt);
            Felt v = 1;
            for (std::size_t j = 0; j < exps.size(); ++j)
                for (int e = 0; e < exps[j]; ++e) v = field.mul(v, coords[j]);
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    std::size_t rank = 0, col = 0;
    const std::size_t len = rows.empty() ? 0 : rows[0].size();
    while (rank < rows.size() && col < len) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) {
            ++col;
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        const Felt inv = field.inv(rows[rank][col]);
        for (auto& v : rows[rank]) v = field.mul(v, inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const Felt factor = rows[r][col];
            for (std::size_t c = 0; c < len; ++c)
                rows[r][c] = field.sub(rows[r][c], field.mul(factor, rows[rank][c]));
        }
        ++rank;
        ++col;
    }
    return rank;
}

}  // namespace

TEST_CASE("surface quadratic code has full rank") {
    const FunctionalCode code(variety(3, 2), 2);
    CHECK(code.length() == 45);
    CHECK(code.full_dimension() == 10);
    CHECK(code.rank() == 10);
    CHECK(code.kernel_dim() == 0);
    CHECK(code.injective());
    CHECK(code.rank() == reference_rank(code));
}

TEST_CASE("surface cubic code drops rank and kills the defining form") {
    auto X = variety(3, 2);
    const FunctionalCode code(X, 3);
    CHECK(code.full_dimension() == 20);
    CHECK(code.rank() < 20);
    CHECK(code.rank() == reference_rank(code));
    CHECK(code.weight_of(X->form) == 0);
}

TEST_CASE("curve cubic code kernel is the inflection pencil") {
    // On the nine-point curve every rational point has exactly one zero
    // coordinate, so x0 x1 x2 vanishes on all of X alongside the defining
    // form; the two span the kernel.
    auto X = variety(2, 2);
    const FunctionalCode code(X, 3);
    CHECK(code.full_dimension() == 10);
    CHECK(code.rank() == reference_rank(code));
    CHECK(code.kernel_dim() == 2);
    CHECK(code.weight_of(X->form) == 0);
    const Form xyz = parse_form("x0*x1*x2", 2, 3, code.field());
    CHECK(code.weight_of(xyz) == 0);
}

TEST_CASE("weights of specific quadrics on the surface") {
    auto X = variety(3, 2);
    const FunctionalCode code(X, 2);
    const FieldSpec& field = code.field();
    CHECK(code.weight_of(parse_form("x0*x1", 3, 2, field)) == 30);
    // Two tangent planes through a line of X: the deepest codeword shape.
    const Form tangent_pair = parse_form("x0^2 + x0*x1 + x0*x2 + x1*x2", 3, 2, field);
    CHECK(code.weight_of(tangent_pair) == 22);
    CHECK(code.weight_of(parse_form("0", 3, 2, field)) == 0);
}

TEST_CASE("curve linear code spectrum follows the twelve-line configuration") {
    const FunctionalCode code(variety(2, 2), 1);
    CHECK(code.length() == 9);
    CHECK(code.rank() == 3);
    const WeightSpectrum sp = full_spectrum(code);
    // 21 lines of the plane: 12 meet the curve in three points, 9 in one.
    const std::map<std::uint32_t, std::uint64_t> want{{6, 36}, {8, 27}};
    CHECK(sp.counts == want);
    CHECK(sp.total() == 63);  // 4^3 - 1
}

TEST_CASE("exhaustive surface spectrum head and totals") {
    const FunctionalCode code(variety(3, 2), 2);
    const WeightSpectrum sp = full_spectrum(code, 3);
    CHECK(sp.exact);
    CHECK(sp.classes == 349525);
    CHECK(sp.kernel_dim == 0);
    CHECK(sp.total() == 1048575);  // 4^10 - 1
    CHECK(sp.min_weight() == 22);
    // Head counts cross-checked by a per-class classify-and-evaluate sweep.
    // Weights 22 and 26 come from plane pairs alone; hyperbolic quadrics add
    // 360, 12960, and 32832 classes at 24, 28, and 30, and cones 7920 at 30.
    CHECK(sp.counts.at(22) == 2160);
    CHECK(sp.counts.at(24) == 2970);
    CHECK(sp.counts.at(26) == 4320);
    CHECK(sp.counts.at(28) == 40500);
    CHECK(sp.counts.at(30) == 122976);
    for (const auto& [w, c] : sp.counts) {
        CHECK(w % 2 == 0);
        CHECK(c % 3 == 0);  // codeword counts come in scalar orbits
    }
}

TEST_CASE("exact witnesses are ascending, capped, and correct") {
    const FunctionalCode code(variety(3, 2), 2);
    const WeightSpectrum sp = full_spectrum(code, 2);
    const FormClassIndexer idx(3, 2, 4);
    for (const auto& [w, wit] : sp.witnesses) {
        CHECK(!wit.empty());
        CHECK(wit.size() <= WeightSpectrum::kWitnessCap);
        CHECK(std::is_sorted(wit.begin(), wit.end()));
        for (const std::uint64_t k : wit)
            CHECK(code.weight_of(idx.form_at(k, 3, 2)) == w);
    }
    // More than 32 classes exist at the smallest weight, so the cap binds.
    CHECK(sp.witnesses.at(22).size() == WeightSpectrum::kWitnessCap);
}

TEST_CASE("spectrum is identical for any worker count") {
    const FunctionalCode code(variety(3, 2), 2);
    const WeightSpectrum one = full_spectrum(code, 1);
    const WeightSpectrum four = full_spectrum(code, 4);
    const WeightSpectrum eight = full_spectrum(code, 8);
    CHECK(one.counts == four.counts);
    CHECK(one.counts == eight.counts);
    CHECK(one.witnesses == four.witnesses);
    CHECK(one.witnesses == eight.witnesses);
}

TEST_CASE("sampling is seed-deterministic and thread-invariant") {
    const FunctionalCode code(variety(3, 2), 2);
    const WeightSpectrum s1 = sampled_spectrum(code, 20000, 5, 1);
    const WeightSpectrum s2 = sampled_spectrum(code, 20000, 5, 4);
    CHECK(!s1.exact);
    CHECK(s1.total() == 20000);
    CHECK(s1.counts == s2.counts);
    CHECK(s1.witnesses == s2.witnesses);
    const WeightSpectrum other = sampled_spectrum(code, 20000, 6, 2);
    CHECK(s1.counts != other.counts);
    for (const auto& [w, c] : s1.counts) {
        CHECK(w >= 22);
        CHECK(w % 2 == 0);
    }
}

TEST_CASE("class budget rejects oversized enumerations") {
    const FunctionalCode code(variety(3, 2), 2);
    CHECK_THROWS_AS(full_spectrum(code, 1, 1000), BudgetError);
}

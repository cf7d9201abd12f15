#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "hermcode/divisibility.hpp"
#include "hermcode/field.hpp"
#include "hermcode/forms.hpp"
#include "hermcode/formtext.hpp"
#include "hermcode/varieties.hpp"

using namespace hermcode;

TEST_CASE("weight divisor exponent: pinned values") {
    CHECK(weight_divisor_exponent(2, 2) == 0);
    CHECK(weight_divisor_exponent(3, 2) == 1);
    CHECK(weight_divisor_exponent(4, 2) == 2);
    CHECK(weight_divisor_exponent(5, 2) == 3);
    CHECK(weight_divisor_exponent(6, 3) == 2);
    CHECK(weight_divisor_exponent(7, 3) == 3);
    CHECK(weight_divisor_exponent(9, 3) == 4);
    CHECK(weight_divisor_exponent(6, 4) == 1);
    CHECK(weight_divisor_exponent(8, 4) == 2);
    CHECK(weight_divisor_exponent(12, 5) == 3);
    CHECK_THROWS_AS(weight_divisor_exponent(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(weight_divisor_exponent(3, 1), std::invalid_argument);
}

TEST_CASE("three derivations of the exponent agree on every case") {
    for (unsigned n = 2; n <= 12; ++n)
        for (unsigned h = 2; h <= n; ++h) {
            CAPTURE(n);
            CAPTURE(h);
            const unsigned piecewise = weight_divisor_exponent(n, h);
            const unsigned direct = weight_divisor_exponent_direct(n, h);
            const unsigned degrees[3] = {2, h, h};
            const unsigned system = ax_katz_exponent(2 * (n + 1), degrees);
            CHECK(piecewise == direct);
            CHECK(direct == system);
        }
}

TEST_CASE("solution-count exponent for general systems") {
    const unsigned single[1] = {2};
    CHECK(ax_katz_exponent(8, single) == 3);
    const unsigned three[3] = {2, 2, 2};
    CHECK(ax_katz_exponent(8, three) == 1);
    const unsigned saturated[2] = {3, 3};
    CHECK(ax_katz_exponent(6, saturated) == 0);
    CHECK(ax_katz_exponent(4, saturated) == 0);  // never negative
}

TEST_CASE("subfield rewrite reproduces values coordinate by coordinate") {
    for (auto [p, n] : {std::pair<unsigned, unsigned>{2, 3}, {3, 2}}) {
        auto field = make_field(p, 1);
        const std::uint32_t q = field->order();
        const MonomialBasis basis(n, 2);
        std::mt19937 rng(31 + p);
        std::uniform_int_distribution<int> val(0, q - 1);
        for (int trial = 0; trial < 5; ++trial) {
            Form f{static_cast<int>(n), 2, std::vector<Felt>(basis.size())};
            for (auto& c : f.coeffs) c = static_cast<Felt>(val(rng));
            if (std::all_of(f.coeffs.begin(), f.coeffs.end(), [](Felt c) { return c == 0; }))
                f.coeffs[0] = 1;
            const SubfieldSystem sys = to_subfield_system(f, *field);
            CHECK(sys.quadric.h == 2);
            CHECK(sys.f0.h == 2);
            for (const Form* g : {&sys.quadric, &sys.f0, &sys.f1})
                for (const Felt c : g->coeffs) CHECK(field->in_subfield(c));

            for (int probe = 0; probe < 40; ++probe) {
                std::vector<Felt> x(n + 1), yz(2 * (n + 1));
                for (unsigned j = 0; j <= n; ++j) {
                    x[j] = static_cast<Felt>(val(rng));
                    const auto [y, z] = field->decompose(x[j]);
                    yz[j] = y;
                    yz[n + 1 + j] = z;
                }
                const Felt f0v = evaluate(sys.f0, yz, *field);
                const Felt f1v = evaluate(sys.f1, yz, *field);
                const Felt whole = evaluate(f, x, *field);
                CHECK(field->add(f0v, field->mul(field->alpha(), f1v)) == whole);
                Felt norm_sum = 0;
                for (const Felt c : x) norm_sum = field->add(norm_sum, field->norm(c));
                CHECK(evaluate(sys.quadric, yz, *field) == norm_sum);
            }
        }
    }
}

TEST_CASE("affine recount of the bare surface") {
    auto field = make_field(2, 1);
    const auto X = hermitian_variety(3, field);
    const AffineCheck bare = affine_check(X);
    CHECK(bare.affine_solutions == 136);
    CHECK(bare.projective_solutions == 135);  // (N - 1) / (t - 1)
    CHECK(bare.section_size == 45);
    CHECK(bare.identity_holds);               // 135 = (t + 1) * 45
    CHECK(bare.affine_solutions % 8 == 0);    // eight divides N
}

TEST_CASE("affine recount of a sliced surface") {
    auto field = make_field(2, 1);
    const auto X = hermitian_variety(3, field);
    const Form f = parse_form("x0*x1", 3, 2, *field);
    const AffineCheck sliced = affine_check(X, f);
    CHECK(sliced.affine_solutions == 46);
    CHECK(sliced.projective_solutions == 45);
    CHECK(sliced.section_size == 15);
    CHECK(sliced.identity_holds);
}

TEST_CASE("affine recount of the bare curve over the order-nine field") {
    auto field = make_field(3, 1);
    const auto X = hermitian_variety(2, field);
    const AffineCheck bare = affine_check(X);
    CHECK(bare.section_size == 28);
    CHECK(bare.projective_solutions == 112);  // (t + 1) * 28
    CHECK(bare.affine_solutions == 225);      // 2 * 112 + 1
    CHECK(bare.identity_holds);
    CHECK(bare.affine_solutions % 9 == 0);
}

TEST_CASE("every quadric slice keeps the scalar identity and parity") {
    auto field = make_field(2, 1);
    const auto X = hermitian_variety(3, field);
    const FormClassIndexer idx(3, 2, 4);
    for (std::uint64_t k : {std::uint64_t(17), std::uint64_t(65536), std::uint64_t(200000),
                            std::uint64_t(349524)}) {
        const Form f = idx.form_at(k, 3, 2);
        const AffineCheck c = affine_check(X, f);
        CHECK(c.identity_holds);
        CHECK(c.affine_solutions % 2 == 0);
        CHECK(c.projective_solutions == (c.affine_solutions - 1) / 1);
    }
}

TEST_CASE("divisibility report flags offenders and computes the gcd") {
    WeightSpectrum sp;
    sp.counts = {{24, 5}, {28, 1}, {32, 2}};
    const DivisorReport ok = verify_weight_divisibility(sp, 2, 4, 2);
    CHECK(ok.lambda == 2);
    CHECK(ok.modulus == 4);
    CHECK(ok.all_divisible);
    CHECK(ok.weight_gcd == 4);
    CHECK(ok.first_offender == 0);

    sp.counts[26] = 1;
    const DivisorReport bad = verify_weight_divisibility(sp, 2, 4, 2);
    CHECK(!bad.all_divisible);
    CHECK(bad.first_offender == 26);
    CHECK(bad.weight_gcd == 2);
}

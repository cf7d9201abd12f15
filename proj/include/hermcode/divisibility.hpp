#pragma once

#include <cstdint>
#include <span>

#include "hermcode/code.hpp"
#include "hermcode/forms.hpp"
#include "hermcode/varieties.hpp"

namespace hermcode {

// Exponent lambda such that t^lambda divides every nonzero weight of the
// degree-h code on the Hermitian variety in P^n; piecewise in r = n mod h.
unsigned weight_divisor_exponent(unsigned n, unsigned h);

// The same exponent as one expression: max(0, ceil(2(n-h)/h)).
unsigned weight_divisor_exponent_direct(unsigned n, unsigned h);

// Chevalley-style exponent for a system of forms: with vars variables and the
// given degrees, solution counts are divisible by the field size to the power
// max(0, ceil((vars - sum d_i) / max d_i)).
unsigned ax_katz_exponent(unsigned vars, std::span<const unsigned> degrees);

// Degree-h form over F_q in P^n rewritten over the subfield F_t: with
// x_j = y_j + alpha z_j, f(x) = f0(y, z) + alpha f1(y, z) and the defining
// norm sum becomes a quadric, all three with F_t coefficients in the
// 2(n+1) variables y_0..y_n, z_0..z_n (y block first).
struct SubfieldSystem {
    unsigned n = 0;
    int h = 0;
    Form quadric;
    Form f0, f1;
};

SubfieldSystem to_subfield_system(const Form& f, const FieldSpec& field);

// Brute-force solution counts of the subfield system over F_t^{2(n+1)}.
// The scalar structure forces M = (N-1)/(t-1) and M = (t+1) |section|,
// where N counts affine solutions (zero included) and the section is the
// F_q-projective point set being transformed.
struct AffineCheck {
    std::uint64_t affine_solutions = 0;     // N
    std::uint64_t projective_solutions = 0; // M
    std::uint64_t section_size = 0;         // |X cap Z(f)|, or |X| bare
    bool identity_holds = false;
};

// System {quadric, f0, f1} for X cap Z(f).
AffineCheck affine_check(const HermitianVariety& X, const Form& f);
// Bare variety: quadric alone.
AffineCheck affine_check(const HermitianVariety& X);

// Checks t^lambda | w for every weight in the spectrum and records the gcd
// of the observed weights.
struct DivisorReport {
    unsigned lambda = 0;
    std::uint64_t modulus = 1;  // t^lambda
    bool all_divisible = false;
    std::uint64_t weight_gcd = 0;
    std::uint32_t first_offender = 0;  // 0 when none
};

DivisorReport verify_weight_divisibility(const WeightSpectrum& spectrum,
                                         std::uint32_t t, unsigned n, unsigned h);

}  // namespace hermcode

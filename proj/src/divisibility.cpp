#include "hermcode/divisibility.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hermcode/errors.hpp"

namespace hermcode {

unsigned weight_divisor_exponent(unsigned n, unsigned h) {
    if (h < 2 || h > n) throw std::invalid_argument("exponent needs 2 <= h <= n");
    if (h == 2) return n - 2;
    const unsigned e = n / h, r = n % h;
    if (r == 0) return 2 * e - 2;
    if (h == 2 * r) return 2 * e - 1;
    return 2 * e + (2 * r) / h - 1;
}

unsigned weight_divisor_exponent_direct(unsigned n, unsigned h) {
    if (h < 2 || h > n) throw std::invalid_argument("exponent needs 2 <= h <= n");
    const long num = 2 * (static_cast<long>(n) - h);
    if (num <= 0) return 0;
    return static_cast<unsigned>((num + h - 1) / h);
}

unsigned ax_katz_exponent(unsigned vars, std::span<const unsigned> degrees) {
    if (degrees.empty()) throw std::invalid_argument("empty degree list");
    unsigned sum = 0, dmax = 0;
    for (unsigned d : degrees) {
        if (d == 0) throw std::invalid_argument("zero degree");
        sum += d;
        dmax = std::max(dmax, d);
    }
    if (vars <= sum) return 0;
    return (vars - sum + dmax - 1) / dmax;
}

namespace {

// Sparse multivariate accumulation over F_q during the substitution
// x_j = y_j + alpha z_j; keys are exponent vectors over the 2(n+1) variables.
using SparsePoly = std::map<std::vector<std::uint8_t>, Felt>;

void sparse_add(SparsePoly& p, const std::vector<std::uint8_t>& e, Felt c,
                const FieldSpec& f) {
    if (c == 0) return;
    auto [it, fresh] = p.emplace(e, c);
    if (!fresh) {
        it->second = f.add(it->second, c);
        if (it->second == 0) p.erase(it);
    }
}

Form densify(const SparsePoly& p, const MonomialBasis& basis, int n, int h,
             bool subfield_part, bool upper, const FieldSpec& f) {
    Form out{n, h, std::vector<Felt>(basis.size(), 0)};
    for (const auto& [e, c] : p) {
        Felt part = c;
        if (subfield_part) {
            auto [y, z] = f.decompose(c);
            part = upper ? z : y;
        }
        if (part != 0) out.coeffs[basis.index_of(e)] = part;
    }
    return out;
}

}  // namespace

SubfieldSystem to_subfield_system(const Form& f, const FieldSpec& field) {
    const unsigned n = static_cast<unsigned>(f.n);
    const std::size_t width = 2 * (n + 1);
    const Felt alpha = field.alpha();
    MonomialBasis src(f.n, f.h);
    if (f.coeffs.size() != src.size())
        throw std::invalid_argument("form does not match its stated parameters");

    SparsePoly acc;
    for (std::size_t m = 0; m < src.size(); ++m) {
        if (f.coeffs[m] == 0) continue;
        auto exps = src.exponents(m);
        SparsePoly term{{std::vector<std::uint8_t>(width, 0), f.coeffs[m]}};
        for (unsigned j = 0; j <= n; ++j)
            for (unsigned rep = 0; rep < exps[j]; ++rep) {
                SparsePoly next;
                for (const auto& [e, c] : term) {
                    auto ey = e;
                    ++ey[j];
                    sparse_add(next, ey, c, field);
                    auto ez = e;
                    ++ez[n + 1 + j];
                    sparse_add(next, ez, field.mul(alpha, c), field);
                }
                term = std::move(next);
            }
        for (const auto& [e, c] : term) sparse_add(acc, e, c, field);
    }

    SubfieldSystem sys;
    sys.n = n;
    sys.h = f.h;
    MonomialBasis big(static_cast<int>(width) - 1, f.h);
    sys.f0 = densify(acc, big, static_cast<int>(width) - 1, f.h, true, false, field);
    sys.f1 = densify(acc, big, static_cast<int>(width) - 1, f.h, true, true, field);

    // Norm sum: each x_j^{t+1} contributes y_j^2 + c2 y_j z_j + c3 z_j^2.
    const auto [c1, c2, c3] = field.hermitian_quadratic_coeffs();
    MonomialBasis quad(static_cast<int>(width) - 1, 2);
    sys.quadric = Form{static_cast<int>(width) - 1, 2,
                       std::vector<Felt>(quad.size(), 0)};
    std::vector<std::uint8_t> e(width, 0);
    for (unsigned j = 0; j <= n; ++j) {
        std::fill(e.begin(), e.end(), 0);
        e[j] = 2;
        sys.quadric.coeffs[quad.index_of(e)] = c1;
        std::fill(e.begin(), e.end(), 0);
        e[j] = 1;
        e[n + 1 + j] = 1;
        sys.quadric.coeffs[quad.index_of(e)] = c2;
        std::fill(e.begin(), e.end(), 0);
        e[n + 1 + j] = 2;
        sys.quadric.coeffs[quad.index_of(e)] = c3;
    }
    return sys;
}

namespace {

AffineCheck run_affine(const HermitianVariety& X, const Form* f) {
    const FieldSpec& field = *X.field;
    const std::uint32_t t = field.subfield_order();
    const unsigned n = X.n;
    const std::size_t width = 2 * (n + 1);

    unsigned __int128 total = 1;
    for (std::size_t i = 0; i < width; ++i) {
        total *= t;
        if (total > 100'000'000) throw BudgetError("affine point count exceeds 1e8");
    }

    SubfieldSystem sys = to_subfield_system(f ? *f : X.form, field);
    const bool with_f = f != nullptr;
    MonomialBasis quad_basis(static_cast<int>(width) - 1, 2);
    MonomialBasis f_basis(static_cast<int>(width) - 1, sys.h);

    std::uint64_t hits = 0;
    std::vector<Felt> v(width, 0);
    while (true) {
        const bool on_quadric = evaluate(sys.quadric, v, field, quad_basis) == 0;
        if (on_quadric &&
            (!with_f || (evaluate(sys.f0, v, field, f_basis) == 0 &&
                         evaluate(sys.f1, v, field, f_basis) == 0)))
            ++hits;
        std::size_t j = 0;
        while (j < width && v[j] == t - 1) v[j++] = 0;
        if (j == width) break;
        ++v[j];
    }

    AffineCheck out;
    out.affine_solutions = hits;
    out.projective_solutions = (hits - 1) / (t - 1);

    if (with_f) {
        MonomialBasis fb(static_cast<int>(n), f->h);
        for (std::uint32_t p : X.points.members())
            out.section_size += evaluate(*f, X.space->coords(p), field, fb) == 0;
    } else {
        out.section_size = X.size();
    }
    out.identity_holds =
        (hits - 1) % (t - 1) == 0 &&
        out.projective_solutions == std::uint64_t(t + 1) * out.section_size;
    return out;
}

}  // namespace

AffineCheck affine_check(const HermitianVariety& X, const Form& f) {
    return run_affine(X, &f);
}

AffineCheck affine_check(const HermitianVariety& X) { return run_affine(X, nullptr); }

DivisorReport verify_weight_divisibility(const WeightSpectrum& spectrum,
                                         std::uint32_t t, unsigned n, unsigned h) {
    DivisorReport rep;
    rep.lambda = weight_divisor_exponent(n, h);
    for (unsigned i = 0; i < rep.lambda; ++i) rep.modulus *= t;
    rep.all_divisible = true;
    for (const auto& [w, c] : spectrum.counts) {
        if (w == 0 || c == 0) continue;
        rep.weight_gcd = std::gcd(rep.weight_gcd, std::uint64_t(w));
        if (w % rep.modulus != 0 && rep.all_divisible) {
            rep.all_divisible = false;
            rep.first_offender = w;
        }
    }
    return rep;
}

}  // namespace hermcode

#include "hermcode/field.hpp"

#include <algorithm>
#include <stdexcept>

#include "hermcode/errors.hpp"

namespace hermcode {
namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomials over F_p, coefficients ascending, for modulus search and
// the construction of the intermediate field F_t = F_p^a.
using Poly = std::vector<unsigned>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly f, const Poly& m, unsigned p) {
    // m monic.
    while (f.size() >= m.size() && !f.empty()) {
        unsigned lead = f.back();
        std::size_t shift = f.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            unsigned sub = (lead * m[i]) % p;
            unsigned& c = f[shift + i];
            c = (c + p - sub % p) % p;
        }
        trim(f);
    }
    return f;
}

Poly poly_mul(const Poly& f, const Poly& g, unsigned p) {
    if (f.empty() || g.empty()) return {};
    Poly r(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            r[i + j] = (r[i + j] + f[i] * g[j]) % p;
    return r;
}

// Trial division by every monic polynomial of degree 1..deg(m)/2.
bool poly_irreducible(const Poly& m, unsigned p) {
    std::size_t deg = m.size() - 1;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            Poly div(d + 1, 0);
            std::uint64_t rest = v;
            for (std::size_t i = 0; i < d; ++i) {
                div[i] = rest % p;
                rest /= p;
            }
            div[d] = 1;
            if (poly_mod(m, div, p).empty()) return false;
        }
    }
    return true;
}

// First monic irreducible of the given degree, ordered by the integer
// encoding sum c_i p^i of the non-leading coefficients.
Poly smallest_irreducible(unsigned p, std::size_t deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
        Poly m(deg + 1, 0);
        std::uint64_t rest = v;
        for (std::size_t i = 0; i < deg; ++i) {
            m[i] = rest % p;
            rest /= p;
        }
        m[deg] = 1;
        if (poly_irreducible(m, p)) return m;
    }
    throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

FieldSpec::FieldSpec(unsigned p, unsigned a, const FieldBudget& budget) : p_(p), a_(a) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (a == 0) throw std::invalid_argument("extension exponent must be positive");

    std::uint64_t t = 1;
    for (unsigned i = 0; i < a; ++i) {
        t *= p;
        if (t * t > budget.max_q)
            throw BudgetError("field order " + std::to_string(t * t) +
                              " exceeds table budget (max q = " +
                              std::to_string(budget.max_q) + ")");
    }
    t_ = static_cast<std::uint32_t>(t);
    q_ = t_ * t_;

    // F_t tables.  For a = 1 these are plain mod-p arithmetic; otherwise
    // F_t = F_p[b]/(m1) with element index = sum of coefficient digits base p.
    std::vector<Felt> t_add(std::size_t(t_) * t_), t_mul(std::size_t(t_) * t_);
    if (a == 1) {
        mod_t_ = {0, 1};  // x
        for (std::uint32_t x = 0; x < t_; ++x)
            for (std::uint32_t y = 0; y < t_; ++y) {
                t_add[std::size_t(x) * t_ + y] = static_cast<Felt>((x + y) % p);
                t_mul[std::size_t(x) * t_ + y] = static_cast<Felt>((x * y) % p);
            }
    } else {
        mod_t_ = smallest_irreducible(p, a);
        auto to_poly = [&](std::uint32_t idx) {
            Poly f;
            while (idx) {
                f.push_back(idx % p);
                idx /= p;
            }
            return f;
        };
        auto to_index = [&](const Poly& f) {
            std::uint32_t idx = 0;
            for (std::size_t i = f.size(); i-- > 0;) idx = idx * p + f[i];
            return static_cast<Felt>(idx);
        };
        for (std::uint32_t x = 0; x < t_; ++x)
            for (std::uint32_t y = 0; y < t_; ++y) {
                Poly fx = to_poly(x), fy = to_poly(y);
                Poly sum(std::max(fx.size(), fy.size()), 0);
                for (std::size_t i = 0; i < sum.size(); ++i) {
                    unsigned c = (i < fx.size() ? fx[i] : 0) + (i < fy.size() ? fy[i] : 0);
                    sum[i] = c % p;
                }
                trim(sum);
                t_add[std::size_t(x) * t_ + y] = to_index(sum);
                t_mul[std::size_t(x) * t_ + y] = to_index(poly_mod(poly_mul(fx, fy, p), mod_t_, p));
            }
    }
    auto t_negate = [&](Felt x) {
        for (std::uint32_t y = 0; y < t_; ++y)
            if (t_add[std::size_t(x) * t_ + y] == 0) return static_cast<Felt>(y);
        throw std::logic_error("subfield negation failed");
    };

    // Extension modulus x^2 + c1*x + c0 over F_t: first pair (c1, c0) in the
    // integer order c1*t + c0 with no root in F_t.
    Felt c0 = 0, c1 = 0;
    bool found = false;
    for (std::uint32_t v = 0; v < t_ * t_ && !found; ++v) {
        Felt cc1 = static_cast<Felt>(v / t_), cc0 = static_cast<Felt>(v % t_);
        bool has_root = false;
        for (std::uint32_t x = 0; x < t_ && !has_root; ++x) {
            Felt x2 = t_mul[std::size_t(x) * t_ + x];
            Felt val = t_add[std::size_t(x2) * t_ + t_mul[std::size_t(cc1) * t_ + x]];
            val = t_add[std::size_t(val) * t_ + cc0];
            has_root = (val == 0);
        }
        if (!has_root) {
            c0 = cc0;
            c1 = cc1;
            found = true;
        }
    }
    if (!found) throw std::logic_error("no irreducible quadratic over subfield");
    mod_q_ = {c0, c1, 1};

    // F_q tables via the basis {1, alpha}: alpha^2 = -(c1*alpha + c0).
    add_.resize(std::size_t(q_) * q_);
    mul_.resize(std::size_t(q_) * q_);
    neg_.resize(q_);
    Felt nc0 = t_negate(c0), nc1 = t_negate(c1);
    for (std::uint32_t x = 0; x < q_; ++x) {
        Felt y1 = static_cast<Felt>(x % t_), z1 = static_cast<Felt>(x / t_);
        neg_[x] = static_cast<Felt>(t_negate(y1) + t_ * std::uint32_t(t_negate(z1)));
        for (std::uint32_t y = 0; y < q_; ++y) {
            Felt y2 = static_cast<Felt>(y % t_), z2 = static_cast<Felt>(y / t_);
            add_[std::size_t(x) * q_ + y] =
                static_cast<Felt>(t_add[std::size_t(y1) * t_ + y2] +
                                  t_ * std::uint32_t(t_add[std::size_t(z1) * t_ + z2]));
            // (y1 + a z1)(y2 + a z2) = y1 y2 - c0 z1 z2 + a (y1 z2 + y2 z1 - c1 z1 z2)
            Felt zz = t_mul[std::size_t(z1) * t_ + z2];
            Felt re = t_add[std::size_t(t_mul[std::size_t(y1) * t_ + y2]) * t_ +
                            t_mul[std::size_t(nc0) * t_ + zz]];
            Felt im = t_add[std::size_t(t_mul[std::size_t(y1) * t_ + z2]) * t_ +
                            t_mul[std::size_t(y2) * t_ + z1]];
            im = t_add[std::size_t(im) * t_ + t_mul[std::size_t(nc1) * t_ + zz]];
            mul_[std::size_t(x) * q_ + y] = static_cast<Felt>(re + t_ * std::uint32_t(im));
        }
    }

    inv_.resize(q_, 0);
    for (std::uint32_t x = 1; x < q_; ++x) inv_[x] = pow(static_cast<Felt>(x), q_ - 2);

    conj_.resize(q_);
    norm_.resize(q_);
    for (std::uint32_t x = 0; x < q_; ++x) {
        conj_[x] = pow(static_cast<Felt>(x), t_);
        norm_[x] = mul(static_cast<Felt>(x), conj_[x]);
    }

    Felt c2 = add(alpha(), conj(alpha()));
    Felt c3 = mul(alpha(), conj(alpha()));
    if (!in_subfield(c2) || !in_subfield(c3))
        throw std::logic_error("trace/norm of alpha escaped the subfield");
    herm_coeffs_ = {1, c2, c3};

    self_check();
}

Felt FieldSpec::inv(Felt x) const {
    if (x == 0) throw std::invalid_argument("division by zero");
    return inv_[x];
}

Felt FieldSpec::pow(Felt x, std::uint64_t e) const {
    Felt r = 1, b = x;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

void FieldSpec::self_check() const {
    // Cheap always-on sanity: failures indicate construction bugs, not input.
    for (std::uint32_t x = 0; x < q_; ++x) {
        Felt fx = static_cast<Felt>(x);
        if (add(fx, 0) != fx || mul(fx, 1) != fx) throw std::logic_error("identity failure");
        if (conj(conj(fx)) != fx) throw std::logic_error("conjugation not involutive");
        if (!in_subfield(norm(fx))) throw std::logic_error("norm escaped the subfield");
        if (in_subfield(fx) != (conj(fx) == fx))
            throw std::logic_error("subfield is not the Frobenius fixed set");
        auto [y, z] = decompose(fx);
        if (add(y, mul(alpha(), z)) != fx) throw std::logic_error("index layout broken");
        // Norm as a subfield quadratic in the coordinates.
        Felt expect = add(mul(y, y), add(mul(herm_coeffs_[1], mul(y, z)),
                                         mul(herm_coeffs_[2], mul(z, z))));
        if (expect != norm(fx)) throw std::logic_error("norm quadratic identity failed");
    }
    if (in_subfield(alpha())) throw std::logic_error("alpha lies in the subfield");
}

std::string FieldSpec::element_name(Felt x) const {
    if (x == 0) return "0";
    auto [y, z] = decompose(x);
    std::string out;
    auto digits = [&](Felt sub, bool ext) {
        std::uint32_t rest = sub;
        for (unsigned j = 0; rest; ++j, rest /= p_) {
            unsigned d = rest % p_;
            if (!d) continue;
            std::string atom;
            if (d != 1 || (!ext && j == 0)) atom = std::to_string(d);
            if (ext) atom += (atom.empty() ? "a" : "*a");
            if (j >= 1) {
                atom += (atom.empty() ? "b" : "*b");
                if (j > 1) atom += "^" + std::to_string(j);
            }
            if (!out.empty()) out += "+";
            out += atom;
        }
    };
    digits(y, false);
    digits(z, true);
    return out;
}

std::shared_ptr<const FieldSpec> make_field(unsigned p, unsigned a, const FieldBudget& budget) {
    return std::make_shared<const FieldSpec>(p, a, budget);
}

}  // namespace hermcode

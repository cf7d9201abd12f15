#include "hermcode/forms.hpp"

#include <algorithm>
#include <stdexcept>

#include "hermcode/errors.hpp"

namespace hermcode {

MonomialBasis::MonomialBasis(int n, int h) : n_(n), h_(h) {
    if (n < 1 || h < 1) throw std::invalid_argument("basis needs n >= 1 and h >= 1");
    std::vector<std::uint8_t> current(arity(), 0);
    // Depth-first with the leftmost variable taking the largest share first:
    // exponent vectors come out lexicographically descending.
    auto rec = [&](auto&& self, std::size_t var, int remaining) -> void {
        if (var + 1 == arity()) {
            current[var] = static_cast<std::uint8_t>(remaining);
            flat_.insert(flat_.end(), current.begin(), current.end());
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            current[var] = static_cast<std::uint8_t>(e);
            self(self, var + 1, remaining - e);
        }
    };
    rec(rec, 0, h);
    count_ = flat_.size() / arity();
    if (count_ != count(n, h)) throw std::logic_error("monomial count mismatch");
}

std::size_t MonomialBasis::index_of(std::span<const std::uint8_t> exps) const {
    if (exps.size() != arity()) throw std::invalid_argument("exponent arity mismatch");
    // Linear scan is fine at the sizes this library enumerates.
    for (std::size_t i = 0; i < count_; ++i) {
        auto e = exponents(i);
        if (std::equal(e.begin(), e.end(), exps.begin())) return i;
    }
    throw std::invalid_argument("exponent vector outside the basis");
}

std::uint64_t MonomialBasis::count(int n, int h) {
    unsigned __int128 r = 1;
    for (int i = 1; i <= h; ++i) r = r * (n + i) / i;
    if (r > UINT64_MAX) throw std::overflow_error("monomial count overflow");
    return static_cast<std::uint64_t>(r);
}

Felt evaluate(const Form& f, std::span<const Felt> coords, const FieldSpec& field,
              const MonomialBasis& basis) {
    if (coords.size() != basis.arity() || f.coeffs.size() != basis.size())
        throw std::invalid_argument("form/basis/point arity mismatch");
    Felt acc = 0;
    for (std::size_t m = 0; m < basis.size(); ++m) {
        Felt c = f.coeffs[m];
        if (c == 0) continue;
        auto e = basis.exponents(m);
        Felt v = c;
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j]) v = field.mul(v, field.pow(coords[j], e[j]));
        acc = field.add(acc, v);
    }
    return acc;
}

Felt evaluate(const Form& f, std::span<const Felt> coords, const FieldSpec& field) {
    MonomialBasis basis(f.n, f.h);
    return evaluate(f, coords, field, basis);
}

FormClassIndexer::FormClassIndexer(int n, int h, std::uint32_t q) : q_(q) {
    dim_ = static_cast<std::size_t>(MonomialBasis::count(n, h));
    base_.resize(dim_);
    size_.resize(dim_);
    unsigned __int128 total = 0;
    for (std::size_t lead = dim_; lead-- > 0;) {
        unsigned __int128 sz = 1;
        for (std::size_t i = lead + 1; i < dim_; ++i) {
            sz *= q;
            if (sz > UINT64_MAX) throw std::overflow_error("form class count overflow");
        }
        base_[lead] = static_cast<std::uint64_t>(total);
        size_[lead] = static_cast<std::uint64_t>(sz);
        total += sz;
        if (total > UINT64_MAX) throw std::overflow_error("form class count overflow");
    }
    count_ = static_cast<std::uint64_t>(total);
}

FormClassIndexer::Decomposed FormClassIndexer::decompose(std::uint64_t k) const {
    if (k >= count_) throw std::invalid_argument("form class index out of range");
    // Blocks run lead = dim-1, dim-2, ..., 0 in enumeration order.
    for (std::size_t lead = dim_; lead-- > 0;)
        if (k >= base_[lead] && k < base_[lead] + size_[lead]) return {lead, k - base_[lead]};
    throw std::logic_error("form class block lookup failed");
}

Form FormClassIndexer::form_at(std::uint64_t k, int n, int h) const {
    auto [lead, suffix] = decompose(k);
    Form f{n, h, std::vector<Felt>(dim_, 0)};
    f.coeffs[lead] = 1;
    for (std::size_t i = dim_; i-- > lead + 1;) {
        f.coeffs[i] = static_cast<Felt>(suffix % q_);
        suffix /= q_;
    }
    return f;
}

EvalTable::EvalTable(const MonomialBasis& basis, const PointList& space,
                     std::span<const std::uint32_t> points)
    : field_(space.field_ptr()),
      len_(points.size()),
      nrows_(basis.size()),
      q_(field_->order()) {
    scaled_.assign(nrows_ * q_ * len_, 0);
    const Felt* mul = field_->mul_table();
    std::vector<Felt> base(len_);
    for (std::size_t m = 0; m < nrows_; ++m) {
        auto exps = basis.exponents(m);
        for (std::size_t i = 0; i < len_; ++i) {
            auto coords = space.coords(points[i]);
            Felt v = 1;
            for (std::size_t k = 0; k < exps.size(); ++k)
                for (unsigned e = 0; e < exps[k]; ++e) v = mul[v * q_ + coords[k]];
            base[i] = v;
        }
        for (std::uint32_t c = 1; c < q_; ++c) {
            Felt* dst = scaled_.data() + (m * q_ + c) * len_;
            for (std::size_t i = 0; i < len_; ++i) dst[i] = mul[c * q_ + base[i]];
        }
    }
}

void EvalTable::accumulate(std::size_t m, Felt c, Felt* values) const {
    if (c == 0) return;
    const Felt* add = field_->add_table();
    const Felt* src = scaled(m, c);
    for (std::size_t i = 0; i < len_; ++i)
        values[i] = add[values[i] * q_ + src[i]];
}

Form linear_form(std::span<const Felt> dual) {
    Form f{static_cast<int>(dual.size()) - 1, 1, {dual.begin(), dual.end()}};
    return f;
}

Form product_of_linear_forms(std::span<const Form> linears, const FieldSpec& field) {
    if (linears.empty()) throw std::invalid_argument("empty product");
    const int n = linears[0].n;
    const int h = static_cast<int>(linears.size());
    for (const auto& l : linears)
        if (l.n != n || l.h != 1) throw std::invalid_argument("factors must be linear forms in one arity");

    // Sparse accumulation keyed by exponent vector, then densified.
    struct Term {
        std::vector<std::uint8_t> e;
        Felt c;
    };
    std::vector<Term> acc{{std::vector<std::uint8_t>(n + 1, 0), 1}};
    for (const auto& l : linears) {
        std::vector<Term> next;
        for (const auto& t : acc)
            for (int j = 0; j <= n; ++j) {
                if (l.coeffs[j] == 0) continue;
                Term nt = t;
                ++nt.e[j];
                nt.c = field.mul(nt.c, l.coeffs[j]);
                auto it = std::find_if(next.begin(), next.end(),
                                       [&](const Term& u) { return u.e == nt.e; });
                if (it == next.end())
                    next.push_back(std::move(nt));
                else
                    it->c = field.add(it->c, nt.c);
            }
        acc = std::move(next);
    }
    MonomialBasis basis(n, h);
    Form out{n, h, std::vector<Felt>(basis.size(), 0)};
    for (const auto& t : acc)
        if (t.c != 0) out.coeffs[basis.index_of(t.e)] = t.c;
    return out;
}

std::vector<Form> pencil_products(const PointList& space, std::uint32_t h0,
                                  std::uint32_t h1, int h) {
    const FieldSpec& field = space.field();
    const std::uint32_t q = field.order();
    if (h < 1 || static_cast<std::uint32_t>(h) > q)
        throw std::invalid_argument("pencil products need 1 <= h <= q");

    // The pencil through the codimension-2 space: projective combinations of
    // the two dual vectors, q+1 hyperplanes.
    auto c0 = space.coords(h0);
    auto c1 = space.coords(h1);
    std::vector<std::vector<Felt>> pencil;
    std::vector<Felt> v(c0.size());
    pencil.emplace_back(c1.begin(), c1.end());
    for (std::uint32_t c = 0; c < q; ++c) {
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] = field.add(c0[j], field.mul(static_cast<Felt>(c), c1[j]));
        pencil.push_back(PointList::canonicalize(v, field));
    }
    std::sort(pencil.begin(), pencil.end());

    std::vector<Form> out;
    std::vector<std::size_t> pick(h);
    for (int i = 0; i < h; ++i) pick[i] = i;
    while (true) {
        std::vector<Form> factors;
        for (int i = 0; i < h; ++i) factors.push_back(linear_form(pencil[pick[i]]));
        out.push_back(product_of_linear_forms(factors, field));
        int i = h - 1;
        while (i >= 0 && pick[i] == pencil.size() - h + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < h; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

}  // namespace hermcode

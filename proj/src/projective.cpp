#include "hermcode/projective.hpp"

#include <algorithm>
#include <stdexcept>

#include "hermcode/errors.hpp"

namespace hermcode {

PointList::PointList(int n, std::shared_ptr<const FieldSpec> field, std::uint64_t max_points)
    : n_(n), field_(std::move(field)) {
    if (n < 1) throw std::invalid_argument("projective dimension must be at least 1");
    const std::uint64_t q = field_->order();

    unsigned __int128 total = 0;
    for (int i = 0; i <= n; ++i) {
        unsigned __int128 sz = 1;
        for (int j = 0; j < n - i; ++j) sz *= q;
        total += sz;
    }
    if (total > max_points)
        throw BudgetError("point enumeration budget exceeded (needs " +
                          std::to_string(static_cast<std::uint64_t>(total > UINT64_MAX ? UINT64_MAX : total)) +
                          " points, budget " + std::to_string(max_points) + ")");
    count_ = static_cast<std::size_t>(total);

    flat_.reserve(count_ * width());
    group_base_.resize(n + 1);
    std::uint64_t base = 0;
    for (int i = 0; i <= n; ++i) {
        group_base_[i] = base;
        std::uint64_t sz = 1;
        for (int j = 0; j < n - i; ++j) sz *= q;
        for (std::uint64_t counter = 0; counter < sz; ++counter) {
            for (int j = 0; j < i; ++j) flat_.push_back(0);
            flat_.push_back(1);
            // Suffix digits big-endian so points are lexicographic in-group.
            std::uint64_t rest = counter;
            std::uint64_t place = sz / (q ? q : 1);
            for (int j = i + 1; j <= n; ++j) {
                flat_.push_back(static_cast<Felt>(rest / place));
                rest %= place;
                place /= q;
            }
        }
        base += sz;
    }
}

int PointList::w_index(std::size_t i) const {
    auto c = coords(i);
    for (int j = 0; j <= n_; ++j)
        if (c[j] != 0) return j;
    throw std::logic_error("zero vector stored as a point");
}

ProjPoint PointList::point(std::size_t i) const {
    auto c = coords(i);
    return {{c.begin(), c.end()}, w_index(i)};
}

std::size_t PointList::index_of(std::span<const Felt> canonical) const {
    const std::uint64_t q = field_->order();
    if (canonical.size() != width()) throw std::invalid_argument("coordinate arity mismatch");
    int w = -1;
    for (int j = 0; j <= n_; ++j)
        if (canonical[j] != 0) {
            w = j;
            break;
        }
    if (w < 0) throw std::invalid_argument("zero vector has no projective index");
    if (canonical[w] != 1) throw std::invalid_argument("vector is not canonical");
    std::uint64_t offset = 0;
    for (int j = w + 1; j <= n_; ++j) offset = offset * q + canonical[j];
    return static_cast<std::size_t>(group_base_[w] + offset);
}

std::size_t PointList::canonical_index(std::span<const Felt> raw) const {
    auto c = canonicalize(raw, *field_);
    return index_of(c);
}

std::vector<Felt> PointList::canonicalize(std::span<const Felt> raw, const FieldSpec& f) {
    std::vector<Felt> out(raw.begin(), raw.end());
    for (auto& c : out)
        if (c != 0) {
            Felt s = f.inv(c);
            for (auto& d : out) d = f.mul(d, s);
            return out;
        }
    throw std::invalid_argument("cannot canonicalize the zero vector");
}

std::uint64_t PointList::count(int n, std::uint64_t q) {
    unsigned __int128 total = 0, pw = 1;
    for (int i = 0; i <= n; ++i) {
        total += pw;
        pw *= q;
        if (total > UINT64_MAX) throw std::overflow_error("projective point count overflow");
    }
    return static_cast<std::uint64_t>(total);
}

namespace {

// Basis of the solution space of rows * x = 0 (rows independent not required;
// rank is taken as found).  Gaussian elimination over F_q.
std::vector<std::vector<Felt>> nullspace(const FieldSpec& f,
                                         std::vector<std::vector<Felt>> rows) {
    const std::size_t m = rows.empty() ? 0 : rows[0].size();
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m && r < rows.size(); ++col) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        Felt s = f.inv(rows[r][col]);
        for (auto& c : rows[r]) c = f.mul(c, s);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            Felt factor = rows[i][col];
            for (std::size_t j = 0; j < m; ++j)
                rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
        }
        pivot_col.push_back(static_cast<int>(col));
        ++r;
    }
    std::vector<char> is_pivot(m, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    std::vector<std::vector<Felt>> basis;
    for (std::size_t free_col = 0; free_col < m; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Felt> v(m, 0);
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = f.neg(rows[i][free_col]);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Ascending point indices of the projectivized span of a basis.
std::vector<std::uint32_t> span_indices(const PointList& space,
                                        const std::vector<std::vector<Felt>>& basis) {
    const FieldSpec& f = space.field();
    const std::uint32_t q = f.order();
    const std::size_t m = basis.empty() ? 0 : basis[0].size();
    std::vector<std::uint32_t> out;
    // Coefficient tuples with first nonzero entry 1, one per projective point.
    std::vector<Felt> coef(basis.size(), 0);
    std::vector<Felt> v(m);
    for (std::size_t lead = basis.size(); lead-- > 0;) {
        std::fill(coef.begin(), coef.end(), 0);
        coef[lead] = 1;
        std::uint64_t combos = 1;
        for (std::size_t i = lead + 1; i < basis.size(); ++i) combos *= q;
        for (std::uint64_t counter = 0; counter < combos; ++counter) {
            std::uint64_t rest = counter;
            for (std::size_t i = basis.size(); i-- > lead + 1;) {
                coef[i] = static_cast<Felt>(rest % q);
                rest /= q;
            }
            std::fill(v.begin(), v.end(), 0);
            for (std::size_t i = lead; i < basis.size(); ++i) {
                if (coef[i] == 0) continue;
                for (std::size_t j = 0; j < m; ++j)
                    v[j] = f.add(v[j], f.mul(coef[i], basis[i][j]));
            }
            out.push_back(static_cast<std::uint32_t>(space.canonical_index(v)));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

LineSet::LineSet(const PointList& space, std::uint64_t max_pairs) {
    if (space.dim() != 3) throw std::invalid_argument("lines are materialized for n = 3 only");
    const FieldSpec& f = space.field();
    const std::uint32_t q = f.order();
    q_ = q;
    const std::size_t np = space.size();
    const std::uint64_t pairs = std::uint64_t(np) * (np - 1) / 2;
    if (pairs > max_pairs)
        throw BudgetError("line enumeration budget exceeded (" + std::to_string(pairs) +
                          " point pairs, budget " + std::to_string(max_pairs) + ")");

    const std::uint64_t expected = count(q);
    refs_.reserve(expected);
    flat_.reserve(expected * width());

    std::vector<Felt> v(4);
    std::vector<std::uint32_t> pts(width());
    for (std::uint32_t a = 0; a + 1 < np; ++a) {
        auto u = space.coords(a);
        for (std::uint32_t b = a + 1; b < np; ++b) {
            auto w = space.coords(b);
            pts[0] = b;  // scalar 0 on u picks out w itself
            for (std::uint32_t c = 0; c < q; ++c) {
                for (int j = 0; j < 4; ++j) v[j] = f.add(u[j], f.mul(static_cast<Felt>(c), w[j]));
                pts[c + 1] = static_cast<std::uint32_t>(space.canonical_index(v));
            }
            std::sort(pts.begin(), pts.end());
            if (pts[0] == a && pts[1] == b) {
                refs_.push_back({a, b});
                flat_.insert(flat_.end(), pts.begin(), pts.end());
            }
        }
    }
    if (refs_.size() != expected) throw std::logic_error("line enumeration count mismatch");
}

bool incident(const PointList& space, std::size_t point, std::size_t hyperplane) {
    const FieldSpec& f = space.field();
    auto p = space.coords(point);
    auto h = space.coords(hyperplane);
    Felt acc = 0;
    for (std::size_t j = 0; j < p.size(); ++j) acc = f.add(acc, f.mul(p[j], h[j]));
    return acc == 0;
}

std::vector<std::uint32_t> planes_through_line(const PointList& space,
                                               std::uint32_t p0, std::uint32_t p1) {
    auto c0 = space.coords(p0);
    auto c1 = space.coords(p1);
    auto basis = nullspace(space.field(), {{c0.begin(), c0.end()}, {c1.begin(), c1.end()}});
    if (basis.size() != space.coords(0).size() - 2)
        throw std::invalid_argument("points do not span a line");
    return span_indices(space, basis);
}

std::vector<std::uint32_t> codim2_points(const PointList& space,
                                         std::uint32_t h0, std::uint32_t h1) {
    auto c0 = space.coords(h0);
    auto c1 = space.coords(h1);
    auto basis = nullspace(space.field(), {{c0.begin(), c0.end()}, {c1.begin(), c1.end()}});
    if (basis.size() != space.coords(0).size() - 2)
        throw std::invalid_argument("hyperplanes are not independent");
    return span_indices(space, basis);
}

}  // namespace hermcode

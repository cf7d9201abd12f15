#include "hermcode/varieties.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>

#include "hermcode/enumerate.hpp"

namespace hermcode {

namespace {

// Rank of a list of coordinate vectors over the field, by elimination.
std::size_t matrix_rank(std::vector<Felt> rows, std::size_t width, const FieldSpec& f) {
    const std::size_t nrows = width == 0 ? 0 : rows.size() / width;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < width && rank < nrows; ++col) {
        std::size_t pivot = rank;
        while (pivot < nrows && rows[pivot * width + col] == 0) ++pivot;
        if (pivot == nrows) continue;
        for (std::size_t j = 0; j < width; ++j)
            std::swap(rows[rank * width + j], rows[pivot * width + j]);
        const Felt scale = f.inv(rows[rank * width + col]);
        for (std::size_t j = col; j < width; ++j)
            rows[rank * width + j] = f.mul(scale, rows[rank * width + j]);
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == rank) continue;
            const Felt c = rows[r * width + col];
            if (c == 0) continue;
            for (std::size_t j = col; j < width; ++j)
                rows[r * width + j] =
                    f.sub(rows[r * width + j], f.mul(c, rows[rank * width + j]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace

PointSet::PointSet(std::size_t universe, std::vector<std::uint32_t> members)
    : mask_(universe, false), members_(std::move(members)) {
    for (std::uint32_t i : members_) mask_.at(i) = true;
}

std::uint64_t hermitian_point_count(unsigned n, std::uint32_t t) {
    auto sgn = [](unsigned k) { return (k % 2 == 0) ? 1 : -1; };
    __int128 tk = 1;
    for (unsigned i = 0; i < n; ++i) tk *= t;
    const __int128 a = tk * t - sgn(n + 1);  // t^{n+1} - (-1)^{n+1}
    const __int128 b = tk - sgn(n);          // t^n - (-1)^n
    return static_cast<std::uint64_t>(a * b / (__int128(t) * t - 1));
}

HermitianVariety hermitian_variety(unsigned n, std::shared_ptr<const FieldSpec> field,
                                   std::shared_ptr<const PointList> space) {
    const std::uint32_t t = field->subfield_order();
    if (!space) space = std::make_shared<PointList>(static_cast<int>(n), field);
    if (space->dim() != static_cast<int>(n) || &space->field() != field.get())
        throw std::invalid_argument("point list does not match the variety parameters");

    MonomialBasis basis(static_cast<int>(n), static_cast<int>(t) + 1);
    Form form{static_cast<int>(n), static_cast<int>(t) + 1,
              std::vector<Felt>(basis.size(), 0)};
    std::vector<std::uint8_t> exps(n + 1, 0);
    for (unsigned j = 0; j <= n; ++j) {
        std::fill(exps.begin(), exps.end(), 0);
        exps[j] = static_cast<std::uint8_t>(t + 1);
        form.coeffs[basis.index_of(exps)] = 1;
    }

    std::vector<std::uint32_t> members;
    for (std::size_t i = 0; i < space->size(); ++i) {
        auto coords = space->coords(i);
        Felt s = 0;
        for (Felt c : coords) s = field->add(s, field->norm(c));
        if (s != evaluate(form, coords, *field, basis))
            throw std::logic_error("norm-sum disagrees with defining form");
        if (s == 0) members.push_back(static_cast<std::uint32_t>(i));
    }
    if (members.size() != hermitian_point_count(n, t))
        throw std::logic_error("hermitian point count mismatch");

    HermitianVariety X;
    X.n = n;
    X.field = std::move(field);
    X.space = std::move(space);
    X.points = PointSet(X.space->size(), std::move(members));
    X.form = std::move(form);
    return X;
}

std::vector<Felt> tangent_plane_at(const HermitianVariety& X, std::uint32_t point) {
    if (!X.points.contains(point)) throw std::invalid_argument("point not on the variety");
    auto coords = X.space->coords(point);
    // conj fixes the leading 1, so the dual vector is already canonical.
    std::vector<Felt> dual(coords.size());
    for (std::size_t j = 0; j < dual.size(); ++j) dual[j] = X.field->conj(coords[j]);
    return dual;
}

std::optional<std::uint32_t> tangency_point(const HermitianVariety& X,
                                            std::uint32_t hyperplane) {
    auto h = X.space->coords(hyperplane);
    std::vector<Felt> pole(h.size());
    for (std::size_t j = 0; j < pole.size(); ++j) pole[j] = X.field->conj(h[j]);
    const auto idx = static_cast<std::uint32_t>(X.space->index_of(pole));
    if (X.points.contains(idx)) return idx;
    return std::nullopt;
}

bool is_tangent_hyperplane(const HermitianVariety& X, std::uint32_t hyperplane) {
    return tangency_point(X, hyperplane).has_value();
}

const char* to_string(LineClass c) {
    switch (c) {
        case LineClass::Generator: return "generator";
        case LineClass::Tangent: return "tangent";
        case LineClass::Secant: return "secant";
    }
    return "?";
}

LineClass classify_line(const HermitianVariety& X, const LineSet& lines,
                        std::uint32_t line) {
    const std::uint32_t t = X.field->subfield_order();
    std::uint32_t count = 0;
    for (std::uint32_t p : lines.points_on(line)) count += X.points.contains(p);
    if (count == t * t + 1) return LineClass::Generator;
    if (count == 1) return LineClass::Tangent;
    if (count == t + 1) return LineClass::Secant;
    throw std::logic_error("line section size outside {1, t+1, t^2+1}");
}

LineCensus line_census_expected(std::uint32_t t) {
    const std::uint64_t t3p1 = std::uint64_t(t) * t * t + 1;
    LineCensus c;
    c.generator = t3p1 * (t + 1);
    c.tangent = std::uint64_t(t) * t3p1 * (std::uint64_t(t) * t + 1) * (t - 1);
    c.secant = std::uint64_t(t) * t * t * t * (t3p1 / (t + 1)) * (std::uint64_t(t) * t + 1);
    return c;
}

LineCensus line_census(const HermitianVariety& X, const LineSet& lines) {
    LineCensus c;
    for (std::size_t l = 0; l < lines.size(); ++l) {
        switch (classify_line(X, lines, static_cast<std::uint32_t>(l))) {
            case LineClass::Generator: ++c.generator; break;
            case LineClass::Tangent: ++c.tangent; break;
            case LineClass::Secant: ++c.secant; break;
        }
    }
    if (c.total() != lines.size()) throw std::logic_error("line census lost lines");
    return c;
}

const char* to_string(QuadricClass c) {
    switch (c) {
        case QuadricClass::RepeatedPlane: return "repeated-plane";
        case QuadricClass::DistinctPlanePair: return "plane-pair";
        case QuadricClass::Cone: return "cone";
        case QuadricClass::LineQuadric: return "line";
        case QuadricClass::Hyperbolic: return "hyperbolic";
        case QuadricClass::Elliptic: return "elliptic";
    }
    return "?";
}

namespace {

QuadricClass classify_by_counts(std::uint64_t zeros, std::uint32_t q,
                                const std::function<std::size_t()>& zero_rank) {
    const std::uint64_t qq = std::uint64_t(q) * q;
    if (zeros == q + 1) return QuadricClass::LineQuadric;
    if (zeros == qq + 1) return QuadricClass::Elliptic;
    if (zeros == (q + 1) * std::uint64_t(q + 1)) return QuadricClass::Hyperbolic;
    if (zeros == 2 * qq + q + 1) return QuadricClass::DistinctPlanePair;
    if (zeros == qq + q + 1) {
        const std::size_t r = zero_rank();
        if (r == 3) return QuadricClass::RepeatedPlane;
        if (r == 4) return QuadricClass::Cone;
        throw std::logic_error("unexpected zero-set rank for a q^2+q+1 quadric");
    }
    throw std::logic_error("quadric zero count matches no class");
}

}  // namespace

QuadricClass classify_quadric(const Form& f, const PointList& space) {
    if (f.h != 2 || f.n != space.dim() || space.dim() != 3)
        throw std::invalid_argument("quadric classification needs a degree-2 form on P^3");
    if (std::all_of(f.coeffs.begin(), f.coeffs.end(), [](Felt c) { return c == 0; }))
        throw std::invalid_argument("zero form has no quadric class");
    const FieldSpec& field = space.field();
    MonomialBasis basis(3, 2);
    std::vector<std::uint32_t> zeros;
    for (std::size_t i = 0; i < space.size(); ++i)
        if (evaluate(f, space.coords(i), field, basis) == 0)
            zeros.push_back(static_cast<std::uint32_t>(i));
    auto rank = [&]() {
        std::vector<Felt> rows;
        for (std::uint32_t z : zeros) {
            auto c = space.coords(z);
            rows.insert(rows.end(), c.begin(), c.end());
        }
        return matrix_rank(std::move(rows), 4, field);
    };
    return classify_by_counts(zeros.size(), field.order(), rank);
}

std::uint64_t QuadricCensus::total() const {
    std::uint64_t s = 0;
    for (auto v : by_class) s += v;
    return s;
}

std::uint64_t& census_slot(QuadricCensus& c, QuadricClass cls) {
    return c.by_class[static_cast<std::size_t>(cls)];
}

QuadricCensus quadric_census(const HermitianVariety& X, unsigned threads) {
    if (X.n != 3) throw std::invalid_argument("quadric census runs on P^3");
    const PointList& space = *X.space;
    const FieldSpec& field = *X.field;
    const std::uint32_t q = field.order();

    // Variety points first so one value pass yields both the total zero count
    // and the section size |X cap Q| as a prefix count.
    std::vector<std::uint32_t> order(X.points.members().begin(), X.points.members().end());
    const std::size_t nX = order.size();
    for (std::uint32_t i = 0; i < space.size(); ++i)
        if (!X.points.contains(i)) order.push_back(i);

    MonomialBasis basis(3, 2);
    EvalTable table(basis, space, order);
    FormClassIndexer indexer(3, 2, q);

    const auto ranges = split_ranges(indexer.count(), std::max(1u, threads));
    std::vector<QuadricCensus> partial(ranges.size());
    auto work = [&](std::size_t w) {
        QuadricCensus& c = partial[w];
        std::vector<std::uint32_t> zeros;
        for_each_class(indexer, table, ranges[w].first, ranges[w].second,
                       [&](std::uint64_t, const Felt* values) {
                           std::uint64_t total = 0, onX = 0;
                           for (std::size_t i = 0; i < order.size(); ++i)
                               if (values[i] == 0) {
                                   ++total;
                                   onX += i < nX;
                               }
                           auto rank = [&]() {
                               zeros.clear();
                               for (std::size_t i = 0; i < order.size(); ++i)
                                   if (values[i] == 0) zeros.push_back(order[i]);
                               std::vector<Felt> rows;
                               for (std::uint32_t z : zeros) {
                                   auto cd = space.coords(z);
                                   rows.insert(rows.end(), cd.begin(), cd.end());
                               }
                               return matrix_rank(std::move(rows), 4, field);
                           };
                           const QuadricClass cls = classify_by_counts(total, q, rank);
                           ++census_slot(c, cls);
                           if (cls == QuadricClass::Elliptic)
                               c.max_elliptic_section = std::max(c.max_elliptic_section, onX);
                       });
    };
    if (ranges.size() == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < ranges.size(); ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }

    QuadricCensus out;
    for (const auto& c : partial) {
        for (std::size_t i = 0; i < out.by_class.size(); ++i)
            out.by_class[i] += c.by_class[i];
        out.max_elliptic_section = std::max(out.max_elliptic_section, c.max_elliptic_section);
    }
    if (out.total() != indexer.count())
        throw std::logic_error("quadric census lost classes");
    return out;
}

}  // namespace hermcode

#include <array>
#include <memory>
#include <vector>

#include "doctest.h"

#include "hermcode/field.hpp"
#include "hermcode/forms.hpp"
#include "hermcode/projective.hpp"
#include "hermcode/varieties.hpp"

using namespace hermcode;

namespace {

Form quadric_from_text_indices(const PointList& space,
                               std::vector<std::pair<std::array<std::uint8_t, 4>, Felt>> terms) {
    const MonomialBasis basis(3, 2);
    Form f{3, 2, std::vector<Felt>(basis.size(), 0)};
    for (auto& [exps, c] : terms) f.coeffs[basis.index_of(exps)] = c;
    (void)space;
    return f;
}

std::size_t zero_count(const Form& f, const PointList& space) {
    std::size_t zeros = 0;
    for (std::size_t i = 0; i < space.size(); ++i)
        zeros += evaluate(f, space.coords(i), space.field()) == 0;
    return zeros;
}

}  // namespace

TEST_CASE("closed-form point counts") {
    CHECK(hermitian_point_count(2, 2) == 9);
    CHECK(hermitian_point_count(3, 2) == 45);
    CHECK(hermitian_point_count(4, 2) == 165);
    CHECK(hermitian_point_count(2, 3) == 28);
    CHECK(hermitian_point_count(3, 3) == 280);
    CHECK(hermitian_point_count(4, 3) == 2440);
    CHECK(hermitian_point_count(2, 4) == 65);
    CHECK(hermitian_point_count(3, 4) == 1105);
}

TEST_CASE("variety membership is the vanishing of the norm sum") {
    for (auto [p, a, n] : {std::tuple<unsigned, unsigned, unsigned>{2, 1, 3},
                           {3, 1, 2},
                           {2, 2, 2}}) {
        auto field = make_field(p, a);
        const auto X = hermitian_variety(n, field);
        CHECK(X.size() == hermitian_point_count(n, field->subfield_order()));
        CHECK(X.form.h == static_cast<int>(field->subfield_order()) + 1);
        std::size_t members = 0;
        for (std::size_t i = 0; i < X.space->size(); ++i) {
            Felt norm_sum = 0;
            for (const Felt c : X.space->coords(i))
                norm_sum = field->add(norm_sum, field->norm(c));
            CHECK(X.points.contains(static_cast<std::uint32_t>(i)) == (norm_sum == 0));
            CHECK((evaluate(X.form, X.space->coords(i), *field) == 0) == (norm_sum == 0));
            members += norm_sum == 0;
        }
        CHECK(members == X.size());
    }
}

TEST_CASE("tangent hyperplanes biject with points via the conjugate pole") {
    auto field = make_field(2, 1);
    const auto X = hermitian_variety(3, field);
    const PointList& space = *X.space;

    // The self-conjugate point (1:1:0:0) lies on X; its tangent plane is
    // x0 + x1 = 0 and meets X in 13 points, one more than t times the count
    // of a non-degenerate plane section.
    const std::vector<Felt> pt{1, 1, 0, 0};
    const auto p_idx = static_cast<std::uint32_t>(space.index_of(pt));
    REQUIRE(X.points.contains(p_idx));
    const auto dual = tangent_plane_at(X, p_idx);
    CHECK(dual == std::vector<Felt>{1, 1, 0, 0});
    const auto h_idx = static_cast<std::uint32_t>(space.index_of(dual));
    CHECK(is_tangent_hyperplane(X, h_idx));
    const auto pole = tangency_point(X, h_idx);
    REQUIRE(pole.has_value());
    CHECK(*pole == p_idx);

    std::size_t tangent_planes = 0;
    for (std::size_t h = 0; h < space.size(); ++h) {
        std::size_t section = 0;
        for (const std::uint32_t m : X.points.members()) section += incident(space, m, h);
        if (is_tangent_hyperplane(X, static_cast<std::uint32_t>(h))) {
            ++tangent_planes;
            CHECK(section == 13);
        } else {
            CHECK(section == 9);
        }
    }
    CHECK(tangent_planes == 45);

    // Round trip through every point of X.
    for (const std::uint32_t m : X.points.members()) {
        const auto d = tangent_plane_at(X, m);
        const auto h = static_cast<std::uint32_t>(space.index_of(d));
        const auto back = tangency_point(X, h);
        REQUIRE(back.has_value());
        CHECK(*back == m);
    }
}

TEST_CASE("solid hyperplane sections take exactly two sizes") {
    auto field = make_field(2, 1);
    const auto X = hermitian_variety(4, field);
    const PointList& space = *X.space;
    std::size_t tangent_planes = 0;
    for (std::size_t h = 0; h < space.size(); ++h) {
        std::size_t section = 0;
        for (const std::uint32_t m : X.points.members()) section += incident(space, m, h);
        if (is_tangent_hyperplane(X, static_cast<std::uint32_t>(h))) {
            ++tangent_planes;
            CHECK(section == 37);  // 1 + t * 18: a cone over a curve section
        } else {
            CHECK(section == 45);  // a full Hermitian surface
        }
    }
    CHECK(tangent_planes == 165);
}

TEST_CASE("line census over the order-four field") {
    auto field = make_field(2, 1);
    auto space = std::make_shared<const PointList>(3, field);
    const LineSet lines(*space);
    const auto X = hermitian_variety(3, field, space);
    const LineCensus got = line_census(X, lines);
    CHECK(got.generator == 27);
    CHECK(got.tangent == 90);
    CHECK(got.secant == 240);
    CHECK(got.total() == 357);
    const LineCensus want = line_census_expected(2);
    CHECK(want.generator == got.generator);
    CHECK(want.tangent == got.tangent);
    CHECK(want.secant == got.secant);
}

TEST_CASE("line census over the order-nine field") {
    auto field = make_field(3, 1);
    auto space = std::make_shared<const PointList>(3, field);
    const LineSet lines(*space);
    const auto X = hermitian_variety(3, field, space);
    const LineCensus got = line_census(X, lines);
    CHECK(got.generator == 112);
    CHECK(got.tangent == 1680);
    CHECK(got.secant == 5670);
    CHECK(got.total() == 7462);
    const LineCensus want = line_census_expected(3);
    CHECK(want.generator == got.generator);
    CHECK(want.tangent == got.tangent);
    CHECK(want.secant == got.secant);
}

TEST_CASE("line census closed forms at larger t") {
    const LineCensus c4 = line_census_expected(4);
    CHECK(c4.generator == 325);    // (t^3+1)(t+1)
    CHECK(c4.tangent == 13260);    // t(t^3+1)(t^2+1)(t-1)
    CHECK(c4.secant == 56576);     // t^4(t^2-t+1)(t^2+1)
    CHECK(c4.total() == LineSet::count(16));
}

TEST_CASE("classified line sections have the advertised sizes") {
    auto field = make_field(2, 1);
    auto space = std::make_shared<const PointList>(3, field);
    const LineSet lines(*space);
    const auto X = hermitian_variety(3, field, space);
    for (std::size_t l = 0; l < lines.size(); ++l) {
        std::size_t on = 0;
        for (const std::uint32_t p : lines.points_on(l)) on += X.points.contains(p);
        switch (classify_line(X, lines, static_cast<std::uint32_t>(l))) {
            case LineClass::Generator: CHECK(on == 5); break;
            case LineClass::Tangent: CHECK(on == 1); break;
            case LineClass::Secant: CHECK(on == 3); break;
        }
    }
}

TEST_CASE("quadric classification by example") {
    auto field = make_field(2, 1);
    const auto X = hermitian_variety(3, field);
    const PointList& space = *X.space;
    const Felt a = field->alpha();

    const Form pair = quadric_from_text_indices(space, {{{1, 1, 0, 0}, 1}});
    CHECK(zero_count(pair, space) == 37);
    CHECK(classify_quadric(pair, space) == QuadricClass::DistinctPlanePair);

    const Form repeated = quadric_from_text_indices(space, {{{2, 0, 0, 0}, 1}});
    CHECK(zero_count(repeated, space) == 21);
    CHECK(classify_quadric(repeated, space) == QuadricClass::RepeatedPlane);

    const Form cone =
        quadric_from_text_indices(space, {{{1, 1, 0, 0}, 1}, {{0, 0, 2, 0}, 1}});
    CHECK(zero_count(cone, space) == 21);
    CHECK(classify_quadric(cone, space) == QuadricClass::Cone);

    // x0^2 + x0 x1 + a x1^2 is irreducible, so the zero set is the line
    // x0 = x1 = 0.
    const Form line = quadric_from_text_indices(
        space, {{{2, 0, 0, 0}, 1}, {{1, 1, 0, 0}, 1}, {{0, 2, 0, 0}, a}});
    CHECK(zero_count(line, space) == 5);
    CHECK(classify_quadric(line, space) == QuadricClass::LineQuadric);

    const Form hyperbolic =
        quadric_from_text_indices(space, {{{1, 1, 0, 0}, 1}, {{0, 0, 1, 1}, 1}});
    CHECK(zero_count(hyperbolic, space) == 25);
    CHECK(classify_quadric(hyperbolic, space) == QuadricClass::Hyperbolic);

    const Form elliptic = quadric_from_text_indices(
        space, {{{1, 1, 0, 0}, 1}, {{0, 0, 2, 0}, 1}, {{0, 0, 1, 1}, 1}, {{0, 0, 0, 2}, a}});
    CHECK(zero_count(elliptic, space) == 17);
    CHECK(classify_quadric(elliptic, space) == QuadricClass::Elliptic);
}

TEST_CASE("full quadric census over the order-four field") {
    auto field = make_field(2, 1);
    const auto X = hermitian_variety(3, field);
    const QuadricCensus census = quadric_census(X, 3);
    CHECK(census.total() == 349525);
    CHECK(census.by_class[std::size_t(QuadricClass::RepeatedPlane)] == 85);
    CHECK(census.by_class[std::size_t(QuadricClass::DistinctPlanePair)] == 3570);
    CHECK(census.by_class[std::size_t(QuadricClass::Cone)] == 85680);
    CHECK(census.by_class[std::size_t(QuadricClass::LineQuadric)] == 2142);
    CHECK(census.by_class[std::size_t(QuadricClass::Hyperbolic)] == 137088);
    CHECK(census.by_class[std::size_t(QuadricClass::Elliptic)] == 120960);
    // The widest elliptic section of X is 13, well under the stated bound
    // 2t^3 + 1 = 17; at this field size the bound is not attained.  The
    // largest nondegenerate sections instead come from hyperbolic quadrics,
    // 360 classes of which meet X in 21 points.
    CHECK(census.max_elliptic_section == 13);
    CHECK(census.max_elliptic_section <= 17);  // 2t^3 + 1
    CHECK(census.max_elliptic_section <= 18);  // 2(t^3 + 1)

    const QuadricCensus single = quadric_census(X, 1);
    CHECK(single.by_class == census.by_class);
    CHECK(single.max_elliptic_section == census.max_elliptic_section);
}

TEST_CASE("point set membership") {
    const PointSet s(10, {2, 3, 7});
    CHECK(s.size() == 3);
    CHECK(s.contains(2));
    CHECK(s.contains(7));
    CHECK(!s.contains(0));
    CHECK(!s.contains(9));
}

#include "hermcode/report.hpp"

#include "hermcode/formtext.hpp"

namespace hermcode {

ordered_json field_info_json(const FieldSpec& field) {
    ordered_json j;
    j["p"] = field.characteristic();
    j["a"] = field.extension_exponent();
    j["t"] = field.subfield_order();
    j["q"] = field.order();
    j["subfield_modulus"] = field.subfield_modulus();
    ordered_json ext = ordered_json::array();
    for (Felt c : field.extension_modulus()) ext.push_back(field.element_name(c));
    j["extension_modulus"] = std::move(ext);
    j["alpha"] = field.element_name(field.alpha());
    const auto [c1, c2, c3] = field.hermitian_quadratic_coeffs();
    j["norm_quadratic"] = {field.element_name(c1), field.element_name(c2),
                           field.element_name(c3)};
    return j;
}

ordered_json code_info_json(const FunctionalCode& code) {
    ordered_json j;
    j["n"] = code.variety().n;
    j["h"] = code.degree();
    j["q"] = code.field().order();
    j["length"] = code.length();
    j["dimension"] = code.rank();
    j["full_dimension"] = code.full_dimension();
    j["injective"] = code.injective();
    return j;
}

ordered_json spectrum_json(const WeightSpectrum& spectrum, const FunctionalCode& code,
                           std::optional<std::uint64_t> seed) {
    ordered_json j = code_info_json(code);
    j["mode"] = spectrum.exact ? "exhaustive" : "sampled";
    j["classes"] = spectrum.classes;
    j["kernel_dim"] = spectrum.kernel_dim;
    if (!spectrum.exact && seed) j["seed"] = *seed;
    ordered_json rows = ordered_json::array();
    for (const auto& [w, c] : spectrum.counts) rows.push_back({w, c});
    j["spectrum"] = std::move(rows);
    FormClassIndexer indexer(static_cast<int>(code.variety().n), code.degree(),
                             code.field().order());
    ordered_json wit = ordered_json::object();
    for (const auto& [w, ks] : spectrum.witnesses) {
        ordered_json forms = ordered_json::array();
        for (std::uint64_t k : ks)
            forms.push_back(form_to_string(
                indexer.form_at(k, static_cast<int>(code.variety().n), code.degree()),
                code.field()));
        wit[std::to_string(w)] = std::move(forms);
    }
    j["witnesses"] = std::move(wit);
    return j;
}

ordered_json line_census_json(const LineCensus& enumerated, const LineCensus& expected) {
    ordered_json j;
    j["contained"] = enumerated.generator;
    j["tangent"] = enumerated.tangent;
    j["secant"] = enumerated.secant;
    j["total"] = enumerated.total();
    j["formulas"] = {{"contained", expected.generator},
                     {"tangent", expected.tangent},
                     {"secant", expected.secant}};
    j["match"] = enumerated.generator == expected.generator &&
                 enumerated.tangent == expected.tangent &&
                 enumerated.secant == expected.secant;
    return j;
}

ordered_json quadric_census_json(const QuadricCensus& census, std::uint32_t t) {
    ordered_json j;
    for (auto cls :
         {QuadricClass::RepeatedPlane, QuadricClass::DistinctPlanePair, QuadricClass::Cone,
          QuadricClass::LineQuadric, QuadricClass::Hyperbolic, QuadricClass::Elliptic})
        j[to_string(cls)] = census.by_class[static_cast<std::size_t>(cls)];
    j["total"] = census.total();
    const std::uint64_t t3 = std::uint64_t(t) * t * t;
    j["elliptic_audit"] = {{"max_section", census.max_elliptic_section},
                           {"bound_sharp", 2 * t3 + 1},
                           {"bound_coarse", 2 * (t3 + 1)},
                           {"within_sharp", census.max_elliptic_section <= 2 * t3 + 1},
                           {"within_coarse", census.max_elliptic_section <= 2 * (t3 + 1)}};
    return j;
}

ordered_json divisor_json(const DivisorReport& report, const WeightSpectrum& spectrum) {
    ordered_json j;
    j["lambda"] = report.lambda;
    j["divisor"] = report.modulus;
    j["checked_weights"] = spectrum.counts.size();
    j["mode"] = spectrum.exact ? "exhaustive" : "sampled";
    j["all_divisible"] = report.all_divisible;
    ordered_json violations = ordered_json::array();
    if (!report.all_divisible) violations.push_back(report.first_offender);
    j["violations"] = std::move(violations);
    j["weight_gcd"] = report.weight_gcd;
    return j;
}

ordered_json affine_check_json(const AffineCheck& check, std::uint32_t t) {
    ordered_json j;
    j["affine_solutions"] = check.affine_solutions;
    j["projective_solutions"] = check.projective_solutions;
    j["section_size"] = check.section_size;
    j["scalar_factor"] = t + 1;
    j["identity_holds"] = check.identity_holds;
    return j;
}

ordered_json union_census_json(const UnionCensus& census) {
    ordered_json j;
    j["n"] = census.n;
    j["h"] = census.h;
    j["q"] = census.q;
    j["total_forms"] = census.total_forms;
    ordered_json cells = ordered_json::array();
    for (const auto& c : census.cells)
        cells.push_back({{"tangent_count", c.tangent_count},
                         {"axis_section", c.axis_section},
                         {"forms", c.forms},
                         {"weight", c.weight},
                         {"codewords", c.forms * (census.q - 1)}});
    j["cells"] = std::move(cells);
    ordered_json weights = ordered_json::array();
    for (const auto& [w, c] : census.codewords_by_weight()) weights.push_back({w, c});
    j["codewords_by_weight"] = std::move(weights);
    return j;
}

namespace {

ordered_json comparison_json(const CountComparison& c) {
    return {{"weight", c.weight},
            {"weight_in_census", c.weight_in_census},
            {"census_codewords", c.census_codewords},
            {"closed_form", c.closed_form},
            {"closed_form_matches", c.closed_form_matches},
            {"factor_product", c.factor_product},
            {"factor_product_matches", c.factor_product_matches}};
}

}  // namespace

ordered_json fourth_fifth_json(const FourthFifthReport& report) {
    ordered_json j;
    j["fourth"] = comparison_json(report.fourth);
    j["fifth"] = comparison_json(report.fifth);
    j["any_mismatch"] = report.any_mismatch();
    return j;
}

ordered_json conjecture_json(const ConjectureReport& report) {
    ordered_json j;
    j["n"] = report.n;
    j["h"] = report.h;
    j["t"] = report.t;
    j["mode"] = report.exhaustive ? "exhaustive" : "structured";
    j["union_census"] = union_census_json(report.census);
    j["spectrum_head"] = report.spectrum_head;
    j["expected_axis_section"] = report.expected_axis_section;
    j["min_cell_shape_ok"] = report.min_cell_shape_ok;
    j["part1"] = report.part1;
    j["part2"] = report.part2;
    j["part3"] = report.part3;
    return j;
}

std::string union_cells_csv(const UnionCensus& census) {
    std::string out = "tangent_count,axis_section,forms,weight,codewords\n";
    for (const auto& c : census.cells)
        out += std::to_string(c.tangent_count) + "," + std::to_string(c.axis_section) +
               "," + std::to_string(c.forms) + "," + std::to_string(c.weight) + "," +
               std::to_string(c.forms * (census.q - 1)) + "\n";
    return out;
}

}  // namespace hermcode

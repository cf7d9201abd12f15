#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "hermcode/census.hpp"
#include "hermcode/code.hpp"
#include "hermcode/divisibility.hpp"
#include "hermcode/field.hpp"
#include "hermcode/varieties.hpp"

namespace hermcode {

using ordered_json = nlohmann::ordered_json;

// All emitters keep a fixed key order and never include runtime facts like
// worker counts, so identical inputs serialize byte-identically.

ordered_json field_info_json(const FieldSpec& field);

ordered_json code_info_json(const FunctionalCode& code);

// Witnesses render as form strings; sampling parameters appear only in
// sampled mode.
ordered_json spectrum_json(const WeightSpectrum& spectrum, const FunctionalCode& code,
                           std::optional<std::uint64_t> seed = std::nullopt);

ordered_json line_census_json(const LineCensus& enumerated, const LineCensus& expected);

ordered_json quadric_census_json(const QuadricCensus& census, std::uint32_t t);

ordered_json divisor_json(const DivisorReport& report, const WeightSpectrum& spectrum);

ordered_json affine_check_json(const AffineCheck& check, std::uint32_t t);

ordered_json union_census_json(const UnionCensus& census);

ordered_json fourth_fifth_json(const FourthFifthReport& report);

ordered_json conjecture_json(const ConjectureReport& report);

std::string union_cells_csv(const UnionCensus& census);

}  // namespace hermcode

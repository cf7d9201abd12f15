// Command-line front end: constructs Hermitian varieties and their functional
// codes, enumerates or samples weight spectra, and runs the census-based
// claim checks.  Exit codes: 0 success, 1 usage or budget error, 2 when a
// report contains a finding (a count disagreeing with its predicted value or
// a failed structural claim).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "hermcode/acceptance.hpp"
#include "hermcode/census.hpp"
#include "hermcode/code.hpp"
#include "hermcode/divisibility.hpp"
#include "hermcode/errors.hpp"
#include "hermcode/field.hpp"
#include "hermcode/formtext.hpp"
#include "hermcode/projective.hpp"
#include "hermcode/report.hpp"
#include "hermcode/varieties.hpp"

namespace {

using hermcode::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFinding = 2;

unsigned default_threads() {
    if (const char* env = std::getenv("HERMCODE_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 512)
            return static_cast<unsigned>(v);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? std::min(hc, 8u) : 1u;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + out_path);
    os << text << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Functional codes on Hermitian varieties: construction, weight spectra, "
        "and brute-force checks of their counting claims"};
    // Long-only help: the short -h would shadow the --h degree option.
    app.set_help_flag("--help", "print usage");
    app.require_subcommand(1);

    // The base field F_t is given by --p and --a (t = p^a); every variety and
    // code lives over its quadratic extension F_{t^2}.
    unsigned p = 2, a = 1;
    unsigned n = 3;
    int h = 2;
    unsigned threads = default_threads();
    std::uint64_t samples = 100'000, seed = 1;
    std::uint64_t max_classes = 450'000'000, max_forms = 5'000'000;
    int witness_cap = -1;
    std::string spectrum_mode = "exhaustive", divisor_mode = "sampled", conjecture_mode = "census";
    std::string format = "json", form_text, out_path, tier = "default";
    int rc = kExitOk;

    const auto add_field = [&](CLI::App* sc) {
        sc->add_option("--p", p, "prime of the base field F_t")->capture_default_str();
        sc->add_option("--a", a, "exponent of the base field: t = p^a, codes live over F_{t^2}")
            ->check(CLI::Range(1u, 6u))
            ->capture_default_str();
    };
    const auto add_out = [&](CLI::App* sc) {
        sc->add_option("--out", out_path, "write the report to a file instead of stdout");
    };
    const auto add_threads = [&](CLI::App* sc) {
        sc->add_option("--threads", threads, "worker threads (HERMCODE_THREADS overrides the default)")
            ->check(CLI::Range(1u, 512u))
            ->capture_default_str();
    };
    const auto ambient = [&] { return hermcode::make_field(p, a); };
    const auto sub = [&](const char* name, const char* desc) {
        auto* sc = app.add_subcommand(name, desc);
        sc->set_help_flag("--help", "print usage");
        return sc;
    };

    auto* sc_field = sub("field-info", "structure and sample arithmetic of F_{t^2}");
    add_field(sc_field);
    add_out(sc_field);
    sc_field->callback([&] { emit(hermcode::field_info_json(*ambient()).dump(2), out_path); });

    auto* sc_points = sub("points", "point counts of the Hermitian variety in P^n");
    add_field(sc_points);
    sc_points->add_option("--n", n, "projective dimension")->check(CLI::Range(2u, 6u))
        ->capture_default_str();
    add_out(sc_points);
    sc_points->callback([&] {
        auto field = ambient();
        auto space = std::make_shared<const hermcode::PointList>(static_cast<int>(n), field);
        const auto X = hermcode::hermitian_variety(n, field, space);
        ordered_json j;
        j["n"] = n;
        j["t"] = field->subfield_order();
        j["q"] = field->order();
        j["projective_points"] = space->size();
        j["variety_points"] = X.size();
        j["closed_form"] = hermcode::hermitian_point_count(n, field->subfield_order());
        emit(j.dump(2), out_path);
    });

    auto* sc_code = sub("code-info", "length, dimension, and injectivity of the degree-h code");
    add_field(sc_code);
    sc_code->add_option("--n", n, "projective dimension")->check(CLI::Range(2u, 6u))
        ->capture_default_str();
    sc_code->add_option("--h", h, "form degree")->check(CLI::Range(1, 8))->capture_default_str();
    add_out(sc_code);
    sc_code->callback([&] {
        auto X = std::make_shared<const hermcode::HermitianVariety>(
            hermcode::hermitian_variety(n, ambient()));
        const hermcode::FunctionalCode code(X, h);
        emit(hermcode::code_info_json(code).dump(2), out_path);
    });

    auto* sc_spectrum = sub("spectrum", "weight spectrum, exhaustive over scalar classes or sampled");
    add_field(sc_spectrum);
    sc_spectrum->add_option("--n", n, "projective dimension")->check(CLI::Range(2u, 6u))
        ->capture_default_str();
    sc_spectrum->add_option("--h", h, "form degree")->check(CLI::Range(1, 8))->capture_default_str();
    sc_spectrum->add_option("--mode", spectrum_mode, "exhaustive or sampled")
        ->check(CLI::IsMember({"exhaustive", "sampled"}))
        ->capture_default_str();
    sc_spectrum->add_option("--samples", samples, "draws in sampled mode")->capture_default_str();
    sc_spectrum->add_option("--seed", seed, "sampling seed")->capture_default_str();
    sc_spectrum->add_option("--max-classes", max_classes, "budget for exhaustive enumeration")
        ->capture_default_str();
    sc_spectrum->add_option("--witnesses", witness_cap,
                            "cap witness forms per weight in the report (-1 = keep all recorded)");
    add_threads(sc_spectrum);
    add_out(sc_spectrum);
    sc_spectrum->callback([&] {
        auto X = std::make_shared<const hermcode::HermitianVariety>(
            hermcode::hermitian_variety(n, ambient()));
        const hermcode::FunctionalCode code(X, h);
        hermcode::WeightSpectrum sp =
            spectrum_mode == "sampled" ? hermcode::sampled_spectrum(code, samples, seed, threads)
                                       : hermcode::full_spectrum(code, threads, max_classes);
        if (witness_cap == 0) {
            sp.witnesses.clear();
        } else if (witness_cap > 0) {
            for (auto& [w, v] : sp.witnesses)
                if (v.size() > static_cast<std::size_t>(witness_cap))
                    v.resize(static_cast<std::size_t>(witness_cap));
        }
        const std::optional<std::uint64_t> used_seed =
            spectrum_mode == "sampled" ? std::optional<std::uint64_t>(seed) : std::nullopt;
        emit(hermcode::spectrum_json(sp, code, used_seed).dump(2), out_path);
    });

    auto* sc_lines = sub("lines", "line census of the Hermitian surface against its closed forms");
    add_field(sc_lines);
    add_out(sc_lines);
    sc_lines->callback([&] {
        auto field = ambient();
        auto space = std::make_shared<const hermcode::PointList>(3, field);
        const hermcode::LineSet lines(*space);
        const auto X = hermcode::hermitian_variety(3, field, space);
        const auto got = hermcode::line_census(X, lines);
        const auto want = hermcode::line_census_expected(field->subfield_order());
        emit(hermcode::line_census_json(got, want).dump(2), out_path);
        const bool match = got.generator == want.generator && got.tangent == want.tangent &&
                           got.secant == want.secant;
        if (!match) rc = kExitFinding;
    });

    auto* sc_quadrics = sub(
        "quadric-census", "classify every quadric class in P^3 and audit elliptic sections of X");
    add_field(sc_quadrics);
    add_threads(sc_quadrics);
    add_out(sc_quadrics);
    sc_quadrics->callback([&] {
        auto field = ambient();
        const auto X = hermcode::hermitian_variety(3, field);
        const auto census = hermcode::quadric_census(X, threads);
        const std::uint64_t t = field->subfield_order();
        emit(hermcode::quadric_census_json(census, static_cast<std::uint32_t>(t)).dump(2),
             out_path);
        if (census.max_elliptic_section > 2 * t * t * t + 1) rc = kExitFinding;
    });

    auto* sc_divisor = sub(
        "divisor", "check that t^lambda divides every observed nonzero weight");
    add_field(sc_divisor);
    sc_divisor->add_option("--n", n, "projective dimension")->check(CLI::Range(2u, 6u))
        ->capture_default_str();
    sc_divisor->add_option("--h", h, "form degree")->check(CLI::Range(2, 8))->capture_default_str();
    sc_divisor->add_option("--mode", divisor_mode, "sampled or exhaustive")
        ->check(CLI::IsMember({"exhaustive", "sampled"}))
        ->capture_default_str();
    sc_divisor->add_option("--samples", samples, "draws in sampled mode")->capture_default_str();
    sc_divisor->add_option("--seed", seed, "sampling seed")->capture_default_str();
    sc_divisor->add_option("--max-classes", max_classes, "budget for exhaustive enumeration")
        ->capture_default_str();
    add_threads(sc_divisor);
    add_out(sc_divisor);
    sc_divisor->callback([&] {
        auto field = ambient();
        auto X = std::make_shared<const hermcode::HermitianVariety>(
            hermcode::hermitian_variety(n, field));
        const hermcode::FunctionalCode code(X, h);
        const hermcode::WeightSpectrum sp =
            divisor_mode == "sampled" ? hermcode::sampled_spectrum(code, samples, seed, threads)
                                      : hermcode::full_spectrum(code, threads, max_classes);
        const auto rep = hermcode::verify_weight_divisibility(
            sp, field->subfield_order(), n, static_cast<unsigned>(h));
        emit(hermcode::divisor_json(rep, sp).dump(2), out_path);
        if (!rep.all_divisible) rc = kExitFinding;
    });

    auto* sc_transform = sub(
        "transform-check",
        "rewrite over the subfield and recount solutions: N affine, M = (N-1)/(t-1) projective");
    add_field(sc_transform);
    sc_transform->add_option("--n", n, "projective dimension")->check(CLI::Range(2u, 6u))
        ->capture_default_str();
    sc_transform->add_option("--h", h, "degree of --form")->check(CLI::Range(1, 8))
        ->capture_default_str();
    sc_transform->add_option("--form", form_text,
                             "slice by this degree-h form (default: the bare variety)");
    add_out(sc_transform);
    sc_transform->callback([&] {
        auto field = ambient();
        const auto X = hermcode::hermitian_variety(n, field);
        hermcode::AffineCheck ac;
        ordered_json j;
        if (form_text.empty()) {
            ac = hermcode::affine_check(X);
            j["sliced_by"] = nullptr;
        } else {
            const hermcode::Form f =
                hermcode::parse_form(form_text, static_cast<int>(n), h, *field);
            ac = hermcode::affine_check(X, f);
            j["sliced_by"] = hermcode::form_to_string(f, *field);
        }
        j["check"] = hermcode::affine_check_json(ac, field->subfield_order());
        emit(j.dump(2), out_path);
        if (!ac.identity_holds) rc = kExitFinding;
    });

    auto* sc_conjecture = sub(
        "conjecture",
        "census of hyperplane unions through a common axis, checked against the spectrum head");
    add_field(sc_conjecture);
    sc_conjecture->add_option("--n", n, "projective dimension")->check(CLI::Range(2u, 6u))
        ->capture_default_str();
    sc_conjecture->add_option("--h", h, "form degree (pairs for any n, higher h on the surface)")
        ->check(CLI::Range(2, 8))
        ->capture_default_str();
    sc_conjecture->add_option("--mode", conjecture_mode,
                              "census: structured forms only; exhaustive: compare with the full spectrum")
        ->check(CLI::IsMember({"census", "exhaustive"}))
        ->capture_default_str();
    sc_conjecture->add_option("--emit", format, "json or csv (census cells)")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sc_conjecture->add_option("--max-classes", max_classes, "budget for exhaustive enumeration")
        ->capture_default_str();
    sc_conjecture->add_option("--max-forms", max_forms, "budget for the union census")
        ->capture_default_str();
    add_threads(sc_conjecture);
    add_out(sc_conjecture);
    sc_conjecture->callback([&] {
        auto field = ambient();
        auto X = std::make_shared<const hermcode::HermitianVariety>(
            hermcode::hermitian_variety(n, field));
        const hermcode::FunctionalCode code(X, h);
        std::optional<hermcode::WeightSpectrum> sp;
        if (conjecture_mode == "exhaustive")
            sp = hermcode::full_spectrum(code, threads, max_classes);
        const auto rep =
            hermcode::conjecture_check(code, sp ? &*sp : nullptr, threads, max_forms);
        bool finding = !rep.all_parts();
        std::optional<hermcode::FourthFifthReport> ff;
        if (n == 3 && h == 2) {
            ff = hermcode::verify_fourth_fifth(rep.census, field->subfield_order());
            finding = finding || ff->any_mismatch();
        }
        if (format == "csv") {
            emit(hermcode::union_cells_csv(rep.census), out_path);
        } else {
            ordered_json j = hermcode::conjecture_json(rep);
            if (ff) j["pair_count_claims"] = hermcode::fourth_fifth_json(*ff);
            emit(j.dump(2), out_path);
        }
        if (finding) rc = kExitFinding;
    });

    auto* sc_accept = sub("acceptance", "run the twelve desk-scale checks");
    sc_accept->add_option("--tier", tier, "default, or heavy to include the q = 9 exhaustive run")
        ->check(CLI::IsMember({"default", "heavy"}))
        ->capture_default_str();
    add_threads(sc_accept);
    sc_accept->callback([&] {
        hermcode::AcceptanceOptions opts;
        opts.threads = threads;
        opts.heavy = tier == "heavy";
        const auto results = hermcode::run_acceptance(opts);
        std::size_t passed = 0;
        for (const auto& r : results) {
            std::cout << hermcode::format_result(r) << '\n';
            passed += r.pass;
        }
        std::cout << passed << " of " << results.size() << " criteria passed\n";
        if (!hermcode::all_passed(results)) rc = kExitFinding;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    } catch (const hermcode::BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return rc;
}

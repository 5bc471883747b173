// Command-line surface over the library: subdivision generation, labeling,
// validation, completely-labeled search, cover construction and
// verification, fixed-point approximation, fixtures, and SVG rendering.
// Instances travel as canonical JSON on stdin/stdout unless --in/--out name
// files. Exit codes: 0 success, 1 validation failure or invalid input,
// 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "sperner/fixtures.hpp"
#include "sperner/json_io.hpp"
#include "sperner/svg.hpp"

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
    if (path.empty())
        return std::string(std::istreambuf_iterator<char>(std::cin),
                           std::istreambuf_iterator<char>());
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot read '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(file),
                       std::istreambuf_iterator<char>());
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw std::invalid_argument("cannot write '" + path + "'");
    file << text;
}

sperner::InstanceDocument read_instance(const std::string& path) {
    return sperner::parse_instance(read_text(path));
}

const sperner::Labeling& require_labels(const sperner::InstanceDocument& doc) {
    if (!doc.labeling)
        throw std::invalid_argument("instance document carries no labels; run 'label' first");
    return *doc.labeling;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> parts;
    std::istringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) parts.push_back(item);
    return parts;
}

sperner::BPoint parse_point(const std::string& text, std::size_t n) {
    const auto parts = split_csv(text);
    if (parts.size() != n)
        throw UsageError("--point needs " + std::to_string(n) + " comma-separated rationals");
    std::vector<sperner::Rational> coords;
    coords.reserve(n);
    try {
        for (const std::string& part : parts) coords.push_back(sperner::parse_rational(part));
        return sperner::BPoint(std::move(coords));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--point: ") + e.what());
    }
}

int report_exit(const sperner::ValidationReport& report, const std::string& out) {
    write_text(out, sperner::report_to_json(report));
    return report.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact simplicial subdivisions, Sperner labelings, and KKM-style covers"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string in_path, out_path;
    app.add_option("--in", in_path, "read the instance document from a file instead of stdin")
        ->capture_default_str();
    app.add_option("--out", out_path, "write output to a file instead of stdout")
        ->capture_default_str();

    int exit_code = 0;

    // gen-subdivision
    std::size_t gen_n = 3, gen_m = 1;
    std::string gen_scheme = "edgewise";
    auto* gen = app.add_subcommand("gen-subdivision", "generate a subdivision of the simplex");
    gen->add_option("--n", gen_n, "ambient dimension (number of coordinates)")->required();
    gen->add_option("--m", gen_m,
                    "edgewise resolution, or refinement rounds for the barycentric scheme")
        ->required();
    gen->add_option("--scheme", gen_scheme, "edgewise|barycentric")
        ->check(CLI::IsMember({"edgewise", "barycentric"}));
    gen->callback([&] {
        sperner::Subdivision sub = sperner::edgewise_subdivision(gen_n, gen_scheme == "edgewise" ? gen_m : 1);
        if (gen_scheme == "barycentric")
            for (std::size_t round = 0; round < gen_m; ++round)
                sub = sperner::barycentric_refine(sub);
        write_text(out_path, sperner::instance_to_json(sub));
    });

    // label
    std::uint64_t label_seed = 0;
    std::string label_map;
    auto* label = app.add_subcommand("label", "attach a Sperner labeling to an instance");
    auto* seed_opt = label->add_option("--seed", label_seed, "seeded random labeling");
    auto* map_opt = label->add_option("--map", label_map,
                                      "labeling induced by a built-in map "
                                      "(identity|rotate|const-e1)");
    seed_opt->excludes(map_opt);
    label->callback([&] {
        if (!*seed_opt && !*map_opt) throw UsageError("label: need --seed or --map");
        const auto doc = read_instance(in_path);
        sperner::Labeling labeling =
            *seed_opt ? sperner::random_sperner_labeling(doc.subdivision, label_seed)
                      : sperner::labeling_from_map(doc.subdivision,
                                                   sperner::builtin_map(label_map).map);
        write_text(out_path, sperner::instance_to_json(doc.subdivision, &labeling));
    });

    // validate
    std::string validate_mode = "full";
    auto* val = app.add_subcommand("validate", "check subdivision (and labeling) invariants");
    val->add_option("--mode", validate_mode, "fast|full")
        ->check(CLI::IsMember({"fast", "full"}));
    val->callback([&] {
        const auto doc = read_instance(in_path);
        const auto mode =
            validate_mode == "fast" ? sperner::CheckMode::Fast : sperner::CheckMode::Full;
        sperner::ValidationReport report = sperner::validate(doc.subdivision, mode);
        if (doc.labeling) {
            const auto lr = sperner::validate_labeling(doc.subdivision, *doc.labeling);
            for (const auto& v : lr.violations) report.add(v.kind, v.ids, v.detail);
        }
        exit_code = report_exit(report, out_path);
    });

    // find-cl
    auto* find = app.add_subcommand("find-cl", "list the completely labeled cells");
    find->callback([&] {
        const auto doc = read_instance(in_path);
        const auto report =
            sperner::find_completely_labeled(doc.subdivision, require_labels(doc));
        write_text(out_path, sperner::clreport_to_json(report));
    });

    // build-cover
    auto* build = app.add_subcommand("build-cover", "build the cover sets from a labeled instance");
    build->callback([&] {
        const auto doc = read_instance(in_path);
        write_text(out_path,
                   sperner::cover_to_json(sperner::build_cover(doc.subdivision,
                                                               require_labels(doc))));
    });

    // member
    int member_label = 0;
    std::string member_point;
    auto* mem = app.add_subcommand("member", "test a point for cover-set membership");
    mem->add_option("--label", member_label, "cover set index, 1..n")->required();
    mem->add_option("--point", member_point, "comma-separated rationals, e.g. 1/2,1/3,1/6")
        ->required();
    mem->callback([&] {
        const auto doc = read_instance(in_path);
        const auto cover = sperner::build_cover(doc.subdivision, require_labels(doc));
        const auto x = parse_point(member_point, doc.subdivision.n());
        const auto witness = sperner::member(cover, doc.subdivision, member_label, x);
        sperner::Json out;
        out["member"] = witness.has_value();
        if (witness) out["witness"] = sperner::witness_to_json_value(*witness);
        write_text(out_path, out.dump() + "\n");
    });

    // verify-cover
    bool verify_cert = false, verify_sample = false;
    std::string verify_J;
    std::size_t verify_denom = 1;
    auto* verify = app.add_subcommand("verify-cover", "verify the covering property");
    verify->add_flag("--cert", verify_cert, "check the certificate premises");
    verify->add_flag("--sample", verify_sample, "check a rational grid on one face");
    verify->add_option("--J", verify_J, "face index set, e.g. 1,2");
    verify->add_option("--denom", verify_denom, "grid denominator for --sample");
    verify->callback([&] {
        if (verify_cert == verify_sample)
            throw UsageError("verify-cover: need exactly one of --cert or --sample");
        const auto doc = read_instance(in_path);
        const auto& labeling = require_labels(doc);
        const auto cover = sperner::build_cover(doc.subdivision, labeling);
        if (verify_cert) {
            exit_code = report_exit(
                sperner::verify_covering_certificate(cover, doc.subdivision, labeling), out_path);
            return;
        }
        if (verify_J.empty()) throw UsageError("verify-cover --sample: need --J");
        std::vector<int> indices;
        try {
            for (const std::string& part : split_csv(verify_J)) indices.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw UsageError("verify-cover: --J must be comma-separated integers");
        }
        const sperner::FaceIndexSet J(indices, doc.subdivision.n());
        exit_code = report_exit(
            sperner::verify_covering_sampled(cover, doc.subdivision, J, verify_denom), out_path);
    });

    // intersect
    auto* intersect = app.add_subcommand(
        "intersect", "construct a point of the intersection of all cover sets");
    intersect->callback([&] {
        const auto doc = read_instance(in_path);
        write_text(out_path,
                   sperner::intersection_to_json(
                       sperner::intersection_point(doc.subdivision, require_labels(doc))));
    });

    // extract
    std::string extract_point;
    auto* extract =
        app.add_subcommand("extract", "extract a completely labeled cell from a point");
    extract->add_option("--point", extract_point, "comma-separated rationals")->required();
    extract->callback([&] {
        const auto doc = read_instance(in_path);
        const auto& labeling = require_labels(doc);
        const auto cover = sperner::build_cover(doc.subdivision, labeling);
        const auto x = parse_point(extract_point, doc.subdivision.n());
        const sperner::Cell cell =
            sperner::extract_cl_simplex(cover, doc.subdivision, labeling, x);
        sperner::Json out;
        out["cell"] = cell.vertices();
        write_text(out_path, out.dump() + "\n");
    });

    // naive-check
    auto* naive = app.add_subcommand(
        "naive-check", "flag vertices where the thresholdless cover construction fails");
    naive->callback([&] {
        const auto doc = read_instance(in_path);
        write_text(out_path, sperner::naive_report_to_json(sperner::naive_cover_check(
                                 doc.subdivision, require_labels(doc))));
    });

    // fixpoint
    std::string fp_map, fp_schedule;
    std::size_t fp_n = 3;
    auto* fixpoint =
        app.add_subcommand("fixpoint", "approximate a fixed point of a built-in map");
    fixpoint->add_option("--map", fp_map, "identity|rotate|const-e1")->required();
    fixpoint->add_option("--schedule", fp_schedule, "increasing resolutions, e.g. 2,4,8")
        ->required();
    fixpoint->add_option("--n", fp_n, "ambient dimension (default 3)");
    fixpoint->callback([&] {
        std::vector<std::size_t> schedule;
        try {
            for (const std::string& part : split_csv(fp_schedule))
                schedule.push_back(static_cast<std::size_t>(std::stoull(part)));
        } catch (const std::exception&) {
            throw UsageError("fixpoint: --schedule must be comma-separated integers");
        }
        const auto trace =
            sperner::approximate_fixed_point(sperner::builtin_map(fp_map), fp_n, schedule);
        std::string lines;
        for (const auto& step : trace) lines += sperner::fp_step_to_json(step);
        write_text(out_path, lines);
    });

    // render-svg
    int svg_overlay = 0;
    auto* render = app.add_subcommand("render-svg", "render a three-coordinate instance as SVG");
    render->add_option("--overlay", svg_overlay, "shade the pieces of one cover set (1..3)");
    render->callback([&] {
        const auto doc = read_instance(in_path);
        sperner::SvgOptions options;
        options.overlay_label = svg_overlay;
        write_text(out_path,
                   sperner::render_svg(doc.subdivision,
                                       doc.labeling ? &*doc.labeling : nullptr, options));
    });

    // fixture
    std::string fixture_name;
    auto* fixture = app.add_subcommand("fixture", "emit a built-in instance");
    fixture->add_option("name", fixture_name, "fixture name (fig1)")->required();
    fixture->callback([&] {
        if (fixture_name != "fig1") throw UsageError("unknown fixture '" + fixture_name + "'");
        const sperner::Labeling labeling = sperner::fig1_labeling();
        write_text(out_path, sperner::instance_to_json(sperner::fig1_subdivision(), &labeling));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const sperner::NotInIntersectionError& e) {
        sperner::ValidationReport report;
        report.add("not-in-intersection", {static_cast<std::size_t>(e.label())}, e.what());
        std::cout << sperner::report_to_json(report);
        return 1;
    } catch (const std::exception& e) {
        sperner::ValidationReport report;
        report.add("error", {}, e.what());
        std::cout << sperner::report_to_json(report);
        return 1;
    }
    return exit_code;
}

// pixoct: command-line front end for octagon/disc generation, measurement,
// proximity sweeps and verification.
//
// Exit codes: 0 success, 1 verification or I/O failure, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "pixoct/pixoct.hpp"

namespace fs = std::filesystem;
using namespace pixoct;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const fs::path& path, const std::string& bytes) {
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !out.write(bytes.data(), static_cast<std::streamsize>(bytes.size())))
        throw IoError("cannot write " + path.string());
}

PixelShape make_shape(const std::string& kind, int d) {
    if (kind == "disc")
        return make_disc(DiscSpec(d));
    return make_octagon(OctagonSpec(d));
}

/// "N" or "a..b".
std::pair<int, int> parse_range(const std::string& text, int default_lo) {
    try {
        if (const auto dots = text.find(".."); dots != std::string::npos)
            return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
        return {default_lo, std::stoi(text)};
    } catch (const std::logic_error&) {
        throw UsageError("bad range '" + text + "', expected N or A..B");
    }
}

struct PlanFlags {
    int max_octagon = 249;
    int slack = 7;
    std::string ratio = "0.83";
    unsigned threads = 1;

    SweepConfig config() const {
        SweepConfig cfg;
        cfg.d_o_max = max_octagon;
        cfg.slack_a = slack;
        try {
            cfg.ratio_k = parse_rational(ratio);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        try {
            cfg.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return cfg;
    }
};

void add_plan_flags(CLI::App* cmd, PlanFlags& f, bool with_threads = true) {
    cmd->add_option("--max-octagon", f.max_octagon, "Largest octagon diameter swept")->capture_default_str();
    cmd->add_option("--slack", f.slack, "Disc slack below d_o for small octagons")->capture_default_str();
    cmd->add_option("--ratio", f.ratio, "Lower bound ratio d_c/d_o for large octagons")->capture_default_str();
    if (with_threads)
        cmd->add_option("--threads", f.threads, "Worker threads (output is identical for any value)")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Disc-like octagon / pixelated disc geometry and Jaccard proximity tool"};
    app.require_subcommand(1);

    // gen
    std::string gen_kind;
    int gen_d = 0;
    std::string gen_out;
    std::string gen_ppm;
    int gen_scale = 1;
    auto* gen = app.add_subcommand("gen", "Generate a shape as a sorted cell list");
    gen->add_option("kind", gen_kind)->required()->check(CLI::IsMember({"disc", "octagon"}));
    gen->add_option("d", gen_d, "Diameter")->required();
    gen->add_option("--out", gen_out, "Cell list path (default: stdout)");
    gen->add_option("--ppm", gen_ppm, "Also write a PPM rendering");
    gen->add_option("--scale", gen_scale, "Image pixels per cell")->check(CLI::PositiveNumber);

    // measure
    std::string measure_kind;
    int measure_d = 0;
    auto* meas = app.add_subcommand("measure", "Area, perimeter and diameter of a shape");
    meas->add_option("kind", measure_kind)->required()->check(CLI::IsMember({"disc", "octagon"}));
    meas->add_option("d", measure_d, "Diameter")->required();

    // jaccard
    int jac_o = 0;
    int jac_c = 0;
    int precision = 6;
    PlanFlags jac_plan;
    auto* jac = app.add_subcommand("jaccard", "Jaccard distance of concentric octagon d_o and disc d_c");
    jac->add_option("d_o", jac_o)->required();
    jac->add_option("d_c", jac_c)->required();
    jac->add_option("--precision", precision)->check(CLI::Range(0, 18))->capture_default_str();
    add_plan_flags(jac, jac_plan, false);

    // sweep
    PlanFlags sweep_plan;
    int label_digits = 5;
    std::string out_dir = "out";
    auto* sweep = app.add_subcommand("sweep", "Compute the proximity matrix, graph and manifest");
    add_plan_flags(sweep, sweep_plan);
    sweep->add_option("--precision", precision)->check(CLI::Range(0, 18))->capture_default_str();
    sweep->add_option("--label-digits", label_digits)->check(CLI::Range(0, 18))->capture_default_str();
    sweep->add_option("--out-dir", out_dir)->capture_default_str();

    // nearest
    PlanFlags nearest_plan;
    std::optional<int> nearest_disc_d;
    std::optional<int> nearest_oct_d;
    auto* nearest = app.add_subcommand("nearest", "Nearest counterpart of a disc or an octagon");
    add_plan_flags(nearest, nearest_plan);
    auto* opt_disc = nearest->add_option("--disc", nearest_disc_d, "Disc diameter: report nearest octagon");
    auto* opt_oct = nearest->add_option("--octagon", nearest_oct_d, "Octagon diameter: report nearest disc");
    opt_disc->excludes(opt_oct);
    nearest->add_option("--precision", precision)->check(CLI::Range(0, 18))->capture_default_str();
    nearest->callback([&] {
        if (!nearest_disc_d && !nearest_oct_d)
            throw CLI::ValidationError("nearest", "one of --disc or --octagon is required");
    });

    // graph
    PlanFlags graph_plan;
    std::string graph_out;
    auto* graph = app.add_subcommand("graph", "Write the nearest-neighbor graph as Graphviz DOT");
    add_plan_flags(graph, graph_plan);
    graph->add_option("--label-digits", label_digits)->check(CLI::Range(0, 18))->capture_default_str();
    graph->add_option("--out", graph_out, "DOT path (default: stdout)");

    // inscribed
    std::string inscribed_range = "1..60";
    auto* inscribed = app.add_subcommand("inscribed", "Largest concentric disc inside each octagon");
    inscribed->add_option("--range", inscribed_range, "Octagon diameters, N or A..B")->capture_default_str();

    // render
    std::string render_kind;
    std::vector<int> render_ds;
    int render_scale = 4;
    std::string render_out;
    auto* render = app.add_subcommand("render", "Render a shape, or an octagon/disc overlay, as binary PPM");
    render->add_option("kind", render_kind)->required()->check(CLI::IsMember({"disc", "octagon", "overlay"}));
    render->add_option("diameters", render_ds, "d (disc/octagon) or d_o d_c (overlay)")->required();
    render->add_option("--scale", render_scale)->check(CLI::PositiveNumber)->capture_default_str();
    render->add_option("--out", render_out, "Output path")->required();

    // verify
    std::string verify_range_text = "250";
    auto* verify = app.add_subcommand("verify", "Check closed forms against measured octagons");
    verify->add_option("range", verify_range_text, "N or 1..N")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*gen) {
            const auto s = make_shape(gen_kind, gen_d);
            const auto text = io::write_cell_list(s, gen_kind, gen_d);
            if (gen_out.empty())
                std::cout << text;
            else
                write_file(gen_out, text);
            if (!gen_ppm.empty())
                write_file(gen_ppm, io::render_shape(s, {gen_scale, {}}));
            return exit_ok;
        }

        if (*meas) {
            const auto m = measure(make_shape(measure_kind, measure_d));
            std::cout << measure_kind << " d=" << measure_d << " area=" << m.area << " perimeter=" << m.perimeter
                      << " diameter=" << m.diameter;
            if (measure_kind == "octagon")
                std::cout << " type=" << closed_forms::octagon_type(measure_d) << " blocks=" << measure_d / 6;
            std::cout << "\n";
            return exit_ok;
        }

        if (*jac) {
            const auto cfg = jac_plan.config();
            const auto r = evaluate_pair(jac_o, jac_c);
            std::cout << "d_o=" << r.d_o << " d_c=" << r.d_c << " intersection=" << r.area_intersection
                      << " union=" << r.area_union << " jaccard=" << format_fraction(r.jaccard) << " "
                      << r.decimal(precision) << "\n";
            if (!in_plan(cfg, {jac_o, jac_c}))
                std::cout << "note: pair is outside the sweep plan\n";
            return exit_ok;
        }

        if (*sweep) {
            const auto cfg = sweep_plan.config();
            const auto m = run_sweep(cfg, sweep_plan.threads);
            const auto csv = io::write_matrix_csv(m, precision);
            const auto dot = io::write_graph_dot(build_graph(m), label_digits);
            const auto manifest = io::write_manifest(cfg, io::summarize(m, csv, dot, precision, label_digits));
            const fs::path dir(out_dir);
            write_file(dir / "proximity_matrix.csv", csv);
            write_file(dir / "proximity_graph.dot", dot);
            write_file(dir / "manifest.json", manifest);
            std::cout << "wrote " << m.size() << " records to " << dir.string() << "\n";
            return exit_ok;
        }

        if (*nearest) {
            const auto m = run_sweep(nearest_plan.config(), nearest_plan.threads);
            const auto n = nearest_disc_d ? nearest_octagon(m, *nearest_disc_d) : nearest_disc(m, *nearest_oct_d);
            std::cout << (nearest_disc_d ? "o" : "c") << n.diameter << " "
                      << format_decimal(n.jaccard, precision, Rounding::half_up);
            if (!n.tied.empty()) {
                std::cout << " tied=";
                for (std::size_t i = 0; i < n.tied.size(); ++i)
                    std::cout << (i ? "," : "") << n.tied[i];
            }
            std::cout << "\n";
            return exit_ok;
        }

        if (*graph) {
            const auto m = run_sweep(graph_plan.config(), graph_plan.threads);
            const auto dot = io::write_graph_dot(build_graph(m), label_digits);
            if (graph_out.empty())
                std::cout << dot;
            else
                write_file(graph_out, dot);
            return exit_ok;
        }

        if (*inscribed) {
            const auto [lo, hi] = parse_range(inscribed_range, 1);
            if (lo < 1 || hi < lo)
                throw UsageError("inscribed range must satisfy 1 <= A <= B");
            std::cout << "d_o,d_c_max,ratio,gap_to_2/sqrt5\n";
            for (int d = lo; d <= hi; ++d) {
                const auto rep = inscribed_max_disc(d);
                std::ostringstream gap;
                gap << std::fixed << std::setprecision(6) << rep.gap_to_euclidean();
                std::cout << rep.d_o << ',' << rep.d_c_max << ',' << format_decimal(rep.ratio, 6) << ','
                          << gap.str() << "\n";
            }
            return exit_ok;
        }

        if (*render) {
            const io::RenderStyle style{render_scale, {}};
            std::string bytes;
            if (render_kind == "overlay") {
                if (render_ds.size() != 2)
                    throw UsageError("overlay needs two diameters: d_o d_c");
                bytes = io::render_overlay(make_octagon(OctagonSpec(render_ds[0])), make_disc(DiscSpec(render_ds[1])),
                                           style);
            } else {
                if (render_ds.size() != 1)
                    throw UsageError(render_kind + " needs one diameter");
                bytes = io::render_shape(make_shape(render_kind, render_ds[0]), style);
            }
            write_file(render_out, bytes);
            return exit_ok;
        }

        if (*verify) {
            const auto [lo, hi] = parse_range(verify_range_text, 1);
            if (lo != 1 || hi < 2)
                throw UsageError("verify range must be 1..N with N >= 2");
            const auto rep = verify_range(hi);
            for (const auto& f : rep.failures)
                std::cout << "FAIL " << f << "\n";
            std::cout << (rep.ok() ? "OK" : "FAILED") << ": " << rep.checks << " checks over d = 1.." << hi << ", "
                      << rep.failures.size() << " failures\n";
            return rep.ok() ? exit_ok : exit_failure;
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    } catch (const std::invalid_argument& e) {
        // DomainError, ParityMismatch, UsageError, bad config.
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}

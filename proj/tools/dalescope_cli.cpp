// dalescope: quadrilateral-tiling propagation operations on PGM images.
//
//   dalescope apply    -i in.pgm -o out.pgm --op convex_hull4 [--ref r.pgm]
//   dalescope pipeline NAME -i in.pgm --out-dir DIR
//   dalescope describe -i in.pgm [--min-dale-area N]
//   dalescope selftest [--quick]

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dalescope/engine.hpp"
#include "dalescope/features.hpp"
#include "dalescope/kernels.hpp"
#include "dalescope/pgm.hpp"
#include "dalescope/pipelines.hpp"
#include "dalescope/selftest.hpp"
#include "dalescope/serialize.hpp"

namespace ds = dalescope;
namespace fs = std::filesystem;

namespace {

std::optional<long> env_max_passes() {
    const char* raw = std::getenv("DALESCOPE_MAX_PASSES");
    if (!raw || !*raw)
        return std::nullopt;
    try {
        long v = std::stol(raw);
        if (v < 1)
            throw ds::UsageError("DALESCOPE_MAX_PASSES must be positive");
        return v;
    } catch (const std::exception&) {
        throw ds::UsageError("DALESCOPE_MAX_PASSES is not a valid integer");
    }
}

ds::Schedule parse_schedule(const std::string& name, std::uint32_t seed) {
    if (name == "raster") return ds::Schedule::raster();
    if (name == "reverse") return ds::Schedule::reverse();
    if (name == "worklist") return ds::Schedule::worklist();
    if (name == "random") return ds::Schedule::random_fair(seed);
    throw ds::UsageError("unknown schedule '" + name + "'");
}

// Requantize to a smaller ordered set, the "levelized" presentation.
ds::Grid requantize(const ds::Grid& g, int levels) {
    if (levels == g.levels())
        return g;
    ds::Grid out(g.width(), g.height(), levels);
    for (std::size_t i = 0; i < g.cells().size(); ++i)
        out.cells()[i] = static_cast<ds::Level>(
            static_cast<long>(g.cells()[i]) * (levels - 1) / (g.levels() - 1));
    return out;
}

// Splits "name:arg" into the op name and an optional integer argument.
std::pair<std::string, std::optional<int>> split_op(const std::string& op) {
    auto pos = op.find(':');
    if (pos == std::string::npos)
        return {op, std::nullopt};
    try {
        return {op.substr(0, pos), std::stoi(op.substr(pos + 1))};
    } catch (const std::exception&) {
        throw ds::UsageError("bad op argument in '" + op + "'");
    }
}

int parse_diff_direction(const std::string& op) {
    auto pos = op.find(':');
    if (pos == std::string::npos || pos + 1 >= op.size())
        throw ds::UsageError("diff needs a direction, e.g. diff:e6");
    std::string d = op.substr(pos + 1);
    if (d.size() == 2 && d[0] == 'e' && d[1] >= '1' && d[1] <= '9')
        return d[1] - '0';
    throw ds::UsageError("diff direction must be e1..e9");
}

struct ApplyArgs {
    std::string in_path, out_path, op, ref_path;
    std::string schedule = "raster";
    std::uint32_t seed = 0;
    int border = 0;
    int levels = 0;
};

int cmd_apply(const ApplyArgs& args) {
    ds::Grid input = ds::read_pgm(args.in_path);
    if (args.levels)
        input = requantize(input, args.levels);
    std::optional<ds::Grid> ref;
    if (!args.ref_path.empty()) {
        ref = ds::read_pgm(args.ref_path);
        if (args.levels)
            ref = requantize(*ref, args.levels);
    }

    const int m = args.border;
    ds::Grid work = ds::pad(input, m);
    std::optional<ds::Grid> work_ref;
    if (ref)
        work_ref = ds::pad(*ref, m);

    ds::RunStats stats;
    ds::Grid result(1, 1);
    auto [name, arg] = split_op(args.op);

    if (name == "waterfall") {
        auto res = ds::run_waterfall(work, ds::border_cells(work));
        result = std::move(res.grid);
        stats = res.stats;
    } else if (name == "slope_ray") {
        result = ds::run_slope_ray(work, static_cast<ds::Level>(arg.value_or(5)));
    } else if (name == "diff") {
        result = ds::diff_directional(work, parse_diff_direction(args.op));
    } else if (name == "minus") {
        if (!work_ref)
            throw ds::UsageError("minus needs --ref");
        result = ds::minus_sat(work, *work_ref);
    } else if (name == "xor") {
        if (!work_ref)
            throw ds::UsageError("xor needs --ref");
        result = ds::xor_mask(work, *work_ref);
    } else if (name == "threshold") {
        if (!arg)
            throw ds::UsageError("threshold needs a value, e.g. threshold:4");
        result = ds::threshold(work, static_cast<ds::Level>(*arg));
    } else if (name == "amplify") {
        if (!arg)
            throw ds::UsageError("amplify needs a factor, e.g. amplify:3");
        result = ds::amplify(work, *arg);
    } else if (name == "box_blur") {
        result = ds::box_blur(work, arg.value_or(1));
    } else {
        const ds::KernelSchema& schema = ds::lookup_kernel(name);
        const ds::Grid* rp = nullptr;
        if (schema.needs_reference()) {
            if (!work_ref)
                throw ds::UsageError(schema.name + " needs --ref");
            rp = &*work_ref;
        }
        auto res = ds::run_fixpoint(work, schema, rp,
                                    parse_schedule(args.schedule, args.seed),
                                    env_max_passes());
        result = std::move(res.grid);
        stats = res.stats;
    }

    result = ds::crop(result, m, m, input.width(), input.height());
    ds::write_pgm(args.out_path, result);
    std::cout << ds::to_json(stats).dump() << '\n';
    return 0;
}

int cmd_pipeline(const std::string& name, const std::string& in_path,
                 const std::string& out_dir, int margin) {
    ds::Grid input = ds::read_pgm(in_path);
    auto stages = ds::run_pipeline(name, input, margin);
    fs::create_directories(out_dir);
    nlohmann::json manifest;
    manifest["pipeline"] = name;
    manifest["input"] = in_path;
    manifest["stages"] = nlohmann::json::array();
    for (const auto& stage : stages) {
        fs::path file = fs::path(out_dir) / (stage.tag + ".pgm");
        ds::write_pgm(file, stage.image);
        manifest["stages"].push_back({{"tag", stage.tag},
                                      {"file", file.filename().string()},
                                      {"stats", ds::to_json(stage.stats)}});
    }
    fs::path mpath = fs::path(out_dir) / "manifest.json";
    std::ofstream mout(mpath);
    mout << manifest.dump(2) << '\n';
    if (!mout)
        throw ds::IoError("cannot write " + mpath.string());
    std::cout << "wrote " << stages.size() << " stages to " << out_dir << '\n';
    return 0;
}

int cmd_describe(const std::string& in_path, int min_dale_area, int margin) {
    ds::Grid input = ds::read_pgm(in_path);
    ds::ComponentMap comps = ds::label_components(input, ds::Connectivity::Eight, 0);
    nlohmann::json out = nlohmann::json::array();
    for (int id = 1; id <= comps.count; ++id) {
        ds::Grid part = ds::extract_component(input, comps, id);
        ds::FeatureDescriptor desc = ds::glyph_descriptor(part, min_dale_area, margin);
        desc.component_id = id;
        out.push_back(ds::to_json(desc));
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_selftest(bool quick) {
    ds::SelftestReport report = ds::run_selftest(quick);
    for (const auto& line : report.lines) {
        const char* tag = line.informational ? "INFO" : (line.pass ? "PASS" : "FAIL");
        std::cout << '[' << tag << "] " << line.name;
        if (!line.detail.empty())
            std::cout << ": " << line.detail;
        std::cout << '\n';
    }
    std::cout << (report.all_pass() ? "selftest passed" : "selftest FAILED") << '\n';
    return report.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Propagation operations on quadrilateral tilings"};
    app.require_subcommand(1);

    ApplyArgs apply_args;
    auto* apply = app.add_subcommand("apply", "Run one operation to fixpoint");
    apply->add_option("-i,--input", apply_args.in_path, "input PGM")->required();
    apply->add_option("-o,--output", apply_args.out_path, "output PGM")->required();
    apply->add_option("--op", apply_args.op,
                      "kernel name, or waterfall | slope_ray[:peak] | diff:eN | "
                      "minus | xor | threshold:t | amplify:k | box_blur:r")
        ->required();
    apply->add_option("--ref", apply_args.ref_path, "reference PGM (guarded/binary ops)");
    apply->add_option("--border", apply_args.border, "background margin to pad (cells)")
        ->check(CLI::NonNegativeNumber);
    apply->add_option("--schedule", apply_args.schedule, "raster|reverse|worklist|random");
    apply->add_option("--seed", apply_args.seed, "seed for --schedule random");
    apply->add_option("--levels", apply_args.levels, "requantize input to N levels")
        ->check(CLI::Range(2, 256));

    std::string pipe_name, pipe_in, pipe_out = "out";
    int pipe_margin = 2;
    auto* pipe = app.add_subcommand("pipeline", "Run a named figure cascade");
    pipe->add_option("name", pipe_name, "alphabet|hieroglyph|face|waterfall-border")
        ->required();
    pipe->add_option("-i,--input", pipe_in, "input PGM")->required();
    pipe->add_option("--out-dir", pipe_out, "output directory");
    pipe->add_option("--border", pipe_margin, "background margin to pad (cells)")
        ->check(CLI::NonNegativeNumber);

    std::string desc_in;
    int desc_area = 2, desc_margin = 2;
    auto* desc = app.add_subcommand("describe", "Topographic glyph descriptors");
    desc->add_option("-i,--input", desc_in, "input PGM")->required();
    desc->add_option("--min-dale-area", desc_area, "smallest dale component kept")
        ->check(CLI::PositiveNumber);
    desc->add_option("--border", desc_margin, "background margin to pad (cells)")
        ->check(CLI::NonNegativeNumber);

    bool quick = false;
    auto* self = app.add_subcommand("selftest", "Oracle sweeps and property suites");
    self->add_flag("--quick", quick, "sampled sweeps instead of exhaustive");

    try {
        app.parse(argc, argv);
        if (apply->parsed())
            return cmd_apply(apply_args);
        if (pipe->parsed())
            return cmd_pipeline(pipe_name, pipe_in, pipe_out, pipe_margin);
        if (desc->parsed())
            return cmd_describe(desc_in, desc_area, desc_margin);
        return cmd_selftest(quick);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return 2;
    } catch (const ds::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ds::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "deltacore/diagram_distance.hpp"
#include "deltacore/filtration.hpp"
#include "deltacore/flag_graph.hpp"
#include "deltacore/generators.hpp"
#include "deltacore/io.hpp"
#include "deltacore/persistence.hpp"
#include "deltacore/point_cloud.hpp"
#include "deltacore/subsample.hpp"

namespace {

using namespace deltacore;

struct CoreOptions {
    std::string input, output;
    double delta = 0.0, percentile = 0.0;
    bool has_delta = false, has_percentile = false;
};

struct PhOptions {
    std::string input, output;
    std::size_t max_degree = 1;
    double threshold = 0.0;
};

struct CompareOptions {
    std::string diagram_a, diagram_b;
};

struct BenchOptions {
    std::string input, output, scales;
    std::size_t max_dim = 2;
};

struct GenerateOptions {
    std::string shape, output;
    index_t n = 0;
    double noise = 0.0;
    std::uint64_t seed = 42;
};

struct PipelineOptions {
    std::string input, output;
    double delta = 0.0, percentile = 0.0;
    bool has_delta = false, has_percentile = false;
    std::size_t max_degree = 1;
    double threshold = 0.0;
    std::uint64_t seed = 42;
};

double resolve_delta(const PointCloud& cloud, bool has_delta, double delta, bool has_percentile,
                     double percentile) {
    if (has_delta == has_percentile)
        throw std::invalid_argument("provide exactly one of --delta and --percentile");
    return has_delta ? delta : delta_from_percentile(cloud, percentile);
}

void run_core(const CoreOptions& opt) {
    const PointCloud cloud = read_point_cloud(std::filesystem::path(opt.input));
    const double delta =
        resolve_delta(cloud, opt.has_delta, opt.delta, opt.has_percentile, opt.percentile);
    const CoreResult core = delta_core(cloud, delta);
    const PointCloud subsample = cloud.subset(core.surviving);
    write_point_cloud(std::filesystem::path(opt.output), subsample,
                      {"delta-core at delta=" + format_double(delta) + "; surviving " +
                       std::to_string(core.surviving.size()) + " of " +
                       std::to_string(cloud.size())});
    std::cout << cloud.size() << ',' << core.surviving.size() << ',' << core.sweeps << "\n";
}

void run_ph(const PhOptions& opt) {
    const PointCloud cloud = read_point_cloud(std::filesystem::path(opt.input));
    const Filtration filtration = vr_filtration(cloud, opt.max_degree + 1, opt.threshold);
    const PersistenceDiagram diagram = persistent_homology(filtration, opt.max_degree);
    write_diagram_csv(std::filesystem::path(opt.output), diagram);
    const SimplexCounts counts = simplex_count(filtration);
    std::cout << "simplices=" << counts.total << "\n";
}

const std::vector<Interval>& degree_slice(const PersistenceDiagram& diagram, std::size_t q) {
    static const std::vector<Interval> empty;
    return q < diagram.degrees.size() ? diagram.degrees[q] : empty;
}

void run_compare(const CompareOptions& opt) {
    const PersistenceDiagram a = read_diagram_csv(std::filesystem::path(opt.diagram_a));
    const PersistenceDiagram b = read_diagram_csv(std::filesystem::path(opt.diagram_b));
    const std::size_t degrees = std::max(a.degrees.size(), b.degrees.size());
    std::cout << "degree,bottleneck,wasserstein1\n";
    for (std::size_t q = 0; q < degrees; ++q) {
        const auto& slice_a = degree_slice(a, q);
        const auto& slice_b = degree_slice(b, q);
        std::cout << q << ',' << format_double(bottleneck_distance(slice_a, slice_b)) << ','
                  << format_double(wasserstein1_distance(slice_a, slice_b)) << "\n";
    }
}

void run_bench(const BenchOptions& opt) {
    const PointCloud cloud = read_point_cloud(std::filesystem::path(opt.input));
    const std::vector<double> scales = parse_scale_list(opt.scales);
    const auto rows = core_reduction_table(cloud, scales, opt.max_dim);
    if (opt.output.empty()) {
        write_reduction_table_csv(std::cout, rows);
    } else {
        auto out = std::ofstream(opt.output);
        if (!out) throw io_error("cannot open " + opt.output + " for writing");
        write_reduction_table_csv(out, rows);
        if (!out) throw io_error("failed writing " + opt.output);
    }
}

void run_generate(const GenerateOptions& opt) {
    const PointCloud cloud = generate_shape(opt.shape, opt.n, opt.noise, opt.seed);
    write_point_cloud(std::filesystem::path(opt.output), cloud,
                      {shape_metadata(opt.shape, opt.n, opt.noise, opt.seed)});
    std::cout << "points=" << cloud.size() << "\n";
}

void run_pipeline(const PipelineOptions& opt) {
    const PointCloud cloud = read_point_cloud(std::filesystem::path(opt.input));
    const double delta =
        resolve_delta(cloud, opt.has_delta, opt.delta, opt.has_percentile, opt.percentile);
    const std::filesystem::path outdir(opt.output);
    std::filesystem::create_directories(outdir);

    const CoreResult core = delta_core(cloud, delta);
    const PointCloud core_cloud = cloud.subset(core.surviving);
    const std::vector<index_t> fps =
        fps_subsample(cloud, static_cast<index_t>(core.surviving.size()), opt.seed);
    const PointCloud fps_cloud = cloud.subset(fps);

    write_point_cloud(outdir / "core_points.txt", core_cloud,
                      {"delta-core at delta=" + format_double(delta)});
    write_point_cloud(outdir / "fps_points.txt", fps_cloud,
                      {"farthest-point sample, k=" + std::to_string(fps.size()) +
                       ", seed=" + std::to_string(opt.seed)});

    const auto diagram_of = [&](const PointCloud& points) {
        const Filtration filtration = vr_filtration(points, opt.max_degree + 1, opt.threshold);
        return persistent_homology(filtration, opt.max_degree);
    };
    const PersistenceDiagram full = diagram_of(cloud);
    const PersistenceDiagram core_diagram = diagram_of(core_cloud);
    const PersistenceDiagram fps_diagram = diagram_of(fps_cloud);
    write_diagram_csv(outdir / "original_diagram.csv", full);
    write_diagram_csv(outdir / "core_diagram.csv", core_diagram);
    write_diagram_csv(outdir / "fps_diagram.csv", fps_diagram);

    auto comparison = std::ofstream(outdir / "comparison.csv");
    if (!comparison) throw io_error("cannot open comparison.csv for writing");
    comparison << "method,n";
    for (std::size_t q = 0; q <= opt.max_degree; ++q)
        comparison << ",bottleneck_h" << q << ",wasserstein1_h" << q;
    comparison << "\n";
    const auto row = [&](const std::string& method, index_t n,
                         const PersistenceDiagram& diagram) {
        comparison << method << ',' << n;
        for (std::size_t q = 0; q <= opt.max_degree; ++q) {
            const auto& slice_full = degree_slice(full, q);
            const auto& slice = degree_slice(diagram, q);
            comparison << ',' << format_double(bottleneck_distance(slice_full, slice)) << ','
                       << format_double(wasserstein1_distance(slice_full, slice));
        }
        comparison << "\n";
    };
    row("original", cloud.size(), full);
    row("delta-core", core_cloud.size(), core_diagram);
    row("fps", fps_cloud.size(), fps_diagram);
    if (!comparison) throw io_error("failed writing comparison.csv");
    std::cout << "core_size=" << core_cloud.size() << " fps_size=" << fps_cloud.size() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"delta-core subsampling, persistence, and diagram comparison"};
    app.require_subcommand(1);

    CoreOptions core_opt;
    auto* core_cmd = app.add_subcommand("core", "compute the delta-core of a point cloud");
    core_cmd->add_option("--input", core_opt.input, "point-cloud file")->required();
    core_cmd->add_option("--output", core_opt.output, "surviving-points file")->required();
    core_cmd->add_option("--delta", core_opt.delta, "neighborhood radius");
    core_cmd->add_option("--percentile", core_opt.percentile,
                         "pick delta at this percentile of pairwise distances");

    PhOptions ph_opt;
    auto* ph_cmd = app.add_subcommand("ph", "persistent homology of a Vietoris-Rips filtration");
    ph_cmd->add_option("--input", ph_opt.input, "point-cloud file")->required();
    ph_cmd->add_option("--output", ph_opt.output, "diagram CSV")->required();
    ph_cmd->add_option("--max-dim", ph_opt.max_degree, "largest homology degree")->required();
    ph_cmd->add_option("--threshold", ph_opt.threshold, "filtration threshold")->required();

    CompareOptions compare_opt;
    auto* compare_cmd = app.add_subcommand("compare", "bottleneck and Wasserstein-1 per degree");
    compare_cmd->add_option("diagram_a", compare_opt.diagram_a, "first diagram CSV")->required();
    compare_cmd->add_option("diagram_b", compare_opt.diagram_b, "second diagram CSV")->required();

    BenchOptions bench_opt;
    auto* bench_cmd =
        app.add_subcommand("bench-reduction", "flag-core simplex reduction across scales");
    bench_cmd->add_option("--input", bench_opt.input, "point-cloud file")->required();
    bench_cmd->add_option("--scales", bench_opt.scales, "comma-separated scale list")->required();
    bench_cmd->add_option("--max-dim", bench_opt.max_dim, "skeleton dimension for counting")
        ->required();
    bench_cmd->add_option("--output", bench_opt.output, "CSV path (default: stdout)");

    GenerateOptions generate_opt;
    auto* generate_cmd = app.add_subcommand("generate", "synthetic point clouds");
    generate_cmd
        ->add_option("--shape", generate_opt.shape, "sphere | torus | cube-heterogeneous")
        ->required();
    generate_cmd->add_option("--n", generate_opt.n, "number of points")->required();
    generate_cmd->add_option("--noise", generate_opt.noise, "Gaussian coordinate noise sigma");
    generate_cmd->add_option("--seed", generate_opt.seed, "RNG seed");
    generate_cmd->add_option("--output", generate_opt.output, "point-cloud file")->required();

    PipelineOptions pipeline_opt;
    auto* pipeline_cmd = app.add_subcommand(
        "pipeline", "delta-core and FPS subsampling with diagram comparison against the original");
    pipeline_cmd->add_option("--input", pipeline_opt.input, "point-cloud file")->required();
    pipeline_cmd->add_option("--output", pipeline_opt.output, "output directory")->required();
    pipeline_cmd->add_option("--delta", pipeline_opt.delta, "neighborhood radius");
    pipeline_cmd->add_option("--percentile", pipeline_opt.percentile,
                             "pick delta at this percentile of pairwise distances");
    pipeline_cmd->add_option("--max-dim", pipeline_opt.max_degree, "largest homology degree")
        ->required();
    pipeline_cmd->add_option("--threshold", pipeline_opt.threshold, "filtration threshold")
        ->required();
    pipeline_cmd->add_option("--seed", pipeline_opt.seed, "FPS seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    core_opt.has_delta = core_cmd->count("--delta") > 0;
    core_opt.has_percentile = core_cmd->count("--percentile") > 0;
    pipeline_opt.has_delta = pipeline_cmd->count("--delta") > 0;
    pipeline_opt.has_percentile = pipeline_cmd->count("--percentile") > 0;

    const auto started = std::chrono::steady_clock::now();
    std::string command;
    try {
        if (core_cmd->parsed()) {
            command = "core";
            run_core(core_opt);
        } else if (ph_cmd->parsed()) {
            command = "ph";
            run_ph(ph_opt);
        } else if (compare_cmd->parsed()) {
            command = "compare";
            run_compare(compare_opt);
        } else if (bench_cmd->parsed()) {
            command = "bench-reduction";
            run_bench(bench_opt);
        } else if (generate_cmd->parsed()) {
            command = "generate";
            run_generate(generate_opt);
        } else if (pipeline_cmd->parsed()) {
            command = "pipeline";
            run_pipeline(pipeline_opt);
        }
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
    std::fprintf(stderr, "%s: %.3fs wall (machine-dependent)\n", command.c_str(), elapsed.count());
    return 0;
}

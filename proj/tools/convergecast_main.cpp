// convergecast: generate, route, bound, solve and verify convergecast
// instances from the command line.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ccast/bounds.hpp"
#include "ccast/experiment.hpp"
#include "ccast/instance_io.hpp"
#include "ccast/oracle.hpp"
#include "ccast/trace_io.hpp"

namespace {

using namespace ccast;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void spill(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (!token.empty()) values.push_back(std::stoi(token));
    }
    return values;
}

OracleLimits limits_from_env() {
    OracleLimits limits;
    if (const char* env = std::getenv("CONVERGECAST_MAX_ORACLE_VERTICES")) {
        limits.max_vertices = std::atoi(env);
    }
    return limits;
}

struct GenOptions {
    std::string family;
    int n = 5;
    int rows = 2, cols = 2;
    int k = 2;
    double density = 0.3;
    std::uint64_t seed = 1;
    int ell = 2;
    std::string sizes;
    std::string sets;      // "1,2;2" style subset lists
    int ground = 0;
    std::string elements;  // "1,2,3"
    std::string shape = "neck-tree";
    std::string out = "-";
    std::string annotations;
};

int run_gen(const GenOptions& opt) {
    Instance instance;
    std::string annotations_text;
    if (opt.family == "line") {
        std::vector<int> sizes = opt.sizes.empty() ? std::vector<int>{} : parse_int_list(opt.sizes);
        instance = gen_line(opt.n, opt.k, sizes);
    } else if (opt.family == "grid") {
        instance = gen_grid(opt.rows, opt.cols, opt.k);
    } else if (opt.family == "tree") {
        instance = gen_random_tree(opt.n, opt.k, opt.seed);
    } else if (opt.family == "random") {
        instance = gen_random_connected(opt.n, opt.density, opt.k, opt.seed);
    } else if (opt.family == "gadget") {
        auto [built, spec] = gen_gadget(opt.ell);
        instance = std::move(built);
        annotations_text = write_annotations(spec);
    } else if (opt.family == "setcover") {
        SetCoverSpec spec;
        spec.ground_size = opt.ground;
        std::istringstream in(opt.sets);
        std::string subset;
        while (std::getline(in, subset, ';')) {
            spec.subsets.push_back(parse_int_list(subset));
        }
        instance = gen_setcover(spec);
    } else if (opt.family == "setpartition") {
        SetPartitionSpec spec;
        spec.elements = parse_int_list(opt.elements);
        spec.k = opt.k;
        spec.shape = opt.shape == "line" ? SetPartitionSpec::Shape::Line
                                         : SetPartitionSpec::Shape::NeckTree;
        instance = gen_setpartition(spec);
    } else {
        throw Error("unknown family: " + opt.family);
    }
    spill(opt.out, write_instance(instance));
    if (!annotations_text.empty()) {
        std::string path = opt.annotations.empty()
                               ? (opt.out == "-" ? "-" : opt.out + ".ann")
                               : opt.annotations;
        spill(path, annotations_text);
    }
    return 0;
}

struct RouteOptions {
    std::string instance_path;
    std::string algo = "spt";
    std::string policy = "min-id";
    std::string prefer;
    std::string annotations;
    std::uint64_t seed = 1;
    std::string out = "-";
};

int run_route(const RouteOptions& opt) {
    Instance instance = read_instance(slurp(opt.instance_path));
    HopTrace trace;
    if (opt.algo == "spt") {
        ParentPolicy policy = [&]() -> ParentPolicy {
            if (opt.policy == "min-id") return ParentPolicy::min_id();
            if (opt.policy == "max-id") return ParentPolicy::max_id();
            if (opt.policy == "random") return ParentPolicy::random(opt.seed);
            if (opt.policy == "round-robin") return ParentPolicy::round_robin();
            if (opt.policy == "prefer-set") {
                return ParentPolicy::prefer_set(parse_int_list(opt.prefer));
            }
            if (opt.policy == "prefer-spc") {
                GadgetSpec spec = read_annotations(slurp(opt.annotations), instance);
                return ParentPolicy::prefer_set(spec.spc_vertices());
            }
            throw Error("unknown policy: " + opt.policy);
        }();
        trace = run_spt(instance, build_spt(instance, policy));
    } else if (opt.algo == "sptg") {
        trace = run_sptg(instance);
    } else if (opt.algo == "basic") {
        trace = run_basic(instance, opt.seed);
    } else if (opt.algo == "gadget-opt") {
        GadgetSpec spec = read_annotations(slurp(opt.annotations), instance);
        trace = run_gadget_opt(instance, spec);
    } else {
        throw Error("unknown algo: " + opt.algo);
    }
    spill(opt.out, write_trace(trace));
    return 0;
}

int run_bounds(const std::string& instance_path, bool raw) {
    Instance instance = read_instance(slurp(instance_path));
    BoundReport report = compute_bounds(instance);
    std::cout << "n,k,lb1,lb2,lb3,partial_lb,grid_lb,best";
    if (raw) std::cout << ",lb2_raw,lb3_raw";
    std::cout << "\n";
    std::cout << instance.reading_count() << "," << instance.capacity_k << "," << report.lb1
              << "," << report.lb2 << "," << report.lb3 << "," << report.partial_lb << ",";
    if (report.grid_lb) std::cout << *report.grid_lb;
    std::cout << "," << report.best;
    if (raw) {
        char buffer[64];
        std::snprintf(buffer, sizeof(buffer), ",%.6f,%.6f", report.lb2_raw, report.lb3_raw);
        std::cout << buffer;
    }
    std::cout << "\n";
    return 0;
}

int run_oracle(const std::string& instance_path, int max_vertices, long long max_paths) {
    Instance instance = read_instance(slurp(instance_path));
    OracleLimits limits = limits_from_env();
    if (max_vertices > 0) limits.max_vertices = max_vertices;
    if (max_paths > 0) limits.max_paths_per_vertex = max_paths;
    OracleResult result;
    try {
        result = solve_exact(instance, limits);
    } catch (const LimitsExceeded& err) {
        std::cerr << "oracle refused: " << err.what()
                  << " (override with CONVERGECAST_MAX_ORACLE_VERTICES or --max-vertices)\n";
        return 2;
    }
    std::cout << "optimum " << result.optimum << "\n";
    for (VertexId v = 1; v < instance.graph.vertex_count(); ++v) {
        std::cout << "p " << v;
        for (VertexId u : result.witness.paths[static_cast<size_t>(v)]) {
            std::cout << " " << u;
        }
        std::cout << "\n";
    }
    return 0;
}

int run_verify(const std::string& instance_path, const std::string& trace_path) {
    Instance instance = read_instance(slurp(instance_path));
    HopTrace trace = read_trace(slurp(trace_path));
    Metrics metrics;
    try {
        metrics = validate_trace(instance, trace);
    } catch (const TraceError& err) {
        std::cerr << "invalid trace: " << err.what() << "\n";
        return 1;
    }
    std::cout << "total_hops " << metrics.total_hops << "\n"
              << "full_hops " << metrics.full_hops << "\n"
              << "partial_hops " << metrics.partial_hops << "\n"
              << "reading_distance_sum " << metrics.reading_distance_sum << "\n"
              << "shortest_path_property "
              << (check_shortest_path_property(instance, trace) ? "true" : "false") << "\n"
              << "elementary_property "
              << (check_elementary_property(instance, trace) ? "true" : "false") << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"convergecast routing workbench"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate an instance file");
    gen_cmd->add_option("--family", gen.family,
                        "line|grid|tree|random|gadget|setcover|setpartition")
        ->required();
    gen_cmd->add_option("--n", gen.n, "vertex count (line/tree/random)");
    gen_cmd->add_option("--rows", gen.rows, "grid rows");
    gen_cmd->add_option("--cols", gen.cols, "grid columns");
    gen_cmd->add_option("--k", gen.k, "packet capacity");
    gen_cmd->add_option("--density", gen.density, "extra-edge probability (random)");
    gen_cmd->add_option("--seed", gen.seed, "generator seed");
    gen_cmd->add_option("--ell", gen.ell, "gadget count (gadget)");
    gen_cmd->add_option("--sizes", gen.sizes, "comma list of reading sizes (line)");
    gen_cmd->add_option("--sets", gen.sets, "semicolon list of subsets, e.g. '1,2;2' (setcover)");
    gen_cmd->add_option("--ground", gen.ground, "ground set size (setcover)");
    gen_cmd->add_option("--elements", gen.elements, "comma list of elements (setpartition)");
    gen_cmd->add_option("--shape", gen.shape, "line|neck-tree (setpartition)");
    gen_cmd->add_option("--out", gen.out, "output path or - for stdout");
    gen_cmd->add_option("--annotations", gen.annotations, "annotation sidecar path (gadget)");

    RouteOptions route;
    CLI::App* route_cmd = app.add_subcommand("route", "run a routing algorithm");
    route_cmd->add_option("--instance", route.instance_path, "instance file")->required();
    route_cmd->add_option("--algo", route.algo, "spt|sptg|basic|gadget-opt");
    route_cmd->add_option("--policy", route.policy,
                          "min-id|max-id|random|round-robin|prefer-set|prefer-spc");
    route_cmd->add_option("--prefer", route.prefer, "comma list of preferred parents");
    route_cmd->add_option("--annotations", route.annotations,
                          "gadget sidecar (prefer-spc, gadget-opt)");
    route_cmd->add_option("--seed", route.seed, "seed for random policy");
    route_cmd->add_option("--out", route.out, "trace output path or -");

    std::string bounds_instance;
    bool bounds_raw = false;
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "print the lower bounds as CSV");
    bounds_cmd->add_option("--instance", bounds_instance, "instance file")->required();
    bounds_cmd->add_flag("--raw", bounds_raw, "also print the unrounded bounds");

    std::string oracle_instance;
    int oracle_max_vertices = 0;
    long long oracle_max_paths = 0;
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "exact optimum on a small instance");
    oracle_cmd->add_option("--instance", oracle_instance, "instance file")->required();
    oracle_cmd->add_option("--max-vertices", oracle_max_vertices, "override the vertex limit");
    oracle_cmd->add_option("--max-paths", oracle_max_paths, "override the path limit");

    std::string verify_instance, verify_trace;
    CLI::App* verify_cmd = app.add_subcommand("verify", "replay a trace file");
    verify_cmd->add_option("--instance", verify_instance, "instance file")->required();
    verify_cmd->add_option("--trace", verify_trace, "trace file")->required();

    ExperimentConfig config = default_random_config();
    std::string exp_family = "random", exp_sweep = "size", exp_values = "10,20,40";
    std::string exp_algos = "spt,basic", exp_out = "-", exp_plot, exp_format = "csv";
    std::string exp_policy = "min-id";
    bool exp_oracle = false, exp_no_bounds = false;
    CLI::App* exp_cmd = app.add_subcommand("experiment", "run a parameter sweep to CSV");
    exp_cmd->add_option("--family", exp_family, "random|grid|tree|gadget");
    exp_cmd->add_option("--sweep", exp_sweep, "size|density|k|ell");
    exp_cmd->add_option("--values", exp_values, "comma list of swept values");
    exp_cmd->add_option("--trials", config.trials, "trials per point");
    exp_cmd->add_option("--seed", config.base_seed, "base seed");
    exp_cmd->add_option("--algos", exp_algos, "comma list: spt,sptg,basic,gadget-opt");
    exp_cmd->add_option("--n", config.n, "fixed size");
    exp_cmd->add_option("--density", config.density, "fixed density");
    exp_cmd->add_option("--k", config.k, "fixed capacity");
    exp_cmd->add_option("--ell", config.ell, "fixed gadget count");
    exp_cmd->add_option("--policy", exp_policy, "SPT tie-break policy");
    exp_cmd->add_flag("--oracle", exp_oracle, "solve small instances exactly");
    exp_cmd->add_flag("--no-bounds", exp_no_bounds, "skip the lower bounds");
    exp_cmd->add_option("--format", exp_format, "output format (csv)");
    exp_cmd->add_option("--out", exp_out, "CSV path or -");
    exp_cmd->add_option("--plot", exp_plot, "also write a gnuplot script here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_cmd->parsed()) return run_gen(gen);
        if (route_cmd->parsed()) return run_route(route);
        if (bounds_cmd->parsed()) return run_bounds(bounds_instance, bounds_raw);
        if (oracle_cmd->parsed())
            return run_oracle(oracle_instance, oracle_max_vertices, oracle_max_paths);
        if (verify_cmd->parsed()) return run_verify(verify_instance, verify_trace);
        if (exp_cmd->parsed()) {
            if (exp_format != "csv") throw Error("unsupported format: " + exp_format);
            if (exp_family == "grid") config.family = ExperimentConfig::Family::Grid;
            else if (exp_family == "tree") config.family = ExperimentConfig::Family::Tree;
            else if (exp_family == "gadget") config.family = ExperimentConfig::Family::Gadget;
            else if (exp_family == "random") config.family = ExperimentConfig::Family::Random;
            else throw Error("unknown family: " + exp_family);
            if (exp_sweep == "size") config.sweep = ExperimentConfig::Sweep::Size;
            else if (exp_sweep == "density") config.sweep = ExperimentConfig::Sweep::Density;
            else if (exp_sweep == "k") config.sweep = ExperimentConfig::Sweep::K;
            else if (exp_sweep == "ell") config.sweep = ExperimentConfig::Sweep::Ell;
            else throw Error("unknown sweep: " + exp_sweep);
            config.values.clear();
            std::istringstream values_in(exp_values);
            std::string token;
            while (std::getline(values_in, token, ',')) {
                if (!token.empty()) config.values.push_back(std::stod(token));
            }
            config.algorithms.clear();
            std::istringstream algos_in(exp_algos);
            while (std::getline(algos_in, token, ',')) {
                if (!token.empty()) config.algorithms.push_back(token);
            }
            config.spt_policy = exp_policy;
            config.with_oracle = exp_oracle;
            config.with_bounds = !exp_no_bounds;
            config.oracle_limits = limits_from_env();
            std::string csv = run_experiment_csv(config);
            spill(exp_out, csv);
            if (!exp_plot.empty()) {
                spill(exp_plot, gnuplot_script(config, exp_out));
            }
            return 0;
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}

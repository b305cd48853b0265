#include "ccast/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

#include "ccast/bounds.hpp"

namespace ccast {

namespace {

std::string fmt(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6f", value);
    return buffer;
}

std::string fmt_value(double value) {
    if (value == std::floor(value) && std::abs(value) < 1e15) {
        return std::to_string(static_cast<long long>(value));
    }
    return fmt(value);
}

struct Cell {
    std::optional<double> value;
    bool integral = true;

    std::string text() const {
        if (!value) return "";
        if (integral) return std::to_string(static_cast<long long>(*value));
        return fmt(*value);
    }
};

struct Row {
    std::vector<Cell> cells;
    std::string status = "ok";
};

// Accumulates per-point means over the rows that succeeded.
struct MeanTracker {
    std::vector<double> sums;
    std::vector<long long> counts;

    void observe(const Row& row) {
        if (row.cells.size() > sums.size()) {
            sums.resize(row.cells.size(), 0.0);
            counts.resize(row.cells.size(), 0);
        }
        for (size_t i = 0; i < row.cells.size(); ++i) {
            if (row.cells[i].value) {
                sums[i] += *row.cells[i].value;
                ++counts[i];
            }
        }
    }

    Cell mean(size_t i) const {
        if (i >= sums.size() || counts[i] == 0) return {};
        return Cell{sums[i] / static_cast<double>(counts[i]), false};
    }
};

}  // namespace

std::string family_name(ExperimentConfig::Family family) {
    switch (family) {
        case ExperimentConfig::Family::Random: return "random";
        case ExperimentConfig::Family::Grid: return "grid";
        case ExperimentConfig::Family::Tree: return "tree";
        case ExperimentConfig::Family::Gadget: return "gadget";
    }
    return "?";
}

std::string sweep_name(ExperimentConfig::Sweep sweep) {
    switch (sweep) {
        case ExperimentConfig::Sweep::Size: return "size";
        case ExperimentConfig::Sweep::Density: return "density";
        case ExperimentConfig::Sweep::K: return "k";
        case ExperimentConfig::Sweep::Ell: return "ell";
    }
    return "?";
}

ExperimentConfig default_random_config() {
    ExperimentConfig config;
    config.family = ExperimentConfig::Family::Random;
    config.sweep = ExperimentConfig::Sweep::Size;
    config.values = {10, 20, 40};
    config.trials = 20;
    config.base_seed = 42;
    config.algorithms = {"spt", "basic"};
    config.with_bounds = true;
    config.with_oracle = false;
    config.density = 0.3;
    config.k = 4;
    return config;
}

std::string run_experiment_csv(const ExperimentConfig& config) {
    if (config.trials < 1) {
        throw Error("experiment needs at least one trial");
    }
    if (config.algorithms.empty()) {
        throw Error("experiment needs at least one algorithm");
    }
    const bool has_gadget_opt = [&] {
        for (const auto& a : config.algorithms) {
            if (a == "gadget-opt") return true;
        }
        return false;
    }();
    const bool ratio_vs_gadget_opt = has_gadget_opt && config.algorithms.front() != "gadget-opt";

    std::ostringstream out;
    out << "row,family,sweep,value,trial,seed,instance,n,k";
    for (const auto& algo : config.algorithms) {
        std::string column = algo == "gadget-opt" ? "gadget_opt" : algo;
        out << "," << column << "_total," << column << "_full," << column << "_partial";
    }
    if (config.with_bounds) out << ",lb1,lb2,lb3,grid_lb,best_lb";
    if (config.with_oracle) out << ",oracle";
    if (config.with_bounds) out << ",ratio_to_best_lb";
    if (config.with_oracle) out << ",ratio_to_oracle";
    if (ratio_vs_gadget_opt) out << ",ratio_to_gadget_opt";
    out << ",status\n";

    for (double value : config.values) {
        MeanTracker means;
        for (int trial = 0; trial < config.trials; ++trial) {
            std::uint64_t seed = config.base_seed + static_cast<std::uint64_t>(trial);
            Row row;
            std::string instance_tag = family_name(config.family) + "-" +
                                       sweep_name(config.sweep) + "=" + fmt_value(value) + "-t" +
                                       std::to_string(trial);
            Instance instance;
            GadgetSpec gadget_spec;
            bool is_gadget = config.family == ExperimentConfig::Family::Gadget;
            try {
                int n = config.n;
                double density = config.density;
                int k = config.k;
                int ell = config.ell;
                switch (config.sweep) {
                    case ExperimentConfig::Sweep::Size: n = static_cast<int>(value); break;
                    case ExperimentConfig::Sweep::Density: density = value; break;
                    case ExperimentConfig::Sweep::K: k = static_cast<int>(value); break;
                    case ExperimentConfig::Sweep::Ell: ell = static_cast<int>(value); break;
                }
                switch (config.family) {
                    case ExperimentConfig::Family::Random:
                        instance = gen_random_connected(n, density, k, seed);
                        break;
                    case ExperimentConfig::Family::Grid:
                        instance = gen_grid(n, n, k);
                        break;
                    case ExperimentConfig::Family::Tree:
                        instance = gen_random_tree(n, k, seed);
                        break;
                    case ExperimentConfig::Family::Gadget: {
                        auto built = gen_gadget(ell);
                        instance = std::move(built.first);
                        gadget_spec = std::move(built.second);
                        break;
                    }
                }
                row.cells.push_back(Cell{static_cast<double>(instance.reading_count()), true});
                row.cells.push_back(Cell{static_cast<double>(instance.capacity_k), true});

                std::vector<std::optional<Metrics>> algo_metrics;
                for (const auto& algo : config.algorithms) {
                    HopTrace trace;
                    if (algo == "spt") {
                        ParentPolicy policy = [&]() -> ParentPolicy {
                            if (config.spt_policy == "max-id") return ParentPolicy::max_id();
                            if (config.spt_policy == "random") return ParentPolicy::random(seed);
                            if (config.spt_policy == "round-robin")
                                return ParentPolicy::round_robin();
                            if (config.spt_policy == "prefer-spc") {
                                if (!is_gadget) throw Error("prefer-spc needs a gadget instance");
                                return ParentPolicy::prefer_set(gadget_spec.spc_vertices());
                            }
                            return ParentPolicy::min_id();
                        }();
                        trace = run_spt(instance, build_spt(instance, policy));
                    } else if (algo == "sptg") {
                        trace = run_sptg(instance);
                    } else if (algo == "basic") {
                        trace = run_basic(instance, seed);
                    } else if (algo == "gadget-opt") {
                        if (!is_gadget) throw Error("gadget-opt needs a gadget instance");
                        trace = run_gadget_opt(instance, gadget_spec);
                    } else {
                        throw Error("unknown algorithm: " + algo);
                    }
                    Metrics metrics = validate_trace(instance, trace);
                    algo_metrics.emplace_back(metrics);
                    row.cells.push_back(Cell{static_cast<double>(metrics.total_hops), true});
                    row.cells.push_back(Cell{static_cast<double>(metrics.full_hops), true});
                    row.cells.push_back(Cell{static_cast<double>(metrics.partial_hops), true});
                }

                std::optional<BoundReport> bounds;
                if (config.with_bounds) {
                    bounds = compute_bounds(instance);
                    row.cells.push_back(Cell{static_cast<double>(bounds->lb1), true});
                    row.cells.push_back(Cell{static_cast<double>(bounds->lb2), true});
                    row.cells.push_back(Cell{static_cast<double>(bounds->lb3), true});
                    if (bounds->grid_lb) {
                        row.cells.push_back(Cell{static_cast<double>(*bounds->grid_lb), true});
                    } else {
                        row.cells.push_back(Cell{});
                    }
                    row.cells.push_back(Cell{static_cast<double>(bounds->best), true});
                }
                std::optional<long long> oracle_optimum;
                if (config.with_oracle) {
                    if (instance.reading_count() <= config.oracle_limits.max_vertices) {
                        try {
                            oracle_optimum = solve_exact(instance, config.oracle_limits).optimum;
                        } catch (const LimitsExceeded&) {
                            // path explosion: leave the cell blank
                        }
                    }
                    if (oracle_optimum) {
                        row.cells.push_back(Cell{static_cast<double>(*oracle_optimum), true});
                    } else {
                        row.cells.push_back(Cell{});
                    }
                }
                double lead_total = static_cast<double>(algo_metrics.front()->total_hops);
                if (config.with_bounds) {
                    row.cells.push_back(
                        Cell{lead_total / static_cast<double>(bounds->best), false});
                }
                if (config.with_oracle) {
                    if (oracle_optimum) {
                        row.cells.push_back(
                            Cell{lead_total / static_cast<double>(*oracle_optimum), false});
                    } else {
                        row.cells.push_back(Cell{});
                    }
                }
                if (ratio_vs_gadget_opt) {
                    double opt_total = 0.0;
                    for (size_t i = 0; i < config.algorithms.size(); ++i) {
                        if (config.algorithms[i] == "gadget-opt") {
                            opt_total = static_cast<double>(algo_metrics[i]->total_hops);
                        }
                    }
                    row.cells.push_back(Cell{lead_total / opt_total, false});
                }
            } catch (const std::exception& err) {
                std::string reason = err.what();
                for (char& c : reason) {
                    if (c == ',' || c == '\n') c = ';';
                }
                row.cells.clear();  // error rows contribute nothing to the means
                row.status = "error:" + reason;
            }
            means.observe(row);

            out << "result," << family_name(config.family) << "," << sweep_name(config.sweep)
                << "," << fmt_value(value) << "," << trial << "," << seed << "," << instance_tag
                << ",";
            // error rows keep the full column count, with blank cells
            size_t expected = 2 + 3 * config.algorithms.size() +
                              (config.with_bounds ? 6u : 0u) + (config.with_oracle ? 2u : 0u) +
                              (ratio_vs_gadget_opt ? 1u : 0u);
            for (size_t i = 0; i < expected; ++i) {
                if (i > 0) out << ",";
                out << (i < row.cells.size() ? row.cells[i].text() : "");
            }
            out << "," << row.status << "\n";
        }
        out << "summary," << family_name(config.family) << "," << sweep_name(config.sweep) << ","
            << fmt_value(value) << ",mean," << config.base_seed << ","
            << family_name(config.family) << "-" << sweep_name(config.sweep) << "="
            << fmt_value(value) << ",";
        size_t expected = 2 + 3 * config.algorithms.size() + (config.with_bounds ? 6u : 0u) +
                          (config.with_oracle ? 2u : 0u) + (ratio_vs_gadget_opt ? 1u : 0u);
        for (size_t i = 0; i < expected; ++i) {
            if (i > 0) out << ",";
            out << means.mean(i).text();
        }
        out << ",ok\n";
    }
    return out.str();
}

std::string gnuplot_script(const ExperimentConfig& config, const std::string& csv_path) {
    std::ostringstream out;
    out << "set datafile separator ','\n";
    out << "set key outside\n";
    out << "set xlabel '" << sweep_name(config.sweep) << "'\n";
    out << "set ylabel 'hops'\n";
    out << "plot";
    size_t column = 10;  // first algo total column, 1-based: row..k are 9 columns
    bool first = true;
    for (const auto& algo : config.algorithms) {
        if (!first) out << ",";
        first = false;
        out << " '< grep ^summary " << csv_path << "' using 4:" << column << " with linespoints title '"
            << algo << "'";
        column += 3;
    }
    out << "\n";
    return out.str();
}

}  // namespace ccast

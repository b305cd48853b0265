#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccast/oracle.hpp"

namespace ccast {

// A sweep over one parameter of one instance family. Per (point, trial) the
// harness generates an instance with seed base_seed + trial, runs every
// configured algorithm, and emits one CSV result row; each point also gets
// one summary row of per-point means. Output is byte-identical across
// reruns with the same config.
struct ExperimentConfig {
    enum class Family { Random, Grid, Tree, Gadget };
    enum class Sweep { Size, Density, K, Ell };

    Family family = Family::Random;
    Sweep sweep = Sweep::Size;
    std::vector<double> values;  // swept values (integral for size/k/ell)
    int trials = 20;
    std::uint64_t base_seed = 1;
    // any of: spt, sptg, basic, gadget-opt
    std::vector<std::string> algorithms = {"spt", "basic"};
    bool with_bounds = true;
    bool with_oracle = false;
    OracleLimits oracle_limits;

    // fixed parameters for the dimensions not being swept
    int n = 20;
    double density = 0.3;
    int k = 4;
    int ell = 2;
    std::string spt_policy = "min-id";  // min-id | max-id | random | round-robin | prefer-spc
};

// The documented desk-scale configuration: random topology, sizes
// {10,20,40}, density 0.3, k=4, 20 trials, SPT vs BASIC with bounds.
ExperimentConfig default_random_config();

std::string run_experiment_csv(const ExperimentConfig& config);

// A small gnuplot script plotting the summary rows of the given CSV.
std::string gnuplot_script(const ExperimentConfig& config, const std::string& csv_path);

std::string family_name(ExperimentConfig::Family family);
std::string sweep_name(ExperimentConfig::Sweep sweep);

}  // namespace ccast

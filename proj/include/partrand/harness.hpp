#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "partrand/counting.hpp"

namespace partrand {

enum class SamplerMethod { Exact, Fristedt };
enum class ReferenceKind { OracleExact, LimitLaw };

// One Monte Carlo comparison experiment: sample N uniform partitions of n,
// apply the part-draw procedure, compare the empirical joint CDF on a grid
// against a reference.
struct ExperimentConfig {
    long n = 0;
    int procedure = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    SamplerMethod method = SamplerMethod::Exact;
    ReferenceKind reference = ReferenceKind::OracleExact;
    long max_first = 6;       // multiplicity grid 1..max_first (d for procedure 1)
    long max_s = 0;           // size grid 1..max_s; 0 means n (oracle) or t_max lattice (limit)
    double t_max = 8.0;       // limit-law reference: t grid up to t_max on the c/sqrt(n) lattice
    long enumeration_cap = 45;
    std::uint64_t fristedt_max_trials = 10000000;
};

struct ComparisonCell {
    long first = 0;       // m (procedures 2,3) or d (procedure 1)
    long s = 0;           // size threshold (integer lattice)
    double scaled = 0;    // t = c*s/sqrt(n) (procs 2,3) or v = 2 log s / log n (proc 1)
    double empirical = 0;
    double reference = 0;
    double abs_diff = 0;
};

struct ComparisonReport {
    ExperimentConfig config;
    std::vector<ComparisonCell> cells;
    double ks = 0;  // sup |empirical - reference| over the grid
    std::string reference_kind;
    double mean_trials = 1;  // rejection trials per accepted draw (Fristedt)

    std::string to_json() const;
    std::string to_csv() const;
};

ComparisonReport run_monte_carlo(const ExperimentConfig& cfg, const CountTable& table);

// Sup-norm distance between two functions tabulated on the same grid.
double ks_distance(const std::vector<double>& empirical, const std::vector<double>& reference);

} // namespace partrand

#include "partrand/harness.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "partrand/asymptotics.hpp"
#include "partrand/limitlaws.hpp"
#include "partrand/oracle.hpp"
#include "partrand/sampler.hpp"

namespace partrand {

namespace {

const char* method_name(SamplerMethod m) {
    return m == SamplerMethod::Exact ? "exact" : "fristedt";
}

const char* reference_name(ReferenceKind r) {
    return r == ReferenceKind::OracleExact ? "oracle-exact" : "limit-law";
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

ComparisonReport run_monte_carlo(const ExperimentConfig& cfg, const CountTable& table) {
    if (cfg.n < 1 || cfg.samples < 1) throw std::invalid_argument("run_monte_carlo: need n, samples >= 1");
    if (cfg.procedure < 1 || cfg.procedure > 3)
        throw std::invalid_argument("run_monte_carlo: procedure must be 1, 2 or 3");
    const double c = saddle_constant();
    const double sqrt_n = std::sqrt(static_cast<double>(cfg.n));
    long max_s = cfg.max_s;
    if (max_s <= 0) {
        max_s = cfg.reference == ReferenceKind::OracleExact
                    ? cfg.n
                    : static_cast<long>(std::floor(cfg.t_max * sqrt_n / c));
        max_s = std::max(max_s, 1L);
    }
    const long max_first = std::max(cfg.max_first, 1L);

    // Point-mass counts at (mu, sigma), clipped to the grid.
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_first * max_s), 0);
    auto count_at = [&](long f, long s) -> std::uint64_t& {
        return counts[static_cast<std::size_t>((f - 1) * max_s + (s - 1))];
    };

    RngStream rng(cfg.seed);
    double trials_total = 0;
    const ExactPartitionSampler exact_sampler =
        cfg.method == SamplerMethod::Exact ? ExactPartitionSampler(cfg.n)
                                           : ExactPartitionSampler(1);
    for (std::uint64_t i = 0; i < cfg.samples; ++i) {
        Partition p;
        if (cfg.method == SamplerMethod::Exact) {
            p = exact_sampler.sample(rng);
            trials_total += 1;
        } else {
            FristedtDraw fd = sample_uniform_fristedt(cfg.n, rng, cfg.fristedt_max_trials);
            p = std::move(fd.partition);
            trials_total += static_cast<double>(fd.trials);
        }
        const PartDraw d = draw_part(p, cfg.procedure, rng);
        if (d.mu <= max_first && d.sigma <= max_s) ++count_at(d.mu, d.sigma);
    }

    // Empirical joint CDF: cumulative in s, and in d for procedure 1.
    std::vector<double> emp(counts.size());
    for (long f = 1; f <= max_first; ++f) {
        std::uint64_t run = 0;
        for (long s = 1; s <= max_s; ++s) {
            run += count_at(f, s);
            emp[static_cast<std::size_t>((f - 1) * max_s + (s - 1))] =
                static_cast<double>(run) / static_cast<double>(cfg.samples);
        }
    }
    if (cfg.procedure == 1)
        for (long f = 2; f <= max_first; ++f)
            for (long s = 1; s <= max_s; ++s)
                emp[static_cast<std::size_t>((f - 1) * max_s + (s - 1))] +=
                    emp[static_cast<std::size_t>((f - 2) * max_s + (s - 1))];

    ComparisonReport report;
    report.config = cfg;
    report.config.max_s = max_s;
    report.reference_kind = reference_name(cfg.reference);
    report.mean_trials = trials_total / static_cast<double>(cfg.samples);

    const JointTable oracle_table =
        cfg.reference == ReferenceKind::OracleExact
            ? build_joint_table(table, cfg.n, cfg.procedure, max_first, max_s, cfg.enumeration_cap)
            : JointTable{};

    report.cells.reserve(emp.size());
    for (long f = 1; f <= max_first; ++f) {
        for (long s = 1; s <= max_s; ++s) {
            ComparisonCell cell;
            cell.first = f;
            cell.s = s;
            cell.empirical = emp[static_cast<std::size_t>((f - 1) * max_s + (s - 1))];
            if (cfg.reference == ReferenceKind::OracleExact) {
                cell.scaled = c * static_cast<double>(s) / sqrt_n;
                cell.reference = oracle_table.at(f, s).get_d();
            } else if (cfg.procedure == 1) {
                const double logn = std::log(static_cast<double>(cfg.n));
                cell.scaled = 2.0 * std::log(static_cast<double>(s)) / logn;
                cell.reference = F1(2.0 * std::log(static_cast<double>(f)) / logn, cell.scaled);
            } else {
                cell.scaled = c * static_cast<double>(s) / sqrt_n;
                cell.reference = cfg.procedure == 2 ? L2(f, cell.scaled) : L3(f, cell.scaled);
            }
            cell.abs_diff = std::fabs(cell.empirical - cell.reference);
            report.ks = std::max(report.ks, cell.abs_diff);
            report.cells.push_back(cell);
        }
    }
    return report;
}

double ks_distance(const std::vector<double>& empirical, const std::vector<double>& reference) {
    if (empirical.size() != reference.size())
        throw std::invalid_argument("ks_distance: grid mismatch");
    double ks = 0;
    for (std::size_t i = 0; i < empirical.size(); ++i)
        ks = std::max(ks, std::fabs(empirical[i] - reference[i]));
    return ks;
}

std::string ComparisonReport::to_json() const {
    nlohmann::json j;
    j["n"] = config.n;
    j["procedure"] = config.procedure;
    j["samples"] = config.samples;
    j["seed"] = config.seed;
    j["method"] = method_name(config.method);
    j["reference"] = reference_kind;
    j["ks"] = ks;
    j["mean_trials"] = mean_trials;
    auto arr = nlohmann::json::array();
    for (const auto& c : cells) {
        arr.push_back({{"first", c.first},
                       {"s", c.s},
                       {"scaled", c.scaled},
                       {"empirical", c.empirical},
                       {"reference", c.reference},
                       {"abs_diff", c.abs_diff}});
    }
    j["cells"] = std::move(arr);
    return j.dump();
}

std::string ComparisonReport::to_csv() const {
    std::string out =
        "# n=" + std::to_string(config.n) + " procedure=" + std::to_string(config.procedure) +
        " samples=" + std::to_string(config.samples) + " seed=" + std::to_string(config.seed) +
        " method=" + method_name(config.method) + " reference=" + reference_kind +
        " ks=" + fmt17(ks) + " mean_trials=" + fmt17(mean_trials) + "\n";
    out += "first,s,scaled,empirical,reference,abs_diff\n";
    for (const auto& c : cells)
        out += std::to_string(c.first) + "," + std::to_string(c.s) + "," + fmt17(c.scaled) + "," +
               fmt17(c.empirical) + "," + fmt17(c.reference) + "," + fmt17(c.abs_diff) + "\n";
    return out;
}

} // namespace partrand

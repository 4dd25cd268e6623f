#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "partrand/asymptotics.hpp"
#include "partrand/counting.hpp"
#include "partrand/errors.hpp"
#include "partrand/expectations.hpp"
#include "partrand/harness.hpp"
#include "partrand/limitlaws.hpp"
#include "partrand/oracle.hpp"
#include "partrand/sampler.hpp"
#include "partrand/series.hpp"

using namespace partrand;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 42;
    std::string format = "csv";
    std::string out;
};

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(g.out);
        if (!f) throw std::invalid_argument("cannot open output path: " + g.out);
        f << text;
    }
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string rational(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string partition_json(const Partition& p) {
    nlohmann::json mult = nlohmann::json::object();
    for (const auto& [j, a] : p.mult) mult[std::to_string(j)] = a;
    nlohmann::json obj;
    obj["n"] = p.n;
    obj["mult"] = std::move(mult);
    return obj.dump();
}

int run(int argc, char** argv) {
    CLI::App app{"Random-partition part sampling: exact counts, samplers, limit laws"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--seed", g.seed, "RNG seed (64-bit)");
    app.add_option("--format", g.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", g.out, "Output path (default stdout)");

    // count
    auto* count_cmd = app.add_subcommand("count", "Exact partition counts and probabilities");
    long count_n = -1;
    long table_limit = -1;
    std::vector<long> prob_args;
    count_cmd->add_option("--n", count_n, "Print p(N)");
    count_cmd->add_option("--table-limit", table_limit, "Count table limit (default n)");
    count_cmd->add_option("--prob", prob_args, "n j m: print Pr(alpha_j = m) as num/den")
        ->expected(3);

    // series
    auto* series_cmd = app.add_subcommand("series", "Generating-function identity checks");
    std::vector<long> lemma1_args, lemma2_args;
    series_cmd->add_option("--verify-lemma1", lemma1_args, "n d s")->expected(3);
    series_cmd->add_option("--verify-lemma2", lemma2_args, "n m s")->expected(3);

    // expect
    auto* expect_cmd = app.add_subcommand("expect", "Exact finite-n expectations");
    long expect_n = 0;
    std::string stat;
    double opt_d = 1, opt_s = 1;
    long opt_m = 1;
    expect_cmd->add_option("--n", expect_n)->required();
    expect_cmd->add_option("--stat", stat)->required()->check(CLI::IsMember({"zn", "yn", "zds", "yms"}));
    expect_cmd->add_option("--d", opt_d);
    expect_cmd->add_option("--s", opt_s);
    expect_cmd->add_option("--m", opt_m);

    // sample
    auto* sample_cmd = app.add_subcommand("sample", "Uniform random partitions (JSON lines)");
    long sample_n = 0;
    std::uint64_t sample_count = 1;
    std::string method = "exact";
    sample_cmd->add_option("--n", sample_n)->required();
    sample_cmd->add_option("--count", sample_count);
    sample_cmd->add_option("--method", method)->check(CLI::IsMember({"exact", "fristedt"}));

    // draw
    auto* draw_cmd = app.add_subcommand("draw", "Part draws (JSON lines)");
    long draw_n = 0;
    int draw_proc = 1;
    std::uint64_t draw_count = 1;
    draw_cmd->add_option("--n", draw_n)->required();
    draw_cmd->add_option("--proc", draw_proc)->required()->check(CLI::Range(1, 3));
    draw_cmd->add_option("--count", draw_count);
    draw_cmd->add_option("--method", method)->check(CLI::IsMember({"exact", "fristedt"}));

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "Exact joint tables by enumeration");
    long oracle_n = 0;
    int oracle_proc = 1;
    long oracle_max_m = 6, oracle_max_s = 0, oracle_cap = kDefaultEnumerationCap;
    oracle_cmd->add_option("--n", oracle_n)->required();
    oracle_cmd->add_option("--proc", oracle_proc)->required()->check(CLI::Range(1, 3));
    oracle_cmd->add_option("--max-m", oracle_max_m, "Multiplicity (or d) grid limit");
    oracle_cmd->add_option("--max-s", oracle_max_s, "Size grid limit (default n)");
    oracle_cmd->add_option("--cap", oracle_cap, "Enumeration cap");

    // limit
    auto* limit_cmd = app.add_subcommand("limit", "Limit-law values on a grid");
    int limit_proc = 2;
    long limit_max_m = 6;
    double limit_t_max = 6.0, limit_t_step = 0.1;
    double limit_uv_step = 0.1;
    limit_cmd->add_option("--proc", limit_proc)->required()->check(CLI::Range(1, 3));
    limit_cmd->add_option("--max-m", limit_max_m);
    limit_cmd->add_option("--t-max", limit_t_max);
    limit_cmd->add_option("--t-step", limit_t_step);
    limit_cmd->add_option("--uv-step", limit_uv_step, "Grid step for (u,v), procedure 1");

    // asymp
    auto* asymp_cmd = app.add_subcommand("asymp", "Saddle-point asymptotics vs exact values");
    std::string what;
    std::vector<long> asymp_ns;
    double asymp_u = 0.9, asymp_v = 0.9;
    asymp_cmd->add_option("--what", what)
        ->required()
        ->check(CLI::IsMember({"pn", "saddle", "phi", "ez", "ey"}));
    asymp_cmd->add_option("--n", asymp_ns, "One or more n values")->required();
    asymp_cmd->add_option("--u", asymp_u);
    asymp_cmd->add_option("--v", asymp_v);

    // simulate / compare
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo comparison vs a reference");
    ExperimentConfig cfg;
    std::string reference = "oracle";
    std::string sim_method = "exact";
    sim_cmd->add_option("--n", cfg.n)->required();
    sim_cmd->add_option("--proc", cfg.procedure)->required()->check(CLI::Range(1, 3));
    sim_cmd->add_option("--samples", cfg.samples)->required();
    sim_cmd->add_option("--reference", reference)->check(CLI::IsMember({"oracle", "limit"}));
    sim_cmd->add_option("--method", sim_method)->check(CLI::IsMember({"exact", "fristedt"}));
    sim_cmd->add_option("--max-m", cfg.max_first);
    sim_cmd->add_option("--max-s", cfg.max_s);
    sim_cmd->add_option("--t-max", cfg.t_max);
    sim_cmd->add_option("--cap", cfg.enumeration_cap);
    sim_cmd->add_option("--max-trials", cfg.fristedt_max_trials);

    auto* cmp_cmd = app.add_subcommand("compare", "Sup-norm distance between two report CSVs");
    std::string cmp_a, cmp_b;
    std::string cmp_col = "empirical";
    cmp_cmd->add_option("--a", cmp_a)->required();
    cmp_cmd->add_option("--b", cmp_b)->required();
    cmp_cmd->add_option("--column", cmp_col, "Column to compare (default empirical)");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    if (*count_cmd) {
        if (!prob_args.empty()) {
            const long n = prob_args[0];
            CountTable t = build_count_table(static_cast<std::size_t>(std::max(n, 0L)));
            std::cout << rational(prob_multiplicity(t, n, prob_args[1], prob_args[2])) << "\n";
        } else if (count_n >= 0) {
            const long lim = table_limit >= count_n ? table_limit : count_n;
            CountTable t = build_count_table(static_cast<std::size_t>(lim));
            std::cout << t.p(count_n).get_str() << "\n";
        } else {
            throw std::invalid_argument("count: give --n or --prob");
        }
        return 0;
    }

    if (*series_cmd) {
        std::ostringstream os;
        os << "identity,n,param,s,printed,direct,enumeration\n";
        if (!lemma1_args.empty()) {
            const long n = lemma1_args[0], d = lemma1_args[1], s = lemma1_args[2];
            const mpz_class printed = lemma1_coefficient(static_cast<std::size_t>(n), n, d, s);
            CountTable t = build_count_table(static_cast<std::size_t>(n));
            // Direct route under definition (indicator truncation): p(n)*E(Z_{d,s}).
            const mpq_class direct = expect_Zds(t, n, d, s) * t.p(n);
            // Enumeration of the hard-constrained ensemble the identity generates.
            mpz_class constrained = 0;
            enumerate_partitions(n, [&](const Partition& p) {
                for (const auto& [j, a] : p.mult)
                    if (j <= s && a > d) return;
                for (const auto& [j, a] : p.mult)
                    if (j <= s) constrained += a;
            });
            os << "lemma1," << n << "," << d << "," << s << "," << printed.get_str() << ","
               << mpq_class(direct).get_num().get_str() << "," << constrained.get_str() << "\n";
        }
        if (!lemma2_args.empty()) {
            const long n = lemma2_args[0], m = lemma2_args[1], s = lemma2_args[2];
            const mpz_class printed = lemma2_coefficient(static_cast<std::size_t>(n), n, m, s);
            CountTable t = build_count_table(static_cast<std::size_t>(n));
            const mpz_class direct = lemma2_direct(t, n, m, s);
            mpz_class enumerated = 0;
            enumerate_partitions(n, [&](const Partition& p) { enumerated += stat_Yms(p, m, s); });
            os << "lemma2," << n << "," << m << "," << s << "," << printed.get_str() << ","
               << direct.get_str() << "," << enumerated.get_str() << "\n";
        }
        emit(g, os.str());
        return 0;
    }

    if (*expect_cmd) {
        CountTable t = build_count_table(static_cast<std::size_t>(expect_n));
        mpq_class value;
        if (stat == "zn")
            value = expect_Zn(t, expect_n);
        else if (stat == "yn")
            value = expect_Yn(t, expect_n);
        else if (stat == "zds")
            value = expect_Zds(t, expect_n, opt_d, opt_s);
        else
            value = expect_Yms(t, expect_n, opt_m, opt_s);
        std::cout << rational(value) << " " << fmt17(value.get_d()) << "\n";
        return 0;
    }

    if (*sample_cmd || *draw_cmd) {
        const long n = *sample_cmd ? sample_n : draw_n;
        const std::uint64_t k = *sample_cmd ? sample_count : draw_count;
        RngStream rng(g.seed);
        std::ostringstream os;
        nlohmann::json meta;
        meta["n"] = n;
        meta["count"] = k;
        meta["seed"] = g.seed;
        meta["method"] = method;
        if (*draw_cmd) meta["procedure"] = draw_proc;
        os << meta.dump() << "\n";
        std::optional<ExactPartitionSampler> sampler;
        if (method == "exact") sampler.emplace(n);
        for (std::uint64_t i = 0; i < k; ++i) {
            Partition p = method == "exact" ? sampler->sample(rng)
                                            : sample_uniform_fristedt(n, rng).partition;
            if (*sample_cmd) {
                os << partition_json(p) << "\n";
            } else {
                const PartDraw d = draw_part(p, draw_proc, rng);
                os << nlohmann::json{{"procedure", d.procedure}, {"mu", d.mu}, {"sigma", d.sigma}}
                          .dump()
                   << "\n";
            }
        }
        emit(g, os.str());
        return 0;
    }

    if (*oracle_cmd) {
        if (oracle_max_s <= 0) oracle_max_s = oracle_n;
        CountTable t = build_count_table(static_cast<std::size_t>(oracle_n));
        JointTable jt =
            build_joint_table(t, oracle_n, oracle_proc, oracle_max_m, oracle_max_s, oracle_cap);
        std::ostringstream os;
        os << "m_or_d,s,num,den,float\n";
        for (long f = 1; f <= jt.max_first; ++f)
            for (long s = 1; s <= jt.max_s; ++s) {
                const mpq_class& q = jt.at(f, s);
                os << f << "," << s << "," << q.get_num().get_str() << ","
                   << q.get_den().get_str() << "," << fmt17(q.get_d()) << "\n";
            }
        emit(g, os.str());
        return 0;
    }

    if (*limit_cmd) {
        std::ostringstream os;
        if (limit_proc == 1) {
            os << "u,v,F1\n";
            for (double u = limit_uv_step; u <= 1.5 + 1e-12; u += limit_uv_step)
                for (double v = limit_uv_step; v <= 1.5 + 1e-12; v += limit_uv_step)
                    os << fmt17(u) << "," << fmt17(v) << "," << fmt17(F1(u, v)) << "\n";
        } else {
            os << "m,t,joint,mult_marginal,size_marginal\n";
            for (long m = 1; m <= limit_max_m; ++m)
                for (double t = limit_t_step; t <= limit_t_max + 1e-12; t += limit_t_step) {
                    const double joint = limit_proc == 2 ? L2(m, t) : L3(m, t);
                    const double mm = limit_proc == 2 ? M2_mult(m) : M3_mult(m);
                    const double ms = limit_proc == 2 ? M2_size(t) : M3_size(t);
                    os << m << "," << fmt17(t) << "," << fmt17(joint) << "," << fmt17(mm) << ","
                       << fmt17(ms) << "\n";
                }
        }
        emit(g, os.str());
        return 0;
    }

    if (*asymp_cmd) {
        std::ostringstream os;
        long max_n = 0;
        for (long n : asymp_ns) max_n = std::max(max_n, n);
        if (what == "pn") {
            CountTable t = build_count_table(static_cast<std::size_t>(max_n));
            os << "n,log_exact,log_hr,log_rademacher,log_hayman,rel_hr,rel_rademacher,rel_hayman\n";
            for (long n : asymp_ns) {
                const double le = log_mpz(t.p(n));
                const double lh = hr_leading_log(n);
                const double lr = rademacher_two_term_log(n);
                const double ly = hayman_pn_log(n);
                os << n << "," << fmt17(le) << "," << fmt17(lh) << "," << fmt17(lr) << ","
                   << fmt17(ly) << "," << fmt17(std::expm1(lh - le)) << ","
                   << fmt17(std::expm1(lr - le)) << "," << fmt17(std::expm1(ly - le)) << "\n";
            }
        } else if (what == "saddle") {
            os << "n,h,b,log_g,residual,h_times_sqrt_n\n";
            for (long n : asymp_ns) {
                const SaddleState st = solve_saddle(n);
                os << n << "," << fmt17(st.h) << "," << fmt17(st.b) << "," << fmt17(st.log_g)
                   << "," << fmt17(st.residual) << "," << fmt17(st.h * std::sqrt((double)n))
                   << "\n";
            }
        } else if (what == "phi") {
            os << "n,u,v,approx_joint,F1\n";
            for (long n : asymp_ns) {
                os << n << "," << fmt17(asymp_u) << "," << fmt17(asymp_v) << ","
                   << fmt17(approx_joint_proc1(n, asymp_u, asymp_v)) << ","
                   << fmt17(F1(asymp_u, asymp_v)) << "\n";
            }
        } else {
            CountTable t = build_count_table(static_cast<std::size_t>(max_n));
            os << "n,exact,asym,ratio\n";
            for (long n : asymp_ns) {
                const double exact = what == "ez" ? expect_Zn(t, n).get_d() : expect_Yn(t, n).get_d();
                const double asym = what == "ez" ? asym_EZ(n) : asym_EY(n);
                os << n << "," << fmt17(exact) << "," << fmt17(asym) << "," << fmt17(exact / asym)
                   << "\n";
            }
        }
        emit(g, os.str());
        return 0;
    }

    if (*sim_cmd) {
        cfg.seed = g.seed;
        cfg.method = sim_method == "exact" ? SamplerMethod::Exact : SamplerMethod::Fristedt;
        cfg.reference =
            reference == "oracle" ? ReferenceKind::OracleExact : ReferenceKind::LimitLaw;
        const std::size_t table_need = static_cast<std::size_t>(cfg.n);
        CountTable t = build_count_table(table_need);
        ComparisonReport report = run_monte_carlo(cfg, t);
        emit(g, g.format == "json" ? report.to_json() + "\n" : report.to_csv());
        return 0;
    }

    if (*cmp_cmd) {
        auto load = [&](const std::string& path) {
            std::ifstream f(path);
            if (!f) throw std::invalid_argument("cannot open " + path);
            std::string line;
            std::vector<double> vals;
            int col = -1;
            while (std::getline(f, line)) {
                if (line.empty() || line[0] == '#') continue;
                std::stringstream ss(line);
                std::string field;
                if (col < 0) {
                    int i = 0;
                    while (std::getline(ss, field, ',')) {
                        if (field == cmp_col) col = i;
                        ++i;
                    }
                    if (col < 0) throw std::invalid_argument("column not found: " + cmp_col);
                    continue;
                }
                int i = 0;
                while (std::getline(ss, field, ',')) {
                    if (i == col) vals.push_back(std::stod(field));
                    ++i;
                }
            }
            return vals;
        };
        std::cout << fmt17(ks_distance(load(cmp_a), load(cmp_b))) << "\n";
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

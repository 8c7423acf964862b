#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "simplicia/generators.hpp"
#include "simplicia/labeling.hpp"
#include "simplicia/msx.hpp"
#include "simplicia/report.hpp"
#include "simplicia/simplex_tree.hpp"

using namespace simplicia;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Source {
    std::string input;
    std::string generate;
    std::string example;
    std::vector<double> r;
    std::vector<double> p;
    Label n = 0;
    Label k = 0;
    Label d = 0;
    std::uint64_t seed = 1;
    std::size_t seeds = 1;
};

struct Job {
    ComplexSpec spec;
    std::string param_name;
    std::string param_value;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string short_number(double x) {
    std::ostringstream s;
    s << x;
    return s.str();
}

void add_source_options(CLI::App* app, Source& src) {
    app->add_option("--input", src.input, "complex file (.msx)");
    app->add_option("--generate", src.generate, "generator kind")->check(CLI::IsMember({"rips", "flag", "example"}));
    app->add_option("--example", src.example, "named complex for --generate example");
    app->add_option("--r", src.r, "Rips radius (several values give several rows)");
    app->add_option("--p", src.p, "edge probability for --generate flag");
    app->add_option("--n", src.n, "vertex or point count");
    app->add_option("--k", src.k, "size parameter for named complexes");
    app->add_option("--d", src.d, "dimension parameter for named complexes");
    app->add_option("--seed", src.seed, "random seed");
    app->add_option("--seeds", src.seeds, "number of consecutive seeds, one row each")->check(CLI::PositiveNumber);
}

std::vector<Job> make_jobs(const Source& src) {
    if (src.input.empty() == src.generate.empty()) throw UsageError("give exactly one of --input or --generate");
    std::vector<Job> jobs;
    if (!src.input.empty()) {
        jobs.push_back({read_msx_file(src.input), "", ""});
        return jobs;
    }
    if (src.generate == "example") {
        if (src.example.empty()) throw UsageError("--generate example needs --example NAME");
        try {
            jobs.push_back({named_example(src.example, src.n, src.k, src.d), "", ""});
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return jobs;
    }
    if (src.n == 0) throw UsageError("--generate " + src.generate + " needs --n");
    for (std::size_t i = 0; i < src.seeds; ++i) {
        std::uint64_t seed = src.seed + i;
        if (src.generate == "flag") {
            if (src.p.empty()) throw UsageError("--generate flag needs --p");
            for (double p : src.p) jobs.push_back({flag_complex(random_graph(src.n, p, seed)), "p", short_number(p)});
        } else {
            if (src.r.empty()) throw UsageError("--generate rips needs --r");
            PointCloud pc = klein_bottle_sample(src.n, seed);
            for (double r : src.r) jobs.push_back({rips_complex(pc, r), "r", short_number(r)});
        }
    }
    return jobs;
}

// Runs f(i) for every job index on a pool capped by SIMPLICIA_THREADS.
template <class F>
void parallel_for(std::size_t count, F&& f) {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    unsigned workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1));
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) f(i);
        });
    for (auto& th : pool) th.join();
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool report_checks(const std::vector<CheckItem>& items) {
    bool ok = true;
    for (const auto& it : items) {
        std::cout << (it.ok ? "ok  " : "FAIL") << '\t' << it.name;
        if (!it.ok) std::cout << '\t' << it.detail;
        std::cout << '\n';
        ok = ok && it.ok;
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"simplicia: simplicial complex representations and their sizes"};
    app.require_subcommand(1);

    Source src;
    bool csv = false;
    int precision = 1;

    auto* stats = app.add_subcommand("stats", "size and compression table");
    add_source_options(stats, src);
    stats->add_flag("--csv", csv, "comma separated output");
    stats->add_option("--precision", precision, "digits after the point for ratios")->check(CLI::Range(0, 12));

    auto* gamma = app.add_subcommand("gamma", "Gamma_0..Gamma_3 and array list size");
    add_source_options(gamma, src);
    gamma->add_flag("--csv", csv, "comma separated output");

    BenchOptions bench_opts;
    auto* bench = app.add_subcommand("bench", "operation timings on every structure");
    add_source_options(bench, src);
    bench->add_flag("--csv", csv, "comma separated output");
    bench->add_option("--runs", bench_opts.runs, "repetitions (median reported)")->check(CLI::PositiveNumber);
    bench->add_option("--queries", bench_opts.queries, "membership queries per run");
    bench->add_option("--ops", bench_opts.operations, "operations of each kind per run");

    std::string st_dump;
    bool expect_no_merge = false;
    auto* check = app.add_subcommand("check", "run the invariant suite");
    add_source_options(check, src);
    check->add_option("--st-dump", st_dump, "face list to verify as a simplex tree");
    check->add_flag("--expect-no-mxst-merge", expect_no_merge, "also require that no MxST subtrees merge");

    std::string emit = "msx";
    std::string output;
    auto* generate = app.add_subcommand("generate", "write a complex");
    add_source_options(generate, src);
    generate->add_option("--emit", emit, "msx (maximal simplices) or st (every face)")
        ->check(CLI::IsMember({"msx", "st"}));
    generate->add_option("--output", output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (check->parsed() && src.input.empty() && src.generate.empty() && !st_dump.empty()) {
            auto [n, faces] = parse_msx_lines(read_text(st_dump));
            return report_checks(check_st_dump(n, faces, nullptr)) ? kOk : kViolation;
        }

        if (src.seeds > 1 && !(stats->parsed() || gamma->parsed()))
            throw UsageError("--seeds is only available for stats and gamma");
        std::vector<Job> jobs = make_jobs(src);

        if (stats->parsed()) {
            std::vector<StatsRow> rows(jobs.size());
            parallel_for(jobs.size(), [&](std::size_t i) {
                rows[i] = stats_row(jobs[i].spec, jobs[i].param_name, jobs[i].param_value);
            });
            std::cout << stats_table(rows, precision).render(csv);
            return kOk;
        }
        if (gamma->parsed()) {
            std::vector<GammaRow> rows(jobs.size());
            parallel_for(jobs.size(), [&](std::size_t i) {
                rows[i] = gamma_row(jobs[i].spec, jobs[i].param_name, jobs[i].param_value);
            });
            std::cout << gamma_table(rows).render(csv);
            return kOk;
        }
        if (bench->parsed()) {
            bench_opts.seed = src.seed;
            bool consistent = true;
            for (const auto& job : jobs) {
                auto result = run_bench(job.spec, bench_opts);
                std::cout << result.timings.render(csv);
                if (!result.consistent) {
                    std::cerr << "inconsistent results: " << result.mismatch << '\n';
                    consistent = false;
                }
            }
            return consistent ? kOk : kViolation;
        }
        if (check->parsed()) {
            bool ok = true;
            CheckOptions opts;
            opts.expect_no_mxst_merge = expect_no_merge || src.example == "subset-copies";
            for (const auto& job : jobs) {
                ok = report_checks(check_complex(job.spec, opts)) && ok;
                if (!st_dump.empty()) {
                    auto [n, faces] = parse_msx_lines(read_text(st_dump));
                    ok = report_checks(check_st_dump(n, faces, &job.spec)) && ok;
                }
            }
            return ok ? kOk : kViolation;
        }
        if (generate->parsed()) {
            std::string text;
            for (const auto& job : jobs) {
                if (emit == "msx") {
                    text += serialize_msx(job.spec);
                    continue;
                }
                text += "n " + std::to_string(job.spec.n) + "\n";
                for (const auto& f : SimplexTree(job.spec).faces()) {
                    for (std::size_t i = 0; i < f.size(); ++i) text += (i ? " " : "") + std::to_string(f[i]);
                    text += '\n';
                }
            }
            if (output.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(output, std::ios::binary);
                if (!out) throw std::runtime_error("cannot write " + output);
                out << text;
            }
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const MsxError& e) {
        std::cerr << "parse error at " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kOk;
}

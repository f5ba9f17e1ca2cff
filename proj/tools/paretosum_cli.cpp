// paretosum: generate instances, run and verify Pareto-sum algorithms, and
// benchmark them to CSV.

#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paretosum/algorithm.hpp"
#include "paretosum/bench.hpp"
#include "paretosum/generators.hpp"
#include "paretosum/io.hpp"
#include "paretosum/minplus.hpp"
#include "paretosum/reference.hpp"

namespace ps = paretosum;

namespace {

std::atomic<bool> g_interrupted{false};

extern "C" void on_sigint(int) { g_interrupted.store(true); }

struct InstanceArgs {
    std::string file_a;
    std::string file_b;
    std::string gen = "sorted";
    std::string dist = "uniform";
    std::size_t n = 100;
    std::uint64_t seed = 1;
    std::int64_t scale = 1'000'000;
};

void add_instance_options(CLI::App* cmd, InstanceArgs& args) {
    cmd->add_option("a", args.file_a, "First input .ps file");
    cmd->add_option("b", args.file_b, "Second input .ps file");
    cmd->add_option("--gen", args.gen, "Generator used when no files are given")
        ->check(CLI::IsMember({"naive", "incremental", "sorted", "curve", "linear"}));
    cmd->add_option("--dist", args.dist, "Distribution for the generator")
        ->check(CLI::IsMember({"uniform", "gaussian", "exponential", "shifted"}));
    cmd->add_option("--n", args.n, "Instance size for the generator")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", args.seed, "Seed for the generator");
    cmd->add_option("--scale", args.scale, "Coordinate scale for the generator")->check(CLI::PositiveNumber);
}

struct Instance {
    ps::ParetoSet a;
    ps::ParetoSet b;
    std::string gen = "file";
    std::string dist = "-";
    std::optional<std::uint64_t> seed;
};

Instance load_instance(const InstanceArgs& args) {
    if (args.file_a.empty() != args.file_b.empty()) {
        throw std::invalid_argument("give both input files or neither");
    }
    if (!args.file_a.empty()) return {ps::read_ps(args.file_a), ps::read_ps(args.file_b)};
    ps::GenSpec spec{ps::parse_family(args.gen), ps::parse_distribution(args.dist), args.n, args.seed, args.scale};
    auto [a, b] = ps::generate_pair(spec);
    return {std::move(a), std::move(b), args.gen, args.dist, args.seed};
}

std::size_t parse_delta(const std::string& text) {
    if (text == "sqrt") return 0;
    std::size_t pos = 0;
    const auto v = std::stoull(text, &pos);
    if (pos != text.size() || v == 0) throw std::invalid_argument("--delta expects a positive integer or 'sqrt'");
    return v;
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
    std::vector<std::string> out;
    for (const auto& item : items) {
        std::size_t start = 0;
        for (;;) {
            const auto comma = item.find(',', start);
            out.push_back(item.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return out;
}

void print_record(std::ostream& os, const ps::RunRecord& r) {
    os << "algo=" << r.algo << " n_a=" << r.n_a << " n_b=" << r.n_b << " k=" << r.k << " time_ns=" << r.time_ns
       << " checks=" << r.checks << " oracle_calls=" << r.oracle_calls << " cells=" << r.cells
       << " heap_peak=" << r.heap_peak << " frontier_peak=" << r.frontier_peak << " rebuilds=" << r.rebuilds
       << " verified=" << (r.verified ? "yes" : "no") << '\n';
}

void append_csv(const std::string& path, const ps::RunRecord& r) {
    const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open CSV file " + path);
    if (fresh) out << ps::kCsvHeader << '\n';
    out << ps::to_csv(r) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pareto sums of two 2-D Pareto sets"};
    app.require_subcommand(1);

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "Write a generated Pareto set as a .ps file");
    ps::GenSpec gen_spec;
    std::string gen_family = "sorted", gen_dist = "uniform", gen_role = "a", gen_out;
    gen_cmd->add_option("--gen", gen_family, "Generator family")
        ->check(CLI::IsMember({"naive", "incremental", "sorted", "curve", "linear"}));
    gen_cmd->add_option("--dist", gen_dist, "Distribution")
        ->check(CLI::IsMember({"uniform", "gaussian", "exponential", "shifted"}));
    gen_cmd->add_option("--n", gen_spec.n, "Number of points")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", gen_spec.seed, "Seed");
    gen_cmd->add_option("--scale", gen_spec.scale, "Coordinate scale")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--role", gen_role, "Pair member (a or b)")->check(CLI::IsMember({"a", "b"}));
    gen_cmd->add_option("-o,--output", gen_out, "Output path")->required();

    // run
    auto* run_cmd = app.add_subcommand("run", "Run one algorithm on two .ps files or a generated pair");
    InstanceArgs run_args;
    std::string run_algo = "sss", run_delta = "sqrt", run_csv, run_out;
    std::optional<std::size_t> run_k_hint;
    bool run_stream = false, run_verify = false;
    run_cmd->add_option("--algo", run_algo, "Algorithm")
        ->check(CLI::IsMember({"bf", "bs", "pbs", "sc", "ks", "sbs", "sss", "hybrid", "ptree", "snd", "dnd"}));
    run_cmd->add_option("--delta", run_delta, "Sweep skip threshold: INT or sqrt");
    run_cmd->add_option("--k-hint", run_k_hint, "Output size handed to ks instead of running sc first");
    run_cmd->add_flag("--stream", run_stream, "Print points to stdout as they are found");
    run_cmd->add_flag("--verify", run_verify, "Check the output against the reference oracle");
    run_cmd->add_option("--csv", run_csv, "Append the run record to this CSV file");
    run_cmd->add_option("-o,--output", run_out, "Write the Pareto sum as a .ps file");
    add_instance_options(run_cmd, run_args);

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Benchmark a matrix of algorithms, generators, sizes and seeds");
    std::vector<std::string> bench_algos{"sc,sss"}, bench_gens{"sorted"}, bench_dists{"uniform"};
    std::vector<std::size_t> bench_sizes{100};
    std::uint64_t bench_seed = 1;
    std::size_t bench_seeds = 3;
    std::string bench_delta = "sqrt", bench_csv;
    std::int64_t bench_scale = 1'000'000;
    bool bench_verify = false, bench_no_warmup = false;
    bench_cmd->add_option("--algo", bench_algos, "Algorithms (comma-separated or repeated)");
    bench_cmd->add_option("--gen", bench_gens, "Generator families");
    bench_cmd->add_option("--dist", bench_dists, "Distributions");
    bench_cmd->add_option("--n", bench_sizes, "Instance sizes")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench_seed, "First seed");
    bench_cmd->add_option("--seeds", bench_seeds, "Number of consecutive seeds")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--scale", bench_scale, "Coordinate scale")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--delta", bench_delta, "Sweep skip threshold: INT or sqrt");
    bench_cmd->add_option("--csv", bench_csv, "Append rows to this CSV file (default: stdout)");
    bench_cmd->add_flag("--verify", bench_verify, "Check every run against the reference oracle");
    bench_cmd->add_flag("--no-warmup", bench_no_warmup, "Skip the discarded warm-up run");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check algorithms against the reference oracle");
    InstanceArgs verify_args;
    std::vector<std::string> verify_algos;
    verify_cmd->add_option("--algo", verify_algos, "Algorithms to check (default: all)");
    add_instance_options(verify_cmd, verify_args);

    // minplus
    auto* minplus_cmd = app.add_subcommand("minplus", "(min,+)-convolution through a Pareto-sum algorithm");
    std::string mp_a, mp_b, mp_algo = "sc";
    bool mp_check = false;
    minplus_cmd->add_option("a", mp_a, "First array file (one integer per line)")->required();
    minplus_cmd->add_option("b", mp_b, "Second array file")->required();
    minplus_cmd->add_option("--algo", mp_algo, "Pareto-sum algorithm")
        ->check(CLI::IsMember({"bf", "bs", "pbs", "sc", "ks", "sbs", "sss", "hybrid", "ptree", "snd", "dnd"}));
    minplus_cmd->add_flag("--check", mp_check, "Compare with the quadratic convolution");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen_cmd) {
            gen_spec.family = ps::parse_family(gen_family);
            gen_spec.distribution = ps::parse_distribution(gen_dist);
            gen_spec.role = ps::parse_role(gen_role);
            const auto set = ps::generate(gen_spec);
            const std::vector<std::string> header{gen_spec.describe()};
            ps::write_ps(gen_out, set.points(), header);
            return 0;
        }

        if (*run_cmd) {
            const auto inst = load_instance(run_args);
            ps::RunOptions opts{parse_delta(run_delta), run_k_hint};
            const auto algo = ps::parse_algorithm(run_algo);
            ps::StreamSink stream(std::cout);
            ps::CollectSink collect;
            auto run = ps::timed_run(algo, inst.a, inst.b, opts, run_verify,
                                     run_stream ? static_cast<ps::PointSink*>(&stream) : &collect);
            run.record.gen = inst.gen;
            run.record.dist = inst.dist;
            run.record.seed = inst.seed;
            if (!run_stream) {
                if (run_out.empty()) {
                    ps::write_ps(std::cout, collect.points());
                } else {
                    ps::write_ps(run_out, collect.points());
                }
            }
            std::cout.flush();
            print_record(std::cerr, run.record);
            if (run.ks_prep_ns) std::cerr << "ks_prep_ns=" << *run.ks_prep_ns << " (sc computing k_hint)\n";
            if (!run_csv.empty()) append_csv(run_csv, run.record);
            return 0;
        }

        if (*bench_cmd) {
            ps::BenchMatrix matrix;
            for (const auto& a : split_list(bench_algos)) matrix.algorithms.push_back(ps::parse_algorithm(a));
            for (const auto& g : split_list(bench_gens)) {
                for (const auto& d : split_list(bench_dists)) {
                    matrix.generators.emplace_back(ps::parse_family(g), ps::parse_distribution(d));
                }
            }
            matrix.sizes = bench_sizes;
            for (std::size_t s = 0; s < bench_seeds; ++s) matrix.seeds.push_back(bench_seed + s);
            matrix.scale = bench_scale;
            matrix.options.delta = parse_delta(bench_delta);
            matrix.verify = bench_verify;
            matrix.warmup = !bench_no_warmup;

            std::signal(SIGINT, on_sigint);
            std::size_t rows = 0;
            if (bench_csv.empty()) {
                rows = ps::run_bench(matrix, std::cout, true, &g_interrupted);
            } else {
                const bool fresh = !std::filesystem::exists(bench_csv) || std::filesystem::file_size(bench_csv) == 0;
                std::ofstream out(bench_csv, std::ios::app);
                if (!out) throw std::runtime_error("cannot open CSV file " + bench_csv);
                rows = ps::run_bench(matrix, out, fresh, &g_interrupted);
            }
            if (g_interrupted) {
                std::cerr << "interrupted after " << rows << " rows\n";
                return 130;
            }
            return 0;
        }

        if (*verify_cmd) {
            const auto inst = load_instance(verify_args);
            std::vector<ps::Algorithm> algos;
            for (const auto& a : split_list(verify_algos)) algos.push_back(ps::parse_algorithm(a));
            if (algos.empty()) algos.assign(ps::kAllAlgorithms.begin(), ps::kAllAlgorithms.end());
            const auto expected = ps::pareto_sum_reference(inst.a, inst.b);
            std::cout << "reference k=" << expected.points.size()
                      << " nondominated_cells=" << expected.nondominated_cells << '\n';
            int failures = 0;
            for (const auto algo : algos) {
                const auto got = ps::pareto_sum(algo, inst.a, inst.b);
                const bool ok = got == expected.points;
                failures += ok ? 0 : 1;
                std::cout << (ok ? "ok   " : "FAIL ") << ps::to_string(algo) << " k=" << got.size() << '\n';
            }
            return failures == 0 ? 0 : 1;
        }

        if (*minplus_cmd) {
            ps::ConvInstance inst{ps::read_int_array(mp_a), ps::read_int_array(mp_b)};
            const auto algo = ps::parse_algorithm(mp_algo);
            const auto c = ps::minplus_via_pareto(
                inst, [&](const ps::ParetoSet& a, const ps::ParetoSet& b) { return ps::pareto_sum(algo, a, b); });
            for (const auto v : c) std::cout << v << '\n';
            if (mp_check && c != ps::minplus_naive(inst)) {
                std::cerr << "mismatch against the quadratic convolution\n";
                return 1;
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

// Command-line front end for the permcensus shared library.  Talks to the
// engine exclusively through the C API in permcensus.h.

#include <CLI11.hpp>
#include <permcensus.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

namespace {

// 0 ok, 1 usage/parse, 2 budget exceeded, 3 counterexample found
int exit_code(pc_status s) {
    switch (s) {
    case PC_OK: return 0;
    case PC_ERR_BUDGET_EXCEEDED: return 2;
    case PC_ERR_COUNTEREXAMPLE: return 3;
    default: return 1;
    }
}

struct FieldHandle {
    pc_field* f = nullptr;
    ~FieldHandle() { pc_field_free(f); }
};

int open_field(const std::string& spec, FieldHandle& h) {
    pc_status s = pc_field_parse(spec.c_str(), &h.f);
    if (s != PC_OK) {
        std::cerr << "error: " << pc_status_name(s) << ": " << pc_last_error() << "\n";
        return exit_code(s);
    }
    return 0;
}

pc_format parse_format(const std::string& name) {
    if (name == "json") return PC_FORMAT_JSON;
    if (name == "csv") return PC_FORMAT_CSV;
    return PC_FORMAT_TEXT;
}

int emit(pc_status s, char* out, const std::string& path) {
    if (s != PC_OK && s != PC_ERR_COUNTEREXAMPLE) {
        std::cerr << "error: " << pc_status_name(s) << ": " << pc_last_error() << "\n";
        return exit_code(s);
    }
    if (out) {
        if (path.empty()) {
            std::cout << out;
            if (*out && out[strlen(out) - 1] != '\n') std::cout << "\n";
        } else {
            std::ofstream file(path);
            file << out;
        }
        pc_string_free(out);
    }
    return exit_code(s);
}

uint64_t default_budget() {
    if (const char* env = std::getenv("PERMCENSUS_BUDGET"))
        return std::strtoull(env, nullptr, 10);
    return PC_DEFAULT_BUDGET;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"permanent/determinant census engine over finite fields"};
    app.require_subcommand(1);

    std::string field_spec = "3", format = "text", output, key = "joint";
    std::string stat = "det", target = "0", map_name, mode = "exhaustive", matrix_lit;
    int n = 3, r = 0, workers = 1, n_min = 3, n_max = 20, bench_nmax = 8, bench_trials = 100;
    uint64_t budget = default_budget(), trials = 1000000, seed = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: json|csv|text");
        cmd->add_option("--output", output, "write the report to a file instead of stdout");
    };

    auto* census = app.add_subcommand("census", "exhaustive matrix census");
    census->add_option("--field", field_spec, "field spec, 'p' or 'p^k'")->required();
    census->add_option("--n", n, "matrix dimension")->required();
    census->add_option("--key", key, "joint|nr|vr|classes");
    census->add_option("--r", r, "rank (key=vr only)");
    census->add_option("--budget", budget, "enumeration budget (matrices)");
    census->add_option("--workers", workers, "worker threads");
    add_common(census);

    auto* thresholds = app.add_subcommand("thresholds", "reproduce the U_n < D_n threshold table");
    thresholds->add_option("--min", n_min, "first n (>= 3)");
    thresholds->add_option("--max", n_max, "last n (<= 20)");
    add_common(thresholds);

    auto* prob = app.add_subcommand("prob", "Monte Carlo value-probability estimate");
    prob->add_option("--field", field_spec)->required();
    prob->add_option("--n", n)->required();
    prob->add_option("--stat", stat, "per|det");
    prob->add_option("--target", target, "field element literal");
    prob->add_option("--trials", trials);
    prob->add_option("--seed", seed);
    prob->add_option("--workers", workers);
    add_common(prob);

    auto* verify = app.add_subcommand("verify", "check a converter identity");
    verify->add_option("--map", map_name, "polya2|psi33|ex1|ex2|delta")->required();
    verify->add_option("--field", field_spec)->required();
    verify->add_option("--n", n, "input dimension (where the map allows it)");
    verify->add_option("--mode", mode, "exhaustive|random");
    verify->add_option("--trials", trials, "samples in random mode");
    verify->add_option("--seed", seed);
    verify->add_option("--budget", budget);
    add_common(verify);

    auto* bounds = app.add_subcommand("bounds", "bound polynomials L_n, U_n");
    bounds->add_option("--n", n)->required();
    add_common(bounds);

    auto* bench = app.add_subcommand("bench", "time Ryser vs Laplace permanents");
    bench->add_option("--field", field_spec);
    bench->add_option("--n-max", bench_nmax);
    bench->add_option("--trials", bench_trials);
    add_common(bench);

    auto* eval = app.add_subcommand("eval", "per/det/rank of one matrix");
    eval->add_option("--field", field_spec)->required();
    eval->add_option("--matrix", matrix_lit, "rows ';'-separated, entries ','-separated")->required();
    add_common(eval);

    CLI11_PARSE(app, argc, argv);
    pc_format fmt = parse_format(format);
    char* out = nullptr;

    if (census->parsed()) {
        FieldHandle f;
        if (int rc = open_field(field_spec, f)) return rc;
        pc_status s;
        if (key == "joint") s = pc_census_joint(f.f, n, budget, workers, fmt, &out);
        else if (key == "nr") s = pc_census_nr(f.f, n, budget, workers, fmt, &out);
        else if (key == "classes") s = pc_census_classes(f.f, n, budget, workers, fmt, &out);
        else if (key == "vr") s = pc_census_vr(f.f, n, r, budget, &out);
        else {
            std::cerr << "error: unknown census key '" << key << "'\n";
            return 1;
        }
        return emit(s, out, output);
    }
    if (thresholds->parsed()) {
        pc_status s = pc_thresholds(n_min, n_max, fmt == PC_FORMAT_JSON ? fmt : PC_FORMAT_CSV, &out);
        return emit(s, out, output);
    }
    if (prob->parsed()) {
        FieldHandle f;
        if (int rc = open_field(field_spec, f)) return rc;
        pc_status s = pc_sample_prob(f.f, n, stat.c_str(), target.c_str(), trials, seed, workers,
                                     fmt, &out);
        return emit(s, out, output);
    }
    if (verify->parsed()) {
        FieldHandle f;
        if (int rc = open_field(field_spec, f)) return rc;
        uint64_t amount = mode == "random" ? trials : budget;
        pc_status s = pc_verify(f.f, map_name.c_str(), n, mode.c_str(), amount, seed, fmt, &out);
        return emit(s, out, output);
    }
    if (bounds->parsed()) {
        pc_status s = pc_bounds(n, fmt, &out);
        return emit(s, out, output);
    }
    if (bench->parsed()) {
        FieldHandle f;
        if (int rc = open_field(field_spec, f)) return rc;
        pc_status s = pc_bench(f.f, bench_nmax, bench_trials, &out);
        return emit(s, out, output);
    }
    if (eval->parsed()) {
        FieldHandle f;
        if (int rc = open_field(field_spec, f)) return rc;
        pc_status s = pc_matrix_eval(f.f, matrix_lit.c_str(), fmt, &out);
        return emit(s, out, output);
    }
    return 1;
}

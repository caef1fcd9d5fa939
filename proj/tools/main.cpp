// Command-line front end.
//
// Machine-readable payloads (matrices, circuits, CSV) go to standard output
// or --out files; human-readable reports and errors go to standard error.
// Exit codes: 0 success, 1 input/usage error, 2 singular matrix, 3 verify
// mismatch.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <cnotsynth/cnotsynth.hpp>

namespace {

using namespace cnotsynth;

BitMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_matrix(in);
}

Circuit load_circuit(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_circuit(in);
}

void write_payload(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("write to '" + out_path + "' failed");
}

int run_synthesis(const std::string& matrix_path, int m, const std::string& out_path, bool sectioned) {
    const BitMatrix a = load_matrix(matrix_path);
    SynthOptions options;
    options.section_width = m;
    const Synthesis result = sectioned ? cnot_synth_pmh(a, options) : gaussian_synth(a);
    write_payload(serialize_circuit(result.circuit), out_path);
    std::cerr << result.report.to_json() << "\n";
    if (!result.report.note.empty()) std::cerr << "note: " << result.report.note << "\n";
    return 0;
}

int run_eval(const std::string& circuit_path) {
    const Circuit c = load_circuit(circuit_path);
    std::cout << format_matrix(eval_matrix(c));
    return 0;
}

int run_verify(const std::string& matrix_path, const std::string& circuit_path) {
    const BitMatrix a = load_matrix(matrix_path);
    const Circuit c = load_circuit(circuit_path);
    if (verify(a, c)) {
        std::cerr << "ok: circuit computes the matrix\n";
        return 0;
    }
    std::cerr << "mismatch: circuit does not compute the matrix\n";
    return 3;
}

int run_gen(int n, std::uint64_t seed) {
    std::cout << format_matrix(random_invertible(n, seed));
    return 0;
}

int run_bench(const BenchConfig& config, const std::string& out_path) {
    const std::vector<BenchRecord> records = run_benchmark(config);
    write_payload(write_csv(records), out_path);
    std::cerr << summarize(records);
    return 0;
}

int run_bounds(int n, int m) {
    if (m == 0) m = default_section_size(n);
    const double lower = lower_bound_gates(n);  // rejects n < 2
    const BigInt upper = upper_bound_row_ops(n, m);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", lower);
    std::cout << "lower_bound " << buf << "\n";
    std::cout << "upper_bound " << upper << "\n";
    return 0;
}

int run_count(int n) {
    std::cout << count_linear_reversible(n) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CNOT circuit synthesis for invertible GF(2) matrices"};
    app.require_subcommand(1);

    std::string synth_matrix;
    int synth_m = 0;
    std::string synth_out;
    auto* synth = app.add_subcommand("synth", "synthesize a circuit by sectioned elimination");
    synth->add_option("matrix", synth_matrix, "matrix file")->required();
    synth->add_option("--m", synth_m, "section width in columns (default: about log2(n)/2)");
    synth->add_option("--out", synth_out, "write the circuit here instead of stdout");

    std::string gauss_matrix;
    std::string gauss_out;
    auto* gauss = app.add_subcommand("gauss", "synthesize a circuit by plain Gaussian elimination");
    gauss->add_option("matrix", gauss_matrix, "matrix file")->required();
    gauss->add_option("--out", gauss_out, "write the circuit here instead of stdout");

    std::string eval_circuit;
    auto* eval = app.add_subcommand("eval", "print the matrix a circuit computes");
    eval->add_option("circuit", eval_circuit, "circuit file")->required();

    std::string verify_matrix;
    std::string verify_circuit;
    auto* verify_cmd = app.add_subcommand("verify", "check that a circuit computes a matrix");
    verify_cmd->add_option("matrix", verify_matrix, "matrix file")->required();
    verify_cmd->add_option("circuit", verify_circuit, "circuit file")->required();

    int gen_n = 0;
    std::uint64_t gen_seed = 1;
    auto* gen = app.add_subcommand("gen", "print a random invertible matrix");
    gen->add_option("n", gen_n, "dimension")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();

    BenchConfig bench_config;
    bench_config.sizes = {4, 8, 16, 32, 64, 128};
    std::string bench_out;
    auto* bench = app.add_subcommand("bench", "compare the two synthesizers on random matrices");
    bench->add_option("--sizes", bench_config.sizes, "comma-separated matrix sizes")
        ->delimiter(',')
        ->capture_default_str();
    bench->add_option("--trials", bench_config.trials, "matrices per size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--seed", bench_config.seed, "master seed")->capture_default_str();
    bench->add_option("--m", bench_config.m_override, "section width override (0: per-size default)");
    bench->add_option("--out", bench_out, "write the CSV here instead of stdout");

    int bounds_n = 0;
    int bounds_m = 0;
    auto* bounds = app.add_subcommand("bounds", "print the gate-count floor and row-op ceiling for n wires");
    bounds->add_option("n", bounds_n, "wire count")->required();
    bounds->add_option("--m", bounds_m, "section width (default: about log2(n)/2)");

    int count_n = 0;
    auto* count = app.add_subcommand("count", "print how many invertible n-by-n GF(2) matrices exist");
    count->add_option("n", count_n, "dimension")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (synth->parsed()) return run_synthesis(synth_matrix, synth_m, synth_out, true);
        if (gauss->parsed()) return run_synthesis(gauss_matrix, 0, gauss_out, false);
        if (eval->parsed()) return run_eval(eval_circuit);
        if (verify_cmd->parsed()) return run_verify(verify_matrix, verify_circuit);
        if (gen->parsed()) return run_gen(gen_n, gen_seed);
        if (bench->parsed()) return run_bench(bench_config, bench_out);
        if (bounds->parsed()) return run_bounds(bounds_n, bounds_m);
        if (count->parsed()) return run_count(count_n);
    } catch (const SingularMatrixError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

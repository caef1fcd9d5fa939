#pragma once

// Paired benchmark of the two synthesizers over random invertible matrices,
// with CSV output that round-trips.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "synth.hpp"

namespace cnotsynth {

struct BenchConfig {
    std::vector<int> sizes;      // matrix dimensions to sweep, each >= 2
    int trials = 100;            // matrices per size
    std::uint64_t seed = 1;      // master seed the per-trial seeds derive from
    int m_override = 0;          // 0: default_section_size(n) per size
};

struct BenchRecord {
    int n = 0;
    int m = 0;
    int trials = 0;
    std::uint64_t seed = 0;  // master seed, so the distribution is auditable
    double mean_gates_pmh = 0.0;
    double mean_gates_gauss = 0.0;
    double mean_nanos_pmh = 0.0;
    double mean_nanos_gauss = 0.0;
};

/// Seed for one trial's matrix: a pure function of (master, n, trial), so a
/// record never depends on which sizes ran before it.
inline std::uint64_t derive_trial_seed(std::uint64_t master, int n, int trial) {
    auto mix = [](std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    };
    const std::uint64_t key =
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(n)) << 32) | static_cast<std::uint32_t>(trial);
    return mix(mix(master) ^ key);
}

/// Runs the paired comparison: per trial both synthesizers see the same
/// random invertible matrix, and every circuit is verified against its
/// matrix before it is counted. Gate means are exact functions of the
/// config; the nano means are wall-clock and vary run to run.
inline std::vector<BenchRecord> run_benchmark(const BenchConfig& config) {
    if (config.sizes.empty()) throw std::invalid_argument("run_benchmark: no sizes given");
    if (config.trials < 1) throw std::invalid_argument("run_benchmark: trials must be positive");
    for (int n : config.sizes)
        if (n < 2) throw std::invalid_argument("run_benchmark: sizes must be at least 2");

    std::vector<BenchRecord> records;
    records.reserve(config.sizes.size());
    for (int n : config.sizes) {
        SynthOptions options;
        options.section_width = config.m_override;
        BenchRecord rec;
        rec.n = n;
        rec.trials = config.trials;
        rec.seed = config.seed;
        long long gates_pmh = 0;
        long long gates_gauss = 0;
        double nanos_pmh = 0.0;
        double nanos_gauss = 0.0;
        for (int trial = 0; trial < config.trials; ++trial) {
            const std::uint64_t trial_seed = derive_trial_seed(config.seed, n, trial);
            const BitMatrix a = random_invertible(n, trial_seed);

            const auto t0 = std::chrono::steady_clock::now();
            const Synthesis pmh = cnot_synth_pmh(a, options);
            const auto t1 = std::chrono::steady_clock::now();
            const Synthesis gauss = gaussian_synth(a);
            const auto t2 = std::chrono::steady_clock::now();

            if (!verify(a, pmh.circuit))
                throw std::runtime_error("run_benchmark: verification failed (method=pmh, n=" +
                                         std::to_string(n) + ", seed=" + std::to_string(trial_seed) + ")");
            if (!verify(a, gauss.circuit))
                throw std::runtime_error("run_benchmark: verification failed (method=gauss, n=" +
                                         std::to_string(n) + ", seed=" + std::to_string(trial_seed) + ")");

            rec.m = pmh.report.m_used;
            gates_pmh += pmh.report.gate_count_total;
            gates_gauss += gauss.report.gate_count_total;
            nanos_pmh += std::chrono::duration<double, std::nano>(t1 - t0).count();
            nanos_gauss += std::chrono::duration<double, std::nano>(t2 - t1).count();
        }
        rec.mean_gates_pmh = static_cast<double>(gates_pmh) / config.trials;
        rec.mean_gates_gauss = static_cast<double>(gates_gauss) / config.trials;
        rec.mean_nanos_pmh = nanos_pmh / config.trials;
        rec.mean_nanos_gauss = nanos_gauss / config.trials;
        records.push_back(rec);
    }
    return records;
}

inline constexpr const char* kCsvHeader =
    "n,m,trials,seed,mean_gates_pmh,mean_gates_gauss,mean_nanos_pmh,mean_nanos_gauss";

/// Writes one header line plus one line per record; real-valued fields carry
/// six significant digits.
inline void write_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
    out << kCsvHeader << '\n';
    char buf[192];
    for (const BenchRecord& r : records) {
        std::snprintf(buf, sizeof buf, "%d,%d,%d,%llu,%.6g,%.6g,%.6g,%.6g", r.n, r.m, r.trials,
                      static_cast<unsigned long long>(r.seed), r.mean_gates_pmh, r.mean_gates_gauss,
                      r.mean_nanos_pmh, r.mean_nanos_gauss);
        out << buf << '\n';
    }
    if (!out) throw std::runtime_error("write_csv: write failed");
}

inline std::string write_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream out;
    write_csv(records, out);
    return out.str();
}

/// Parses write_csv output back into records.
inline std::vector<BenchRecord> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError(1, "empty CSV");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCsvHeader) throw ParseError(1, "unexpected CSV header");

    std::vector<BenchRecord> records;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream split(line);
        while (std::getline(split, field, ',')) fields.push_back(field);
        if (fields.size() != 8) throw ParseError(line_no, "expected 8 fields, found " + std::to_string(fields.size()));
        try {
            BenchRecord rec;
            std::size_t pos = 0;
            rec.n = std::stoi(fields[0], &pos);
            if (pos != fields[0].size()) throw std::invalid_argument("n");
            rec.m = std::stoi(fields[1], &pos);
            if (pos != fields[1].size()) throw std::invalid_argument("m");
            rec.trials = std::stoi(fields[2], &pos);
            if (pos != fields[2].size()) throw std::invalid_argument("trials");
            rec.seed = std::stoull(fields[3], &pos);
            if (pos != fields[3].size()) throw std::invalid_argument("seed");
            rec.mean_gates_pmh = std::stod(fields[4], &pos);
            if (pos != fields[4].size()) throw std::invalid_argument("mean_gates_pmh");
            rec.mean_gates_gauss = std::stod(fields[5], &pos);
            if (pos != fields[5].size()) throw std::invalid_argument("mean_gates_gauss");
            rec.mean_nanos_pmh = std::stod(fields[6], &pos);
            if (pos != fields[6].size()) throw std::invalid_argument("mean_nanos_pmh");
            rec.mean_nanos_gauss = std::stod(fields[7], &pos);
            if (pos != fields[7].size()) throw std::invalid_argument("mean_nanos_gauss");
            records.push_back(rec);
        } catch (const std::exception&) {
            throw ParseError(line_no, "malformed numeric field");
        }
    }
    return records;
}

inline std::vector<BenchRecord> read_csv(const std::string& text) {
    std::istringstream in(text);
    return read_csv(in);
}

/// One human-readable line per record: the gate means and their ratio.
inline std::string summarize(const std::vector<BenchRecord>& records) {
    std::string out;
    char buf[192];
    for (const BenchRecord& r : records) {
        const double ratio = r.mean_gates_pmh > 0.0 ? r.mean_gates_gauss / r.mean_gates_pmh : 0.0;
        std::snprintf(buf, sizeof buf, "n=%-4d m=%-2d trials=%-5d pmh=%-10.2f gauss=%-10.2f gauss/pmh=%.3f\n",
                      r.n, r.m, r.trials, r.mean_gates_pmh, r.mean_gates_gauss, ratio);
        out += buf;
    }
    return out;
}

}  // namespace cnotsynth

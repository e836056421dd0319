#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dmcap {

// One grid point of a capacity sweep.
struct SweepRow {
    double d;
    unsigned k;
    double capacity_ba;          // nats
    double estimate;             // k d^2 / (8 log 2)
    double renyi_half_over_two;  // nats
    std::size_t iterations;

    bool operator==(const SweepRow&) const = default;
};

// Exit codes shared by all commands: 0 success, 1 runtime or convergence
// failure, 2 bad usage / invalid parameters.
inline constexpr int exit_ok = 0;
inline constexpr int exit_runtime = 1;
inline constexpr int exit_usage = 2;

int cmd_capacity(const std::string& channel_kind, double d, unsigned n,
                 unsigned k, double epsilon, std::size_t max_iterations,
                 std::ostream& out, std::ostream& err);

// Writes the built-in reference grid (d = 0.05 .. 0.95 step 0.05, epsilon
// 1e-4, 4-decimal values) for one of the two binary channel families.
// table1 header: d,capacity,renyi_half_over_two,estimate
// table2 header: d,capacity,theory,renyi_half_over_two,estimate
int cmd_reproduce(const std::string& table, const std::string& out_path,
                  std::ostream& err);

// Capacity sweep over sparse-spectrum channels, one CSV row per (k, d),
// ordered by (k, d), full-precision values.  Without an explicit d_max each
// k sweeps d_min .. min(0.99, 1/k - 0.01); an explicit d_max must satisfy
// k*d_max <= 1 for every k.
int cmd_sweep(unsigned n, const std::vector<unsigned>& k_list, double d_min,
              std::optional<double> d_max, double d_step, double epsilon,
              const std::string& out_path, std::ostream& err);

int cmd_distinguish(unsigned n, unsigned k, double d,
                    const std::vector<std::uint64_t>& samples,
                    std::size_t trials, std::uint64_t seed,
                    const std::string& out_path, std::ostream& err);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::vector<SweepRow> parse_sweep_csv(std::istream& in);

// Generic numeric CSV, for checking command output in tests.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};
CsvTable parse_csv(std::istream& in);

}  // namespace dmcap

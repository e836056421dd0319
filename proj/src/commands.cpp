#include "dmcap/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <istream>

#include "dmcap/analytic.hpp"
#include "dmcap/ba_solver.hpp"
#include "dmcap/channel.hpp"
#include "dmcap/distinguisher.hpp"

namespace dmcap {

namespace {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string f4(double v) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string f2(double v) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// Parameter problems exit 2, everything else that goes wrong at runtime
// exits 1; commands print the reason to `err` either way.
int run_guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_runtime;
    }
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
}

}  // namespace

int cmd_capacity(const std::string& channel_kind, double d, unsigned n,
                 unsigned k, double epsilon, std::size_t max_iterations,
                 std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        std::optional<ChannelMatrix> ch;
        if (channel_kind == "bsc") {
            ch = make_bsc(d);
        } else if (channel_kind == "nonsym") {
            ch = make_nonsymmetric_binary(d);
        } else if (channel_kind == "wht") {
            ch = make_wht_sparse_channel(n, k, d);
        } else {
            err << "error: unknown channel kind '" << channel_kind << "'\n";
            return exit_usage;
        }

        const auto res = ba_capacity(
            *ch, {.epsilon = epsilon, .max_iterations = max_iterations});
        out << "channel=" << channel_kind << " d=" << g17(d);
        if (channel_kind == "wht") out << " n=" << n << " k=" << k;
        out << " epsilon=" << g17(epsilon) << "\n";
        out << "capacity_lower=" << g17(res.capacity_lower) << "\n";
        out << "capacity_upper=" << g17(res.capacity_upper) << "\n";
        out << "iterations=" << res.iterations << "\n";
        out << "converged=" << (res.converged ? "yes" : "no") << "\n";
        out << "input_dist=";
        for (std::size_t j = 0; j < res.input_dist.size(); ++j)
            out << (j ? "," : "") << g17(res.input_dist[j]);
        out << "\n";
        if (!res.converged) {
            err << "error: no convergence after " << res.iterations
                << " iterations (gap "
                << g17(res.capacity_upper - res.capacity_lower) << ")\n";
            return exit_runtime;
        }
        return exit_ok;
    });
}

int cmd_reproduce(const std::string& table, const std::string& out_path,
                  std::ostream& err) {
    return run_guarded(err, [&] {
        const bool t1 = table == "table1";
        if (!t1 && table != "table2") {
            err << "error: unknown table '" << table << "' (table1 or table2)\n";
            return exit_usage;
        }
        std::ofstream f(out_path);
        if (!f) {
            err << "error: cannot open '" << out_path << "' for writing\n";
            return exit_runtime;
        }
        const SolverConfig cfg{.epsilon = 1e-4};
        f << (t1 ? "d,capacity,renyi_half_over_two,estimate"
                 : "d,capacity,theory,renyi_half_over_two,estimate")
          << "\n";
        for (int i = 1; i <= 19; ++i) {
            const double d = 0.05 * i;
            const auto ch = t1 ? make_nonsymmetric_binary(d) : make_bsc(d);
            const auto res = ba_capacity(ch, cfg);
            if (!res.converged) {
                err << "error: solver did not converge at d=" << f2(d) << "\n";
                return exit_runtime;
            }
            const double renyi = renyi_divergence(ch.row(0), ch.row(1), 0.5) / 2.0;
            f << f2(d) << ',' << f4(res.capacity_lower) << ',';
            if (!t1) f << f4(bsc_capacity_exact(d)) << ',';
            f << f4(renyi) << ','
              << f4(t1 ? nonsym_capacity_estimate(d) : bsc_capacity_estimate(d))
              << "\n";
        }
        f.flush();
        if (!f.good()) {
            err << "error: write to '" << out_path << "' failed\n";
            return exit_runtime;
        }
        return exit_ok;
    });
}

int cmd_sweep(unsigned n, const std::vector<unsigned>& k_list, double d_min,
              std::optional<double> d_max, double d_step, double epsilon,
              const std::string& out_path, std::ostream& err) {
    return run_guarded(err, [&] {
        if (k_list.empty()) {
            err << "error: need at least one sparsity k\n";
            return exit_usage;
        }
        if (!(d_step > 0.0) || d_min < 0.0) {
            err << "error: need d_step > 0 and d_min >= 0\n";
            return exit_usage;
        }
        std::vector<unsigned> ks(k_list);
        std::sort(ks.begin(), ks.end());
        ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
        if (d_max) {
            for (unsigned k : ks) {
                if (k * *d_max > 1.0 + prob_tol) {
                    err << "error: k=" << k << " with d_max=" << g17(*d_max)
                        << " violates k*d_max <= 1\n";
                    return exit_usage;
                }
            }
        }

        std::vector<SweepRow> rows;
        bool all_converged = true;
        for (unsigned k : ks) {
            const double top =
                d_max ? *d_max : std::min(0.99, 1.0 / k - 0.01);
            for (int i = 0;; ++i) {
                const double d = d_min + i * d_step;
                if (d > top + 1e-9) break;
                const auto ch = make_wht_sparse_channel(n, k, d);
                const auto res = ba_capacity(ch, {.epsilon = epsilon});
                all_converged = all_converged && res.converged;
                rows.push_back(SweepRow{
                    d, k, res.capacity_lower, crypto_estimate(k, d),
                    renyi_divergence(ch.row(0), ch.row(1), 0.5) / 2.0,
                    res.iterations});
            }
        }

        std::ofstream f(out_path);
        if (!f) {
            err << "error: cannot open '" << out_path << "' for writing\n";
            return exit_runtime;
        }
        write_sweep_csv(f, rows);
        f.flush();
        if (!f.good()) {
            err << "error: write to '" << out_path << "' failed\n";
            return exit_runtime;
        }
        if (!all_converged) {
            err << "error: some grid points did not converge (rows written)\n";
            return exit_runtime;
        }
        return exit_ok;
    });
}

int cmd_distinguish(unsigned n, unsigned k, double d,
                    const std::vector<std::uint64_t>& samples,
                    std::size_t trials, std::uint64_t seed,
                    const std::string& out_path, std::ostream& err) {
    return run_guarded(err, [&] {
        if (samples.empty()) {
            err << "error: need at least one sample count\n";
            return exit_usage;
        }
        const auto ch = make_wht_sparse_channel(n, k, d);
        std::ofstream f(out_path);
        if (!f) {
            err << "error: cannot open '" << out_path << "' for writing\n";
            return exit_runtime;
        }
        f << "samples,false_accept_biased,false_accept_uniform,trials,seed\n";
        for (std::uint64_t s : samples) {
            const auto rep = estimate_error_rates(ch, s, trials, seed);
            f << rep.sample_count << ',' << g17(rep.false_accept_biased) << ','
              << g17(rep.false_accept_uniform) << ',' << rep.trials << ','
              << rep.seed << "\n";
        }
        f.flush();
        if (!f.good()) {
            err << "error: write to '" << out_path << "' failed\n";
            return exit_runtime;
        }
        return exit_ok;
    });
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "k,d,capacity_ba,estimate,renyi_half_over_two,iterations\n";
    for (const auto& r : rows)
        out << r.k << ',' << g17(r.d) << ',' << g17(r.capacity_ba) << ','
            << g17(r.estimate) << ',' << g17(r.renyi_half_over_two) << ','
            << r.iterations << "\n";
}

std::vector<SweepRow> parse_sweep_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) ||
        line != "k,d,capacity_ba,estimate,renyi_half_over_two,iterations")
        throw std::runtime_error("bad sweep CSV header");
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split_line(line);
        if (cells.size() != 6) throw std::runtime_error("bad sweep CSV row");
        rows.push_back(SweepRow{
            std::stod(cells[1]), static_cast<unsigned>(std::stoul(cells[0])),
            std::stod(cells[2]), std::stod(cells[3]), std::stod(cells[4]),
            static_cast<std::size_t>(std::stoull(cells[5]))});
    }
    return rows;
}

CsvTable parse_csv(std::istream& in) {
    CsvTable t;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty CSV");
    t.header = split_line(line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split_line(line);
        if (cells.size() != t.header.size())
            throw std::runtime_error("ragged CSV row");
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& c : cells) row.push_back(std::stod(c));
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace dmcap

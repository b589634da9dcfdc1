// museq: construct mu-sequences, certify kernel-lattice minima, and
// tabulate packing densities and bounds.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "museq/approx.hpp"
#include "museq/construct.hpp"
#include "museq/core.hpp"
#include "museq/density.hpp"
#include "museq/enumerate.hpp"
#include "museq/reduce.hpp"

using namespace museq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInput = 4;

using Row = std::vector<std::pair<std::string, std::string>>;

std::string fmt(const Real& r) { return r.str(10); }

void emit(const std::vector<Row>& rows, const std::string& format, std::ostream& os) {
    if (format == "structured") {
        auto arr = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json obj;
            for (const auto& [k, v] : row) obj[k] = v;
            arr.push_back(std::move(obj));
        }
        os << arr.dump(2) << "\n";
        return;
    }
    if (rows.empty()) return;
    for (size_t i = 0; i < rows[0].size(); ++i)
        os << rows[0][i].first << (i + 1 < rows[0].size() ? "," : "\n");
    for (const auto& row : rows)
        for (size_t i = 0; i < row.size(); ++i)
            os << row[i].second << (i + 1 < row.size() ? "," : "\n");
}

std::pair<long, long> parse_dims(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos) {
        long v = std::stol(s);
        return {v, v};
    }
    long a = std::stol(s.substr(0, pos));
    long b = std::stol(s.substr(pos + 2));
    if (a > b) throw InputError("--dims: empty range " + s);
    return {a, b};
}

Row step_row(long n, const construct::ExtensionReport& rep) {
    return {{"n", std::to_string(n)},
            {"s_n", rep.term.get_str()},
            {"f", rep.pair_count.get_str()},
            {"bound_first", fmt(rep.bound_first)},
            {"bound_second", fmt(rep.bound_second)},
            {"sigma_tilde", fmt(rep.sigma_tilde)}};
}

int cmd_build(const std::string& format, long mu, long dim, const std::string& strategy,
              double sigma, double eps, uint64_t enum_budget, uint64_t svp_budget,
              const std::string& out_path) {
    construct::BuildOptions opt;
    opt.strategy = (strategy == "interval") ? construct::Strategy::Interval
                                            : construct::Strategy::Greedy;
    opt.sigma = sigma;
    opt.eps = eps;
    opt.enum_budget = enum_budget;
    auto res = construct::build_sequence(Integer(mu), dim, opt);
    if (!res.complete) {
        std::cerr << "build: interval step " << res.failed_at
                  << " admits no term (whole interval forbidden)\n";
        return kExitValidation;
    }

    std::vector<Row> rows;
    for (size_t i = 0; i < res.steps.size(); ++i) {
        long n = static_cast<long>(i) + 1;
        Row row = step_row(n, res.steps[i]);
        IVec prefix(res.seq.terms.begin(), res.seq.terms.begin() + n + 1);
        auto cert = reduce::shortest_vector(reduce::kernel_basis(prefix), svp_budget);
        if (cert.minimum < res.seq.mu) {
            std::cerr << "build: internal certification failed at n=" << n << "\n";
            return kExitValidation;
        }
        auto dc = reduce::determinant_identity_check(prefix);
        auto rep = density::make_report(n, cert.minimum, dc.via_sum, res.seq.mu);
        row.push_back({"min", cert.minimum.get_str()});
        row.push_back({"det", dc.via_sum.get_str()});
        row.push_back({"delta", fmt(rep.delta)});
        row.push_back({"Delta", fmt(rep.Delta)});
        rows.push_back(std::move(row));
    }
    emit(rows, format, std::cout);
    if (!out_path.empty()) save_sequence_file(res.seq, out_path, /*certified=*/true);
    return kExitOk;
}

int cmd_verify(const std::string& format, const std::string& path, uint64_t svp_budget) {
    MuSequence seq = load_sequence_file(path);
    std::vector<Row> rows;
    bool pass = true;
    size_t fail_len = 0;
    for (size_t len = 2; len <= seq.terms.size(); ++len) {
        IVec prefix(seq.terms.begin(), seq.terms.begin() + len);
        long n = static_cast<long>(len) - 1;
        auto cert = reduce::shortest_vector(reduce::kernel_basis(prefix), svp_budget);
        Row row{{"n", std::to_string(n)}, {"min", cert.minimum.get_str()}};
        if (cert.minimum >= seq.mu) {
            auto dc = reduce::determinant_identity_check(prefix);
            auto rep = density::make_report(n, cert.minimum, dc.via_sum, seq.mu);
            row.push_back({"det", dc.via_sum.get_str()});
            row.push_back({"delta", fmt(rep.delta)});
            row.push_back({"Delta", fmt(rep.Delta)});
            row.push_back({"status", "OK"});
        } else {
            std::string w = "(";
            for (size_t i = 0; i < cert.witness.size(); ++i)
                w += cert.witness[i].get_str() + (i + 1 < cert.witness.size() ? " " : ")");
            row.push_back({"det", ""});
            row.push_back({"delta", ""});
            row.push_back({"Delta", ""});
            row.push_back({"status", "FAIL witness " + w});
            pass = false;
            fail_len = len;
        }
        rows.push_back(std::move(row));
        if (!pass) break;
    }
    emit(rows, format, std::cout);
    if (pass) {
        std::cout << "PASS\n";
        return kExitOk;
    }
    std::cout << "FAIL at prefix length " << fail_len << "\n";
    return kExitValidation;
}

int cmd_table(const std::string& format, long mu, long dim, const std::string& strategy,
              double sigma, double eps, uint64_t enum_budget) {
    construct::BuildOptions opt;
    opt.strategy = (strategy == "interval") ? construct::Strategy::Interval
                                            : construct::Strategy::Greedy;
    opt.sigma = sigma;
    opt.eps = eps;
    opt.enum_budget = enum_budget;
    auto res = construct::build_sequence(Integer(mu), dim, opt);
    std::vector<Row> rows;
    for (size_t i = 0; i < res.steps.size(); ++i)
        rows.push_back(step_row(static_cast<long>(i) + 1, res.steps[i]));
    emit(rows, format, std::cout);
    if (!res.complete) {
        std::cerr << "table: interval step " << res.failed_at << " admits no term\n";
        return kExitValidation;
    }
    return kExitOk;
}

int cmd_bounds(const std::string& format, const std::string& dims, long mu) {
    auto [lo, hi] = parse_dims(dims);
    if (lo < 2) throw InputError("bounds: dims must start at 2");
    Real c = density::theta_constant();
    std::vector<Row> rows;
    for (long n = lo; n <= hi; ++n) {
        auto [mh, ball] = density::comparison_bounds(n);
        Integer two_n;
        mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
        Rational q(1, two_n);
        q.canonicalize();
        rows.push_back({{"n", std::to_string(n)},
                        {"V_n", fmt(density::unit_ball_volume(n))},
                        {"corollary", fmt(density::corollary_density_bound(Integer(mu), n))},
                        {"mh", fmt(mh)},
                        {"ball", fmt(ball)},
                        {"theta_const_over_2n", fmt(c * Real(q))}});
    }
    emit(rows, format, std::cout);
    return kExitOk;
}

int cmd_count(const std::string& format, const std::string& dims, long mu,
              uint64_t enum_budget) {
    auto [lo, hi] = parse_dims(dims);
    std::vector<Row> rows;
    for (long n = lo; n <= hi; ++n) {
        Integer count = enumerate::count_norm_le(static_cast<int>(n), Integer(mu), enum_budget);
        // bound rounded down: count <= bound then holds for the exact value too
        Real bound = density::counting_bound(n, Integer(mu), Rnd::Down);
        bool ok = Real(count) <= bound;
        rows.push_back({{"n", std::to_string(n)},
                        {"mu", std::to_string(mu)},
                        {"count", count.get_str()},
                        {"bound", fmt(bound)},
                        {"status", ok ? "OK" : "VIOLATION"}});
        if (!ok) {
            emit(rows, format, std::cout);
            return kExitValidation;
        }
    }
    emit(rows, format, std::cout);
    return kExitOk;
}

int cmd_approx(const std::string& format, const std::string& gram_path,
               const std::vector<long>& kappas, uint64_t svp_budget) {
    QMat G = approx::load_gram_file(gram_path);
    std::vector<Integer> ks;
    for (long k : kappas) ks.push_back(Integer(k));
    auto rows_in = approx::convergence_sweep(G, ks, svp_budget);
    std::vector<Row> rows;
    for (const auto& r : rows_in) {
        Rational e = r.error;
        rows.push_back({{"kappa", r.kappa.get_str()},
                        {"error", e.get_str()},
                        {"min", r.minimum ? r.minimum->get_str() : ""},
                        {"det", r.determinant ? r.determinant->get_str() : ""},
                        {"delta", r.delta ? fmt(*r.delta) : ""},
                        {"Delta", r.Delta ? fmt(*r.Delta) : ""},
                        {"note", r.note}});
    }
    emit(rows, format, std::cout);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mu-sequence and dense kernel-lattice toolkit"};
    app.require_subcommand(1);

    std::string format = "csv";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "structured"}));

    long mu = 2, dim = 1;
    std::string dims = "2..8";
    std::string strategy = "greedy";
    double sigma = -1.0, eps = 0.1;
    uint64_t enum_budget = enumerate::default_budget;
    uint64_t svp_budget = reduce::default_svp_budget;
    std::string out_path, seq_path, gram_path;
    std::vector<long> kappas;

    auto* build = app.add_subcommand("build", "construct a mu-sequence and certify it");
    build->add_option("--mu", mu)->required();
    build->add_option("--dim", dim)->required();
    build->add_option("--strategy", strategy)->check(CLI::IsMember({"greedy", "interval"}));
    build->add_option("--sigma", sigma);
    build->add_option("--eps", eps);
    build->add_option("--enum-budget", enum_budget);
    build->add_option("--svp-budget", svp_budget);
    build->add_option("--out", out_path, "sequence file to write");

    auto* verify = app.add_subcommand("verify", "re-certify a sequence file");
    verify->add_option("file", seq_path)->required();
    verify->add_option("--svp-budget", svp_budget);

    auto* table = app.add_subcommand("table", "per-step construction statistics");
    table->add_option("--mu", mu)->required();
    table->add_option("--dim", dim)->required();
    table->add_option("--strategy", strategy)->check(CLI::IsMember({"greedy", "interval"}));
    table->add_option("--sigma", sigma);
    table->add_option("--eps", eps);
    table->add_option("--enum-budget", enum_budget);

    auto* bounds = app.add_subcommand("bounds", "density bounds per dimension");
    bounds->add_option("--dims", dims);
    bounds->add_option("--mu", mu);

    auto* count = app.add_subcommand("count", "lattice point counts vs volume bound");
    count->add_option("--dims,--dim", dims)->required();
    count->add_option("--mu", mu)->required();
    count->add_option("--enum-budget", enum_budget);

    auto* approx_cmd = app.add_subcommand("approx", "Gram-matrix approximation sweep");
    approx_cmd->add_option("--gram", gram_path)->required();
    approx_cmd->add_option("--kappas", kappas)->required()->delimiter(',');
    approx_cmd->add_option("--svp-budget", svp_budget);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }

    try {
        if (*build)
            return cmd_build(format, mu, dim, strategy, sigma, eps, enum_budget, svp_budget,
                             out_path);
        if (*verify) return cmd_verify(format, seq_path, svp_budget);
        if (*table) return cmd_table(format, mu, dim, strategy, sigma, eps, enum_budget);
        if (*bounds) return cmd_bounds(format, dims, mu);
        if (*count) return cmd_count(format, dims, mu, enum_budget);
        if (*approx_cmd) return cmd_approx(format, gram_path, kappas, svp_budget);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitInput;
}

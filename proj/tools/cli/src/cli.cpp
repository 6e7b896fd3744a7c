#include "dqpt_cli/cli.hpp"

#include "dqpt/errors.hpp"
#include "dqpt/loschmidt.hpp"
#include "dqpt/parallel.hpp"
#include "dqpt/qsl.hpp"
#include "dqpt/zeros.hpp"
#include "dqpt_cli/output.hpp"
#include "dqpt_cli/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

namespace dqpt::cli {

namespace {

constexpr double pi = std::numbers::pi;

struct Config {
    double J{1.0};
    std::optional<double> gamma_i;
    std::optional<double> gamma_f;
    std::optional<int> mode;
    std::optional<int> L;
    std::string L_range;
    std::string gamma_i_range;
    std::string sector{"apbc"};
    double t_max{10.0};
    int t_points{201};
    std::string out;
    std::string format{"csv"};
    std::string verify_format{"json"};
    std::string table;
    std::string side{"plus"};
    bool all_modes{false};
};

struct IntRange {
    int a, b, step;
    std::vector<int> values() const {
        std::vector<int> v;
        for (int x = a; x <= b; x += step) v.push_back(x);
        return v;
    }
    std::string text() const { return std::to_string(a) + ":" + std::to_string(b) + ":" + std::to_string(step); }
};

struct RealRange {
    double a, b, step;
    int count;
    std::vector<double> values() const {
        std::vector<double> v;
        for (int i = 0; i < count; ++i) v.push_back(count == 1 ? a : a + (b - a) * i / (count - 1));
        return v;
    }
    std::string text() const { return format_number(a) + ":" + format_number(b) + ":" + format_number(step); }
};

std::vector<std::string> split_colon(const std::string& s, const std::string& flag) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string p;
    while (std::getline(ss, p, ':')) parts.push_back(p);
    if (parts.size() != 3) throw ArgumentError(flag + " expects a:b:step, got '" + s + "'");
    return parts;
}

template <class T>
T parse_number(const std::string& s, const std::string& flag) {
    T v{};
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || end != s.data() + s.size()) throw ArgumentError(flag + ": bad number '" + s + "'");
    return v;
}

IntRange parse_int_range(const std::string& s) {
    const auto p = split_colon(s, "--L-range");
    IntRange r{parse_number<int>(p[0], "--L-range"), parse_number<int>(p[1], "--L-range"),
               parse_number<int>(p[2], "--L-range")};
    if (r.step <= 0 || r.step % 2 != 0) throw ArgumentError("--L-range: step must be a positive even integer");
    if (r.a > r.b) throw ArgumentError("--L-range: empty range");
    if (r.a % 2 != 0 || r.b % 2 != 0) throw ArgumentError("--L-range: bounds must be even");
    validate_size(r.a);
    return r;
}

RealRange parse_real_range(const std::string& s) {
    const auto p = split_colon(s, "--gamma-i-range");
    RealRange r{parse_number<double>(p[0], "--gamma-i-range"), parse_number<double>(p[1], "--gamma-i-range"),
                parse_number<double>(p[2], "--gamma-i-range"), 0};
    if (!std::isfinite(r.a) || !std::isfinite(r.b) || !(r.step > 0.0) || !std::isfinite(r.step)) {
        throw ArgumentError("--gamma-i-range: need finite bounds and a positive step");
    }
    if (r.a > r.b) throw ArgumentError("--gamma-i-range: empty range");
    const double n = std::round((r.b - r.a) / r.step);
    if (std::abs(r.a + n * r.step - r.b) > 1e-9 * std::max(1.0, std::abs(r.b))) {
        throw ArgumentError("--gamma-i-range: step does not divide the interval");
    }
    if (n > 1e6) throw ArgumentError("--gamma-i-range: too many points");
    r.count = static_cast<int>(n) + 1;
    return r;
}

// Normalized command line, rebuilt from resolved values.
class CommandLine {
public:
    explicit CommandLine(std::string sub) { text_ = std::move(sub); }
    CommandLine& add(const std::string& flag, const std::string& v) {
        text_ += " " + flag + " " + v;
        return *this;
    }
    CommandLine& add(const std::string& flag, double v) { return add(flag, format_number(v)); }
    CommandLine& add(const std::string& flag, int v) { return add(flag, std::to_string(v)); }
    CommandLine& flag(const std::string& f) {
        text_ += " " + f;
        return *this;
    }
    const std::string& str() const { return text_; }

private:
    std::string text_;
};

double require_finite(double x, const std::string& flag) {
    if (!std::isfinite(x)) throw ArgumentError(flag + " must be finite");
    return x;
}

void emit(const Config& cfg, const Document& doc, std::ostream& out) {
    std::ostringstream buf;
    if (cfg.format == "json") {
        write_json(doc, buf);
    } else {
        write_csv(doc, buf);
    }
    if (cfg.out.empty()) {
        out << buf.str();
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
    if (!f) throw ArgumentError("cannot open output file '" + cfg.out + "'");
    f << buf.str();
    if (!f) throw ArgumentError("failed writing '" + cfg.out + "'");
}

CommandLine base(const std::string& sub, const Config& cfg) {
    CommandLine c(sub);
    c.add("--J", cfg.J);
    return c;
}

void finish(CommandLine& c, const Config& cfg) { c.add("--format", cfg.format); }

// ---- echo

int cmd_echo(const Config& cfg, std::ostream& out) {
    const int L = cfg.L.value_or(22);
    const double gi = require_finite(cfg.gamma_i.value_or(0.3), "--gamma-i");
    const Sector sector = parse_sector(cfg.sector);
    if (cfg.gamma_f && cfg.mode) throw ArgumentError("--gamma-f and --mode are mutually exclusive");
    if (!(cfg.t_max >= 0.0) || !std::isfinite(cfg.t_max)) throw ArgumentError("--t-max must be finite and >= 0");
    const std::vector<double> jt = uniform_time_grid(cfg.t_max, cfg.t_points);
    std::vector<double> t(jt.size());
    std::transform(jt.begin(), jt.end(), t.begin(), [&](double x) { return x / cfg.J; });

    CommandLine c = base("echo", cfg);
    c.add("--gamma-i", gi).add("--L", L).add("--sector", std::string(to_string(sector)));

    Document doc;
    doc.columns = {"Jt", "echo", "rate"};
    auto series_rows = [&](const QuenchSpec& spec) {
        const EchoSeries s = echo_series(spec, t);
        Block b;
        for (std::size_t i = 0; i < jt.size(); ++i) b.rows.push_back({jt[i], s.echo[i], s.rate[i]});
        return b;
    };

    if (cfg.gamma_f) {
        const double gf = require_finite(*cfg.gamma_f, "--gamma-f");
        c.add("--gamma-f", gf);
        doc.blocks.push_back(series_rows(make_quench(cfg.J, gi * cfg.J, gf * cfg.J, L, sector)));
    } else {
        const std::vector<ZeroSolution> zs = zero_set(gi, L, sector, cfg.J);
        std::vector<const ZeroSolution*> chosen;
        if (cfg.mode) {
            c.add("--mode", *cfg.mode);
            if (*cfg.mode < 1 || *cfg.mode > static_cast<int>(zs.size())) {
                throw ArgumentError("--mode must lie in 1.." + std::to_string(zs.size()));
            }
            const ZeroSolution& z = zs[*cfg.mode - 1];
            if (z.unbounded()) throw DomainError("mode " + std::to_string(z.m) + " has an unbounded matched field");
            chosen.push_back(&z);
        } else {
            if (cfg.all_modes) c.flag("--all-modes");
            for (const ZeroSolution& z : zs) {
                if (z.unbounded()) continue;
                if (!cfg.all_modes && z.gamma_f().value() <= 0.0) continue;
                chosen.push_back(&z);
            }
        }
        for (const ZeroSolution* z : chosen) {
            Block b = series_rows(z->quench());
            b.label = {{"m", Cell(z->m)},
                       {"k_over_pi", Cell(static_cast<double>(z->k.numerator()) / z->k.denominator())},
                       {"gamma_f", Cell(z->gamma_f())},
                       {"Jt0", Cell(cfg.J * critical_times(*z, 0).times.front())}};
            doc.blocks.push_back(std::move(b));
        }
    }
    c.add("--t-max", cfg.t_max).add("--t-points", cfg.t_points);
    finish(c, cfg);
    doc.command = c.str();
    emit(cfg, doc, out);
    return kOk;
}

// ---- zeros

int cmd_zeros(const Config& cfg, std::ostream& out) {
    const int L = cfg.L.value_or(14);
    const Sector sector = parse_sector(cfg.sector);
    CommandLine c = base("zeros", cfg);
    std::vector<double> gammas;
    if (cfg.gamma_i && !cfg.gamma_i_range.empty()) throw ArgumentError("--gamma-i and --gamma-i-range are mutually exclusive");
    if (cfg.gamma_i) {
        gammas = {require_finite(*cfg.gamma_i, "--gamma-i")};
        c.add("--gamma-i", gammas.front());
    } else {
        const RealRange r = parse_real_range(cfg.gamma_i_range.empty() ? "-3:3:0.01" : cfg.gamma_i_range);
        gammas = r.values();
        c.add("--gamma-i-range", r.text());
    }
    c.add("--L", L).add("--sector", std::string(to_string(sector)));
    finish(c, cfg);

    validate_size(L);
    Document doc;
    doc.command = c.str();
    doc.columns = {"gamma_i", "m", "k_over_pi", "gamma_f"};
    const auto per_gamma = parallel_map<std::vector<ZeroSolution>>(
        gammas.size(), [&](std::size_t i) { return zero_set(gammas[i], L, sector, cfg.J); });
    Block b;
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        for (const ZeroSolution& z : per_gamma[i]) {
            b.rows.push_back({gammas[i], z.m, static_cast<double>(z.k.numerator()) / z.k.denominator(), Cell(z.gamma_f())});
        }
    }
    doc.blocks.push_back(std::move(b));
    emit(cfg, doc, out);
    return kOk;
}

// ---- spacing

int cmd_spacing(const Config& cfg, std::ostream& out) {
    const std::string table = cfg.table.empty() ? "mean" : cfg.table;
    CommandLine c = base("spacing", cfg);
    c.add("--table", table);
    Document doc;
    Block b;
    if (table == "mean") {
        const double gi = require_finite(cfg.gamma_i.value_or(1.5), "--gamma-i");
        const IntRange r = parse_int_range(cfg.L_range.empty() ? "100:4000:100" : cfg.L_range);
        c.add("--gamma-i", gi).add("--L-range", r.text());
        doc.columns = {"L", "mean_spacing", "four_over_L"};
        const std::vector<int> sizes = r.values();
        const auto res = parallel_map<MeanSpacing>(sizes.size(), [&](std::size_t i) { return mean_spacing(gi, sizes[i]); });
        for (std::size_t i = 0; i < sizes.size(); ++i) b.rows.push_back({sizes[i], res[i].value, 4.0 / sizes[i]});
    } else if (table == "gap") {
        const double gi = require_finite(cfg.gamma_i.value_or(0.6), "--gamma-i");
        if (cfg.side != "plus" && cfg.side != "minus") throw ArgumentError("--side must be plus or minus");
        const GapSide side = cfg.side == "plus" ? GapSide::Plus1 : GapSide::Minus1;
        if (!gap_coefficient(gi, side)) throw DomainError("gap coefficient is singular at this gamma_i");
        const IntRange r = parse_int_range(cfg.L_range.empty() ? "100:4000:100" : cfg.L_range);
        c.add("--gamma-i", gi).add("--side", cfg.side).add("--L-range", r.text());
        doc.columns = {"L", "inv_L2", "gap", "asymptote"};
        const std::vector<int> sizes = r.values();
        const auto res = parallel_map<std::optional<CriticalGap>>(
            sizes.size(), [&](std::size_t i) { return std::optional<CriticalGap>(critical_gap(gi, sizes[i], side)); });
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            const double L = sizes[i];
            b.rows.push_back({sizes[i], 1.0 / (L * L), res[i]->gap, *res[i]->asymptote});
        }
    } else {
        throw ArgumentError("--table must be mean or gap for spacing");
    }
    finish(c, cfg);
    doc.command = c.str();
    doc.blocks.push_back(std::move(b));
    emit(cfg, doc, out);
    return kOk;
}

// ---- qsl

int cmd_qsl(const Config& cfg, std::ostream& out) {
    const double gi = require_finite(cfg.gamma_i.value_or(0.3), "--gamma-i");
    const Sector sector = parse_sector(cfg.sector);
    if (cfg.L && !cfg.L_range.empty()) throw ArgumentError("--L and --L-range are mutually exclusive");
    CommandLine c = base("qsl", cfg);
    c.add("--gamma-i", gi).add("--sector", std::string(to_string(sector)));
    Document doc;
    Block b;
    const double J = cfg.J;
    if (!cfg.L_range.empty()) {
        const IntRange r = parse_int_range(cfg.L_range);
        c.add("--L-range", r.text());
        doc.columns = {"L", "tau_min", "tau_max", "tau_closest_plus1", "tau_closest_minus1",
                       "L_over_4", "pi_over_4", "pi2_over_4L"};
        const std::vector<int> sizes = r.values();
        const auto reports = parallel_map<std::vector<double>>(sizes.size(), [&](std::size_t i) {
            const QslReport rep = qsl_report(gi, sizes[i], sector, J);
            const auto p = rep.closest_to(1.0);
            const auto m = rep.closest_to(-1.0);
            if (!p || !m) throw DomainError("no bounded matched mode at L = " + std::to_string(sizes[i]));
            return std::vector<double>{J * rep.tau_min(), J * rep.tau_max(), J * rep.entries[*p].tau,
                                       J * rep.entries[*m].tau};
        });
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            const double L = sizes[i];
            const auto& v = reports[i];
            b.rows.push_back({sizes[i], v[0], v[1], v[2], v[3], L / 4.0, pi / 4.0, pi * pi / (4.0 * L)});
        }
    } else {
        const int L = cfg.L.value_or(22);
        c.add("--L", L);
        doc.columns = {"m", "k_over_pi", "gamma_f", "E_kf", "tau", "inv_tau"};
        const QslReport rep = qsl_report(gi, L, sector, J);
        for (const QslEntry& e : rep.entries) {
            const double tau = J * e.tau;
            const ExtendedReal E = e.E_kf.is_finite() ? ExtendedReal::finite(e.E_kf.value() / J) : e.E_kf;
            const double inv = tau == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / tau;
            b.rows.push_back({e.m, static_cast<double>(e.k.numerator()) / e.k.denominator(), Cell(e.gamma_f), Cell(E), tau, inv});
        }
        b.label = {{"tau_min", Cell(J * rep.tau_min())}, {"tau_max", Cell(J * rep.tau_max())}};
    }
    finish(c, cfg);
    doc.command = c.str();
    doc.blocks.push_back(std::move(b));
    emit(cfg, doc, out);
    return kOk;
}

// ---- stats

int cmd_stats(const Config& cfg, std::ostream& out) {
    const Sector sector = parse_sector(cfg.sector);
    CommandLine c = base("stats", cfg);
    std::vector<double> gammas;
    if (cfg.gamma_i && !cfg.gamma_i_range.empty()) throw ArgumentError("--gamma-i and --gamma-i-range are mutually exclusive");
    if (cfg.gamma_i) {
        gammas = {require_finite(*cfg.gamma_i, "--gamma-i")};
        c.add("--gamma-i", gammas.front());
    } else {
        const RealRange r = parse_real_range(cfg.gamma_i_range.empty() ? "0:2:0.05" : cfg.gamma_i_range);
        gammas = r.values();
        c.add("--gamma-i-range", r.text());
    }
    const IntRange r = parse_int_range(cfg.L_range.empty() ? "10:2000:2" : cfg.L_range);
    c.add("--L-range", r.text()).add("--sector", std::string(to_string(sector)));
    finish(c, cfg);

    Document doc;
    doc.command = c.str();
    doc.columns = {"gamma_i", "mean", "variance", "samples", "unbounded_sizes"};
    Block b;
    for (double g : gammas) {
        const TauMinStats s = tau_min_stats(g, r.a, r.b, r.step, sector, cfg.J);
        b.rows.push_back({g, cfg.J * s.mean, cfg.J * cfg.J * s.variance, s.samples, s.unbounded_sizes});
    }
    doc.blocks.push_back(std::move(b));
    emit(cfg, doc, out);
    return kOk;
}

// ---- verify

nlohmann::ordered_json num(double x) {
    if (std::isfinite(x)) return x;
    return format_number(x);
}

int cmd_verify(const Config& cfg, std::ostream& out) {
    if (cfg.verify_format != "json") throw ArgumentError("verify writes JSON only");
    if (cfg.J != 1.0) throw ArgumentError("verify runs at J = 1");
    const IntRange sizes = parse_int_range(cfg.L_range.empty() ? "4:10:2" : cfg.L_range);
    if (cfg.t_points < 2) throw ArgumentError("--t-points must be at least 2 for verify");
    const std::vector<double> jt = uniform_time_grid(cfg.t_max, cfg.t_points);
    CommandLine c("verify");
    c.add("--J", cfg.J).add("--L-range", sizes.text()).add("--t-max", cfg.t_max).add("--t-points", cfg.t_points);
    c.add("--format", cfg.verify_format);

    const VerifyTolerances tol;
    nlohmann::ordered_json rep;
    rep["command"] = "dqpt " + c.str();

    const std::vector<double> dual_g{0.3, 0.8, 1.25, 2.5};
    const std::vector<double> dual_t = uniform_time_grid(cfg.t_max, 100);
    const auto dual = duality_sweep(dual_g, {14, 400}, dual_t);
    double dual_max = 0.0;
    for (const auto& d : dual) dual_max = std::max(dual_max, d.max_relative_error);
    const bool dual_ok = dual_max <= tol.duality;
    rep["duality"] = {{"tolerance", tol.duality},
                      {"sizes", {14, 400}},
                      {"gammas", dual_g},
                      {"t_points", dual_t.size()},
                      {"max_relative_error", num(dual_max)},
                      {"pass", dual_ok}};

    const std::vector<double> or_g{0.2, 0.5, 1.5, 3.0};
    const auto orc = oracle_sweep(or_g, sizes.values(), jt);
    double echo_max = 0.0;
    double mom_max = 0.0;
    auto cases = nlohmann::ordered_json::array();
    for (const auto& o : orc) {
        const double dm = std::abs(o.variance_closed_form - o.variance_oracle);
        echo_max = std::max(echo_max, o.max_abs_error);
        mom_max = std::max(mom_max, dm);
        cases.push_back({{"L", o.L},
                         {"gamma_i", o.gamma_i},
                         {"gamma_f", o.gamma_f},
                         {"max_abs_echo_error", num(o.max_abs_error)},
                         {"variance_closed_form", num(o.variance_closed_form)},
                         {"variance_oracle", num(o.variance_oracle)},
                         {"variance_delta", num(dm)}});
    }
    const bool echo_ok = echo_max <= tol.oracle_echo;
    const bool mom_ok = mom_max <= tol.moments;
    rep["oracle"] = {{"echo_tolerance", tol.oracle_echo},
                     {"moment_tolerance", tol.moments},
                     {"max_abs_echo_error", num(echo_max)},
                     {"max_variance_delta", num(mom_max)},
                     {"echo_pass", echo_ok},
                     {"moment_pass", mom_ok},
                     {"cases", cases}};

    const auto cl = classical_limit({8, 100, 4000});
    bool cl_ok = true;
    auto cl_cases = nlohmann::ordered_json::array();
    for (const auto& x : cl) {
        cl_ok = cl_ok && std::abs(x.ratio - 1.0) <= tol.classical;
        cl_cases.push_back({{"L", x.L}, {"delta_E_over_sqrt_L", num(x.ratio)}});
    }
    rep["classical_limit"] = {{"tolerance", tol.classical}, {"cases", cl_cases}, {"pass", cl_ok}};

    const bool ok = dual_ok && echo_ok && mom_ok && cl_ok;
    rep["pass"] = ok;

    std::ostringstream buf;
    buf << rep.dump(2) << '\n';
    if (cfg.out.empty()) {
        out << buf.str();
    } else {
        std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
        if (!f) throw ArgumentError("cannot open output file '" + cfg.out + "'");
        f << buf.str();
    }
    return ok ? kOk : kToleranceBreach;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Loschmidt-echo zeros and speed limits for the transverse-field Ising chain", "dqpt"};
    app.require_subcommand(1);
    Config cfg;

    auto common = [&](CLI::App* s) {
        s->add_option("--J", cfg.J, "coupling (default 1)");
        s->add_option("--sector", cfg.sector, "apbc | pbc")->check(CLI::IsMember({"apbc", "pbc"}));
        s->add_option("--out", cfg.out, "output path (default stdout)");
        s->add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    };
    auto gamma_i = [&](CLI::App* s) { s->add_option("--gamma-i", cfg.gamma_i, "h_i / J"); };

    CLI::App* echo = app.add_subcommand("echo", "echo and rate function on a Jt grid");
    common(echo);
    gamma_i(echo);
    echo->add_option("--gamma-f", cfg.gamma_f, "h_f / J");
    echo->add_option("--mode", cfg.mode, "matched mode index m");
    echo->add_option("--L", cfg.L, "chain length");
    echo->add_option("--t-max", cfg.t_max, "end of the Jt grid");
    echo->add_option("--t-points", cfg.t_points, "grid points");
    echo->add_flag("--all-modes", cfg.all_modes, "include matched modes with gamma_f <= 0");

    CLI::App* zeros = app.add_subcommand("zeros", "matched postquench fields per mode");
    common(zeros);
    gamma_i(zeros);
    zeros->add_option("--gamma-i-range", cfg.gamma_i_range, "a:b:step");
    zeros->add_option("--L", cfg.L, "chain length");

    CLI::App* spacing = app.add_subcommand("spacing", "mean curve spacing and critical gap");
    common(spacing);
    gamma_i(spacing);
    spacing->add_option("--L-range", cfg.L_range, "a:b:step");
    spacing->add_option("--table", cfg.table, "mean | gap");
    spacing->add_option("--side", cfg.side, "plus | minus (gap table)");

    CLI::App* qsl = app.add_subcommand("qsl", "speed-limit times per mode or per size");
    common(qsl);
    gamma_i(qsl);
    qsl->add_option("--L", cfg.L, "single size: per-mode report");
    qsl->add_option("--L-range", cfg.L_range, "a:b:step: per-size extremes");

    CLI::App* stats = app.add_subcommand("stats", "mean and variance of tau_min over sizes");
    common(stats);
    gamma_i(stats);
    stats->add_option("--gamma-i-range", cfg.gamma_i_range, "a:b:step");
    stats->add_option("--L-range", cfg.L_range, "a:b:step");

    CLI::App* verify = app.add_subcommand("verify", "duality and oracle verification report");
    verify->add_option("--J", cfg.J);
    verify->add_option("--L-range", cfg.L_range, "oracle sizes a:b:step");
    verify->add_option("--t-max", cfg.t_max);
    verify->add_option("--t-points", cfg.t_points);
    verify->add_option("--out", cfg.out);
    verify->add_option("--format", cfg.verify_format)->check(CLI::IsMember({"csv", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const auto parsed = app.get_subcommands();
        out << (parsed.empty() ? app.help() : parsed.front()->help());
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "dqpt: " << e.what() << '\n';
        return kArgumentError;
    }

    try {
        if (!(cfg.J > 0.0) || !std::isfinite(cfg.J)) throw DomainError("--J must be positive and finite");
        if (*echo) return cmd_echo(cfg, out);
        if (*zeros) return cmd_zeros(cfg, out);
        if (*spacing) return cmd_spacing(cfg, out);
        if (*qsl) return cmd_qsl(cfg, out);
        if (*stats) return cmd_stats(cfg, out);
        if (*verify) return cmd_verify(cfg, out);
    } catch (const ResourceGuardError& e) {
        err << "dqpt: " << e.what() << '\n';
        return kResourceGuard;
    } catch (const ArgumentError& e) {
        err << "dqpt: " << e.what() << '\n';
        return kArgumentError;
    } catch (const DomainError& e) {
        err << "dqpt: " << e.what() << '\n';
        return kArgumentError;
    } catch (const SizeDomainError& e) {
        err << "dqpt: " << e.what() << '\n';
        return kArgumentError;
    } catch (const std::exception& e) {
        err << "dqpt: " << e.what() << '\n';
        return kFailure;
    }
    return kArgumentError;
}

} // namespace dqpt::cli

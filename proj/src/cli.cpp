#include "edgekit/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <memory>
#include <ostream>
#include <sstream>

#include "edgekit/errors.hpp"
#include "edgekit/kernels.hpp"
#include "edgekit/lgtransform.hpp"
#include "edgekit/montecarlo.hpp"
#include "edgekit/operator.hpp"
#include "edgekit/parallel.hpp"
#include "edgekit/ratelab.hpp"
#include "edgekit/scaling.hpp"

namespace edgekit {

using nlohmann::json;

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw DomainError("grid '" + text + "' is not of the form start:stop:step");
        }
    }
    if (parts.size() != 3) throw DomainError("grid '" + text + "' is not of the form start:stop:step");
    const double start = parts[0], stop = parts[1], step = parts[2];
    if (!(step > 0.0) || !(stop >= start)) throw DomainError("grid needs step > 0 and stop >= start");
    const long count = std::lround(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 1000000) throw DomainError("grid has more than 10^6 points");
    std::vector<double> grid(count);
    for (long i = 0; i < count; ++i) grid[i] = start + i * step;
    return grid;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size() || v < 1) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw DomainError("'" + text + "' is not a comma-separated list of positive integers");
        }
    }
    if (out.empty()) throw DomainError("empty integer list");
    return out;
}

namespace {

struct Options {
    // shared
    std::string out_path;
    unsigned threads = 0;
    bool verbose = false;
    // ensemble
    int big_n = 200;
    int a = 200;
    double gamma = 0.5;
    double s0 = 0.0;
    int nodes = 120;
    double length = 14.0;
    // kernel
    std::string which = "airy";
    std::string grid;
    double bessel_a = 1.0;
    bool diagonal = false;
    // lg
    int count = 100;
    // tw2
    double s_min = -6.0, s_max = 3.0, step = 0.05;
    int tw_nodes = 80;
    double tw_length = 16.0;
    // rate
    std::string n_list = "64,128,256,512";
    // sample, mp
    int reps = 5000;
    int mp_reps = 50;
    std::uint64_t seed = 42;
    int bins = 50;
    // report
    std::string rate_in, sample_in, mp_in;
};

// Writes the primary artifact either to --out or to the main stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw DomainError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : fallback_; }

private:
    std::ostream& fallback_;
    std::unique_ptr<std::ofstream> file_;
};

// CSV artifacts carry their resolved configuration in a sidecar file next to --out,
// or on the diagnostic stream when writing to standard output.
void echo_csv_config(const Options& o, const json& config, std::ostream& err) {
    if (o.out_path.empty()) {
        err << "config: " << config.dump() << '\n';
        return;
    }
    std::ofstream meta(o.out_path + ".config.json");
    if (!meta) throw DomainError("cannot write '" + o.out_path + ".config.json'");
    meta << config.dump(2) << '\n';
}

void write_json(const Options& o, const json& doc, std::ostream& out) {
    Sink sink(o.out_path, out);
    sink.stream() << doc.dump(2) << '\n';
}

void csv_row(std::ostream& os, std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
        if (!first) os << ',';
        os << format_number(v);
        first = false;
    }
    os << '\n';
}

json ensemble_json(const EnsembleParams& p) { return {{"n", p.big_n}, {"a", p.a}, {"gamma_n", p.gamma}}; }

QuadratureSpec quad_of(const Options& o) {
    if (o.nodes < 1 || !(o.length > 0.0)) throw DomainError("need --nodes >= 1 and --length > 0");
    QuadratureSpec q;
    q.s0 = o.s0;
    q.nodes = o.nodes;
    q.length = o.length;
    return q;
}

int run_kernel(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.grid.empty()) throw DomainError("kernel: --grid start:stop:step is required");
    const std::vector<double> grid = parse_grid(o.grid);
    std::function<double(double, double)> k;
    json config = {{"subcommand", "kernel"}, {"which", o.which}, {"grid", o.grid}, {"diagonal", o.diagonal}};
    if (o.which == "airy") {
        k = airy_kernel;
    } else if (o.which == "bessel") {
        if (!(o.bessel_a > -1.0)) throw DomainError("kernel: --bessel-a must exceed -1");
        k = [a = o.bessel_a](double x, double y) { return bessel_kernel(a, x, y); };
        config["bessel_a"] = o.bessel_a;
    } else {
        EnsembleParams p = make_params(o.big_n, o.a);
        config["n"] = o.big_n;
        config["a"] = o.a;
        if (o.which == "lue") {
            k = [p](double x, double y) { return lue_kernel(p, x, y); };
        } else if (o.which == "gtau" || o.which == "htau") {
            EdgeScaling sc = composite_left(p);
            KernelSpec spec = o.which == "gtau" ? KernelSpec::g_tau(p, sc, o.s0) : KernelSpec::h_tau(p, sc, o.s0);
            k = spec;
            config["s0"] = o.s0;
        } else {
            throw DomainError("kernel: unknown --which '" + o.which + "'");
        }
    }
    echo_csv_config(o, config, err);
    Sink sink(o.out_path, out);
    std::ostream& os = sink.stream();
    if (o.diagonal) {
        os << "x,value\n";
        for (double x : grid) csv_row(os, {x, k(x, x)});
    } else {
        os << "x,y,value\n";
        for (double x : grid)
            for (double y : grid) csv_row(os, {x, y, k(x, y)});
    }
    return exit_ok;
}

int run_scaling(const Options& o, std::ostream& out) {
    EnsembleParams p = make_params(o.big_n, o.a);
    EdgeScaling sc = composite_left(p);
    DeviationParams dev = deviation_params(p, sc);
    MuSigma left = mu_sigma_left(p.n - 1, p.big_n), right = mu_sigma_left(p.n, p.big_n - 1);
    json doc = {{"config", {{"subcommand", "scaling"}, {"n", o.big_n}, {"a", o.a}}},
                {"mu_tilde", sc.mu},
                {"sigma_tilde", sc.sigma},
                {"theta_left", dev.theta_left},
                {"theta_right", dev.theta_right},
                {"mu_pairs", {left.mu, right.mu}},
                {"sigma_pairs", {left.sigma, right.sigma}}};
    write_json(o, doc, out);
    return exit_ok;
}

int run_lg(const Options& o, std::ostream& out, std::ostream& err) {
    EnsembleParams p = make_params(o.big_n, o.a);
    LGContext ctx = lg_context(p);
    std::vector<double> zs;
    if (!o.grid.empty()) {
        zs = parse_grid(o.grid);
    } else {
        if (o.count < 1) throw DomainError("lg: --count must be positive");
        for (int i = 1; i <= o.count; ++i) zs.push_back(ctx.z1 * i / (o.count + 1.0));
    }
    for (double z : zs)
        if (!(z > 0.0 && z < ctx.z2)) throw DomainError("lg: grid points must lie in (0, z2)");
    json config = {{"subcommand", "lg"}, {"n", o.big_n}, {"a", o.a}, {"z1", ctx.z1}, {"z2", ctx.z2}};
    if (!o.grid.empty()) config["grid"] = o.grid;
    else config["count"] = o.count;
    echo_csv_config(o, config, err);
    Sink sink(o.out_path, out);
    std::ostream& os = sink.stream();
    os << "z,f,zeta,f_tilde,psi\n";
    for (double z : zs) {
        double psi = z < ctx.z1 ? psi_eval(ctx, z) : std::nan("");
        csv_row(os, {z, f_eval(ctx, z), zeta_left(ctx, z), f_tilde(ctx, z), psi});
    }
    return exit_ok;
}

int run_tw2(const Options& o, std::ostream& out, std::ostream& err) {
    if (!(o.step > 0.0) || !(o.s_max >= o.s_min)) throw DomainError("tw2: need --step > 0 and --s-max >= --s-min");
    QuadratureSpec q = tw2_quadrature(o.tw_nodes, o.tw_length);
    const long count = std::lround(std::floor((o.s_max - o.s_min) / o.step + 1e-9)) + 1;
    std::vector<double> f(count);
    parallel_for(count, [&](std::size_t i) { f[i] = tw2(o.s_min + i * o.step, q); });
    json config = {{"subcommand", "tw2"}, {"s_min", o.s_min}, {"s_max", o.s_max}, {"step", o.step},
                   {"nodes", o.tw_nodes},  {"length", o.tw_length}};
    echo_csv_config(o, config, err);
    Sink sink(o.out_path, out);
    std::ostream& os = sink.stream();
    os << "s,F2\n";
    for (long i = 0; i < count; ++i) csv_row(os, {o.s_min + i * o.step, f[i]});
    return exit_ok;
}

int run_w1bound(const Options& o, std::ostream& out) {
    if (!(o.gamma > 0.0 && o.gamma < 1.0)) throw DomainError("w1bound: --gamma must lie in (0, 1)");
    EnsembleParams p = params_for_gamma(o.big_n, o.gamma);
    if (p.a < 2) throw DomainError("w1bound: the chosen N and gamma give a < 2");
    EdgeScaling sc = composite_left(p);
    EdgeNorms e = edge_norms(p, sc, o.s0, quad_of(o));
    json doc = {{"config", {{"subcommand", "w1bound"}, {"gamma", o.gamma}, {"n", o.big_n}, {"s0", o.s0},
                            {"nodes", o.nodes}, {"length", o.length}}},
                {"ensemble", ensemble_json(p)},
                {"mu_tilde", sc.mu},
                {"sigma_tilde", sc.sigma},
                {"norm_sum", e.norm_sum},
                {"norm_plus", e.norm_plus},
                {"norm_g", e.norm_g},
                {"norm_h", e.norm_h},
                {"norm_diff", e.norm_diff},
                {"w1_bound", e.w1}};
    write_json(o, doc, out);
    return exit_ok;
}

int run_rate(const Options& o, std::ostream& out) {
    std::vector<int> ns = parse_int_list(o.n_list);
    RateReport r = norm_sweep(o.gamma, ns, o.s0, quad_of(o));
    json entries = json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"n", e.big_n},
                           {"a", e.a},
                           {"gamma_n", e.gamma_n},
                           {"norm_sum", e.norm_sum},
                           {"norm_g", e.norm_g},
                           {"norm_h", e.norm_h},
                           {"w1_bound", e.w1_bound}});
    json doc = {{"config", {{"subcommand", "rate"}, {"gamma", o.gamma}, {"n_list", ns}, {"s0", o.s0},
                            {"nodes", o.nodes}, {"length", o.length}}},
                {"gamma", r.gamma},
                {"s0", r.s0},
                {"entries", entries},
                {"slopes", {{"sum", r.fit_sum.slope}, {"g", r.fit_g.slope}, {"h", r.fit_h.slope}, {"w1", r.fit_w1.slope}}},
                {"r2",
                 {{"sum", r.fit_sum.r_squared},
                  {"g", r.fit_g.r_squared},
                  {"h", r.fit_h.r_squared},
                  {"w1", r.fit_w1.r_squared}}}};
    write_json(o, doc, out);
    return exit_ok;
}

int run_sample(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.reps < 1) throw DomainError("sample: --reps must be positive");
    EnsembleParams p = make_params(o.big_n, o.a);
    SampleBatch b = scaled_min_batch(p, o.reps, o.seed);
    json config = {{"subcommand", "sample"}, {"n", o.big_n}, {"a", o.a}, {"reps", o.reps}, {"seed", o.seed},
                   {"mu_tilde", b.mu},       {"sigma_tilde", b.sigma}};
    echo_csv_config(o, config, err);
    {
        Sink sink(o.out_path, out);
        std::ostream& os = sink.stream();
        os << "rep,min_eig,scaled_min\n";
        for (int r = 0; r < b.reps; ++r) {
            os << r << ',';
            csv_row(os, {b.min_eigs[r], b.scaled_min[r]});
        }
    }
    if (o.verbose) {
        QuadratureSpec q = tw2_quadrature();
        auto f2 = [&](double s) { return tw2(s, q); };
        err << "ks_tw2 (mu - min) / sigma: " << format_number(ks_statistic(b.scaled_min, f2)) << '\n';
        err << "ks_tw2 (min + mu) / sigma: " << format_number(ks_statistic(printed_convention(b), f2)) << '\n';
    }
    return exit_ok;
}

int run_mp(const Options& o, std::ostream& out, std::ostream& err) {
    EnsembleParams p = make_params(o.big_n, o.a);
    MpComparison c = esm_vs_mp(p, o.mp_reps, o.seed, o.bins);
    json config = {{"subcommand", "mp"}, {"n", o.big_n}, {"a", o.a}, {"reps", o.mp_reps},
                   {"seed", o.seed},     {"bins", o.bins}, {"l1", c.l1}};
    echo_csv_config(o, config, err);
    Sink sink(o.out_path, out);
    std::ostream& os = sink.stream();
    os << "bin_lo,bin_hi,hist_mass,mp_mass,mp_density\n";
    for (std::size_t i = 0; i < c.hist_mass.size(); ++i)
        csv_row(os, {c.edges[i], c.edges[i + 1], c.hist_mass[i], c.mp_mass[i], c.mp_density[i]});
    if (o.verbose) err << "l1: " << format_number(c.l1) << '\n';
    return exit_ok;
}

// Reads a CSV with a header row into named numeric columns.
std::vector<std::vector<double>> read_csv_columns(const std::string& path, const std::vector<std::string>& names) {
    std::ifstream in(path);
    if (!in) throw DomainError("report: cannot read '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw DomainError("report: '" + path + "' is empty");
    std::vector<std::string> header;
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) header.push_back(cell);
    }
    std::vector<std::size_t> idx;
    for (const auto& n : names) {
        auto it = std::find(header.begin(), header.end(), n);
        if (it == header.end()) throw DomainError("report: '" + path + "' has no column '" + n + "'");
        idx.push_back(it - header.begin());
    }
    std::vector<std::vector<double>> cols(names.size());
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (idx[k] >= cells.size()) throw DomainError("report: short row in '" + path + "'");
            cols[k].push_back(std::stod(cells[idx[k]]));
        }
    }
    return cols;
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

int run_report(const Options& o, std::ostream& out) {
    if (o.rate_in.empty() && o.sample_in.empty() && o.mp_in.empty())
        throw DomainError("report: missing input, give at least one of --rate, --sample, --mp");
    std::ostringstream md;
    md << "# edgekit report\n";
    if (!o.rate_in.empty()) {
        std::ifstream in(o.rate_in);
        if (!in) throw DomainError("report: cannot read '" + o.rate_in + "'");
        json r;
        try {
            r = json::parse(in);
        } catch (const json::exception& e) {
            throw DomainError("report: '" + o.rate_in + "' is not valid JSON");
        }
        md << "\n## Rate sweep\n\n";
        md << "gamma: " << format_number(r.at("gamma").get<double>()) << ", s0: " << format_number(r.at("s0").get<double>())
           << "\n\n";
        md << "| n | a | norm_sum | norm_g | norm_h | w1_bound |\n|---|---|---|---|---|---|\n";
        bool decreasing = true;
        double prev = INFINITY;
        for (const auto& e : r.at("entries")) {
            double w1 = e.at("w1_bound").get<double>();
            decreasing = decreasing && w1 < prev;
            prev = w1;
            md << "| " << e.at("n").get<int>() << " | " << e.at("a").get<int>() << " | "
               << format_number(e.at("norm_sum").get<double>()) << " | " << format_number(e.at("norm_g").get<double>())
               << " | " << format_number(e.at("norm_h").get<double>()) << " | " << format_number(w1) << " |\n";
        }
        const json& s = r.at("slopes");
        const json& r2 = r.at("r2");
        double ss = s.at("sum"), sg = s.at("g"), sh = s.at("h"), sw = s.at("w1"), rs = r2.at("sum");
        md << "\n";
        md << "- slope_sum: " << format_number(ss) << " (r2 " << format_number(rs) << ") "
           << verdict(ss >= -0.80 && ss <= -0.55 && rs >= 0.98) << " [-0.80, -0.55], r2 >= 0.98\n";
        md << "- slope_g: " << format_number(sg) << " " << verdict(sg >= -0.45 && sg <= -0.22) << " [-0.45, -0.22]\n";
        md << "- slope_h: " << format_number(sh) << " " << verdict(sh >= -0.45 && sh <= -0.22) << " [-0.45, -0.22]\n";
        md << "- slope_w1: " << format_number(sw) << " " << verdict(sw <= -0.5 && decreasing)
           << " <= -0.5 and strictly decreasing\n";
    }
    if (!o.sample_in.empty()) {
        auto cols = read_csv_columns(o.sample_in, {"scaled_min"});
        if (cols[0].empty()) throw DomainError("report: '" + o.sample_in + "' has no samples");
        QuadratureSpec q = tw2_quadrature();
        double ks = ks_statistic(cols[0], [&](double s) { return tw2(s, q); });
        double mean = 0.0;
        for (double v : cols[0]) mean += v;
        mean /= cols[0].size();
        md << "\n## Least eigenvalue\n\n";
        md << "- samples: " << cols[0].size() << "\n";
        md << "- mean_scaled_min: " << format_number(mean) << "\n";
        md << "- ks_tw2: " << format_number(ks) << " " << verdict(ks <= 0.05) << " <= 0.05\n";
    }
    if (!o.mp_in.empty()) {
        auto cols = read_csv_columns(o.mp_in, {"hist_mass", "mp_mass"});
        double l1 = 0.0, mass = 0.0;
        for (std::size_t i = 0; i < cols[0].size(); ++i) {
            l1 += std::abs(cols[0][i] - cols[1][i]);
            mass += cols[0][i];
        }
        l1 += std::max(0.0, 1.0 - mass);
        md << "\n## Spectral measure\n\n";
        md << "- mp_l1: " << format_number(l1) << " " << verdict(l1 < 0.05) << " < 0.05\n";
    }
    Sink sink(o.out_path, out);
    sink.stream() << md.str();
    return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"edgekit: left soft edge of the Laguerre unitary ensemble"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--threads", o.threads, "Worker threads (overrides EDGEKIT_THREADS)");

    auto ensemble = [&](CLI::App* sub) {
        sub->add_option("--n", o.big_n, "Matrix dimension N");
        sub->add_option("--a", o.a, "Rectangularity a = n - N");
    };
    auto quad = [&](CLI::App* sub) {
        sub->add_option("--nodes", o.nodes, "Quadrature nodes");
        sub->add_option("--length", o.length, "Truncated interval length");
    };
    auto output = [&](CLI::App* sub) { sub->add_option("--out", o.out_path, "Output file (default standard output)"); };

    CLI::App* kernel = app.add_subcommand("kernel", "Tabulate a correlation kernel");
    kernel->add_option("--which", o.which, "airy, bessel, lue, gtau or htau")
        ->check(CLI::IsMember({"airy", "bessel", "lue", "gtau", "htau"}));
    kernel->add_option("--grid", o.grid, "start:stop:step")->required();
    kernel->add_option("--bessel-a", o.bessel_a, "Bessel order");
    kernel->add_option("--s0", o.s0, "Left end s0 for gtau and htau");
    kernel->add_flag("--diagonal", o.diagonal, "Only the diagonal x = y");
    ensemble(kernel);
    output(kernel);

    CLI::App* scaling = app.add_subcommand("scaling", "Composite left soft edge scaling");
    ensemble(scaling);
    output(scaling);

    CLI::App* lg = app.add_subcommand("lg", "Liouville-Green transform table");
    ensemble(lg);
    lg->add_option("--grid", o.grid, "start:stop:step in z (default: --count points in (0, z1))");
    lg->add_option("--count", o.count, "Number of equispaced points in (0, z1)");
    output(lg);

    CLI::App* tw = app.add_subcommand("tw2", "Tracy-Widom GUE distribution table");
    tw->add_option("--s-min", o.s_min, "First s");
    tw->add_option("--s-max", o.s_max, "Last s");
    tw->add_option("--step", o.step, "Grid step");
    tw->add_option("--nodes", o.tw_nodes, "Quadrature nodes");
    tw->add_option("--length", o.tw_length, "Truncated interval length");
    output(tw);

    CLI::App* w1 = app.add_subcommand("w1bound", "Kernel difference norms and the W1 bound");
    w1->add_option("--gamma", o.gamma, "Target N / n");
    w1->add_option("--n", o.big_n, "Matrix dimension N");
    w1->add_option("--s0", o.s0, "Left end s0");
    quad(w1);
    output(w1);

    CLI::App* rate = app.add_subcommand("rate", "Rate sweep over N");
    rate->add_option("--gamma", o.gamma, "Target N / n");
    rate->add_option("--n-list", o.n_list, "Comma-separated N values");
    rate->add_option("--s0", o.s0, "Left end s0");
    quad(rate);
    rate->add_option("--json,--out", o.out_path, "Output JSON file (default standard output)");

    CLI::App* sample = app.add_subcommand("sample", "Monte Carlo least eigenvalues");
    ensemble(sample);
    sample->add_option("--reps", o.reps, "Repetitions");
    sample->add_option("--seed", o.seed, "Seed");
    sample->add_flag("--verbose", o.verbose, "Report KS distances for both conventions");
    output(sample);

    CLI::App* mp = app.add_subcommand("mp", "Spectral histogram against Marchenko-Pastur");
    ensemble(mp);
    mp->add_option("--reps", o.mp_reps, "Repetitions");
    mp->add_option("--seed", o.seed, "Seed");
    mp->add_option("--bins", o.bins, "Histogram bins");
    mp->add_flag("--verbose", o.verbose, "Report the L1 discrepancy");
    output(mp);

    CLI::App* report = app.add_subcommand("report", "Markdown summary of earlier outputs");
    report->add_option("--rate", o.rate_in, "JSON from the rate subcommand");
    report->add_option("--sample", o.sample_in, "CSV from the sample subcommand");
    report->add_option("--mp", o.mp_in, "CSV from the mp subcommand");
    output(report);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    }

    set_thread_count(o.threads);
    try {
        if (kernel->parsed()) return run_kernel(o, out, err);
        if (scaling->parsed()) return run_scaling(o, out);
        if (lg->parsed()) return run_lg(o, out, err);
        if (tw->parsed()) return run_tw2(o, out, err);
        if (w1->parsed()) return run_w1bound(o, out);
        if (rate->parsed()) return run_rate(o, out);
        if (sample->parsed()) return run_sample(o, out, err);
        if (mp->parsed()) return run_mp(o, out, err);
        if (report->parsed()) return run_report(o, out);
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return exit_domain;
    } catch (const ConvergenceError& e) {
        err << "convergence failure: " << e.what() << '\n';
        return exit_convergence;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_failure;
}

}  // namespace edgekit

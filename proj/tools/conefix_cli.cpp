// conefix: batch front end for the cone-metric fixed-point toolkit.
//
//   conefix axioms          --seed N --samples N [--out DIR]
//   conefix gauge           --vector JSON --base JSON | --config FILE
//   conefix picard          --config FILE [--out DIR] [--max-iter N] [--stop-c JSON]
//   conefix roots           --config FILE [--out DIR] [--max-iter N] [--stop-c JSON]
//   conefix demo-normality  [--max-n N] [--out DIR]
//
// Exit codes: 0 success/convergence, 2 no convergence (or failed axioms),
// 1 input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "conefix/axioms.hpp"
#include "conefix/io.hpp"
#include "conefix/normality_demo.hpp"
#include "conefix/picard.hpp"
#include "conefix/roots.hpp"

namespace fs = std::filesystem;
using namespace conefix;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNoConvergence = 2;

struct CommonArgs {
    std::string config;
    std::string out = ".";
    std::uint64_t seed = 0;
    std::size_t samples = 1000;
    std::optional<std::size_t> max_iter;
    std::string stop_c;
};

std::ofstream open_output(const fs::path& dir, const std::string& name) {
    fs::create_directories(dir);
    std::ofstream os(dir / name, std::ios::binary);
    if (!os) throw InputError("cannot write " + (dir / name).string());
    return os;
}

void write_json(const fs::path& dir, const std::string& name, const json& j) {
    auto os = open_output(dir, name);
    os << j.dump(2) << '\n';
}

json require_config(const CommonArgs& args) {
    if (args.config.empty()) throw InputError("--config is required");
    return io::load_json_file(args.config);
}

std::optional<OrderedVector> stop_c_override(const CommonArgs& args) {
    if (args.stop_c.empty()) return std::nullopt;
    return io::parse_vector(io::parse_json(args.stop_c, "--stop-c"));
}

template <typename Scalar>
json point_to_json(const Point<Scalar>& p) {
    if constexpr (is_complex_v<Scalar>) {
        return io::to_json(RootVector(p));
    } else {
        return io::to_json(OrderedVector(p));
    }
}

// ---------------------------------------------------------------- picard ---

template <typename Scalar>
Domain<Scalar> parse_domain(const json& cfg) {
    if (!cfg.contains("domain")) return WholeSpace{};
    const json& d = cfg.at("domain");
    const std::string kind = d.value("kind", std::string("whole"));
    if (kind == "whole") return WholeSpace{};
    if (kind == "ball") {
        Point<Scalar> center;
        if constexpr (is_complex_v<Scalar>) center = io::parse_complex_vector(d.at("center"));
        else center = io::parse_vector(d.at("center")).coords();
        return Ball<Scalar>(std::move(center), io::parse_vector(d.at("radius")), d.value("closed", true));
    }
    throw InputError("unknown domain kind \"" + kind + "\"");
}

template <typename Scalar>
int run_problem(const Problem<Scalar>& problem, const fs::path& out) {
    std::optional<PicardResult<Scalar>> result;
    std::optional<IterationTrace<Scalar>> escaped;
    std::size_t escape_iter = 0;
    try {
        result = run_picard(problem);
    } catch (const DomainEscape<Scalar>& e) {
        escaped = e.trace();
        escape_iter = e.iteration();
    }

    json summary;
    if (escaped) {
        auto os = open_output(out, "trace.csv");
        const OrderedVector none = OrderedVector::zero(problem.metric.value_dim());
        io::write_trace_csv(os, *escaped, none, std::nullopt);
        summary = {{"converged", false}, {"domain_escape_at", escape_iter}, {"certificate", nullptr}};
        write_json(out, "certificate.json", summary);
        std::cout << "iterate " << escape_iter << " left the domain\n";
        return kExitNoConvergence;
    }

    {
        auto os = open_output(out, "trace.csv");
        io::write_trace_csv(os, result->trace, result->residual, result->certificate);
    }
    summary["converged"] = result->converged;
    summary["iterations"] = result->trace.step_dists.size();
    summary["residual"] = io::to_json(result->residual);
    summary["fixed_point"] = result->fixed_point ? point_to_json<Scalar>(*result->fixed_point) : json(nullptr);
    summary["lambda_estimate"] = result->lambda_estimate ? json(*result->lambda_estimate) : json(nullptr);
    summary["certificate"] = result->certificate ? io::to_json(*result->certificate) : json(nullptr);
    write_json(out, "certificate.json", summary);

    if (!result->converged) {
        std::cout << "no convergence after " << result->trace.step_dists.size() << " iterations\n";
        return kExitNoConvergence;
    }
    std::cout << "converged after " << result->trace.step_dists.size() << " iterations";
    if (result->certificate) std::cout << ", certificate " << to_string(result->certificate->status);
    else std::cout << ", no certificate";
    std::cout << '\n';
    return kExitOk;
}

template <typename Scalar>
Problem<Scalar> base_problem(const json& cfg, const CommonArgs& args, Map<Scalar> map, Point<Scalar> x0,
                             Field default_field) {
    const Index n = x0.size();
    ConeMetric metric = cfg.contains("metric") ? io::parse_metric(cfg.at("metric"))
                                               : ConeMetric::weighted(Eigen::VectorXd::Ones(n), default_field);
    const Index m = metric.value_dim();
    GaugeNorm gauge(cfg.contains("gauge") ? io::parse_space_spec(cfg.at("gauge")) : SpaceSpec::unit(m));

    std::optional<double> lambda;
    if (cfg.contains("lambda") && !cfg.at("lambda").is_null()) lambda = cfg.at("lambda").get<double>();

    const std::string mode = cfg.value("mode", std::string("iterated"));
    if (mode != "iterated" && mode != "banach") throw InputError("mode must be \"iterated\" or \"banach\"");

    OrderedVector stop_c = OrderedVector::constant(m, 1e-10);
    if (cfg.contains("stop_c")) stop_c = io::parse_vector(cfg.at("stop_c"));
    if (auto o = stop_c_override(args)) stop_c = *o;

    std::size_t max_iter = cfg.value("max_iter", std::size_t{1000});
    if (args.max_iter) max_iter = *args.max_iter;

    Domain<Scalar> domain = parse_domain<Scalar>(cfg);
    return Problem<Scalar>{
        .map = std::move(map),
        .domain = std::move(domain),
        .x0 = std::move(x0),
        .metric = std::move(metric),
        .gauge = std::move(gauge),
        .lambda = lambda,
        .mode = mode == "banach" ? Mode::banach : Mode::iterated,
        .stop_c = std::move(stop_c),
        .max_iter = max_iter,
    };
}

int cmd_picard(const CommonArgs& args) {
    const json cfg = require_config(args);
    const std::string name = cfg.value("map", std::string());

    if (name == "weierstrass") {
        const RootVector c = io::parse_complex_vector(cfg.at("coefficients"));
        const Polynomial p(std::vector<Complex>(c.data(), c.data() + c.size()));
        RootVector z0 = cfg.contains("x0") ? io::parse_complex_vector(cfg.at("x0")) : default_start(p);
        Map<Complex> map = [monic = p.monic()](const RootVector& z) { return weierstrass_step(monic, z); };
        return run_problem(base_problem<Complex>(cfg, args, std::move(map), std::move(z0), Field::complex), args.out);
    }

    if (!cfg.contains("x0")) throw InputError("picard config needs \"x0\"");
    Point<double> x0 = io::parse_vector(cfg.at("x0")).coords();
    Map<double> map;
    if (name == "halve") {
        map = [](const Point<double>& x) -> Point<double> { return 0.5 * x; };
    } else if (name == "affine") {
        const json& rows = cfg.at("matrix");
        const Index n = x0.size();
        if (!rows.is_array() || static_cast<Index>(rows.size()) != n) {
            throw InputError("affine: matrix must have one row per coordinate");
        }
        Eigen::MatrixXd a(n, n);
        for (Index i = 0; i < n; ++i) {
            const OrderedVector row = io::parse_vector(rows[static_cast<std::size_t>(i)]);
            if (row.size() != n) throw InputError("affine: matrix must be square");
            a.row(i) = row.coords().transpose();
        }
        const Eigen::VectorXd c = cfg.contains("offset") ? io::parse_vector(cfg.at("offset")).coords()
                                                         : Eigen::VectorXd::Zero(n);
        if (c.size() != n) throw InputError("affine: offset dimension mismatch");
        map = [a, c](const Point<double>& x) -> Point<double> { return a * x + c; };
    } else {
        throw InputError("unknown map \"" + name + "\" (expected halve, affine or weierstrass)");
    }
    return run_problem(base_problem<double>(cfg, args, std::move(map), std::move(x0), Field::real), args.out);
}

// ----------------------------------------------------------------- roots ---

int cmd_roots(const CommonArgs& args) {
    const json cfg = require_config(args);
    const RootVector c = io::parse_complex_vector(cfg.at("coefficients"));
    const Polynomial p(std::vector<Complex>(c.data(), c.data() + c.size()));
    if (p.degree() > kMaxCliDegree) {
        throw InputError("degree " + std::to_string(p.degree()) + " exceeds the limit of " +
                         std::to_string(kMaxCliDegree));
    }

    RootsOptions opts;
    if (cfg.contains("z0")) opts.z0 = io::parse_complex_vector(cfg.at("z0"));
    if (cfg.contains("weights")) opts.weights = io::parse_vector(cfg.at("weights")).coords();
    if (cfg.contains("stop_c")) opts.stop_c = io::parse_vector(cfg.at("stop_c"));
    if (auto o = stop_c_override(args)) opts.stop_c = *o;
    opts.max_iter = cfg.value("max_iter", opts.max_iter);
    if (args.max_iter) opts.max_iter = *args.max_iter;
    if (cfg.contains("lambda") && !cfg.at("lambda").is_null()) opts.lambda = cfg.at("lambda").get<double>();

    const RootsResult res = solve_roots(p, opts);
    {
        auto os = open_output(args.out, "trace.csv");
        io::write_trace_csv(os, res.run.trace, res.run.residual, res.certificate);
    }
    write_json(args.out, "certificate.json", res.certificate ? io::to_json(*res.certificate) : json(nullptr));

    json residuals = json::array();
    for (Index i = 0; i < res.roots.size(); ++i) residuals.push_back(std::abs(p(res.roots[i])));
    json rows = json::array();
    for (const auto& r : res.comparison.rows) {
        rows.push_back({{"iter", r.iter},
                        {"componentwise", io::to_json(r.componentwise)},
                        {"scalar_broadcast", io::to_json(r.scalar_broadcast)},
                        {"exceeds", r.exceeds}});
    }
    write_json(args.out, "report.json",
               {{"converged", res.converged},
                {"iterations", res.run.trace.step_dists.size()},
                {"roots", io::to_json(res.roots)},
                {"residuals", residuals},
                {"tail_start", res.tail_start},
                {"comparison", {{"lambda", res.comparison.lambda}, {"rows", rows}}}});

    if (!res.converged) {
        std::cout << "no convergence after " << res.run.trace.step_dists.size() << " iterations\n";
        return kExitNoConvergence;
    }
    for (Index i = 0; i < res.roots.size(); ++i) {
        std::cout << io::format_double(res.roots[i].real()) << ' ' << io::format_double(res.roots[i].imag())
                  << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------- axioms ---

int cmd_axioms(const CommonArgs& args, int min_dim, int max_dim) {
    AxiomOptions opts;
    opts.seed = args.seed;
    opts.samples = args.samples;
    opts.min_dim = min_dim;
    opts.max_dim = max_dim;
    const AxiomReport report = run_axioms(opts);

    json results = json::array();
    for (const auto& r : report.results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checked)";
        if (!r.passed) std::cout << "  counterexample: " << r.counterexample;
        std::cout << '\n';
        results.push_back({{"axiom", r.name},
                           {"passed", r.passed},
                           {"checked", r.checked},
                           {"counterexample", r.passed ? json(nullptr) : json(r.counterexample)}});
    }
    write_json(args.out, "report.json",
               {{"seed", report.seed},
                {"samples", report.samples},
                {"dimensions", {report.min_dim, report.max_dim}},
                {"all_passed", report.all_passed()},
                {"results", results}});
    return report.all_passed() ? kExitOk : kExitNoConvergence;
}

// ----------------------------------------------------------------- gauge ---

int cmd_gauge(const CommonArgs& args, const std::string& vector_text, const std::string& base_text) {
    OrderedVector x;
    std::optional<SpaceSpec> spec;
    if (!args.config.empty()) {
        const json cfg = io::load_json_file(args.config);
        x = io::parse_vector(cfg.at("x"));
        spec = io::parse_space_spec(cfg.contains("space") ? cfg.at("space") : cfg);
    } else {
        if (vector_text.empty()) throw InputError("gauge needs --vector or --config");
        x = io::parse_vector(io::parse_json(vector_text, "--vector"));
        spec = base_text.empty() ? SpaceSpec::unit(x.size())
                                 : SpaceSpec(io::parse_vector(io::parse_json(base_text, "--base")));
    }
    std::cout << io::format_double(mink_norm(x, GaugeNorm(*spec))) << '\n';
    return kExitOk;
}

// ------------------------------------------------------------------ demo ---

int cmd_demo(const CommonArgs& args, int max_n) {
    const auto rows = demo_normality(max_n);
    std::cout << "n,sup_x,sup_dx,norm_x,norm_y,order_holds\n";
    json table = json::array();
    for (const auto& r : rows) {
        std::cout << r.n << ',' << io::format_double(r.sup_x) << ',' << io::format_double(r.sup_dx) << ','
                  << io::format_double(r.norm_x) << ',' << io::format_double(r.norm_y) << ','
                  << (r.order_holds ? "true" : "false") << '\n';
        table.push_back({{"n", r.n},
                         {"sup_x", r.sup_x},
                         {"sup_dx", r.sup_dx},
                         {"norm_x", r.norm_x},
                         {"norm_y", r.norm_y},
                         {"order_holds", r.order_holds}});
    }
    write_json(args.out, "report.json", {{"rows", table}});
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified fixed-point iteration over cone metric spaces"};
    app.require_subcommand(1);

    CommonArgs args;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", args.config, "JSON configuration file");
        sub->add_option("--out", args.out, "Output directory");
        sub->add_option("--seed", args.seed, "Seed for randomized suites");
        sub->add_option("--samples", args.samples, "Samples per dimension")->check(CLI::PositiveNumber);
        sub->add_option("--max-iter", args.max_iter, "Iteration limit")->check(CLI::PositiveNumber);
        sub->add_option("--stop-c", args.stop_c, "Halting vector as a JSON array");
    };

    int min_dim = 1;
    int max_dim = 8;
    auto* axioms = app.add_subcommand("axioms", "Run the seeded axiom property suites");
    add_common(axioms);
    axioms->add_option("--min-dim", min_dim)->check(CLI::PositiveNumber);
    axioms->add_option("--max-dim", max_dim)->check(CLI::PositiveNumber);

    std::string vector_text;
    std::string base_text;
    auto* gauge = app.add_subcommand("gauge", "Print the Minkowski gauge of a vector");
    add_common(gauge);
    gauge->add_option("--vector", vector_text, "Vector as a JSON array");
    gauge->add_option("--base", base_text, "Base vector b as a JSON array (default all ones)");

    auto* picard = app.add_subcommand("picard", "Run a Picard iteration from a config");
    add_common(picard);
    auto* roots = app.add_subcommand("roots", "Find all polynomial roots simultaneously");
    add_common(roots);

    int max_n = 50;
    auto* demo = app.add_subcommand("demo-normality", "Tabulate the non-normality example in C1[0,1]");
    add_common(demo);
    demo->add_option("--max-n", max_n)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (axioms->parsed()) return cmd_axioms(args, min_dim, max_dim);
        if (gauge->parsed()) return cmd_gauge(args, vector_text, base_text);
        if (picard->parsed()) return cmd_picard(args);
        if (roots->parsed()) return cmd_roots(args);
        if (demo->parsed()) return cmd_demo(args, max_n);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const PreconditionError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return kExitNoConvergence;
    }
    return kExitInput;
}

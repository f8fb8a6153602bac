#include "conefix/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "conefix/cone_metric.hpp"

namespace conefix {

bool AxiomReport::all_passed() const {
    return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.passed; });
}

const AxiomResult* AxiomReport::find(const std::string& name) const {
    auto it = std::find_if(results.begin(), results.end(), [&](const AxiomResult& r) { return r.name == name; });
    return it == results.end() ? nullptr : &*it;
}

OrderingUnderTest OrderingUnderTest::standard() {
    OrderingUnderTest ord;
    ord.leq = [](const OrderedVector& x, const OrderedVector& y) { return conefix::leq(x, y); };
    ord.lt = [](const OrderedVector& x, const OrderedVector& y) { return conefix::lt(x, y); };
    return ord;
}

double gauge_by_bisection(const OrderedVector& x, const SpaceSpec& spec, int iterations) {
    const OrderedVector& b = spec.base();
    auto contains = [&](double lambda) {
        const OrderedVector scaled = lambda * b;
        return leq(-scaled, x) && leq(x, scaled);
    };
    const OrderedVector single[] = {x};
    double lo = 0.0;
    double hi = bounding_scale(single, spec);
    if (contains(lo)) return 0.0;
    for (int i = 0; i < iterations; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (contains(mid)) hi = mid;
        else lo = mid;
    }
    return hi;
}

namespace {

using Complex = std::complex<double>;

class Sampler {
public:
    explicit Sampler(std::seed_seq& seq) : rng_(seq) {}

    // m / 64, |m| <= 4096
    double lattice() { return static_cast<double>(int_in(-4096, 4096)) / 64.0; }
    double lattice_positive() { return static_cast<double>(int_in(1, 4096)) / 64.0; }
    // k / 8, |k| <= 16
    double lattice_scalar() { return static_cast<double>(int_in(-16, 16)) / 8.0; }
    double lattice_scalar_positive() { return static_cast<double>(int_in(1, 16)) / 8.0; }

    OrderedVector lattice_vec(int n) { return fill(n, [&] { return lattice(); }); }
    OrderedVector lattice_vec_positive(int n) { return fill(n, [&] { return lattice_positive(); }); }
    OrderedVector lattice_vec_nonneg(int n) {
        return fill(n, [&] { return coin(0.3) ? 0.0 : lattice_positive(); });
    }

    /// A second vector near x, biased so that comparable pairs are frequent.
    OrderedVector partner(const OrderedVector& x) {
        const int n = static_cast<int>(x.size());
        switch (int_in(0, 7)) {
        case 0: return x;
        case 1: case 2: return x + lattice_vec_nonneg(n);
        case 3: return x - lattice_vec_nonneg(n);
        case 4: {
            Eigen::VectorXd r = x.coords().reverse();
            return OrderedVector(std::move(r));
        }
        default: return x + fill(n, [&] { return coin(0.4) ? 0.0 : lattice(); });
        }
    }

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    OrderedVector uniform_vec(int n, double lo, double hi) { return fill(n, [&] { return uniform(lo, hi); }); }
    OrderedVector dyadic_base(int n) {
        return fill(n, [&] { return std::ldexp(1.0, int_in(-3, 3)); });
    }

    int int_in(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }

private:
    template <typename F>
    OrderedVector fill(int n, F&& draw) {
        Eigen::VectorXd v(n);
        for (int i = 0; i < n; ++i) v[i] = draw();
        return OrderedVector(std::move(v));
    }

    std::mt19937_64 rng_;
};

class Recorder {
public:
    void check(const std::string& name, bool premise, bool conclusion, const std::function<std::string()>& witness) {
        AxiomResult& r = slot(name);
        if (!premise) return;
        ++r.checked;
        if (!conclusion && r.passed) {
            r.passed = false;
            r.counterexample = witness();
        }
    }

    void check(const std::string& name, bool conclusion, const std::function<std::string()>& witness) {
        check(name, true, conclusion, witness);
    }

    std::vector<AxiomResult> results() const {
        std::vector<AxiomResult> out;
        for (const auto& key : order_) out.push_back(by_name_.at(key));
        return out;
    }

private:
    AxiomResult& slot(const std::string& name) {
        auto [it, inserted] = by_name_.try_emplace(name);
        if (inserted) {
            it->second.name = name;
            order_.push_back(name);
        }
        return it->second;
    }

    std::map<std::string, AxiomResult> by_name_;
    std::vector<std::string> order_;
};

std::string show(std::initializer_list<std::pair<const char*, std::string>> fields) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : fields) {
        if (!first) os << ", ";
        os << k << '=' << v;
        first = false;
    }
    return os.str();
}

std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void ordering_suites(Recorder& rec, Sampler& s, int n, const OrderingUnderTest& ord) {
    const OrderedVector x = s.lattice_vec(n);
    const OrderedVector y = s.partner(x);
    const OrderedVector z = s.partner(y);
    const OrderedVector u = s.lattice_vec(n);
    const OrderedVector v = s.partner(u);
    const OrderedVector w = s.lattice_vec(n);
    const OrderedVector zero = OrderedVector::zero(n);
    const double lam = s.lattice_scalar();
    const double mu = s.lattice_scalar();

    auto w2 = [&](const char* a, const OrderedVector& p, const char* b, const OrderedVector& q) {
        return [=] { return show({{a, p.to_string()}, {b, q.to_string()}}); };
    };
    auto w3 = [&](const OrderedVector& p, const OrderedVector& q, const OrderedVector& r) {
        return [=] { return show({{"x", p.to_string()}, {"y", q.to_string()}, {"z", r.to_string()}}); };
    };
    auto ws = [&](const OrderedVector& p, const OrderedVector& q, double a, double b) {
        return [=] {
            return show({{"x", p.to_string()}, {"y", q.to_string()}, {"lambda", num(a)}, {"mu", num(b)}});
        };
    };

    const bool xy = ord.leq(x, y);
    const bool yx = ord.leq(y, x);
    const bool yz = ord.leq(y, z);
    const bool sxy = ord.lt(x, y);
    const bool syz = ord.lt(y, z);

    rec.check("order.reflexive", ord.leq(x, x), w2("x", x, "x", x));
    rec.check("order.antisymmetric", xy && yx, x == y, w2("x", x, "y", y));
    rec.check("order.transitive", xy && yz, ord.leq(x, z), w3(x, y, z));
    rec.check("V1.translation", xy, ord.leq(x + w, y + w), w3(x, y, w));
    rec.check("V2.nonneg_scaling", lam >= 0 && xy, ord.leq(lam * x, lam * y), ws(x, y, lam, lam));
    rec.check("V4.nonpos_scaling", lam <= 0 && xy, ord.leq(lam * y, lam * x), ws(x, y, lam, lam));
    rec.check("V5.scalar_order_pos", lam <= mu && ord.leq(zero, x), ord.leq(lam * x, mu * x), ws(x, x, lam, mu));
    rec.check("V6.scalar_order_neg", lam <= mu && ord.leq(x, zero), ord.leq(mu * x, lam * x), ws(x, x, lam, mu));
    rec.check("V7.addition", xy && ord.leq(u, v), ord.leq(x + u, y + v),
              [=] { return show({{"x", x.to_string()}, {"y", y.to_string()}, {"u", u.to_string()}, {"v", v.to_string()}}); });

    rec.check("strict.irreflexive", !ord.lt(x, x), w2("x", x, "x", x));
    rec.check("S1.strict_implies_weak", sxy, ord.leq(x, y), w2("x", x, "y", y));
    rec.check("S2.weak_then_strict", xy && syz, ord.lt(x, z), w3(x, y, z));
    rec.check("S3.translation", sxy, ord.lt(x + w, y + w), w3(x, y, w));
    rec.check("S4.pos_scaling", lam > 0 && sxy, ord.lt(lam * x, lam * y), ws(x, y, lam, lam));
    rec.check("S6.neg_scaling", lam < 0 && sxy, ord.lt(lam * y, lam * x), ws(x, y, lam, lam));
    rec.check("S7.scalar_order_pos", lam < mu && ord.lt(zero, x), ord.lt(lam * x, mu * x), ws(x, x, lam, mu));
    rec.check("S8.scalar_order_neg", lam < mu && ord.lt(x, zero), ord.lt(mu * x, lam * x), ws(x, x, lam, mu));
    rec.check("S9.strict_then_weak", sxy && yz, ord.lt(x, z), w3(x, y, z));
    rec.check("S10.addition", xy && ord.lt(u, v), ord.lt(x + u, y + v),
              [=] { return show({{"x", x.to_string()}, {"y", y.to_string()}, {"u", u.to_string()}, {"v", v.to_string()}}); });

    rec.check("corr.leq_cone", xy == in_cone(y - x), w2("x", x, "y", y));
    rec.check("corr.lt_interior", sxy == in_interior(y - x), w2("x", x, "y", y));

    // The interior criterion: λK° ⊂ K°, K + K° ⊂ K°, 0 ∉ K°.
    const double pos = s.lattice_scalar_positive();
    rec.check("interior.scaling", in_interior(x), in_interior(pos * x), ws(x, x, pos, pos));
    const OrderedVector k = s.lattice_vec_nonneg(n);
    const OrderedVector ko = s.lattice_vec_positive(n);
    rec.check("interior.cone_sum", in_cone(k) && in_interior(ko), in_interior(k + ko), w2("k", k, "k_int", ko));
    rec.check("interior.zero_excluded", !in_interior(zero), [] { return std::string("0 in interior"); });
}

void s11_suite(Recorder& rec, Sampler& s, int n, const OrderingUnderTest& ord) {
    const OrderedVector b = s.lattice_vec_positive(n);
    OrderedVector x;
    switch (s.int_in(0, 2)) {
    case 0: x = s.lattice_vec(n); break;
    case 1: x = -s.lattice_vec_nonneg(n); break;
    default: x = std::ldexp(1.0, -47) * s.lattice_vec(n); break;
    }
    bool premise = true;
    for (int k = 0; k <= 40 && premise; ++k) {
        premise = ord.lt(x, std::ldexp(1.0, -k) * b);
    }
    const double cap = std::ldexp(1.0, -40) * b.coords().maxCoeff();
    rec.check("S11.finite", premise, (x.coords().array() <= cap).all(),
              [=] { return show({{"x", x.to_string()}, {"b", b.to_string()}}); });
}

void witness_suites(Recorder& rec, Sampler& s, int n, const OrderingUnderTest& ord) {
    const SpaceSpec spec(s.lattice_vec_positive(n));
    const OrderedVector& b = spec.base();
    const int count = s.int_in(1, 4);

    std::vector<OrderedVector> positive;
    std::vector<OrderedVector> any;
    for (int i = 0; i < count; ++i) {
        positive.push_back(s.lattice_vec_positive(n));
        any.push_back(s.lattice_vec(n));
    }

    const double lam = minorant_scale(positive, spec);
    bool ok = lam > 0;
    for (const auto& a : positive) ok = ok && ord.lt(lam * b, a);
    rec.check("S12.minorant_witness", ok, [=] { return show({{"b", b.to_string()}, {"lambda", num(lam)}}); });

    const double bound = bounding_scale(any, spec);
    ok = bound > 0;
    for (const auto& a : any) ok = ok && ord.lt(-bound * b, a) && ord.lt(a, bound * b);
    rec.check("S13.bounding_witness", ok, [=] { return show({{"b", b.to_string()}, {"lambda", num(bound)}}); });

    const OrderedVector single[] = {any.front()};
    const double one = bounding_scale(single, spec);
    rec.check("S14.single_witness", one > 0 && ord.lt(-one * b, single[0]) && ord.lt(single[0], one * b),
              [=] { return show({{"x", single[0].to_string()}, {"b", b.to_string()}}); });
}

double rel_tol(double scale) { return 1e-12 * std::max(1.0, std::abs(scale)); }

void gauge_suites(Recorder& rec, Sampler& s, int n) {
    const SpaceSpec spec(s.uniform_vec(n, 0.1, 10.0));
    const GaugeNorm g(spec);
    const OrderedVector x = s.coin(0.05) ? OrderedVector::zero(n) : s.uniform_vec(n, -10.0, 10.0);
    const OrderedVector y = s.uniform_vec(n, -10.0, 10.0);
    const double sc = s.uniform(-5.0, 5.0);
    const auto wx = [=] { return show({{"x", x.to_string()}, {"b", spec.base().to_string()}}); };

    const double gx = g(x);
    rec.check("gauge.homogeneity", std::abs(g(sc * x) - std::abs(sc) * gx) <= rel_tol(std::abs(sc) * gx),
              [=] { return show({{"x", x.to_string()}, {"s", num(sc)}}); });
    rec.check("gauge.triangle", g(x + y) <= g(x) + g(y) + rel_tol(g(x) + g(y)),
              [=] { return show({{"x", x.to_string()}, {"y", y.to_string()}}); });
    rec.check("gauge.definite", gx >= 0.0 && ((gx == 0.0) == (x == OrderedVector::zero(n))), wx);

    const double oracle = gauge_by_bisection(x, spec);
    rec.check("gauge.bisection_oracle", std::abs(gx - oracle) <= 1e-12,
              [=] { return wx() + ", closed=" + num(gx) + ", bisection=" + num(oracle); });

    // 0 ⪯ p ⪯ q ⇒ ‖p‖ <= ‖q‖
    const OrderedVector p = s.uniform_vec(n, 0.0, 10.0);
    const OrderedVector q = p + s.uniform_vec(n, 0.0, 5.0);
    rec.check("gauge.monotone", leq(OrderedVector::zero(n), p) && leq(p, q), g(p) <= g(q),
              [=] { return show({{"p", p.to_string()}, {"q", q.to_string()}}); });

    // x ⪯ y ⪯ z ⇒ ‖y - x‖ <= ‖z - x‖
    const OrderedVector lo = s.uniform_vec(n, -10.0, 10.0);
    const OrderedVector mid = lo + s.uniform_vec(n, 0.0, 5.0);
    const OrderedVector hi = mid + s.uniform_vec(n, 0.0, 5.0);
    rec.check("gauge.normality_sandwich", leq(lo, mid) && leq(mid, hi), g(mid - lo) <= g(hi - lo),
              [=] { return show({{"x", lo.to_string()}, {"y", mid.to_string()}, {"z", hi.to_string()}}); });

    const double eps = s.uniform(0.01, 2.0) * std::max(gx, 1e-3);
    rec.check("gauge.ball_equivalence", strict_ball_test(x, eps, g) == (gx < eps),
              [=] { return wx() + ", eps=" + num(eps); });

    // Boundary: eps equal to the gauge, on a base where division is exact.
    const GaugeNorm gd(SpaceSpec(s.dyadic_base(n)));
    const OrderedVector xb = s.lattice_vec(n);
    const double edge = gd(xb);
    if (edge > 0.0) {
        rec.check("gauge.ball_equivalence", strict_ball_test(xb, edge, gd) == (gd(xb) < edge),
                  [=] { return show({{"x", xb.to_string()}, {"eps", num(edge)}}); });
    }
}

Point<double> as_point(const OrderedVector& v) { return v.coords(); }

Point<Complex> complex_point(Sampler& s, int n) {
    Point<Complex> z(n);
    for (int i = 0; i < n; ++i) z[i] = Complex(s.uniform(-10.0, 10.0), s.uniform(-10.0, 10.0));
    return z;
}

template <typename Scalar>
std::string show_point(const Point<Scalar>& p) {
    std::ostringstream os;
    os.precision(17);
    os << '(';
    for (Index i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
    os << ')';
    return os.str();
}

template <typename Scalar>
void metric_axioms(Recorder& rec, const std::string& tag, const ConeMetric& inst, const GaugeNorm& g,
                   const Point<Scalar>& x, const Point<Scalar>& y, const Point<Scalar>& z) {
    const auto wit = [=] { return show({{"x", show_point(x)}, {"y", show_point(y)}, {"z", show_point(z)}}); };
    const Index m = inst.value_dim();
    const OrderedVector dxy = inst.distance(x, y);
    rec.check("metric." + tag + ".nonnegative", in_cone(dxy), wit);
    rec.check("metric." + tag + ".symmetry", dxy == inst.distance(y, x), wit);
    rec.check("metric." + tag + ".identity",
              inst.distance(x, x) == OrderedVector::zero(m) && ((x == y) == (dxy == OrderedVector::zero(m))), wit);
    rec.check("metric." + tag + ".triangle", leq(dxy, inst.distance(x, z) + inst.distance(z, y)), wit);

    const double rxy = scalarize(inst, g, x, y);
    const double rxz = scalarize(inst, g, x, z);
    const double rzy = scalarize(inst, g, z, y);
    rec.check("scalarize." + tag + ".metric",
              rxy == scalarize(inst, g, y, x) && ((rxy == 0.0) == (x == y)) && rxy <= rxz + rzy + rel_tol(rxz + rzy),
              wit);
}

void cone_metric_suites(Recorder& rec, Sampler& s, int n) {
    // Weighted, real, on the lattice (exact arithmetic).
    {
        Eigen::VectorXd alpha(n);
        for (int i = 0; i < n; ++i) alpha[i] = s.lattice_scalar_positive();
        const ConeMetric inst = ConeMetric::weighted(alpha, Field::real);
        const GaugeNorm g(SpaceSpec(s.uniform_vec(n, 0.5, 2.0)));
        const OrderedVector xv = s.lattice_vec(n);
        const Point<double> x = as_point(xv);
        const Point<double> y = as_point(s.partner(xv));
        const Point<double> z = as_point(s.partner(xv));
        metric_axioms(rec, "weighted_real", inst, g, x, y, z);

        const double sc = s.lattice_scalar();
        const Point<double> zero = Point<double>::Zero(n);
        rec.check("cone_norm.weighted_real.homogeneity",
                  inst.distance<double>(sc * x, zero) == std::abs(sc) * inst.distance(x, zero),
                  [=] { return show({{"x", show_point(x)}, {"s", num(sc)}}); });
    }
    // Weighted, complex.
    {
        Eigen::VectorXd alpha(n);
        for (int i = 0; i < n; ++i) alpha[i] = s.uniform(0.1, 5.0);
        const ConeMetric inst = ConeMetric::weighted(alpha, Field::complex);
        const OrderedVector base = s.dyadic_base(n);
        const GaugeNorm g{SpaceSpec(base)};
        const Point<Complex> x = complex_point(s, n);
        const Point<Complex> y = s.coin(0.1) ? x : complex_point(s, n);
        const Point<Complex> z = complex_point(s, n);
        metric_axioms(rec, "weighted_complex", inst, g, x, y, z);

        // |s| is exact for s = ±2^k and ±i·2^k; then ‖s x‖ = |s| ‖x‖ exactly.
        static const Complex units[] = {Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)};
        const Complex sc = units[s.int_in(0, 3)] * std::ldexp(1.0, s.int_in(-4, 4));
        const Point<Complex> zero = Point<Complex>::Zero(n);
        rec.check("cone_norm.weighted_complex.homogeneity",
                  inst.distance<Complex>(sc * x, zero) == std::abs(sc) * inst.distance(x, zero),
                  [=] { return show({{"x", show_point(x)}}); });

        // B(x, ε) = U(x, ε b) for the scalarized metric.
        const double eps = s.uniform(0.1, 20.0);
        const Ball<Complex> cone_ball(x, eps * base, false);
        rec.check("ball_identity.weighted_complex", (scalarize(inst, g, y, x) < eps) == ball_contains(cone_ball, inst, y),
                  [=] { return show({{"x", show_point(x)}, {"y", show_point(y)}, {"eps", num(eps)}}); });
    }
    // Discrete cone metric over a 5-point set.
    {
        const ConeMetric inst = ConeMetric::discrete(OrderedVector{1.0, 2.0});
        const GaugeNorm g(SpaceSpec::unit(2));
        auto pick = [&]() -> Point<double> { return Point<double>::Constant(1, static_cast<double>(s.int_in(0, 4))); };
        const Point<double> x = pick();
        const Point<double> y = pick();
        const Point<double> z = pick();
        metric_axioms(rec, "discrete", inst, g, x, y, z);

        // A sequence whose tail has pairwise d ≺ a must be constant on that tail.
        const int len = 12;
        std::vector<Point<double>> seq;
        const int settle = s.int_in(0, len);
        const double last = static_cast<double>(s.int_in(0, 4));
        for (int k = 0; k < len; ++k) {
            const bool random = k < settle || s.coin(0.05);
            seq.push_back(Point<double>::Constant(1, random ? static_cast<double>(s.int_in(0, 4)) : last));
        }
        const OrderedVector a{1.0, 2.0};
        int tail = len;
        while (tail > 0) {
            bool ok = true;
            for (int m = tail - 1; m < len && ok; ++m) ok = lt(inst.distance(seq[tail - 1], seq[m]), a);
            if (!ok) break;
            --tail;
        }
        bool constant = true;
        for (int m = tail; m < len; ++m) constant = constant && seq[m] == seq[tail];
        rec.check("discrete.cauchy_stationary", tail < len, constant, [=] { return "tail start " + std::to_string(tail); });
    }
    // Plus metric on the positive cone.
    {
        const ConeMetric inst = ConeMetric::plus(n);
        const GaugeNorm g(SpaceSpec(s.uniform_vec(n, 0.5, 2.0)));
        const OrderedVector xv = s.lattice_vec_nonneg(n);
        const Point<double> x = as_point(xv);
        const Point<double> y = s.coin(0.2) ? x : as_point(s.lattice_vec_nonneg(n));
        const Point<double> z = s.coin(0.2) ? x : as_point(s.lattice_vec_nonneg(n));
        metric_axioms(rec, "plus", inst, g, x, y, z);
    }
}

void transfer_suite(Recorder& rec, Sampler& s, int n) {
    const GaugeNorm g(SpaceSpec(s.uniform_vec(n, 0.5, 2.0)));
    const int terms = s.int_in(0, 3);
    std::vector<double> coeffs;
    std::vector<OrderedVector> dpairs;
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < terms; ++i) {
        coeffs.push_back(s.uniform(0.0, 3.0));
        dpairs.push_back(s.uniform_vec(n, 0.0, 10.0));
        sum += coeffs.back() * dpairs.back().coords();
    }
    Eigen::VectorXd c0(n);
    for (int i = 0; i < n; ++i) c0[i] = s.uniform(-0.9 * sum[i], 10.0);
    const OrderedVector coeff0(c0);
    OrderedVector rhs = coeff0;
    for (int i = 0; i < terms; ++i) rhs = rhs + coeffs[i] * dpairs[i];
    Eigen::VectorXd d0(n);
    for (int i = 0; i < n; ++i) d0[i] = std::max(0.0, rhs[i]) * s.uniform(0.0, 1.0);
    const OrderedVector dist0(d0);
    if (!leq(dist0, rhs)) return;
    rec.check("transfer.scalarized",
              inequality_transfer_check(coeff0, coeffs, dpairs, dist0, g),
              [=] { return show({{"d0", dist0.to_string()}, {"coeff0", coeff0.to_string()}}); });
}

} // namespace

AxiomReport run_axioms(const AxiomOptions& opts) {
    if (opts.samples < 1) throw InputError("run_axioms: sample count must be >= 1");
    if (opts.min_dim < 1 || opts.max_dim < opts.min_dim) throw InputError("run_axioms: invalid dimension range");
    if (!opts.ordering.leq || !opts.ordering.lt) throw InputError("run_axioms: ordering under test is incomplete");

    Recorder rec;
    for (int n = opts.min_dim; n <= opts.max_dim; ++n) {
        std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                          static_cast<std::uint32_t>(n)};
        Sampler s(seq);
        for (std::size_t k = 0; k < opts.samples; ++k) {
            ordering_suites(rec, s, n, opts.ordering);
            s11_suite(rec, s, n, opts.ordering);
            witness_suites(rec, s, n, opts.ordering);
            gauge_suites(rec, s, n);
            cone_metric_suites(rec, s, n);
            transfer_suite(rec, s, n);
        }
    }

    AxiomReport report;
    report.seed = opts.seed;
    report.samples = opts.samples;
    report.min_dim = opts.min_dim;
    report.max_dim = opts.max_dim;
    report.results = rec.results();
    return report;
}

} // namespace conefix

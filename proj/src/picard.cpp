#include "conefix/picard.hpp"

#include <algorithm>

namespace conefix {

std::string to_string(Mode m) { return m == Mode::banach ? "banach" : "iterated"; }

std::string to_string(LambdaSource s) { return s == LambdaSource::given ? "given" : "estimated"; }

std::string to_string(CertificateStatus s) {
    switch (s) {
    case CertificateStatus::certified: return "certified";
    case CertificateStatus::heuristic: return "heuristic";
    case CertificateStatus::conditional: return "conditional";
    }
    return "unknown";
}

std::string to_string(DomainStatus s) { return s == DomainStatus::verified ? "verified" : "conditional"; }

void require_lambda(double lambda) {
    if (!(lambda >= 0.0) || !(lambda <= kMaxLambda)) {
        throw InputError("contraction factor must lie in [0, 1 - 1e-12], got " + std::to_string(lambda));
    }
}

OrderedVector apriori_bound(std::size_t n, double lambda, const OrderedVector& d01) {
    require_lambda(lambda);
    if (!in_cone(d01)) throw InputError("apriori_bound: d01 must lie in the cone");
    const double power = n == 0 ? 1.0 : std::pow(lambda, static_cast<double>(n));
    return (power / (1.0 - lambda)) * d01;
}

OrderedVector apost_forward_bound(const OrderedVector& d_next, double lambda) {
    require_lambda(lambda);
    if (!in_cone(d_next)) throw InputError("apost_forward_bound: distance must lie in the cone");
    return (1.0 / (1.0 - lambda)) * d_next;
}

OrderedVector apost_backward_bound(const OrderedVector& d_prev, double lambda) {
    require_lambda(lambda);
    if (!in_cone(d_prev)) throw InputError("apost_backward_bound: distance must lie in the cone");
    return (lambda / (1.0 - lambda)) * d_prev;
}

bool verify_step_contraction(std::span<const OrderedVector> step_dists, double lambda, std::size_t from) {
    if (step_dists.size() < from + 2) {
        throw InputError("verify_step_contraction: need at least two steps");
    }
    for (std::size_t k = from; k + 1 < step_dists.size(); ++k) {
        if (!leq(step_dists[k + 1], lambda * step_dists[k])) return false;
    }
    return true;
}

double estimate_lambda(std::span<const OrderedVector> step_dists, const GaugeNorm& g, std::size_t from) {
    if (step_dists.size() < from + 2) {
        throw EstimateUndefined("estimate_lambda: need at least two steps");
    }
    if (g(step_dists[from]) == 0.0) {
        throw EstimateUndefined("estimate_lambda: first step is zero");
    }
    double ratio = 0.0;
    for (std::size_t k = from; k + 1 < step_dists.size(); ++k) {
        const double den = g(step_dists[k]);
        if (den == 0.0) continue;
        ratio = std::max(ratio, g(step_dists[k + 1]) / den);
    }
    return ratio;
}

} // namespace conefix

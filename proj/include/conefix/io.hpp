#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "conefix/cone_metric.hpp"
#include "conefix/picard.hpp"
#include "conefix/roots.hpp"

/**
 * @file io.hpp
 *
 * JSON ingestion and CSV/JSON emission. Vectors are JSON arrays of numbers,
 * complex scalars are [re, im] pairs (a bare number is a real scalar), and
 * every floating-point value is written with 17 significant digits and a
 * '.' decimal separator.
 */

namespace conefix::io {

using nlohmann::json;

/// Reads and parses a JSON file; parse errors become InputError with
/// line and column.
json load_json_file(const std::filesystem::path& path);

/// Parses text; `origin` names the source in error messages.
json parse_json(const std::string& text, const std::string& origin = "<input>");

OrderedVector parse_vector(const json& j);
SpaceSpec parse_space_spec(const json& j);
Complex parse_complex(const json& j);
RootVector parse_complex_vector(const json& j);
ConeMetric parse_metric(const json& j);

json to_json(const OrderedVector& v);
json to_json(Complex z);
json to_json(const RootVector& z);
json to_json(const Certificate& c);

/// Shortest round-trip is not used; always 17 significant digits.
std::string format_double(double v);

namespace detail {

inline void write_cells(std::ostream& os, const Point<double>& p) {
    for (Index i = 0; i < p.size(); ++i) os << ',' << format_double(p[i]);
}

inline void write_cells(std::ostream& os, const Point<Complex>& p) {
    for (Index i = 0; i < p.size(); ++i) os << ',' << format_double(p[i].real()) << ',' << format_double(p[i].imag());
}

inline void write_cells(std::ostream& os, const OrderedVector* v, Index n) {
    for (Index i = 0; i < n; ++i) {
        os << ',';
        if (v) os << format_double((*v)[i]);
    }
}

template <typename Scalar>
void write_point_header(std::ostream& os, Index n) {
    for (Index i = 0; i < n; ++i) {
        if constexpr (is_complex_v<Scalar>) os << ",re" << i << ",im" << i;
        else os << ",x" << i;
    }
}

inline void write_vector_header(std::ostream& os, const char* prefix, Index n) {
    for (Index i = 0; i < n; ++i) os << ',' << prefix << i;
}

} // namespace detail

/**
 * @brief One row per iterate: iter, coords…, step_dist…, apriori…,
 * apost_fwd…, apost_bwd….
 *
 * step_dist on row n is d(x_n, x_{n+1}); on the final row it is the residual
 * d(x_N, T x_N). Bound columns are empty where the certificate does not
 * cover the iterate.
 */
template <typename Scalar>
void write_trace_csv(std::ostream& os, const IterationTrace<Scalar>& trace, const OrderedVector& residual,
                     const std::optional<Certificate>& cert) {
    const Index dim = trace.iterates.empty() ? 0 : trace.iterates.front().size();
    const Index m = residual.size();
    os << "iter";
    detail::write_point_header<Scalar>(os, dim);
    detail::write_vector_header(os, "step_dist", m);
    detail::write_vector_header(os, "apriori", m);
    detail::write_vector_header(os, "apost_fwd", m);
    detail::write_vector_header(os, "apost_bwd", m);
    os << '\n';

    for (std::size_t k = 0; k < trace.iterates.size(); ++k) {
        os << k;
        detail::write_cells(os, trace.iterates[k]);
        const OrderedVector* step = k < trace.step_dists.size() ? &trace.step_dists[k] : &residual;
        detail::write_cells(os, step, m);
        const OrderedVector* apriori = nullptr;
        const OrderedVector* fwd = nullptr;
        const OrderedVector* bwd = nullptr;
        if (cert && k >= cert->first) {
            const std::size_t off = k - cert->first;
            if (off < cert->apriori.size()) apriori = &cert->apriori[off];
            if (off < cert->apost_forward.size()) fwd = &cert->apost_forward[off];
            if (off >= 1 && off - 1 < cert->apost_backward.size()) bwd = &cert->apost_backward[off - 1];
        }
        detail::write_cells(os, apriori, m);
        detail::write_cells(os, fwd, m);
        detail::write_cells(os, bwd, m);
        os << '\n';
    }
}

} // namespace conefix::io

#include "conefix/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

namespace conefix::io {

namespace {

std::pair<std::size_t, std::size_t> line_and_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

double as_number(const json& j, const char* what) {
    if (!j.is_number()) {
        throw InputError(std::string(what) + ": expected a number, got " + j.dump());
    }
    return j.get<double>();
}

} // namespace

json parse_json(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_and_column(text, e.byte);
        throw InputError(origin + ": malformed JSON at line " + std::to_string(line) + ", column " +
                         std::to_string(col));
    }
}

json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str(), path.string());
}

OrderedVector parse_vector(const json& j) {
    if (!j.is_array() || j.empty()) {
        throw InputError("expected a non-empty array of numbers, got " + j.dump());
    }
    Eigen::VectorXd v(static_cast<Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Index>(i)] = as_number(j[i], "vector entry");
    return OrderedVector(std::move(v));
}

SpaceSpec parse_space_spec(const json& j) {
    if (!j.is_object() || !j.contains("base")) {
        throw InputError("space spec must be an object with \"n\" and \"base\"");
    }
    OrderedVector base = parse_vector(j.at("base"));
    if (j.contains("n")) {
        if (!j.at("n").is_number_integer() || j.at("n").get<long long>() != base.size()) {
            throw InputError("space spec: \"n\" does not match the length of \"base\"");
        }
    }
    return SpaceSpec(std::move(base));
}

Complex parse_complex(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2) {
        return {as_number(j[0], "complex real part"), as_number(j[1], "complex imaginary part")};
    }
    throw InputError("expected a complex scalar [re, im] or a number, got " + j.dump());
}

RootVector parse_complex_vector(const json& j) {
    if (!j.is_array() || j.empty()) {
        throw InputError("expected a non-empty array of complex scalars");
    }
    RootVector z(static_cast<Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) z[static_cast<Index>(i)] = parse_complex(j[i]);
    return z;
}

ConeMetric parse_metric(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
        throw InputError("metric must be an object with a \"kind\" string");
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "weighted" || kind == "weighted_norm") {
        const OrderedVector alpha = parse_vector(j.at("alpha"));
        const std::string field = j.value("field", std::string("real"));
        if (field != "real" && field != "complex") {
            throw InputError("metric field must be \"real\" or \"complex\"");
        }
        return ConeMetric::weighted(alpha.coords(), field == "complex" ? Field::complex : Field::real);
    }
    if (kind == "discrete") {
        return ConeMetric::discrete(parse_vector(j.at("a")));
    }
    if (kind == "plus" || kind == "plus_metric") {
        if (!j.contains("n") || !j.at("n").is_number_integer()) {
            throw InputError("plus metric needs an integer \"n\"");
        }
        return ConeMetric::plus(j.at("n").get<Index>());
    }
    throw InputError("unknown metric kind \"" + kind + "\"");
}

std::string format_double(double v) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

json to_json(const OrderedVector& v) {
    json arr = json::array();
    for (Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const RootVector& z) {
    json arr = json::array();
    for (Index i = 0; i < z.size(); ++i) arr.push_back(to_json(z[i]));
    return arr;
}

json to_json(const Certificate& c) {
    auto list = [](const std::vector<OrderedVector>& vs) {
        json arr = json::array();
        for (const auto& v : vs) arr.push_back(to_json(v));
        return arr;
    };
    return json{
        {"lambda", c.lambda_used},
        {"lambda_source", to_string(c.lambda_source)},
        {"mode", to_string(c.mode)},
        {"first_iterate", c.first},
        {"radius", to_json(c.radius_r)},
        {"domain", to_string(c.domain)},
        {"step_contraction_observed", c.step_contraction_observed},
        {"status", to_string(c.status)},
        {"residual", to_json(c.residual)},
        {"apriori", list(c.apriori)},
        {"apost_forward", list(c.apost_forward)},
        {"apost_backward", list(c.apost_backward)},
    };
}

} // namespace conefix::io

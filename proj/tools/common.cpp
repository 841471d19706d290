#include "common.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "spinhalf/version.hpp"

namespace spinhalf::cli {

Format parse_format(const std::string& s) {
    if (s == "table") return Format::table;
    if (s == "json") return Format::json_fmt;
    if (s == "csv") return Format::csv;
    throw UsageError("--format must be one of table, json, csv (got '" + s + "')");
}

namespace {

std::vector<double> parse_doubles(const std::string& flag, const std::string& value,
                                  std::size_t expected) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= value.size()) {
        const std::size_t comma = value.find(',', start);
        const std::string piece =
            value.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
        if (ec != std::errc{} || ptr != piece.data() + piece.size()) {
            throw UsageError(flag + ": cannot parse '" + piece + "' as a number");
        }
        out.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.size() != expected) {
        throw UsageError(flag + ": expected " + std::to_string(expected) +
                         " comma-separated numbers, got '" + value + "'");
    }
    return out;
}

}  // namespace

AnglePair parse_angle_pair(const std::string& flag, const std::string& value) {
    const auto v = parse_doubles(flag, value, 2);
    return {v[0], v[1]};
}

Direction to_direction(const AnglePair& p, bool radians) {
    const double scale = radians ? 1.0 : std::numbers::pi / 180.0;
    try {
        return make_direction(p.first * scale, p.second * scale);
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
}

Projection parse_projection(const std::string& flag, const std::string& value) {
    if (value == "+" || value == "+1" || value == "up") return Projection::up;
    if (value == "-" || value == "-1" || value == "down") return Projection::down;
    throw UsageError(flag + ": expected + or - (got '" + value + "')");
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_complex(const Complex& z) {
    return fmt(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt(std::abs(z.imag())) + "i";
}

json angle_json(const AnglePair& p) { return json{{"theta", p.first}, {"phi", p.second}}; }

json complex_json(const Complex& z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json vec_json(const Vec2c& v) { return json::array({complex_json(v[0]), complex_json(v[1])}); }

json mat_json(const Mat2c& m) {
    return json::array({json::array({complex_json(m(0, 0)), complex_json(m(0, 1))}),
                        json::array({complex_json(m(1, 0)), complex_json(m(1, 1))})});
}

void push_complex(std::vector<std::string>& row, const Complex& z) {
    row.push_back(fmt(z.real()));
    row.push_back(fmt(z.imag()));
}

std::string join_csv(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += cells[i];
    }
    return line;
}

json Envelope::to_json() const {
    return json{{"command", command},
                {"inputs", inputs},
                {"results", results},
                {"metadata", metadata}};
}

json base_metadata() { return json{{"version", kVersion}}; }

}  // namespace spinhalf::cli

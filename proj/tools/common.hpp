#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "spinhalf/geometry.hpp"
#include "spinhalf/matrix2.hpp"
#include "spinhalf/projection.hpp"

namespace spinhalf::cli {

using json = nlohmann::ordered_json;

/// Flag parsing problem; reported on stderr and mapped to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { table, json_fmt, csv };

Format parse_format(const std::string& s);

/// "theta,phi" in the active unit.
struct AnglePair {
    double first = 0.0;
    double second = 0.0;
};

AnglePair parse_angle_pair(const std::string& flag, const std::string& value);

/// Converts a parsed pair to a canonical Direction (degrees unless
/// `radians`).
Direction to_direction(const AnglePair& p, bool radians);

Projection parse_projection(const std::string& flag, const std::string& value);

/// Full-precision decimal form that parses back to the same double.
std::string fmt(double v);

std::string fmt_complex(const Complex& z);

json angle_json(const AnglePair& p);

json complex_json(const Complex& z);

json vec_json(const Vec2c& v);

json mat_json(const Mat2c& m);

/// CSV cells for a complex number (re, im).
void push_complex(std::vector<std::string>& row, const Complex& z);

std::string join_csv(const std::vector<std::string>& cells);

/// The assembled output of one command.
struct Envelope {
    std::string command;
    json inputs;
    json results;
    json metadata;

    json to_json() const;
};

/// Metadata common to every command.
json base_metadata();

}  // namespace spinhalf::cli

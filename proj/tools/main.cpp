#include <cmath>
#include <cstdint>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "common.hpp"
#include "spinhalf/amplitudes.hpp"
#include "spinhalf/expectation.hpp"
#include "spinhalf/oracle.hpp"
#include "spinhalf/simulator.hpp"
#include "spinhalf/states_operators.hpp"
#include "spinhalf/version.hpp"
#include "verify.hpp"

namespace {

using namespace spinhalf;
using namespace spinhalf::cli;

constexpr double kComparisonTol = 1e-12;

struct CommonOpts {
    std::string format = "table";
    bool radians = false;

    Format fmt() const { return parse_format(format); }
    const char* unit() const { return radians ? "radians" : "degrees"; }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "Output format: table, json or csv")
        ->capture_default_str();
    cmd->add_flag("--radians", o.radians, "Interpret angle flags as radians (default degrees)");
}

void print_json(const Envelope& env) { std::cout << env.to_json().dump(2) << "\n"; }

void print_csv(const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::cout << join_csv(header) << "\n";
    for (const auto& row : rows) std::cout << join_csv(row) << "\n";
}

std::string angle_str(const AnglePair& p) { return "(" + fmt(p.first) + "," + fmt(p.second) + ")"; }

/// Canonical direction re-expressed in the active unit, for echoing derived
/// axes.
AnglePair echo_pair(const Direction& d, bool radians) {
    const double scale = radians ? 1.0 : 180.0 / std::numbers::pi;
    return {d.theta() * scale, d.phi() * scale};
}

// ---------------------------------------------------------------------------
// amplitude
// ---------------------------------------------------------------------------

struct AmplitudeOpts {
    CommonOpts common;
    std::string mi, a, mf, c;
};

int run_amplitude(const AmplitudeOpts& o) {
    const Projection mi = parse_projection("--mi", o.mi);
    const Projection mf = parse_projection("--mf", o.mf);
    const AnglePair ap = parse_angle_pair("--a", o.a);
    const AnglePair cp = parse_angle_pair("--c", o.c);
    const Direction a = to_direction(ap, o.common.radians);
    const Direction c = to_direction(cp, o.common.radians);

    const Amplitude amp = amplitude(mi, a, mf, c);
    const Complex reference = oracle::amplitude(mi, a, mf, c);
    const double probability = std::norm(amp);
    const double difference = std::abs(amp - reference);

    Envelope env{.command = "amplitude",
                 .inputs = {{"mi", std::string(1, symbol(mi))},
                            {"a", angle_json(ap)},
                            {"mf", std::string(1, symbol(mf))},
                            {"c", angle_json(cp)},
                            {"unit", o.common.unit()}},
                 .results = {{"amplitude", complex_json(amp)},
                             {"probability", probability},
                             {"oracle", complex_json(reference)},
                             {"abs_difference", difference}},
                 .metadata = base_metadata()};
    env.metadata["tolerance"] = kComparisonTol;

    switch (o.common.fmt()) {
        case Format::json_fmt:
            print_json(env);
            break;
        case Format::csv: {
            std::vector<std::string> row{"amplitude", o.common.unit(), std::string(1, symbol(mi)),
                                         fmt(ap.first),  fmt(ap.second),
                                         std::string(1, symbol(mf)),
                                         fmt(cp.first),  fmt(cp.second)};
            push_complex(row, amp);
            row.push_back(fmt(probability));
            push_complex(row, reference);
            row.push_back(fmt(difference));
            print_csv({"command", "unit", "mi", "a_theta", "a_phi", "mf", "c_theta", "c_phi",
                       "re", "im", "probability", "oracle_re", "oracle_im", "abs_difference"},
                      {row});
            break;
        }
        case Format::table:
            std::cout << "amplitude  mi=" << symbol(mi) << "  a=" << angle_str(ap)
                      << "  mf=" << symbol(mf) << "  c=" << angle_str(cp) << "  ["
                      << o.common.unit() << "]\n";
            std::cout << "  amplitude     " << fmt_complex(amp) << "\n";
            std::cout << "  probability   " << fmt(probability) << "\n";
            std::cout << "  oracle        " << fmt_complex(reference) << "\n";
            std::cout << "  |difference|  " << fmt(difference) << "\n";
            break;
    }
    return difference <= kComparisonTol ? 0 : 1;
}

// ---------------------------------------------------------------------------
// state
// ---------------------------------------------------------------------------

struct StateOpts {
    CommonOpts common;
    std::string mi, a, b;
};

int run_state(const StateOpts& o) {
    const Projection mi = parse_projection("--mi", o.mi);
    const AnglePair ap = parse_angle_pair("--a", o.a);
    const AnglePair bp = parse_angle_pair("--b", o.b);
    const Direction a = to_direction(ap, o.common.radians);
    const Direction b = to_direction(bp, o.common.radians);

    const SpinState state = spin_state(mi, a, b);
    const double vec_norm = norm(state.components);

    Envelope env{.command = "state",
                 .inputs = {{"mi", std::string(1, symbol(mi))},
                            {"a", angle_json(ap)},
                            {"b", angle_json(bp)},
                            {"unit", o.common.unit()}},
                 .results = {{"components", vec_json(state.components)}, {"norm", vec_norm}},
                 .metadata = base_metadata()};

    switch (o.common.fmt()) {
        case Format::json_fmt:
            print_json(env);
            break;
        case Format::csv: {
            std::vector<std::string> row{"state", o.common.unit(), std::string(1, symbol(mi)),
                                         fmt(ap.first), fmt(ap.second), fmt(bp.first),
                                         fmt(bp.second)};
            push_complex(row, state.components[0]);
            push_complex(row, state.components[1]);
            row.push_back(fmt(vec_norm));
            print_csv({"command", "unit", "mi", "a_theta", "a_phi", "b_theta", "b_phi", "up_re",
                       "up_im", "down_re", "down_im", "norm"},
                      {row});
            break;
        }
        case Format::table:
            std::cout << "state  mi=" << symbol(mi) << "  a=" << angle_str(ap)
                      << "  b=" << angle_str(bp) << "  [" << o.common.unit() << "]\n";
            std::cout << "  component(+)  " << fmt_complex(state.components[0]) << "\n";
            std::cout << "  component(-)  " << fmt_complex(state.components[1]) << "\n";
            std::cout << "  norm          " << fmt(vec_norm) << "\n";
            break;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// operator
// ---------------------------------------------------------------------------

struct OperatorOpts {
    CommonOpts common;
    std::string c, b;
    bool compare_trig = false;
};

int run_operator(const OperatorOpts& o) {
    const AnglePair cp = parse_angle_pair("--c", o.c);
    const AnglePair bp = parse_angle_pair("--b", o.b);
    const Direction c = to_direction(cp, o.common.radians);
    const Direction b = to_direction(bp, o.common.radians);

    const Mat2c m = spin_operator(c, b).entries;

    Envelope env{.command = "operator",
                 .inputs = {{"c", angle_json(cp)},
                            {"b", angle_json(bp)},
                            {"compare_trig", o.compare_trig},
                            {"unit", o.common.unit()}},
                 .results = {{"matrix", mat_json(m)}},
                 .metadata = base_metadata()};
    env.metadata["tolerance"] = kComparisonTol;

    Mat2c trig;
    double max_diff = 0.0;
    if (o.compare_trig) {
        trig = spin_operator_trig(c, b).entries;
        max_diff = max_abs(trig - m);
        env.results["trig_matrix"] = mat_json(trig);
        env.results["max_abs_difference"] = max_diff;
        json diffs = json::array();
        for (int i = 0; i < 2; ++i) {
            json row = json::array();
            for (int j = 0; j < 2; ++j) row.push_back(std::abs(trig(i, j) - m(i, j)));
            diffs.push_back(row);
        }
        env.results["abs_differences"] = diffs;
    }

    switch (o.common.fmt()) {
        case Format::json_fmt:
            print_json(env);
            break;
        case Format::csv: {
            std::vector<std::string> header{"command", "unit",   "c_theta", "c_phi",
                                            "b_theta", "b_phi",  "m11_re",  "m11_im",
                                            "m12_re",  "m12_im", "m21_re",  "m21_im",
                                            "m22_re",  "m22_im"};
            std::vector<std::string> row{"operator",    o.common.unit(), fmt(cp.first),
                                         fmt(cp.second), fmt(bp.first),  fmt(bp.second)};
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) push_complex(row, m(i, j));
            if (o.compare_trig) {
                for (const char* name : {"t11_re", "t11_im", "t12_re", "t12_im", "t21_re",
                                         "t21_im", "t22_re", "t22_im"})
                    header.emplace_back(name);
                header.emplace_back("max_abs_difference");
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) push_complex(row, trig(i, j));
                row.push_back(fmt(max_diff));
            }
            print_csv(header, {row});
            break;
        }
        case Format::table:
            std::cout << "operator  c=" << angle_str(cp) << "  b=" << angle_str(bp) << "  ["
                      << o.common.unit() << "]\n";
            std::cout << "  [ " << fmt_complex(m(0, 0)) << " , " << fmt_complex(m(0, 1))
                      << " ]\n";
            std::cout << "  [ " << fmt_complex(m(1, 0)) << " , " << fmt_complex(m(1, 1))
                      << " ]\n";
            if (o.compare_trig) {
                std::cout << "  trig form:\n";
                std::cout << "  [ " << fmt_complex(trig(0, 0)) << " , " << fmt_complex(trig(0, 1))
                          << " ]\n";
                std::cout << "  [ " << fmt_complex(trig(1, 0)) << " , " << fmt_complex(trig(1, 1))
                          << " ]\n";
                std::cout << "  max |difference|  " << fmt(max_diff) << "\n";
            }
            break;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// eigvec
// ---------------------------------------------------------------------------

struct EigvecOpts {
    CommonOpts common;
    std::string c, b;
};

int run_eigvec(const EigvecOpts& o) {
    const AnglePair cp = parse_angle_pair("--c", o.c);
    const AnglePair bp = parse_angle_pair("--b", o.b);
    const Direction c = to_direction(cp, o.common.radians);
    const Direction b = to_direction(bp, o.common.radians);

    const auto [plus, minus] = eigenvectors(c, b);
    const Mat2c m = spin_operator(c, b).entries;
    const double residual_plus = max_abs(m * plus.components - plus.components);
    const double residual_minus =
        max_abs(m * minus.components - Complex(-1.0) * minus.components);
    const double overlap = std::abs(inner(plus.components, minus.components));

    Envelope env{.command = "eigvec",
                 .inputs = {{"c", angle_json(cp)}, {"b", angle_json(bp)},
                            {"unit", o.common.unit()}},
                 .results = {{"plus", vec_json(plus.components)},
                             {"minus", vec_json(minus.components)},
                             {"residual_plus", residual_plus},
                             {"residual_minus", residual_minus},
                             {"orthogonality", overlap}},
                 .metadata = base_metadata()};
    env.metadata["tolerance"] = kComparisonTol;

    switch (o.common.fmt()) {
        case Format::json_fmt:
            print_json(env);
            break;
        case Format::csv: {
            std::vector<std::string> row{"eigvec",       o.common.unit(), fmt(cp.first),
                                         fmt(cp.second), fmt(bp.first),   fmt(bp.second)};
            push_complex(row, plus.components[0]);
            push_complex(row, plus.components[1]);
            push_complex(row, minus.components[0]);
            push_complex(row, minus.components[1]);
            row.push_back(fmt(residual_plus));
            row.push_back(fmt(residual_minus));
            row.push_back(fmt(overlap));
            print_csv({"command", "unit", "c_theta", "c_phi", "b_theta", "b_phi", "plus_up_re",
                       "plus_up_im", "plus_down_re", "plus_down_im", "minus_up_re",
                       "minus_up_im", "minus_down_re", "minus_down_im", "residual_plus",
                       "residual_minus", "orthogonality"},
                      {row});
            break;
        }
        case Format::table:
            std::cout << "eigvec  c=" << angle_str(cp) << "  b=" << angle_str(bp) << "  ["
                      << o.common.unit() << "]\n";
            std::cout << "  +1: ( " << fmt_complex(plus.components[0]) << " , "
                      << fmt_complex(plus.components[1]) << " )\n";
            std::cout << "  -1: ( " << fmt_complex(minus.components[0]) << " , "
                      << fmt_complex(minus.components[1]) << " )\n";
            std::cout << "  eigen residuals  " << fmt(residual_plus) << "  "
                      << fmt(residual_minus) << "\n";
            std::cout << "  |<+,->|          " << fmt(overlap) << "\n";
            break;
    }
    return std::max(residual_plus, residual_minus) <= kComparisonTol ? 0 : 1;
}

// ---------------------------------------------------------------------------
// expect
// ---------------------------------------------------------------------------

struct ExpectOpts {
    CommonOpts common;
    std::string mi, a, c, b, case_id;
};

std::optional<CaseId> parse_case(const std::string& s) {
    if (s.empty()) return std::nullopt;
    if (s.size() == 1) {
        switch (std::tolower(static_cast<unsigned char>(s[0]))) {
            case 'a': return CaseId::A;
            case 'b': return CaseId::B;
            case 'c': return CaseId::C;
            case 'd': return CaseId::D;
            case 'e': return CaseId::E;
            default: break;
        }
    }
    throw UsageError("--case must be one of a, b, c, d, e (got '" + s + "')");
}

char case_letter(CaseId id) {
    switch (id) {
        case CaseId::A: return 'a';
        case CaseId::B: return 'b';
        case CaseId::C: return 'c';
        case CaseId::D: return 'd';
        case CaseId::E: return 'e';
    }
    return '?';
}

int run_expect(const ExpectOpts& o) {
    const Projection mi = parse_projection("--mi", o.mi);
    const AnglePair ap = parse_angle_pair("--a", o.a);
    const Direction a = to_direction(ap, o.common.radians);
    const std::optional<CaseId> case_id = parse_case(o.case_id);

    std::optional<AnglePair> cp;
    std::optional<Direction> c;
    if (!o.c.empty()) {
        cp = parse_angle_pair("--c", o.c);
        c = to_direction(*cp, o.common.radians);
    }
    std::optional<AnglePair> bp;
    std::optional<Direction> b;
    if (!o.b.empty()) {
        bp = parse_angle_pair("--b", o.b);
        b = to_direction(*bp, o.common.radians);
    }

    SpinState state = spin_state(mi, a, a);  // placeholder; overwritten below
    SpinOperator op = spin_operator(a, a);
    Direction effective_c = a;

    if (!case_id) {
        if (!c) throw UsageError("--c is required unless --case d or --case e is given");
        if (!b) {
            // Default expansion basis: the reducing pole (0, pi), where the
            // representation collapses to the familiar one-direction forms.
            bp = o.common.radians ? AnglePair{0.0, std::numbers::pi} : AnglePair{0.0, 180.0};
            b = to_direction(*bp, o.common.radians);
        }
        state = spin_state(mi, a, *b);
        op = spin_operator(*c, *b);
        effective_c = *c;
    } else {
        switch (*case_id) {
            case CaseId::A:
            case CaseId::D:
                if (!b) throw UsageError("--case a and --case d require --b");
                break;
            case CaseId::B:
            case CaseId::C:
            case CaseId::E:
                if (b) {
                    throw UsageError(
                        "--case b, c and e fix their own basis; --b is ambiguous here");
                }
                break;
        }
        const bool measures_initial = *case_id == CaseId::D || *case_id == CaseId::E;
        if (measures_initial) {
            if (c && !(*c == a)) {
                throw UsageError("--case d and e measure along --a; a different --c is "
                                 "inconsistent");
            }
            effective_c = a;
        } else {
            if (!c) throw UsageError("--c is required for cases a, b and c");
            effective_c = *c;
        }
        auto pair = case_configuration(*case_id, mi, a, effective_c, b);
        state = pair.first;
        op = pair.second;
    }

    const double direct = expectation_direct(mi, a, effective_c);
    const double sandwich = sandwich_expectation(state, op);
    const double analytic = eigenvalue(mi) * std::cos(angle_between(a, effective_c));
    const double reference = oracle::expectation(mi, a, effective_c);

    double max_diff = 0.0;
    const double values[] = {direct, sandwich, analytic, reference};
    for (double x : values)
        for (double y : values) max_diff = std::max(max_diff, std::abs(x - y));

    Envelope env{.command = "expect",
                 .inputs = {{"mi", std::string(1, symbol(mi))},
                            {"a", angle_json(ap)},
                            {"unit", o.common.unit()}},
                 .results = {{"direct", direct},
                             {"sandwich", sandwich},
                             {"analytic", analytic},
                             {"oracle", reference},
                             {"max_pairwise_difference", max_diff}},
                 .metadata = base_metadata()};
    if (cp) env.inputs["c"] = angle_json(*cp);
    if (bp) env.inputs["b"] = angle_json(*bp);
    if (case_id) env.inputs["case"] = std::string(1, case_letter(*case_id));
    env.results["effective_c_rad"] =
        json{{"theta", effective_c.theta()}, {"phi", effective_c.phi()}};
    env.metadata["tolerance"] = kComparisonTol;

    switch (o.common.fmt()) {
        case Format::json_fmt:
            print_json(env);
            break;
        case Format::csv: {
            std::vector<std::string> row{
                "expect", o.common.unit(),
                case_id ? std::string(1, case_letter(*case_id)) : std::string("-"),
                std::string(1, symbol(mi)), fmt(ap.first), fmt(ap.second),
                cp ? fmt(cp->first) : "", cp ? fmt(cp->second) : "",
                bp ? fmt(bp->first) : "", bp ? fmt(bp->second) : "",
                fmt(direct), fmt(sandwich), fmt(analytic), fmt(reference), fmt(max_diff)};
            print_csv({"command", "unit", "case", "mi", "a_theta", "a_phi", "c_theta", "c_phi",
                       "b_theta", "b_phi", "direct", "sandwich", "analytic", "oracle",
                       "max_pairwise_difference"},
                      {row});
            break;
        }
        case Format::table:
            std::cout << "expect  mi=" << symbol(mi) << "  a=" << angle_str(ap);
            if (cp) std::cout << "  c=" << angle_str(*cp);
            if (bp) std::cout << "  b=" << angle_str(*bp);
            if (case_id) std::cout << "  case=" << case_letter(*case_id);
            std::cout << "  [" << o.common.unit() << "]\n";
            std::cout << "  direct     " << fmt(direct) << "\n";
            std::cout << "  sandwich   " << fmt(sandwich) << "\n";
            std::cout << "  analytic   " << fmt(analytic) << "\n";
            std::cout << "  oracle     " << fmt(reference) << "\n";
            std::cout << "  max |pairwise difference|  " << fmt(max_diff) << "\n";
            break;
    }
    return max_diff <= kComparisonTol ? 0 : 1;
}

// ---------------------------------------------------------------------------
// cases
// ---------------------------------------------------------------------------

struct CasesOpts {
    CommonOpts common;
    std::string mi, a, c, b;
};

int run_cases(const CasesOpts& o) {
    const Projection mi = parse_projection("--mi", o.mi);
    const AnglePair ap = parse_angle_pair("--a", o.a);
    const AnglePair cp = parse_angle_pair("--c", o.c);
    const Direction a = to_direction(ap, o.common.radians);
    const Direction c = to_direction(cp, o.common.radians);

    AnglePair bp;
    if (o.b.empty()) {
        bp = o.common.radians ? AnglePair{0.0, std::numbers::pi} : AnglePair{0.0, 180.0};
    } else {
        bp = parse_angle_pair("--b", o.b);
    }
    const Direction b = to_direction(bp, o.common.radians);

    struct Row {
        CaseId id;
        SpinState state;
        SpinOperator op;
        double expectation;
        double deviation;
    };

    const double general = eigenvalue(mi) * std::cos(angle_between(a, c));
    std::vector<Row> rows;
    double max_deviation = 0.0;
    for (CaseId id : {CaseId::A, CaseId::B, CaseId::C, CaseId::D, CaseId::E}) {
        const bool needs_basis = id == CaseId::A || id == CaseId::D;
        auto [state, op] =
            case_configuration(id, mi, a, c, needs_basis ? std::optional<Direction>(b)
                                                         : std::nullopt);
        const double e = sandwich_expectation(state, op);
        const bool measures_initial = id == CaseId::D || id == CaseId::E;
        const double expected = measures_initial ? eigenvalue(mi) : general;
        const double deviation = std::abs(e - expected);
        max_deviation = std::max(max_deviation, deviation);
        rows.push_back({id, state, op, e, deviation});
    }
    const bool coherent = max_deviation <= kComparisonTol;

    Envelope env{.command = "cases",
                 .inputs = {{"mi", std::string(1, symbol(mi))},
                            {"a", angle_json(ap)},
                            {"c", angle_json(cp)},
                            {"b", angle_json(bp)},
                            {"unit", o.common.unit()}},
                 .results = json::object(),
                 .metadata = base_metadata()};
    env.metadata["tolerance"] = kComparisonTol;

    json case_array = json::array();
    for (const Row& row : rows) {
        case_array.push_back(
            {{"case", std::string(1, case_letter(row.id))},
             {"basis_rad", json{{"theta", row.op.basis.theta()}, {"phi", row.op.basis.phi()}}},
             {"measured_rad",
              json{{"theta", row.op.measured.theta()}, {"phi", row.op.measured.phi()}}},
             {"state", vec_json(row.state.components)},
             {"operator", mat_json(row.op.entries)},
             {"expectation", row.expectation},
             {"deviation", row.deviation}});
    }
    env.results["cases"] = case_array;
    env.results["max_deviation"] = max_deviation;
    env.results["coherent"] = coherent;

    switch (o.common.fmt()) {
        case Format::json_fmt:
            print_json(env);
            break;
        case Format::csv: {
            std::vector<std::vector<std::string>> csv_rows;
            for (const Row& row : rows) {
                std::vector<std::string> r{
                    "cases", o.common.unit(), std::string(1, case_letter(row.id)),
                    std::string(1, symbol(mi)), fmt(ap.first), fmt(ap.second), fmt(cp.first),
                    fmt(cp.second), fmt(row.op.basis.theta()), fmt(row.op.basis.phi()),
                    fmt(row.op.measured.theta()), fmt(row.op.measured.phi())};
                push_complex(r, row.state.components[0]);
                push_complex(r, row.state.components[1]);
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) push_complex(r, row.op.entries(i, j));
                r.push_back(fmt(row.expectation));
                r.push_back(fmt(row.deviation));
                csv_rows.push_back(std::move(r));
            }
            print_csv({"command", "unit", "case", "mi", "a_theta", "a_phi", "c_theta", "c_phi",
                       "basis_theta_rad", "basis_phi_rad", "measured_theta_rad",
                       "measured_phi_rad", "state_up_re", "state_up_im", "state_down_re",
                       "state_down_im", "m11_re", "m11_im", "m12_re", "m12_im", "m21_re",
                       "m21_im", "m22_re", "m22_im", "expectation", "deviation"},
                      csv_rows);
            break;
        }
        case Format::table:
            std::cout << "cases  mi=" << symbol(mi) << "  a=" << angle_str(ap)
                      << "  c=" << angle_str(cp) << "  b=" << angle_str(bp) << "  ["
                      << o.common.unit() << "]\n";
            for (const Row& row : rows) {
                std::cout << "  case " << case_letter(row.id) << "  expectation "
                          << fmt(row.expectation) << "  deviation " << fmt(row.deviation)
                          << "\n";
                std::cout << "    state ( " << fmt_complex(row.state.components[0]) << " , "
                          << fmt_complex(row.state.components[1]) << " )\n";
                std::cout << "    op    [ " << fmt_complex(row.op.entries(0, 0)) << " , "
                          << fmt_complex(row.op.entries(0, 1)) << " ; "
                          << fmt_complex(row.op.entries(1, 0)) << " , "
                          << fmt_complex(row.op.entries(1, 1)) << " ]\n";
            }
            std::cout << "  coherent: " << (coherent ? "yes" : "NO") << "  (max deviation "
                      << fmt(max_deviation) << ", tolerance " << fmt(kComparisonTol) << ")\n";
            break;
    }
    return coherent ? 0 : 1;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

struct SimulateOpts {
    CommonOpts common;
    std::string start;
    std::vector<std::string> stages;
    std::uint64_t shots = 10000;
    std::uint64_t seed = 1;
};

std::string outcomes_str(const std::vector<Projection>& outcomes) {
    std::string s;
    for (Projection p : outcomes) s += symbol(p);
    return s;
}

int run_simulate(const SimulateOpts& o) {
    // --start is "theta,phi,projection".
    const std::size_t last_comma = o.start.rfind(',');
    if (last_comma == std::string::npos) {
        throw UsageError("--start: expected theta,phi,projection");
    }
    const AnglePair startp = parse_angle_pair("--start", o.start.substr(0, last_comma));
    const Projection mi = parse_projection("--start", o.start.substr(last_comma + 1));

    MeasurementChain chain;
    chain.initial_direction = to_direction(startp, o.common.radians);
    chain.initial_projection = mi;
    std::vector<AnglePair> stage_pairs;
    for (const std::string& s : o.stages) {
        stage_pairs.push_back(parse_angle_pair("--stage", s));
        chain.stages.push_back(to_direction(stage_pairs.back(), o.common.radians));
    }
    if (chain.stages.empty()) throw UsageError("--stage: at least one stage is required");

    ChainResult result;
    try {
        result = run_chain(chain, o.shots, o.seed);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    std::vector<PathProbability> paths;
    if (chain.stages.size() <= kMaxEnumeratedStages) paths = enumerate_paths(chain);

    json stage_json = json::array();
    for (std::size_t s = 0; s < result.stage_counts.size(); ++s) {
        stage_json.push_back({{"stage", s},
                              {"n_up", result.stage_counts[s].n_up},
                              {"n_down", result.stage_counts[s].n_down}});
    }
    json path_json = json::array();
    for (std::size_t mask = 0; mask < paths.size(); ++mask) {
        path_json.push_back(
            {{"outcomes", outcomes_str(paths[mask].outcomes)},
             {"probability", paths[mask].probability},
             {"count", result.path_counts[mask]},
             {"frequency", static_cast<double>(result.path_counts[mask]) /
                               static_cast<double>(result.shots)}});
    }

    json stages_in = json::array();
    for (const AnglePair& p : stage_pairs) stages_in.push_back(angle_json(p));

    Envelope env{.command = "simulate",
                 .inputs = {{"start",
                             {{"theta", startp.first},
                              {"phi", startp.second},
                              {"projection", std::string(1, symbol(mi))}}},
                            {"stages", stages_in},
                            {"shots", o.shots},
                            {"seed", o.seed},
                            {"unit", o.common.unit()}},
                 .results = {{"stage_counts", stage_json},
                             {"estimate", result.estimate},
                             {"standard_error", result.standard_error}},
                 .metadata = base_metadata()};
    if (!paths.empty()) env.results["paths"] = path_json;
    env.metadata["rng"] = kRngAlgorithm;

    switch (o.common.fmt()) {
        case Format::json_fmt:
            print_json(env);
            break;
        case Format::csv: {
            std::vector<std::vector<std::string>> csv_rows;
            for (std::size_t s = 0; s < result.stage_counts.size(); ++s) {
                csv_rows.push_back({"simulate", o.common.unit(), std::to_string(o.shots),
                                    std::to_string(o.seed), std::to_string(s),
                                    fmt(stage_pairs[s].first), fmt(stage_pairs[s].second),
                                    std::to_string(result.stage_counts[s].n_up),
                                    std::to_string(result.stage_counts[s].n_down),
                                    fmt(result.estimate), fmt(result.standard_error)});
            }
            print_csv({"command", "unit", "shots", "seed", "stage", "theta", "phi", "n_up",
                       "n_down", "estimate", "standard_error"},
                      csv_rows);
            break;
        }
        case Format::table:
            std::cout << "simulate  start=" << angle_str(startp) << symbol(mi)
                      << "  shots=" << o.shots << "  seed=" << o.seed << "  rng="
                      << kRngAlgorithm << "  [" << o.common.unit() << "]\n";
            for (std::size_t s = 0; s < result.stage_counts.size(); ++s) {
                std::cout << "  stage " << s << "  " << angle_str(stage_pairs[s]) << "  up "
                          << result.stage_counts[s].n_up << "  down "
                          << result.stage_counts[s].n_down << "\n";
            }
            std::cout << "  estimate " << fmt(result.estimate) << "  +- "
                      << fmt(result.standard_error) << "\n";
            if (!paths.empty()) {
                std::cout << "  paths (analytic vs empirical):\n";
                for (std::size_t mask = 0; mask < paths.size(); ++mask) {
                    const double freq = static_cast<double>(result.path_counts[mask]) /
                                        static_cast<double>(result.shots);
                    std::cout << "    " << outcomes_str(paths[mask].outcomes) << "  "
                              << fmt(paths[mask].probability) << "  " << fmt(freq) << "\n";
                }
            }
            break;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyOpts {
    CommonOpts common;
    int trials = 1000;
    std::uint64_t seed = 1;
    double tol = 1e-12;
};

int run_verify(const VerifyOpts& o) {
    const auto reports = run_verification(o.trials, o.seed);
    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.worst < o.tol;

    Envelope env{.command = "verify",
                 .inputs = {{"trials", o.trials}, {"seed", o.seed}, {"tolerance", o.tol}},
                 .results = json::object(),
                 .metadata = base_metadata()};
    json inv = json::array();
    for (const auto& r : reports) {
        inv.push_back({{"invariant", r.name},
                       {"worst_residual", r.worst},
                       {"pass", r.worst < o.tol},
                       {"worst_inputs", r.worst_tuple}});
    }
    env.results["invariants"] = inv;
    env.results["pass"] = all_pass;
    env.metadata["tolerance"] = o.tol;

    switch (o.common.fmt()) {
        case Format::json_fmt:
            print_json(env);
            break;
        case Format::csv: {
            std::vector<std::vector<std::string>> rows;
            for (const auto& r : reports) {
                rows.push_back({"verify", std::to_string(o.trials), std::to_string(o.seed),
                                fmt(o.tol), r.name, fmt(r.worst),
                                r.worst < o.tol ? "true" : "false", r.worst_tuple});
            }
            print_csv({"command", "trials", "seed", "tolerance", "invariant", "worst_residual",
                       "pass", "worst_inputs"},
                      rows);
            break;
        }
        case Format::table: {
            char tol_buf[32];
            std::snprintf(tol_buf, sizeof(tol_buf), "%g", o.tol);
            std::cout << "verify  trials=" << o.trials << "  seed=" << o.seed << "  tol="
                      << tol_buf << "\n";
            for (const auto& r : reports) {
                std::cout << "  " << r.name;
                for (std::size_t pad = r.name.size(); pad < 20; ++pad) std::cout << ' ';
                std::cout << fmt(r.worst) << (r.worst < o.tol ? "  pass" : "  FAIL") << "\n";
                if (r.worst >= o.tol) std::cout << "    at " << r.worst_tuple << "\n";
            }
            std::cout << "  overall: " << (all_pass ? "PASS" : "FAIL") << "\n";
            break;
        }
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-direction spin-1/2 measurement calculator"};
    app.require_subcommand(1);

    AmplitudeOpts amplitude_opts;
    auto* amp_cmd = app.add_subcommand(
        "amplitude", "Transition amplitude between two (projection, axis) labels");
    amp_cmd->add_option("--mi", amplitude_opts.mi, "Initial projection: + or -")->required();
    amp_cmd->add_option("--a", amplitude_opts.a, "Initial axis theta,phi")->required();
    amp_cmd->add_option("--mf", amplitude_opts.mf, "Final projection: + or -")->required();
    amp_cmd->add_option("--c", amplitude_opts.c, "Final axis theta,phi")->required();
    add_common(amp_cmd, amplitude_opts.common);

    StateOpts state_opts;
    auto* state_cmd =
        app.add_subcommand("state", "Spin state in the eigenbasis of an arbitrary axis");
    state_cmd->add_option("--mi", state_opts.mi, "Projection along a: + or -")->required();
    state_cmd->add_option("--a", state_opts.a, "Preparation axis theta,phi")->required();
    state_cmd->add_option("--b", state_opts.b, "Basis axis theta,phi")->required();
    add_common(state_cmd, state_opts.common);

    OperatorOpts operator_opts;
    auto* op_cmd = app.add_subcommand(
        "operator", "Spin-projection operator along c in the eigenbasis of b");
    op_cmd->add_option("--c", operator_opts.c, "Measured axis theta,phi")->required();
    op_cmd->add_option("--b", operator_opts.b, "Basis axis theta,phi")->required();
    op_cmd->add_flag("--compare-trig", operator_opts.compare_trig,
                     "Also print the closed-form trig variant and the entrywise differences");
    add_common(op_cmd, operator_opts.common);

    EigvecOpts eigvec_opts;
    auto* eig_cmd = app.add_subcommand("eigvec", "Eigenvectors of the operator for c in basis b");
    eig_cmd->add_option("--c", eigvec_opts.c, "Measured axis theta,phi")->required();
    eig_cmd->add_option("--b", eigvec_opts.b, "Basis axis theta,phi")->required();
    add_common(eig_cmd, eigvec_opts.common);

    ExpectOpts expect_opts;
    auto* exp_cmd = app.add_subcommand(
        "expect", "Expectation value by four routes: direct, sandwich, analytic, oracle");
    exp_cmd->add_option("--mi", expect_opts.mi, "Initial projection: + or -")->required();
    exp_cmd->add_option("--a", expect_opts.a, "Initial axis theta,phi")->required();
    exp_cmd->add_option("--c", expect_opts.c, "Final axis theta,phi (not with --case d/e)");
    exp_cmd->add_option("--b", expect_opts.b,
                        "Expansion basis theta,phi (default 0,180 deg; required for --case a/d)");
    exp_cmd->add_option("--case", expect_opts.case_id, "Reference-vector case: a, b, c, d or e");
    add_common(exp_cmd, expect_opts.common);

    CasesOpts cases_opts;
    auto* cases_cmd = app.add_subcommand(
        "cases", "All five reference-vector configurations side by side");
    cases_cmd->add_option("--mi", cases_opts.mi, "Initial projection: + or -")->required();
    cases_cmd->add_option("--a", cases_opts.a, "Initial axis theta,phi")->required();
    cases_cmd->add_option("--c", cases_opts.c, "Final axis theta,phi")->required();
    cases_cmd->add_option("--b", cases_opts.b, "Basis for cases a and d (default 0,180 deg)");
    add_common(cases_cmd, cases_opts.common);

    SimulateOpts simulate_opts;
    auto* sim_cmd =
        app.add_subcommand("simulate", "Monte Carlo sampling of a sequential measurement chain");
    sim_cmd->add_option("--start", simulate_opts.start, "Initial theta,phi,projection")
        ->required();
    sim_cmd->add_option("--stage", simulate_opts.stages,
                        "Measurement axis theta,phi (repeatable, in order)")
        ->required();
    sim_cmd->add_option("--shots", simulate_opts.shots, "Number of sampled runs")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40))
        ->capture_default_str();
    sim_cmd->add_option("--seed", simulate_opts.seed, "RNG seed")->capture_default_str();
    add_common(sim_cmd, simulate_opts.common);

    VerifyOpts verify_opts;
    auto* ver_cmd = app.add_subcommand(
        "verify", "Random sweeps over the library's algebraic invariants");
    ver_cmd->add_option("--trials", verify_opts.trials, "Sweep size per invariant")
        ->check(CLI::Range(1, 100000000))
        ->capture_default_str();
    ver_cmd->add_option("--seed", verify_opts.seed, "Sweep seed")->capture_default_str();
    ver_cmd->add_option("--tol", verify_opts.tol, "Pass threshold for worst residuals")
        ->capture_default_str();
    add_common(ver_cmd, verify_opts.common);

    int exit_code = 0;
    amp_cmd->callback([&] { exit_code = run_amplitude(amplitude_opts); });
    state_cmd->callback([&] { exit_code = run_state(state_opts); });
    op_cmd->callback([&] { exit_code = run_operator(operator_opts); });
    eig_cmd->callback([&] { exit_code = run_eigvec(eigvec_opts); });
    exp_cmd->callback([&] { exit_code = run_expect(expect_opts); });
    cases_cmd->callback([&] { exit_code = run_cases(cases_opts); });
    sim_cmd->callback([&] { exit_code = run_simulate(simulate_opts); });
    ver_cmd->callback([&] { exit_code = run_verify(verify_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

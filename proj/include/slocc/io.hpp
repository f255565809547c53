#pragma once

#include "slocc/sampling.hpp"
#include "slocc/state.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace slocc {

enum class Mode { Float, Exact };

inline const char* to_string(Mode m) { return m == Mode::Float ? "float" : "exact"; }

inline std::optional<Mode> parse_mode(const std::string& s) {
    if (s == "float") return Mode::Float;
    if (s == "exact") return Mode::Exact;
    return std::nullopt;
}

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One input line: a state with an id, a qubit count, and amplitudes in the
/// scalar backend selected by mode. Float amplitudes are [re, im] number
/// pairs; exact amplitudes are ["p/q", "r/s"] rational strings.
struct StateRecord {
    std::string id;
    int n_qubits = 3;
    Mode mode = Mode::Float;
    std::vector<Complex> float_amps;
    std::vector<RationalComplex> exact_amps;
};

nlohmann::json to_json(const StateRecord& rec);
StateRecord state_record_from_json(const nlohmann::json& j,
                                   std::optional<Mode> default_mode = std::nullopt);
StateRecord parse_state_record(const std::string& line,
                               std::optional<Mode> default_mode = std::nullopt);

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

State3<Complex> to_state3_float(const StateRecord& rec);
State4<Complex> to_state4_float(const StateRecord& rec);
State3<RationalComplex> to_state3_exact(const StateRecord& rec);
State4<RationalComplex> to_state4_exact(const StateRecord& rec);

/// One output line per input record. `values` carries the discriminant and
/// key residuals in the same scalar encoding as the input amplitudes; `flags`
/// the evaluated criterion booleans.
struct VerdictRecord {
    std::string id;
    int n_qubits = 3;
    Mode mode = Mode::Float;
    std::string label;                        // class / verdict kind, or "" on error
    nlohmann::json values = nlohmann::json::object();
    nlohmann::json flags = nlohmann::json::object();
    nlohmann::json placement = nlohmann::json::object();
    double eps2 = 0.0;
    double eps4 = 0.0;
    std::vector<std::string> warnings;
    std::optional<std::string> error;
};

nlohmann::json to_json(const VerdictRecord& rec);
VerdictRecord verdict_record_from_json(const nlohmann::json& j);

/// Classify one parsed record; parse/classification failures come back as an
/// error verdict, never an exception.
VerdictRecord classify_record(const StateRecord& rec, const ToleranceConfig& tol);

/// Line-delimited classify pipeline: one verdict line per input line, same
/// order. Returns 0 on full success, 2 if any record carried an error.
int process_classify_stream(std::istream& in, std::ostream& out, const ToleranceConfig& tol,
                            std::optional<Mode> default_mode = std::nullopt);

/// Deterministic orbit stream: `count` StateRecord lines for the given class,
/// seeded per record as seed+index.
void write_orbit_stream(std::ostream& out, CanonicalClass cls, std::uint64_t seed, long count,
                        Mode mode, const ToleranceConfig& tol);

}  // namespace slocc

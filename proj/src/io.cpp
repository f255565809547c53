#include "slocc/io.hpp"

#include "slocc/classify3.hpp"
#include "slocc/classify4.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace slocc {

namespace {

using nlohmann::json;

json encode_amp(const Complex& x) { return json::array({x.real(), x.imag()}); }

json encode_amp(const RationalComplex& x) {
    return json::array({rational_to_string(x.real()), rational_to_string(x.imag())});
}

template <class S>
json encode_scalar(const S& x) {
    return encode_amp(x);
}

Complex decode_float_amp(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError("float amplitude must be a [re, im] number pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

RationalComplex decode_exact_amp(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
        throw ParseError("exact amplitude must be a [\"p/q\", \"r/s\"] string pair");
    }
    return {rational_from_string(j[0].get<std::string>()),
            rational_from_string(j[1].get<std::string>())};
}

template <class S, std::size_t N>
State<S, N> build_state(const std::vector<S>& amps) {
    std::array<S, State<S, N>::dim> a;
    std::copy(amps.begin(), amps.end(), a.begin());
    return State<S, N>(a);
}

std::string placement_letters(const int* qs, int n) {
    std::string s;
    for (int i = 0; i < n; ++i) {
        s += qubit_letter(qs[i]);
    }
    return s;
}

template <class S>
void fill_classify3(VerdictRecord& out, const State3<S>& s, const ToleranceConfig& tol) {
    auto rep = classify3(s, tol);
    out.label = to_string(rep.cls);
    out.values["discriminant"] = encode_scalar(rep.discriminant);
    for (const auto& [name, value] : rep.residuals) {
        out.values[name] = encode_scalar(value);
    }
    out.flags["discriminant_nonzero"] = rep.discriminant_nonzero;
    out.flags["col_a0a3_a5a6"] = rep.eq_columns[0];
    out.flags["col_a1a4_a3a6"] = rep.eq_columns[1];
    out.flags["col_a3a5_a2a4"] = rep.eq_columns[2];
    out.warnings = rep.warnings;
}

template <class S>
void fill_classify4(VerdictRecord& out, const State4<S>& s, const ToleranceConfig& tol) {
    auto v = classify4(s, tol);
    out.label = to_string(v.kind);
    for (const auto& [name, flag] : v.evidence) {
        out.flags[name] = flag;
    }
    switch (v.kind) {
        case Verdict4Kind::OnePairOnly:
            out.placement["pair"] = placement_letters(v.pair.data(), 2);
            break;
        case Verdict4Kind::TwoPairs:
            out.placement["pairing"] = placement_letters(v.pairing[0].data(), 2) + "|" +
                                       placement_letters(v.pairing[1].data(), 2);
            break;
        case Verdict4Kind::TripleGhz:
        case Verdict4Kind::TripleW:
            out.placement["triple"] = placement_letters(v.triple.data(), 3);
            out.placement["singleton"] = std::string(1, qubit_letter(v.singleton));
            break;
        default:
            break;
    }
}

}  // namespace

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

Rational rational_from_string(const std::string& s) {
    if (s.empty()) {
        throw ParseError("empty rational literal");
    }
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/')) {
            throw ParseError("bad rational literal: " + s);
        }
    }
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw ParseError("bad rational literal: " + s);
    }
}

json to_json(const StateRecord& rec) {
    json amps = json::array();
    if (rec.mode == Mode::Float) {
        for (const auto& x : rec.float_amps) amps.push_back(encode_amp(x));
    } else {
        for (const auto& x : rec.exact_amps) amps.push_back(encode_amp(x));
    }
    return json{{"id", rec.id},
                {"n_qubits", rec.n_qubits},
                {"mode", to_string(rec.mode)},
                {"amplitudes", std::move(amps)}};
}

StateRecord state_record_from_json(const json& j, std::optional<Mode> default_mode) {
    if (!j.is_object()) {
        throw ParseError("state record must be a JSON object");
    }
    StateRecord rec;
    if (!j.contains("id") || !j["id"].is_string()) {
        throw ParseError("state record needs a string id");
    }
    rec.id = j["id"].get<std::string>();
    if (!j.contains("n_qubits") || !j["n_qubits"].is_number_integer()) {
        throw ParseError("state record needs an integer n_qubits");
    }
    rec.n_qubits = j["n_qubits"].get<int>();
    if (rec.n_qubits != 3 && rec.n_qubits != 4) {
        throw ParseError("n_qubits must be 3 or 4");
    }
    auto mode = j.contains("mode") && j["mode"].is_string()
                    ? parse_mode(j["mode"].get<std::string>())
                    : default_mode;
    if (!mode) {
        throw ParseError("mode must be \"float\" or \"exact\"");
    }
    rec.mode = *mode;
    if (!j.contains("amplitudes") || !j["amplitudes"].is_array()) {
        throw ParseError("state record needs an amplitudes array");
    }
    const auto& amps = j["amplitudes"];
    const std::size_t want = std::size_t{1} << rec.n_qubits;
    if (amps.size() != want) {
        throw ParseError("amplitude count must be 2^n_qubits");
    }
    for (const auto& a : amps) {
        if (rec.mode == Mode::Float) {
            rec.float_amps.push_back(decode_float_amp(a));
        } else {
            rec.exact_amps.push_back(decode_exact_amp(a));
        }
    }
    return rec;
}

StateRecord parse_state_record(const std::string& line, std::optional<Mode> default_mode) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return state_record_from_json(j, default_mode);
}

State3<Complex> to_state3_float(const StateRecord& rec) {
    return build_state<Complex, 3>(rec.float_amps);
}
State4<Complex> to_state4_float(const StateRecord& rec) {
    return build_state<Complex, 4>(rec.float_amps);
}
State3<RationalComplex> to_state3_exact(const StateRecord& rec) {
    return build_state<RationalComplex, 3>(rec.exact_amps);
}
State4<RationalComplex> to_state4_exact(const StateRecord& rec) {
    return build_state<RationalComplex, 4>(rec.exact_amps);
}

json to_json(const VerdictRecord& rec) {
    json j{{"id", rec.id},
           {"n_qubits", rec.n_qubits},
           {"mode", to_string(rec.mode)},
           {"label", rec.label},
           {"values", rec.values},
           {"flags", rec.flags},
           {"placement", rec.placement},
           {"eps2", rec.eps2},
           {"eps4", rec.eps4},
           {"warnings", rec.warnings}};
    if (rec.error) {
        j["error"] = *rec.error;
    }
    return j;
}

VerdictRecord verdict_record_from_json(const json& j) {
    VerdictRecord rec;
    rec.id = j.at("id").get<std::string>();
    rec.n_qubits = j.at("n_qubits").get<int>();
    auto mode = parse_mode(j.at("mode").get<std::string>());
    if (!mode) {
        throw ParseError("verdict record has a bad mode");
    }
    rec.mode = *mode;
    rec.label = j.at("label").get<std::string>();
    rec.values = j.at("values");
    rec.flags = j.at("flags");
    rec.placement = j.at("placement");
    rec.eps2 = j.at("eps2").get<double>();
    rec.eps4 = j.at("eps4").get<double>();
    rec.warnings = j.at("warnings").get<std::vector<std::string>>();
    if (j.contains("error")) {
        rec.error = j["error"].get<std::string>();
    }
    return rec;
}

VerdictRecord classify_record(const StateRecord& rec, const ToleranceConfig& tol) {
    VerdictRecord out;
    out.id = rec.id;
    out.n_qubits = rec.n_qubits;
    out.mode = rec.mode;
    out.eps2 = tol.eps2;
    out.eps4 = tol.eps4;
    try {
        if (rec.n_qubits == 3) {
            if (rec.mode == Mode::Float) {
                fill_classify3(out, normalize(to_state3_float(rec)).state, tol);
            } else {
                fill_classify3(out, to_state3_exact(rec), tol);
            }
        } else {
            if (rec.mode == Mode::Float) {
                fill_classify4(out, normalize(to_state4_float(rec)).state, tol);
            } else {
                fill_classify4(out, to_state4_exact(rec), tol);
            }
        }
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    return out;
}

int process_classify_stream(std::istream& in, std::ostream& out, const ToleranceConfig& tol,
                            std::optional<Mode> default_mode) {
    tol.validate();
    int exit_code = 0;
    std::string line;
    long index = 0;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        VerdictRecord verdict;
        try {
            verdict = classify_record(parse_state_record(line, default_mode), tol);
        } catch (const std::exception& e) {
            verdict.id = "line-" + std::to_string(index);
            verdict.eps2 = tol.eps2;
            verdict.eps4 = tol.eps4;
            verdict.error = e.what();
        }
        if (verdict.error) {
            exit_code = 2;
        }
        out << to_json(verdict).dump() << "\n";
        ++index;
    }
    return exit_code;
}

void write_orbit_stream(std::ostream& out, CanonicalClass cls, std::uint64_t seed, long count,
                        Mode mode, const ToleranceConfig& tol) {
    tol.validate();
    for (long i = 0; i < count; ++i) {
        StateRecord rec;
        rec.id = std::string(to_string(cls)) + "-seed" + std::to_string(seed) + "-" +
                 std::to_string(i);
        rec.mode = mode;
        std::uint64_t s = seed + static_cast<std::uint64_t>(i);
        if (is_three_qubit(cls)) {
            rec.n_qubits = 3;
            if (mode == Mode::Float) {
                auto st = random_orbit3<Complex>(cls, s, tol);
                rec.float_amps.assign(st.amplitudes().begin(), st.amplitudes().end());
            } else {
                auto st = random_orbit3<RationalComplex>(cls, s, tol);
                rec.exact_amps.assign(st.amplitudes().begin(), st.amplitudes().end());
            }
        } else {
            rec.n_qubits = 4;
            if (mode == Mode::Float) {
                auto st = random_orbit4<Complex>(cls, s, tol);
                rec.float_amps.assign(st.amplitudes().begin(), st.amplitudes().end());
            } else {
                auto st = random_orbit4<RationalComplex>(cls, s, tol);
                rec.exact_amps.assign(st.amplitudes().begin(), st.amplitudes().end());
            }
        }
        out << to_json(rec).dump() << "\n";
    }
}

}  // namespace slocc

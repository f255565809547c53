#include "slocc/classify3.hpp"
#include "slocc/classify4.hpp"
#include "slocc/io.hpp"
#include "slocc/oracle.hpp"
#include "slocc/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace slocc;

namespace {

ToleranceConfig make_tol(double eps2, double eps4) {
    ToleranceConfig tol;
    tol.eps2 = eps2;
    tol.eps4 = eps4;
    tol.validate();
    return tol;
}

template <int N>
State<Complex, N> float_state(const std::vector<Complex>& amps) {
    if (amps.size() != (std::size_t{1} << N)) {
        throw py::value_error("expected " + std::to_string(1 << N) + " amplitudes");
    }
    std::array<Complex, std::size_t{1} << N> a;
    std::copy(amps.begin(), amps.end(), a.begin());
    return State<Complex, N>(a);
}

// Exact amplitudes arrive as (re, im) pairs of rational strings like "3/4".
template <int N>
State<RationalComplex, N> exact_state(const std::vector<std::pair<std::string, std::string>>& amps) {
    if (amps.size() != (std::size_t{1} << N)) {
        throw py::value_error("expected " + std::to_string(1 << N) + " amplitudes");
    }
    std::array<RationalComplex, std::size_t{1} << N> a;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        a[i] = RationalComplex(rational_from_string(amps[i].first),
                               rational_from_string(amps[i].second));
    }
    return State<RationalComplex, N>(a);
}

template <class S>
py::object scalar_out(const S& x) {
    if constexpr (ScalarTraits<S>::exact) {
        return py::make_tuple(rational_to_string(x.real()), rational_to_string(x.imag()));
    } else {
        return py::cast(x);
    }
}

template <class S>
py::dict classify3_dict(const State3<S>& s, const ToleranceConfig& tol) {
    auto rep = classify3(s, tol);
    py::dict d;
    d["label"] = to_string(rep.cls);
    d["discriminant"] = scalar_out(rep.discriminant);
    d["discriminant_nonzero"] = rep.discriminant_nonzero;
    d["eq_columns"] = py::make_tuple(rep.eq_columns[0], rep.eq_columns[1], rep.eq_columns[2]);
    d["warnings"] = rep.warnings;
    return d;
}

template <class S>
py::dict classify4_dict(const State4<S>& s, const ToleranceConfig& tol) {
    auto v = classify4(s, tol);
    py::dict d;
    d["label"] = to_string(v.kind);
    py::dict flags;
    for (const auto& [name, flag] : v.evidence) {
        flags[py::str(name)] = flag;
    }
    d["flags"] = flags;
    py::dict placement;
    auto letters = [](const int* qs, int n) {
        std::string s;
        for (int i = 0; i < n; ++i) s += qubit_letter(qs[i]);
        return s;
    };
    switch (v.kind) {
        case Verdict4Kind::OnePairOnly:
            placement["pair"] = letters(v.pair.data(), 2);
            break;
        case Verdict4Kind::TwoPairs:
            placement["pairing"] =
                letters(v.pairing[0].data(), 2) + "|" + letters(v.pairing[1].data(), 2);
            break;
        case Verdict4Kind::TripleGhz:
        case Verdict4Kind::TripleW:
            placement["triple"] = letters(v.triple.data(), 3);
            placement["singleton"] = std::string(1, qubit_letter(v.singleton));
            break;
        default:
            break;
    }
    d["placement"] = placement;
    return d;
}

Mode require_mode(const std::string& name) {
    auto m = parse_mode(name);
    if (!m) throw py::value_error("mode must be 'float' or 'exact'");
    return *m;
}

}  // namespace

PYBIND11_MODULE(_slocc, m) {
    m.doc() = "SLOCC equivalence-class criteria for 3- and 4-qubit pure states";

    m.def(
        "classify3",
        [](const std::vector<Complex>& amps, double eps2, double eps4) {
            return classify3_dict(normalize(float_state<3>(amps)).state, make_tol(eps2, eps4));
        },
        py::arg("amplitudes"), py::arg("eps2") = ToleranceConfig{}.eps2,
        py::arg("eps4") = ToleranceConfig{}.eps4);

    m.def(
        "classify3_exact",
        [](const std::vector<std::pair<std::string, std::string>>& amps) {
            return classify3_dict(exact_state<3>(amps), ToleranceConfig{});
        },
        py::arg("amplitudes"));

    m.def(
        "classify4",
        [](const std::vector<Complex>& amps, double eps2, double eps4) {
            return classify4_dict(normalize(float_state<4>(amps)).state, make_tol(eps2, eps4));
        },
        py::arg("amplitudes"), py::arg("eps2") = ToleranceConfig{}.eps2,
        py::arg("eps4") = ToleranceConfig{}.eps4);

    m.def(
        "classify4_exact",
        [](const std::vector<std::pair<std::string, std::string>>& amps) {
            return classify4_dict(exact_state<4>(amps), ToleranceConfig{});
        },
        py::arg("amplitudes"));

    m.def(
        "rank_classify3",
        [](const std::vector<Complex>& amps, double eps2, double eps4) {
            return std::string(
                to_string(rank_classify3(normalize(float_state<3>(amps)).state, make_tol(eps2, eps4))));
        },
        py::arg("amplitudes"), py::arg("eps2") = ToleranceConfig{}.eps2,
        py::arg("eps4") = ToleranceConfig{}.eps4);

    m.def(
        "ghz_discriminant",
        [](const std::vector<Complex>& amps) {
            return ghz_discriminant(float_state<3>(amps));
        },
        py::arg("amplitudes"));

    m.def(
        "discriminant_forms",
        [](const std::vector<Complex>& amps) {
            auto f = discriminant_forms(float_state<3>(amps));
            return py::make_tuple(f.f1, f.f2, f.f3);
        },
        py::arg("amplitudes"));

    m.def(
        "random_orbit",
        [](const std::string& cls_name, std::uint64_t seed) {
            auto cls = parse_canonical_class(cls_name);
            if (!cls) throw py::value_error("unknown class: " + cls_name);
            ToleranceConfig tol;
            if (is_three_qubit(*cls)) {
                auto s = random_orbit3<Complex>(*cls, seed, tol);
                return std::vector<Complex>(s.amplitudes().begin(), s.amplitudes().end());
            }
            auto s = random_orbit4<Complex>(*cls, seed, tol);
            return std::vector<Complex>(s.amplitudes().begin(), s.amplitudes().end());
        },
        py::arg("cls"), py::arg("seed"));

    m.def(
        "run_suite",
        [](const std::string& suite_name, long long trials, std::uint64_t seed,
           const std::string& mode) {
            auto s = parse_suite(suite_name);
            if (!s) throw py::value_error("unknown suite: " + suite_name);
            auto result = run_suite(*s, trials, seed, require_mode(mode), ToleranceConfig{});
            py::dict d;
            d["suite"] = result.suite;
            d["trials"] = result.trials;
            d["violations"] = result.violations;
            d["counterexamples"] = result.counterexamples;
            d["passed"] = result.passed();
            return d;
        },
        py::arg("suite"), py::arg("trials") = 200, py::arg("seed") = 0,
        py::arg("mode") = "exact");

    m.def("class_names", [] {
        std::vector<std::string> names;
        for (auto c : {CanonicalClass::Ghz3, CanonicalClass::W3, CanonicalClass::A_BC,
                       CanonicalClass::B_AC, CanonicalClass::C_AB, CanonicalClass::AbcProduct,
                       CanonicalClass::Ghz4, CanonicalClass::W4, CanonicalClass::C4,
                       CanonicalClass::EprEpr, CanonicalClass::PairOnly4,
                       CanonicalClass::Separable4}) {
            names.emplace_back(to_string(c));
        }
        return names;
    });

    m.def("suite_names", [] {
        std::vector<std::string> names;
        for (auto s : all_suites()) names.emplace_back(to_string(s));
        return names;
    });
}

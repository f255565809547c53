#include "slocc/verify.hpp"

#include "slocc/classify3.hpp"
#include "slocc/classify4.hpp"
#include "slocc/oracle.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace slocc {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

template <class S, std::size_t N>
std::string dump_state(const State<S, N>& s) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < State<S, N>::dim; ++i) {
        if (i) os << ", ";
        os << ScalarTraits<S>::str(s[i]);
    }
    os << "]";
    return os.str();
}

template <class S, std::size_t N>
void record_violation(SuiteResult& r, const State<S, N>& s, const std::string& why) {
    ++r.violations;
    if (r.counterexamples.size() < kMaxCounterexamples) {
        r.counterexamples.push_back(why + " state=" + dump_state(s));
    }
}

void record_violation(SuiteResult& r, const std::string& why) {
    ++r.violations;
    if (r.counterexamples.size() < kMaxCounterexamples) {
        r.counterexamples.push_back(why);
    }
}

constexpr std::array<CanonicalClass, 6> kClasses3 = {
    CanonicalClass::Ghz3, CanonicalClass::W3,   CanonicalClass::A_BC,
    CanonicalClass::B_AC, CanonicalClass::C_AB, CanonicalClass::AbcProduct,
};

constexpr std::array<Slocc3Class, 6> kAllClasses = {
    Slocc3Class::Ghz,  Slocc3Class::W,    Slocc3Class::A_BC,
    Slocc3Class::B_AC, Slocc3Class::C_AB, Slocc3Class::A_B_C,
};

// Mixed stream of generic random states and class-orbit states, so the
// sweeps exercise both the generic (GHZ-dominated) region and every
// measure-zero class surface.
template <class S>
State3<S> sweep_state(long long t, std::uint64_t seed, std::mt19937_64& rng,
                      const ToleranceConfig& tol) {
    if (t % 2 == 0) {
        return random_state3<S>(rng);
    }
    auto cls = kClasses3[static_cast<std::size_t>(t / 2) % kClasses3.size()];
    return random_orbit3<S>(cls, seed * 7919 + static_cast<std::uint64_t>(t), tol);
}

template <class S>
SuiteResult run_table1(long long trials, std::uint64_t seed, const ToleranceConfig& tol) {
    SuiteResult r{to_string(Suite::Table1)};
    std::mt19937_64 rng(seed);
    for (long long t = 0; t < trials; ++t) {
        ++r.trials;
        auto s = sweep_state<S>(t, seed, rng, tol);
        try {
            auto rep = classify3(s, tol);
            int hits = 0;
            for (auto c : kAllClasses) {
                if (check_class_criterion(s, c, tol).satisfied) ++hits;
            }
            if (hits != 1 || !check_class_criterion(s, rep.cls, tol).satisfied) {
                record_violation(r, s, "decision table and criteria disagree");
            }
        } catch (const NotOccurViolation& e) {
            record_violation(r, s, e.what());
        }
    }
    return r;
}

template <class S>
SuiteResult run_appendix_a(long long trials, std::uint64_t seed, const ToleranceConfig& tol) {
    SuiteResult r{to_string(Suite::AppendixA)};
    std::mt19937_64 rng(seed);
    for (long long t = 0; t < trials; ++t) {
        ++r.trials;
        auto s = sweep_state<S>(t, seed, rng, tol);
        int hits = 0;
        for (auto c : kAllClasses) {
            if (check_class_criterion(s, c, tol).satisfied) ++hits;
        }
        if (hits > 1) {
            record_violation(r, s, "two class criteria hold simultaneously");
        }
    }
    return r;
}

template <class S>
SuiteResult run_appendix_b(long long trials, std::uint64_t seed, const ToleranceConfig& tol) {
    SuiteResult r{to_string(Suite::AppendixB)};
    std::mt19937_64 rng(seed);
    for (long long t = 0; t < trials; ++t) {
        ++r.trials;
        auto s = sweep_state<S>(t, seed, rng, tol);
        if (check_not_occur(s, tol)) {
            record_violation(r, s, "inconsistent condition set satisfied");
        }
    }
    return r;
}

template <class S>
SuiteResult run_appendix_cd(long long trials, std::uint64_t seed, const ToleranceConfig& tol) {
    SuiteResult r{to_string(Suite::AppendixCD)};
    std::mt19937_64 rng(seed);
    for (auto cls : kClasses3) {
        ++r.trials;
        auto s = canonical_state3<S>(cls);
        if (!check_alternative_forms(s, tol).agree()) {
            record_violation(r, s, "alternative form disagrees on a canonical state");
        }
    }
    for (long long t = 0; t < trials; ++t) {
        ++r.trials;
        auto s = sweep_state<S>(t, seed, rng, tol);
        if (!check_alternative_forms(s, tol).agree()) {
            record_violation(r, s, "alternative form disagrees");
        }
    }
    return r;
}

template <class S, std::size_t K>
std::array<LocalOperator<S>, K> sample_ops(std::mt19937_64& rng, const ToleranceConfig& tol) {
    std::array<LocalOperator<S>, K> ops;
    for (auto& op : ops) {
        op = sample_invertible<S>(rng, tol);
    }
    return ops;
}

template <class S>
void report_failures(SuiteResult& r, const DerivationReport<S>& rep, const char* what) {
    if (rep.all_ok) return;
    for (const auto& c : rep.checks) {
        if (!c.ok) {
            record_violation(r, std::string(what) + " identity '" + c.name + "' failed: lhs=" +
                                    ScalarTraits<S>::str(c.lhs) + " rhs=" +
                                    ScalarTraits<S>::str(c.rhs));
        }
    }
}

template <class S>
SuiteResult run_appendix_e(long long trials, std::uint64_t seed, const ToleranceConfig& tol) {
    SuiteResult r{to_string(Suite::AppendixE)};
    std::mt19937_64 rng(seed);
    for (long long t = 0; t < trials; ++t) {
        ++r.trials;
        report_failures(r, verify_w4_derivation(sample_ops<S, 4>(rng, tol), tol), "w4");
    }
    return r;
}

template <class S>
SuiteResult run_derivations3(long long trials, std::uint64_t seed, const ToleranceConfig& tol) {
    SuiteResult r{to_string(Suite::Derivations3)};
    std::mt19937_64 rng(seed);
    for (long long t = 0; t < trials; ++t) {
        ++r.trials;
        report_failures(r, verify_ghz3_derivation(sample_ops<S, 3>(rng, tol), tol), "ghz3");
        report_failures(r, verify_w3_derivation(sample_ops<S, 3>(rng, tol), tol), "w3");
    }
    return r;
}

template <class S>
SuiteResult run_oracle_agreement(long long trials, std::uint64_t seed,
                                 const ToleranceConfig& tol) {
    SuiteResult r{to_string(Suite::OracleAgreement)};
    std::mt19937_64 rng(seed);
    for (long long t = 0; t < trials; ++t) {
        ++r.trials;
        auto s = sweep_state<S>(t, seed, rng, tol);
        auto via_table = classify3(s, tol).cls;
        auto via_ranks = rank_classify3(s, tol);
        if (via_table != via_ranks) {
            record_violation(r, s, std::string("criteria say ") + to_string(via_table) +
                                       ", ranks say " + to_string(via_ranks));
        }
    }
    return r;
}

template <class S>
bool matrices_close(const DensityMatrix<S>& a, const DensityMatrix<S>& b,
                    const ToleranceConfig& tol) {
    if (a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if constexpr (ScalarTraits<S>::exact) {
                if (a.at(i, j) != b.at(i, j)) return false;
            } else {
                if (std::abs(a.at(i, j) - b.at(i, j)) > tol.eps2) return false;
            }
        }
    }
    return true;
}

template <class S>
bool states_equal(const State4<S>& a, const State4<S>& b, const ToleranceConfig& tol) {
    for (std::size_t i = 0; i < State4<S>::dim; ++i) {
        if constexpr (ScalarTraits<S>::exact) {
            if (a[i] != b[i]) return false;
        } else {
            if (std::abs(a[i] - b[i]) > tol.eps2) return false;
        }
    }
    return true;
}

template <class S>
SuiteResult run_c4_properties(long long /*trials*/, std::uint64_t /*seed*/,
                              const ToleranceConfig& tol) {
    SuiteResult r{to_string(Suite::C4Properties)};
    auto c4 = canonical_state4<S>(CanonicalClass::C4);
    S f = ScalarTraits<S>::from_int(1);
    if constexpr (!ScalarTraits<S>::exact) {
        f = f / ScalarTraits<S>::from_int(6);
    }

    // (1) permutation symmetry under all 24 relabelings
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
        ++r.trials;
        if (!states_equal(permute_qubits(c4, perm), c4, tol)) {
            record_violation(r, c4, "not permutation symmetric");
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    // (2) self-complementarity
    ++r.trials;
    if (!states_equal(complement(c4), c4, tol)) {
        record_violation(r, c4, "not self-complementary");
    }

    // (3) tracing out any one qubit leaves the W/W-bar mixture, identical for
    // all four choices
    DensityMatrix<S> expected_3q(8);
    const std::array<int, 3> w_idx{1, 2, 4};
    const std::array<int, 3> wbar_idx{3, 5, 6};
    for (int i : w_idx)
        for (int j : w_idx) expected_3q.at(i, j) += f;
    for (int i : wbar_idx)
        for (int j : wbar_idx) expected_3q.at(i, j) += f;
    for (int q = 0; q < 4; ++q) {
        ++r.trials;
        if (!matrices_close(partial_trace(c4, {q}), expected_3q, tol)) {
            record_violation(r, c4, "single-qubit trace mismatch at qubit " +
                                        std::string(1, qubit_letter(q)));
        }
    }

    // (4) tracing out any two qubits leaves 1/6(|00><00|+|11><11|) +
    // 2/3 |Psi+><Psi+|, identical for all six choices
    DensityMatrix<S> expected_2q(4);
    const S two = ScalarTraits<S>::from_int(2) * f;
    expected_2q.at(0, 0) = f;
    expected_2q.at(3, 3) = f;
    expected_2q.at(1, 1) = two;
    expected_2q.at(1, 2) = two;
    expected_2q.at(2, 1) = two;
    expected_2q.at(2, 2) = two;
    for (const auto& p : qubit_pairs()) {
        ++r.trials;
        if (!matrices_close(partial_trace(c4, {p[0], p[1]}), expected_2q, tol)) {
            record_violation(r, c4, "two-qubit trace mismatch at pair " +
                                        std::string(1, qubit_letter(p[0])) +
                                        std::string(1, qubit_letter(p[1])));
        }
    }
    return r;
}

template <class S>
SuiteResult dispatch(Suite suite, long long trials, std::uint64_t seed,
                     const ToleranceConfig& tol) {
    switch (suite) {
        case Suite::Table1: return run_table1<S>(trials, seed, tol);
        case Suite::AppendixA: return run_appendix_a<S>(trials, seed, tol);
        case Suite::AppendixB: return run_appendix_b<S>(trials, seed, tol);
        case Suite::AppendixCD: return run_appendix_cd<S>(trials, seed, tol);
        case Suite::AppendixE: return run_appendix_e<S>(trials, seed, tol);
        case Suite::Derivations3: return run_derivations3<S>(trials, seed, tol);
        case Suite::OracleAgreement: return run_oracle_agreement<S>(trials, seed, tol);
        case Suite::C4Properties: return run_c4_properties<S>(trials, seed, tol);
    }
    throw std::invalid_argument("run_suite: unknown suite");
}

}  // namespace

std::optional<Suite> parse_suite(const std::string& name) {
    for (Suite s : all_suites()) {
        if (name == to_string(s)) return s;
    }
    return std::nullopt;
}

std::vector<Suite> all_suites() {
    return {Suite::Table1,     Suite::AppendixA,    Suite::AppendixB,
            Suite::AppendixCD, Suite::AppendixE,    Suite::Derivations3,
            Suite::OracleAgreement, Suite::C4Properties};
}

SuiteResult run_suite(Suite suite, long long trials, std::uint64_t seed, Mode mode,
                      const ToleranceConfig& tol) {
    tol.validate();
    return mode == Mode::Exact ? dispatch<RationalComplex>(suite, trials, seed, tol)
                               : dispatch<Complex>(suite, trials, seed, tol);
}

}  // namespace slocc

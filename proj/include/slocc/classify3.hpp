#pragma once

#include "slocc/invariants.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace slocc {

/// The six SLOCC classes of pure three-qubit states.
enum class Slocc3Class { Ghz, W, A_BC, B_AC, C_AB, A_B_C };

inline const char* to_string(Slocc3Class c) {
    switch (c) {
        case Slocc3Class::Ghz: return "GHZ";
        case Slocc3Class::W: return "W";
        case Slocc3Class::A_BC: return "A-BC";
        case Slocc3Class::B_AC: return "B-AC";
        case Slocc3Class::C_AB: return "C-AB";
        case Slocc3Class::A_B_C: return "A-B-C";
    }
    return "?";
}

inline std::optional<Slocc3Class> parse_slocc3_class(const std::string& s) {
    if (s == "GHZ") return Slocc3Class::Ghz;
    if (s == "W") return Slocc3Class::W;
    if (s == "A-BC") return Slocc3Class::A_BC;
    if (s == "B-AC") return Slocc3Class::B_AC;
    if (s == "C-AB") return Slocc3Class::C_AB;
    if (s == "A-B-C") return Slocc3Class::A_B_C;
    return std::nullopt;
}

/// Raised when a state lands on a decision-table row that is provably
/// unreachable for exact amplitudes. In exact mode this is a bug; in float
/// mode it signals a tolerance-boundary failure that survived one retry with
/// thresholds relaxed by 10x.
struct NotOccurViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class S>
struct Criterion3Report {
    Slocc3Class cls;
    S discriminant;
    // Decision-table column flags: discriminant nonzero, then the three
    // equality pairs (a0a3=a1a2 & a5a6=a4a7), (a1a4=a0a5 & a3a6=a2a7),
    // (a3a5=a1a7 & a2a4=a0a6).
    bool discriminant_nonzero;
    std::array<bool, 3> eq_columns;
    std::vector<std::pair<std::string, S>> residuals;
    std::vector<std::string> warnings;
};

namespace detail {

template <class S>
struct Row3Flags {
    bool ghz;
    std::array<bool, 3> cols;
};

template <class S, class A>
Row3Flags<S> table_flags(const A& a, const S& disc, const ZeroTest<S>& zt) {
    return {!zt.zero4(disc),
            {zt.zero2(res<S>(a, 0, 3, 1, 2)) && zt.zero2(res<S>(a, 5, 6, 4, 7)),
             zt.zero2(res<S>(a, 1, 4, 0, 5)) && zt.zero2(res<S>(a, 3, 6, 2, 7)),
             zt.zero2(res<S>(a, 3, 5, 1, 7)) && zt.zero2(res<S>(a, 2, 4, 0, 6))}};
}

template <class S>
std::optional<Slocc3Class> table_lookup(const Row3Flags<S>& f) {
    if (f.ghz) {
        return Slocc3Class::Ghz;
    }
    const auto& c = f.cols;
    if (!c[0] && !c[1] && !c[2]) return Slocc3Class::W;
    if (!c[0] && c[1] && c[2]) return Slocc3Class::A_BC;
    if (c[0] && !c[1] && c[2]) return Slocc3Class::B_AC;
    if (c[0] && c[1] && !c[2]) return Slocc3Class::C_AB;
    if (c[0] && c[1] && c[2]) return Slocc3Class::A_B_C;
    return std::nullopt;  // a "not-occur" row
}

}  // namespace detail

/// Six-way decision procedure: the discriminant flag is evaluated first
/// (nonzero selects GHZ); the remaining rows are resolved by the three
/// equality-pair columns. Landing on a "not-occur" row throws
/// NotOccurViolation; in float mode one retry with 10x relaxed thresholds is
/// attempted first and recorded in the report's warnings.
template <class S>
Criterion3Report<S> classify3(const State3<S>& s, const ToleranceConfig& tol = {}) {
    const auto zt = make_zero_test(s, tol);
    const auto& a = s.amplitudes();
    const S disc = ghz_discriminant(s);

    Criterion3Report<S> rep;
    rep.discriminant = disc;
    rep.residuals = {
        {"a0a3-a1a2", detail::res<S>(a, 0, 3, 1, 2)}, {"a5a6-a4a7", detail::res<S>(a, 5, 6, 4, 7)},
        {"a1a4-a0a5", detail::res<S>(a, 1, 4, 0, 5)}, {"a3a6-a2a7", detail::res<S>(a, 3, 6, 2, 7)},
        {"a3a5-a1a7", detail::res<S>(a, 3, 5, 1, 7)}, {"a2a4-a0a6", detail::res<S>(a, 2, 4, 0, 6)},
        {"a0a7-a3a4", detail::res<S>(a, 0, 7, 3, 4)}, {"a1a6-a2a5", detail::res<S>(a, 1, 6, 2, 5)},
    };

    auto flags = detail::table_flags(a, disc, zt);
    auto cls = detail::table_lookup(flags);
    if (!cls) {
        if constexpr (ScalarTraits<S>::exact) {
            throw NotOccurViolation("classify3: impossible decision-table row in exact mode");
        } else {
            rep.warnings.push_back("not-occur row at requested tolerance; retrying with 10x eps");
            auto relaxed = detail::table_flags(a, disc, zt.relaxed(10.0));
            cls = detail::table_lookup(relaxed);
            if (!cls) {
                throw NotOccurViolation(
                    "classify3: not-occur row persisted after 10x tolerance relaxation");
            }
            rep.warnings.push_back("resolved after relaxation");
            flags = relaxed;
        }
    }
    rep.cls = *cls;
    rep.discriminant_nonzero = flags.ghz;
    rep.eq_columns = flags.cols;
    return rep;
}

template <class S>
struct CriterionCheck {
    bool satisfied;
    std::vector<std::pair<std::string, S>> residuals;
};

/// Full per-class criterion (the complete equality/inequality set from the
/// class's own derivation, not the decision-table shortcut). The inequality
/// predicates are strict negations of the tolerance-based equalities.
template <class S>
CriterionCheck<S> check_class_criterion(const State3<S>& s, Slocc3Class cls,
                                        const ToleranceConfig& tol = {}) {
    const auto zt = make_zero_test(s, tol);
    const auto& a = s.amplitudes();
    using detail::res;

    CriterionCheck<S> out;
    auto eq = [&](const char* name, int i, int j, int k, int l) {
        S r = res<S>(a, i, j, k, l);
        bool z = zt.zero2(r);
        out.residuals.emplace_back(name, std::move(r));
        return z;
    };

    switch (cls) {
        case Slocc3Class::Ghz: {
            S d = ghz_discriminant(s);
            out.satisfied = !zt.zero4(d);
            out.residuals.emplace_back("discriminant", std::move(d));
            return out;
        }
        case Slocc3Class::W: {
            S d = ghz_discriminant(s);
            bool dz = zt.zero4(d);
            out.residuals.emplace_back("discriminant", std::move(d));
            bool i1 = !eq("a0a3-a1a2", 0, 3, 1, 2) || !eq("a5a6-a4a7", 5, 6, 4, 7);
            bool i2 = !eq("a1a4-a0a5", 1, 4, 0, 5) || !eq("a3a6-a2a7", 3, 6, 2, 7);
            bool i3 = !eq("a3a5-a1a7", 3, 5, 1, 7) || !eq("a2a4-a0a6", 2, 4, 0, 6);
            out.satisfied = dz && i1 && i2 && i3;
            return out;
        }
        case Slocc3Class::A_BC: {
            bool eqs = eq("a0a5-a1a4", 0, 5, 1, 4);
            eqs &= eq("a2a7-a3a6", 2, 7, 3, 6);
            eqs &= eq("a0a6-a2a4", 0, 6, 2, 4);
            eqs &= eq("a1a7-a3a5", 1, 7, 3, 5);
            eqs &= eq("a0a7-a3a4", 0, 7, 3, 4);
            eqs &= eq("a1a6-a2a5", 1, 6, 2, 5);
            bool ineq = !eq("a1a2-a0a3", 1, 2, 0, 3) || !eq("a5a6-a4a7", 5, 6, 4, 7);
            out.satisfied = eqs && ineq;
            return out;
        }
        case Slocc3Class::B_AC: {
            bool eqs = eq("a0a3-a1a2", 0, 3, 1, 2);
            eqs &= eq("a4a7-a5a6", 4, 7, 5, 6);
            eqs &= eq("a0a6-a2a4", 0, 6, 2, 4);
            eqs &= eq("a1a7-a3a5", 1, 7, 3, 5);
            eqs &= eq("a0a7-a2a5", 0, 7, 2, 5);
            eqs &= eq("a1a6-a3a4", 1, 6, 3, 4);
            bool ineq = !eq("a1a4-a0a5", 1, 4, 0, 5) || !eq("a3a6-a2a7", 3, 6, 2, 7);
            out.satisfied = eqs && ineq;
            return out;
        }
        case Slocc3Class::C_AB: {
            bool eqs = eq("a0a3-a1a2", 0, 3, 1, 2);
            eqs &= eq("a4a7-a5a6", 4, 7, 5, 6);
            eqs &= eq("a0a5-a1a4", 0, 5, 1, 4);
            eqs &= eq("a2a7-a3a6", 2, 7, 3, 6);
            eqs &= eq("a0a7-a1a6", 0, 7, 1, 6);
            eqs &= eq("a2a5-a3a4", 2, 5, 3, 4);
            bool ineq = !eq("a2a4-a0a6", 2, 4, 0, 6) || !eq("a3a5-a1a7", 3, 5, 1, 7);
            out.satisfied = eqs && ineq;
            return out;
        }
        case Slocc3Class::A_B_C: {
            bool eqs = eq("a0a3-a1a2", 0, 3, 1, 2);
            eqs &= eq("a5a6-a4a7", 5, 6, 4, 7);
            eqs &= eq("a0a5-a1a4", 0, 5, 1, 4);
            eqs &= eq("a3a6-a2a7", 3, 6, 2, 7);
            eqs &= eq("a1a7-a3a5", 1, 7, 3, 5);
            eqs &= eq("a2a4-a0a6", 2, 4, 0, 6);
            eqs &= eq("a0a7-a1a6", 0, 7, 1, 6);
            eqs &= eq("a2a5-a3a4", 2, 5, 3, 4);
            out.satisfied = eqs;
            return out;
        }
    }
    throw std::invalid_argument("check_class_criterion: unknown class");
}

struct AltFormReport {
    bool b_ac_primary;
    bool b_ac_alternative;
    bool a_b_c_primary;
    bool a_b_c_alternative;
    bool agree() const {
        return b_ac_primary == b_ac_alternative && a_b_c_primary == a_b_c_alternative;
    }
};

/// Evaluates the alternative six-condition B-AC form and seven-equality
/// A-B-C form against the primary criteria on the same state.
template <class S>
AltFormReport check_alternative_forms(const State3<S>& s, const ToleranceConfig& tol = {}) {
    const auto zt = make_zero_test(s, tol);
    const auto& a = s.amplitudes();
    using detail::res;

    bool shared = zt.zero2(res<S>(a, 0, 7, 3, 4) - res<S>(a, 2, 5, 1, 6)) &&
                  zt.zero2(res<S>(a, 2, 4, 0, 6)) && zt.zero2(res<S>(a, 3, 5, 1, 7)) &&
                  zt.zero2(res<S>(a, 0, 3, 1, 2)) && zt.zero2(res<S>(a, 5, 6, 4, 7));
    bool bac_ineq = !zt.zero2(res<S>(a, 1, 4, 0, 5)) || !zt.zero2(res<S>(a, 3, 6, 2, 7));
    bool alt_bac = shared && bac_ineq;
    bool alt_abc = shared && zt.zero2(res<S>(a, 1, 4, 0, 5)) && zt.zero2(res<S>(a, 3, 6, 2, 7));

    return {check_class_criterion(s, Slocc3Class::B_AC, tol).satisfied, alt_bac,
            check_class_criterion(s, Slocc3Class::A_B_C, tol).satisfied, alt_abc};
}

/// The provably inconsistent condition set: discriminant-form equality plus
/// a3a5=a1a7, a2a4=a0a6, with both remaining equality pairs broken. Must
/// return false for every state.
template <class S>
bool check_not_occur(const State3<S>& s, const ToleranceConfig& tol = {}) {
    const auto zt = make_zero_test(s, tol);
    const auto& a = s.amplitudes();
    using detail::res;
    return zt.zero4(ghz_discriminant(s)) && zt.zero2(res<S>(a, 3, 5, 1, 7)) &&
           zt.zero2(res<S>(a, 2, 4, 0, 6)) &&
           (!zt.zero2(res<S>(a, 0, 3, 1, 2)) || !zt.zero2(res<S>(a, 5, 6, 4, 7))) &&
           (!zt.zero2(res<S>(a, 1, 4, 0, 5)) || !zt.zero2(res<S>(a, 3, 6, 2, 7)));
}

}  // namespace slocc

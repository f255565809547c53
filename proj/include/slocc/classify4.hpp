#pragma once

#include "slocc/classify3.hpp"

#include <algorithm>

namespace slocc {

/// Structured verdict for four-qubit states. The degenerate kinds are
/// definitive (their criteria are necessary and sufficient); the
/// ConsistentWith* kinds record that a necessary criterion passed and claim
/// nothing more. GenuineOther marks states that fail every listed criterion.
enum class Verdict4Kind {
    FullySeparable,
    OnePairOnly,
    TwoPairs,
    TripleGhz,
    TripleW,
    ConsistentWithGhz4,
    ConsistentWithW4,
    GenuineOther,
};

inline const char* to_string(Verdict4Kind k) {
    switch (k) {
        case Verdict4Kind::FullySeparable: return "FullySeparable";
        case Verdict4Kind::OnePairOnly: return "OnePairOnly";
        case Verdict4Kind::TwoPairs: return "TwoPairs";
        case Verdict4Kind::TripleGhz: return "TripleGHZ";
        case Verdict4Kind::TripleW: return "TripleW";
        case Verdict4Kind::ConsistentWithGhz4: return "ConsistentWithGHZ4";
        case Verdict4Kind::ConsistentWithW4: return "ConsistentWithW4";
        case Verdict4Kind::GenuineOther: return "GenuineOther";
    }
    return "?";
}

/// Two definitive degenerate criteria both passed: impossible for exact
/// amplitudes, a tolerance failure in float mode.
struct ConflictingVerdicts : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Slocc4Verdict {
    Verdict4Kind kind = Verdict4Kind::GenuineOther;
    std::array<int, 2> pair{-1, -1};                        // OnePairOnly: the entangled pair
    std::array<int, 3> triple{-1, -1, -1};                  // Triple*: the entangled triple
    int singleton = -1;                                     // Triple*: the separable qubit
    std::array<std::array<int, 2>, 2> pairing{{{-1, -1}, {-1, -1}}};  // TwoPairs
    std::vector<std::pair<std::string, bool>> evidence;     // every evaluated flag
};

namespace detail {

// Relabel so the listed qubits land on canonical positions: targets[k] is the
// canonical position of qubit order[k].
template <class S>
State4<S> to_canonical(const State4<S>& s, const std::array<int, 4>& order) {
    std::array<int, 4> perm{};
    for (int k = 0; k < 4; ++k) {
        perm[order[k]] = k;
    }
    return permute_qubits(s, perm);
}

template <class S>
bool all_minors_zero(const std::vector<PairResidual<S>>& minors, const ZeroTest<S>& zt) {
    return std::all_of(minors.begin(), minors.end(),
                       [&](const PairResidual<S>& m) { return zt.zero2(m.value); });
}

template <class S, class A>
bool any_residual_nonzero(const A& a, const ZeroTest<S>& zt,
                          std::initializer_list<std::array<int, 4>> idx) {
    for (const auto& t : idx) {
        if (!zt.zero2(res<S>(a, t[0], t[1], t[2], t[3]))) {
            return true;
        }
    }
    return false;
}

// Even/odd slices of the 16 amplitudes: the two rows of the 2x8 arrangement,
// i.e. the restriction to qubit D = |0> and D = |1>.
template <class S>
std::array<S, 8> even_slice(const State4<S>& s) {
    std::array<S, 8> b;
    for (int p = 0; p < 8; ++p) b[p] = s[2 * p];
    return b;
}

template <class S>
std::array<S, 8> odd_slice(const State4<S>& s) {
    std::array<S, 8> b;
    for (int p = 0; p < 8; ++p) b[p] = s[2 * p + 1];
    return b;
}

// The "only two qubits entangled" equality index set: all (i,j,k,l) with
// i+j=k+l, i XOR j = k XOR l, i<j, k<l, i=l (mod 4), j=k (mod 4), deduplicated
// by lexicographic order.
inline const std::vector<std::array<int, 4>>& one_pair_equalities() {
    static const std::vector<std::array<int, 4>> table = [] {
        std::vector<std::array<int, 4>> t;
        for (int i = 0; i < 16; ++i)
            for (int j = i + 1; j < 16; ++j)
                for (int k = 0; k < 16; ++k)
                    for (int l = k + 1; l < 16; ++l)
                        if (std::make_pair(i, j) < std::make_pair(k, l) && i + j == k + l &&
                            (i ^ j) == (k ^ l) && i % 4 == l % 4 && j % 4 == k % 4)
                            t.push_back({i, j, k, l});
        return t;
    }();
    return table;
}

// Full separability equality set: every (i,j,k,l) with i+j=k+l and
// i XOR j = k XOR l.
inline const std::vector<std::array<int, 4>>& separable_equalities() {
    static const std::vector<std::array<int, 4>> table = [] {
        std::vector<std::array<int, 4>> t;
        for (int i = 0; i < 16; ++i)
            for (int j = i; j < 16; ++j)
                for (int k = i + 1; k < 16; ++k)
                    for (int l = k; l < 16; ++l)
                        if (std::make_pair(i, j) < std::make_pair(k, l) && i + j == k + l &&
                            (i ^ j) == (k ^ l))
                            t.push_back({i, j, k, l});
        return t;
    }();
    return table;
}

}  // namespace detail

/// Canonical-form criterion: qubits at positions A,B,C are GHZ-entangled and
/// D is separable. All 28 minors of the 2x8 arrangement vanish and at least
/// one of the two slice discriminants is nonzero.
template <class S>
bool check_triple_ghz(const State4<S>& s, const std::array<int, 3>& triple, int singleton,
                      const ToleranceConfig& tol = {}) {
    std::array<int, 3> t = triple;
    std::sort(t.begin(), t.end());
    auto canon = detail::to_canonical(s, {t[0], t[1], t[2], singleton});
    const auto zt = make_zero_test(canon, tol);
    if (!detail::all_minors_zero(minors_2x8(canon), zt)) {
        return false;
    }
    return !zt.zero4(detail::slice_discriminant<S>(detail::even_slice(canon))) ||
           !zt.zero4(detail::slice_discriminant<S>(detail::odd_slice(canon)));
}

/// Positions A,B,C are W-entangled, D separable: both slice discriminants
/// vanish, all 28 minors vanish, and the three four-clause disjunctive
/// inequalities hold.
template <class S>
bool check_triple_w(const State4<S>& s, const std::array<int, 3>& triple, int singleton,
                    const ToleranceConfig& tol = {}) {
    std::array<int, 3> t = triple;
    std::sort(t.begin(), t.end());
    auto canon = detail::to_canonical(s, {t[0], t[1], t[2], singleton});
    const auto zt = make_zero_test(canon, tol);
    const auto& a = canon.amplitudes();
    if (!detail::all_minors_zero(minors_2x8(canon), zt)) {
        return false;
    }
    if (!zt.zero4(detail::slice_discriminant<S>(detail::even_slice(canon))) ||
        !zt.zero4(detail::slice_discriminant<S>(detail::odd_slice(canon)))) {
        return false;
    }
    return detail::any_residual_nonzero(a, zt,
                                        {{3, 5, 1, 7}, {10, 12, 8, 14}, {2, 4, 0, 6}, {11, 13, 9, 15}}) &&
           detail::any_residual_nonzero(a, zt,
                                        {{2, 8, 0, 10}, {3, 9, 1, 11}, {6, 12, 4, 14}, {7, 13, 5, 15}}) &&
           detail::any_residual_nonzero(a, zt,
                                        {{6, 10, 2, 14}, {7, 11, 3, 15}, {4, 8, 0, 12}, {5, 9, 1, 13}});
}

/// AB-CD two-EPR-pair criterion: the 4x4 arrangement has all 36 minors zero
/// (rank one) and both pair-entanglement disjunctions hold.
template <class S>
bool check_two_pairs(const State4<S>& s, const std::array<std::array<int, 2>, 2>& pairing,
                     const ToleranceConfig& tol = {}) {
    std::array<int, 2> p0 = pairing[0];
    std::array<int, 2> p1 = pairing[1];
    std::sort(p0.begin(), p0.end());
    std::sort(p1.begin(), p1.end());
    if (p0[0] > p1[0]) {
        std::swap(p0, p1);
    }
    auto canon = detail::to_canonical(s, {p0[0], p0[1], p1[0], p1[1]});
    const auto zt = make_zero_test(canon, tol);
    const auto& a = canon.amplitudes();
    if (!detail::all_minors_zero(minors_4x4(canon), zt)) {
        return false;
    }
    return detail::any_residual_nonzero(a, zt,
                                        {{4, 8, 0, 12}, {6, 10, 2, 14}, {5, 9, 1, 13}, {7, 11, 3, 15}}) &&
           detail::any_residual_nonzero(a, zt,
                                        {{1, 2, 0, 3}, {5, 6, 4, 7}, {9, 10, 8, 11}, {13, 14, 12, 15}});
}

/// A-B-CD criterion: only the given pair is entangled (canonical placement
/// C,D), the other two qubits are separable.
template <class S>
bool check_one_pair(const State4<S>& s, const std::array<int, 2>& pair,
                    const ToleranceConfig& tol = {}) {
    std::array<int, 2> p = pair;
    std::sort(p.begin(), p.end());
    std::array<int, 4> order{};
    int pos = 0;
    for (int q = 0; q < 4; ++q) {
        if (q != p[0] && q != p[1]) {
            order[pos++] = q;
        }
    }
    order[2] = p[0];
    order[3] = p[1];
    auto canon = detail::to_canonical(s, order);
    const auto zt = make_zero_test(canon, tol);
    const auto& a = canon.amplitudes();
    for (const auto& t : detail::one_pair_equalities()) {
        if (!zt.zero2(detail::res<S>(a, t[0], t[1], t[2], t[3]))) {
            return false;
        }
    }
    return detail::any_residual_nonzero(a, zt,
                                        {{1, 2, 0, 3}, {5, 6, 4, 7}, {9, 10, 8, 11}, {13, 14, 12, 15}});
}

/// A-B-C-D: every constrained product equality holds.
template <class S>
bool check_fully_separable(const State4<S>& s, const ToleranceConfig& tol = {}) {
    const auto zt = make_zero_test(s, tol);
    const auto& a = s.amplitudes();
    for (const auto& t : detail::separable_equalities()) {
        if (!zt.zero2(detail::res<S>(a, t[0], t[1], t[2], t[3]))) {
            return false;
        }
    }
    return true;
}

/// Necessary criterion for the four-qubit GHZ class: one inequality and three
/// product-of-residual equalities. Passing means "consistent with GHZ4",
/// never membership.
struct Ghz4NecessaryReport {
    bool inequality;
    std::array<bool, 3> equalities;
    bool ok() const { return inequality && equalities[0] && equalities[1] && equalities[2]; }
};

template <class S>
Ghz4NecessaryReport check_ghz4_necessary(const State4<S>& s, const ToleranceConfig& tol = {}) {
    const auto zt = make_zero_test(s, tol);
    const auto& a = s.amplitudes();
    using detail::res;
    S lhs = res<S>(a, 2, 13, 3, 12) + res<S>(a, 4, 11, 5, 10);
    S rhs = res<S>(a, 0, 15, 1, 14) + res<S>(a, 6, 9, 7, 8);
    Ghz4NecessaryReport rep;
    rep.inequality = !zt.zero2(lhs - rhs);
    rep.equalities[0] = zt.zero4(res<S>(a, 1, 4, 0, 5) * res<S>(a, 11, 14, 10, 15) -
                                 res<S>(a, 3, 6, 2, 7) * res<S>(a, 9, 12, 8, 13));
    rep.equalities[1] = zt.zero4(res<S>(a, 4, 7, 5, 6) * res<S>(a, 8, 11, 9, 10) -
                                 res<S>(a, 0, 3, 1, 2) * res<S>(a, 12, 15, 13, 14));
    rep.equalities[2] = zt.zero4(res<S>(a, 3, 5, 1, 7) * res<S>(a, 10, 12, 8, 14) -
                                 res<S>(a, 2, 4, 0, 6) * res<S>(a, 11, 13, 9, 15));
    return rep;
}

/// Necessary criterion for the four-qubit W class: thirteen equalities (one
/// linear-combination equality, nine discriminant-style ones, three
/// product-of-residual ones) and three disjunctive inequalities.
struct W4NecessaryReport {
    std::array<bool, 13> equalities;
    std::array<bool, 3> inequalities;
    bool ok() const {
        return std::all_of(equalities.begin(), equalities.end(), [](bool b) { return b; }) &&
               inequalities[0] && inequalities[1] && inequalities[2];
    }
};

template <class S>
W4NecessaryReport check_w4_necessary(const State4<S>& s, const ToleranceConfig& tol = {}) {
    const auto zt = make_zero_test(s, tol);
    const auto& a = s.amplitudes();
    using detail::res;
    const S four = ScalarTraits<S>::from_int(4);

    auto quad = [&](S x, S prod) { return zt.zero4(x * x - four * std::move(prod)); };

    W4NecessaryReport rep;
    rep.equalities[0] = zt.zero2((res<S>(a, 2, 13, 3, 12) + res<S>(a, 4, 11, 5, 10)) -
                                 (res<S>(a, 0, 15, 1, 14) + res<S>(a, 6, 9, 7, 8)));
    rep.equalities[1] = quad(res<S>(a, 0, 7, 3, 4) + res<S>(a, 1, 6, 2, 5),
                             res<S>(a, 3, 5, 1, 7) * res<S>(a, 2, 4, 0, 6));
    rep.equalities[2] = quad(res<S>(a, 4, 11, 7, 8) + res<S>(a, 5, 10, 6, 9),
                             res<S>(a, 7, 9, 5, 11) * res<S>(a, 6, 8, 4, 10));
    rep.equalities[3] = quad(res<S>(a, 8, 15, 11, 12) + res<S>(a, 9, 14, 10, 13),
                             res<S>(a, 11, 13, 9, 15) * res<S>(a, 10, 12, 8, 14));
    rep.equalities[4] = quad(res<S>(a, 0, 14, 4, 10) + res<S>(a, 2, 12, 6, 8),
                             res<S>(a, 4, 8, 0, 12) * res<S>(a, 6, 10, 2, 14));
    rep.equalities[5] = quad(res<S>(a, 1, 15, 5, 11) + res<S>(a, 3, 13, 7, 9),
                             res<S>(a, 5, 9, 1, 13) * res<S>(a, 7, 11, 3, 15));
    rep.equalities[6] = quad(res<S>(a, 0, 11, 2, 9) + res<S>(a, 1, 10, 3, 8),
                             res<S>(a, 2, 8, 0, 10) * res<S>(a, 3, 9, 1, 11));
    rep.equalities[7] = quad(res<S>(a, 4, 15, 6, 13) + res<S>(a, 5, 14, 7, 12),
                             res<S>(a, 6, 12, 4, 14) * res<S>(a, 7, 13, 5, 15));
    rep.equalities[8] = quad(res<S>(a, 0, 13, 4, 9) + res<S>(a, 1, 12, 5, 8),
                             res<S>(a, 4, 8, 0, 12) * res<S>(a, 5, 9, 1, 13));
    rep.equalities[9] = quad(res<S>(a, 2, 15, 6, 11) + res<S>(a, 3, 14, 7, 10),
                             res<S>(a, 6, 10, 2, 14) * res<S>(a, 7, 11, 3, 15));
    rep.equalities[10] = zt.zero4(res<S>(a, 1, 4, 0, 5) * res<S>(a, 11, 14, 10, 15) -
                                  res<S>(a, 3, 6, 2, 7) * res<S>(a, 9, 12, 8, 13));
    rep.equalities[11] = zt.zero4(res<S>(a, 4, 7, 5, 6) * res<S>(a, 8, 11, 9, 10) -
                                  res<S>(a, 0, 3, 1, 2) * res<S>(a, 12, 15, 13, 14));
    rep.equalities[12] = zt.zero4(res<S>(a, 3, 5, 1, 7) * res<S>(a, 10, 12, 8, 14) -
                                  res<S>(a, 2, 4, 0, 6) * res<S>(a, 11, 13, 9, 15));

    rep.inequalities[0] = detail::any_residual_nonzero(
        a, zt, {{0, 3, 1, 2}, {5, 6, 4, 7}, {8, 11, 9, 10}, {13, 14, 12, 15}});
    rep.inequalities[1] = detail::any_residual_nonzero(
        a, zt, {{1, 4, 0, 5}, {3, 6, 2, 7}, {9, 12, 8, 13}, {11, 14, 10, 15}});
    rep.inequalities[2] = detail::any_residual_nonzero(
        a, zt, {{3, 5, 1, 7}, {2, 4, 0, 6}, {11, 13, 9, 15}, {10, 12, 8, 14}});
    return rep;
}

inline const std::array<std::array<int, 3>, 4>& qubit_triples() {
    static const std::array<std::array<int, 3>, 4> t = {
        {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
    return t;
}

inline const std::array<std::array<int, 2>, 6>& qubit_pairs() {
    static const std::array<std::array<int, 2>, 6> t = {
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    return t;
}

inline const std::array<std::array<std::array<int, 2>, 2>, 3>& qubit_pairings() {
    static const std::array<std::array<std::array<int, 2>, 2>, 3> t = {
        {{{{0, 1}, {2, 3}}}, {{{0, 2}, {1, 3}}}, {{{0, 3}, {1, 2}}}}};
    return t;
}

inline char qubit_letter(int q) { return static_cast<char>('A' + q); }

/// Full decision orchestration. Definitive degenerate criteria (lifted to
/// every qubit placement) are evaluated before the merely necessary GHZ4/W4
/// checks, so ConsistentWith* is only ever reported for non-degenerate
/// states. Every evaluated flag lands in the verdict's evidence.
template <class S>
Slocc4Verdict classify4(const State4<S>& s, const ToleranceConfig& tol = {}) {
    Slocc4Verdict v;
    int degenerate_hits = 0;
    auto note = [&](std::string name, bool flag) {
        v.evidence.emplace_back(std::move(name), flag);
        return flag;
    };

    bool sep = note("fully_separable", check_fully_separable(s, tol));
    if (sep) {
        v.kind = Verdict4Kind::FullySeparable;
        ++degenerate_hits;
    }
    for (const auto& p : qubit_pairs()) {
        std::string name = std::string("one_pair(") + qubit_letter(p[0]) + qubit_letter(p[1]) + ")";
        if (note(std::move(name), check_one_pair(s, p, tol))) {
            if (degenerate_hits == 0) {
                v.kind = Verdict4Kind::OnePairOnly;
                v.pair = p;
            }
            ++degenerate_hits;
        }
    }
    for (const auto& pg : qubit_pairings()) {
        std::string name = std::string("two_pairs(") + qubit_letter(pg[0][0]) +
                           qubit_letter(pg[0][1]) + "|" + qubit_letter(pg[1][0]) +
                           qubit_letter(pg[1][1]) + ")";
        if (note(std::move(name), check_two_pairs(s, pg, tol))) {
            if (degenerate_hits == 0) {
                v.kind = Verdict4Kind::TwoPairs;
                v.pairing = pg;
            }
            ++degenerate_hits;
        }
    }
    for (const auto& t : qubit_triples()) {
        int singleton = 0 + 1 + 2 + 3 - t[0] - t[1] - t[2];
        std::string base = std::string() + qubit_letter(t[0]) + qubit_letter(t[1]) +
                           qubit_letter(t[2]);
        if (note("triple_ghz(" + base + ")", check_triple_ghz(s, t, singleton, tol))) {
            if (degenerate_hits == 0) {
                v.kind = Verdict4Kind::TripleGhz;
                v.triple = t;
                v.singleton = singleton;
            }
            ++degenerate_hits;
        }
        if (note("triple_w(" + base + ")", check_triple_w(s, t, singleton, tol))) {
            if (degenerate_hits == 0) {
                v.kind = Verdict4Kind::TripleW;
                v.triple = t;
                v.singleton = singleton;
            }
            ++degenerate_hits;
        }
    }
    if (degenerate_hits > 1) {
        throw ConflictingVerdicts("classify4: multiple definitive degenerate criteria passed");
    }
    if (degenerate_hits == 1) {
        return v;
    }

    bool ghz4 = note("ghz4_necessary", check_ghz4_necessary(s, tol).ok());
    bool w4 = note("w4_necessary", check_w4_necessary(s, tol).ok());
    if (ghz4) {
        v.kind = Verdict4Kind::ConsistentWithGhz4;
    } else if (w4) {
        v.kind = Verdict4Kind::ConsistentWithW4;
    } else {
        v.kind = Verdict4Kind::GenuineOther;
    }
    return v;
}

}  // namespace slocc

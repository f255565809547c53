#pragma once

#include "slocc/state.hpp"

#include <string>
#include <vector>

namespace slocc {

/// Scale-aware zero predicate. Exact mode compares against zero; float mode
/// compares |x| against eps2*|a|^2 for degree-2 residuals and eps4*|a|^4 for
/// degree-4 quantities, where |a|^2 is the squared norm of the state the
/// quantity was computed from. The thresholds track the homogeneity degree,
/// so the predicate is invariant under rescaling the state.
template <class S>
class ZeroTest {
  public:
    ZeroTest(typename ScalarTraits<S>::Real state_norm_sq, const ToleranceConfig& tol)
        : norm_sq_(std::move(state_norm_sq)), tol_(tol) {}

    bool zero2(const S& x) const {
        if constexpr (ScalarTraits<S>::exact) {
            return x.is_zero();
        } else {
            return std::abs(x) <= tol_.eps2 * norm_sq_;
        }
    }

    bool zero4(const S& x) const {
        if constexpr (ScalarTraits<S>::exact) {
            return x.is_zero();
        } else {
            return std::abs(x) <= tol_.eps4 * norm_sq_ * norm_sq_;
        }
    }

    ZeroTest relaxed(double factor) const {
        ToleranceConfig t = tol_;
        t.eps2 *= factor;
        t.eps4 *= factor;
        return ZeroTest(norm_sq_, t);
    }

    const ToleranceConfig& tolerance() const { return tol_; }

  private:
    typename ScalarTraits<S>::Real norm_sq_;
    ToleranceConfig tol_;
};

template <class S, std::size_t N>
ZeroTest<S> make_zero_test(const State<S, N>& s, const ToleranceConfig& tol) {
    tol.validate();
    return ZeroTest<S>(s.norm_sq(), tol);
}

/// a_i*a_j - a_k*a_l with the generating constraint i+j = k+l and
/// i XOR j = k XOR l. Every criterion in the library is built from these.
template <class S>
struct PairResidual {
    int i, j, k, l;
    S value;
};

inline bool valid_pair_indices(int i, int j, int k, int l) {
    return i + j == k + l && (i ^ j) == (k ^ l);
}

template <class S, std::size_t N>
PairResidual<S> pair_residual(const State<S, N>& s, int i, int j, int k, int l) {
    constexpr int dim = static_cast<int>(State<S, N>::dim);
    if (i < 0 || j < 0 || k < 0 || l < 0 || i >= dim || j >= dim || k >= dim || l >= dim) {
        throw std::invalid_argument("pair_residual: index out of range");
    }
    if (!valid_pair_indices(i, j, k, l)) {
        throw std::invalid_argument("pair_residual: indices violate i+j=k+l, i^j=k^l");
    }
    return {i, j, k, l, s[i] * s[j] - s[k] * s[l]};
}

namespace detail {

// Unchecked residual over a raw amplitude span; the index tables below are
// validated once by the pair_residual tests.
template <class S, class A>
S res(const A& a, int i, int j, int k, int l) {
    return a[i] * a[j] - a[k] * a[l];
}

template <class S, class A>
S slice_discriminant(const A& a) {
    S x = res<S>(a, 0, 7, 2, 5) + res<S>(a, 1, 6, 3, 4);
    return x * x - ScalarTraits<S>::from_int(4) * res<S>(a, 2, 4, 0, 6) * res<S>(a, 3, 5, 1, 7);
}

}  // namespace detail

/// The three algebraically equal degree-4 forms of the GHZ discriminant.
template <class S>
struct DiscriminantForms {
    S f1, f2, f3;
};

/// Degree-4 GHZ discriminant
///   (a0 a7 - a2 a5 + a1 a6 - a3 a4)^2 - 4 (a2 a4 - a0 a6)(a3 a5 - a1 a7);
/// nonzero exactly on the three-qubit GHZ class.
template <class S>
S ghz_discriminant(const State3<S>& s) {
    return detail::slice_discriminant<S>(s.amplitudes());
}

template <class S>
DiscriminantForms<S> discriminant_forms(const State3<S>& s) {
    const auto& a = s.amplitudes();
    const S four = ScalarTraits<S>::from_int(4);
    S x1 = detail::res<S>(a, 0, 7, 2, 5) + detail::res<S>(a, 1, 6, 3, 4);
    S x2 = detail::res<S>(a, 0, 7, 3, 4) - detail::res<S>(a, 1, 6, 2, 5);
    S x3 = detail::res<S>(a, 0, 7, 2, 5) - detail::res<S>(a, 1, 6, 3, 4);
    return {x1 * x1 - four * detail::res<S>(a, 2, 4, 0, 6) * detail::res<S>(a, 3, 5, 1, 7),
            x2 * x2 - four * detail::res<S>(a, 1, 4, 0, 5) * detail::res<S>(a, 3, 6, 2, 7),
            x3 * x3 - four * detail::res<S>(a, 0, 3, 1, 2) * detail::res<S>(a, 4, 7, 5, 6)};
}

/// All 28 2x2 minors of the 2x8 arrangement
///   ( a0 a2 a4 a6 a8 a10 a12 a14 )
///   ( a1 a3 a5 a7 a9 a11 a13 a15 )
/// in lexicographic column-pair order (p,q), p < q.
template <class S>
std::vector<PairResidual<S>> minors_2x8(const State4<S>& s) {
    std::vector<PairResidual<S>> out;
    out.reserve(28);
    for (int p = 0; p < 8; ++p) {
        for (int q = p + 1; q < 8; ++q) {
            out.push_back(pair_residual(s, 2 * p, 2 * q + 1, 2 * p + 1, 2 * q));
        }
    }
    return out;
}

/// All 36 2x2 minors of the 4x4 arrangement with rows (a0..a3), (a4..a7),
/// (a8..a11), (a12..a15), in lexicographic (row-pair, column-pair) order.
template <class S>
std::vector<PairResidual<S>> minors_4x4(const State4<S>& s) {
    std::vector<PairResidual<S>> out;
    out.reserve(36);
    for (int r1 = 0; r1 < 4; ++r1) {
        for (int r2 = r1 + 1; r2 < 4; ++r2) {
            for (int c1 = 0; c1 < 4; ++c1) {
                for (int c2 = c1 + 1; c2 < 4; ++c2) {
                    out.push_back(
                        pair_residual(s, 4 * r1 + c1, 4 * r2 + c2, 4 * r1 + c2, 4 * r2 + c1));
                }
            }
        }
    }
    return out;
}

/// One verified identity: a residual computed from orbit amplitudes against
/// its closed form in the operator entries.
template <class S>
struct IdentityCheck {
    std::string name;
    S lhs;
    S rhs;
    bool ok;
};

template <class S>
struct DerivationReport {
    std::vector<IdentityCheck<S>> checks;
    bool all_ok = true;
};

namespace detail {

template <class S>
bool close_identity(const S& lhs, const S& rhs, const ToleranceConfig& tol) {
    if constexpr (ScalarTraits<S>::exact) {
        (void)tol;
        return lhs == rhs;
    } else {
        double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        return std::abs(lhs - rhs) <= tol.eps4 * scale;
    }
}

template <class S>
void push_check(DerivationReport<S>& rep, std::string name, S lhs, S rhs,
                const ToleranceConfig& tol) {
    bool ok = close_identity(lhs, rhs, tol);
    rep.all_ok = rep.all_ok && ok;
    rep.checks.push_back({std::move(name), std::move(lhs), std::move(rhs), ok});
}

// Canonical-state amplitude scale: exact mode builds orbits from unnormalized
// integer canonicals, float mode from unit-normalized ones. f2 is the square
// of the canonical amplitude, which is what enters every quadratic residual.
template <class S>
S canonical_f2(long norm_terms) {
    if constexpr (ScalarTraits<S>::exact) {
        (void)norm_terms;
        return ScalarTraits<S>::from_int(1);
    } else {
        return Complex(1.0 / static_cast<double>(norm_terms), 0.0);
    }
}

template <class S, std::size_t N>
State<S, N> canonical_from_indices(std::initializer_list<int> indices) {
    std::array<S, State<S, N>::dim> a;
    a.fill(ScalarTraits<S>::from_int(0));
    S v = ScalarTraits<S>::from_int(1);
    if constexpr (!ScalarTraits<S>::exact) {
        v = Complex(1.0 / std::sqrt(static_cast<double>(indices.size())), 0.0);
    }
    for (int i : indices) {
        a[static_cast<std::size_t>(i)] = v;
    }
    return State<S, N>(a);
}

}  // namespace detail

/// Rebuilds the GHZ orbit from the operator entries and checks the four
/// listed residual identities plus the closed orbit form of the discriminant,
/// each side computed independently.
template <class S>
DerivationReport<S> verify_ghz3_derivation(const std::array<LocalOperator<S>, 3>& ops,
                                           const ToleranceConfig& tol = {}) {
    tol.validate();
    auto ghz = detail::canonical_from_indices<S, 3>({0, 7});
    auto orbit = apply_local(ghz, ops);
    const auto& a = orbit.amplitudes();
    const auto& al = ops[0];
    const auto& be = ops[1];
    const auto& ga = ops[2];
    const S f2 = detail::canonical_f2<S>(2);
    const S da = al.m1 * al.m4 - al.m3 * al.m2;

    DerivationReport<S> rep;
    detail::push_check(rep, "a2a4-a0a6", detail::res<S>(a, 2, 4, 0, 6),
                       ga.m2 * ga.m1 * da * (be.m2 * be.m3 - be.m4 * be.m1) * f2, tol);
    detail::push_check(rep, "a3a5-a1a7", detail::res<S>(a, 3, 5, 1, 7),
                       ga.m4 * ga.m3 * da * (be.m2 * be.m3 - be.m4 * be.m1) * f2, tol);
    detail::push_check(rep, "a0a7-a3a4", detail::res<S>(a, 0, 7, 3, 4),
                       -da * (-ga.m4 * be.m4 * ga.m1 * be.m1 + be.m3 * ga.m3 * be.m2 * ga.m2) * f2,
                       tol);
    detail::push_check(rep, "a1a6-a2a5", detail::res<S>(a, 1, 6, 2, 5),
                       -da * (-ga.m2 * be.m4 * ga.m3 * be.m1 + be.m3 * ga.m1 * be.m2 * ga.m4) * f2,
                       tol);
    S gterm = -ga.m4 * ga.m1 + ga.m3 * ga.m2;
    S bterm = -be.m4 * be.m1 + be.m2 * be.m3;
    detail::push_check(rep, "discriminant-orbit-form", ghz_discriminant(orbit),
                       da * da * gterm * gterm * bterm * bterm * f2 * f2, tol);
    return rep;
}

/// Checks all ten W-orbit residual identities against their operator-entry
/// closed forms.
template <class S>
DerivationReport<S> verify_w3_derivation(const std::array<LocalOperator<S>, 3>& ops,
                                         const ToleranceConfig& tol = {}) {
    tol.validate();
    auto w = detail::canonical_from_indices<S, 3>({1, 2, 4});
    auto orbit = apply_local(w, ops);
    const auto& a = orbit.amplitudes();
    const auto& al = ops[0];
    const auto& be = ops[1];
    const auto& ga = ops[2];
    const S f2 = detail::canonical_f2<S>(3);
    const S da = al.m1 * al.m4 - al.m3 * al.m2;
    const S db = -be.m2 * be.m3 + be.m1 * be.m4;
    const S dg = ga.m2 * ga.m3 - ga.m4 * ga.m1;

    DerivationReport<S> rep;
    detail::push_check(rep, "a0a3-a1a2", detail::res<S>(a, 0, 3, 1, 2),
                       al.m1 * al.m1 * db * dg * f2, tol);
    detail::push_check(rep, "a5a6-a4a7", detail::res<S>(a, 5, 6, 4, 7),
                       -(al.m3 * al.m3) * db * dg * f2, tol);
    detail::push_check(rep, "a1a4-a0a5", detail::res<S>(a, 1, 4, 0, 5),
                       -(be.m1 * be.m1) * dg * da * f2, tol);
    detail::push_check(rep, "a3a6-a2a7", detail::res<S>(a, 3, 6, 2, 7),
                       -(be.m3 * be.m3) * dg * da * f2, tol);
    detail::push_check(rep, "a3a5-a1a7", detail::res<S>(a, 3, 5, 1, 7),
                       ga.m3 * ga.m3 * db * da * f2, tol);
    detail::push_check(rep, "a2a4-a0a6", detail::res<S>(a, 2, 4, 0, 6),
                       ga.m1 * ga.m1 * db * da * f2, tol);
    detail::push_check(
        rep, "a0a7-a3a4", detail::res<S>(a, 0, 7, 3, 4),
        da * (ga.m1 * ga.m3 * (be.m2 * be.m3 - be.m1 * be.m4) + be.m1 * be.m3 * dg) * f2, tol);
    detail::push_check(
        rep, "a1a6-a2a5", detail::res<S>(a, 1, 6, 2, 5),
        -da * (ga.m1 * ga.m3 * (be.m1 * be.m4 - be.m2 * be.m3) + be.m1 * be.m3 * dg) * f2, tol);
    detail::push_check(
        rep, "a0a7-a2a5", detail::res<S>(a, 0, 7, 2, 5),
        db * (al.m1 * al.m3 * dg + ga.m1 * ga.m3 * (al.m2 * al.m3 - al.m1 * al.m4)) * f2, tol);
    detail::push_check(
        rep, "a1a6-a3a4", detail::res<S>(a, 1, 6, 3, 4),
        -db * (al.m1 * al.m3 * dg + ga.m1 * ga.m3 * (al.m1 * al.m4 - al.m2 * al.m3)) * f2, tol);
    return rep;
}

/// Checks the twelve four-qubit W-orbit residual identities.
template <class S>
DerivationReport<S> verify_w4_derivation(const std::array<LocalOperator<S>, 4>& ops,
                                         const ToleranceConfig& tol = {}) {
    tol.validate();
    for (const auto& op : ops) {
        if (ScalarTraits<S>::exactly_zero(op.det())) {
            throw std::invalid_argument("verify_w4_derivation: operator is not invertible");
        }
    }
    auto w4 = detail::canonical_from_indices<S, 4>({1, 2, 4, 8});
    auto orbit = apply_local(w4, ops);
    const auto& a = orbit.amplitudes();
    const auto& al = ops[0];
    const auto& be = ops[1];
    const auto& ga = ops[2];
    const auto& de = ops[3];
    const S f2 = detail::canonical_f2<S>(4);
    const S dd = de.m1 * de.m4 - de.m3 * de.m2;
    const S dg = -ga.m4 * ga.m1 + ga.m2 * ga.m3;
    const S db = be.m1 * be.m4 - be.m3 * be.m2;
    const S a1sq = al.m1 * al.m1;
    const S a3sq = al.m3 * al.m3;

    DerivationReport<S> rep;
    detail::push_check(rep, "a0a3-a1a2", detail::res<S>(a, 0, 3, 1, 2),
                       a1sq * be.m1 * be.m1 * dd * dg * f2, tol);
    detail::push_check(rep, "a4a7-a5a6", detail::res<S>(a, 4, 7, 5, 6),
                       a1sq * be.m3 * be.m3 * dd * dg * f2, tol);
    detail::push_check(rep, "a1a4-a0a5", detail::res<S>(a, 1, 4, 0, 5),
                       a1sq * ga.m1 * ga.m1 * dd * db * f2, tol);
    detail::push_check(rep, "a3a6-a2a7", detail::res<S>(a, 3, 6, 2, 7),
                       a1sq * ga.m3 * ga.m3 * dd * db * f2, tol);
    detail::push_check(rep, "a3a5-a1a7", detail::res<S>(a, 3, 5, 1, 7),
                       -(a1sq * de.m3 * de.m3) * db * dg * f2, tol);
    detail::push_check(rep, "a2a4-a0a6", detail::res<S>(a, 2, 4, 0, 6),
                       -(a1sq * de.m1 * de.m1) * db * dg * f2, tol);
    detail::push_check(rep, "a8a11-a9a10", detail::res<S>(a, 8, 11, 9, 10),
                       -(a3sq * be.m1 * be.m1) * dd * (-dg) * f2, tol);
    detail::push_check(rep, "a12a15-a13a14", detail::res<S>(a, 12, 15, 13, 14),
                       a3sq * be.m3 * be.m3 * dd * dg * f2, tol);
    detail::push_check(rep, "a9a12-a8a13", detail::res<S>(a, 9, 12, 8, 13),
                       a3sq * ga.m1 * ga.m1 * dd * db * f2, tol);
    detail::push_check(rep, "a11a14-a10a15", detail::res<S>(a, 11, 14, 10, 15),
                       a3sq * ga.m3 * ga.m3 * dd * db * f2, tol);
    detail::push_check(rep, "a11a13-a9a15", detail::res<S>(a, 11, 13, 9, 15),
                       -(a3sq * de.m3 * de.m3) * db * dg * f2, tol);
    detail::push_check(rep, "a10a12-a8a14", detail::res<S>(a, 10, 12, 8, 14),
                       a3sq * de.m1 * de.m1 * db * (-dg) * f2, tol);
    return rep;
}

}  // namespace slocc

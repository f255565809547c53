#pragma once

#include "slocc/scalar.hpp"

#include <array>
#include <cstddef>
#include <numeric>
#include <stdexcept>

namespace slocc {

/// Float-mode equality thresholds and orbit-sampling bounds. Residuals of
/// degree 2 in the amplitudes are compared against eps2, degree-4 quantities
/// against eps4; both thresholds are stated for unit-normalized states and
/// scaled by the actual norm internally.
struct ToleranceConfig {
    double eps2 = 1e-10;
    double eps4 = 1e-9;
    double det_floor = 0.1;
    double norm_cap = 10.0;

    void validate() const {
        if (eps2 <= 0 || eps4 <= 0 || det_floor <= 0 || norm_cap <= 0) {
            throw std::invalid_argument("ToleranceConfig: all fields must be positive");
        }
        if (eps4 < eps2) {
            throw std::invalid_argument("ToleranceConfig: eps4 must be >= eps2");
        }
    }
};

/// Invertible 2x2 operator acting on one qubit, row-major:
///   ( m1  m2 )
///   ( m3  m4 )
template <class S>
struct LocalOperator {
    S m1, m2, m3, m4;

    S det() const { return m1 * m4 - m2 * m3; }

    static LocalOperator identity() {
        using T = ScalarTraits<S>;
        return {T::from_int(1), T::from_int(0), T::from_int(0), T::from_int(1)};
    }
};

/// Matrix product a*b (first apply b, then a).
template <class S>
LocalOperator<S> compose(const LocalOperator<S>& a, const LocalOperator<S>& b) {
    return {a.m1 * b.m1 + a.m2 * b.m3, a.m1 * b.m2 + a.m2 * b.m4,
            a.m3 * b.m1 + a.m4 * b.m3, a.m3 * b.m2 + a.m4 * b.m4};
}

/// Pure n-qubit state as a vector of 2^n amplitudes.
///
/// Basis convention: index i encodes the qubits most-significant-first, so
/// for three qubits (A,B,C) the amplitude a_5 multiplies |101> = |1>_A
/// |0>_B |1>_C. Qubit q of an n-qubit index sits at bit (n-1-q).
/// The zero vector is not a physical state and is rejected at construction.
template <class S, std::size_t N>
class State {
  public:
    static constexpr int qubit_count = N;
    static constexpr std::size_t dim = std::size_t{1} << N;

    explicit State(std::array<S, dim> amps) : a_(std::move(amps)) {
        bool nonzero = false;
        for (const S& x : a_) {
            if (!ScalarTraits<S>::exactly_zero(x)) {
                nonzero = true;
                break;
            }
        }
        if (!nonzero) {
            throw std::invalid_argument("State: all amplitudes are zero");
        }
    }

    const S& operator[](std::size_t i) const { return a_[i]; }
    const std::array<S, dim>& amplitudes() const { return a_; }

    typename ScalarTraits<S>::Real norm_sq() const {
        typename ScalarTraits<S>::Real n{};
        for (const S& x : a_) {
            n += ScalarTraits<S>::abs_sq(x);
        }
        return n;
    }

  private:
    std::array<S, dim> a_;
};

template <class S>
using State3 = State<S, 3>;
template <class S>
using State4 = State<S, 4>;

template <class S, std::size_t N>
State<S, N> scale(const State<S, N>& s, const S& c) {
    std::array<S, State<S, N>::dim> out;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = s[i] * c;
    }
    return State<S, N>(out);
}

template <class S, std::size_t N>
struct NormalizeResult {
    State<S, N> state;
    bool normalized;  // false in exact mode, where sqrt leaves the field
};

/// Float mode: rescale to unit norm. Exact mode: the criteria are homogeneous
/// and 1/sqrt(norm) is generally irrational, so the input is returned
/// unchanged with normalized = false.
template <class S, std::size_t N>
NormalizeResult<S, N> normalize(const State<S, N>& s) {
    if constexpr (ScalarTraits<S>::exact) {
        return {s, false};
    } else {
        double inv = 1.0 / std::sqrt(s.norm_sq());
        return {scale(s, Complex(inv, 0.0)), true};
    }
}

namespace detail {

template <class S, std::size_t N>
bool operator_usable(const LocalOperator<S>& op, double det_floor) {
    if constexpr (ScalarTraits<S>::exact) {
        (void)det_floor;
        return !op.det().is_zero();
    } else {
        return std::abs(op.det()) > det_floor;
    }
}

}  // namespace detail

/// Tensor-product action of one invertible operator per qubit; realizes the
/// SLOCC orbit map. Non-invertible operators (float mode: |det| <= det_floor)
/// are rejected.
template <class S, std::size_t N>
State<S, N> apply_local(const State<S, N>& s, const std::array<LocalOperator<S>, N>& ops,
                        double det_floor = 0.0) {
    for (const auto& op : ops) {
        if (!detail::operator_usable<S, N>(op, det_floor)) {
            throw std::invalid_argument("apply_local: operator is not invertible");
        }
    }
    std::array<S, State<S, N>::dim> out;
    for (std::size_t i = 0; i < out.size(); ++i) {
        S acc = ScalarTraits<S>::from_int(0);
        for (std::size_t j = 0; j < out.size(); ++j) {
            S p = ScalarTraits<S>::from_int(1);
            for (int q = 0; q < N; ++q) {
                int bi = static_cast<int>(i >> (N - 1 - q)) & 1;
                int bj = static_cast<int>(j >> (N - 1 - q)) & 1;
                const auto& op = ops[q];
                p = p * (bi == 0 ? (bj == 0 ? op.m1 : op.m2) : (bj == 0 ? op.m3 : op.m4));
            }
            acc += p * s[j];
        }
        out[i] = acc;
    }
    return State<S, N>(out);
}

/// Relabel qubits: perm[q] is the new position of the qubit currently at
/// position q (position 0 = most significant bit).
template <class S, std::size_t N>
State<S, N> permute_qubits(const State<S, N>& s, const std::array<int, N>& perm) {
    std::array<bool, N> seen{};
    for (int q = 0; q < N; ++q) {
        if (perm[q] < 0 || perm[q] >= N || seen[perm[q]]) {
            throw std::invalid_argument("permute_qubits: not a permutation");
        }
        seen[perm[q]] = true;
    }
    std::array<S, State<S, N>::dim> out;
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::size_t j = 0;
        for (int q = 0; q < N; ++q) {
            std::size_t bit = (i >> (N - 1 - q)) & 1;
            j |= bit << (N - 1 - perm[q]);
        }
        out[j] = s[i];
    }
    return State<S, N>(out);
}

/// Bitwise complement of every basis label: the amplitude of |z> moves to
/// |z-bar>. An involution; |C4> is a fixed point.
template <class S, std::size_t N>
State<S, N> complement(const State<S, N>& s) {
    std::array<S, State<S, N>::dim> out;
    constexpr std::size_t mask = State<S, N>::dim - 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i ^ mask] = s[i];
    }
    return State<S, N>(out);
}

}  // namespace slocc

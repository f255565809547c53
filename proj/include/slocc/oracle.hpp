#pragma once

#include "slocc/classify3.hpp"

#include <vector>

namespace slocc {

/// Reduced density matrix of a pure state. Entries are amplitude conjugate
/// products, so they stay inside the rational field in exact mode.
template <class S>
class DensityMatrix {
  public:
    explicit DensityMatrix(std::size_t dim)
        : dim_(dim), e_(dim * dim, ScalarTraits<S>::from_int(0)) {}

    std::size_t dim() const { return dim_; }
    const S& at(std::size_t r, std::size_t c) const { return e_[r * dim_ + c]; }
    S& at(std::size_t r, std::size_t c) { return e_[r * dim_ + c]; }

    S trace() const {
        S t = ScalarTraits<S>::from_int(0);
        for (std::size_t i = 0; i < dim_; ++i) {
            t += at(i, i);
        }
        return t;
    }

    friend bool operator==(const DensityMatrix& a, const DensityMatrix& b) {
        return a.dim_ == b.dim_ && a.e_ == b.e_;
    }

  private:
    std::size_t dim_;
    std::vector<S> e_;
};

/// Partial trace of |psi><psi| over the listed qubits. The remaining qubits
/// keep their relative order; trace of the result equals the squared norm of
/// the input.
template <class S, std::size_t N>
DensityMatrix<S> partial_trace(const State<S, N>& s, const std::vector<int>& traced) {
    if (traced.empty() || traced.size() >= static_cast<std::size_t>(N)) {
        throw std::invalid_argument("partial_trace: traced set must be a nonempty proper subset");
    }
    std::array<bool, N> is_traced{};
    for (int q : traced) {
        if (q < 0 || q >= N || is_traced[q]) {
            throw std::invalid_argument("partial_trace: bad qubit index");
        }
        is_traced[q] = true;
    }
    std::vector<int> kept;
    for (int q = 0; q < N; ++q) {
        if (!is_traced[q]) kept.push_back(q);
    }
    const int nk = static_cast<int>(kept.size());
    const int nt = N - nk;
    const std::size_t dk = std::size_t{1} << nk;
    const std::size_t dt = std::size_t{1} << nt;

    // Rebuild a full basis index from a kept-subspace index and a traced
    // configuration.
    auto full_index = [&](std::size_t kept_idx, std::size_t traced_idx) {
        std::size_t idx = 0;
        int kbit = nk - 1, tbit = nt - 1;
        for (int q = 0; q < N; ++q) {
            std::size_t bit;
            if (is_traced[q]) {
                bit = (traced_idx >> tbit--) & 1;
            } else {
                bit = (kept_idx >> kbit--) & 1;
            }
            idx |= bit << (N - 1 - q);
        }
        return idx;
    };

    DensityMatrix<S> rho(dk);
    for (std::size_t r = 0; r < dk; ++r) {
        for (std::size_t c = 0; c < dk; ++c) {
            S acc = ScalarTraits<S>::from_int(0);
            for (std::size_t t = 0; t < dt; ++t) {
                acc += s[full_index(r, t)] * ScalarTraits<S>::conj(s[full_index(c, t)]);
            }
            rho.at(r, c) = acc;
        }
    }
    return rho;
}

/// Rank of a 2x2 reduced density matrix via its determinant: rank 1 iff the
/// determinant vanishes (float mode: |det| <= eps2 * trace^2).
template <class S>
int rank2(const DensityMatrix<S>& rho, const ToleranceConfig& tol = {}) {
    if (rho.dim() != 2) {
        throw std::invalid_argument("rank2: expected a 2x2 matrix");
    }
    S det = rho.at(0, 0) * rho.at(1, 1) - rho.at(0, 1) * rho.at(1, 0);
    if constexpr (ScalarTraits<S>::exact) {
        (void)tol;
        return det.is_zero() ? 1 : 2;
    } else {
        double tr = std::abs(rho.trace());
        return std::abs(det) <= tol.eps2 * tr * tr ? 1 : 2;
    }
}

/// Independent classification route: ranks of the three single-qubit reduced
/// density matrices decide the product classes; the (2,2,2) case is split
/// into GHZ and W by the discriminant. Never consults the criterion tables.
template <class S>
Slocc3Class rank_classify3(const State3<S>& s, const ToleranceConfig& tol = {}) {
    std::array<int, 3> ranks{};
    for (int q = 0; q < 3; ++q) {
        std::vector<int> traced;
        for (int p = 0; p < 3; ++p) {
            if (p != q) traced.push_back(p);
        }
        ranks[q] = rank2(partial_trace(s, traced), tol);
    }
    if (ranks == std::array<int, 3>{1, 1, 1}) return Slocc3Class::A_B_C;
    if (ranks == std::array<int, 3>{1, 2, 2}) return Slocc3Class::A_BC;
    if (ranks == std::array<int, 3>{2, 1, 2}) return Slocc3Class::B_AC;
    if (ranks == std::array<int, 3>{2, 2, 1}) return Slocc3Class::C_AB;
    if (ranks == std::array<int, 3>{2, 2, 2}) {
        const auto zt = make_zero_test(s, tol);
        return zt.zero4(ghz_discriminant(s)) ? Slocc3Class::W : Slocc3Class::Ghz;
    }
    // A pure state cannot have exactly one maximally mixed marginal.
    throw std::logic_error("rank_classify3: impossible rank pattern for a pure state");
}

/// The input could not be rebuilt as (s|0>+t|1>) tensor (pair state): the
/// A-BC precondition did not actually hold.
struct ReassemblyFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Explicit A-BC factorization witness: amplitudes of the single-qubit factor
/// (s, t) and the pair factor (a, b, c, d).
template <class S>
struct ProductFactorization {
    S s, t, a, b, c, d;
    bool valid = false;
};

template <class S>
State3<S> reassemble(const ProductFactorization<S>& f) {
    return State3<S>({f.s * f.a, f.s * f.b, f.s * f.c, f.s * f.d,
                      f.t * f.a, f.t * f.b, f.t * f.c, f.t * f.d});
}

/// Recovers the factors of a state satisfying the A-BC equalities. Float
/// mode follows the magnitude construction (|s|^2 = |a0|^2+..+|a3|^2) with
/// the phase convention that the largest-magnitude top-row amplitude sets the
/// phase of s; exact mode uses a pivot construction that stays inside the
/// rational field. Only reassembly is guaranteed, not particular phases.
template <class S>
ProductFactorization<S> factorize_single_pair(const State3<S>& amps,
                                              const ToleranceConfig& tol = {}) {
    const auto& x = amps.amplitudes();
    ProductFactorization<S> f;

    if constexpr (ScalarTraits<S>::exact) {
        int pivot = -1;
        for (int i = 0; i < 4; ++i) {
            if (!x[i].is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot >= 0) {
            f.s = ScalarTraits<S>::from_int(1);
            f.a = x[0];
            f.b = x[1];
            f.c = x[2];
            f.d = x[3];
            f.t = x[4 + pivot] / x[pivot];
        } else {
            f.s = ScalarTraits<S>::from_int(0);
            f.t = ScalarTraits<S>::from_int(1);
            f.a = x[4];
            f.b = x[5];
            f.c = x[6];
            f.d = x[7];
        }
    } else {
        double top = 0.0, bottom = 0.0;
        for (int i = 0; i < 4; ++i) {
            top += std::norm(x[i]);
            bottom += std::norm(x[4 + i]);
        }
        if (top > 0.0) {
            int pivot = 0;
            for (int i = 1; i < 4; ++i) {
                if (std::norm(x[i]) > std::norm(x[pivot])) pivot = i;
            }
            f.s = std::sqrt(top) * x[pivot] / std::abs(x[pivot]);
            f.a = x[0] / f.s;
            f.b = x[1] / f.s;
            f.c = x[2] / f.s;
            f.d = x[3] / f.s;
            std::array<Complex, 4> pair{f.a, f.b, f.c, f.d};
            f.t = x[4 + pivot] / pair[pivot];
        } else {
            f.s = 0.0;
            f.t = std::sqrt(bottom);
            f.a = x[4] / f.t;
            f.b = x[5] / f.t;
            f.c = x[6] / f.t;
            f.d = x[7] / f.t;
        }
    }

    auto rebuilt = reassemble(f);
    const auto zt = make_zero_test(amps, tol);
    for (std::size_t i = 0; i < 8; ++i) {
        if (!zt.zero2(rebuilt[i] - x[i])) {
            throw ReassemblyFailure(
                "factorize_single_pair: reconstruction mismatch; input is not A-BC");
        }
    }
    f.valid = true;
    return f;
}

}  // namespace slocc

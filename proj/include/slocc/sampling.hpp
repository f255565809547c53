#pragma once

#include "slocc/invariants.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>

namespace slocc {

/// Canonical representatives whose SLOCC orbits the generator can sample.
enum class CanonicalClass {
    Ghz3,
    W3,
    A_BC,
    B_AC,
    C_AB,
    AbcProduct,
    Ghz4,
    W4,
    C4,
    EprEpr,
    PairOnly4,
    Separable4,
};

inline bool is_three_qubit(CanonicalClass c) {
    switch (c) {
        case CanonicalClass::Ghz3:
        case CanonicalClass::W3:
        case CanonicalClass::A_BC:
        case CanonicalClass::B_AC:
        case CanonicalClass::C_AB:
        case CanonicalClass::AbcProduct:
            return true;
        default:
            return false;
    }
}

inline const char* to_string(CanonicalClass c) {
    switch (c) {
        case CanonicalClass::Ghz3: return "ghz3";
        case CanonicalClass::W3: return "w3";
        case CanonicalClass::A_BC: return "a-bc";
        case CanonicalClass::B_AC: return "b-ac";
        case CanonicalClass::C_AB: return "c-ab";
        case CanonicalClass::AbcProduct: return "a-b-c";
        case CanonicalClass::Ghz4: return "ghz4";
        case CanonicalClass::W4: return "w4";
        case CanonicalClass::C4: return "c4";
        case CanonicalClass::EprEpr: return "epr-epr";
        case CanonicalClass::PairOnly4: return "pair-only4";
        case CanonicalClass::Separable4: return "separable4";
    }
    return "?";
}

inline std::optional<CanonicalClass> parse_canonical_class(const std::string& s) {
    for (CanonicalClass c :
         {CanonicalClass::Ghz3, CanonicalClass::W3, CanonicalClass::A_BC, CanonicalClass::B_AC,
          CanonicalClass::C_AB, CanonicalClass::AbcProduct, CanonicalClass::Ghz4,
          CanonicalClass::W4, CanonicalClass::C4, CanonicalClass::EprEpr, CanonicalClass::PairOnly4,
          CanonicalClass::Separable4}) {
        if (s == to_string(c)) return c;
    }
    return std::nullopt;
}

namespace detail {

// Engine-stable uniform in [0, 1); avoids distribution objects so streams are
// reproducible across standard library implementations.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_range(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

inline long uniform_int(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Rational small_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
    return Rational(uniform_int(rng, -num_bound, num_bound), uniform_int(rng, 1, den_bound));
}

template <class S>
S random_entry(std::mt19937_64& rng) {
    if constexpr (ScalarTraits<S>::exact) {
        Rational re = small_rational(rng, 4, 3);
        Rational im = (rng() & 1) ? small_rational(rng, 4, 3) : Rational(0);
        return RationalComplex(re, im);
    } else {
        return Complex(uniform_range(rng, -1.5, 1.5), uniform_range(rng, -1.5, 1.5));
    }
}

}  // namespace detail

/// Random invertible single-qubit operator. Exact mode draws small-denominator
/// rational entries and resamples on a zero determinant; float mode resamples
/// until |det| > det_floor (entries stay well below norm_cap by construction).
template <class S>
LocalOperator<S> sample_invertible(std::mt19937_64& rng, const ToleranceConfig& tol = {}) {
    for (;;) {
        LocalOperator<S> op{detail::random_entry<S>(rng), detail::random_entry<S>(rng),
                            detail::random_entry<S>(rng), detail::random_entry<S>(rng)};
        if constexpr (ScalarTraits<S>::exact) {
            if (!op.det().is_zero()) return op;
        } else {
            if (std::abs(op.det()) > tol.det_floor) return op;
        }
    }
}

/// Canonical representative amplitudes. Exact mode uses unnormalized integer
/// amplitudes (the criteria are homogeneous, and 1/sqrt(k) leaves the
/// rational field); float mode normalizes.
template <class S>
State3<S> canonical_state3(CanonicalClass c) {
    switch (c) {
        case CanonicalClass::Ghz3: return detail::canonical_from_indices<S, 3>({0, 7});
        case CanonicalClass::W3: return detail::canonical_from_indices<S, 3>({1, 2, 4});
        case CanonicalClass::A_BC: return detail::canonical_from_indices<S, 3>({0, 3});
        case CanonicalClass::B_AC: return detail::canonical_from_indices<S, 3>({0, 5});
        case CanonicalClass::C_AB: return detail::canonical_from_indices<S, 3>({0, 6});
        case CanonicalClass::AbcProduct: return detail::canonical_from_indices<S, 3>({2});
        default:
            throw std::invalid_argument("canonical_state3: not a three-qubit class");
    }
}

template <class S>
State4<S> canonical_state4(CanonicalClass c) {
    switch (c) {
        case CanonicalClass::Ghz4: return detail::canonical_from_indices<S, 4>({0, 15});
        case CanonicalClass::W4: return detail::canonical_from_indices<S, 4>({1, 2, 4, 8});
        case CanonicalClass::C4:
            return detail::canonical_from_indices<S, 4>({3, 5, 6, 9, 10, 12});
        case CanonicalClass::EprEpr: return detail::canonical_from_indices<S, 4>({0, 3, 12, 15});
        case CanonicalClass::PairOnly4: return detail::canonical_from_indices<S, 4>({0, 3});
        case CanonicalClass::Separable4: return detail::canonical_from_indices<S, 4>({0});
        default:
            throw std::invalid_argument("canonical_state4: not a four-qubit class");
    }
}

/// Deterministic orbit point: canonical state pushed through seeded random
/// invertible operators. Float-mode outputs are renormalized so the default
/// tolerances apply directly.
template <class S>
State3<S> random_orbit3(CanonicalClass c, std::uint64_t seed, const ToleranceConfig& tol = {},
                        bool identity_ops = false) {
    std::mt19937_64 rng(seed);
    auto canonical = canonical_state3<S>(c);
    std::array<LocalOperator<S>, 3> ops;
    for (auto& op : ops) {
        op = identity_ops ? LocalOperator<S>::identity() : sample_invertible<S>(rng, tol);
    }
    return normalize(apply_local(canonical, ops)).state;
}

template <class S>
State4<S> random_orbit4(CanonicalClass c, std::uint64_t seed, const ToleranceConfig& tol = {},
                        bool identity_ops = false) {
    std::mt19937_64 rng(seed);
    auto canonical = canonical_state4<S>(c);
    std::array<LocalOperator<S>, 4> ops;
    for (auto& op : ops) {
        op = identity_ops ? LocalOperator<S>::identity() : sample_invertible<S>(rng, tol);
    }
    return normalize(apply_local(canonical, ops)).state;
}

/// Haar-free generic state sampler for property sweeps; amplitudes are
/// independent small rationals (exact) or uniform complex entries (float,
/// normalized). Resamples the all-zero draw.
template <class S, std::size_t N>
State<S, N> random_state(std::mt19937_64& rng) {
    for (;;) {
        std::array<S, State<S, N>::dim> a;
        bool nonzero = false;
        for (auto& x : a) {
            if constexpr (ScalarTraits<S>::exact) {
                x = RationalComplex(detail::small_rational(rng, 9, 9),
                                    detail::small_rational(rng, 9, 9));
            } else {
                x = Complex(detail::uniform_range(rng, -1.0, 1.0),
                            detail::uniform_range(rng, -1.0, 1.0));
            }
            nonzero = nonzero || !ScalarTraits<S>::exactly_zero(x);
        }
        if (nonzero) {
            return normalize(State<S, N>(a)).state;
        }
    }
}

template <class S>
State3<S> random_state3(std::mt19937_64& rng) {
    return random_state<S, 3>(rng);
}

template <class S>
State4<S> random_state4(std::mt19937_64& rng) {
    return random_state<S, 4>(rng);
}

}  // namespace slocc

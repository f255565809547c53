#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slocc/sampling.hpp"
#include "slocc/state.hpp"

#include <random>

using namespace slocc;

namespace {

using RC = RationalComplex;

State3<Complex> fstate(std::array<Complex, 8> a) { return State3<Complex>(a); }
State3<RC> estate(std::array<RC, 8> a) { return State3<RC>(a); }

bool approx_eq(const Complex& a, const Complex& b, double eps = 1e-12) {
    return std::abs(a - b) <= eps;
}

template <class S, std::size_t N>
bool same_state(const State<S, N>& a, const State<S, N>& b) {
    for (std::size_t i = 0; i < State<S, N>::dim; ++i) {
        if constexpr (ScalarTraits<S>::exact) {
            if (a[i] != b[i]) return false;
        } else {
            if (!approx_eq(a[i], b[i])) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("tolerance config validation") {
    ToleranceConfig tol;
    CHECK_NOTHROW(tol.validate());
    tol.eps2 = 0.0;
    CHECK_THROWS_AS(tol.validate(), std::invalid_argument);
    tol = ToleranceConfig{};
    tol.eps4 = tol.eps2 / 2;
    CHECK_THROWS_AS(tol.validate(), std::invalid_argument);
    tol = ToleranceConfig{};
    tol.det_floor = -1.0;
    CHECK_THROWS_AS(tol.validate(), std::invalid_argument);
}

TEST_CASE("zero state is rejected at construction") {
    std::array<Complex, 8> z{};
    CHECK_THROWS_AS(State3<Complex>{z}, std::invalid_argument);
    std::array<RC, 16> ze{};
    CHECK_THROWS_AS(State4<RC>{ze}, std::invalid_argument);
}

TEST_CASE("normalize scales to unit norm in float mode") {
    auto n = normalize(fstate({Complex(2, 0), 0, 0, 0, 0, 0, 0, 0}));
    CHECK(n.normalized);
    CHECK(approx_eq(n.state[0], Complex(1, 0)));

    auto g = normalize(fstate({Complex(1, 0), 0, 0, 0, 0, 0, 0, Complex(1, 0)}));
    CHECK(approx_eq(g.state[0], Complex(1.0 / std::sqrt(2.0), 0)));
    CHECK(approx_eq(g.state[7], Complex(1.0 / std::sqrt(2.0), 0)));
    CHECK(g.state.norm_sq() == doctest::Approx(1.0));
}

TEST_CASE("normalize is a flagged no-op in exact mode") {
    auto s = estate({RC(2), 0, 0, 0, 0, 0, 0, RC(3)});
    auto n = normalize(s);
    CHECK_FALSE(n.normalized);
    CHECK(same_state(n.state, s));
}

TEST_CASE("apply_local with identity operators returns the state") {
    std::mt19937_64 rng(11);
    auto s = random_state3<RC>(rng);
    std::array<LocalOperator<RC>, 3> id{LocalOperator<RC>::identity(),
                                        LocalOperator<RC>::identity(),
                                        LocalOperator<RC>::identity()};
    CHECK(same_state(apply_local(s, id), s));
}

TEST_CASE("apply_local rejects non-invertible operators") {
    auto s = estate({RC(1), 0, 0, 0, 0, 0, 0, 0});
    std::array<LocalOperator<RC>, 3> ops{LocalOperator<RC>::identity(),
                                         LocalOperator<RC>::identity(),
                                         LocalOperator<RC>{RC(1), RC(2), RC(2), RC(4)}};
    CHECK_THROWS_AS(apply_local(s, ops), std::invalid_argument);
}

TEST_CASE("GHZ orbit amplitudes match the tensor expansion") {
    // For |GHZ> (unnormalized a0 = a7 = 1) the orbit amplitude at index i is
    // prod_q ops[q](bit_q, 0) + prod_q ops[q](bit_q, 1), computed here from
    // the operator entries alone.
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        std::array<LocalOperator<RC>, 3> ops{sample_invertible<RC>(rng),
                                             sample_invertible<RC>(rng),
                                             sample_invertible<RC>(rng)};
        auto ghz = estate({RC(1), 0, 0, 0, 0, 0, 0, RC(1)});
        auto orbit = apply_local(ghz, ops);
        for (std::size_t i = 0; i < 8; ++i) {
            RC t0(1), t1(1);
            for (int q = 0; q < 3; ++q) {
                int bit = static_cast<int>(i >> (2 - q)) & 1;
                t0 = t0 * (bit == 0 ? ops[q].m1 : ops[q].m3);
                t1 = t1 * (bit == 0 ? ops[q].m2 : ops[q].m4);
            }
            CHECK(orbit[i] == t0 + t1);
        }
    }
}

TEST_CASE("apply_local composes") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        auto s = random_state3<RC>(rng);
        std::array<LocalOperator<RC>, 3> t, u, tu;
        for (int q = 0; q < 3; ++q) {
            t[q] = sample_invertible<RC>(rng);
            u[q] = sample_invertible<RC>(rng);
            tu[q] = compose(t[q], u[q]);
        }
        CHECK(same_state(apply_local(s, tu), apply_local(apply_local(s, u), t)));
    }
}

TEST_CASE("apply_local is linear in the state") {
    std::mt19937_64 rng(23);
    auto s = random_state3<RC>(rng);
    std::array<LocalOperator<RC>, 3> ops{sample_invertible<RC>(rng), sample_invertible<RC>(rng),
                                         sample_invertible<RC>(rng)};
    RC c(Rational(3, 7), Rational(-2, 5));
    CHECK(same_state(apply_local(scale(s, c), ops), scale(apply_local(s, ops), c)));
}

TEST_CASE("permute_qubits moves basis labels") {
    // swap(A, B) sends |011> to |101>
    auto s = estate({0, 0, 0, RC(1), 0, 0, 0, 0});
    auto p = permute_qubits(s, {1, 0, 2});
    CHECK(p[5] == RC(1));
    CHECK(p[3] == RC(0));

    std::mt19937_64 rng(3);
    auto r = random_state3<RC>(rng);
    CHECK(same_state(permute_qubits(r, {0, 1, 2}), r));
}

TEST_CASE("permute_qubits validates the permutation") {
    auto s = estate({RC(1), 0, 0, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(permute_qubits(s, {0, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(permute_qubits(s, {0, 1, 5}), std::invalid_argument);
}

TEST_CASE("permute_qubits is a group action") {
    std::mt19937_64 rng(29);
    std::array<int, 3> p1{2, 0, 1};
    std::array<int, 3> p2{1, 2, 0};
    std::array<int, 3> comp{};
    for (int q = 0; q < 3; ++q) comp[q] = p2[p1[q]];
    for (int trial = 0; trial < 50; ++trial) {
        auto s = random_state3<RC>(rng);
        CHECK(same_state(permute_qubits(permute_qubits(s, p1), p2), permute_qubits(s, comp)));
        // inverse of p1
        std::array<int, 3> inv{};
        for (int q = 0; q < 3; ++q) inv[p1[q]] = q;
        CHECK(same_state(permute_qubits(permute_qubits(s, p1), inv), s));
    }
}

TEST_CASE("complement moves |0000> to |1111> and is an involution") {
    std::array<RC, 16> a{};
    a[0] = RC(1);
    auto c = complement(State4<RC>(a));
    CHECK(c[15] == RC(1));
    CHECK(c[0] == RC(0));

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 1000; ++trial) {
        auto s = random_state4<Complex>(rng);
        CHECK(same_state(complement(complement(s)), s));
    }
}

TEST_CASE("sample_invertible respects the determinant floor") {
    std::mt19937_64 rng(41);
    ToleranceConfig tol;
    for (int trial = 0; trial < 200; ++trial) {
        auto op = sample_invertible<Complex>(rng, tol);
        CHECK(std::abs(op.det()) > tol.det_floor);
        CHECK(std::abs(op.m1) < tol.norm_cap);
    }
    for (int trial = 0; trial < 200; ++trial) {
        CHECK_FALSE(sample_invertible<RC>(rng).det().is_zero());
    }
}

TEST_CASE("random_orbit is deterministic in the seed") {
    auto a = random_orbit3<Complex>(CanonicalClass::W3, 42);
    auto b = random_orbit3<Complex>(CanonicalClass::W3, 42);
    CHECK(a.amplitudes() == b.amplitudes());
    auto c = random_orbit3<Complex>(CanonicalClass::W3, 43);
    CHECK_FALSE(a.amplitudes() == c.amplitudes());
}

TEST_CASE("random_orbit with identity operators returns the canonical state") {
    auto s = random_orbit3<RC>(CanonicalClass::Ghz3, 9, {}, true);
    CHECK(s[0] == RC(1));
    CHECK(s[7] == RC(1));
    for (std::size_t i = 1; i < 7; ++i) CHECK(s[i] == RC(0));
}

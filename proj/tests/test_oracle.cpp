#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slocc/oracle.hpp"
#include "slocc/sampling.hpp"

#include <random>

using namespace slocc;

namespace {

using RC = RationalComplex;

const std::array<std::pair<CanonicalClass, Slocc3Class>, 6> kCanonicalPairs = {{
    {CanonicalClass::Ghz3, Slocc3Class::Ghz},
    {CanonicalClass::W3, Slocc3Class::W},
    {CanonicalClass::A_BC, Slocc3Class::A_BC},
    {CanonicalClass::B_AC, Slocc3Class::B_AC},
    {CanonicalClass::C_AB, Slocc3Class::C_AB},
    {CanonicalClass::AbcProduct, Slocc3Class::A_B_C},
}};

}  // namespace

TEST_CASE("partial_trace basics") {
    std::array<RC, 8> z{};
    z[0] = RC(1);  // |000>
    auto rho = partial_trace(State3<RC>(z), {1});  // trace out B, keep A,C
    REQUIRE(rho.dim() == 4);
    CHECK(rho.at(0, 0) == RC(1));
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            if (i != 0 || j != 0) CHECK(rho.at(i, j) == RC(0));
        }
    }
}

TEST_CASE("partial_trace validates the traced set") {
    std::array<RC, 8> z{};
    z[0] = RC(1);
    State3<RC> s(z);
    CHECK_THROWS_AS(partial_trace(s, {}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(s, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(s, {3}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(s, {0, 0}), std::invalid_argument);
}

TEST_CASE("partial_trace preserves trace and hermiticity") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 100; ++trial) {
        auto s = random_state3<RC>(rng);
        auto rho = partial_trace(s, {2});
        CHECK(rho.trace() == RC(s.norm_sq()));
        for (std::size_t i = 0; i < rho.dim(); ++i) {
            for (std::size_t j = 0; j < rho.dim(); ++j) {
                CHECK(rho.at(i, j) == rho.at(j, i).conj());
            }
        }
    }
}

TEST_CASE("rank2") {
    std::array<RC, 8> z{};
    z[0] = RC(1);
    CHECK(rank2(partial_trace(State3<RC>(z), {1, 2})) == 1);

    auto ghz = detail::canonical_from_indices<RC, 3>({0, 7});
    CHECK(rank2(partial_trace(ghz, {1, 2})) == 2);

    auto a_bc = detail::canonical_from_indices<RC, 3>({0, 3});
    CHECK(rank2(partial_trace(a_bc, {1, 2})) == 1);
    CHECK(rank2(partial_trace(a_bc, {0, 2})) == 2);

    CHECK_THROWS_AS(rank2(partial_trace(a_bc, {0})), std::invalid_argument);
}

TEST_CASE("rank_classify3 on canonical states") {
    for (const auto& [canon, expected] : kCanonicalPairs) {
        CHECK(rank_classify3(canonical_state3<RC>(canon)) == expected);
        CHECK(rank_classify3(canonical_state3<Complex>(canon)) == expected);
    }
}

TEST_CASE("rank_classify3 agrees with classify3") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 1000; ++trial) {
        auto s = trial % 2 == 0
                     ? random_state3<RC>(rng)
                     : random_orbit3<RC>(kCanonicalPairs[(trial / 2) % 6].first, 40000 + trial);
        CHECK(rank_classify3(s) == classify3(s).cls);
    }
    for (int trial = 0; trial < 500; ++trial) {
        auto s = random_orbit3<Complex>(kCanonicalPairs[trial % 6].first, 70000 + trial);
        CHECK(rank_classify3(s) == classify3(s).cls);
    }
}

TEST_CASE("factorize_single_pair recovers product structure") {
    auto a_bc = normalize(detail::canonical_from_indices<Complex, 3>({0, 3})).state;
    auto f = factorize_single_pair(a_bc);
    CHECK(f.valid);
    CHECK(std::norm(f.s) == doctest::Approx(1.0));
    CHECK(std::abs(f.t) == doctest::Approx(0.0));
    CHECK(std::norm(f.a) == doctest::Approx(0.5));
    CHECK(std::norm(f.d) == doctest::Approx(0.5));
    CHECK(std::abs(f.b) == doctest::Approx(0.0));
    CHECK(std::abs(f.c) == doctest::Approx(0.0));
    // the pair factor is entangled: bc != ad
    CHECK(std::abs(f.b * f.c - f.a * f.d) > 0.1);

    std::array<RC, 8> p{};
    p[2] = RC(1);  // |010>
    auto fe = factorize_single_pair(State3<RC>(p));
    CHECK(fe.valid);
    CHECK(fe.s == RC(1));
    CHECK(fe.t == RC(0));
    CHECK(fe.c == RC(1));
}

TEST_CASE("factorize_single_pair rejects non-product input") {
    auto ghz = detail::canonical_from_indices<RC, 3>({0, 7});
    CHECK_THROWS_AS(factorize_single_pair(ghz), ReassemblyFailure);
    auto ghzf = normalize(detail::canonical_from_indices<Complex, 3>({0, 7})).state;
    CHECK_THROWS_AS(factorize_single_pair(ghzf), ReassemblyFailure);
}

TEST_CASE("reassembly is the identity on synthesized A-BC states") {
    std::mt19937_64 rng(97);
    int done = 0;
    while (done < 200) {
        RC s = detail::random_entry<RC>(rng), t = detail::random_entry<RC>(rng);
        RC a = detail::random_entry<RC>(rng), b = detail::random_entry<RC>(rng);
        RC c = detail::random_entry<RC>(rng), d = detail::random_entry<RC>(rng);
        if ((s.is_zero() && t.is_zero()) ||
            (a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero())) {
            continue;
        }
        State3<RC> st({s * a, s * b, s * c, s * d, t * a, t * b, t * c, t * d});
        auto f = factorize_single_pair(st);
        CHECK(f.valid);
        auto rebuilt = reassemble(f);
        for (std::size_t i = 0; i < 8; ++i) CHECK(rebuilt[i] == st[i]);
        ++done;
    }
    // float-mode equivalent on sampled A-BC orbit points
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto st = random_orbit3<Complex>(CanonicalClass::A_BC, seed);
        auto f = factorize_single_pair(st);
        CHECK(f.valid);
        auto rebuilt = reassemble(f);
        for (std::size_t i = 0; i < 8; ++i) {
            CHECK(std::abs(rebuilt[i] - st[i]) < 1e-9);
        }
    }
}

TEST_CASE("single-qubit traces of |C4> are identical across qubits") {
    auto c4 = canonical_state4<RC>(CanonicalClass::C4);
    auto first = partial_trace(c4, {0});
    for (int q = 1; q < 4; ++q) {
        CHECK(partial_trace(c4, {q}) == first);
    }
}

TEST_CASE("tr_D of |C4> is the W / W-bar mixture") {
    auto c4 = canonical_state4<RC>(CanonicalClass::C4);
    auto rho = partial_trace(c4, {3});
    REQUIRE(rho.dim() == 8);
    DensityMatrix<RC> expected(8);
    for (int i : {1, 2, 4})
        for (int j : {1, 2, 4}) expected.at(i, j) += RC(1);
    for (int i : {3, 5, 6})
        for (int j : {3, 5, 6}) expected.at(i, j) += RC(1);
    CHECK(rho == expected);
}

TEST_CASE("tr_CD of |C4> is the EPR-dominated two-qubit mixture") {
    auto c4 = canonical_state4<RC>(CanonicalClass::C4);
    auto rho = partial_trace(c4, {2, 3});
    REQUIRE(rho.dim() == 4);
    DensityMatrix<RC> expected(4);
    expected.at(0, 0) = RC(1);
    expected.at(3, 3) = RC(1);
    expected.at(1, 1) = RC(2);
    expected.at(1, 2) = RC(2);
    expected.at(2, 1) = RC(2);
    expected.at(2, 2) = RC(2);
    CHECK(rho == expected);
}

#include "doctest.h"

#include <nilcommute/matrix.hpp>
#include <nilcommute/partition.hpp>
#include <nilcommute/rng.hpp>

#include "oracles.hpp"

using namespace nilcommute;

TEST_CASE("rank_over_field: Jordan blocks and their powers") {
    PrimeField f(101);
    for (std::size_t n : {1u, 2u, 5u, 8u}) {
        auto j = jordan_block<Fp>(n, f.one());
        CHECK(rank_over_field(j) == n - 1);
    }
    // rank(B^m) = sum_i max(u_i - m, 0), checked by explicit power-and-eliminate
    for (const auto& parts : {std::vector<int>{3, 1}, {2, 2}, {4, 3, 1}, {5, 3, 2}, {1, 1, 1}}) {
        Partition p(parts);
        auto b = jordan_matrix<Fp>(p.parts(), f.one());
        for (std::size_t m = 0; m <= static_cast<std::size_t>(p.n()); ++m) {
            CHECK(rank_over_field(b.pow(m)) == oracles::rank_power_by_parts(p, m));
        }
    }
    // zero-dimensional matrices are legal with rank 0
    Matrix<Fp> empty(0, 3, f.zero());
    CHECK(rank_over_field(empty) == 0);
    CHECK(kernel_basis(empty).size() == 3);
}

TEST_CASE("rank is invariant under conjugation and permutation") {
    PrimeField f(101);
    Rng rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 2 + rng.below(5);
        auto m = oracles::random_matrix(rng, f, n, n);
        auto g = oracles::random_invertible(rng, f, n);
        CHECK(rank_over_field(conjugate(m, g)) == rank_over_field(m));
        // row permutation: swap two rows
        auto mp = m;
        if (n >= 2)
            for (std::size_t j = 0; j < n; ++j) std::swap(mp.at(0, j), mp.at(1, j));
        CHECK(rank_over_field(mp) == rank_over_field(m));
    }
}

TEST_CASE("kernel_basis: identity is injective, Sylvester map of J_n has kernel dim n") {
    PrimeField f(5);
    CHECK(kernel_basis(Matrix<Fp>::identity(4, f.one())).empty());
    for (std::size_t n : {2u, 3u, 4u}) {
        auto j = jordan_block<Fp>(n, f.one());
        auto s = oracles::sylvester_commutator_matrix(j);
        CHECK(kernel_basis(s).size() == n); // centralizer of J_n has dimension n
    }
    // partition (2,1): kernel dimension 5 = sum of min(u_h, u_k)
    auto b = jordan_matrix<Fp>({2, 1}, f.one());
    CHECK(kernel_basis(oracles::sylvester_commutator_matrix(b)).size() == 5);
}

TEST_CASE("det: polynomial identity x^2-1 and the cofactor oracle") {
    auto vars = make_vars({"x"});
    auto x = MultiPoly<Int>::variable(vars, 0, Int(1));
    auto one = MultiPoly<Int>::constant(vars, Int(1));
    Matrix<MultiPoly<Int>> m(2, 2, MultiPoly<Int>(vars, Int(0)));
    m.at(0, 0) = x;
    m.at(0, 1) = one;
    m.at(1, 0) = one;
    m.at(1, 1) = x;
    CHECK(det_exact(m) == x * x - one);
    CHECK_THROWS_AS(det_exact(Matrix<Int>(2, 3, Int(0))), std::invalid_argument);

    Rng rng(2);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + rng.below(4);
        Matrix<Int> a(n, n, Int(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a.at(i, j) = Int(static_cast<long long>(rng.below(19)) - 9);
        CHECK(det_exact(a) == oracles::det_cofactor(a));
        CHECK(det_minor_expansion(a) == oracles::det_cofactor(a));
    }
}

TEST_CASE("det is multiplicative on random polynomial matrices") {
    auto vars = make_vars({"x", "y"});
    Rng rng(3);
    auto rand_poly = [&]() {
        MultiPoly<Int> p(vars, Int(0));
        for (int t = 0; t < 2; ++t) {
            Expo e{static_cast<std::uint32_t>(rng.below(2)), static_cast<std::uint32_t>(rng.below(2))};
            p = p + MultiPoly<Int>::monomial(vars, e, Int(static_cast<long long>(rng.below(7)) - 3));
        }
        return p;
    };
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 2 + rng.below(2);
        Matrix<MultiPoly<Int>> a(n, n, MultiPoly<Int>(vars, Int(0))), b = a;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) = rand_poly();
                b.at(i, j) = rand_poly();
            }
        CHECK(det_exact(a * b) == det_exact(a) * det_exact(b));
    }
}

TEST_CASE("rank_over_polynomial_ring: pivots, degeneracies, specialization") {
    PrimeField f(101);
    auto zero = UniPoly<Fp>(f.zero());
    auto xp = UniPoly<Fp>::x(f.one());
    {
        Matrix<UniPoly<Fp>> m(2, 2, zero);
        m.at(0, 0) = xp;
        CHECK(rank_over_polynomial_ring(m) == 1);
    }
    {
        // [[x, 1],[x^2, x]] is singular over K(x): rank 1
        Matrix<UniPoly<Fp>> m(2, 2, zero);
        m.at(0, 0) = xp;
        m.at(0, 1) = one_like(zero);
        m.at(1, 0) = xp * xp;
        m.at(1, 1) = xp;
        CHECK(rank_over_polynomial_ring(m) == 1);
    }
    // rank over K[x] >= rank of any evaluation; equality at random points holds
    // almost always (pivot roots are sparse)
    Rng rng(4);
    int equal = 0, total = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + rng.below(3);
        Matrix<UniPoly<Fp>> m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<Fp> cs;
                for (int d = 0; d <= static_cast<int>(rng.below(3)); ++d) cs.push_back(rng.field_element(f));
                m.at(i, j) = UniPoly<Fp>(cs, f.zero());
            }
        std::size_t rp = rank_over_polynomial_ring(m);
        Fp at = rng.field_element(f);
        Matrix<Fp> ev(n, n, f.zero());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) ev.at(i, j) = m.at(i, j).eval(at);
        std::size_t re = rank_over_field(ev);
        CHECK(rp >= re);
        ++total;
        if (rp == re) ++equal;
    }
    CHECK(equal * 100 >= total * 95);
}

TEST_CASE("block view extracts the partition-induced blocks") {
    PrimeField f(7);
    Partition p({3, 2});
    auto b = jordan_matrix<Fp>(p.parts(), f.one());
    BlockView<Fp> bv(b, p.parts());
    CHECK(bv.block(0, 0) == jordan_block<Fp>(3, f.one()));
    CHECK(bv.block(1, 1) == jordan_block<Fp>(2, f.one()));
    CHECK(bv.block(0, 1).is_zero_matrix());
    CHECK(bv.block(1, 0).is_zero_matrix());
    CHECK_THROWS_AS(BlockView<Fp>(b, {3, 3}), std::invalid_argument);
}

TEST_CASE("matrix inverse, solve, and conjugation") {
    PrimeField f(101);
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + rng.below(5);
        auto g = oracles::random_invertible(rng, f, n);
        auto gi = inverse(g);
        REQUIRE(gi.has_value());
        CHECK((*gi) * g == Matrix<Fp>::identity(n, f.one()));

        std::vector<Fp> rhs;
        for (std::size_t i = 0; i < n; ++i) rhs.push_back(rng.field_element(f));
        auto x = solve_linear(g, rhs);
        REQUIRE(x.has_value());
        for (std::size_t i = 0; i < n; ++i) {
            Fp acc = f.zero();
            for (std::size_t j = 0; j < n; ++j) acc += g.at(i, j) * (*x)[j];
            CHECK(acc == rhs[i]);
        }
    }
    // singular system with no solution
    Matrix<Fp> s(2, 2, f.zero());
    s.at(0, 0) = f.one();
    s.at(1, 0) = f.one();
    CHECK_FALSE(solve_linear(s, {f.one(), f.zero()}).has_value());
    CHECK_FALSE(inverse(s).has_value());
}

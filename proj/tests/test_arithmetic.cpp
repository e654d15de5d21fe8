#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "ghzcert/gaussian_rational.h"
#include "ghzcert/scalar.h"
#include "ghzcert/sparse_echelon.h"

namespace ghzcert {
namespace {

using GR = GaussianRational;

GR q(long num, long den, long inum = 0, long iden = 1) {
    return {mpq_class(num, static_cast<unsigned long>(den)), mpq_class(inum, static_cast<unsigned long>(iden))};
}

TEST(GaussianRational, UnitCyclesThroughQuarterTurns) {
    EXPECT_EQ(GR::unit(0), GR(1));
    EXPECT_EQ(GR::unit(1), GR::i());
    EXPECT_EQ(GR::unit(2), GR(-1));
    EXPECT_EQ(GR::unit(3), -GR::i());
    EXPECT_EQ(GR::unit(4), GR(1));
    EXPECT_EQ(GR::unit(-1), -GR::i());
}

TEST(GaussianRational, FieldOperations) {
    const GR a = q(1, 2, 3, 4);
    const GR b = q(-2, 3, 1, 5);
    EXPECT_EQ(a * b / b, a);
    EXPECT_EQ(a - a, GR());
    EXPECT_EQ(a * a.conj(), GR(a.norm(), 0));
    EXPECT_EQ(GR::i() * GR::i(), GR(-1));
    // (1 + i) / (1 - i) = i
    EXPECT_EQ(GR(1, 1) / GR(1, -1), GR::i());
}

TEST(GaussianRational, DivisionByZeroThrows) {
    EXPECT_THROW(GR(1) / GR(), std::domain_error);
}

TEST(GaussianRational, RandomIdentitiesAgainstFloat) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const GR a = q(num(rng), den(rng), num(rng), den(rng));
        const GR b = q(num(rng), den(rng), num(rng), den(rng));
        const auto fa = a.to_complex();
        const auto fb = b.to_complex();
        EXPECT_NEAR(std::abs((a * b).to_complex() - fa * fb), 0.0, 1e-12);
        EXPECT_NEAR(std::abs((a + b).to_complex() - (fa + fb)), 0.0, 1e-12);
        if (!b.is_zero()) {
            EXPECT_NEAR(std::abs((a / b).to_complex() - fa / fb), 0.0, 1e-9 * (1 + std::abs(fa / fb)));
        }
        EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    }
}

TEST(GaussianRational, ToString) {
    EXPECT_EQ(GR(3).to_string(), "3");
    EXPECT_EQ(GR::i().to_string(), "i");
    EXPECT_EQ((-GR::i()).to_string(), "-i");
    EXPECT_EQ(q(1, 2, -3, 4).to_string(), "1/2-3/4i");
    EXPECT_EQ(q(0, 1, 2, 3).to_string(), "2/3i");
}

TEST(RootOfUnity, ExactMatchesFloat) {
    for (std::size_t w : {1u, 2u, 4u}) {
        for (std::size_t n = 0; n < 2 * w; ++n) {
            const auto exact = root_of_unity<GR>(n, w).to_complex();
            const auto fl = root_of_unity<std::complex<double>>(n, w);
            EXPECT_EQ(exact, fl) << n << "/" << w;
        }
    }
    EXPECT_THROW(root_of_unity<GR>(1, 3), std::invalid_argument);
    const auto third = root_of_unity<std::complex<double>>(1, 3);
    EXPECT_NEAR(third.real(), -0.5, 1e-15);
    EXPECT_NEAR(third.imag(), std::sqrt(3.0) / 2, 1e-15);
}

SparseRow<GR> row(std::initializer_list<std::pair<std::uint32_t, long>> entries) {
    SparseRow<GR> r;
    for (const auto& [c, v] : entries) r.push_back({c, GR(v)});
    return r;
}

TEST(SparseEchelon, RankAndNullspaceOfSmallSystem) {
    SparseEchelon<GR> e(4);
    EXPECT_TRUE(e.insert(row({{0, 1}, {1, 1}})));
    EXPECT_TRUE(e.insert(row({{1, 1}, {2, -1}})));
    EXPECT_FALSE(e.insert(row({{0, 1}, {2, 1}})));  // first + second
    EXPECT_EQ(e.rank(), 2u);
    EXPECT_EQ(e.nullity(), 2u);
    const auto basis = e.nullspace_basis();
    ASSERT_EQ(basis.size(), 2u);
    for (const auto& v : basis) {
        EXPECT_TRUE(dot(row({{0, 1}, {1, 1}}), v).is_zero());
        EXPECT_TRUE(dot(row({{1, 1}, {2, -1}}), v).is_zero());
    }
}

TEST(SparseEchelon, InRowSpace) {
    SparseEchelon<GR> e(3);
    e.insert(row({{0, 2}, {2, 4}}));
    EXPECT_TRUE(e.in_row_space(row({{0, 1}, {2, 2}})));
    EXPECT_FALSE(e.in_row_space(row({{1, 1}})));
}

// Random integer systems: exact rank agrees with float rank, and every
// nullspace vector is annihilated by every inserted row.
TEST(SparseEchelon, RandomSystemsNullspaceIsAnnihilated) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> val(-2, 2);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t cols = 1 + rng() % 7;
        const std::size_t nrows = rng() % 8;
        SparseEchelon<GR> exact(cols);
        SparseEchelon<std::complex<double>> fl(cols, 1e-9);
        std::vector<SparseRow<GR>> inserted;
        for (std::size_t r = 0; r < nrows; ++r) {
            SparseRow<GR> er;
            SparseRow<std::complex<double>> fr;
            for (std::uint32_t c = 0; c < cols; ++c) {
                const int v = val(rng);
                if (v != 0) {
                    er.push_back({c, GR(v)});
                    fr.push_back({c, {static_cast<double>(v), 0.0}});
                }
            }
            inserted.push_back(er);
            exact.insert(er);
            fl.insert(fr);
        }
        EXPECT_EQ(exact.rank(), fl.rank());
        const auto basis = exact.nullspace_basis();
        EXPECT_EQ(basis.size(), exact.nullity());
        for (const auto& v : basis) {
            for (const auto& r : inserted) {
                EXPECT_TRUE(dot(r, v).is_zero());
            }
        }
    }
}

}  // namespace
}  // namespace ghzcert

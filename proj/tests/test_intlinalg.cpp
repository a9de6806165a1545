#include <random>

#include "doctest.h"
#include "lf/intlinalg.hpp"
#include "lf/surface.hpp"

using namespace lf;

namespace {

void check_snf(const IntMatrix& m)
{
    auto r = smith_normal_form(m);
    CHECK(r.u * m * r.v == diagonal(r.d, m.rows(), m.cols()));
    CHECK((r.u * r.u_inv).is_identity());
    CHECK((r.v * r.v_inv).is_identity());
    CHECK(r.u_inv * diagonal(r.d, m.rows(), m.cols()) * r.v_inv == m);
    CHECK(std::llabs(determinant(r.u)) == 1);
    CHECK(std::llabs(determinant(r.v)) == 1);
    for (std::size_t i = 0; i + 1 < r.d.size(); ++i) {
        CHECK(r.d[i] > 0);
        CHECK(r.d[i + 1] % r.d[i] == 0);
    }
    CHECK(cokernel(m).free_rank + r.rank() == m.cols());
}

}  // namespace

TEST_CASE("snf of the identity")
{
    auto r = smith_normal_form(IntMatrix::identity(2));
    CHECK(r.d == std::vector<std::int64_t>{1, 1});
    CHECK(r.u.is_identity());
    CHECK(r.v.is_identity());
}

TEST_CASE("snf of [[2,4],[6,8]]")
{
    IntMatrix m{{2, 4}, {6, 8}};
    auto r = smith_normal_form(m);
    // gcd of entries 2, product |det| = 8
    CHECK(r.d == std::vector<std::int64_t>{2, 4});
    check_snf(m);
}

TEST_CASE("snf of a zero row has rank 0")
{
    auto r = smith_normal_form(IntMatrix(1, 4));
    CHECK(r.d.empty());
    CHECK(cokernel(IntMatrix(1, 4)).free_rank == 4);
}

TEST_CASE("cokernel examples")
{
    CHECK(cokernel(IntMatrix(0, 4)) == AbelianGroupReport{4, {}});
    CHECK(cokernel(IntMatrix::identity(4)) == AbelianGroupReport{0, {}});
    CHECK(cokernel(IntMatrix{{2, 0, 0, 0}}) == AbelianGroupReport{3, {2}});
    CHECK(cokernel(IntMatrix{{2, 0}, {0, 3}}) == AbelianGroupReport{0, {6}});
    CHECK(cokernel(IntMatrix{{4, 6}, {6, 4}}).to_string() == "Z/2 + Z/10");
}

TEST_CASE("snf is deterministic and sound on random desk-scale matrices")
{
    // vanishing-cycle matrices are at most a few dozen rows by 2g columns
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> rows(1, 60), cols(1, 4), val(-9, 9);
    for (int trial = 0; trial < 300; ++trial) {
        IntMatrix m(rows(rng), cols(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = val(rng);
        check_snf(m);
        CHECK(smith_normal_form(m).u == smith_normal_form(m).u);
    }
}

TEST_CASE("snf invariant factors multiply to |det| on square matrices")
{
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> dim(1, 4), val(-9, 9);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = dim(rng);
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = val(rng);
        check_snf(m);
        auto r = smith_normal_form(m);
        std::int64_t prod = r.rank() == m.rows() ? 1 : 0;
        if (prod)
            for (auto x : r.d) prod *= x;
        CHECK(prod == std::llabs(determinant(m)));
    }
}

TEST_CASE("dense matrices beyond desk scale are exact or report overflow")
{
    // transforms of dense 6x6 matrices can outgrow 64 bits; that must surface as an error
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> val(-9, 9);
    int exact = 0, overflow = 0;
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix m(6, 6);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) m(i, j) = val(rng);
        try {
            auto r = smith_normal_form(m);
            bool ok = r.u * m * r.v == diagonal(r.d, 6, 6) && (r.u * r.u_inv).is_identity() &&
                      (r.v * r.v_inv).is_identity();
            CHECK(ok);
            ++exact;
        } catch (const OverflowError&) {
            ++overflow;
        }
        CHECK(cokernel(m).free_rank + smith_normal_form(m).rank() == 6);
    }
    CHECK(exact + overflow == 100);
    CHECK(exact > 0);
}

TEST_CASE("overflow is reported, never wrapped")
{
    const std::int64_t big = std::int64_t{1} << 62;
    CHECK_THROWS_AS(checked_add(big, big), OverflowError);
    CHECK_THROWS_AS(checked_mul(big, 4), OverflowError);
    IntMatrix m{{big, 1}, {1, big}};
    CHECK_THROWS_AS(m * m, OverflowError);
}

TEST_CASE("preserves_form")
{
    IntMatrix j = intersection_form(2);
    CHECK(preserves_form(IntMatrix::identity(4), j));
    // transvection along a1: b1 ↦ b1 + î(b1,a1)·a1 = b1 + a1
    IntMatrix t = IntMatrix::identity(4);
    t(0, 1) = 1;
    CHECK(preserves_form(t, j));
    IntMatrix d = IntMatrix::identity(4);
    d(0, 0) = 2;
    CHECK_FALSE(preserves_form(d, j));
    CHECK_THROWS(preserves_form(IntMatrix::identity(2), j));
}

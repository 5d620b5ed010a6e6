#include <gtest/gtest.h>

#include "cheesy/closed_forms.hpp"
#include "cheesy/series.hpp"

using namespace cheesy;

namespace {

const std::vector<std::vector<long>> kTableCounts = {
    {1, 3, 11, 44, 184, 784, 3363, 14451, 62097, 266716, 1145074, 4914448},
    {1, 3, 11, 44, 186, 810, 3582, 15952, 71242, 318441, 1423411, 6360809},
    {1, 3, 11, 44, 186, 812, 3614, 16259, 73558, 333683, 1515454, 6885303},
};

}  // namespace

TEST(SeriesExpand, LevelOnePrefix) {
    const auto a = series_expand(closed_form_gf(1), 7);
    const std::vector<BigInt> want = {0, 1, 3, 11, 44, 184, 784, 3363};
    EXPECT_EQ(a, want);
}

TEST(SeriesExpand, ClosedFormsReproduceTableCounts) {
    for (int m = 1; m <= 3; ++m) {
        const auto a = series_expand(closed_form_gf(m), 12);
        for (int n = 1; n <= 12; ++n) EXPECT_EQ(a[n], BigInt(kTableCounts[m - 1][n - 1])) << "m=" << m << " n=" << n;
    }
    EXPECT_EQ(series_expand(closed_form_gf(2), 10)[10], BigInt(318441));
}

TEST(SeriesExpand, Geometric) {
    const auto a = series_expand(RationalFunction(IntPolynomial{0, 1}, IntPolynomial{1, -1}), 20);
    EXPECT_EQ(a[0], 0);
    for (int n = 1; n <= 20; ++n) EXPECT_EQ(a[n], 1);
}

TEST(SeriesExpand, RequiresUnitConstantTerm) {
    EXPECT_THROW(series_expand(RationalFunction(IntPolynomial{1}, IntPolynomial{2, 1}), 3), std::domain_error);
    EXPECT_THROW(series_expand(RationalFunction(IntPolynomial{1}, IntPolynomial{0, 1}), 3), std::domain_error);
    EXPECT_THROW(series_expand(closed_form_gf(1), -1), std::invalid_argument);
}

TEST(ClosedForms, Transcription) {
    EXPECT_EQ(closed_form_gf(1).num(), (IntPolynomial{0, 1, -6, 11, -6, 2}));
    const IntPolynomial d2 = closed_form_gf(2).den();
    EXPECT_EQ(d2.degree(), 22);
    EXPECT_EQ(d2.coeff(22), 34);
    EXPECT_EQ(d2.coeff(21), -70);
    const IntPolynomial d3 = closed_form_gf(3).den();
    EXPECT_EQ(d3.degree(), 56);
    EXPECT_EQ(d3.coeff(56), 12);
    EXPECT_EQ(d3.coeff(55), -88);
    EXPECT_EQ(closed_form_gf(3).num().coeff(56), -12);
    EXPECT_THROW(closed_form_gf(4), std::invalid_argument);
}

TEST(PowerSeries, Arithmetic) {
    const PowerSeries geo = PowerSeries::of(RationalFunction(IntPolynomial{1}, IntPolynomial{1, -1}), 10);
    const PowerSeries one_minus_q = PowerSeries::of(IntPolynomial{1, -1}, 10);
    EXPECT_EQ(geo * one_minus_q, PowerSeries::of(IntPolynomial{1}, 10));
    EXPECT_EQ(geo + geo, 2 * geo);
    EXPECT_EQ(first_difference(geo, geo), -1);

    PowerSeries bumped = geo;
    bumped[4] += 1;
    EXPECT_EQ(first_difference(geo, bumped), 4);
    EXPECT_THROW(geo + PowerSeries(5), std::invalid_argument);
}

TEST(PowerSeries, RationalTimesSeries) {
    const RationalFunction q_over(IntPolynomial{0, 1}, IntPolynomial{1, -1});
    const PowerSeries ones = PowerSeries::of(RationalFunction(IntPolynomial{1}, IntPolynomial{1, -1}), 8);
    const PowerSeries s = q_over * ones;  // q/(1-q)^2
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(s[n], n);
}

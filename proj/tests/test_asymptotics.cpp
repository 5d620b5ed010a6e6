#include <gtest/gtest.h>

#include <array>

#include "cheesy/asymptotics.hpp"
#include "cheesy/closed_forms.hpp"
#include "cheesy/functional_equations.hpp"

using namespace cheesy;

namespace {

bool near(const Real& a, double b, double tol) { return boost::multiprecision::abs(a - Real(b)) <= Real(tol); }

}  // namespace

TEST(FindRoots, Linear) {
    const RootSet rs = find_roots(IntPolynomial{1, -2});
    ASSERT_EQ(rs.roots.size(), 1u);
    EXPECT_TRUE(near(rs.roots[0].value.real(), 0.5, 1e-25));
    EXPECT_EQ(rs.roots[0].multiplicity, 1);
}

TEST(FindRoots, DoubleRoot) {
    const RootSet rs = find_roots(IntPolynomial{1, -2, 1});
    ASSERT_EQ(rs.roots.size(), 1u);
    EXPECT_EQ(rs.roots[0].multiplicity, 2);
    EXPECT_TRUE(near(rs.roots[0].value.real(), 1.0, 1e-25));
    EXPECT_EQ(rs.count_with_multiplicity(), 2u);
}

TEST(FindRoots, RootAtZero) {
    const RootSet rs = find_roots(IntPolynomial{0, 0, 1, -1});
    ASSERT_EQ(rs.roots.size(), 2u);
    EXPECT_EQ(rs.roots[0].multiplicity, 2);
    EXPECT_EQ(rs.count_with_multiplicity(), 3u);
}

TEST(FindRoots, LevelOneDenominator) {
    const std::array<std::pair<double, double>, 6> want = {{
        {0.233117, 0.0},
        {0.449922, -0.087757},
        {0.449922, 0.087757},
        {0.988454, -1.537589},
        {0.988454, 1.537589},
        {-6.109867, 0.0},
    }};
    const RootSet rs = find_roots(closed_form_gf(1).den());
    ASSERT_EQ(rs.roots.size(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        EXPECT_TRUE(near(rs.roots[i].value.real(), want[i].first, 1e-6)) << i;
        EXPECT_TRUE(near(rs.roots[i].value.imag(), want[i].second, 1e-6)) << i;
        EXPECT_LE(rs.roots[i].residual, rs.residual_bound);
    }
}

TEST(FindRoots, Arguments) {
    EXPECT_THROW(find_roots(IntPolynomial{3}), std::invalid_argument);
    EXPECT_THROW(find_roots(IntPolynomial{1, -2}, kMaxRootDigits + 1), std::invalid_argument);
    EXPECT_NO_THROW(find_roots(closed_form_gf(3).den(), kMaxRootDigits));
}

TEST(DominantSingularity, LevelOneMargin) {
    const DominantRoot d = dominant_singularity(closed_form_gf(1));
    EXPECT_TRUE(near(d.root, 0.233117, 1e-6));
    // |0.449922 - 0.087757i|
    EXPECT_TRUE(near(d.next_modulus, 0.458400, 1e-5));
    EXPECT_TRUE(near(d.margin, 0.458400 - 0.233117, 1e-5));
}

TEST(DominantSingularity, Rejections) {
    const IntPolynomial one{1};
    EXPECT_THROW(dominant_singularity(RationalFunction(one, IntPolynomial{1, -4, 4})), std::domain_error);  // (1-2q)^2
    EXPECT_THROW(dominant_singularity(RationalFunction(one, IntPolynomial{1, 0, 1})), std::domain_error);   // 1+q^2
    EXPECT_THROW(dominant_singularity(RationalFunction(one, IntPolynomial{1, 0, -1})), std::domain_error);  // 1-q^2
    EXPECT_THROW(dominant_singularity(RationalFunction(one, IntPolynomial{1, 1})), std::domain_error);      // root -1
    EXPECT_THROW(dominant_singularity(RationalFunction(IntPolynomial{0, 1})), std::domain_error);
}

TEST(AsymptoticForm, GrowthConstants) {
    const std::array<double, 3> growth = {4.289698, 4.462811, 4.538766};
    for (int m = 1; m <= 3; ++m) EXPECT_TRUE(near(asymptotic_form(closed_form_gf(m)).growth, growth[m - 1], 1e-6)) << m;
}

TEST(AsymptoticForm, Amplitudes) {
    EXPECT_TRUE(near(asymptotic_form(closed_form_gf(1)).amplitude, 0.126651, 1e-6));
    EXPECT_TRUE(near(asymptotic_form(closed_form_gf(2)).amplitude, 0.102214, 1e-6));
}

TEST(AsymptoticForm, AmplitudeIsTheLimitOfNormalisedCoefficients) {
    // Oracle: a_n / g^n for large n, from exact coefficients.
    for (int m = 1; m <= 3; ++m) {
        const RationalFunction f = closed_form_gf(m);
        const AsymptoticForm form = asymptotic_form(f);
        const auto a = series_expand(f, 300);
        const Real limit = to_real(a[300]) / boost::multiprecision::pow(form.growth, 300);
        EXPECT_LT(boost::multiprecision::abs(limit - form.amplitude), Real("1e-12")) << m;
    }
    EXPECT_TRUE(near(asymptotic_form(closed_form_gf(3)).amplitude, 0.090526, 1e-6));
}

TEST(AsymptoticForm, ColumnConvexGrowth) {
    const auto x = solve_linear_system(to_matrix(level0_system()));
    EXPECT_TRUE(near(asymptotic_form(x[0]).growth, 3.863131, 1e-6));
}

TEST(AsymptoticForm, ErrorEnvelope) {
    // The subdominant roots are complex, so the error oscillates; it must
    // stay inside K (r/|r_next|)^n.
    const RationalFunction f = closed_form_gf(1);
    const AsymptoticForm form = asymptotic_form(f);
    const Real rho = form.root / form.next_modulus;
    const auto a = series_expand(f, 80);
    for (int n = 10; n <= 80; ++n) {
        const Real err = relative_error(a[n], form.amplitude, form.growth, n);
        EXPECT_LT(err, 10 * boost::multiprecision::pow(rho, n)) << n;
    }
}

TEST(AsymptoticCheck, FortiethCoefficient) {
    const auto a = series_expand(closed_form_gf(1), 40);
    EXPECT_LT(relative_error(a[40], Real("0.126651"), Real("4.289698"), 40), Real("1e-3"));
    const auto err = asymptotic_check(closed_form_gf(1), 40);
    ASSERT_TRUE(err.has_value());
    EXPECT_LT(*err, Real("1e-6"));
    EXPECT_FALSE(asymptotic_check(RationalFunction(), 10).has_value());
}

TEST(Fixed, Rendering) {
    EXPECT_EQ(fixed(Real("4.2896980912"), 6), "4.289698");
    EXPECT_EQ(fixed(Real("0.1266508"), 6), "0.126651");
}

TEST(Extrapolation, BlocksConstants) {
    const std::array<double, 4> g = {3.863131, 4.289698, 4.462811, 4.538766};
    const ExtrapolationEstimate e = extrapolate_growth(g);
    EXPECT_EQ(e.ratio_num, 2);
    EXPECT_EQ(e.ratio_den, 5);
    EXPECT_NEAR(e.rounded_estimate, 4.590, 5e-4);
    EXPECT_NEAR(e.differences[0], 0.427, 1e-9);
    EXPECT_NEAR(e.differences[2], 0.076, 1e-9);
}

TEST(Extrapolation, CheesyConstants) {
    const std::array<double, 4> g = {3.863131, 4.114908, 4.231836, 4.288631};
    const ExtrapolationEstimate e = extrapolate_growth(g);
    EXPECT_NEAR(e.rounded_estimate, 4.346, 5e-4);
}

TEST(Extrapolation, ForcedRatioAndErrors) {
    const std::array<double, 4> g = {1.0, 2.0, 2.5, 2.75};
    const ExtrapolationEstimate e = extrapolate_growth(g, std::pair{1, 2});
    EXPECT_NEAR(e.rounded_estimate, 3.0, 1e-12);
    EXPECT_NEAR(e.measured_estimate, 3.0, 1e-12);
    const std::array<double, 3> short_list = {1.0, 2.0, 3.0};
    EXPECT_THROW(extrapolate_growth(short_list), std::invalid_argument);
}

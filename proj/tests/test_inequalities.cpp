#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nsdecay/errors.hpp"
#include "nsdecay/inequalities.hpp"
#include "nsdecay/spectral.hpp"

using namespace nsdecay;

namespace {

Field mode(GridPtr g, int kx, int ky, int kz, double amp = 1.0) {
    const double w = kTwoPi / g->box_length();
    return Field::from_function(g, [=](double x, double y, double z) { return amp * std::cos(w * (kx * x + ky * y + kz * z)); });
}

}  // namespace

TEST_CASE("interpolation: single mode is the equality case") {
    const auto g = make_grid(16, 1.3);
    const Field f = mode(g, 2, 1, 0, 0.7);
    for (int l = 0; l <= 2; ++l)
        for (double s : {0.25, 0.5, 1.0, 1.4}) CHECK(check_interp(f, l, s).max_ratio == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("interpolation: two distinct shells are strict") {
    const auto g = make_grid(16, 1.0);
    const Field f = mode(g, 1, 0, 0) + mode(g, 0, 3, 1, 0.5);
    for (int l = 0; l <= 2; ++l) {
        const double r = check_interp(f, l, 0.5).max_ratio;
        CHECK(r < 1.0 - 1e-6);
    }
    CHECK_THROWS_AS(check_interp(f + Field::constant(g, 1.0), 0, 0.5), NegativePowerOnNonzeroMean);
    CHECK_THROWS_AS(check_interp(f, 3, 0.5), InvalidArgument);
}

TEST_CASE("random band-limited fields") {
    const auto g = make_grid(16, 1.0);
    const Field f1 = random_band_limited(g, 7, 3);
    const Field f2 = random_band_limited(g, 7, 3);
    const Field f3 = random_band_limited(g, 7, 4);
    CHECK(l2_norm(f1 - f2) == 0.0);
    CHECK(l2_norm(f1 - f3) > 0.0);
    CHECK(std::abs(mean(f1)) < 1e-15);
    CHECK(hermitian_defect(f1) < 1e-15);
    for (std::size_t i = 0; i < g->spectral_size(); ++i)
        if (g->wave_index(i).norm2() > 16) CHECK(std::abs(f1.modes()[i]) < 1e-15);
}

TEST_CASE("interpolation sweep never exceeds one") {
    const auto g = make_grid(16, 1.0);
    double worst = 0.0;
    for (std::uint64_t k = 0; k < 40; ++k) {
        const Field f = random_band_limited(g, 11, k);
        for (int l = 0; l <= 2; ++l)
            for (double s : {0.25, 0.5, 1.0, 1.4}) worst = std::max(worst, check_interp(f, l, s).max_ratio);
    }
    CHECK(worst <= 1.0 + 1e-10);
}

TEST_CASE("Gagliardo-Nirenberg exponents") {
    CHECK(gn_exponent(1, 1, 1, 0.3) == doctest::Approx(2.0));
    CHECK(gn_exponent(0, 0, 1, 0.5) == doctest::Approx(3.0));
    CHECK(gn_exponent(0, 0, 1, 0.75) == doctest::Approx(4.0));
    CHECK(gn_exponent(0, 0, 1, 1.0) == doctest::Approx(6.0));
    CHECK_THROWS_AS(gn_exponent(0, 0, 2, 1.0), InvalidArgument);
    CHECK_THROWS_AS(gn_exponent(0, 0, 1, 1.5), InvalidArgument);
    const auto g = make_grid(16, 1.0);
    const Field f = random_band_limited(g, 3, 0);
    CHECK(check_gn(f, 1, 1, 1, 0.5).max_ratio == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Hardy-Littlewood-Sobolev") {
    CHECK(hls_exponent(1.0, 1.2) == doctest::Approx(2.0));
    CHECK_THROWS_AS(hls_exponent(1.0, 3.0), InvalidArgument);
    CHECK_THROWS_AS(hls_exponent(0.0, 1.5), InvalidArgument);
    const double L = 1.0;
    const auto g = make_grid(32, L);
    const Field f = mode(g, 1, 1, 0);
    const double q = std::sqrt(2.0) / L;
    const double expected = lp_norm(f, 2.0) / (q * lp_norm(f, 1.2));
    CHECK(check_hls(f, 1.0, 1.2).max_ratio == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("Hardy-Littlewood-Sobolev ratio is roughly dilation invariant") {
    // Odd Gaussian bumps: zero mean without subtracting a constant.
    const double L = 1.0;
    const auto g = make_grid(64, L);
    std::vector<double> ratios;
    for (double width : {0.04, 0.05, 0.06}) {
        Field f = Field::from_function(g, [=](double x, double y, double z) {
            const double r2 = (x - 0.5) * (x - 0.5) + (y - 0.5) * (y - 0.5) + (z - 0.5) * (z - 0.5);
            return (x - 0.5) * std::exp(-r2 / (2 * width * width));
        });
        ratios.push_back(check_hls(f, 1.0, 1.2).max_ratio);
    }
    const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
    CHECK(*hi / *lo < 1.10);
}

TEST_CASE("Hausdorff-Young") {
    const auto g = make_grid(16, 1.4);
    for (std::uint64_t k = 0; k < 10; ++k) {
        const Field f = random_band_limited(g, 5, k);
        CHECK(check_hausdorff_young(f, 2.0).max_ratio == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(check_hausdorff_young(f, 1.0).max_ratio <= 1.0 + 1e-12);
        CHECK(check_hausdorff_young(f, 4.0 / 3.0).max_ratio <= 1.05);
    }
    CHECK_THROWS_AS(check_hausdorff_young(random_band_limited(g, 5, 0), 2.5), InvalidArgument);
}

TEST_CASE("every ratio is scale invariant") {
    const auto g = make_grid(16, 1.0);
    const Field f = random_band_limited(g, 9, 1);
    const Field h = 37.5 * f;
    CHECK(check_interp(h, 1, 0.5).max_ratio == doctest::Approx(check_interp(f, 1, 0.5).max_ratio).epsilon(1e-12));
    CHECK(check_gn(h, 0, 0, 1, 0.5).max_ratio == doctest::Approx(check_gn(f, 0, 0, 1, 0.5).max_ratio).epsilon(1e-12));
    CHECK(check_hls(h, 0.5, 1.5).max_ratio == doctest::Approx(check_hls(f, 0.5, 1.5).max_ratio).epsilon(1e-12));
    CHECK(check_hausdorff_young(h, 1.5).max_ratio ==
          doctest::Approx(check_hausdorff_young(f, 1.5).max_ratio).epsilon(1e-12));
}

TEST_CASE("battery is deterministic") {
    const auto a = run_inequality_battery(17, 3);
    const auto b = run_inequality_battery(17, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].ratios == b[i].ratios);
        CHECK(a[i].samples == 3);
        CHECK(a[i].pass);
    }
}

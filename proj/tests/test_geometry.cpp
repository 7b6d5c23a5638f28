#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "gksum/geometry.hpp"
#include "test_util.hpp"

using namespace gksum;
using Catch::Matchers::WithinAbs;

TEST_CASE("boundary samples") {
    HypocycloidRegion d3 = boundary_samples(3, 66);
    REQUIRE(d3.boundary.size() == 66);
    CHECK_THAT(std::abs(d3.boundary[0] - Complex{3.0, 0.0}), WithinAbs(0.0, 1e-12));
    // theta = pi: 2 e^{i pi} + e^{-2 i pi} = -1.
    CHECK_THAT(std::abs(d3.boundary[33] - Complex{-1.0, 0.0}), WithinAbs(0.0, 1e-12));

    HypocycloidRegion d5 = boundary_samples(5, 8192);
    CHECK(d5.boundary.size() % 5 == 0);  // rounded up so cusps are vertices
    double max_mod = 0.0, min_mod = 1e9;
    for (const Complex& z : d5.boundary) {
        max_mod = std::max(max_mod, std::abs(z));
        min_mod = std::min(min_mod, std::abs(z));
    }
    CHECK_THAT(max_mod, WithinAbs(5.0, 1e-6));
    CHECK_THAT(min_mod, WithinAbs(3.0, 1e-6));

    CHECK_THROWS_AS(boundary_samples(2, 8192), Error);
    CHECK_THROWS_AS(boundary_samples(3, 8), Error);
}

TEST_CASE("boundary rotation invariance") {
    for (int d : {3, 5, 7}) {
        HypocycloidRegion region = boundary_samples(d, 4096);
        std::size_t N = region.boundary.size();
        REQUIRE(N % static_cast<std::size_t>(d) == 0);
        Complex rot = std::polar(1.0, kTwoPi / d);
        std::size_t shift = N / static_cast<std::size_t>(d);
        for (std::size_t j = 0; j < N; ++j)
            CHECK_THAT(std::abs(rot * region.boundary[j] - region.boundary[(j + shift) % N]),
                       WithinAbs(0.0, 1e-9));
    }
}

TEST_CASE("containment basics") {
    HypocycloidRegion d3 = boundary_samples(3);
    CHECK(contains(d3, {0.0, 0.0}));
    CHECK(contains(d3, {3.0, 0.0}));   // cusp, on the boundary
    CHECK(!contains(d3, {3.1, 0.0}));
    CHECK(contains(d3, {0.99, 0.0}));  // inside the inscribed disk
    CHECK(!contains(d3, {-2.0, 2.0}));
    CHECK(!contains(d3, {0.0, 2.0}));  // above the upper arc
    CHECK(contains(d3, {-1.0, 0.0}));
}

TEST_CASE("containment agrees with an even-odd oracle away from the boundary") {
    HypocycloidRegion d3 = boundary_samples(3);
    std::mt19937_64 rng(99);
    auto uniform = [&](double lo, double hi) {
        return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    int checked = 0;
    while (checked < 4000) {
        Complex z{uniform(-3.2, 3.2), uniform(-3.2, 3.2)};
        if (boundary_distance(d3, z) < 1e-3) continue;
        CHECK(contains(d3, z) == testutil::naive_point_in_polygon(d3.boundary, z));
        ++checked;
    }
}

TEST_CASE("refinement does not flip verdicts away from the boundary") {
    HypocycloidRegion coarse = boundary_samples(4, 1024);
    HypocycloidRegion fine = boundary_samples(4, 2048);
    std::mt19937_64 rng(1234);
    auto uniform = [&](double lo, double hi) {
        return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    int checked = 0;
    while (checked < 2000) {
        Complex z{uniform(-4.2, 4.2), uniform(-4.2, 4.2)};
        if (boundary_distance(coarse, z) <= 2.0 * coarse.tolerance) continue;
        CHECK(contains(coarse, z) == contains(fine, z));
        ++checked;
    }
}

TEST_CASE("boundary csv export") {
    HypocycloidRegion d3 = boundary_samples(3, 66);
    std::ostringstream os;
    std::size_t rows = write_boundary_csv(d3, os);
    CHECK(rows == 66);
    std::string csv = os.str();
    CHECK(csv.rfind("theta,re,im\n", 0) == 0);
    CHECK(csv.find("\n0,3,0\n") != std::string::npos);  // theta = 0 is the cusp at d
    std::size_t lines = 0;
    for (char c : csv) lines += c == '\n';
    CHECK(lines == 67);
}

TEST_CASE("f_map") {
    std::vector<Complex> ones{{1.0, 0.0}, {1.0, 0.0}};
    CHECK_THAT(std::abs(f_map(ones) - Complex{3.0, 0.0}), WithinAbs(0.0, 1e-12));

    Complex w = std::polar(1.0, kTwoPi / 3.0);
    std::vector<Complex> rotated{w, w};
    CHECK_THAT(std::abs(f_map(rotated) - 3.0 * w), WithinAbs(0.0, 1e-12));

    std::vector<Complex> off{{0.5, 0.0}};
    CHECK_THROWS_AS(f_map(off), NotOnTorus);
}

TEST_CASE("f_map image lies in the hypocycloid") {
    std::mt19937_64 rng(2024);
    auto uniform01 = [&]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    for (int d : {3, 4, 5, 7}) {
        HypocycloidRegion region = boundary_samples(d);
        std::vector<Complex> zs(static_cast<std::size_t>(d - 1));
        for (int i = 0; i < 5000; ++i) {
            for (Complex& z : zs) z = std::polar(1.0, kTwoPi * uniform01());
            CHECK(contains(region, f_map(zs)));
        }
    }
}

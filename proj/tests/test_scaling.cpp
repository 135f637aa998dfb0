#include <doctest.h>

#include "runup/errors.hpp"
#include "runup/scaling.hpp"

#include <cmath>

using namespace runup;

namespace {

DimensionalProfile make_profile(ProfileKind kind)
{
    DimensionalProfile p;
    p.kind = kind;
    p.abscissa = {0.0, 1000.0, 2500.0, 10000.0};
    p.values = {0.5, 2.0, -1.0, 0.25};
    return p;
}

} // namespace

TEST_CASE("identity scaling leaves profiles unchanged")
{
    ScalingParameters s{1.0, 1.0, 1.0};
    for (auto kind : {ProfileKind::elevation, ProfileKind::velocity,
                      ProfileKind::position_series}) {
        auto p = make_profile(kind);
        auto f = to_dimensionless(p, s);
        for (std::size_t i = 0; i < p.abscissa.size(); ++i) {
            CHECK(f.grid()[i] == doctest::Approx(p.abscissa[i]).epsilon(1e-15));
            CHECK(f.values()[i] == doctest::Approx(p.values[i]).epsilon(1e-15));
        }
    }
}

TEST_CASE("position and time substitution factors")
{
    ScalingParameters s{100.0, 0.01, 9.81};
    DimensionalProfile p;
    p.kind = ProfileKind::position_series;
    p.abscissa = {0.0, 1000.0};  // seconds
    p.values = {0.0, 10000.0};   // metres
    auto f = to_dimensionless(p, s);
    CHECK(f.grid()[1] == doctest::Approx(0.01 * std::sqrt(9.81 / 100.0) * 1000.0).epsilon(1e-12));
    CHECK(f.grid()[1] == doctest::Approx(3.1321).epsilon(1e-4));
    CHECK(f.values()[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("elevation values scale by 1/H0")
{
    ScalingParameters s{100.0, 0.01, 9.81};
    DimensionalProfile p;
    p.kind = ProfileKind::elevation;
    p.abscissa = {0.0, 10000.0};
    p.values = {0.0, 2.0};
    auto f = to_dimensionless(p, s);
    CHECK(f.values()[1] == doctest::Approx(0.02).epsilon(1e-14));
    CHECK(f.grid()[1] == doctest::Approx(1.0).epsilon(1e-14));

    auto back = to_dimensional(f, s, ProfileKind::elevation);
    CHECK(back.values[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(back.abscissa[1] == doctest::Approx(10000.0).epsilon(1e-14));
}

TEST_CASE("round trip is the identity for every kind")
{
    ScalingParameters s{37.5, 0.004, 9.81};
    for (auto kind : {ProfileKind::elevation, ProfileKind::velocity,
                      ProfileKind::position_series}) {
        auto p = make_profile(kind);
        auto back = to_dimensional(to_dimensionless(p, s), s, kind);
        for (std::size_t i = 0; i < p.abscissa.size(); ++i) {
            CHECK(back.abscissa[i]
                  == doctest::Approx(p.abscissa[i]).epsilon(1e-14));
            CHECK(back.values[i] == doctest::Approx(p.values[i]).epsilon(1e-14));
        }
    }
}

TEST_CASE("scaling is linear in the values")
{
    ScalingParameters s{12.0, 0.05, 9.81};
    auto p = make_profile(ProfileKind::velocity);
    auto scaled = p;
    for (double& v : scaled.values)
        v *= 3.0;
    auto f1 = to_dimensionless(p, s);
    auto f3 = to_dimensionless(scaled, s);
    for (std::size_t i = 0; i < f1.size(); ++i)
        CHECK(f3.values()[i] == doctest::Approx(3.0 * f1.values()[i]).epsilon(1e-14));
}

TEST_CASE("non-positive parameters are rejected")
{
    CHECK_THROWS_AS(to_dimensionless(make_profile(ProfileKind::elevation),
                                     ScalingParameters{0.0, 0.01, 9.81}),
                    invalid_parameters);
    CHECK_THROWS_AS(to_dimensionless(make_profile(ProfileKind::elevation),
                                     ScalingParameters{1.0, -0.01, 9.81}),
                    invalid_parameters);
    CHECK_THROWS_AS(to_dimensionless(make_profile(ProfileKind::elevation),
                                     ScalingParameters{1.0, 0.01, 0.0}),
                    invalid_parameters);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "timeflip/su2.hpp"

using namespace timeflip;

namespace {

constexpr double pi = std::numbers::pi;
std::mt19937_64 rng(24680);
std::uniform_real_distribution<double> u01(0.0, 1.0);

EncodingAxis random_axis() {
    std::normal_distribution<double> g(0.0, 1.0);
    return EncodingAxis::normalized(g(rng), g(rng), g(rng));
}

}  // namespace

TEST_CASE("rotation by zero is the identity") {
    CHECK(max_abs(su2_unitary(0.0, random_axis()) - identity2()) < 1e-15);
}

TEST_CASE("pi rotation about y") {
    const CMat u = su2_unitary(pi, EncodingAxis::y_axis());
    CMat expected(2, 2);
    expected(0, 1) = -1.0;
    expected(1, 0) = 1.0;
    CHECK(max_abs(u - expected) < 1e-15);
}

TEST_CASE("half-pi rotation about z is diagonal phases") {
    const CMat u = su2_unitary(pi / 2.0, EncodingAxis::z_axis());
    CHECK(std::abs(u(0, 0) - std::exp(Cplx(0.0, -pi / 4.0))) < 1e-15);
    CHECK(std::abs(u(1, 1) - std::exp(Cplx(0.0, pi / 4.0))) < 1e-15);
    CHECK(std::abs(u(0, 1)) + std::abs(u(1, 0)) < 1e-15);
}

TEST_CASE("unitarity and inverse-angle inversion on 1000 random points") {
    for (int t = 0; t < 1000; ++t) {
        const EncodingAxis axis = random_axis();
        const double theta = 4.0 * pi * (u01(rng) - 0.5);
        const CMat u = su2_unitary(theta, axis);
        CHECK(is_unitary(u, 1e-12));
        CHECK(max_abs(u * su2_unitary(-theta, axis) - identity2()) < 1e-12);
    }
}

TEST_CASE("transpose of a y rotation flips the angle") {
    for (double theta : {0.3, 1.7, 5.5}) {
        const CMat u = su2_unitary(theta, EncodingAxis::y_axis());
        CHECK(max_abs(u.transpose() - su2_unitary(-theta, EncodingAxis::y_axis())) < 1e-12);
    }
}

TEST_CASE("analytic derivative matches central finite differences") {
    const double h = 1e-6;
    for (int t = 0; t < 1000; ++t) {
        const EncodingAxis axis = random_axis();
        const double theta = 4.0 * pi * (u01(rng) - 0.5);
        const CMat fd = Cplx(1.0 / (2.0 * h)) *
                        (su2_unitary(theta + h, axis) - su2_unitary(theta - h, axis));
        CHECK(max_abs(su2_derivative(theta, axis) - fd) < 1e-8);
    }
}

TEST_CASE("derivative at zero angle is the generator") {
    const CMat d = su2_derivative(0.0, EncodingAxis::z_axis());
    CHECK(max_abs(d - (Cplx(0.0, -0.5) * pauli_z())) < 1e-15);
}

TEST_CASE("axis-angle derivative matches finite differences") {
    const double h = 1e-6;
    for (int t = 0; t < 200; ++t) {
        const double theta = 2.0 * pi * u01(rng);
        const double phi = pi * u01(rng);
        const double xi = 2.0 * pi * u01(rng);
        const CMat fd_phi =
            Cplx(1.0 / (2.0 * h)) * (su2_unitary(theta, polar_axis(phi + h, xi)) -
                                     su2_unitary(theta, polar_axis(phi - h, xi)));
        CHECK(max_abs(su2_axis_derivative(theta, phi, xi, AxisParam::phi) - fd_phi) < 1e-8);
        const CMat fd_xi =
            Cplx(1.0 / (2.0 * h)) * (su2_unitary(theta, polar_axis(phi, xi + h)) -
                                     su2_unitary(theta, polar_axis(phi, xi - h)));
        CHECK(max_abs(su2_axis_derivative(theta, phi, xi, AxisParam::xi) - fd_xi) < 1e-8);
    }
}

TEST_CASE("non-unit axis is rejected") {
    CHECK_THROWS_AS(EncodingAxis(0.5, 0.5, 0.5), std::invalid_argument);
}

TEST_CASE("pure qubit states") {
    const PureQubit zero(1.0, 2.7);
    CHECK(std::abs(zero.ket()[0] - Cplx(1.0)) < 1e-15);
    CHECK(std::abs(zero.ket()[1]) < 1e-15);

    const PureQubit plus_i(0.5, pi / 2.0);
    const CVec v = plus_i.ket();
    CHECK(std::abs(v[0] - Cplx(1.0 / std::sqrt(2.0))) < 1e-15);
    CHECK(std::abs(v[1] - Cplx(0.0, 1.0 / std::sqrt(2.0))) < 1e-15);

    const PureQubit plus(0.5, 0.0);
    CHECK(std::abs(plus.ket()[1] - Cplx(1.0 / std::sqrt(2.0))) < 1e-15);

    CHECK_THROWS_AS(PureQubit(1.5, 0.0), std::domain_error);
}

TEST_CASE("bloch round trip") {
    for (int t = 0; t < 100; ++t) {
        const PureQubit q(u01(rng), 2.0 * pi * u01(rng));
        const auto [sx, sy, sz] = q.bloch();
        CHECK(sx * sx + sy * sy + sz * sz == doctest::Approx(1.0).epsilon(1e-12));
        const CMat rho = BlochVector(sx, sy, sz).density();
        const CVec k = q.ket();
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                CHECK(std::abs(rho(i, j) - k[i] * std::conj(k[j])) < 1e-12);
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "timeflip/encoding.hpp"
#include "timeflip/noisy.hpp"
#include "timeflip/su2.hpp"

using namespace timeflip;

namespace {

constexpr double pi = std::numbers::pi;
std::mt19937_64 rng(13579);
std::uniform_real_distribution<double> u01(0.0, 1.0);

EncodingAxis random_axis() {
    std::normal_distribution<double> g(0.0, 1.0);
    return EncodingAxis::normalized(g(rng), g(rng), g(rng));
}

CVec random_state(std::size_t dim) {
    std::normal_distribution<double> g(0.0, 1.0);
    CVec v(dim);
    for (Cplx& a : v) a = Cplx(g(rng), g(rng));
    const double len = std::sqrt(norm2(v));
    for (Cplx& a : v) a /= len;
    return v;
}

BlochVector random_bloch() {
    const EncodingAxis dir = random_axis();
    const double len = u01(rng);
    return {len * dir.n1, len * dir.n2, len * dir.n3};
}

}  // namespace

TEST_CASE("flip gate block structure and unitarity") {
    const CMat u = su2_unitary(1.3, random_axis());
    const FlipGate g = flip_gate(u, 2);
    const CMat full = g.full();
    CHECK(is_unitary(full, 1e-12));
    // off-diagonal control blocks vanish
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(std::abs(full(i, 4 + j)) == 0.0);
            CHECK(std::abs(full(4 + i, j)) == 0.0);
        }
}

TEST_CASE("diagonal unitary gives identical blocks (transpose-symmetric case)") {
    const CMat u = su2_unitary(0.9, EncodingAxis::z_axis());
    const FlipGate g = flip_gate(u, 2);
    CHECK(max_abs(g.forward - g.backward) < 1e-12);
}

TEST_CASE("y-axis backward block equals the forward block at -theta") {
    const double theta = 1.1;
    const FlipGate g = flip_gate(su2_unitary(theta, EncodingAxis::y_axis()), 3);
    const FlipGate gm = flip_gate(su2_unitary(-theta, EncodingAxis::y_axis()), 3);
    CHECK(max_abs(g.backward - gm.forward) < 1e-12);
}

TEST_CASE("flip gate applied to control tensor probe equals encode_pure") {
    for (int t = 0; t < 50; ++t) {
        const CMat u = su2_unitary(2.0 * pi * u01(rng), random_axis());
        const PureQubit control(u01(rng), 2.0 * pi * u01(rng));
        const CVec probe = random_state(4);
        const CVec direct = flip_gate(u, 2).full() * kron(control.ket(), probe);
        const CVec enc = encode_pure(control, probe, u);
        for (std::size_t i = 0; i < direct.size(); ++i)
            CHECK(std::abs(direct[i] - enc[i]) < 1e-12);
        CHECK(is_normalized(enc, 1e-12));
    }
}

TEST_CASE("y-axis encoding of |+> control and |+i> probes is a pure phase") {
    // |Phi> = e^{-iN theta/2}/sqrt(2) (|0> + e^{iN theta}|1>) (x) |+i>^N
    const double theta = 0.8;
    const std::size_t n = 3;
    const CMat u = su2_unitary(theta, EncodingAxis::y_axis());
    CVec probe{1.0};
    const CVec plus_i = PureQubit(0.5, pi / 2.0).ket();
    for (std::size_t k = 0; k < n; ++k) probe = kron(probe, plus_i);
    const CVec enc = encode_pure(PureQubit(0.5, 0.0), probe, u);

    const double nt = static_cast<double>(n) * theta;
    CVec control{Cplx(1.0 / std::sqrt(2.0)),
                 std::exp(Cplx(0.0, nt)) / std::sqrt(2.0)};
    CVec expected = kron(control, probe);
    const Cplx phase = std::exp(Cplx(0.0, -nt / 2.0));
    for (Cplx& a : expected) a *= phase;
    for (std::size_t i = 0; i < enc.size(); ++i)
        CHECK(std::abs(enc[i] - expected[i]) < 1e-12);
}

TEST_CASE("collapsed control disables the flip") {
    const CMat u = su2_unitary(1.9, random_axis());
    const CVec probe = random_state(2);
    const CVec enc = encode_pure(PureQubit(1.0, 0.4), probe, u);
    const CVec fwd = u * probe;
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(std::abs(enc[i] - fwd[i]) < 1e-12);
        CHECK(std::abs(enc[2 + i]) < 1e-15);
    }
}

TEST_CASE("zero angle leaves control and probe unchanged") {
    const CVec probe = random_state(2);
    const PureQubit control(0.3, 1.2);
    const CVec enc = encode_pure(control, probe, su2_unitary(0.0, random_axis()));
    const CVec expected = kron(control.ket(), probe);
    for (std::size_t i = 0; i < enc.size(); ++i)
        CHECK(std::abs(enc[i] - expected[i]) < 1e-12);
}

TEST_CASE("encode_pure_derivative matches finite differences") {
    const double h = 1e-6;
    for (int t = 0; t < 50; ++t) {
        const EncodingAxis axis = random_axis();
        const double theta = 2.0 * pi * u01(rng);
        const PureQubit control(u01(rng), 2.0 * pi * u01(rng));
        const CVec probe = random_state(8);
        const CVec d = encode_pure_derivative(control, probe, su2_unitary(theta, axis),
                                              su2_derivative(theta, axis));
        const CVec hi = encode_pure(control, probe, su2_unitary(theta + h, axis));
        const CVec lo = encode_pure(control, probe, su2_unitary(theta - h, axis));
        for (std::size_t i = 0; i < d.size(); ++i)
            CHECK(std::abs(d[i] - (hi[i] - lo[i]) / (2.0 * h)) < 1e-8);
    }
}

TEST_CASE("factored channel blocks equal the exhaustive Kraus-string sum") {
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t % 2);
        const NoisyChannel ch = kraus_set(u01(rng), 2.0 * pi * u01(rng), random_axis());
        const PureQubit control(u01(rng), 2.0 * pi * u01(rng));
        std::vector<BlochVector> probes;
        for (std::size_t k = 0; k < n; ++k) probes.push_back(random_bloch());
        const CMat factored = flip_channel(ch.kraus, control, probes).dense();
        const CMat brute = flip_channel_brute_force(ch.kraus, control, probes);
        CHECK(max_abs(factored - brute) < 1e-10);
    }
}

TEST_CASE("encoded density is Hermitian with unit trace") {
    const NoisyChannel ch = kraus_set(0.7, 1.1, random_axis());
    const EncodedDensity enc = flip_channel(ch.kraus, PureQubit(0.4, 0.3),
                                            {random_bloch(), random_bloch()});
    const CMat rho = enc.dense();
    CHECK(max_abs(rho - rho.adjoint()) < 1e-12);
    Cplx trace = 0.0;
    for (std::size_t i = 0; i < rho.rows(); ++i) trace += rho(i, i);
    CHECK(std::abs(trace - Cplx(1.0)) < 1e-12);
}

TEST_CASE("single unitary Kraus reduces to the pure encoding") {
    const CMat u = su2_unitary(1.4, random_axis());
    const PureQubit control(0.35, 0.9);
    const PureQubit probe(0.6, 2.1);
    const auto [sx, sy, sz] = probe.bloch();
    const CMat rho = flip_channel({u}, control, {BlochVector(sx, sy, sz)}).dense();
    const CVec phi = encode_pure(control, probe.ket(), u);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(std::abs(rho(i, j) - phi[i] * std::conj(phi[j])) < 1e-12);
}

TEST_CASE("non-bistochastic Kraus set is rejected") {
    CMat k(2, 2);
    k(0, 0) = 1.0;  // projector: not trace preserving
    CHECK_THROWS_AS(flip_channel({k}, PureQubit(0.5, 0.0), {BlochVector(0, 0, 1)}),
                    std::invalid_argument);
}

#include <doctest.h>

#include <random>

#include "bellcoh/channels.hpp"
#include "bellcoh/error.hpp"
#include "support.hpp"

using namespace bellcoh;

namespace {

// 1 - e^{-1/2}, e^{-1}, -0.6 e^{-1}
constexpr double kQ5 = 0.393469340287366577;
constexpr double kE1 = 0.367879441171442322;
constexpr double kE1m06 = -0.220727664702865393;

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

bool params_close(const BellDiagonalParams& a, const BellDiagonalParams& b, double tol) {
    return close(a.c1, b.c1, tol) && close(a.c2, b.c2, tol) && close(a.c3, b.c3, tol);
}

}  // namespace

TEST_CASE("channel names and axes") {
    CHECK(channel_axis(ChannelKind::BitFlip) == PauliAxis::Axis1);
    CHECK(channel_axis(ChannelKind::BitPhaseFlip) == PauliAxis::Axis2);
    CHECK(channel_axis(ChannelKind::PhaseFlip) == PauliAxis::Axis3);
    for (ChannelKind k : kAllChannels) CHECK(parse_channel(channel_name(k)) == k);
    CHECK(channel_name(ChannelKind::BitPhaseFlip) == "bitphaseflip");
    CHECK_THROWS_AS(parse_channel("BitFlip"), ParseError);
    CHECK_THROWS_AS(parse_channel("depolarizing"), ParseError);
    CHECK_THROWS_AS(parse_channel(""), ParseError);

    CHECK_NOTHROW((ChannelSpec{ChannelKind::BitFlip, 0.1}.validate()));
    CHECK_THROWS_AS((ChannelSpec{ChannelKind::BitFlip, 0.0}.validate()), DomainError);
    CHECK_THROWS_AS((ChannelSpec{ChannelKind::BitFlip, -1.0}.validate()), DomainError);
    CHECK_THROWS_AS((ChannelSpec{ChannelKind::BitFlip, std::numeric_limits<double>::infinity()}.validate()),
                    DomainError);
}

TEST_CASE("noise_strength") {
    CHECK(noise_strength(0.1, 0.0) == 0.0);
    CHECK(close(noise_strength(0.1, 5.0), kQ5, 1e-15));
    CHECK(close(noise_strength(0.1, 1e4), 1.0, 1e-15));
    CHECK_THROWS_AS(noise_strength(0.1, -1.0), NegativeTime);
}

TEST_CASE("kraus_operators") {
    const auto k0 = kraus_operators(ChannelKind::BitFlip, 0.0);
    CHECK(max_abs_diff(k0[0], Mat2::identity()) == 0.0);
    CHECK(max_abs_diff(k0[1], Mat2{}) == 0.0);

    const double r = std::sqrt(0.5);
    const auto full = kraus_operators(ChannelKind::PhaseFlip, 1.0);
    CHECK(max_abs_diff(full[0], Mat2::identity() * Complex{r}) < 1e-15);
    CHECK(max_abs_diff(full[1], pauli::z() * Complex{r}) < 1e-15);

    const auto half = kraus_operators(ChannelKind::BitPhaseFlip, 0.5);
    CHECK(max_abs_diff(half[0], Mat2::identity() * Complex{std::sqrt(0.75)}) < 1e-15);
    CHECK(max_abs_diff(half[1], pauli::y() * Complex{0.5}) < 1e-15);

    for (ChannelKind k : kAllChannels)
        for (double q : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const auto ks = kraus_operators(k, q);
            const Mat2 sum = ks[0].adjoint() * ks[0] + ks[1].adjoint() * ks[1];
            CHECK(max_abs_diff(sum, Mat2::identity()) <= 1e-14);
        }

    CHECK_THROWS_AS(kraus_operators(ChannelKind::BitFlip, -0.1), DomainError);
    CHECK_THROWS_AS(kraus_operators(ChannelKind::BitFlip, 1.1), DomainError);
}

TEST_CASE("apply_channel_both") {
    const auto fig3 = to_density_matrix({0.6, -0.6, 1});
    CHECK(max_abs_diff(apply_channel_both(fig3, ChannelKind::BitFlip, 0.0).matrix(), fig3.matrix()) < 1e-15);

    const auto out = from_density_matrix(apply_channel_both(fig3, ChannelKind::BitFlip, noise_strength(0.1, 5.0)));
    CHECK(out.is_bell_diagonal);
    CHECK(params_close(out.params, {0.6, kE1m06, kE1}, 1e-12));

    const auto dephased =
        from_density_matrix(apply_channel_both(to_density_matrix({1, -0.6, 0.6}), ChannelKind::PhaseFlip, 1.0));
    CHECK(params_close(dephased.params, {0, 0, 0.6}, 1e-12));

    CHECK_THROWS_AS(apply_channel_both(fig3, ChannelKind::PhaseFlip, 2.0), DomainError);

    // Trace preservation on general inputs.
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        const DensityMatrix m(testing::random_density(rng));
        for (ChannelKind k : kAllChannels) {
            const auto o = apply_channel_both(m, k, 0.37);
            CHECK(close(o.matrix().trace().real(), 1.0, 1e-13));
        }
    }
}

TEST_CASE("one-sided channel acts on the requested qubit") {
    // Phase flip at q = 1 fully dephases |+> on qubit B and leaves qubit A alone.
    const Mat4 out = apply_channel_one(testing::zero_plus_product(), ChannelKind::PhaseFlip, 1.0, Subsystem::B);
    CHECK(max_abs_diff(reduced_state(out, Subsystem::B), Mat2::identity() * Complex{0.5}) < 1e-15);
    CHECK(max_abs_diff(reduced_state(out, Subsystem::A), testing::ket_projector(1, 0)) < 1e-15);

    const Mat4 untouched = apply_channel_one(testing::zero_plus_product(), ChannelKind::PhaseFlip, 1.0, Subsystem::A);
    CHECK(max_abs_diff(untouched, testing::zero_plus_product()) < 1e-15);
}

TEST_CASE("evolve_params") {
    const BellDiagonalParams fig3{0.6, -0.6, 1};
    for (ChannelKind k : kAllChannels) CHECK(evolve_params(fig3, {k, 0.1}, 0.0) == fig3);

    CHECK(params_close(evolve_params(fig3, {ChannelKind::BitFlip, 0.1}, 5.0), {0.6, kE1m06, kE1}, 1e-15));
    const double tbar = 2.554128118829953;
    CHECK(params_close(evolve_params({1, -0.6, 0.6}, {ChannelKind::PhaseFlip, 0.1}, tbar), {0.6, -0.36, 0.6}, 1e-13));

    CHECK_THROWS_AS(evolve_params({1, 1, 1}, {ChannelKind::PhaseFlip, 0.1}, 1.0), NonPhysicalState);
    CHECK_THROWS_AS(evolve_params(fig3, {ChannelKind::PhaseFlip, 0.1}, -1.0), NegativeTime);
}

TEST_CASE("Kraus evolution agrees with the closed form") {
    std::mt19937_64 rng(100);
    std::uniform_real_distribution<double> time(0.0, 40.0), rate(0.01, 1.0);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p0 = random_physical_params(rng);
        const ChannelSpec spec{kAllChannels[static_cast<std::size_t>(pick(rng))], rate(rng)};
        const double t = time(rng);
        const auto kraus = from_density_matrix(
            apply_channel_both(to_density_matrix(p0), spec.kind, noise_strength(spec.gamma, t)));
        CHECK(kraus.is_bell_diagonal);
        CHECK(params_close(kraus.params, evolve_params(p0, spec, t), 1e-12));
    }
}

TEST_CASE("closed-form evolution is a physical semigroup") {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> time(0.0, 20.0);
    for (int trial = 0; trial < 300; ++trial) {
        const auto p0 = random_physical_params(rng);
        for (ChannelKind k : kAllChannels) {
            const ChannelSpec spec{k, 0.1};
            const double t1 = time(rng), t2 = time(rng);
            const auto two_step = evolve_params(evolve_params(p0, spec, t1), spec, t2);
            CHECK(params_close(two_step, evolve_params(p0, spec, t1 + t2), 1e-13));
            CHECK(is_physical(evolve_params(p0, spec, t1)));
            CHECK(evolve_params(p0, spec, t1)[channel_axis(k)] == p0[channel_axis(k)]);
        }
    }
}

TEST_CASE("bit flip preserves the surface c2 = -c1 c3") {
    std::mt19937_64 rng(102);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double c1 = u(rng), c3 = u(rng);
        const BellDiagonalParams p0{c1, -c1 * c3, c3};
        REQUIRE(is_physical(p0));
        for (int i = 0; i <= 30; ++i) {
            const auto p = evolve_params(p0, {ChannelKind::BitFlip, 0.1}, i * 1.0);
            CHECK(std::abs(p.c2 + p.c1 * p.c3) <= 1e-13);
        }
    }
}

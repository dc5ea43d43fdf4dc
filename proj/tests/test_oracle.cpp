#include <cmath>

#include <doctest.h>

#include "mqrot/errors.hpp"
#include "mqrot/oracle.hpp"
#include "mqrot/quantize.hpp"

using namespace mqrot;

TEST_CASE("Sturm bisection on the textbook Laplacian") {
    // free particle on [0, 1], Dirichlet: eigenvalues (j pi)^2 + O(h^2)
    const int N = 1000;
    const double h = 1.0 / (N + 1);
    TridiagonalMatrix t;
    t.h = h;
    t.diag.assign(N, 2.0 / (h * h));
    t.off.assign(N - 1, -1.0 / (h * h));
    const auto ev = lowest_eigenvalues(t, 3);
    for (int j = 1; j <= 3; ++j) {
        const double exact = j * M_PI * j * M_PI;
        // leading FD error term is exact^2 h^2 / 12
        CHECK(std::abs(ev[j - 1] - exact) <= 1.3 * exact * exact * h * h / 12.0);
    }
}

TEST_CASE("oscillator spectrum at xi = 0") {
    const GridSpec g{10.0, 2000};
    auto e0 = lowest_eigenvalues_extrapolated(0, 0.0, g, 1);
    CHECK(e0[0] == doctest::Approx(2.0).epsilon(1e-4));

    auto e1 = lowest_eigenvalues_extrapolated(1, 0.0, g, 3);
    CHECK(e1[0] == doctest::Approx(4.0).epsilon(1e-4));
    CHECK(e1[1] == doctest::Approx(8.0).epsilon(1e-4));
    CHECK(e1[2] == doctest::Approx(12.0).epsilon(1e-4));

    auto ladder = lowest_eigenvalues_extrapolated(0, 0.0, g, 3);
    CHECK(ladder[1] == doctest::Approx(6.0).epsilon(1e-4));
    CHECK(ladder[2] == doctest::Approx(10.0).epsilon(1e-4));
}

TEST_CASE("terminated state eigenvalue at xi = sqrt(2)") {
    const GridSpec g{10.0, 2000};
    auto ev = lowest_eigenvalues_extrapolated(0, std::sqrt(2.0), g, 1);
    CHECK(ev[0] == doctest::Approx(4.0).epsilon(1e-4));
}

TEST_CASE("grid guards") {
    CHECK_THROWS_AS(build_operator(0, 0.0, {20.0, 600}), GridTooCoarse);
    CHECK_THROWS_AS(build_operator(0, 0.0, {10.0, 400}), InvalidParams);
}

TEST_CASE("grid convergence is second order") {
    double lam[3];
    int Ns[3] = {1000, 2000, 4000};
    for (int i = 0; i < 3; ++i)
        lam[i] = lowest_eigenvalues(build_operator(1, 0.0, {10.0, Ns[i]}), 1)[0];
    const double ratio = (lam[0] - lam[1]) / (lam[1] - lam[2]);
    CHECK(ratio >= 3.5);
    CHECK(ratio <= 4.5);
}

TEST_CASE("verify terminated modes") {
    PhysicalParams p{1, 1, 0, 1, 1};
    const GridSpec g{10.0, 2000};

    auto m1 = solve_level(p, 1, 0);
    auto rep1 = verify_mode(m1[0], g);
    CHECK(rep1.passed);
    CHECK(rep1.eigenindex == 0);
    CHECK(rep1.node_count == 0);
    CHECK(rep1.Lambda_numeric == doctest::Approx(4.0).epsilon(1e-4));

    auto m2 = solve_level(p, 2, 0);
    auto rep2 = verify_mode(m2[0], g);
    CHECK(rep2.passed);
    CHECK(rep2.eigenindex == 0);
    CHECK(rep2.Lambda_numeric == doctest::Approx(6.0).epsilon(1e-4));

    // n = 3, smaller root: one node, first excited of its own Hamiltonian
    auto m3 = solve_level(p, 3, 0);
    auto rep3 = verify_mode(m3[0], g);
    CHECK(rep3.passed);
    CHECK(rep3.eigenindex == 1);
    CHECK(rep3.node_count == 1);
    CHECK(rep3.Lambda_numeric == doctest::Approx(8.0).epsilon(1e-4));

    // detuned xi shifts the eigenvalue far outside tolerance
    QuantizedMode bad = m1[0];
    bad.xi_star *= 1.05;
    CHECK_THROWS_AS(verify_mode(bad, g), NoMatchingEigenvalue);
}

TEST_CASE("attractive coupling (theta < 0)") {
    PhysicalParams p{1, 1, 0, 1, -1};
    auto modes = solve_level(p, 1, 0);
    CHECK(modes[0].xi_star < 0.0);
    auto rep = verify_mode(modes[0], {10.0, 2000});
    CHECK(rep.passed);
    // one node from the sign-flipped linear term, so first excited state
    CHECK(rep.eigenindex == 1);
}

TEST_CASE("variational sandwich under domain truncation") {
    // same h, different r_max; the tighter box can only bias upward
    const double lam8 = lowest_eigenvalues(build_operator(0, std::sqrt(2.0), {8.0, 800}), 1)[0];
    const double lam12 = lowest_eigenvalues(build_operator(0, std::sqrt(2.0), {12.0, 1200}), 1)[0];
    CHECK(lam8 >= lam12 - 1e-9);
    CHECK(lam12 >= 4.0 - 1e-4 * 4.0);
}

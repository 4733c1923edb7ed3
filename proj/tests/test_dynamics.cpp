#include "doctest.h"
#include "symlie/dynamics.hpp"
#include "symlie/noether.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

using namespace symlie;

namespace {

Expr P(const char* s) { return parse(s); }

DynamicalSystem osc() { return DynamicalSystem::from_force(P("-x"), P("-y")); }

}  // namespace

TEST_CASE("harmonic oscillator period") {
    auto tr = integrate(osc(), {1, 0, 0, 0}, 2 * std::numbers::pi, 1e-3);
    CHECK(tr.t.back() == doctest::Approx(2 * std::numbers::pi).epsilon(1e-15));
    CHECK(std::fabs(tr.states.back()[0] - 1.0) < 1e-8);
    CHECK(std::fabs(tr.states.back()[1]) < 1e-8);
    for (std::size_t i = 1; i < tr.t.size(); ++i) REQUIRE(tr.t[i] > tr.t[i - 1]);
}

TEST_CASE("free particle moves on a straight line") {
    auto tr = integrate(DynamicalSystem::from_force(Expr(0), Expr(0)), {0, 0, 1, 2}, 3.0, 0.01);
    const auto& s = tr.states.back();
    CHECK(s[0] == doctest::Approx(3.0));
    CHECK(s[1] == doctest::Approx(6.0));
}

TEST_CASE("Kepler circular orbit keeps its radius") {
    auto sys = DynamicalSystem::from_potential(P("-1/sqrt(x^2+y^2)"));
    auto tr = integrate(sys, {1, 0, 0, 1}, 2 * std::numbers::pi, 1e-3);
    double worst = 0;
    for (const auto& s : tr.states) worst = std::max(worst, std::fabs(std::hypot(s[0], s[1]) - 1.0));
    CHECK(worst < 1e-7);
}

TEST_CASE("energy drift and RK4 order") {
    Lagrangian2D L{Metric2D::euclidean(), P("(x^2+y^2)/2")};
    Expr E = hamiltonian(L);
    auto a = conservation_drift(E, integrate(osc(), {1, 0, 0, 0}, 2 * std::numbers::pi, 1e-3));
    CHECK(a.max_drift <= 1e-8);
    auto err = [](double h) {
        const auto& s = integrate(osc(), {1, 0.5, 0.2, 0}, 10, h).states.back();
        return std::hypot(s[0] - (std::cos(10.0) + 0.2 * std::sin(10.0)), s[1] - 0.5 * std::cos(10.0));
    };
    double factor = err(0.1) / err(0.05);
    CHECK(factor >= 8);
    CHECK(factor <= 32);
}

TEST_CASE("Table 17 integral on V1") {
    auto sys = DynamicalSystem::from_potential(P("0.5*(x^2+y^2)+x^3"));
    auto tr = integrate(sys, {0.1, 0.2, 0, 0}, 20, 1e-3);
    CHECK(conservation_drift(P("vy*sin(t) - y*cos(t)"), tr).max_drift <= 1e-8);
    CHECK(conservation_drift(P("vy*cos(t) + y*sin(t)"), tr).max_drift <= 1e-8);
}

TEST_CASE("time reversal") {
    State ic{0.3, 0.1, 0.2, -0.1};
    auto fwd = integrate(osc(), ic, 5, 1e-3);
    auto back = integrate(osc(), fwd.states.back(), 0, 1e-3, 5);
    for (int i = 0; i < 4; ++i) CHECK(std::fabs(back.states.back()[i] - ic[i]) < 1e-7);
}

TEST_CASE("errors and divergence") {
    CHECK_THROWS_AS(integrate(osc(), {0, 0, 0, 0}, 1, 0), IntegrationError);
    auto sing = DynamicalSystem::from_potential(P("1/x"));
    CHECK_THROWS_AS(integrate(sing, {0, 0, 0, 0}, 1, 0.1), IntegrationError);
    auto blow = DynamicalSystem::from_force(P("x^3"), Expr(0));
    auto tr = integrate(blow, {1, 0, 1, 0}, 10, 0.01);
    CHECK(tr.diverged);
    CHECK(tr.t.back() < 10);
    CHECK_THROWS_AS(conservation_drift(P("vx + k"), tr), UnboundSymbol);
    CHECK_NOTHROW(conservation_drift(P("vx + k"), integrate(osc(), {1, 0, 0, 0}, 1, 0.1), {{"k", 2.0}}));
}

TEST_CASE("csv export") {
    auto tr = integrate(osc(), {1, 0, 0, 0}, 0.2, 0.1);
    std::ostringstream os;
    write_csv(tr, os);
    std::string s = os.str();
    CHECK(s.rfind("t,x,y,vx,vy\n", 0) == 0);
    CHECK(std::count(s.begin(), s.end(), '\n') == 4);
}

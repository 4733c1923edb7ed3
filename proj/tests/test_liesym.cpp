#include "doctest.h"
#include "symlie/liesym.hpp"

using namespace symlie;

namespace {

Expr P(const char* s) { return parse(s); }

PointVectorField V(const char* s) { return PointVectorField::parse(s); }

bool zero(const Expr& e) { return is_zero(e); }

bool has(const std::vector<SymmetryReport>& rs, const PointVectorField& X) {
    std::vector<PointVectorField> basis;
    for (const auto& r : rs) basis.push_back(r.vector);
    return in_span(basis, X);
}

DynamicalSystem pot(const char* v, Signature s = Signature::Euclidean) {
    return DynamicalSystem::from_potential(P(v), Metric2D::of(s));
}

}  // namespace

TEST_CASE("vector field parsing") {
    PointVectorField X = V("2*t; x; y");
    CHECK(zero(X.xi - P("2*t")));
    CHECK(X.point_symmetry());
    CHECK_THROWS_AS(V("1; x"), ParseError);
    CHECK_FALSE(V("vx; 0; 0").point_symmetry());
}

TEST_CASE("prolongation examples") {
    auto sys = DynamicalSystem::from_force(P("-x"), P("-y"));
    Prolongation p = prolong(V("2*t; x; y"), sys);
    CHECK(zero(p.G1[0] + P("vx")));
    CHECK(zero(p.G1[1] + P("vy")));
    CHECK(zero(p.lambda + Expr(2)));

    Prolongation q = prolong(V("1; 0; 0"), sys);
    for (const auto& e : {q.G1[0], q.G1[1], q.G2[0], q.G2[1], q.lambda}) CHECK(zero(e));

    Prolongation r = prolong(V("0; 0; sin(t)"), sys);
    CHECK(zero(r.G1[1] - P("cos(t)")));
    CHECK(zero(r.G2[1] + P("sin(t)")));
}

TEST_CASE("lie_check examples") {
    auto kepler = pot("-1/sqrt(x^2+y^2)");
    CHECK(lie_check(kepler, V("3/2*t; x; y")).pass);
    auto osc = DynamicalSystem::from_force(P("-x"), P("-y"));
    CHECK(lie_check(osc, V("0; sin(t); 0")).pass);
    LieCheck bad = lie_check(osc, V("0; x^2; 0"));
    CHECK_FALSE(bad.pass);
    CHECK(bad.split_max[0] > 0.0);
    CHECK(lie_check(kepler, V("1; 0; 0")).pass);
}

TEST_CASE("lie_check on a curved chart") {
    // polar chart of the plane with a central force; ∂θ is a symmetry
    Metric2D g = Metric2D::general(Expr(1), Expr(0), P("r^2"), {"r", "theta"});
    Expr Vr = P("-1/r");
    auto sys = DynamicalSystem::from_potential(Vr, g);
    CHECK(lie_check(sys, {Expr(0), {Expr(0), Expr(1)}}).pass);
    CHECK(lie_check(sys, {P("3/2*t"), {P("r"), Expr(0)}}).pass);
    CHECK_FALSE(lie_check(sys, {Expr(0), {Expr(1), Expr(0)}}).pass);
}

TEST_CASE("routes agree on the split example corpus") {
    std::vector<DynamicalSystem> systems{pot("0.5*(x^2+y^2)+x^3"), pot("-1/sqrt(x^2+y^2)"),
                                         DynamicalSystem::from_force(P("x+2"), P("y-1")),
                                         DynamicalSystem::from_force(P("exp(-2*x)*(1+y^2)"), P("exp(-2*x)*y"))};
    std::vector<PointVectorField> vs{V("1;0;0"), V("t;x;y"), V("0;sin(t);cos(t)*x"), V("t^2;t*x;t*y"),
                                     V("x;x^2;x*y"), V("0;y;-x"), V("exp(t);0;1")};
    for (const auto& s : systems)
        for (const auto& X : vs) CHECK_NOTHROW(lie_check(s, X));
}

TEST_CASE("time_basis") {
    auto b = time_basis(Number(-4));
    REQUIRE(b.size() == 2);
    CHECK(zero(b[0].T - P("sin(2*t)")));
    CHECK(zero(differentiate(b[1].intT, "t") - b[1].T));
    auto e = time_basis(Number(2));
    for (const auto& p : e) {
        CHECK(zero(differentiate(differentiate(p.T, "t"), "t") - Expr(2) * p.T));
        CHECK(zero(differentiate(p.T, "t") - p.dT));
        CHECK(zero(differentiate(p.intT, "t") - p.T));
    }
    auto z = time_basis(Number(0));
    CHECK(zero(z[1].T - P("t")));
}

TEST_CASE("case A1") {
    auto sys = DynamicalSystem::from_force(P("exp(-2*x)*(1+y^2)"), P("exp(-2*x)*y"));
    auto cat = catalog(Signature::Euclidean);
    auto r = solve_case_A1(sys, cat[0]);
    REQUIRE(r);
    CHECK(r->constants.at("d1") == Number(2));
    CHECK(r->check.pass);
    CHECK(zero(r->vector.xi - P("t")));

    auto kep = DynamicalSystem::from_force(P("-x*(x^2+y^2)^(-3/2)"), P("-y*(x^2+y^2)^(-3/2)"));
    auto h = solve_case_A1(kep, cat[3]);
    REQUIRE(h);
    CHECK(h->constants.at("d1") == Number(3));
    CHECK(zero(h->vector.xi - P("3/2*t")));

    auto rnd = DynamicalSystem::from_force(P("x^3 + 2*y - x*y^2 + 1"), P("x^2*y - 3*x + y^4"));
    CHECK_FALSE(solve_case_A1(rnd, cat[6]));
}

TEST_CASE("case A2") {
    auto cat = catalog(Signature::Euclidean);
    auto s1 = DynamicalSystem::from_force(P("-x + y^2"), P("y"));
    auto r1 = solve_case_A2(s1, cat[0]);
    REQUIRE(r1.size() == 2);
    CHECK(r1[0].constants.at("m") == Number(-1));
    CHECK(zero(r1[0].vector.eta[0] - P("sin(t)")));
    CHECK(zero(r1[1].vector.eta[0] - P("cos(t)")));

    auto hh = pot("0.5*(x^2+y^2)+x^3");
    auto r2 = solve_case_A2(hh, cat[1]);
    REQUIRE(r2.size() == 2);
    CHECK(zero(r2[0].vector.eta[1] - P("sin(t)")));
    CHECK(zero(r2[1].vector.eta[1] - P("cos(t)")));

    auto kep = DynamicalSystem::from_force(P("-x*(x^2+y^2)^(-3/2)"), P("-y*(x^2+y^2)^(-3/2)"));
    CHECK(solve_case_A2(kep, cat[0]).empty());
}

TEST_CASE("case A3") {
    auto lin = DynamicalSystem::from_force(P("x+2"), P("y-1"));
    auto a = solve_case_A3(lin);
    REQUIRE(a);
    CHECK(a->generators.size() == 15);
    CHECK(a->algebra == "sl(4,R)");
    CHECK(a->center[0] == Number(-2));
    CHECK(a->center[1] == Number(1));
    for (const auto& g : a->generators) CHECK(lie_check(lin, g.vector).pass);
    REQUIRE(a->spc_constants.size() == 2);
    CHECK(a->spc_constants[0].at("a0") == Number(1));
    CHECK(a->spc_constants[0].at("c2") == Number(1));

    auto osc = DynamicalSystem::from_force(P("-x"), P("-y"));
    auto b = solve_case_A3(osc);
    REQUIRE(b);
    CHECK(b->generators.size() == 15);

    CHECK_FALSE(solve_case_A3(DynamicalSystem::from_force(P("x^2"), P("y"))));
    CHECK_FALSE(solve_case_A3(DynamicalSystem::from_force(Expr(1), Expr(0))));
}

TEST_CASE("case B") {
    auto b = solve_case_B(pot("(x^2+y^2)/4"));
    bool b1 = false;
    for (const auto& r : b) {
        CHECK(r.check.pass);
        if (r.kind == LieCase::B1) {
            b1 = true;
            CHECK(r.constants.at("kappa") == Number(2));
        }
    }
    CHECK(b1);
    CHECK(b.size() == 8);
    CHECK(solve_case_B(pot("-1/sqrt(x^2+y^2)")).empty());
    CHECK(solve_case_B(pot("1")).empty());
}

TEST_CASE("full_solve on the Henon-Heiles V1") {
    auto hh = pot("0.5*(x^2+y^2)+x^3");
    auto rs = full_solve(hh);
    CHECK(rs.size() == 4);
    CHECK(has(rs, V("1;0;0")));
    CHECK(has(rs, V("0;0;sin(t)")));
    CHECK(has(rs, V("0;0;cos(t)")));
    CHECK(has(rs, V("0;0;y")));
    for (const auto& r : rs) CHECK(r.check.pass);
}

TEST_CASE("full_solve on Kepler-Ermakov case 1") {
    // F = -x/r^3 * H, H = h(y/x)/x with h = 1 + u^2
    auto sys = DynamicalSystem::from_force(P("-x*(x^2+y^2)^(-3/2)*(1+(y/x)^2)/x"),
                                           P("-y*(x^2+y^2)^(-3/2)*(1+(y/x)^2)/x"));
    auto cat = catalog(Signature::Euclidean);
    auto a2 = solve_case_A2(sys, cat[3]);
    REQUIRE(a2.size() == 2);
    CHECK(a2[0].constants.at("m") == Number(0));
    auto rs = full_solve(sys);
    CHECK(rs.size() == 3);
    CHECK(has(rs, V("1;0;0")));
    CHECK(has(rs, V("2*t;x;y")));
    CHECK(has(rs, V("t^2;t*x;t*y")));
}

TEST_CASE("full_solve on the free particle") {
    auto rs = full_solve(DynamicalSystem::from_force(Expr(0), Expr(0)));
    CHECK(rs.size() == 15);
    for (const auto& r : rs) CHECK(r.check.pass);
    for (const auto& c : catalog(Signature::Euclidean)) {
        if (c.kind == EntryKind::SPC) continue;
        CHECK(has(rs, PointVectorField::spatial(c.Y)));
    }
    CHECK(has(rs, V("t*x; x^2; x*y")));
    CHECK(has(rs, V("x; 0; 0")));
    CHECK_FALSE(has(rs, V("x; x^2; x*y")));
}

TEST_CASE("families are closed under their parameters") {
    auto hh = pot("0.5*(x^2+y^2)+x^3");
    auto rs = full_solve(hh);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int trial = 0; trial < 3; ++trial) {
        PointVectorField X;
        for (const auto& r : rs) X = X + r.vector.scaled(Expr::real(u(rng)));
        CHECK(lie_check(hh, X).pass);
    }
}

TEST_CASE("dt is always a symmetry") {
    for (const char* v : {"x^3*y", "exp(x)*cos(y)", "1/(1+x^2+y^2)", "x^2-y^2"}) {
        CHECK(lie_check(pot(v), V("1;0;0")).pass);
        CHECK(lie_check(pot(v, Signature::Lorentzian), V("1;0;0")).pass);
    }
}

#include "doctest.h"
#include "symlie/classify.hpp"

#include <set>

using namespace symlie;

namespace {

Expr P(const std::string& s) { return parse(s); }

const RowMatch* find(const MatchReport& r, int table, int line) {
    for (const auto& m : r.matches)
        if (m.row.table == table && m.row.line == line) return &m;
    return nullptr;
}

DynamicalSystem system_of(const RowFixture& f) {
    return f.potential ? DynamicalSystem::from_potential(P(f.V)) : DynamicalSystem::from_force(P(f.Fx), P(f.Fy));
}

// φ₁ − φ₂ is a constant
bool same_up_to_constant(const Expr& a, const Expr& b) {
    Expr d = a - b;
    std::vector<Expr> ds;
    for (const char* v : {"t", "x", "y", "vx", "vy"}) ds.push_back(differentiate(d, v));
    return is_zero(ds);
}

}  // namespace

TEST_CASE("row tables") {
    const auto& eu = family_rows(Signature::Euclidean);
    std::set<std::pair<int, int>> seen;
    for (const auto& r : eu) {
        CHECK(r.basis.size() == r.params.size());
        seen.insert({r.table, r.line});
    }
    CHECK(seen.size() == 55);
    for (int t = 4; t <= 16; ++t) CHECK(seen.count({t, 1}));
    for (const auto& r : family_rows(Signature::Lorentzian)) CHECK(r.applies == Applies::Potential);
}

TEST_CASE("fixture vectors pass lie_check") {
    int instances = 0;
    for (const auto& f : row_fixtures()) {
        if (f.table > 12) continue;
        auto sys = system_of(f);
        for (const auto& v : f.vectors) {
            INFO("T" << f.table << " l" << f.line << " " << f.label << " : " << v);
            CHECK(lie_check(sys, PointVectorField::parse(v)).pass);
        }
        ++instances;
    }
    CHECK(instances >= 40);
}

TEST_CASE("fixture vectors pass noether_check with the closed-form integrals") {
    for (const auto& f : row_fixtures()) {
        if (f.table < 13) continue;
        Lagrangian2D L{Metric2D::euclidean(), P(f.V)};
        REQUIRE(f.vectors.size() == f.integrals.size());
        for (std::size_t k = 0; k < f.vectors.size(); ++k) {
            INFO("T" << f.table << " l" << f.line << " " << f.label << " : " << f.vectors[k]);
            auto X = PointVectorField::parse(f.vectors[k]);
            NoetherCheck ch = noether_check(L, X);
            REQUIRE(ch.pass);
            REQUIRE(ch.gauge);
            Expr phi = noether_integral(L, X, *ch.gauge);
            CHECK(same_up_to_constant(phi, P(f.integrals[k])));
            CHECK(conserved(P(f.integrals[k]), L.system()));
        }
    }
}

TEST_CASE("each fixture matches its own row") {
    for (const auto& f : row_fixtures()) {
        INFO("T" << f.table << " l" << f.line << " " << f.label);
        ClassifyOptions opt;
        opt.table = f.table;
        MatchReport rep = f.potential ? classify_potential(P(f.V), Signature::Euclidean, opt)
                                      : classify_force(P(f.Fx), P(f.Fy), opt);
        const RowMatch* m = nullptr;
        for (const auto& r : rep.matches) {
            if (r.row.table != f.table || r.row.line != f.line) continue;
            bool same = true;
            for (const auto& [k, v] : f.constants) same = same && r.constants.count(k) && r.constants.at(k) == v;
            if (same) m = &r;
        }
        REQUIRE(m);
        for (const auto& r : rep.matches) CHECK(r.row.table == f.table);
    }
}

TEST_CASE("classify_force examples") {
    auto r1 = classify_force(P("exp(-x)*(1+y)"), P("exp(-x)*y^2"));
    const RowMatch* m = find(r1, 4, 1);
    REQUIRE(m);
    CHECK(m->constants.at("d") == Number(1));

    // Kepler-Ermakov force (x/r³)·h(y/x)/x with h = 1 + u²
    auto ke = classify_force(P("-x*(x^2+y^2)^(-3/2)*(1+(y/x)^2)/x"), P("-y*(x^2+y^2)^(-3/2)*(1+(y/x)^2)/x"));
    REQUIRE(find(ke, 4, 4));
    CHECK(find(ke, 4, 4)->constants.at("d") == Number(4));
    REQUIRE(find(ke, 5, 3));
    CHECK(find(ke, 5, 3)->constants.at("m") == Number(0));
    CHECK(find(ke, 5, 3)->vectors.size() == 2);

    auto kep = classify_force(P("-x*(x^2+y^2)^(-3/2)"), P("-y*(x^2+y^2)^(-3/2)"));
    REQUIRE(find(kep, 4, 4));
    CHECK(find(kep, 4, 4)->constants.at("d") == Number(3));
    CHECK_FALSE(find(kep, 5, 3));

    CHECK(classify_force(P("y^5 + x"), P("x^7 + 1")).unmatched());
    CHECK(classify_force(P("y^5 + x^2*y"), P("x^7 - y^3 + 1")).unmatched());

    // two monomials always scale: x∂x + (4/3)y∂y with d = −17/3
    auto mono = classify_force(P("y^5"), P("x^7"));
    REQUIRE(find(mono, 6, 3));
    CHECK(find(mono, 6, 3)->constants.at("h") == Number(Rational{4, 3}));
    CHECK(find(mono, 6, 3)->constants.at("d") == Number(Rational{-17, 3}));
}

TEST_CASE("classify_potential on the Henon-Heiles family") {
    auto v1 = classify_potential(P("0.5*(x^2+y^2)+x^3"));
    REQUIRE(find(v1, 8, 6));
    CHECK(find(v1, 8, 6)->constants.at("d") == Number(0));
    REQUIRE(find(v1, 9, 2));
    CHECK(find(v1, 9, 2)->constants.at("m") == Number(-1));
    REQUIRE(find(v1, 15, 2));
    CHECK(find(v1, 15, 2)->noether.size() == 2);

    auto v3 = classify_potential(P("0.5*(x^2+y^2)+(2*y+x)^3"));
    REQUIRE(find(v3, 12, 1));
    CHECK(find(v3, 12, 1)->constants.at("m") == Number(-1));
    REQUIRE(find(v3, 10, 4));
    CHECK(find(v3, 10, 4)->constants.at("d") == Number(0));
    CHECK(find(v3, 10, 4)->constants.at("a") == Number(-2));
    CHECK(in_span({PointVectorField::parse("0; (-2*x+y)*(-2); -2*x+y")}, find(v3, 10, 4)->vectors[0]));
}

TEST_CASE("table filter") {
    ClassifyOptions opt;
    opt.table = 9;
    auto r = classify_potential(P("0.5*(x^2+y^2)+x^3"), Signature::Euclidean, opt);
    REQUIRE(r.matches.size() == 1);
    CHECK(r.matches[0].row.table == 9);
    opt.table = 4;
    CHECK(classify_potential(P("0.5*(x^2+y^2)+x^3"), Signature::Euclidean, opt).unmatched());
}

TEST_CASE("Lorentzian rows use the boost") {
    auto r = classify_potential(P("-(y-x)^2/2"), Signature::Lorentzian);
    REQUIRE(find(r, 14, 1));
    CHECK(in_span({PointVectorField::parse("0; 1; 1")}, find(r, 14, 1)->vectors[0]));
    REQUIRE(find(r, 8, 3));
    CHECK(find(r, 8, 3)->vectors[0].str() == "t*dt + y*dx + x*dy");
}

TEST_CASE("homogeneity reading of Table 8 line 4") {
    for (const auto& f : row_fixtures()) {
        if (f.table != 8 || f.line != 4) continue;
        Expr V = P(f.V);
        Number d = f.constants.at("d");
        auto m = find(classify_potential(V), 8, 4);
        REQUIRE(m);
        CHECK(m->constants.at("d") == d);
        Expr h = Expr::var("x") * differentiate(V, "x") + Expr::var("y") * differentiate(V, "y") - Expr(Number(2) - d) * V;
        CHECK(is_zero({differentiate(h, "x"), differentiate(h, "y")}));
    }
}

TEST_CASE("reported vectors are symmetries") {
    const char* pots[] = {"0.5*(x^2+y^2)+x^3", "y/x^3", "-1/sqrt(x^2+y^2)", "x + y^2", "exp(x)*y", "x^2*y - y^3/3",
                          "(x^2+y^2)/4 + 1/x^2"};
    for (const char* v : pots) {
        auto sys = DynamicalSystem::from_potential(P(v));
        Lagrangian2D L{Metric2D::euclidean(), P(v)};
        for (const auto& m : classify_potential(P(v)).matches) {
            for (const auto& X : m.vectors) CHECK(lie_check(sys, X).pass);
            for (const auto& n : m.noether) {
                CHECK(noether_check(L, n.vector).pass);
                CHECK(conserved(n.integral, sys));
            }
        }
    }
    auto rep = classify_force(P("y^2 + x"), P("x*y"));
    auto sys = DynamicalSystem::from_force(P("y^2 + x"), P("x*y"));
    for (const auto& m : rep.matches)
        for (const auto& X : m.vectors) CHECK(lie_check(sys, X).pass);
}

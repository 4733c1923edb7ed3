#include "doctest.h"
#include "symlie/geometry.hpp"

using namespace symlie;

namespace {

Expr P(const char* s) { return parse(s); }

bool zero(const Expr& e) { return is_zero(e); }

}  // namespace

TEST_CASE("christoffel of flat metrics vanishes") {
    for (const auto& g : {Metric2D::euclidean(), Metric2D::lorentzian()})
        for (const auto& e : christoffel(g).flat()) CHECK(e.is_zero_literal());
}

TEST_CASE("christoffel of the polar chart") {
    Metric2D g = Metric2D::general(Expr(1), Expr(0), P("r^2"), {"r", "theta"});
    Connection2D G = christoffel(g);
    CHECK(zero(G(0, 1, 1) + P("r")));
    CHECK(zero(G(1, 0, 1) - P("1/r")));
    CHECK(zero(G(1, 1, 0) - P("1/r")));
    CHECK(zero(G(0, 0, 0)));
    CHECK(zero(G(0, 0, 1)));
    CHECK(zero(G(1, 0, 0)));
    CHECK(zero(G(1, 1, 1)));
}

TEST_CASE("christoffel is symmetric in its lower indices") {
    std::vector<Metric2D> corpus{
        Metric2D::general(P("1+x^2"), P("x*y"), P("2+y^2")),
        Metric2D::general(P("exp(x)"), Expr(0), P("exp(-y)")),
        Metric2D::general(Expr(1), Expr(0), P("r^2"), {"r", "theta"}),
        Metric2D::general(P("1/(1+x^2+y^2)"), Expr(0), P("1/(1+x^2+y^2)")),
    };
    for (const auto& g : corpus) {
        Connection2D G = christoffel(g);
        for (int i = 0; i < 2; ++i) CHECK(zero(G(i, 0, 1) - G(i, 1, 0)));
    }
}

TEST_CASE("singular metric is rejected") {
    CHECK_THROWS_AS(Metric2D::general(P("x"), P("x"), P("x")), SingularMetric);
}

TEST_CASE("lie derivative of the metric") {
    Metric2D e = Metric2D::euclidean();
    Mat2 a = lie_derivative_metric({Expr(1), Expr(0)}, e);
    Mat2 b = lie_derivative_metric({P("x"), P("y")}, e);
    Mat2 c = lie_derivative_metric({P("y"), P("-x")}, e);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            CHECK(zero(a[i][j]));
            CHECK(zero(b[i][j] - Expr(2) * e.g[i][j]));
            CHECK(zero(c[i][j]));
        }
}

TEST_CASE("lie derivative of vectors") {
    Vec2 r = lie_derivative_vector({Expr(1), Expr(0)}, {P("exp(-2*x)"), Expr(0)});
    CHECK(zero(r[0] + P("2*exp(-2*x)")));
    CHECK(zero(r[1]));
    auto s = solve_linear_constants({r[0] + P("d*exp(-2*x)"), r[1]}, {"d"});
    REQUIRE(s);
    CHECK(s->get("d") == Number(2));

    Vec2 F{P("x^2*sin(y)"), P("exp(x*y)")};
    Vec2 self = lie_derivative_vector(F, F);
    CHECK(zero(self[0]));
    CHECK(zero(self[1]));

    // Kepler force under the homothety: [H, F] = -3F, so L_H F + d F = 0 at d = 3
    Vec2 kep{P("-x*(x^2+y^2)^(-3/2)"), P("-y*(x^2+y^2)^(-3/2)")};
    Vec2 k = lie_derivative_vector({P("x"), P("y")}, kep);
    CHECK(zero(k[0] + Expr(3) * kep[0]));
    auto dk = solve_linear_constants({k[0] + P("d") * kep[0], k[1] + P("d") * kep[1]}, {"d"});
    REQUIRE(dk);
    CHECK(dk->get("d") == Number(3));
}

TEST_CASE("lie derivative of the connection") {
    Connection2D flat;
    for (const auto& e : lie_derivative_connection({Expr(1), Expr(0)}, flat).flat()) CHECK(zero(e));
    for (const auto& e : lie_derivative_connection({P("x"), Expr(0)}, flat).flat()) CHECK(zero(e));
    Connection2D L = lie_derivative_connection({P("x^2"), P("x*y")}, flat);
    // 2 φ_(,j δ_k)^i with φ = x
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                int expect = (i == k && j == 0) + (i == j && k == 0);
                CHECK(zero(L(i, j, k) - Expr(expect)));
            }
}

TEST_CASE("classify_collineation examples") {
    Metric2D e = Metric2D::euclidean();
    auto hv = classify_collineation({P("x"), P("y")}, e);
    CHECK(hv.cls == Collineation::HV);
    REQUIRE(hv.psi);
    CHECK(hv.psi->is_one_literal());

    auto spc = classify_collineation({P("x^2"), P("x*y")}, e);
    CHECK(spc.cls == Collineation::SPC);
    REQUIRE(spc.phi);
    CHECK(zero(*spc.phi - P("x")));

    auto boost = classify_collineation({P("y"), P("x")}, Metric2D::lorentzian());
    CHECK(boost.cls == Collineation::KV);
    CHECK_FALSE(boost.gradient);

    CHECK(classify_collineation({P("x^3"), Expr(0)}, e).cls == Collineation::None);
    // conformal but not homothetic: x²−y², 2xy is holomorphic
    CHECK(classify_collineation({P("x^2-y^2"), P("2*x*y")}, e).cls == Collineation::CKV);
    // rotation in the polar chart is ∂θ
    Metric2D polar = Metric2D::general(Expr(1), Expr(0), P("r^2"), {"r", "theta"});
    CHECK(classify_collineation({Expr(0), Expr(1)}, polar).cls == Collineation::KV);
    CHECK(classify_collineation({P("r"), Expr(0)}, polar).cls == Collineation::HV);
}

TEST_CASE("catalog") {
    for (Signature s : {Signature::Euclidean, Signature::Lorentzian}) {
        Metric2D g = Metric2D::of(s);
        auto cat = catalog(s);
        REQUIRE(cat.size() == 10);
        for (const auto& c : cat) {
            auto info = classify_collineation(c.Y, g);
            CHECK_MESSAGE(c.matches(info), signature_name(s) << " " << c.label << " got "
                                                             << collineation_name(info.cls));
            if (c.S) {
                Vec2 low = g.lower(c.Y);
                CHECK(zero(low[0] - differentiate(*c.S, "x")));
                CHECK(zero(low[1] - differentiate(*c.S, "y")));
            }
        }
    }
    CHECK(catalog(Signature::Lorentzian)[2].label == "y*dx + x*dy");
    CHECK_THROWS(catalog(Signature::General));
}

TEST_CASE("catalog invariants and monotone classes") {
    for (Signature s : {Signature::Euclidean, Signature::Lorentzian}) {
        Metric2D g = Metric2D::of(s);
        for (const auto& c : catalog(s)) {
            switch (c.kind) {
                case EntryKind::GradientKV:
                case EntryKind::NongradientKV:
                    CHECK(is_killing(c.Y, g));
                    CHECK(is_homothetic(c.Y, g, Expr(0)));
                    CHECK(is_affine(c.Y, g));
                    break;
                case EntryKind::HV:
                    CHECK(is_homothetic(c.Y, g, Expr(1)));
                    CHECK(is_affine(c.Y, g));
                    break;
                case EntryKind::AC: CHECK(is_affine(c.Y, g)); break;
                case EntryKind::SPC: {
                    CHECK_FALSE(is_affine(c.Y, g));
                    auto info = classify_collineation(c.Y, g);
                    REQUIRE(info.phi_grad);
                    CHECK((*info.phi_grad)[0].is_num());
                    CHECK((*info.phi_grad)[1].is_num());
                    break;
                }
            }
        }
    }
}

TEST_CASE("vector printing") {
    CHECK(vector_string({P("y"), P("-x")}) == "y*dx - x*dy");
    CHECK(vector_string({Expr(1), Expr(0)}) == "dx");
}

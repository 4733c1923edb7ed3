#include "symlie/classify.hpp"

namespace symlie {

namespace {

using S = std::string;

S f(const S& u) { return "(1+(" + u + ")^2)"; }
S g(const S& u) { return "(" + u + ")"; }
S n(int v) { return "(" + std::to_string(v) + ")"; }

const S r = "sqrt(x^2+y^2)";
const S th = "atan2(y,x)";
const S thp = "(-atan2(y,x))";   // (y∂x − x∂y)θ = 1

struct Builder {
    std::vector<RowFixture> out;

    // table forces are −F in the engine's convention
    void force(int table, int line, const S& label, const S& Fx, const S& Fy, std::vector<S> vecs,
               Constants c) {
        RowFixture x;
        x.table = table;
        x.line = line;
        x.label = label;
        x.Fx = "-(" + Fx + ")";
        x.Fy = "-(" + Fy + ")";
        x.vectors = std::move(vecs);
        x.constants = std::move(c);
        out.push_back(std::move(x));
    }

    void pot(int table, int line, const S& label, const S& V, std::vector<S> vecs, Constants c,
             std::vector<S> integrals = {}) {
        RowFixture x;
        x.table = table;
        x.line = line;
        x.label = label;
        x.potential = true;
        x.V = V;
        x.vectors = std::move(vecs);
        x.constants = std::move(c);
        x.integrals = std::move(integrals);
        out.push_back(std::move(x));
    }
};

// Cartesian components from polar ones on the orthonormal frame; sign = +1 for θ = atan2(y,x),
// −1 for the opposite orientation.
std::pair<S, S> polar(const S& Fr, const S& Ft, int sign) {
    S s = sign > 0 ? "" : "-";
    return {"(x*" + Fr + " - " + s + "y*" + Ft + ")/" + r, "(y*" + Fr + " + " + s + "x*" + Ft + ")/" + r};
}

S half_d(int d) { return n(d) + "/2*t"; }

struct Profile {
    S T, I, dT;
};

std::vector<Profile> profiles(int m) {
    std::vector<Profile> ps;
    for (const auto& p : time_basis(Number(m)))
        ps.push_back({"(" + to_string(p.T) + ")", "(" + to_string(p.intT) + ")", "(" + to_string(p.dT) + ")"});
    return ps;
}

const S E = "((vx^2+vy^2)/2 + V)";

S energy(const S& V) {
    S e = E;
    e.replace(e.find('V'), 1, "(" + V + ")");
    return e;
}

}  // namespace

std::vector<RowFixture> row_fixtures() {
    Builder b;
    const S a = "1", bb = "2", c = "1", h = "3";
    const int ds[] = {0, 1, 2, 3};
    const int ms[] = {-1, 0, 1};

    // Table 4
    for (int d : ds) {
        S D = n(d), lab = "d=" + std::to_string(d), t = half_d(d);
        Constants k{{"d", Number(d)}};
        b.force(4, 1, lab, "exp(-" + D + "*x)*" + f("y"), "exp(-" + D + "*x)*" + g("y"), {t + "; 1; 0"}, k);
        b.force(4, 2, lab, "exp(-" + D + "*y)*" + f("x"), "exp(-" + D + "*y)*" + g("x"), {t + "; 0; 1"}, k);
        auto [px, py] = polar(f(r) + "*exp(-" + D + "*" + thp + ")", g(r) + "*exp(-" + D + "*" + thp + ")", -1);
        b.force(4, 3, lab, px, py, {t + "; y; -x"}, k);
        b.force(4, 4, lab, "x^(1-" + D + ")*" + f("y/x"), "x^(1-" + D + ")*" + g("y/x"), {t + "; x; y"}, k);
        b.force(4, 5, lab, "x^(1-" + D + ")*" + f("y"), "x^(-" + D + ")*" + g("y"), {t + "; x; 0"}, k);
        b.force(4, 6, lab, "y^(-" + D + ")*" + f("x"), "y^(1-" + D + ")*" + g("x"), {t + "; 0; y"}, k);
        b.force(4, 7, lab, "((x/y)*" + g("y") + " + " + f("y") + ")*exp(-" + D + "*x/y)",
                g("y") + "*exp(-" + D + "*x/y)", {t + "; y; 0"}, k);
        b.force(4, 8, lab, f("x") + "*exp(-" + D + "*y/x)", "((y/x)*" + f("x") + " + " + g("x") + ")*exp(-" + D + "*y/x)",
                {t + "; 0; x"}, k);
    }

    // Table 5
    for (int m : ms) {
        S M = n(m), lab = "m=" + std::to_string(m);
        Constants k{{"m", Number(m)}};
        std::vector<S> v1, v2, v3;
        for (const auto& p : profiles(m)) {
            v1.push_back("0; " + p.T + "; 0");
            v2.push_back("0; 0; " + p.T);
            v3.push_back("2*" + p.I + "; " + p.T + "*x; " + p.T + "*y");
        }
        b.force(5, 1, lab, "-" + M + "*x + " + f("y"), g("y"), v1, k);
        b.force(5, 2, lab, f("x"), "-" + M + "*y + " + g("x"), v2, k);
        b.force(5, 3, lab, "-" + M + "/4*x + x^(-3)*" + f("y/x"), "-" + M + "/4*y + y^(-3)*" + g("y/x"), v3, k);
    }

    // Table 6
    for (int d : ds) {
        S D = n(d), lab = "d=" + std::to_string(d), t = half_d(d);
        Constants k{{"d", Number(d)}};
        S u1 = "y-" + bb + "*x";
        b.force(6, 1, lab, f(u1) + "*exp(-" + D + "*x)", g(u1) + "*exp(-" + D + "*x)", {t + "; 1; " + bb}, k);
        S A = "(" + a + "+x)", B = "(" + bb + "+y)", u2 = B + "/" + A;
        b.force(6, 2, lab, f(u2) + "*" + A + "^(1-" + D + ")", g(u2) + "*" + A + "^(1-" + D + ")",
                {t + "; " + A + "; " + B}, k);
        // x-scaling coefficient 1, as in the listed vector
        S u3 = "(" + bb + "/" + h + "+y)*" + A + "^(-" + h + ")";
        b.force(6, 3, lab, f(u3) + "*" + A + "^(1-" + D + ")", g(u3) + "*" + A + "^(" + h + "-" + D + ")",
                {t + "; " + A + "; " + bb + "+" + h + "*y"}, k);
        S u4 = "y-x";
        b.force(6, 4, lab, "(" + f(u4) + "*x + " + g(u4) + ")*(y+x)^(-" + D + "/2)",
                "(" + f(u4) + "*y - " + g(u4) + ")*(y+x)^(-" + D + "/2)", {t + "; x+y; x+y"}, k);
        for (int av : {1, 2}) {
            S A5 = n(av), u5 = "y-x/" + A5, P = "(" + A5 + "*x+y)^(-" + D + "/(1+" + A5 + "^2))";
            S s5 = "(" + A5 + "*x+y)";
            b.force(6, 5, lab + ",a=" + std::to_string(av), A5 + "*" + P + "*(" + s5 + "*" + f(u5) + " - " + g(u5) + ")",
                    P + "*(" + s5 + "*" + f(u5) + " + " + A5 + "^2*" + g(u5) + ")",
                    {t + "; " + A5 + "^2*x+" + A5 + "*y; " + A5 + "*x+y"}, k);
        }
        S u6 = th + " - " + a + "*ln(" + r + ")";
        auto [px, py] = polar(f(u6) + "*" + r + "^(1-" + D + ")", g(u6) + "*" + r + "^(1-" + D + ")", 1);
        b.force(6, 6, lab, px, py, {t + "; x-" + a + "*y; " + a + "*x+y"}, k);
    }

    // Table 7
    for (int m : ms) {
        S M = n(m), lab = "m=" + std::to_string(m);
        Constants k{{"m", Number(m)}};
        S A = "(" + a + "+x)", B = "(" + bb + "+y)", u1 = "y-" + bb + "*x", u2 = B + "/" + A;
        std::vector<S> v1, v2;
        for (const auto& p : profiles(m)) {
            v1.push_back("0; " + p.T + "; " + bb + "*" + p.T);
            v2.push_back("2*" + p.I + "; " + p.T + "*" + A + "; " + p.T + "*" + B);
        }
        b.force(7, 1, lab, "-" + M + "*x + " + f(u1), "-" + M + "*" + bb + "*x + " + g(u1), v1, k);
        b.force(7, 2, lab, "-" + M + "/4*" + A + " + " + f(u2) + "*" + A + "^(-3)",
                "-" + M + "/4*" + B + " + " + g(u2) + "*" + A + "^(-3)", v2, k);
    }

    // Table 8
    for (int d : ds) {
        S D = n(d), lab = "d=" + std::to_string(d), t = half_d(d);
        Constants k{{"d", Number(d)}};
        b.pot(8, 1, lab, d == 0 ? c + "*x + " + f("y") : f("y") + "*exp(-" + D + "*x)", {t + "; 1; 0"}, k);
        b.pot(8, 2, lab, d == 0 ? c + "*y + " + f("x") : f("x") + "*exp(-" + D + "*y)", {t + "; 0; 1"}, k);
        b.pot(8, 3, lab, d == 0 ? c + "*" + thp + " + " + f(r) : f(r) + "*exp(-" + D + "*" + thp + ")",
              {t + "; y; -x"}, k);
        S v4 = d == 0   ? "x^2*" + f("y/x")
               : d == 2 ? c + "*ln(x) + " + f("y/x")
                        : "x^(2-" + D + ")*" + f("y/x");
        b.pot(8, 4, lab, v4, {t + "; x; y"}, k);
    }
    {
        Constants k{{"d", Number(0)}};
        b.pot(8, 5, "d=0", c + "*x^2 + " + f("y"), {"0; x; 0"}, k);
        b.pot(8, 6, "d=0", c + "*y^2 + " + f("x"), {"0; 0; y"}, k);
        b.pot(8, 7, "d=0", "x^2+y^2+" + c + "*x", {"0; y; 0"}, k);
        b.pot(8, 8, "d=0", "x^2+y^2+" + c + "*y", {"0; 0; x"}, k);
    }

    // Table 9
    for (int m : ms) {
        S M = n(m), lab = "m=" + std::to_string(m);
        Constants k{{"m", Number(m)}};
        std::vector<S> v1, v2, v3;
        for (const auto& p : profiles(m)) {
            v1.push_back("0; " + p.T + "; 0");
            v2.push_back("0; 0; " + p.T);
            v3.push_back("2*" + p.I + "; " + p.T + "*x; " + p.T + "*y");
        }
        b.pot(9, 1, lab, "-" + M + "*x^2/2 + " + c + "*x + " + f("y"), v1, k);
        b.pot(9, 2, lab, "-" + M + "*y^2/2 + " + c + "*y + " + f("x"), v2, k);
        b.pot(9, 3, lab, "-" + M + "/8*(x^2+y^2) + x^(-2)*" + f("y/x"), v3, k);
    }

    // Tables 10 and 11
    {
        S A = "(" + a + "+x)", B = "(" + bb + "+y)", u2 = B + "/" + A, u5 = th + " - " + a + "*ln(" + r + ")";
        S v1 = "; " + a + "; " + bb, v2 = "; " + A + "; " + B, v3 = "; x+y; x+y",
          v4 = "; " + a + "^2*x+" + a + "*y; " + a + "*x+y", v5 = "; x-" + a + "*y; " + a + "*x+y";
        auto k = [](int d) { return Constants{{"d", Number(d)}}; };
        S t0 = half_d(0), t3 = half_d(3), t2 = half_d(2), t1 = half_d(1), t4 = half_d(4);
        b.pot(10, 1, "d=0", f(a + "*y-" + bb + "*x"), {t0 + v1}, k(0));
        b.pot(10, 1, "d=3", "(" + c + " + " + f(a + "*y-" + bb + "*x") + ")*exp(-3*x/" + a + ")", {t3 + v1}, k(3));
        b.pot(10, 2, "d=0", f(u2) + "*" + A + "^2", {t0 + v2}, k(0));
        b.pot(10, 2, "d=3", f(u2) + "*" + A + "^(2-3)", {t3 + v2}, k(3));
        b.pot(10, 3, "d=0", f("y-x") + " + " + c + "*(x+y)^2", {t0 + v3}, k(0));
        b.pot(10, 3, "d=3", "(x+y)^(2-3/2)", {t3 + v3}, k(3));
        b.pot(10, 4, "d=0", c + "*(x^2+y^2) + " + f(a + "*y-x"), {t0 + v4}, k(0));
        b.pot(10, 4, "d=3", c + "*(" + a + "*x+y)^(2-3/(1+" + a + "^2))", {t3 + v4}, k(3));
        b.pot(10, 5, "d=0", f(u5) + "*(x^2+y^2)", {t0 + v5}, k(0));
        b.pot(10, 5, "d=3", f(u5) + "*" + r + "^(2-3)", {t3 + v5}, k(3));

        S u1 = "y-" + bb + "*x";
        b.pot(11, 1, "d=2", "(" + c + " + " + f(u1) + ")*exp(-2*x/" + a + ")", {t2 + v1}, k(2));
        b.pot(11, 1, "d=1", "(" + c + " + " + f(u1) + ")*exp(-x/" + a + ")", {t1 + v1}, k(1));
        b.pot(11, 2, "d=2", f(u2) + " + " + c + "*ln" + A, {t2 + v2}, k(2));
        b.pot(11, 2, "d=1", f(u2) + "*" + A, {t1 + v2}, k(1));
        b.pot(11, 3, "d=2", "(x+y)", {t2 + v3}, k(2));
        b.pot(11, 3, "d=1", "(x+y)^(3/2)", {t1 + v3}, k(1));
        b.pot(11, 4, "d=4", "ln(" + a + "*x+y)", {t4 + v4}, k(4));
        b.pot(11, 4, "d=1", "(" + a + "*x+y)^((1+2*" + a + "^2)/(1+" + a + "^2))", {t1 + v4}, k(1));
        b.pot(11, 5, "d=2", c + "*ln(" + r + ") + " + f(u5), {t2 + v5}, k(2));
        b.pot(11, 5, "d=1", c + "*" + r + " + " + f(u5) + "*" + r, {t1 + v5}, k(1));
    }

    // Table 12
    for (int m : ms) {
        S M = n(m), lab = "m=" + std::to_string(m);
        Constants k{{"m", Number(m)}};
        S A = "(" + a + "+x)", B = "(" + bb + "+y)";
        std::vector<S> v1, v2;
        for (const auto& p : profiles(m)) {
            v1.push_back("0; " + a + "*" + p.T + "; " + bb + "*" + p.T);
            v2.push_back("2*" + p.I + "; " + p.T + "*" + A + "; " + p.T + "*" + B);
        }
        b.pot(12, 1, lab, "-" + M + "/2*(x^2+y^2) + " + c + "*x + " + f(a + "*y-" + bb + "*x"), v1, k);
        b.pot(12, 2, lab, "-" + M + "/8*(x^2+y^2+2*" + a + "*x+2*" + bb + "*y) + " + A + "^(-2)*" + f(B + "/" + A), v2,
              k);
    }

    // Table 13: φ = 2ψtE − gᵢⱼYⁱvʲ + c₁t
    {
        S V1 = c + "*x + " + f("y"), V2 = c + "*y + " + f("x"), V3 = c + "*" + thp + " + " + f(r),
          V4 = "x^(-2)*" + f("y/x");
        b.pot(13, 1, "", V1, {"0; 1; 0"}, {{"c1", Number(-1)}}, {"-vx - t"});
        b.pot(13, 2, "", V2, {"0; 0; 1"}, {{"c1", Number(-1)}}, {"-vy - t"});
        b.pot(13, 3, "", V3, {"0; y; -x"}, {{"c1", Number(-1)}}, {"-(y*vx - x*vy) - t"});
        b.pot(13, 4, "", V4, {"2*t; x; y"}, {{"c1", Number(0)}}, {"2*t*" + energy(V4) + " - (x*vx + y*vy)"});
    }

    // Table 14
    {
        S A = "(" + a + "+x)", B = "(" + bb + "+y)";
        S V1 = f("y-" + bb + "*x") + " - " + c + "*x";
        S V2 = f("(x^2+y^2)/2 + " + a + "*y - " + bb + "*x");
        S V3 = "(x^2+y^2)^(-1)*" + f(thp + " - " + a + "*ln(" + r + ")");
        S V4 = f(B + "/" + A) + "*" + A + "^(-2) - " + c + "*" + A + "^(-2)*(x^2/2 + " + a + "*x)";
        b.pot(14, 1, "", V1, {"0; 1; " + bb}, {{"c1", Number(1)}}, {"-(vx + " + bb + "*vy) + t"});
        b.pot(14, 2, "", V2, {"0; " + a + "+y; " + bb + "-x"}, {{"c1", Number(0)}},
              {"-((" + a + "+y)*vx + (" + bb + "-x)*vy)"});
        b.pot(14, 3, "", V3, {"2*t; x+" + a + "*y; y-" + a + "*x"}, {{"c1", Number(0)}},
              {"2*t*" + energy(V3) + " - ((x+" + a + "*y)*vx + (y-" + a + "*x)*vy)"});
        b.pot(14, 4, "", V4, {"2*t; " + A + "; " + B}, {{"c1", Number(1)}},
              {"2*t*" + energy(V4) + " - (" + A + "*vx + " + B + "*vy) + t"});
    }

    // Tables 15 and 16: φ = 2ψ∫T·E − T·gᵢⱼYⁱvʲ + Ṫ·G + d·∫T
    for (int m : ms) {
        S M = n(m), lab = "m=" + std::to_string(m);
        S A = "(" + a + "+x)", B = "(" + bb + "+y)";
        S V1 = f("y") + " - " + c + "*x - " + M + "/2*x^2";
        S V2 = f("x") + " - " + c + "*y - " + M + "/2*y^2";
        S V3 = "x^(-2)*" + f("y/x") + " - " + M + "/8*(x^2+y^2)";
        S V4 = "-" + M + "/2*(x^2+y^2) - " + M + "/2*(y-" + bb + "*x)^2 + " + f("y-" + bb + "*x") + " - " + c + "*x";
        S V5 = f(B + "/" + A) + "*" + A + "^(-2) - " + c + "/2*" + A + "^(-2)*x*(x+2*" + a + ") - x*" + M + "*(x+2*" + a +
               ")/(8*" + A + "^4)*((" + A + "^2+" + a + "^2)*y*(y+2*" + bb + ") + x*(x+2*" + a + ")*(" + bb + "+" + A +
               ")*(-" + bb + "+" + A + "))";
        std::vector<S> x1, x2, x3, x4, x5, i1, i2, i3, i4, i5;
        for (const auto& p : profiles(m)) {
            x1.push_back("0; " + p.T + "; 0");
            x2.push_back("0; 0; " + p.T);
            x3.push_back("2*" + p.I + "; " + p.T + "*x; " + p.T + "*y");
            x4.push_back("0; " + p.T + "; " + bb + "*" + p.T);
            x5.push_back("2*" + p.I + "; " + p.T + "*" + A + "; " + p.T + "*" + B);
            i1.push_back("-" + p.T + "*vx + " + p.dT + "*x + " + c + "*" + p.I);
            i2.push_back("-" + p.T + "*vy + " + p.dT + "*y + " + c + "*" + p.I);
            i3.push_back("2*" + p.I + "*" + energy(V3) + " - " + p.T + "*(x*vx + y*vy) + " + p.dT + "*(x^2+y^2)/2");
            i4.push_back("-" + p.T + "*(vx + " + bb + "*vy) + " + p.dT + "*(x + " + bb + "*y) + " + c + "*" + p.I);
            i5.push_back("2*" + p.I + "*" + energy(V5) + " - " + p.T + "*(" + A + "*vx + " + B + "*vy) + " + p.dT +
                         "*(" + A + "^2+" + B + "^2)/2 + (" + c + " - " + M + "*(" + a + "^2+" + bb + "^2)/2)*" + p.I);
        }
        Constants k{{"m", Number(m)}};
        b.pot(15, 1, lab, V1, x1, k, i1);
        b.pot(15, 2, lab, V2, x2, k, i2);
        b.pot(15, 3, lab, V3, x3, k, i3);
        b.pot(16, 1, lab, V4, x4, k, i4);
        b.pot(16, 2, lab, V5, x5, k, i5);
    }
    return b.out;
}

}  // namespace symlie

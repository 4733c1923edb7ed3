#include "corpus.hpp"
#include "demos.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

using namespace symlie;

namespace {

Expr P(const std::string& s) { return parse(s); }
PointVectorField V(const std::string& s) { return PointVectorField::parse(s); }

struct Line {
    bool pass = true;
    std::string detail;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

int failures = 0;

void run(int n, const std::string& title, double budget_s, const std::function<Line()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Line l;
    try {
        l = body();
    } catch (const std::exception& e) {
        l.pass = false;
        l.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0 && secs >= budget_s) l.require(false, "runtime " + std::to_string(secs) + " s");
    std::printf("criterion %d %s  %s  (%.2f s)%s%s\n", n, l.pass ? "PASS" : "FAIL", title.c_str(), secs,
                l.detail.empty() ? "" : "  ", l.detail.c_str());
    for (const auto& note : l.notes) std::printf("    note: %s\n", note.c_str());
    std::fflush(stdout);
    if (!l.pass) ++failures;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

DynamicalSystem system_of(const RowFixture& f) {
    return f.potential ? DynamicalSystem::from_potential(P(f.V)) : DynamicalSystem::from_force(P(f.Fx), P(f.Fy));
}

bool same_up_to_constant(const Expr& a, const Expr& b) {
    Expr d = a - b;
    std::vector<Expr> ds;
    for (const char* v : {"t", "x", "y", "vx", "vy"}) ds.push_back(differentiate(d, v));
    return is_zero(ds);
}

bool same_span(const std::vector<PointVectorField>& got, const std::vector<PointVectorField>& want) {
    for (const auto& w : want)
        if (!in_span(got, w)) return false;
    for (const auto& g : got)
        if (!in_span(want, g)) return false;
    return got.size() == want.size();
}

std::string rq(std::mt19937_64& rng, int lo, int hi) {
    int p = std::uniform_int_distribution<int>(lo, hi)(rng);
    int d = std::uniform_int_distribution<int>(1, 4)(rng);
    return "(" + std::to_string(p) + "/" + std::to_string(d) + ")";
}

Line catalog_integrity() {
    Line l;
    SampleDomain dom;
    dom.atol = dom.rtol = 1e-9;
    dom.samples = 16;
    int n = 0;
    for (Signature s : {Signature::Euclidean, Signature::Lorentzian}) {
        Metric2D g = Metric2D::of(s);
        for (const auto& c : catalog(s)) {
            auto info = classify_collineation(c.Y, g, dom);
            l.require(c.matches(info), std::string(signature_name(s)) + " " + c.label + " classified as " +
                                           collineation_name(info.cls));
            ++n;
        }
    }
    l.require(n == 20, "expected 10 entries per signature");
    if (l.pass) l.detail = std::to_string(n) + " entries";
    return l;
}

Line table_regression() {
    Line l;
    int instances = 0, vectors = 0;
    for (const auto& f : row_fixtures()) {
        if (f.table > 12) continue;
        auto sys = system_of(f);
        for (const auto& v : f.vectors) {
            ++vectors;
            bool ok = false;
            try {
                ok = lie_check(sys, V(v)).pass;
            } catch (const RouteDisagreement&) {
            }
            l.require(ok, "T" + std::to_string(f.table) + " l" + std::to_string(f.line) + " " + f.label);
        }
        ++instances;
    }
    l.require(instances >= 40, "only " + std::to_string(instances) + " row instances");
    if (l.pass) l.detail = std::to_string(instances) + " row instances, " + std::to_string(vectors) + " vectors";
    return l;
}

Line noether_regression() {
    Line l;
    int instances = 0;
    for (const auto& f : row_fixtures()) {
        if (f.table < 13) continue;
        Lagrangian2D L{Metric2D::euclidean(), P(f.V)};
        std::string id = "T" + std::to_string(f.table) + " l" + std::to_string(f.line) + " " + f.label;
        l.require(f.vectors.size() == f.integrals.size(), id + " fixture");
        for (std::size_t k = 0; k < f.vectors.size() && k < f.integrals.size(); ++k) {
            auto X = V(f.vectors[k]);
            auto ch = noether_check(L, X);
            if (!ch.pass || !ch.gauge) {
                l.require(false, id + " noether_check: " + ch.diagnostic);
                continue;
            }
            Expr phi = noether_integral(L, X, *ch.gauge);
            l.require(same_up_to_constant(phi, P(f.integrals[k])), id + " integral form");
            l.require(conserved(phi, L.system()), id + " dphi/dt");
        }
        ++instances;
    }
    if (l.pass) l.detail = std::to_string(instances) + " row instances";
    return l;
}

Line henon_heiles() {
    Line l;
    auto demo = demo::henon_heiles();
    for (const auto& p : demo::henon_heiles_potentials()) {
        const auto* a = demo.find(p.id + "-lie");
        l.require(a && a->pass, p.id + " families: " + (a ? a->detail : "missing"));
    }
    // stated orbit for every integral
    const State ic{0.1, 0.2, 0.0, 0.0};
    int n = 0;
    for (const auto& p : demo::henon_heiles_potentials()) {
        auto sys = DynamicalSystem::from_potential(P(p.V));
        auto traj = integrate(sys, ic, 20.0, 1e-3);
        for (std::size_t i = 0; i < p.integrals.size(); ++i) {
            auto d = conservation_drift(P(p.integrals[i]), traj);
            ++n;
            if (traj.diverged)
                l.require(false, p.rows[i] + ": orbit diverges at t = " + fmt(traj.t.back()));
            else
                l.require(d.max_drift <= 1e-8, p.rows[i] + " drift " + fmt(d.max_drift));
        }
        if (traj.diverged) {
            auto mirrored = integrate(sys, p.ic, 20.0, 1e-3);
            double worst = 0;
            for (const auto& phi : p.integrals) worst = std::max(worst, conservation_drift(P(phi), mirrored).max_drift);
            l.notes.push_back(p.id + " from (" + fmt(p.ic[0]) + ", " + fmt(p.ic[1]) + ", 0, 0): " +
                              (mirrored.diverged ? "diverges" : "max drift " + fmt(worst)));
        }
    }
    if (l.pass) l.detail = std::to_string(n) + " integrals";
    return l;
}

Line kepler_ermakov() {
    Line l;
    auto r = demo::kepler_ermakov();
    for (const auto& a : r.assertions) l.require(a.pass, a.id + " (" + a.row + "): " + a.detail);
    if (l.pass) l.detail = std::to_string(r.assertions.size()) + " assertions";
    return l;
}

Line cosmology() {
    Line l;
    auto r = demo::cosmology();
    for (const char* id : {"chart", "literal-translation", "generic-noether", "k1-literal-lie", "k1-literal-noether"}) {
        const auto* a = r.find(id);
        l.require(a && a->pass, std::string(id) + ": " + (a ? a->detail : "missing"));
    }
    std::string hyper;
    for (const char* id : {"hyperbolic-translation", "k1-hyperbolic-lie", "k1-hyperbolic-noether"}) {
        const auto* a = r.find(id);
        hyper += std::string(hyper.empty() ? "" : ", ") + id + (a && a->pass ? " pass" : " fail");
    }
    l.notes.push_back("with V = exp(-2 artanh(x/y)): " + hyper);
    return l;
}

Line kepler_scaling() {
    Line l;
    Expr Vk = P("-1/sqrt(x^2+y^2)");
    auto sys = DynamicalSystem::from_potential(Vk);
    auto X = V("3/2*t; x; y");
    l.require(lie_check(sys, X).pass, "scaling fails lie_check");
    auto rep = classify_potential(Vk);
    bool row = false;
    for (const auto& m : rep.matches)
        if (m.row.table == 8 && m.row.line == 4 && m.constants.count("d") && m.constants.at("d") == Number(3))
            row = row || in_span(m.vectors, X);
    l.require(row, "no Table 8 line 4 match with d = 3");
    Lagrangian2D L{Metric2D::euclidean(), Vk};
    std::vector<PointVectorField> ns;
    for (const auto& r : noether_solve(L)) ns.push_back(r.vector);
    l.require(same_span(ns, {V("1;0;0"), V("0;y;-x")}), "Noether set differs from {dt, rotation}");
    l.require(!noether_check(L, X).pass, "scaling is Noether");
    return l;
}

Line linearizability() {
    Line l;
    std::mt19937_64 rng(20);
    const char* w2s[] = {"1 + %p*t^2", "exp(%p*t)", "2 + cos(%p*t)", "%p + %q*t", "1"};
    const char* fs[] = {"sin(%p*t)", "%q*t^2", "%p*exp(-t)", "0", "cosh(%q*t)"};
    auto fill = [&](std::string s) {
        for (auto k = s.find("%p"); k != std::string::npos; k = s.find("%p")) s.replace(k, 2, rq(rng, 1, 5));
        for (auto k = s.find("%q"); k != std::string::npos; k = s.find("%q")) s.replace(k, 2, rq(rng, -3, 3));
        return s;
    };
    for (int draw = 0; draw < 20; ++draw) {
        std::string gamma = rq(rng, -4, 4);
        std::string eps = std::uniform_int_distribution<int>(0, 1)(rng) ? "1" : "-1";
        std::string w2 = fill(w2s[std::uniform_int_distribution<int>(0, 4)(rng)]);
        std::string f = fill(fs[std::uniform_int_distribution<int>(0, 4)(rng)]);
        auto c = check_scalar({Expr(0), Expr(0), P(gamma), P(eps + "*(" + w2 + ")*x - (" + f + ")")});
        l.require(c.pass, "draw " + std::to_string(draw) + " gamma=" + gamma + " w2=" + w2 + " f=" + f);
    }
    auto sq = check_scalar({Expr(0), Expr(0), Expr(0), P("x^2")});
    l.require(!sq.pass && sq.r1.is_num() && sq.r1.number() == Number(6), "x'' + x^2: first residual " + to_string(sq.r1));
    for (const char* w2 : {"1", "1+t^2", "exp(t)"}) {
        SystemCoeffs k = SystemCoeffs::zero();
        k.d = {P(std::string("(") + w2 + ")*x"), P(std::string("(") + w2 + ")*y")};
        l.require(weyl_projective_vanishes(projective_connection(k)).pass, std::string("oscillator w2 = ") + w2);
    }
    return l;
}

Line kernel() {
    Line l;
    const double h = 1e-6;
    int checks = 0;
    for (const char* s : kExprCorpus) {
        Expr e = parse(s);
        Expr a = simplify(e);
        l.require(structurally_equal(a, simplify(a)), std::string("simplify not idempotent on ") + s);
        for (const std::string v : {"x", "y"}) {
            Expr d = differentiate(e, v);
            std::mt19937_64 rng(11);
            Compiled pe({e}, {"x", "y"});
            int i = v == "x" ? 0 : 1;
            for (auto p : sample_points(pe, SampleDomain{}, rng, 16)) {
                double exact = evaluate(d, {{"x", p[0]}, {"y", p[1]}});
                auto q = p;
                q[i] += h;
                double fp = evaluate(e, {{"x", q[0]}, {"y", q[1]}});
                q[i] -= 2 * h;
                double fm = evaluate(e, {{"x", q[0]}, {"y", q[1]}});
                double fd = (fp - fm) / (2 * h);
                ++checks;
                if (std::fabs(fd - exact) > 1e-6 * std::max(1.0, std::fabs(exact)))
                    l.require(false, std::string(s) + " d/d" + v);
            }
        }
    }
    // global error against x = cos t + 0.2 sin t, y = 0.5 cos t
    auto osc = DynamicalSystem::from_force(P("-x"), P("-y"));
    auto err = [&](double step) {
        auto tr = integrate(osc, {1, 0.5, 0.2, 0}, 10, step);
        const auto& s = tr.states.back();
        return std::hypot(s[0] - (std::cos(10.0) + 0.2 * std::sin(10.0)), s[1] - 0.5 * std::cos(10.0));
    };
    double factor = err(0.1) / err(0.05);
    l.require(factor >= 8 && factor <= 32, "RK4 order factor " + fmt(factor));
    if (l.pass) l.detail = std::to_string(checks) + " derivative samples, RK4 factor " + fmt(factor);
    return l;
}

// Random potential from a pool of shapes with symmetric and generic members.
std::string random_potential(std::mt19937_64& rng) {
    static const char* shapes[] = {
        "%p*(x^2+y^2) + %q*x^3",        "%p*(x^2+y^2) + %q*y^3",      "%p/sqrt(x^2+y^2)",
        "%p*(x^2+y^2) + %q/x^2",        "%p*y/x^3",                    "%p*x + %q*y",
        "%p*(x^2+y^2) + %q*x*y^2",      "%p*exp(x+y)",                 "%p*(x-y)^2 + %q",
        "%p*x^2 + %q*y^2",              "%p*(y/x)^2/(x^2+y^2)",        "%p*sin(x) + %q*y^2",
    };
    std::string s = shapes[std::uniform_int_distribution<int>(0, 11)(rng)];
    for (auto k = s.find("%p"); k != std::string::npos; k = s.find("%p")) s.replace(k, 2, rq(rng, 1, 4));
    for (auto k = s.find("%q"); k != std::string::npos; k = s.find("%q")) s.replace(k, 2, rq(rng, -3, 3));
    return s;
}

PointVectorField random_vector(std::mt19937_64& rng, const std::vector<CatalogEntry>& cat) {
    const auto& c = cat[std::uniform_int_distribution<std::size_t>(0, cat.size() - 1)(rng)];
    static const char* times[] = {"1", "t", "sin(t)", "cos(t)", "sinh(t)", "exp(t)"};
    Expr T = P(times[std::uniform_int_distribution<int>(0, 5)(rng)]);
    Expr xi(0);
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0: break;
        case 1: xi = Expr(2) * c.psi * Expr::var("t"); break;
        default: xi = Expr(1); break;
    }
    return PointVectorField{xi, {T * c.Y[0], T * c.Y[1]}}.simplified();
}

Line consistency() {
    Line l;
    std::mt19937_64 rng(10);
    std::vector<RowFixture> pool;
    for (const auto& f : row_fixtures())
        if (f.potential) pool.push_back(f);
    int noether_pass = 0, lie_pass = 0;
    for (int i = 0; i < 100; ++i) {
        Signature s = Signature::Euclidean;
        std::string Vtext;
        PointVectorField X;
        int kind = std::uniform_int_distribution<int>(0, 2)(rng);
        if (kind < 2) {
            const auto& f = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
            Vtext = f.V;
            X = kind == 0 ? V(f.vectors[std::uniform_int_distribution<std::size_t>(0, f.vectors.size() - 1)(rng)])
                          : random_vector(rng, catalog(s));
        } else {
            if (std::uniform_int_distribution<int>(0, 1)(rng)) s = Signature::Lorentzian;
            Vtext = random_potential(rng);
            X = random_vector(rng, catalog(s));
        }
        Lagrangian2D L{Metric2D::of(s), P(Vtext)};
        auto sys = L.system();
        std::string id = "pair " + std::to_string(i) + " [" + Vtext + ", " + X.str() + "]";
        LieCheck lc;
        try {
            lc = lie_check(sys, X);
        } catch (const RouteDisagreement&) {
            l.require(false, id + " routes disagree");
            continue;
        }
        l.require(lc.direct_pass == lc.split_pass, id + " routes disagree");
        bool np = noether_check(L, X).pass;
        noether_pass += np;
        lie_pass += lc.pass;
        if (np) l.require(lc.pass, id + " Noether but not Lie");
    }
    l.detail += std::string(l.detail.empty() ? "" : "; ") + std::to_string(noether_pass) + " Noether, " +
                std::to_string(lie_pass) + " Lie of 100";
    return l;
}

}  // namespace

int main() {
    run(1, "catalog integrity", 1.0, catalog_integrity);
    run(2, "table regression (Tables 4-12)", 30.0, table_regression);
    run(3, "Noether regression (Tables 13-16)", 0, noether_regression);
    run(4, "Henon-Heiles families and Table 17 drift", 0, henon_heiles);
    run(5, "Kepler-Ermakov", 0, kepler_ermakov);
    run(6, "scalar field cosmology", 0, cosmology);
    run(7, "Kepler scaling", 0, kepler_scaling);
    run(8, "linearizability", 10.0, linearizability);
    run(9, "kernel properties", 0, kernel);
    run(10, "Noether implies Lie, routes agree", 0, consistency);
    std::printf("%d of 10 criteria pass\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}

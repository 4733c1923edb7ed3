#include "symlie/noether.hpp"

#include <cmath>

namespace symlie {

namespace {

Expr d(const Expr& e, const std::string& v) { return differentiate(e, v, false); }

Expr tvar() { return Expr::var("t"); }

Expr half() { return Expr(Number(Rational{1, 2})); }

bool flat_catalog(const Metric2D& g) {
    return g.flat_cartesian() && g.signature != Signature::General && g.coords[0] == "x" && g.coords[1] == "y";
}

Vec2 lowered_velocity(const Metric2D& g) {
    const auto& v = DynamicalSystem::velocities();
    return g.lower({Expr::var(v[0]), Expr::var(v[1])});
}

Expr combine(const std::vector<Number>& c, const std::vector<Expr>& xs) {
    Expr acc(0);
    for (std::size_t k = 0; k < xs.size(); ++k)
        if (!c[k].is_zero()) acc = acc + Expr(c[k]) * xs[k];
    return acc;
}

std::string combo_label(const std::vector<Number>& c, const std::vector<CatalogEntry>& es) {
    std::string out;
    for (std::size_t k = 0; k < es.size(); ++k) {
        if (c[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (!c[k].is_one()) out += to_string(Expr(c[k])) + "*";
        out += "(" + es[k].label + ")";
    }
    return out;
}

Number snapped(double v) {
    if (auto q = snap_rational(v, 1000, 1e-7)) return Number(*q);
    return Number::real(v);
}

}  // namespace

Expr Lagrangian2D::lagrangian() const {
    const auto& v = DynamicalSystem::velocities();
    Vec2 low = lowered_velocity(metric);
    return half() * (low[0] * Expr::var(v[0]) + low[1] * Expr::var(v[1])) - V;
}

DynamicalSystem Lagrangian2D::system() const { return DynamicalSystem::from_potential(V, metric); }

Vec2 Lagrangian2D::euler_lagrange_residual() const {
    DynamicalSystem sys = system();
    const auto& v = DynamicalSystem::velocities();
    const auto& x = metric.coords;
    Expr L = lagrangian();
    Vec2 out;
    for (int i = 0; i < 2; ++i) out[i] = total_derivative(d(L, v[i]), sys) - d(L, x[i]);
    return out;
}

Expr hamiltonian(const Lagrangian2D& L) {
    const auto& v = DynamicalSystem::velocities();
    Vec2 low = lowered_velocity(L.metric);
    return simplify(half() * (low[0] * Expr::var(v[0]) + low[1] * Expr::var(v[1])) + L.V);
}

std::optional<Expr> reconstruct_gauge(const Lagrangian2D& L, const PointVectorField& X, std::string* why,
                                      const SampleDomain& dom) {
    auto fail = [&](const std::string& m) -> std::optional<Expr> {
        if (why) *why = m;
        return std::nullopt;
    };
    const auto& x = L.metric.coords;
    const std::string& t = "t";
    Vec2 A = L.metric.lower({d(X.eta[0], t), d(X.eta[1], t)});
    if (!is_zero(d(A[0], x[1]) - d(A[1], x[0]), dom)) return fail("gauge mixed partials differ");

    Expr source = -(d(L.V, x[0]) * X.eta[0] + d(L.V, x[1]) * X.eta[1] + L.V * d(X.xi, t));
    const double bases[][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0.5, 0.25}};
    std::string last = "no antiderivative in closed form";
    for (const auto& b : bases) {
        try {
            Expr x0 = Expr::real(b[0]), y0 = Expr::real(b[1]);
            if (b[0] == std::floor(b[0])) x0 = Expr(static_cast<std::int64_t>(b[0]));
            if (b[1] == std::floor(b[1])) y0 = Expr(static_cast<std::int64_t>(b[1]));
            Expr Ax0 = simplify(substitute(A[0], {{x[1], y0}}));
            auto F = antiderivative(Ax0, x[0], dom);
            auto G = antiderivative(A[1], x[1], dom);
            if (!F || !G) continue;
            Expr path = (*F - substitute(*F, {{x[0], x0}})) + (*G - substitute(*G, {{x[1], y0}}));
            Expr hdot = source - d(path, t);
            if (!is_zero({d(hdot, x[0]), d(hdot, x[1])}, dom)) return fail("gauge time part depends on position");
            Expr hd = simplify(substitute(hdot, {{x[0], x0}, {x[1], y0}}));
            if (!is_zero(hdot - hd, dom)) {
                last = "gauge singular at every base point";
                continue;
            }
            auto H = antiderivative(hd, t, dom);
            if (!H) {
                last = "time part of the gauge has no closed-form antiderivative";
                continue;
            }
            Expr f = simplify(path + *H);
            std::vector<std::string> syms;
            for (const auto& s : symbols(f)) syms.push_back(s);
            Compiled prog({f}, syms);
            std::mt19937_64 rng(dom.seed ^ 0xf00dULL);
            sample_points(prog, dom, rng, 4);
            return f;
        } catch (const DomainError&) {
            last = "gauge singular at every base point";
        }
    }
    return fail(last);
}

NoetherCheck noether_check(const Lagrangian2D& L, const PointVectorField& X, const SampleDomain& dom) {
    NoetherCheck c;
    const auto& x = L.metric.coords;
    if (!X.point_symmetry()) {
        c.diagnostic = "vector depends on velocities";
        return c;
    }
    if (!is_zero({d(X.xi, x[0]), d(X.xi, x[1])}, dom)) {
        c.diagnostic = "xi depends on position";
        return c;
    }
    Mat2 Lg = lie_derivative_metric(X.eta, L.metric);
    Expr xt = d(X.xi, "t");
    std::vector<Expr> kill;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) kill.push_back(Lg[i][j] - xt * L.metric.g[i][j]);
    auto kz = check_zero(kill, dom);
    c.killing_max = kz.max_abs;
    if (!kz.zero) {
        c.diagnostic = "eta is not a Killing or homothetic vector with 2psi = xi_t";
        return c;
    }
    std::string why;
    auto f = reconstruct_gauge(L, X, &why, dom);
    if (!f) {
        c.diagnostic = why;
        return c;
    }
    DynamicalSystem sys = L.system();
    Prolongation p = prolong(X, sys);
    const auto& v = DynamicalSystem::velocities();
    Expr Lag = L.lagrangian();
    Expr r = X.xi * d(Lag, "t") + total_derivative(X.xi, sys) * Lag - total_derivative(*f, sys);
    for (int i = 0; i < 2; ++i) r = r + X.eta[i] * d(Lag, x[i]) + p.G1[i] * d(Lag, v[i]);
    auto gz = check_zero({r}, dom);
    c.gauge_max = gz.max_abs;
    if (!gz.zero) {
        c.diagnostic = "Noether condition fails with the reconstructed gauge";
        return c;
    }
    c.gauge = *f;
    c.pass = true;
    return c;
}

Expr noether_integral(const Lagrangian2D& L, const PointVectorField& X, const Expr& f) {
    Vec2 low = lowered_velocity(L.metric);
    return simplify(X.xi * hamiltonian(L) - (X.eta[0] * low[0] + X.eta[1] * low[1]) + f);
}

bool conserved(const Expr& phi, const DynamicalSystem& sys, const SampleDomain& dom) {
    return is_zero(total_derivative(phi, sys), dom);
}

const char* noether_case_name(NoetherCase c) {
    switch (c) {
        case NoetherCase::Trivial: return "trivial-dt";
        case NoetherCase::A: return "A";
        case NoetherCase::B: return "B";
        case NoetherCase::Direct: return "direct";
    }
    return "direct";
}

std::vector<NoetherResult> noether_solve(const Lagrangian2D& L, const SampleDomain& dom) {
    std::vector<NoetherResult> all;
    DynamicalSystem sys = L.system();
    const auto& x = L.metric.coords;
    Expr dV[2] = {d(L.V, x[0]), d(L.V, x[1])};

    auto finish = [&](NoetherResult r) {
        r.vector = r.vector.simplified();
        r.gauge = simplify(r.gauge);
        r.integral = noether_integral(L, r.vector, r.gauge);
        NoetherCheck nc = noether_check(L, r.vector, dom);
        r.verified = nc.pass && conserved(r.integral, sys, dom);
        if (r.verified) all.push_back(std::move(r));
    };

    NoetherResult dt;
    dt.vector = PointVectorField::time_translation();
    dt.kind = NoetherCase::Trivial;
    dt.source = "dt";
    finish(dt);

    if (flat_catalog(L.metric)) {
        auto cat = catalog(L.metric.signature);
        // Case A: V,ₖYᵏ + 2ψV + c₁ = 0 over the homothetic algebra
        std::vector<CatalogEntry> hom;
        for (const auto& e : cat)
            if (e.kind == EntryKind::GradientKV || e.kind == EntryKind::NongradientKV || e.kind == EntryKind::HV)
                hom.push_back(e);
        std::vector<std::vector<Expr>> cols;
        for (const auto& e : hom) cols.push_back({dV[0] * e.Y[0] + dV[1] * e.Y[1] + Expr(2) * e.psi * L.V});
        cols.push_back({Expr(1)});
        for (const auto& c : linear_null_space(cols, dom)) {
            std::vector<Number> cy(c.begin(), c.end() - 1);
            bool any = false;
            for (const auto& q : cy) any = any || !q.is_zero();
            if (!any) continue;
            std::vector<Expr> yx, yy, ps;
            for (const auto& e : hom) {
                yx.push_back(e.Y[0]);
                yy.push_back(e.Y[1]);
                ps.push_back(e.psi);
            }
            Vec2 Y{combine(cy, yx), combine(cy, yy)};
            Expr psi = combine(cy, ps);
            Number c1 = c.back();
            NoetherResult r;
            r.vector = {Expr(2) * psi * tvar(), Y};
            r.gauge = Expr(c1) * tvar();
            r.kind = NoetherCase::A;
            r.source = combo_label(cy, hom);
            r.constants["c1"] = c1;
            Expr pv = simplify(psi);
            r.constants["psi"] = pv.is_num() ? pv.number() : Number(0);
            finish(r);
        }

        // Case B: V,ₖGᵏ + 2ψV + c₂G + d = 0 over the gradient entries, T,tt = c₂T
        std::vector<CatalogEntry> grad;
        for (const auto& e : cat)
            if (e.gradient() && (e.kind == EntryKind::GradientKV || e.kind == EntryKind::HV)) grad.push_back(e);
        std::vector<Expr> a, b;
        for (const auto& e : grad) {
            a.push_back(dV[0] * e.Y[0] + dV[1] * e.Y[1] + Expr(2) * e.psi * L.V);
            b.push_back(*e.S);
        }
        std::vector<std::vector<Expr>> da, db;
        for (std::size_t k = 0; k < grad.size(); ++k) {
            da.push_back({d(a[k], x[0]), d(a[k], x[1])});
            db.push_back({-d(b[k], x[0]), -d(b[k], x[1])});
        }
        for (double lam : generalized_eigenvalues(da, db, dom)) {
            Number c2 = snapped(lam);
            std::vector<std::vector<Expr>> bc;
            for (std::size_t k = 0; k < grad.size(); ++k) bc.push_back({a[k] + Expr(c2) * b[k]});
            bc.push_back({Expr(1)});
            for (const auto& c : linear_null_space(bc, dom)) {
                std::vector<Number> cy(c.begin(), c.end() - 1);
                bool any = false;
                for (const auto& q : cy) any = any || !q.is_zero();
                if (!any) continue;
                std::vector<Expr> yx, yy, ps, gs;
                for (const auto& e : grad) {
                    yx.push_back(e.Y[0]);
                    yy.push_back(e.Y[1]);
                    ps.push_back(e.psi);
                    gs.push_back(*e.S);
                }
                Vec2 Y{combine(cy, yx), combine(cy, yy)};
                Expr psi = combine(cy, ps), G = combine(cy, gs);
                Number dc = c.back();
                for (const auto& T : time_basis(c2)) {
                    NoetherResult r;
                    r.vector = {Expr(2) * psi * T.intT, {T.T * Y[0], T.T * Y[1]}};
                    r.gauge = T.dT * G + Expr(dc) * T.intT;
                    r.kind = NoetherCase::B;
                    r.source = combo_label(cy, grad);
                    r.constants["c2"] = c2;
                    r.constants["d"] = dc;
                    Expr pv = simplify(psi);
                    r.constants["psi"] = pv.is_num() ? pv.number() : Number(0);
                    r.T = T.T;
                    finish(r);
                }
            }
        }
    }

    std::vector<NoetherResult> out;
    std::vector<PointVectorField> basis;
    for (auto& r : all) {
        if (in_span(basis, r.vector, dom)) continue;
        basis.push_back(r.vector);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace symlie

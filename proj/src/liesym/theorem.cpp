#include "symlie/liesym.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace symlie {

namespace {

Expr d(const Expr& e, const std::string& v) { return differentiate(e, v, false); }

Expr tvar() { return Expr::var("t"); }

Expr half() { return Expr(Number(Rational{1, 2})); }

std::string label_of(const std::vector<Number>& c, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t k = 0; k < names.size() && k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        std::string coef = c[k].is_one() ? "" : to_string(Expr(c[k])) + "*";
        if (!out.empty()) out += " + ";
        out += coef + "(" + names[k] + ")";
    }
    return out.empty() ? "0" : out;
}

struct Generator {
    std::string label;
    Vec2 Y;
    Number psi;
};

std::vector<Generator> affine_generators() {
    Expr x = Expr::var("x"), y = Expr::var("y"), z(0), one(1);
    return {{"dx", {one, z}, Number(0)},       {"dy", {z, one}, Number(0)},  {"x*dx", {x, z}, Number(0)},
            {"y*dy", {z, y}, Number(0)},       {"y*dx", {y, z}, Number(0)},  {"x*dy", {z, x}, Number(0)}};
}

std::vector<CatalogEntry> gradient_entries(Signature s) {
    std::vector<CatalogEntry> out;
    for (auto& e : catalog(s))
        if (e.gradient()) out.push_back(e);
    return out;
}

bool catalog_supported(const DynamicalSystem& sys) {
    return sys.metric.flat_cartesian() && sys.metric.signature != Signature::General && sys.coords()[0] == "x" &&
           sys.coords()[1] == "y";
}

SymmetryReport make_report(const DynamicalSystem& sys, PointVectorField X, LieCase kind, std::string source,
                           const SampleDomain& dom) {
    SymmetryReport r;
    r.vector = X.simplified();
    r.kind = kind;
    r.source = std::move(source);
    r.check = lie_check(sys, r.vector, dom);
    return r;
}

Number snapped(double v) {
    if (auto q = snap_rational(v, 1000, 1e-7)) return Number(*q);
    return Number::real(v);
}

}  // namespace

std::vector<TimeProfile> time_basis(const Number& m) {
    Expr t = tvar();
    if (m.is_zero()) return {{Expr(1), Expr(0), t}, {t, Expr(1), half() * pow(t, Expr(2))}};
    double mv = m.value();
    Expr k;
    double root = std::sqrt(std::fabs(mv));
    if (m.exact()) {
        Number a = m.negative() ? -m : m;
        if (auto q = snap_rational(root, 1000, 1e-12); q && Number(*q) * Number(*q) == a) {
            k = Expr(Number(*q));
        } else {
            k = sqrt(Expr(a));
        }
    } else {
        k = Expr::real(root);
    }
    Expr kt = k * t;
    if (mv > 0) {
        Expr ep = exp(kt), em = exp(-kt);
        return {{ep, k * ep, ep / k}, {em, -(k * em), -(em / k)}};
    }
    Expr s = sin(kt), c = cos(kt);
    return {{s, k * c, -(c / k)}, {c, -(k * s), s / k}};
}

std::optional<SymmetryReport> solve_case_A1(const DynamicalSystem& sys, const CatalogEntry& Y,
                                            const SampleDomain& dom) {
    if (!Y.affine()) return std::nullopt;
    Vec2 L = lie_derivative_vector(Y.Y, sys.force, sys.coords());
    Expr d1 = Expr::param("d1");
    auto sol = solve_linear_constants({L[0] + d1 * sys.force[0], L[1] + d1 * sys.force[1]}, {"d1"}, dom);
    if (!sol) return std::nullopt;
    Number dv = sol->get("d1");
    PointVectorField X{half() * Expr(dv) * tvar(), Y.Y};
    SymmetryReport r = make_report(sys, X, LieCase::A1, Y.label, dom);
    r.constants["d1"] = dv;
    r.constants["a1"] = Number(1);
    if (!r.check.pass) return std::nullopt;
    return r;
}

std::vector<SymmetryReport> solve_case_A2(const DynamicalSystem& sys, const CatalogEntry& Y, const SampleDomain& dom) {
    std::vector<SymmetryReport> out;
    bool ok = Y.gradient() && (Y.kind == EntryKind::GradientKV || Y.kind == EntryKind::HV);
    if (!ok) return out;
    Vec2 L = lie_derivative_vector(Y.Y, sys.force, sys.coords());
    Expr m = Expr::param("m");
    Expr four_psi = Expr(4) * Y.psi;
    std::vector<Expr> res;
    for (int i = 0; i < 2; ++i) res.push_back(L[i] + four_psi * sys.force[i] - m * Y.Y[i]);
    auto sol = solve_linear_constants(res, {"m"}, dom);
    if (!sol) return out;
    Number mv = sol->get("m");
    for (const auto& T : time_basis(mv)) {
        PointVectorField X{Expr(2) * Y.psi * T.intT, {T.T * Y.Y[0], T.T * Y.Y[1]}};
        SymmetryReport r = make_report(sys, X, LieCase::A2, Y.label, dom);
        r.constants["m"] = mv;
        r.constants["psi"] = Y.psi.number();
        r.profiles["T"] = T.T;
        if (r.check.pass) out.push_back(std::move(r));
    }
    return out;
}

std::vector<SymmetryReport> solve_affine(const DynamicalSystem& sys, const SampleDomain& dom) {
    std::vector<SymmetryReport> out;
    if (!catalog_supported(sys)) return out;
    auto gens = affine_generators();
    std::vector<std::vector<Expr>> cols;
    std::vector<std::string> names;
    for (const auto& g : gens) {
        Vec2 L = lie_derivative_vector(g.Y, sys.force, sys.coords());
        cols.push_back({L[0], L[1]});
        names.push_back(g.label);
    }
    cols.push_back({sys.force[0], sys.force[1]});
    for (const auto& v : linear_null_space(cols, dom)) {
        Vec2 Y{Expr(0), Expr(0)};
        for (std::size_t k = 0; k < gens.size(); ++k)
            if (!v[k].is_zero())
                for (int i = 0; i < 2; ++i) Y[i] = Y[i] + Expr(v[k]) * gens[k].Y[i];
        Number d1 = v.back();
        PointVectorField X{half() * Expr(d1) * tvar(), Y};
        std::string src = label_of(v, names);
        SymmetryReport r = make_report(sys, X, LieCase::A1, src == "0" ? "t*dt" : src, dom);
        r.constants["d1"] = d1;
        r.constants["a1"] = Number(1);
        if (r.check.pass) out.push_back(std::move(r));
    }
    return out;
}

std::vector<SymmetryReport> solve_gradient(const DynamicalSystem& sys, const SampleDomain& dom) {
    std::vector<SymmetryReport> out;
    if (!catalog_supported(sys)) return out;
    auto gens = gradient_entries(sys.metric.signature);
    const std::size_t K = gens.size();
    std::vector<std::vector<Expr>> acols, bcols;
    std::vector<std::string> names;
    for (const auto& g : gens) {
        Vec2 L = lie_derivative_vector(g.Y, sys.force, sys.coords());
        Expr fp = Expr(4) * g.psi;
        acols.push_back({L[0] + fp * sys.force[0], L[1] + fp * sys.force[1]});
        bcols.push_back({g.Y[0], g.Y[1]});
        names.push_back(g.label);
    }
    std::vector<double> ms = generalized_eigenvalues(acols, bcols, dom);
    for (double mv : ms) {
        Number m = snapped(mv);
        std::vector<std::vector<Expr>> cols;
        for (std::size_t k = 0; k < K; ++k)
            cols.push_back({acols[k][0] - Expr(m) * bcols[k][0], acols[k][1] - Expr(m) * bcols[k][1]});
        for (const auto& c : linear_null_space(cols, dom)) {
            Vec2 Y{Expr(0), Expr(0)};
            Expr psi(0);
            for (std::size_t k = 0; k < K; ++k) {
                if (c[k].is_zero()) continue;
                for (int i = 0; i < 2; ++i) Y[i] = Y[i] + Expr(c[k]) * gens[k].Y[i];
                psi = psi + Expr(c[k]) * gens[k].psi;
            }
            for (const auto& T : time_basis(m)) {
                PointVectorField X{Expr(2) * psi * T.intT, {T.T * Y[0], T.T * Y[1]}};
                SymmetryReport r = make_report(sys, X, LieCase::A2, label_of(c, names), dom);
                r.constants["m"] = m;
                r.constants["psi"] = simplify(psi).is_num() ? simplify(psi).number() : Number(0);
                r.profiles["T"] = T.T;
                if (r.check.pass) out.push_back(std::move(r));
            }
        }
    }
    return out;
}

std::optional<CaseA3> solve_case_A3(const DynamicalSystem& sys, const SampleDomain& dom) {
    if (!catalog_supported(sys)) return std::nullopt;
    Expr x = Expr::var("x"), y = Expr::var("y");
    Expr e = Expr::param("eps"), a = Expr::param("alpha"), b = Expr::param("beta");
    auto lin = solve_linear_constants({sys.force[0] - (e * x + a), sys.force[1] - (e * y + b)}, {"eps", "alpha", "beta"},
                                      dom);
    if (!lin) return std::nullopt;
    Number eps = lin->get("eps"), al = lin->get("alpha"), be = lin->get("beta");
    std::array<Number, 2> center{Number(0), Number(0)};
    if (eps.is_zero()) {
        if (!al.is_zero() || !be.is_zero()) return std::nullopt;
    } else {
        center = {-(al / eps), -(be / eps)};
    }
    const bool lor = sys.metric.signature == Signature::Lorentzian;
    Expr X0 = x - Expr(center[0]), Y0 = y - Expr(center[1]);
    Vec2 H{X0, Y0};
    // shifted gradient functions of ∂x and ∂y
    std::array<Expr, 2> S{lor ? -X0 : X0, Y0};
    std::array<std::string, 2> kv{"dx", "dy"};

    CaseA3 res;
    res.epsilon = eps;
    res.center = center;
    res.algebra = "sl(4,R)";

    // constants of the SPC conditions, then the consistency relations
    const Number one(1), zero(0);
    for (int J = 0; J < 2; ++J) {
        Vec2 Y{S[J] * H[0], S[J] * H[1]};
        Vec2 LF = lie_derivative_vector(Y, sys.force);
        Expr a0 = Expr::param("a0"), d1 = Expr::param("d1"), a1 = Expr::param("a1");
        std::vector<Expr> pp11;
        for (int i = 0; i < 2; ++i)
            pp11.push_back(LF[i] + Expr(2) * a0 * S[J] * sys.force[i] + d1 * sys.force[i] - a1 * Y[i]);
        Expr c2 = Expr::param("c2"), u = Expr::param("u"), dc = Expr::param("dc");
        Vec2 dS{d(S[J], "x"), d(S[J], "y")};
        Expr SF = dS[0] * sys.force[0] + dS[1] * sys.force[1];
        std::vector<Expr> pp12;
        const std::array<std::string, 2> xs{"x", "y"};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                Expr r = Expr(2) * dS[j] * sys.force[i] - Expr(2) * c2 * d(Y[i], xs[j]);
                if (i == j) r = r + SF + u * S[J] + dc;
                pp12.push_back(r);
            }
        std::map<std::string, Number> k;
        auto s11 = solve_linear_constants(pp11, {"a0", "d1", "a1"}, dom);
        auto s12 = solve_linear_constants(pp12, {"c2", "u", "dc"}, dom);
        if (s11) {
            k["d1"] = s11->get("d1");
            k["a1"] = s11->get("a1");
            k["a0"] = s11->get("a0");
        }
        if (s12) {
            k["c2"] = s12->get("c2");
            k["dc"] = s12->get("dc");
        }
        // with C = T_m, T = T_m', D = 0 the relations force d1 = 0, a1 = c2 = ε, d_c = 0, a0 = 1
        std::map<std::string, Expr> want{{"a0", Expr(one)}, {"d1", Expr(zero)}, {"a1", Expr(eps)},
                                         {"c2", Expr(eps)}, {"u", Expr(eps)},   {"dc", Expr(zero)}};
        std::vector<Expr> all = pp11;
        all.insert(all.end(), pp12.begin(), pp12.end());
        for (auto& r : all) r = substitute(r, want);
        if (!is_zero(all, dom)) return std::nullopt;
        k["d1"] = zero;
        k["a1"] = eps;
        k["c2"] = eps;
        k["dc"] = zero;
        k["a0"] = one;
        res.spc_constants.push_back(k);
    }

    auto add = [&](PointVectorField X, std::string src, std::map<std::string, Expr> prof = {}) {
        SymmetryReport r = make_report(sys, std::move(X), LieCase::A3, std::move(src), dom);
        r.constants["epsilon"] = eps;
        r.profiles = std::move(prof);
        if (r.check.pass) res.generators.push_back(std::move(r));
    };
    Expr z(0), o(1);
    add(PointVectorField::time_translation(), "dt");
    add({z, {X0, z}}, "x*dx");
    add({z, {z, Y0}}, "y*dy");
    add({z, {Y0, z}}, "y*dx");
    add({z, {z, X0}}, "x*dy");
    for (int J = 0; J < 2; ++J)
        for (const auto& T : time_basis(eps)) {
            Vec2 Y{J == 0 ? o : z, J == 0 ? z : o};
            add({z, {T.T * Y[0], T.T * Y[1]}}, "T*" + kv[J], {{"T", T.T}});
        }
    for (const auto& T : time_basis(Number(4) * eps))
        add({Expr(2) * T.intT, {T.T * H[0], T.T * H[1]}}, "T*(x*dx + y*dy)", {{"T", T.T}});
    for (int J = 0; J < 2; ++J)
        for (const auto& T : time_basis(eps)) {
            Expr C = T.T, Tp = T.dT;
            add({C * S[J], {Tp * S[J] * H[0], Tp * S[J] * H[1]}}, "SPC/" + kv[J], {{"C", C}, {"T", Tp}});
        }
    return res;
}

std::vector<SymmetryReport> solve_case_B(const DynamicalSystem& sys, const SampleDomain& dom) {
    std::vector<SymmetryReport> out;
    if (!sys.potential || !catalog_supported(sys)) return out;
    const Expr& V = *sys.potential;
    Vec2 dV{d(V, "x"), d(V, "y")};
    if (is_zero({dV[0], dV[1]}, dom)) return out;
    Mat2 inv = sys.metric.inverse();
    Vec2 W{inv[0][0] * dV[0] + inv[0][1] * dV[1], inv[1][0] * dV[0] + inv[1][1] * dV[1]};
    Expr x = Expr::var("x"), y = Expr::var("y");
    Expr kap = Expr::param("kappa"), a = Expr::param("a"), b = Expr::param("b");
    // gradient HV H + a∂x + b∂y proportional to V^{,i}
    auto sol = solve_linear_constants({x + a - kap * W[0], y + b - kap * W[1]}, {"kappa", "a", "b"}, dom);
    if (!sol) return out;
    Number kappa = sol->get("kappa");
    if (kappa.is_zero()) return out;
    const Number psi(1);

    // B1: X = D ∂t + T V^{,i}∂ᵢ with D'' = 2ψT'/κ, T'' = −2D'
    auto b1 = [&](PointVectorField X, std::string src, std::map<std::string, Expr> prof) {
        SymmetryReport r = make_report(sys, std::move(X), LieCase::B1, std::move(src), dom);
        r.constants["kappa"] = kappa;
        r.constants["psi"] = psi;
        r.profiles = std::move(prof);
        if (r.check.pass) out.push_back(std::move(r));
    };
    Expr z(0);
    b1({Expr(1), {z, z}}, "D=1", {{"D", Expr(1)}, {"T", z}});
    b1({z, W}, "T=1", {{"D", z}, {"T", Expr(1)}});
    for (const auto& u : time_basis(-(Number(4) * psi / kappa))) {
        Expr D = -(half() * u.T), T = u.intT;
        b1({D, {T * W[0], T * W[1]}}, "kappa*V^i", {{"D", D}, {"T", T}});
    }

    // B2: Y_J = λ S_J V^{,i} with λ = κ, an SPC about the centre of the HV
    Number eps = -(Number(1) / kappa);
    Expr X0 = x + Expr(sol->get("a")), Y0 = y + Expr(sol->get("b"));
    bool lor = sys.metric.signature == Signature::Lorentzian;
    std::array<Expr, 2> S{lor ? -X0 : X0, Y0};
    for (int J = 0; J < 2; ++J) {
        Vec2 YJ{Expr(kappa) * S[J] * W[0], Expr(kappa) * S[J] * W[1]};
        Vec2 L = lie_derivative_vector(YJ, W);
        Expr l1 = Expr::param("lambda1");
        auto s21 = solve_linear_constants({L[0] + l1 * S[J] * W[0], L[1] + l1 * S[J] * W[1]}, {"lambda1"}, dom);
        for (const auto& T : time_basis(eps)) {
            Expr C = T.T, Tp = T.dT;
            PointVectorField X{C * S[J], {Tp * YJ[0], Tp * YJ[1]}};
            SymmetryReport r = make_report(sys, X, LieCase::B2, J == 0 ? "S=x" : "S=y", dom);
            r.constants["lambda"] = kappa;
            r.constants["lambda2"] = eps;
            r.constants["a0"] = Number(1);
            if (s21) r.constants["lambda1"] = s21->get("lambda1");
            r.profiles = {{"C", C}, {"T", Tp}};
            if (r.check.pass) out.push_back(std::move(r));
        }
    }
    return out;
}

bool in_span(const std::vector<PointVectorField>& basis, const PointVectorField& X, const SampleDomain& dom) {
    std::vector<PointVectorField> all = basis;
    all.push_back(X);
    std::vector<Expr> flat;
    for (const auto& v : all) {
        flat.push_back(v.xi);
        flat.push_back(v.eta[0]);
        flat.push_back(v.eta[1]);
    }
    std::set<std::string> ss{"t", "x", "y"};
    for (const auto& e : flat) {
        auto s = symbols(e);
        ss.insert(s.begin(), s.end());
    }
    std::vector<std::string> syms(ss.begin(), ss.end());
    Compiled prog(flat, syms);
    std::mt19937_64 rng(dom.seed ^ 0x5a5a5aULL);
    auto pts = sample_points(prog, dom, rng, 6);
    Eigen::MatrixXd M(static_cast<long>(pts.size() * 3), static_cast<long>(all.size()));
    for (std::size_t p = 0; p < pts.size(); ++p) {
        auto r = prog.run(pts[p].data(), 0.0);
        for (std::size_t k = 0; k < all.size(); ++k)
            for (int c = 0; c < 3; ++c)
                M(static_cast<long>(3 * p) + c, static_cast<long>(k)) = r.values[3 * k + static_cast<std::size_t>(c)];
    }
    for (long k = 0; k < M.cols(); ++k) {
        double n = M.col(k).norm();
        if (n > 0) M.col(k) /= n;
    }
    auto rank = [](const Eigen::MatrixXd& A) {
        if (A.cols() == 0) return 0L;
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
        const auto& s = svd.singularValues();
        long r = 0;
        for (long i = 0; i < s.size(); ++i)
            if (s(i) > 1e-8 * std::max(1.0, s(0))) ++r;
        return r;
    };
    Eigen::MatrixXd prev = M.leftCols(M.cols() - 1);
    if (M.col(M.cols() - 1).norm() == 0) return true;
    return rank(M) == rank(prev);
}

std::vector<SymmetryReport> dedup_span(const std::vector<SymmetryReport>& in, const SampleDomain& dom) {
    std::vector<SymmetryReport> out;
    std::vector<PointVectorField> basis;
    for (const auto& r : in) {
        if (in_span(basis, r.vector, dom)) continue;
        basis.push_back(r.vector);
        out.push_back(r);
    }
    return out;
}

std::vector<SymmetryReport> full_solve(const DynamicalSystem& sys, const SampleDomain& dom) {
    std::vector<SymmetryReport> all;
    SymmetryReport dt = make_report(sys, PointVectorField::time_translation(), LieCase::Trivial, "dt", dom);
    all.push_back(dt);
    auto add = [&](std::vector<SymmetryReport> v) {
        for (auto& r : v)
            if (r.check.pass) all.push_back(std::move(r));
    };
    add(solve_affine(sys, dom));
    add(solve_gradient(sys, dom));
    if (auto a3 = solve_case_A3(sys, dom)) add(a3->generators);
    add(solve_case_B(sys, dom));
    return dedup_span(all, dom);
}

}  // namespace symlie

#include "symlie/geometry.hpp"

#include <stdexcept>

namespace symlie {

namespace {

Expr d(const Expr& e, const std::string& v) { return differentiate(e, v, false); }

Expr half() { return Expr(Number(Rational{1, 2})); }

}  // namespace

const char* signature_name(Signature s) {
    switch (s) {
        case Signature::Euclidean: return "euclidean";
        case Signature::Lorentzian: return "lorentzian";
        case Signature::General: return "general";
    }
    return "general";
}

Signature signature_from_name(const std::string& s) {
    if (s == "euclidean") return Signature::Euclidean;
    if (s == "lorentzian") return Signature::Lorentzian;
    if (s == "general") return Signature::General;
    throw std::invalid_argument("unsupported signature '" + s + "'");
}

Metric2D Metric2D::euclidean() { return {}; }

Metric2D Metric2D::lorentzian() {
    Metric2D m;
    m.g = {Expr(-1), Expr(0), Expr(0), Expr(1)};
    m.signature = Signature::Lorentzian;
    return m;
}

Metric2D Metric2D::of(Signature s) {
    switch (s) {
        case Signature::Euclidean: return euclidean();
        case Signature::Lorentzian: return lorentzian();
        default: break;
    }
    throw std::invalid_argument("catalog signature must be euclidean or lorentzian");
}

Metric2D Metric2D::general(const Expr& gxx, const Expr& gxy, const Expr& gyy, std::array<std::string, 2> coords) {
    Metric2D m;
    m.g = {gxx, gxy, gxy, gyy};
    m.signature = Signature::General;
    m.coords = std::move(coords);
    if (is_zero(m.det())) throw SingularMetric("metric determinant vanishes identically");
    return m;
}

Expr Metric2D::det() const { return g[0][0] * g[1][1] - g[0][1] * g[1][0]; }

Mat2 Metric2D::inverse() const {
    Expr D = det();
    return {g[1][1] / D, -g[0][1] / D, -g[1][0] / D, g[0][0] / D};
}

bool Metric2D::flat_cartesian() const {
    for (const auto& row : g)
        for (const auto& e : row)
            if (!e.is_num()) return false;
    return true;
}

Vec2 Metric2D::lower(const Vec2& v) const {
    return {g[0][0] * v[0] + g[0][1] * v[1], g[1][0] * v[0] + g[1][1] * v[1]};
}

Connection2D::Connection2D() {
    for (auto& a : c)
        for (auto& b : a) b = {Expr(0), Expr(0)};
}

std::vector<Expr> Connection2D::flat() const {
    std::vector<Expr> out;
    for (const auto& a : c)
        for (const auto& b : a)
            for (const auto& e : b) out.push_back(e);
    return out;
}

Connection2D christoffel(const Metric2D& m) {
    Connection2D G;
    if (m.flat_cartesian()) return G;
    Mat2 inv = m.inverse();
    const auto& x = m.coords;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = j; k < 2; ++k) {
                Expr acc(0);
                for (int l = 0; l < 2; ++l) {
                    Expr bracket = d(m.g[l][j], x[k]) + d(m.g[l][k], x[j]) - d(m.g[j][k], x[l]);
                    acc = acc + inv[i][l] * bracket;
                }
                Expr s = simplify(half() * acc);
                G(i, j, k) = s;
                G(i, k, j) = s;
            }
    return G;
}

Mat2 lie_derivative_metric(const Vec2& Y, const Metric2D& m) {
    const auto& x = m.coords;
    Mat2 L;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Expr acc(0);
            for (int k = 0; k < 2; ++k)
                acc = acc + Y[k] * d(m.g[i][j], x[k]) + m.g[k][j] * d(Y[k], x[i]) + m.g[i][k] * d(Y[k], x[j]);
            L[i][j] = acc;
        }
    return L;
}

Vec2 lie_derivative_vector(const Vec2& Y, const Vec2& F, const std::array<std::string, 2>& x) {
    Vec2 out;
    for (int i = 0; i < 2; ++i) {
        Expr acc(0);
        for (int j = 0; j < 2; ++j) acc = acc + Y[j] * d(F[i], x[j]) - F[j] * d(Y[i], x[j]);
        out[i] = acc;
    }
    return out;
}

Connection2D lie_derivative_connection(const Vec2& Y, const Connection2D& G, const std::array<std::string, 2>& x) {
    Connection2D L;
    std::array<std::array<Expr, 2>, 2> dY;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) dY[i][j] = d(Y[i], x[j]);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                Expr acc = d(dY[i][j], x[k]);
                for (int l = 0; l < 2; ++l) {
                    acc = acc + Y[l] * d(G(i, j, k), x[l]) - dY[i][l] * G(l, j, k) + dY[l][j] * G(i, l, k) +
                          dY[l][k] * G(i, j, l);
                }
                L(i, j, k) = acc;
            }
    return L;
}

const char* collineation_name(Collineation c) {
    switch (c) {
        case Collineation::None: return "none";
        case Collineation::KV: return "KV";
        case Collineation::HV: return "HV";
        case Collineation::CKV: return "CKV";
        case Collineation::AC: return "AC";
        case Collineation::SPC: return "SPC";
        case Collineation::PC: return "PC";
    }
    return "none";
}

bool is_killing(const Vec2& Y, const Metric2D& g, const SampleDomain& dom) {
    Mat2 L = lie_derivative_metric(Y, g);
    return is_zero({L[0][0], L[0][1], L[1][1]}, dom);
}

bool is_homothetic(const Vec2& Y, const Metric2D& g, const Expr& psi, const SampleDomain& dom) {
    Mat2 L = lie_derivative_metric(Y, g);
    std::vector<Expr> r;
    for (int i = 0; i < 2; ++i)
        for (int j = i; j < 2; ++j) r.push_back(L[i][j] - Expr(2) * psi * g.g[i][j]);
    return is_zero(r, dom);
}

bool is_affine(const Vec2& Y, const Metric2D& g, const SampleDomain& dom) {
    return is_zero(lie_derivative_connection(Y, christoffel(g), g.coords).flat(), dom);
}

bool is_gradient(const Vec2& Y, const Metric2D& g, const SampleDomain& dom) {
    Vec2 low = g.lower(Y);
    return is_zero(d(low[1], g.coords[0]) - d(low[0], g.coords[1]), dom);
}

CollineationInfo classify_collineation(const Vec2& Y, const Metric2D& g, const SampleDomain& dom) {
    CollineationInfo info;
    info.gradient = is_gradient(Y, g, dom);
    const auto& x = g.coords;

    Mat2 L = lie_derivative_metric(Y, g);
    if (is_zero({L[0][0], L[0][1], L[1][1]}, dom)) {
        info.cls = Collineation::KV;
        info.psi = Expr(0);
        return info;
    }
    Mat2 inv = g.inverse();
    Expr trace(0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) trace = trace + inv[i][j] * L[j][i];
    Expr psi = trace / Expr(4);
    bool conformal = true;
    for (int i = 0; i < 2 && conformal; ++i)
        for (int j = i; j < 2 && conformal; ++j)
            conformal = is_zero(L[i][j] - Expr(2) * psi * g.g[i][j], dom);
    bool constant_psi = conformal && is_zero({d(psi, x[0]), d(psi, x[1])}, dom);
    if (constant_psi) {
        info.cls = Collineation::HV;
        info.psi = simplify(psi);
        return info;
    }

    Connection2D G = christoffel(g);
    Connection2D LG = lie_derivative_connection(Y, G, x);
    if (is_zero(LG.flat(), dom)) {
        info.cls = Collineation::AC;
        return info;
    }
    // contracting L_YΓ = φ,j δⁱₖ + φ,k δⁱⱼ on i,k gives 3φ,j in two dimensions
    Vec2 phi;
    for (int j = 0; j < 2; ++j) phi[j] = (LG(0, j, 0) + LG(1, j, 1)) / Expr(3);
    std::vector<Expr> res;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = j; k < 2; ++k) {
                Expr rhs(0);
                if (i == k) rhs = rhs + phi[j];
                if (i == j) rhs = rhs + phi[k];
                res.push_back(LG(i, j, k) - rhs);
            }
    if (is_zero(res, dom)) {
        info.phi_grad = Vec2{simplify(phi[0]), simplify(phi[1])};
        // φ;jk = φ,jk − Γˡⱼₖ φ,l
        std::vector<Expr> hess;
        for (int j = 0; j < 2; ++j)
            for (int k = j; k < 2; ++k) {
                Expr h = d(phi[j], x[k]);
                for (int l = 0; l < 2; ++l) h = h - G(l, j, k) * phi[l];
                hess.push_back(h);
            }
        info.cls = is_zero(hess, dom) ? Collineation::SPC : Collineation::PC;
        if (info.phi_grad->at(0).is_num() && info.phi_grad->at(1).is_num())
            info.phi = simplify((*info.phi_grad)[0] * Expr::sym(x[0]) + (*info.phi_grad)[1] * Expr::sym(x[1]));
        return info;
    }
    if (conformal) {
        info.cls = Collineation::CKV;
        info.psi = simplify(psi);
    }
    return info;
}

const char* entry_kind_name(EntryKind k) {
    switch (k) {
        case EntryKind::GradientKV: return "gradient-KV";
        case EntryKind::NongradientKV: return "nongradient-KV";
        case EntryKind::HV: return "HV";
        case EntryKind::AC: return "AC";
        case EntryKind::SPC: return "SPC";
    }
    return "none";
}

bool CatalogEntry::matches(const CollineationInfo& info) const {
    switch (kind) {
        case EntryKind::GradientKV: return info.cls == Collineation::KV && info.gradient;
        case EntryKind::NongradientKV: return info.cls == Collineation::KV && !info.gradient;
        case EntryKind::HV:
            return info.cls == Collineation::HV && info.psi && is_zero(*info.psi - psi);
        case EntryKind::AC: return info.cls == Collineation::AC;
        case EntryKind::SPC:
            return info.cls == Collineation::SPC && phi && info.phi && is_zero(*info.phi - *phi);
    }
    return false;
}

std::vector<CatalogEntry> catalog(Signature s) {
    if (s == Signature::General) throw std::invalid_argument("catalog signature must be euclidean or lorentzian");
    bool lor = s == Signature::Lorentzian;
    Expr x = Expr::var("x"), y = Expr::var("y");
    Expr z(0), one(1);
    std::vector<CatalogEntry> out;
    out.push_back({"dx", {one, z}, EntryKind::GradientKV, lor ? -x : x, z, std::nullopt});
    out.push_back({"dy", {z, one}, EntryKind::GradientKV, y, z, std::nullopt});
    if (lor)
        out.push_back({"y*dx + x*dy", {y, x}, EntryKind::NongradientKV, std::nullopt, z, std::nullopt});
    else
        out.push_back({"y*dx - x*dy", {y, -x}, EntryKind::NongradientKV, std::nullopt, z, std::nullopt});
    Expr H = lor ? half() * (pow(y, Expr(2)) - pow(x, Expr(2))) : half() * (pow(x, Expr(2)) + pow(y, Expr(2)));
    out.push_back({"x*dx + y*dy", {x, y}, EntryKind::HV, H, one, std::nullopt});
    out.push_back({"x*dx", {x, z}, EntryKind::AC, std::nullopt, z, std::nullopt});
    out.push_back({"y*dy", {z, y}, EntryKind::AC, std::nullopt, z, std::nullopt});
    out.push_back({"y*dx", {y, z}, EntryKind::AC, std::nullopt, z, std::nullopt});
    out.push_back({"x*dy", {z, x}, EntryKind::AC, std::nullopt, z, std::nullopt});
    out.push_back({"x^2*dx + x*y*dy", {pow(x, Expr(2)), x * y}, EntryKind::SPC, std::nullopt, z, x});
    out.push_back({"x*y*dx + y^2*dy", {x * y, pow(y, Expr(2))}, EntryKind::SPC, std::nullopt, z, y});
    return out;
}

std::string vector_string(const Vec2& Y, const std::array<std::string, 2>& coords) {
    std::string out;
    for (int i = 0; i < 2; ++i) {
        Expr c = simplify(Y[i]);
        if (c.is_zero_literal()) continue;
        bool neg = c.kind() == Kind::Neg;
        if (neg) c = c.arg(0);
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        std::string cs = to_string(c);
        if (c.is_one_literal()) out += "d" + coords[i];
        else if (c.kind() == Kind::Add || c.kind() == Kind::Sub) out += "(" + cs + ")*d" + coords[i];
        else out += cs + "*d" + coords[i];
    }
    return out.empty() ? "0" : out;
}

}  // namespace symlie

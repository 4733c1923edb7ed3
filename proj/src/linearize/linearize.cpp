#include "symlie/linearize.hpp"

namespace symlie {

namespace {

constexpr int N = kProjDim;
constexpr int n = N - 1;

Expr dd(const Expr& e, const std::string& v) { return differentiate(e, v); }

Expr num(std::int64_t p, std::int64_t q = 1) { return Expr(Number(Rational{p, q})); }

Expr delta(int i, int j) { return Expr(i == j ? 1 : 0); }

}  // namespace

ScalarCheck check_scalar(const ScalarODECoeffs& k, const SampleDomain& dom) {
    const Expr &a = k.a, &b = k.b, &c = k.c, &d = k.d;
    auto x = [](const Expr& e) { return dd(e, "x"); };
    auto t = [](const Expr& e) { return dd(e, "t"); };
    Expr r1 = Expr(3) * x(x(d)) - Expr(2) * t(x(c)) + Expr(3) * d * x(b) + Expr(3) * b * x(d) -
              Expr(2) * c * x(c) + t(t(b)) + c * t(b) - Expr(6) * d * t(a) - Expr(3) * a * t(d);
    Expr r2 = x(x(c)) - Expr(2) * t(x(b)) - b * x(c) + Expr(3) * d * x(a) + Expr(6) * a * x(d) + Expr(3) * t(t(a)) +
              Expr(2) * b * t(b) - Expr(3) * c * t(a) - Expr(3) * a * t(c);
    ScalarCheck out;
    out.r1 = simplify(r1);
    out.r2 = simplify(r2);
    auto z1 = check_zero({out.r1}, dom), z2 = check_zero({out.r2}, dom);
    out.max1 = z1.max_abs;
    out.max2 = z2.max_abs;
    out.pass = z1.zero && z2.zero;
    return out;
}

SystemCoeffs SystemCoeffs::zero() {
    SystemCoeffs k;
    for (int i = 0; i < 2; ++i) {
        k.d[i] = Expr(0);
        for (int j = 0; j < 2; ++j) {
            k.a[i][j] = Expr(0);
            k.c[i][j] = Expr(0);
            for (int l = 0; l < 2; ++l) k.b[i][j][l] = Expr(0);
        }
    }
    return k;
}

bool ProjectiveConnection::symmetric(const SampleDomain& dom) const {
    std::vector<Expr> diffs;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int c = b + 1; c < N; ++c) diffs.push_back(at(a, b, c) - at(a, c, b));
    return is_zero(diffs, dom);
}

ProjectiveConnection projective_connection(const SystemCoeffs& k) {
    ProjectiveConnection P;
    const int T = n;
    Expr inv = num(1, n + 1);
    std::array<Expr, 2> B;   // bᵐₘⱼ
    Expr C(0);               // cᵐₘ
    for (int j = 0; j < n; ++j) {
        B[j] = Expr(0);
        for (int m = 0; m < n; ++m) B[j] = B[j] + k.b[m][m][j];
        C = C + k.c[j][j];
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int l = 0; l < n; ++l)
                P.at(i, j, l) = simplify(k.b[i][j][l] - inv * (delta(i, j) * B[l] + delta(i, l) * B[j]));
            Expr half = simplify(num(1, 2) * (k.c[i][j] - inv * C * delta(i, j)));
            P.at(i, T, j) = half;
            P.at(i, j, T) = half;
        }
        P.at(i, T, T) = simplify(k.d[i]);
    }
    for (int j = 0; j < n; ++j) {
        for (int l = 0; l < n; ++l) P.at(T, j, l) = simplify(-k.a[j][l]);
        Expr tj = simplify(-inv * B[j]);
        P.at(T, T, j) = tj;
        P.at(T, j, T) = tj;
    }
    P.at(T, T, T) = simplify(-inv * C);
    return P;
}

Tensor4 curvature(const ProjectiveConnection& P) {
    Tensor4 R;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c)
                for (int d = 0; d < N; ++d) {
                    Expr r = dd(P.at(a, d, b), P.coords[c]) - dd(P.at(a, c, b), P.coords[d]);
                    for (int e = 0; e < N; ++e) r = r + P.at(a, c, e) * P.at(e, d, b) - P.at(a, d, e) * P.at(e, c, b);
                    R[idx4(a, b, c, d)] = simplify(r);
                }
    return R;
}

Tensor2 ricci(const Tensor4& R) {
    Tensor2 Ric;
    for (int b = 0; b < N; ++b)
        for (int d = 0; d < N; ++d) {
            Expr s(0);
            for (int a = 0; a < N; ++a) s = s + R[idx4(a, b, a, d)];
            Ric[static_cast<std::size_t>(b * N + d)] = simplify(s);
        }
    return Ric;
}

// W = R − δᵃ_b(R_cd − R_dc)/(N+1) − [δᵃ_c(N R_bd + R_db) − δᵃ_d(N R_bc + R_cb)]/(N²−1)
Tensor4 weyl_projective(const ProjectiveConnection& P) {
    Tensor4 R = curvature(P);
    Tensor2 Ric = ricci(R);
    auto ric = [&](int i, int j) { return Ric[static_cast<std::size_t>(i * N + j)]; };
    Expr p1 = num(1, N + 1), p2 = num(1, N * N - 1), nn(N);
    Tensor4 W;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c)
                for (int d = 0; d < N; ++d) {
                    Expr w = R[idx4(a, b, c, d)];
                    if (a == b) w = w - p1 * (ric(c, d) - ric(d, c));
                    if (a == c) w = w - p2 * (nn * ric(b, d) + ric(d, b));
                    if (a == d) w = w + p2 * (nn * ric(b, c) + ric(c, b));
                    W[idx4(a, b, c, d)] = simplify(w);
                }
    return W;
}

WeylCheck weyl_projective_vanishes(const ProjectiveConnection& P, const SampleDomain& dom) {
    WeylCheck out;
    out.W = weyl_projective(P);
    auto z = check_zero(std::vector<Expr>(out.W.begin(), out.W.end()), dom);
    out.max_abs = z.max_abs;
    out.pass = z.zero;
    return out;
}

}  // namespace symlie

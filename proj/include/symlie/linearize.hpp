#pragma once

#include "symlie/expr.hpp"

#include <array>

namespace symlie {

// ẍ + a ẋ³ + b ẋ² + c ẋ + d = 0, coefficients in (t, x)
struct ScalarODECoeffs {
    Expr a{0}, b{0}, c{0}, d{0};
};

struct ScalarCheck {
    bool pass = false;
    Expr r1{0}, r2{0};   // simplified left-hand sides of the two conditions
    double max1 = 0.0, max2 = 0.0;
};

// Reducible to ẍ = 0 by a point change of (t, x) iff both residuals vanish.
ScalarCheck check_scalar(const ScalarODECoeffs& k, const SampleDomain& dom = {});

// ẍⁱ + a_jk ẋⁱẋʲẋᵏ + bⁱⱼₖ ẋʲẋᵏ + cⁱⱼ ẋʲ + dⁱ = 0 for n = 2 over (x, y, t)
struct SystemCoeffs {
    std::array<std::array<Expr, 2>, 2> a{};
    std::array<std::array<std::array<Expr, 2>, 2>, 2> b{};   // b[i][j][k]
    std::array<std::array<Expr, 2>, 2> c{};                  // c[i][j]
    std::array<Expr, 2> d{};

    static SystemCoeffs zero();
};

constexpr int kProjDim = 3;   // N = n + 1, index 2 is t

struct ProjectiveConnection {
    std::array<std::string, kProjDim> coords{"x", "y", "t"};
    std::array<Expr, kProjDim * kProjDim * kProjDim> G{};   // Πᵃ_bc at a*9 + b*3 + c

    const Expr& at(int a, int b, int c) const { return G[static_cast<std::size_t>(a * 9 + b * 3 + c)]; }
    Expr& at(int a, int b, int c) { return G[static_cast<std::size_t>(a * 9 + b * 3 + c)]; }
    bool symmetric(const SampleDomain& dom = {}) const;
};

ProjectiveConnection projective_connection(const SystemCoeffs& k);

using Tensor4 = std::array<Expr, 81>;   // [a][b][c][d] at a*27 + b*9 + c*3 + d
using Tensor2 = std::array<Expr, 9>;

inline std::size_t idx4(int a, int b, int c, int d) { return static_cast<std::size_t>(a * 27 + b * 9 + c * 3 + d); }

// Rᵃ_bcd = ∂cΠᵃ_db − ∂dΠᵃ_cb + Πᵃ_ceΠᵉ_db − Πᵃ_deΠᵉ_cb
Tensor4 curvature(const ProjectiveConnection& P);
// R_bd = Rᵃ_bad
Tensor2 ricci(const Tensor4& R);
Tensor4 weyl_projective(const ProjectiveConnection& P);

struct WeylCheck {
    bool pass = false;
    Tensor4 W{};
    double max_abs = 0.0;
};

WeylCheck weyl_projective_vanishes(const ProjectiveConnection& P, const SampleDomain& dom = {});

}  // namespace symlie

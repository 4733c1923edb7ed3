#pragma once

#include "symlie/expr.hpp"
#include "symlie/geometry.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace symlie {

struct PointVectorField {
    Expr xi{0};
    Vec2 eta{Expr(0), Expr(0)};

    static PointVectorField time_translation() { return {Expr(1), {Expr(0), Expr(0)}}; }
    static PointVectorField spatial(const Vec2& Y) { return {Expr(0), Y}; }
    // "xi; etax; etay"
    static PointVectorField parse(const std::string& text);

    PointVectorField operator+(const PointVectorField& o) const;
    PointVectorField scaled(const Expr& c) const;
    PointVectorField simplified() const;
    bool point_symmetry() const;   // no velocity dependence
    std::string str(const std::array<std::string, 2>& coords = {"x", "y"}) const;
};

struct InconsistentSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DynamicalSystem {
    Metric2D metric;
    Connection2D gamma;
    Vec2 force{Expr(0), Expr(0)};
    std::optional<Expr> potential;

    static DynamicalSystem from_force(const Expr& fx, const Expr& fy, const Metric2D& g = Metric2D::euclidean());
    // Fⁱ = −gⁱʲV,ⱼ
    static DynamicalSystem from_potential(const Expr& V, const Metric2D& g = Metric2D::euclidean());

    const std::array<std::string, 2>& coords() const { return metric.coords; }
    static const std::array<std::string, 2>& velocities();
    // ωⁱ = −Γⁱⱼₖvʲvᵏ + Fⁱ
    Vec2 omega() const;
    bool conservative(const SampleDomain& dom = {}) const;
    bool free() const;
};

struct Prolongation {
    Vec2 G1;
    Vec2 G2;
    Expr lambda;   // −dξ/dt
};

// Total derivative along the flow of the system.
Expr total_derivative(const Expr& f, const DynamicalSystem& sys);
Prolongation prolong(const PointVectorField& X, const DynamicalSystem& sys);

struct LieSplit {
    Vec2 P0;
    std::array<std::array<Expr, 2>, 2> P1;
    Connection2D P2;
    Mat2 P3;
    std::vector<Expr> all() const;
};

// The four velocity-free coefficient groups of G² − X¹ω.
LieSplit lie_split(const PointVectorField& X, const DynamicalSystem& sys);
// G² − X¹ω computed directly.
Vec2 lie_direct(const PointVectorField& X, const DynamicalSystem& sys);

struct LieCheck {
    bool pass = false;
    bool direct_pass = false;
    bool split_pass = false;
    double direct_max = 0.0;
    std::array<double, 4> split_max{};   // P0..P3
};

struct RouteDisagreement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Throws RouteDisagreement if the two formulations disagree.
LieCheck lie_check(const DynamicalSystem& sys, const PointVectorField& X, const SampleDomain& dom = {});

enum class LieCase { Trivial, A1, A2, A3, B1, B2, Direct };
const char* lie_case_name(LieCase c);

struct SymmetryReport {
    PointVectorField vector;
    LieCase kind = LieCase::Direct;
    std::string source;                       // catalog entry or combination
    std::map<std::string, Number> constants;
    std::map<std::string, Expr> profiles;     // T(t), C(t), D(t)
    LieCheck check;
};

struct TimeProfile {
    Expr T;
    Expr dT;
    Expr intT;
};
// Basis of solutions of T'' = mT in closed form.
std::vector<TimeProfile> time_basis(const Number& m);

std::optional<SymmetryReport> solve_case_A1(const DynamicalSystem& sys, const CatalogEntry& Y,
                                            const SampleDomain& dom = {});
std::vector<SymmetryReport> solve_case_A2(const DynamicalSystem& sys, const CatalogEntry& Y,
                                          const SampleDomain& dom = {});

struct CaseA3 {
    Number epsilon;
    std::array<Number, 2> center;
    std::vector<std::map<std::string, Number>> spc_constants;   // per gradient KV
    std::vector<SymmetryReport> generators;
    std::string algebra;
};
std::optional<CaseA3> solve_case_A3(const DynamicalSystem& sys, const SampleDomain& dom = {});

std::vector<SymmetryReport> solve_case_B(const DynamicalSystem& sys, const SampleDomain& dom = {});

// All affine generators at once: null space of Σcₖ L_{Yₖ}F + d₁F = 0.
std::vector<SymmetryReport> solve_affine(const DynamicalSystem& sys, const SampleDomain& dom = {});
// Combinations of the gradient KVs and the HV: L_YF + 4ψF = mY.
std::vector<SymmetryReport> solve_gradient(const DynamicalSystem& sys, const SampleDomain& dom = {});

// Keeps the reports whose vectors are linearly independent of the earlier ones.
std::vector<SymmetryReport> dedup_span(const std::vector<SymmetryReport>& in, const SampleDomain& dom = {});
bool in_span(const std::vector<PointVectorField>& basis, const PointVectorField& X, const SampleDomain& dom = {});

std::vector<SymmetryReport> full_solve(const DynamicalSystem& sys, const SampleDomain& dom = {});

}  // namespace symlie

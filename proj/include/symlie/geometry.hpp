#pragma once

#include "symlie/expr.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace symlie {

using Vec2 = std::array<Expr, 2>;
using Mat2 = std::array<std::array<Expr, 2>, 2>;

enum class Signature { Euclidean, Lorentzian, General };

const char* signature_name(Signature s);
Signature signature_from_name(const std::string& s);

struct SingularMetric : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Metric2D {
    Mat2 g{Expr(1), Expr(0), Expr(0), Expr(1)};
    Signature signature = Signature::Euclidean;
    std::array<std::string, 2> coords{"x", "y"};

    static Metric2D euclidean();
    static Metric2D lorentzian();
    // Throws SingularMetric if det g vanishes identically.
    static Metric2D general(const Expr& gxx, const Expr& gxy, const Expr& gyy,
                            std::array<std::string, 2> coords = {"x", "y"});
    static Metric2D of(Signature s);

    Expr det() const;
    Mat2 inverse() const;
    // Flat Cartesian chart: constant components.
    bool flat_cartesian() const;
    Vec2 lower(const Vec2& v) const;
};

// c[i][j][k] = Γⁱⱼₖ, also used for any rank (1,2) tensor.
struct Connection2D {
    std::array<std::array<std::array<Expr, 2>, 2>, 2> c;
    Connection2D();
    const Expr& operator()(int i, int j, int k) const { return c[i][j][k]; }
    Expr& operator()(int i, int j, int k) { return c[i][j][k]; }
    std::vector<Expr> flat() const;
};

Connection2D christoffel(const Metric2D& g);

Mat2 lie_derivative_metric(const Vec2& Y, const Metric2D& g);
// [Y, F] for a contravariant F.
Vec2 lie_derivative_vector(const Vec2& Y, const Vec2& F, const std::array<std::string, 2>& coords = {"x", "y"});
Connection2D lie_derivative_connection(const Vec2& Y, const Connection2D& gamma,
                                       const std::array<std::string, 2>& coords = {"x", "y"});

enum class Collineation { None, KV, HV, CKV, AC, SPC, PC };
const char* collineation_name(Collineation c);

struct CollineationInfo {
    Collineation cls = Collineation::None;
    bool gradient = false;          // lowered components are a gradient
    std::optional<Expr> psi;        // L_Y g = 2ψg
    std::optional<Vec2> phi_grad;   // L_Y Γ = φ,j δⁱₖ + φ,k δⁱⱼ
    std::optional<Expr> phi;        // when φ,j are constant
};

bool is_killing(const Vec2& Y, const Metric2D& g, const SampleDomain& dom = {});
bool is_homothetic(const Vec2& Y, const Metric2D& g, const Expr& psi, const SampleDomain& dom = {});
bool is_affine(const Vec2& Y, const Metric2D& g, const SampleDomain& dom = {});
bool is_gradient(const Vec2& Y, const Metric2D& g, const SampleDomain& dom = {});

CollineationInfo classify_collineation(const Vec2& Y, const Metric2D& g, const SampleDomain& dom = {});

enum class EntryKind { GradientKV, NongradientKV, HV, AC, SPC };
const char* entry_kind_name(EntryKind k);

struct CatalogEntry {
    std::string label;
    Vec2 Y;
    EntryKind kind;
    std::optional<Expr> S;   // gradient function
    Expr psi{0};
    std::optional<Expr> phi;

    bool affine() const { return kind != EntryKind::SPC; }
    bool gradient() const { return S.has_value(); }
    bool matches(const CollineationInfo& info) const;
};

std::vector<CatalogEntry> catalog(Signature s);

// "a*x + b" style printing of a vector field Yˣ∂x + Yʸ∂y.
std::string vector_string(const Vec2& Y, const std::array<std::string, 2>& coords = {"x", "y"});

}  // namespace symlie

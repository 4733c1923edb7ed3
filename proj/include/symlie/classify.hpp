#pragma once

#include "symlie/noether.hpp"

#include <functional>

namespace symlie {

enum class RowKind { LieAffine, LieGradient, NoetherA, NoetherB };
const char* row_kind_name(RowKind k);

enum class Applies { Force, Potential };

struct RowBasis {
    std::string label;
    Vec2 Y;
    Number psi{0};
    std::optional<Expr> G;   // lowered Y = ∇G, needed by NoetherB rows
};

using Constants = std::map<std::string, Number>;

struct FamilyRow {
    int table = 0;
    int line = 0;
    RowKind kind = RowKind::LieAffine;
    Applies applies = Applies::Force;
    Signature signature = Signature::Euclidean;
    std::string vector;                 // listed symmetry vector
    std::string family;                 // listed force or potential
    std::vector<RowBasis> basis;        // basis[0] carries coefficient 1
    std::vector<std::string> params;    // name of each basis coefficient; "" unnamed, "_x" hidden
    bool combination = false;           // reject vectors proportional to a single catalog entry
    std::function<bool(const Constants&)> accept;
    std::optional<std::pair<std::size_t, std::size_t>> square;   // coefficient second = first²

    std::string id() const;
};

// Rows of Tables 4–16 for the given chart. On the Lorentzian chart the rotation becomes the boost.
const std::vector<FamilyRow>& family_rows(Signature s);

struct RowMatch {
    FamilyRow row;
    Constants constants;                    // d, m, c1, d0 and the row parameters
    std::vector<PointVectorField> vectors;  // every one passes lie_check
    std::vector<NoetherResult> noether;     // NoetherA/B rows
    std::string column() const;
};

struct MatchReport {
    std::vector<RowMatch> matches;   // ordered by (table, line, m)
    bool unmatched() const { return matches.empty(); }
};

struct ClassifyOptions {
    std::optional<int> table;
    SampleDomain dom;
};

MatchReport classify_force(const Expr& Fx, const Expr& Fy, const ClassifyOptions& opt = {});
MatchReport classify_potential(const Expr& V, Signature s = Signature::Euclidean, const ClassifyOptions& opt = {});

// Admissible readings of one row; pencil rows (LieGradient, NoetherB) give one per distinct m.
std::vector<RowMatch> match_row(const FamilyRow& row, const DynamicalSystem& sys, const SampleDomain& dom = {});

// Fixture instance of a table row: f(u) = 1 + u², g(u) = u, a = 1, b = 2, c = 1, h = 3.
struct RowFixture {
    int table = 0;
    int line = 0;
    std::string label;                 // e.g. "d=2", "m=-1"
    bool potential = false;
    std::string Fx, Fy, V;             // engine force, or potential
    std::vector<std::string> vectors;  // listed vector(s), "xi; etax; etay"
    Constants constants;               // d or m of the instance
    // NoetherA: f = c1·t; NoetherB: f = Ṫ·G + d·∫T
    std::vector<std::string> integrals;   // closed forms, one per vector
};

std::vector<RowFixture> row_fixtures();

}  // namespace symlie

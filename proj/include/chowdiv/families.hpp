#pragma once

#include "chowdiv/graded_ring.hpp"

#include <memory>
#include <stdexcept>

namespace chowdiv {

// Raised on malformed textual input (family / space JSON or compact specs),
// as opposed to semantically invalid parameters, which throw
// std::invalid_argument.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Chern classes of a rank-N bundle over a base model: coeffs[i-1] is the
// coordinate vector of c_i in the base's degree-i basis. Entries whose degree
// exceeds the base cutoff are the zero module and must be empty vectors.
struct ChernSpec {
    int bundle_rank = 0;
    std::vector<std::vector<Int>> coeffs;
};

// One of the homogeneous spaces of the splitting table.
struct SpaceSpec {
    enum class Kind { Pn, Qn, G, OG, SG, SGmax };
    Kind kind{};
    int k = 0;  // G/OG/SG only
    int n = 0;  // Pn/Qn: dimension; G: ambient n; OG/SG: odd ambient 2m-1; SGmax: m

    int m() const { return (n + 1) / 2; }  // OG/SG convenience
};

// Validates the parameter ranges of the table rows; throws
// std::invalid_argument outside them.
SpaceSpec make_space(SpaceSpec::Kind kind, int k, int n);
std::string space_name(const SpaceSpec& s);

// Closed-form splitting rank bound s(X) of the table.
int s_closed_form(const SpaceSpec& s);

// Expression tree naming a ring family.
struct FamilyExpr;
using FamilyPtr = std::shared_ptr<const FamilyExpr>;

struct FamilyExpr {
    enum class Kind { Proj, QuadricOdd, QuadricEven, Product, ProjBundle, Veronese2, Vmrt };
    Kind kind{};
    int m = 0;                // Proj / quadrics / Veronese2
    FamilyPtr left, right;    // Product
    FamilyPtr base;           // ProjBundle
    ChernSpec chern;          // ProjBundle
    SpaceSpec space;          // Vmrt preset

    static FamilyPtr proj(int m);
    static FamilyPtr quadric_odd(int m);
    static FamilyPtr quadric_even(int m);
    static FamilyPtr product(FamilyPtr left, FamilyPtr right);
    static FamilyPtr proj_bundle(FamilyPtr base, ChernSpec chern);
    static FamilyPtr veronese2(int m);
    static FamilyPtr vmrt(SpaceSpec space);
};

// Ring constructors. All are deterministic: equal inputs give identical
// models, including labels and table layout.

// CH*(P^m) = Z[h]/(h^{m+1}): cutoff m, every rank 1.
GradedRingModel build_proj(int m);

// Odd quadric Q^m, m = 2n+1 >= 3. One generator g_d per degree;
// g_i*g_j = kappa*g_{i+j} with kappa = 2 exactly when i,j <= n < i+j.
GradedRingModel build_quadric_odd(int m);

// Even quadric Q^m, m = 2n >= 2. Rank 2 in the middle degree (classes a, b),
// rank 1 elsewhere; relations c*a = c*b, c^n = a+b, and the parity-dependent
// top products a^2 = b^2 = eps*[pt], a*b = (1-eps)*[pt] with eps = 1 iff n even.
GradedRingModel build_quadric_even(int m);

// Tensor product model with Kuenneth basis (pairs of basis classes).
GradedRingModel build_product(const GradedRingModel& A, const GradedRingModel& B);

// P(V) over the base: basis {beta * u^t, 0 <= t < N}, multiplication reduced
// by u^N + c_1 u^{N-1} + ... + c_N = 0.
GradedRingModel build_proj_bundle(const GradedRingModel& base, const ChernSpec& chern);

GradedRingModel build_family(const FamilyExpr& expr);

// The ring family of the variety of minimal rational tangents of each space.
FamilyExpr vmrt_of(const SpaceSpec& space);

// JSON format: {"type":"proj","m":3}, {"type":"quadric_odd","m":5},
// {"type":"product","left":...,"right":...},
// {"type":"proj_bundle","base":...,"rank":N,"chern":[[..],..]},
// {"type":"veronese2","m":4}, {"type":"vmrt","space":{"type":"G","k":2,"n":5}}.
FamilyPtr parse_family(const std::string& json_text);
std::string family_to_json(const FamilyExpr& expr);  // canonical bytes

// Space specs: JSON {"type":"OG","k":2,"n":9} or compact "OG,2,9" / "P,5" /
// "SGmax,4".
SpaceSpec parse_space(const std::string& text);
std::string space_to_json(const SpaceSpec& s);

}  // namespace chowdiv

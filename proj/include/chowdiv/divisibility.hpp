#pragma once

#include "chowdiv/families.hpp"
#include "chowdiv/graded_ring.hpp"

#include <optional>

namespace chowdiv {

// A ring has good divisibility up to degree r when x*y = 0 forces x = 0 or
// y = 0 for all homogeneous x, y with deg x + deg y <= r. This module decides
// the property on explicit models (exactly wherever one side has rank <= 2,
// by bounded search otherwise) and certifies bounds structurally from the
// family expression; the two engines cross-validate each other.

enum class PairStatus { Certified, Refuted, Unknown };

struct Witness {
    Element x, y;  // both nonzero, x*y = 0; primitive vectors, leading sign +
};

struct PairVerdict {
    int i = 0, j = 0;
    PairStatus status = PairStatus::Unknown;
    std::optional<Witness> witness;  // present exactly when Refuted
    // "rank0-target" | "rank1-exact" | "matrix-rank-exact" |
    // "binary-form-exact" | "bounded-search"
    std::string method;
};

// Decision procedure for one degree pair. Exact when min(rank_i, rank_j) <= 2
// or the target rank is 0; otherwise exhaustive search over one side up to
// the given coordinate height, returning Unknown on exhaustion. i + j may
// exceed the cutoff (the target is then the zero module).
PairVerdict check_pair(const GradedRingModel& R, int i, int j, int height);

// First refuted pair in scan order (total degree ascending, then the smaller
// degree ascending; each unordered pair once, as (i, j) with i <= j).
// max_degree may reach 2*cutoff; beyond cutoff every pair is trivially
// refuted by the vanishing of the target.
std::optional<PairVerdict> find_witness(const GradedRingModel& R, int max_degree, int height);

struct DivisibilityVerdict {
    enum class Status { CertifiedUpTo, RefutedAt, UnknownFrom };
    int max_degree = 0;  // scanned limit
    int bound = 0;       // largest r' with every pair of total degree <= r' certified
    Status status = Status::CertifiedUpTo;
    int at = -1;                       // degree for RefutedAt / UnknownFrom
    std::optional<Witness> witness;    // first refutation
    std::optional<int> refuted_at;     // first refuted total degree
    std::optional<int> unknown_from;   // first undecided total degree
    bool exact = true;                 // no pair fell back to bounded search unresolved
    std::vector<PairVerdict> pairs;
};

// Aggregates check_pair over all pairs with i+j <= max_degree (default: the
// cutoff). Deterministic scan order; monotone by construction.
DivisibilityVerdict gd_bound_checked(const GradedRingModel& R, int height, int max_degree = -1);

enum class AxiomSet { Paper, Checked };
const char* axiom_set_name(AxiomSet a);
AxiomSet parse_axiom_set(const std::string& name);

// Derivation tree applying the good-divisibility axioms for the leaf
// families and the closure rules for products and projective bundles.
struct CertNode {
    std::string rule;  // "proj" | "quadric-odd" | "quadric-even" | "veronese2"
                       // | "product" | "proj-bundle" | "vmrt"
    std::string display;
    int bound = 0;
    std::vector<CertNode> children;
};

struct StructuralCertificate {
    AxiomSet axioms{};
    int bound = 0;
    CertNode root;
};

// Leaf axioms: proj-space m; odd quadric m; even quadric m-1 under the
// stated ("paper") axiom set, m/2 under the table-checked set; veronese2(m)
// as proj-space m-1. Closure: product -> min of factors; P(V) of rank N ->
// min(base, N-1).
StructuralCertificate certify_structural(const FamilyExpr& expr, AxiomSet axioms);

std::string certificate_to_text(const StructuralCertificate& cert);

struct CrossValidation {
    std::string family;  // canonical expression text
    StructuralCertificate cert_paper, cert_checked;
    std::optional<DivisibilityVerdict> checked;  // absent when the model cannot be built
    std::string build_error;
    // "equal": checker decided every pair and matches the certificate;
    // "consistent": one-sided (undecided pairs, no contradiction);
    // "conflict": verified witness at or below the certified bound;
    // "n/a": no model.
    std::string agree_paper, agree_checked;
    bool discrepancy = false;  // some certificate conflicts with a verified witness
};

CrossValidation cross_validate(const FamilyExpr& expr, int height);

}  // namespace chowdiv

#pragma once

#include "chowdiv/numeric.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chowdiv {

// Explicit graded ring with integer structure constants: the rank of each
// graded piece up to a cutoff, a label per basis element, and for each degree
// pair (i,j) with i+j <= cutoff a table expressing products of basis elements
// in the basis of degree i+j. Pieces above the cutoff are the zero module.
//
// Models are immutable after construction; every operation below is a pure
// function of its inputs and safe to call concurrently.
struct GradedRingModel {
    int cutoff = 0;
    std::vector<int> ranks;                              // size cutoff+1, ranks[0] == 1
    std::vector<std::vector<std::string>> basis_labels;  // labels[d].size() == ranks[d]
    // Flat tables: key (i,j), value of size ranks[i]*ranks[j]*ranks[i+j],
    // entry (p,q,k) at ((p*ranks[j])+q)*ranks[i+j]+k.
    std::map<std::pair<int, int>, std::vector<Int>> tables;

    int rank(int d) const { return (d >= 0 && d <= cutoff) ? ranks[d] : 0; }

    const Int& sc(int i, int j, int p, int q, int k) const {
        const std::vector<Int>& t = tables.at({i, j});
        return t[(static_cast<size_t>(p) * ranks[j] + q) * ranks[i + j] + k];
    }
};

// Homogeneous class: a degree and an exact integer coordinate vector in that
// degree's basis.
struct Element {
    int degree = 0;
    std::vector<Int> coeffs;
};

bool is_zero(const Element& x);
bool operator==(const Element& a, const Element& b);

// Constructor with validation: shapes, ranks[0] == 1, presence of every table
// for i+j <= cutoff and no others, and the degree-0 generator acting as a
// two-sided identity. Commutativity/associativity are checked separately by
// verify_ring_axioms. Throws std::invalid_argument.
GradedRingModel make_ring(int cutoff, std::vector<int> ranks,
                          std::vector<std::vector<std::string>> basis_labels,
                          std::map<std::pair<int, int>, std::vector<Int>> tables);

struct AxiomViolation {
    std::string kind;  // "identity" | "commutativity" | "associativity"
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks identity action, commutativity of all stored tables, and
// associativity over all basis triples with total degree <= cutoff.
// Violations are report content, not errors.
AxiomReport verify_ring_axioms(const GradedRingModel& R);

Element zero_element(const GradedRingModel& R, int degree);
Element basis_element(const GradedRingModel& R, int degree, int index);

// Bilinear, commutative, associative product. Degrees above the cutoff give
// the zero element of the top degree (graded pieces there are zero).
Element mul(const GradedRingModel& R, const Element& x, const Element& y);

Element add(const Element& x, const Element& y);   // throws on degree mismatch
Element sub(const Element& x, const Element& y);
Element neg(const Element& x);
Element scale(const Int& n, const Element& x);

// Canonical byte serialization (version 1). Identical models produce
// byte-identical output.
std::string serialize(const GradedRingModel& R);

// Parses and validates; throws std::runtime_error on malformed input or
// version mismatch, std::invalid_argument on invariant violations.
GradedRingModel deserialize(const std::string& bytes);

// Human-readable linear combination in basis labels, e.g. "a - b".
std::string format_element(const GradedRingModel& R, const Element& x);

}  // namespace chowdiv

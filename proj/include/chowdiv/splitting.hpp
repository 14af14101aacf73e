#pragma once

#include "chowdiv/divisibility.hpp"

namespace chowdiv {

// Chern-class side of the splitting criterion: a uniform bundle restricts to
// each Schubert line with a fixed splitting type; after twisting, Whitney
// factorizations of 1 in the VMRT ring are what could obstruct the splitting,
// and good divisibility rules them out degree by degree.

struct SplittingType {
    std::vector<int> type;    // weakly decreasing, type[0] == 0 after normalization
    int twist = 0;            // twist applied (negative of the original maximum)
    int leading_trivial = 0;  // multiplicity of 0 at the front
};

// Sorts weakly decreasing and twists the maximum to zero. Idempotent and
// invariant under permutations of the input. Throws on empty input.
SplittingType normalize_splitting_type(std::vector<int> raw);

// Components of a candidate factorization c(H) * c(Q) = 1 restricted to the
// ring: c[i] has degree i+1, ctilde[j] degree j+1; constant terms are an
// implicit 1.
struct WhitneyPair {
    std::vector<Element> c, ctilde;
};

// Degree-d coefficients of (1 + sum c)(1 + sum ctilde) for d = 1..cutoff.
std::vector<Element> whitney_product(const GradedRingModel& R, const WhitneyPair& pair);

// Exhaustive search for nontrivial factorizations of 1 with k first-factor
// and l second-factor components, all coefficients of height <= H. The
// second factor is determined degree by degree, so the enumeration runs over
// the first factor only; pairs whose determined side exceeds the height are
// outside the declared space and dropped. Canonically ordered results.
// Throws when the candidate space exceeds the guard.
std::vector<WhitneyPair> find_unit_factorizations(const GradedRingModel& R, int k, int l,
                                                  int height,
                                                  unsigned long long guard = 100000000ull);

struct ForcedVanishing {
    bool holds = false;
    std::optional<WhitneyPair> counterexample;
};

// True iff no nontrivial truncated factorization of 1 exists for the split
// (k, r-k); the computational content of the splitting criterion at rank r.
ForcedVanishing forced_vanishing_holds(const GradedRingModel& R, int r, int k, int height);

enum class SplitStatus { Splits, Unknown };

struct SplitVerdict {
    SplitStatus status = SplitStatus::Unknown;
    int rank = 0;
    int bound = 0;  // certified good-divisibility bound of the VMRT
    AxiomSet axioms{};
    StructuralCertificate certificate;
    std::string note;
};

// Splits iff rank <= certified VMRT bound under the chosen axiom set. The
// criterion is one-directional: no "does not split" verdict exists.
SplitVerdict splitting_verdict(const SpaceSpec& space, int rank, AxiomSet axioms);

}  // namespace chowdiv

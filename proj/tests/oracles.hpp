#pragma once

// Test-side oracles, independent of the construction paths they check.

#include "chowdiv/families.hpp"
#include "chowdiv/graded_ring.hpp"

#include <string>
#include <utility>
#include <vector>

namespace chowdiv::testing {

// CH*(G(1,3)) in the Schubert basis {1; s1; s2, s11; s21; s22}, products
// hard-coded from the classical multiplication rules. G(1,3) is the
// four-dimensional quadric, so this is an independent model of Q^4.
inline GradedRingModel schubert_g13() {
    std::vector<int> ranks{1, 1, 2, 1, 1};
    std::vector<std::vector<std::string>> labels{
        {"1"}, {"s1"}, {"s2", "s11"}, {"s21"}, {"s22"}};
    std::map<std::pair<int, int>, std::vector<Int>> t;
    auto cube = [&](int i, int j, std::vector<long> v) {
        std::vector<Int> w(v.begin(), v.end());
        t[{i, j}] = std::move(w);
    };
    // identities
    cube(0, 0, {1});
    cube(0, 1, {1});
    cube(1, 0, {1});
    cube(0, 2, {1, 0, 0, 1});
    cube(2, 0, {1, 0, 0, 1});
    cube(0, 3, {1});
    cube(3, 0, {1});
    cube(0, 4, {1});
    cube(4, 0, {1});
    // s1*s1 = s2 + s11 (Pieri)
    cube(1, 1, {1, 1});
    // s1*s2 = s21, s1*s11 = s21
    cube(1, 2, {1, 1});
    cube(2, 1, {1, 1});
    // s1*s21 = s22
    cube(1, 3, {1});
    cube(3, 1, {1});
    // s2*s2 = s22 = s11*s11, s2*s11 = 0 (duality pairing)
    cube(2, 2, {1, 0, 0, 1});
    return make_ring(4, std::move(ranks), std::move(labels), std::move(t));
}

// Multiplies two classes of a Kuenneth product model directly through the
// factor models, never touching the assembled product tables. Follows the
// documented basis order (left degree ascending, then left index, then
// right index).
inline Element product_oracle_mul(const GradedRingModel& A, const GradedRingModel& B,
                                  const Element& x, const Element& y) {
    int cutoff = A.cutoff + B.cutoff;
    auto decomp = [&](int d) {
        std::vector<std::pair<int, int>> blocks;  // (left degree, block size), p descending
        for (int p = std::min(d, A.cutoff); p >= std::max(0, d - B.cutoff); --p)
            blocks.emplace_back(p, A.ranks[p] * B.ranks[d - p]);
        return blocks;
    };
    auto rank = [&](int d) {
        int r = 0;
        for (auto [p, sz] : decomp(d)) r += sz;
        return r;
    };
    auto index = [&](int d, int p, int i, int j) {
        int off = 0;
        for (auto [pp, sz] : decomp(d)) {
            if (pp == p) break;
            off += sz;
        }
        return off + i * B.ranks[d - p] + j;
    };

    int d = x.degree + y.degree;
    if (d > cutoff) return Element{cutoff, std::vector<Int>(rank(cutoff), Int(0))};
    Element out{d, std::vector<Int>(rank(d), Int(0))};
    for (auto [p1, sz1] : decomp(x.degree)) {
        (void)sz1;
        int q1 = x.degree - p1;
        for (int i1 = 0; i1 < A.ranks[p1]; ++i1)
            for (int j1 = 0; j1 < B.ranks[q1]; ++j1) {
                const Int& cx = x.coeffs[index(x.degree, p1, i1, j1)];
                if (cx == 0) continue;
                for (auto [p2, sz2] : decomp(y.degree)) {
                    (void)sz2;
                    int q2 = y.degree - p2;
                    if (p1 + p2 > A.cutoff || q1 + q2 > B.cutoff) continue;
                    for (int i2 = 0; i2 < A.ranks[p2]; ++i2)
                        for (int j2 = 0; j2 < B.ranks[q2]; ++j2) {
                            const Int& cy = y.coeffs[index(y.degree, p2, i2, j2)];
                            if (cy == 0) continue;
                            Element ea = basis_element(A, p1, i1);
                            Element eb = basis_element(A, p2, i2);
                            Element fa = basis_element(B, q1, j1);
                            Element fb = basis_element(B, q2, j2);
                            Element pa = mul(A, ea, eb);
                            Element pb = mul(B, fa, fb);
                            for (int k = 0; k < A.ranks[p1 + p2]; ++k) {
                                if (pa.coeffs[k] == 0) continue;
                                for (int l = 0; l < B.ranks[q1 + q2]; ++l) {
                                    if (pb.coeffs[l] == 0) continue;
                                    out.coeffs[index(d, p1 + p2, k, l)] +=
                                        cx * cy * pa.coeffs[k] * pb.coeffs[l];
                                }
                            }
                        }
                }
            }
    }
    return out;
}

// Named family expressions exercised across the suites. Every model here has
// cutoff <= 12.
inline std::vector<std::pair<std::string, FamilyPtr>> corpus() {
    using FE = FamilyExpr;
    std::vector<std::pair<std::string, FamilyPtr>> out;
    for (int m = 1; m <= 6; ++m)
        out.emplace_back("P" + std::to_string(m), FE::proj(m));
    for (int m : {3, 5, 7})
        out.emplace_back("Qodd" + std::to_string(m), FE::quadric_odd(m));
    for (int m : {2, 4, 6, 8})
        out.emplace_back("Qeven" + std::to_string(m), FE::quadric_even(m));
    out.emplace_back("P1xP1", FE::product(FE::proj(1), FE::proj(1)));
    out.emplace_back("P2xP2", FE::product(FE::proj(2), FE::proj(2)));
    out.emplace_back("P2xP3", FE::product(FE::proj(2), FE::proj(3)));
    out.emplace_back("P3xP3", FE::product(FE::proj(3), FE::proj(3)));
    out.emplace_back("P2xQ3", FE::product(FE::proj(2), FE::quadric_odd(3)));
    out.emplace_back("P2xQ4", FE::product(FE::proj(2), FE::quadric_even(4)));
    out.emplace_back("P1xP1xP2",
                     FE::product(FE::product(FE::proj(1), FE::proj(1)), FE::proj(2)));
    {
        ChernSpec c;  // O(1)+O(1) over P^2
        c.bundle_rank = 2;
        c.coeffs = {{Int(2)}, {Int(1)}};
        out.emplace_back("P(O11/P2)", FE::proj_bundle(FE::proj(2), std::move(c)));
    }
    {
        ChernSpec c;  // O(2)+O(1) over P^1
        c.bundle_rank = 2;
        c.coeffs = {{Int(3)}, {}};
        out.emplace_back("P(O2O1/P1)", FE::proj_bundle(FE::proj(1), std::move(c)));
    }
    {
        ChernSpec c;  // O(1,0)+O(0,1) over P^1 x P^1
        c.bundle_rank = 2;
        c.coeffs = {{Int(1), Int(1)}, {Int(1)}};
        out.emplace_back("P(O10+O01/P1xP1)",
                         FE::proj_bundle(FE::product(FE::proj(1), FE::proj(1)), std::move(c)));
    }
    out.emplace_back("SG(1,7)-vmrt",
                     std::make_shared<FamilyExpr>(vmrt_of(make_space(SpaceSpec::Kind::SG, 1, 7))));
    out.emplace_back("SG(2,9)-vmrt",
                     std::make_shared<FamilyExpr>(vmrt_of(make_space(SpaceSpec::Kind::SG, 2, 9))));
    out.emplace_back("V2P3", FE::veronese2(4));
    out.emplace_back("G(2,5)-vmrt",
                     std::make_shared<FamilyExpr>(vmrt_of(make_space(SpaceSpec::Kind::G, 2, 5))));
    return out;
}

}  // namespace chowdiv::testing

#include "chowdiv/families.hpp"

#include <sstream>
#include <stdexcept>

namespace chowdiv {

namespace {

std::string pow_label(const std::string& g, int e) {
    if (e == 0) return "1";
    if (e == 1) return g;
    std::ostringstream os;
    os << g << "^" << e;
    return os.str();
}

Int binom(int a, int b) {
    if (b < 0 || b > a) return 0;
    Int r = 1;
    for (int i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;
    }
    return r;
}

using TableMap = std::map<std::pair<int, int>, std::vector<Int>>;

}  // namespace

GradedRingModel build_proj(int m) {
    if (m < 1) throw std::invalid_argument("build_proj: m must be >= 1");
    std::vector<int> ranks(m + 1, 1);
    std::vector<std::vector<std::string>> labels(m + 1);
    for (int d = 0; d <= m; ++d) labels[d] = {pow_label("h", d)};
    TableMap tables;
    for (int i = 0; i <= m; ++i)
        for (int j = 0; i + j <= m; ++j) tables[{i, j}] = {Int(1)};
    return make_ring(m, std::move(ranks), std::move(labels), std::move(tables));
}

GradedRingModel build_quadric_odd(int m) {
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("build_quadric_odd: m must be odd and >= 3");
    int n = (m - 1) / 2;
    std::vector<int> ranks(m + 1, 1);
    std::vector<std::vector<std::string>> labels(m + 1);
    for (int d = 0; d <= m; ++d) {
        std::ostringstream os;
        os << "g" << d;
        labels[d] = {d == 0 ? std::string("1") : os.str()};
    }
    TableMap tables;
    for (int i = 0; i <= m; ++i)
        for (int j = 0; i + j <= m; ++j) {
            // The generator switches from h^d to h^d/2 at degree n+1, so the
            // only products that pick up the degree-2 factor are those with
            // both operands primitive and the result past the middle.
            bool doubled = i >= 1 && j >= 1 && i <= n && j <= n && i + j >= n + 1;
            tables[{i, j}] = {Int(doubled ? 2 : 1)};
        }
    return make_ring(m, std::move(ranks), std::move(labels), std::move(tables));
}

GradedRingModel build_quadric_even(int m) {
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("build_quadric_even: m must be even and >= 2");
    int n = m / 2;
    int eps = (n % 2 == 0) ? 1 : 0;
    std::vector<int> ranks(m + 1, 1);
    ranks[n] = 2;
    std::vector<std::vector<std::string>> labels(m + 1);
    for (int d = 0; d <= m; ++d) {
        if (d < n)
            labels[d] = {pow_label("c", d)};
        else if (d == n)
            labels[d] = {"a", "b"};
        else
            labels[d] = {pow_label("c", d - n) + "*a"};
    }
    TableMap tables;
    for (int i = 0; i <= m; ++i) {
        for (int j = 0; i + j <= m; ++j) {
            int ri = ranks[i], rj = ranks[j], rk = ranks[i + j];
            std::vector<Int> t(static_cast<size_t>(ri) * rj * rk, Int(0));
            auto set = [&](int p, int q, int k, long v) {
                t[(static_cast<size_t>(p) * rj + q) * rk + k] = v;
            };
            if (i == 0) {
                for (int q = 0; q < rj; ++q) set(0, q, q, 1);
            } else if (j == 0) {
                for (int p = 0; p < ri; ++p) set(p, 0, p, 1);
            } else if (i < n && j < n) {
                if (i + j < n)
                    set(0, 0, 0, 1);       // c^i * c^j = c^{i+j}
                else if (i + j == n) {
                    set(0, 0, 0, 1);       // c^n = a + b
                    set(0, 0, 1, 1);
                } else
                    set(0, 0, 0, 2);       // c^{i+j} = 2 c^{i+j-n}*a past the middle
            } else if (i < n && j == n) {
                set(0, 0, 0, 1);           // c^i * a = c^i * b = c^i*a
                set(0, 1, 0, 1);
            } else if (i == n && j < n) {
                set(0, 0, 0, 1);
                set(1, 0, 0, 1);
            } else if (i < n || j < n) {
                set(0, 0, 0, 1);           // c^i * (c^t*a) = c^{i+t}*a
            } else {
                // middle times middle (i == j == n)
                set(0, 0, 0, eps);         // a*a
                set(0, 1, 0, 1 - eps);     // a*b
                set(1, 0, 0, 1 - eps);
                set(1, 1, 0, eps);         // b*b
            }
            tables[{i, j}] = std::move(t);
        }
    }
    return make_ring(m, std::move(ranks), std::move(labels), std::move(tables));
}

namespace {

// Basis bookkeeping for product models: degree-d basis elements are triples
// (p, i, j) with p + q = d, ordered by left degree p descending (classes
// pulled back from the left factor come first), then i, then j.
struct ProductIndex {
    const GradedRingModel& A;
    const GradedRingModel& B;
    int cutoff;

    ProductIndex(const GradedRingModel& a, const GradedRingModel& b)
        : A(a), B(b), cutoff(a.cutoff + b.cutoff) {}

    int pmax(int d) const { return std::min(d, A.cutoff); }
    int pmin(int d) const { return std::max(0, d - B.cutoff); }

    int rank(int d) const {
        int r = 0;
        for (int p = pmax(d); p >= pmin(d); --p) r += A.ranks[p] * B.ranks[d - p];
        return r;
    }

    int index(int d, int p, int i, int j) const {
        int off = 0;
        for (int pp = pmax(d); pp > p; --pp) off += A.ranks[pp] * B.ranks[d - pp];
        return off + i * B.ranks[d - p] + j;
    }
};

}  // namespace

GradedRingModel build_product(const GradedRingModel& A, const GradedRingModel& B) {
    ProductIndex ix(A, B);
    int cutoff = ix.cutoff;
    std::vector<int> ranks(cutoff + 1);
    std::vector<std::vector<std::string>> labels(cutoff + 1);
    for (int d = 0; d <= cutoff; ++d) {
        ranks[d] = ix.rank(d);
        labels[d].reserve(ranks[d]);
        for (int p = ix.pmax(d); p >= ix.pmin(d); --p) {
            int q = d - p;
            for (int i = 0; i < A.ranks[p]; ++i)
                for (int j = 0; j < B.ranks[q]; ++j)
                    labels[d].push_back(A.basis_labels[p][i] + "⊗" + B.basis_labels[q][j]);
        }
    }

    TableMap tables;
    for (int d1 = 0; d1 <= cutoff; ++d1) {
        for (int d2 = 0; d1 + d2 <= cutoff; ++d2) {
            int d = d1 + d2;
            std::vector<Int> t(static_cast<size_t>(ranks[d1]) * ranks[d2] * ranks[d], Int(0));
            auto at = [&](int p, int q, int k) -> Int& {
                return t[(static_cast<size_t>(p) * ranks[d2] + q) * ranks[d] + k];
            };
            for (int p1 = 0; p1 <= std::min(d1, A.cutoff); ++p1) {
                int q1 = d1 - p1;
                if (q1 > B.cutoff) continue;
                for (int p2 = 0; p2 <= std::min(d2, A.cutoff); ++p2) {
                    int q2 = d2 - p2;
                    if (q2 > B.cutoff) continue;
                    if (p1 + p2 > A.cutoff || q1 + q2 > B.cutoff) continue;  // factor vanishes
                    for (int i1 = 0; i1 < A.ranks[p1]; ++i1)
                        for (int j1 = 0; j1 < B.ranks[q1]; ++j1) {
                            int row = ix.index(d1, p1, i1, j1);
                            for (int i2 = 0; i2 < A.ranks[p2]; ++i2)
                                for (int j2 = 0; j2 < B.ranks[q2]; ++j2) {
                                    int col = ix.index(d2, p2, i2, j2);
                                    for (int k = 0; k < A.ranks[p1 + p2]; ++k) {
                                        const Int& ca = A.sc(p1, p2, i1, i2, k);
                                        if (ca == 0) continue;
                                        for (int l = 0; l < B.ranks[q1 + q2]; ++l) {
                                            const Int& cb = B.sc(q1, q2, j1, j2, l);
                                            if (cb == 0) continue;
                                            at(row, col, ix.index(d, p1 + p2, k, l)) += ca * cb;
                                        }
                                    }
                                }
                        }
                }
            }
            tables[{d1, d2}] = std::move(t);
        }
    }
    return make_ring(cutoff, std::move(ranks), std::move(labels), std::move(tables));
}

namespace {

// Coefficient vector of a base class of the given degree; empty above the
// cutoff (the zero module).
using BaseVec = std::vector<Int>;

BaseVec base_zero(const GradedRingModel& base, int degree) {
    if (degree < 0 || degree > base.cutoff) return {};
    return BaseVec(base.ranks[degree], Int(0));
}

BaseVec base_mul(const GradedRingModel& base, int da, const BaseVec& va, int db,
                 const BaseVec& vb) {
    int d = da + db;
    BaseVec out = base_zero(base, d);
    if (out.empty() || va.empty() || vb.empty()) return out;
    for (int p = 0; p < base.ranks[da]; ++p) {
        if (va[p] == 0) continue;
        for (int q = 0; q < base.ranks[db]; ++q) {
            if (vb[q] == 0) continue;
            Int c = va[p] * vb[q];
            for (int k = 0; k < base.ranks[d]; ++k) {
                const Int& s = base.sc(da, db, p, q, k);
                if (s != 0) out[k] += c * s;
            }
        }
    }
    return out;
}

}  // namespace

GradedRingModel build_proj_bundle(const GradedRingModel& base, const ChernSpec& chern) {
    int N = chern.bundle_rank;
    if (N < 2) throw std::invalid_argument("build_proj_bundle: bundle rank must be >= 2");
    if (static_cast<int>(chern.coeffs.size()) != N)
        throw std::invalid_argument("build_proj_bundle: chern must list c_1..c_N");
    for (int i = 1; i <= N; ++i) {
        size_t want = i <= base.cutoff ? static_cast<size_t>(base.ranks[i]) : 0;
        if (chern.coeffs[i - 1].size() != want) {
            std::ostringstream os;
            os << "build_proj_bundle: c_" << i << " has " << chern.coeffs[i - 1].size()
               << " coordinates, expected " << want;
            throw std::invalid_argument(os.str());
        }
    }

    int cutoff = base.cutoff + N - 1;

    // red[p][t]: base-class coefficient of u^t in the reduction of u^p,
    // a class of base degree p-t.
    std::vector<std::vector<BaseVec>> red(2 * N - 1, std::vector<BaseVec>(N));
    for (int p = 0; p <= 2 * N - 2; ++p)
        for (int t = 0; t < N; ++t) red[p][t] = base_zero(base, p - t);
    for (int p = 0; p < N; ++p) red[p][p] = {Int(1)};
    for (int p = N; p <= 2 * N - 2; ++p) {
        const BaseVec& top = red[p - 1][N - 1];  // base degree p-N
        for (int t = 0; t < N; ++t) {
            BaseVec v = t >= 1 ? red[p - 1][t - 1] : base_zero(base, p);
            BaseVec corr = base_mul(base, N - t, chern.coeffs[N - t - 1], p - N, top);
            if (v.empty()) {
                for (Int& c : corr) c = -c;
                v = std::move(corr);
            } else {
                for (size_t k = 0; k < v.size() && k < corr.size(); ++k) v[k] -= corr[k];
            }
            red[p][t] = std::move(v);
        }
    }

    // Degree-d basis: (t, b) with t ascending, b a base index of degree d-t.
    auto fiber_range = [&](int d) {
        int lo = std::max(0, d - base.cutoff), hi = std::min(N - 1, d);
        return std::make_pair(lo, hi);
    };
    std::vector<int> ranks(cutoff + 1, 0);
    std::vector<std::vector<std::string>> labels(cutoff + 1);
    for (int d = 0; d <= cutoff; ++d) {
        auto [lo, hi] = fiber_range(d);
        for (int t = lo; t <= hi; ++t) {
            ranks[d] += base.ranks[d - t];
            for (int b = 0; b < base.ranks[d - t]; ++b) {
                const std::string& bl = base.basis_labels[d - t][b];
                std::string up = pow_label("u", t);
                if (t == 0)
                    labels[d].push_back(bl);
                else
                    labels[d].push_back(bl == "1" ? up : bl + "*" + up);
            }
        }
    }
    auto index = [&](int d, int t, int b) {
        auto [lo, hi] = fiber_range(d);
        (void)hi;
        int off = 0;
        for (int tt = lo; tt < t; ++tt) off += base.ranks[d - tt];
        return off + b;
    };

    TableMap tables;
    for (int d1 = 0; d1 <= cutoff; ++d1) {
        for (int d2 = 0; d1 + d2 <= cutoff; ++d2) {
            int d = d1 + d2;
            std::vector<Int> t(static_cast<size_t>(ranks[d1]) * ranks[d2] * ranks[d], Int(0));
            auto at = [&](int p, int q, int k) -> Int& {
                return t[(static_cast<size_t>(p) * ranks[d2] + q) * ranks[d] + k];
            };
            auto [lo1, hi1] = fiber_range(d1);
            auto [lo2, hi2] = fiber_range(d2);
            for (int t1 = lo1; t1 <= hi1; ++t1) {
                int e1 = d1 - t1;
                for (int t2 = lo2; t2 <= hi2; ++t2) {
                    int e2 = d2 - t2;
                    int p = t1 + t2;
                    for (int b1 = 0; b1 < base.ranks[e1]; ++b1) {
                        BaseVec v1 = base_zero(base, e1);
                        v1[b1] = 1;
                        for (int b2 = 0; b2 < base.ranks[e2]; ++b2) {
                            BaseVec v2 = base_zero(base, e2);
                            v2[b2] = 1;
                            BaseVec bb = base_mul(base, e1, v1, e2, v2);
                            if (bb.empty() || is_zero_vec(bb)) continue;
                            int row = index(d1, t1, b1), col = index(d2, t2, b2);
                            for (int w = 0; w < N; ++w) {
                                BaseVec target =
                                    base_mul(base, e1 + e2, bb, p - w, red[p][w]);
                                if (target.empty()) continue;
                                // target has base degree d - w
                                for (size_t b = 0; b < target.size(); ++b) {
                                    if (target[b] == 0) continue;
                                    at(row, col, index(d, w, static_cast<int>(b))) += target[b];
                                }
                            }
                        }
                    }
                }
            }
            tables[{d1, d2}] = std::move(t);
        }
    }
    return make_ring(cutoff, std::move(ranks), std::move(labels), std::move(tables));
}

FamilyPtr FamilyExpr::proj(int m) {
    if (m < 1) throw std::invalid_argument("proj: m must be >= 1");
    auto e = std::make_shared<FamilyExpr>();
    e->kind = Kind::Proj;
    e->m = m;
    return e;
}

FamilyPtr FamilyExpr::quadric_odd(int m) {
    if (m < 1 || m % 2 == 0) throw std::invalid_argument("quadric_odd: m must be odd and >= 1");
    auto e = std::make_shared<FamilyExpr>();
    e->kind = Kind::QuadricOdd;
    e->m = m;
    return e;
}

FamilyPtr FamilyExpr::quadric_even(int m) {
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("quadric_even: m must be even and >= 2");
    auto e = std::make_shared<FamilyExpr>();
    e->kind = Kind::QuadricEven;
    e->m = m;
    return e;
}

FamilyPtr FamilyExpr::product(FamilyPtr left, FamilyPtr right) {
    if (!left || !right) throw std::invalid_argument("product: missing factor");
    auto e = std::make_shared<FamilyExpr>();
    e->kind = Kind::Product;
    e->left = std::move(left);
    e->right = std::move(right);
    return e;
}

FamilyPtr FamilyExpr::proj_bundle(FamilyPtr base, ChernSpec chern) {
    if (!base) throw std::invalid_argument("proj_bundle: missing base");
    if (chern.bundle_rank < 2) throw std::invalid_argument("proj_bundle: rank must be >= 2");
    if (static_cast<int>(chern.coeffs.size()) != chern.bundle_rank)
        throw std::invalid_argument("proj_bundle: chern must list c_1..c_N");
    auto e = std::make_shared<FamilyExpr>();
    e->kind = Kind::ProjBundle;
    e->base = std::move(base);
    e->chern = std::move(chern);
    return e;
}

FamilyPtr FamilyExpr::veronese2(int m) {
    if (m < 1) throw std::invalid_argument("veronese2: m must be >= 1");
    auto e = std::make_shared<FamilyExpr>();
    e->kind = Kind::Veronese2;
    e->m = m;
    return e;
}

FamilyPtr FamilyExpr::vmrt(SpaceSpec space) {
    auto e = std::make_shared<FamilyExpr>();
    e->kind = Kind::Vmrt;
    e->space = space;
    return e;
}

GradedRingModel build_family(const FamilyExpr& expr) {
    switch (expr.kind) {
        case FamilyExpr::Kind::Proj:
            return build_proj(expr.m);
        case FamilyExpr::Kind::QuadricOdd:
            return build_quadric_odd(expr.m);
        case FamilyExpr::Kind::QuadricEven:
            return build_quadric_even(expr.m);
        case FamilyExpr::Kind::Product: {
            GradedRingModel a = build_family(*expr.left);
            GradedRingModel b = build_family(*expr.right);
            return build_product(a, b);
        }
        case FamilyExpr::Kind::ProjBundle: {
            GradedRingModel base = build_family(*expr.base);
            return build_proj_bundle(base, expr.chern);
        }
        case FamilyExpr::Kind::Veronese2:
            // Re-embedding by the complete quadric system keeps the ring.
            return build_proj(expr.m - 1);
        case FamilyExpr::Kind::Vmrt:
            return build_family(vmrt_of(expr.space));
    }
    throw std::invalid_argument("build_family: unknown node");
}

SpaceSpec make_space(SpaceSpec::Kind kind, int k, int n) {
    SpaceSpec s;
    s.kind = kind;
    s.k = k;
    s.n = n;
    switch (kind) {
        case SpaceSpec::Kind::Pn:
            if (n < 2) throw std::invalid_argument("P^n requires n >= 2");
            break;
        case SpaceSpec::Kind::Qn:
            if (n < 3) throw std::invalid_argument("Q^n requires n >= 3");
            break;
        case SpaceSpec::Kind::G:
            if (k < 1 || n - k - 1 < 1)
                throw std::invalid_argument("G(k,n) requires 1 <= k <= n-2");
            break;
        case SpaceSpec::Kind::OG:
        case SpaceSpec::Kind::SG: {
            if (n < 5 || n % 2 == 0)
                throw std::invalid_argument("OG/SG ambient dimension must be odd, 2m-1 >= 5");
            int m = (n + 1) / 2;
            if (k < 1 || k > m - 2)
                throw std::invalid_argument("OG/SG require 1 <= k <= m-2");
            break;
        }
        case SpaceSpec::Kind::SGmax:
            if (n < 2) throw std::invalid_argument("SGmax(m) requires m >= 2");
            break;
    }
    return s;
}

std::string space_name(const SpaceSpec& s) {
    std::ostringstream os;
    switch (s.kind) {
        case SpaceSpec::Kind::Pn: os << "P^" << s.n; break;
        case SpaceSpec::Kind::Qn: os << "Q^" << s.n; break;
        case SpaceSpec::Kind::G: os << "G(" << s.k << "," << s.n << ")"; break;
        case SpaceSpec::Kind::OG: os << "OG(" << s.k << "," << s.n << ")"; break;
        case SpaceSpec::Kind::SG: os << "SG(" << s.k << "," << s.n << ")"; break;
        case SpaceSpec::Kind::SGmax: os << "SGmax(" << s.n << ")"; break;
    }
    return os.str();
}

int s_closed_form(const SpaceSpec& s) {
    switch (s.kind) {
        case SpaceSpec::Kind::Pn: return s.n - 1;
        case SpaceSpec::Kind::Qn: return s.n % 2 ? s.n - 2 : s.n - 3;
        case SpaceSpec::Kind::G: return std::min(s.k, s.n - s.k - 1);
        case SpaceSpec::Kind::OG: return std::min(s.k, s.n - 2 * s.k - 2);
        case SpaceSpec::Kind::SG: return std::min(s.m(), s.n - 2 * s.k - 1);
        case SpaceSpec::Kind::SGmax: return s.n - 1;
    }
    throw std::invalid_argument("s_closed_form: unknown space");
}

FamilyExpr vmrt_of(const SpaceSpec& space) {
    FamilyPtr e;
    switch (space.kind) {
        case SpaceSpec::Kind::Pn:
            e = FamilyExpr::proj(space.n - 1);
            break;
        case SpaceSpec::Kind::Qn: {
            int d = space.n - 2;
            e = d % 2 ? FamilyExpr::quadric_odd(d) : FamilyExpr::quadric_even(d);
            break;
        }
        case SpaceSpec::Kind::G:
            e = FamilyExpr::product(FamilyExpr::proj(space.k),
                                    FamilyExpr::proj(space.n - space.k - 1));
            break;
        case SpaceSpec::Kind::OG:
            e = FamilyExpr::product(FamilyExpr::proj(space.k),
                                    FamilyExpr::quadric_odd(space.n - 2 * space.k - 2));
            break;
        case SpaceSpec::Kind::SG: {
            // P(O(2) + O(1)^(2m-2k-2)) over P^m.
            int m = space.m();
            int ones = space.n - 2 * space.k - 1;  // 2m-2k-2
            int N = ones + 1;
            ChernSpec chern;
            chern.bundle_rank = N;
            for (int i = 1; i <= N; ++i) {
                if (i > m) {
                    chern.coeffs.emplace_back();
                    continue;
                }
                // e_i of (2, 1, ..., 1) with `ones` ones, times h^i.
                Int ci = binom(ones, i) + 2 * binom(ones, i - 1);
                chern.coeffs.push_back({ci});
            }
            e = FamilyExpr::proj_bundle(FamilyExpr::proj(m), std::move(chern));
            break;
        }
        case SpaceSpec::Kind::SGmax:
            e = FamilyExpr::veronese2(space.n);
            break;
    }
    return *e;
}

}  // namespace chowdiv

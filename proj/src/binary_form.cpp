#include "chowdiv/binary_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace chowdiv {

namespace {

BinaryForm primitive_part(BinaryForm f) {
    Int g = content(f.coeff);
    if (g == 0) return f;
    for (Int& c : f.coeff) c /= g;
    for (int i = f.degree(); i >= 0; --i) {
        if (f.coeff[i] == 0) continue;
        if (f.coeff[i] < 0)
            for (Int& c : f.coeff) c = -c;
        break;
    }
    return f;
}

int first_nonzero(const std::vector<Int>& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return static_cast<int>(i);
    return -1;
}

int last_nonzero(const std::vector<Int>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
        if (v[i] != 0) return i;
    return -1;
}

using QPoly = std::vector<Rat>;  // dense, coeff[i] of x^i

QPoly trim(QPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

QPoly qpoly_mod(QPoly a, const QPoly& b) {
    // b nonzero, trimmed
    while (a.size() >= b.size()) {
        Rat f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a = trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

// gcd of the dehomogenized cores, primitive over Z.
std::vector<Int> core_gcd(const std::vector<Int>& a, const std::vector<Int>& b) {
    QPoly p(a.size()), q(b.size());
    for (size_t i = 0; i < a.size(); ++i) p[i] = Rat(a[i]);
    for (size_t i = 0; i < b.size(); ++i) q[i] = Rat(b[i]);
    p = trim(std::move(p));
    q = trim(std::move(q));
    while (!q.empty()) {
        QPoly r = qpoly_mod(p, q);
        p = std::move(q);
        q = std::move(r);
    }
    // Clear denominators, reduce to primitive integer vector.
    Int lcm = 1;
    for (const Rat& x : p) {
        Int den(x.get_den());
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<Int> g(p.size());
    for (size_t i = 0; i < p.size(); ++i) g[i] = Int(Rat(p[i] * Rat(lcm)).get_num());
    Int c = content(g);
    if (c > 1)
        for (Int& x : g) x /= c;
    if (!g.empty() && g.back() < 0)
        for (Int& x : g) x = -x;
    return g;
}

}  // namespace

BinaryForm bf_add(const BinaryForm& a, const BinaryForm& b) {
    if (a.coeff.empty()) return b;
    if (b.coeff.empty()) return a;
    if (a.coeff.size() != b.coeff.size())
        throw std::invalid_argument("binary form degree mismatch in addition");
    BinaryForm r = a;
    for (size_t i = 0; i < r.coeff.size(); ++i) r.coeff[i] += b.coeff[i];
    return r;
}

BinaryForm bf_neg(const BinaryForm& a) {
    BinaryForm r = a;
    for (Int& c : r.coeff) c = -c;
    return r;
}

BinaryForm bf_mul(const BinaryForm& a, const BinaryForm& b) {
    if (a.coeff.empty() || b.coeff.empty()) return {};
    BinaryForm r;
    r.coeff.assign(a.coeff.size() + b.coeff.size() - 1, Int(0));
    for (size_t i = 0; i < a.coeff.size(); ++i) {
        if (a.coeff[i] == 0) continue;
        for (size_t j = 0; j < b.coeff.size(); ++j) r.coeff[i + j] += a.coeff[i] * b.coeff[j];
    }
    return r;
}

BinaryForm bf_gcd(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    int fa = first_nonzero(a.coeff), la = last_nonzero(a.coeff);
    int fb = first_nonzero(b.coeff), lb = last_nonzero(b.coeff);
    int s_pow = std::min(fa, fb);
    int t_pow = std::min(a.degree() - la, b.degree() - lb);
    std::vector<Int> ca(a.coeff.begin() + fa, a.coeff.begin() + la + 1);
    std::vector<Int> cb(b.coeff.begin() + fb, b.coeff.begin() + lb + 1);
    std::vector<Int> g = core_gcd(ca, cb);
    BinaryForm out;
    out.coeff.assign(s_pow + t_pow + g.size(), Int(0));
    for (size_t i = 0; i < g.size(); ++i) out.coeff[s_pow + i] = g[i];
    return out;
}

BinaryForm bf_gcd_all(const std::vector<BinaryForm>& forms) {
    BinaryForm g;
    for (const BinaryForm& f : forms) {
        g = bf_gcd(g, f);
        if (!g.is_zero() && g.degree() == 0) break;  // already a unit
    }
    return g;
}

std::vector<std::pair<Int, Int>> bf_rational_zeros(const BinaryForm& f) {
    if (f.is_zero()) throw std::invalid_argument("rational zeros of the zero form");
    std::vector<std::pair<Int, Int>> zeros;
    int fc = first_nonzero(f.coeff), lc = last_nonzero(f.coeff);
    if (fc >= 1) zeros.emplace_back(Int(0), Int(1));                // s divides f
    if (f.degree() - lc >= 1) zeros.emplace_back(Int(1), Int(0));   // t divides f
    std::vector<Int> core(f.coeff.begin() + fc, f.coeff.begin() + lc + 1);
    if (core.size() > 1) {
        Int c = content(core);
        for (Int& x : core) x /= c;
        // Rational root candidates a/b: a | core[0], b | core[deg].
        std::vector<Int> as = divisors(core.front());
        std::vector<Int> bs = divisors(core.back());
        for (const Int& b : bs) {
            for (const Int& a0 : as) {
                for (int sign = 0; sign < 2; ++sign) {
                    Int a = sign ? Int(-a0) : a0;
                    Int g;
                    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                    if (g != 1) continue;
                    // Evaluate the homogeneous core at (a, b).
                    Int val = 0, apow = 1;
                    std::vector<Int> bpow(core.size());
                    bpow[core.size() - 1] = 1;
                    for (int i = static_cast<int>(core.size()) - 2; i >= 0; --i)
                        bpow[i] = bpow[i + 1] * b;
                    for (size_t i = 0; i < core.size(); ++i) {
                        val += core[i] * apow * bpow[i];
                        apow *= a;
                    }
                    if (val != 0) continue;
                    std::pair<Int, Int> z = a < 0 ? std::make_pair(Int(-a), Int(-b))
                                                  : std::make_pair(a, b);
                    zeros.push_back(std::move(z));
                }
            }
        }
    }
    std::sort(zeros.begin(), zeros.end());
    zeros.erase(std::unique(zeros.begin(), zeros.end()), zeros.end());
    return zeros;
}

}  // namespace chowdiv

#include "chowdiv/numeric.hpp"

#include <map>
#include <stdexcept>

namespace chowdiv {

bool is_zero_vec(const std::vector<Int>& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

Int content(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

std::vector<Int> normalize_primitive(std::vector<Int> v) {
    Int g = content(v);
    if (g == 0) return v;
    for (Int& x : v) x /= g;
    for (const Int& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : v) y = -y;
        break;
    }
    return v;
}

bool lex_less(const std::vector<Int>& a, const std::vector<Int>& b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

namespace {

bool is_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0; }

// Deterministic Pollard rho; n odd composite > 1.
Int pollard_rho(const Int& n) {
    for (Int c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        while (true) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int diff = x >= y ? Int(x - y) : Int(y - x);
            if (diff == 0) { d = n; break; }  // cycle without factor, retry
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            if (d != 1) break;
        }
        if (d != n) return d;
    }
}

void factor_into(Int n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, unsigned>> factorize(Int n) {
    n = abs_int(n);
    if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
    std::map<Int, unsigned> acc;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (n % p == 0) {
            ++acc[Int(p)];
            n /= p;
        }
    }
    Int p = 17;
    while (n > 1 && p < 100000 && p * p <= n) {
        while (n % p == 0) {
            ++acc[p];
            n /= p;
        }
        p += 2;
    }
    if (n > 1) factor_into(n, acc);
    return {acc.begin(), acc.end()};
}

std::vector<Int> divisors(const Int& n) {
    auto fac = factorize(n);
    std::vector<Int> out{Int(1)};
    for (const auto& [p, e] : fac) {
        size_t base = out.size();
        Int pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const Int& n) { return n.get_str(); }

}  // namespace chowdiv

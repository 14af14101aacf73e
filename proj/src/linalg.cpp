#include "chowdiv/linalg.hpp"

namespace chowdiv {

namespace {

// Reduced row echelon form over Q. Returns pivot column per pivot row.
std::vector<int> rref(std::vector<std::vector<Rat>>& m, int rows, int cols) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i) {
            if (m[i][c] != 0) { pr = i; break; }
        }
        if (pr < 0) continue;
        std::swap(m[pr], m[r]);
        Rat inv = m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Rat>> to_rat(const IntMat& m) {
    std::vector<std::vector<Rat>> out(m.rows, std::vector<Rat>(m.cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out[i][j] = Rat(m.at(i, j));
    return out;
}

}  // namespace

int rank_exact(const IntMat& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    auto q = to_rat(m);
    return static_cast<int>(rref(q, m.rows, m.cols).size());
}

std::vector<std::vector<Int>> kernel_basis(const IntMat& m) {
    if (m.cols == 0) return {};
    if (m.rows == 0) {
        // Everything is in the kernel; standard basis vectors.
        std::vector<std::vector<Int>> out;
        for (int c = 0; c < m.cols; ++c) {
            std::vector<Int> v(m.cols, Int(0));
            v[c] = 1;
            out.push_back(std::move(v));
        }
        return out;
    }
    auto q = to_rat(m);
    std::vector<int> pivots = rref(q, m.rows, m.cols);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Int>> out;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(m.cols, Rat(0));
        v[f] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -q[r][f];
        Int lcm = 1;
        for (const Rat& x : v) {
            Int den(x.get_den());
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        std::vector<Int> w(m.cols);
        for (int c = 0; c < m.cols; ++c) {
            Rat scaled = v[c] * Rat(lcm);
            w[c] = Int(scaled.get_num());  // denominator is 1 after scaling
        }
        out.push_back(normalize_primitive(std::move(w)));
    }
    return out;
}

}  // namespace chowdiv

#pragma once

#include "chowdiv/numeric.hpp"

namespace chowdiv {

// Dense integer matrix, row-major. Sizes here are tiny (ranks of graded
// pieces), so everything runs through exact rational elimination.
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// Exact rank over Q.
int rank_exact(const IntMat& m);

// Basis of the rational kernel, cleared to primitive integer vectors with
// positive leading coordinate. One vector per free column of the reduced
// row echelon form, in column order, so the family is canonical.
std::vector<std::vector<Int>> kernel_basis(const IntMat& m);

}  // namespace chowdiv

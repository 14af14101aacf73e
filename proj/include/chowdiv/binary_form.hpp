#pragma once

#include "chowdiv/numeric.hpp"

namespace chowdiv {

// Homogeneous binary form f(s,t) = sum coeff[p] * s^p * t^(deg-p) with
// integer coefficients. Used to decide zero-divisor pairs where one side has
// rank two: the maximal minors of s*M1 + t*M2 are forms of this kind.
struct BinaryForm {
    std::vector<Int> coeff;  // size deg+1; empty or all-zero means the zero form

    int degree() const { return static_cast<int>(coeff.size()) - 1; }
    bool is_zero() const { return is_zero_vec(coeff); }
};

BinaryForm bf_add(const BinaryForm& a, const BinaryForm& b);
BinaryForm bf_neg(const BinaryForm& a);
BinaryForm bf_mul(const BinaryForm& a, const BinaryForm& b);

// Primitive gcd over Z, sign-normalized (leading nonzero coefficient
// positive). gcd with the zero form is the primitive part of the other.
BinaryForm bf_gcd(const BinaryForm& a, const BinaryForm& b);
BinaryForm bf_gcd_all(const std::vector<BinaryForm>& forms);

// All projective rational zeros (a : b) of a nonzero form: primitive pairs
// with the first nonzero entry positive, sorted lexicographically.
// Complete: a zero divisor over Q exists iff one of these does.
std::vector<std::pair<Int, Int>> bf_rational_zeros(const BinaryForm& f);

}  // namespace chowdiv

#pragma once

#include "flagvar/combinatorics.hpp"
#include "flagvar/linalg.hpp"

namespace flagvar {

/// A rational unipotent matrix together with its Jordan data.
struct UnipotentData {
  Mat u;
  Mat nilpotent;             // u - I
  Partition jordan;          // block sizes r_1 >= ... >= r_d
  std::vector<int> columns;  // c_1 >= ... >= c_{r_1}
};

/// Throws std::invalid_argument unless u is square, has GF(q)-rational
/// entries and (u - I)^n = 0.
void require_rational_unipotent(const Mat& u);

UnipotentData analyze_unipotent(const Mat& u);

/// Jordan type read off from dim Ker N^t, t = 1, 2, ...
Partition jordan_type(const Mat& u);

/// Block upper triangular matrix with identity diagonal blocks of sizes
/// c_1, ..., c_{r_1} and [I; 0] blocks on the block superdiagonal.
Mat weyr_matrix(const Partition& lambda, const Field& f);

/// Block-diagonal Jordan form, blocks in the order of the parts.
Mat jordan_matrix(const Partition& lambda, const Field& f);

/// Rational g with g^-1 u g = weyr_matrix(jordan_type(u)).
///
/// Builds a Jordan chain basis over GF(q) by lifting through the kernels of
/// the powers of N, longest chains first, then lists the chain vectors
/// position-major: every chain's bottom vector (in Ker N), then every
/// chain's second vector, and so on. In that ordering N acts by the [I; 0]
/// superdiagonal blocks.
Mat weyr_conjugator(const Mat& u);

/// Nullity of X -> uX - Xu on n^2 unknowns.
int centralizer_dim(const Mat& u);

Perm beta_of_unipotent(const Mat& u);

}  // namespace flagvar

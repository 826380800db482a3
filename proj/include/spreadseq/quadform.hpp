#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spreadseq/fp.hpp"

namespace spreadseq {

/// Parameters (pi, a, d) of a structured quadratic matrix: diagonal d and
/// path coefficients a laid along the permutation pi.
struct PsiSpec {
    Permutation pi;
    std::vector<uint8_t> a;  // m-1 path coefficients
    std::vector<uint8_t> d;  // m diagonal entries
    PrimeModulus p;

    uint32_t m() const { return pi.size(); }
    bool all_path_nonzero() const;
};

/// An m x m matrix of psi form, optionally carrying its generating spec.
struct QuadMatrix {
    MatrixFp matrix;
    std::optional<PsiSpec> spec;

    uint32_t m() const { return matrix.rows(); }
    const PrimeModulus& modulus() const { return matrix.modulus(); }

    /// Member of A_p: generated by a spec whose path coefficients are all
    /// nonzero.
    bool in_ap() const { return spec && spec->all_path_nonzero(); }
};

/// Builds the matrix with entries A(i,i) = d_i, A(pi(k), pi(k+1)) = a_k and
/// zero elsewhere.
QuadMatrix psi(const PsiSpec& spec);

/// The symmetric difference form Q = (A_i - A_j) + (A_i - A_j)^T with its
/// F_p-rank cached.
struct SymplecticMatrix {
    MatrixFp matrix;
    uint32_t rank;
};

SymplecticMatrix symplectic_q(const QuadMatrix& ai, const QuadMatrix& aj);

/// An ordered list of quadratic matrices over a common modulus, plus a tag
/// recording which construction produced it.
struct MatrixFamily {
    std::vector<QuadMatrix> members;
    PrimeModulus p;
    uint32_t m;
    std::string provenance;

    MatrixFamily(std::vector<QuadMatrix> members_, std::string provenance_);

    size_t size() const { return members.size(); }
};

/// Ranks of all pairwise symplectic differences; entry (i,j) is
/// rank_p(Q_{i,j}), the diagonal is 0 (Q_{i,i} vanishes).
std::vector<std::vector<uint32_t>> pairwise_rank_table(const MatrixFamily& family);

/// Minimum pairwise symplectic rank over the family. Requires L >= 2.
uint32_t r_min(const MatrixFamily& family);

/// Checks rank_p(A + A^T) >= m - 1 for a matrix of psi form with nonzero
/// path coefficients. Always true; exposed as a test oracle.
bool verify_rank_lower_bound(const QuadMatrix& a);

}  // namespace spreadseq

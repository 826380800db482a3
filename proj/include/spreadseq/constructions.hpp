#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spreadseq/analysis.hpp"
#include "spreadseq/quadform.hpp"

namespace spreadseq {

enum class Variant {
    ThmLp,       // p blocks sharing pi and a, coordinate-wise distinct d vectors
    Thm2pDiff,   // 2p blocks, second branch swaps a for b with a_i != b_i
    Thm2pShift,  // 2p blocks, second branch uses the cyclically shifted pi
    ThmP3Even,   // 6 blocks, p = 3, even m not congruent 2 mod 3
    ThmP3Any,    // 6 blocks, p = 3, any m >= 2, shift coordinate from the index set U
};

const char* variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& name);

/// p blocks psi(pi, a, d_i). Requires all a_i nonzero and, for every
/// coordinate k, pairwise distinct values d_{1,k}, ..., d_{p,k}. Guarantees
/// r_min = m.
MatrixFamily build_thm_lp(const Permutation& pi, const std::vector<uint8_t>& a,
                          const std::vector<std::vector<uint8_t>>& d_list, PrimeModulus p);

/// 2p blocks: p with path a, p with path b, both over pi. Requires
/// a_i, b_i, a_i - b_i all nonzero and both d lists coordinate-distinct.
/// Guarantees r_min >= m - 1.
MatrixFamily build_thm_2p_diff(const Permutation& pi, const std::vector<uint8_t>& a,
                               const std::vector<uint8_t>& b,
                               const std::vector<std::vector<uint8_t>>& d_list_a,
                               const std::vector<std::vector<uint8_t>>& d_list_b,
                               PrimeModulus p);

/// 2p blocks: p over pi with path a, p over the tau-shifted pi with path b.
/// Requires a_i, b_i nonzero and exactly one index t (not m - tau) with
/// b_t = a_{[t+tau]_m} while every other compared index differs. Guarantees
/// r_min >= m - 1.
MatrixFamily build_thm_2p_shift(const Permutation& pi, uint32_t tau,
                                const std::vector<uint8_t>& a, const std::vector<uint8_t>& b,
                                const std::vector<std::vector<uint8_t>>& d_list_a,
                                const std::vector<std::vector<uint8_t>>& d_list_b,
                                PrimeModulus p);

/// Six blocks over F_3 for even m >= 4 with m not congruent 2 mod 3:
/// d_i = d_1 + (i-1) 1_m for the a branch; the b branch starts from
/// d_4 = d_1 (the default) or from d_1 shifted by a single coordinate, in
/// which case the full-rank property is re-verified before accepting.
/// Guarantees r_min = m.
MatrixFamily build_thm_p3_even(const Permutation& pi, const std::vector<uint8_t>& a,
                               const std::vector<uint8_t>& b, const std::vector<uint8_t>& d1,
                               const std::optional<std::vector<uint8_t>>& d4 = std::nullopt);

/// Admissible shift coordinates for the six-block F_3 construction at any
/// m >= 2, selected by m mod 3 with a parity filter for odd m.
struct IndexSetU {
    std::set<uint32_t> members;
    uint32_t residue;  // m mod 3
    bool odd_branch;   // parity filter applied
};

IndexSetU compute_index_set_u(uint32_t m);

/// Six blocks over F_3 for any m >= 2: the b branch repeats the a-branch
/// diagonals except at coordinate pi(s), shifted by e. Requires s in U and
/// e in {1, 2}. Guarantees r_min = m.
MatrixFamily build_thm_p3_any(const Permutation& pi, const std::vector<uint8_t>& a,
                              const std::vector<uint8_t>& b, const std::vector<uint8_t>& d1,
                              uint32_t s, uint32_t e);

/// q-ary spreading matrix from a base family, alphabet Z_{p^h}, 1 <= h <= m.
SpreadingMatrix lift_family_q(const MatrixFamily& base, uint32_t h);

/// Number of distinct sequence sets for fixed pi (and a, b): (p!)^(m-1)
/// for the p-block construction and (p!)^(2m-2) for the 2p-block ones,
/// counting d-tuples up to reordering of the blocks in each branch.
uint64_t count_configs(Variant variant, PrimeModulus p, uint32_t m);

/// All N = L p^m columns, blocks in family order, c ascending within each
/// block. Refuses to allocate more than `budget` phase entries.
std::vector<PhaseSequence> materialize_phi(const SpreadingMatrix& phi,
                                           uint64_t budget = uint64_t(1) << 22);

}  // namespace spreadseq

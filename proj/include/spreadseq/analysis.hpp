#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "spreadseq/ebf.hpp"
#include "spreadseq/quadform.hpp"

namespace spreadseq {

/// Exact representation of a sum of q-th roots of unity: counts[j] is the
/// multiplicity of omega_q^j. All orthogonality and correlation sums are
/// kept in this form; floating point enters only when a magnitude is
/// actually reported.
struct ExponentHistogram {
    std::vector<uint64_t> counts;
    uint32_t q = 0;

    explicit ExponentHistogram(uint32_t q_) : counts(q_, 0), q(q_) {}

    uint64_t total() const;
    std::complex<double> complex_value() const;
    double abs() const { return std::abs(complex_value()); }
};

/// Histogram of pointwise phase differences s1[k] - s2[k] mod q; its
/// complex value is the inner product <s1, s2> of the unimodular sequences.
ExponentHistogram inner_product_exact(const PhaseSequence& s1, const PhaseSequence& s2);

/// Exact zero test for a nonnegative sum of q-th roots of unity, q = p^h:
/// the sum vanishes iff counts[j] depends only on j mod (q/p).
bool is_zero_sum(const ExponentHistogram& h);

/// Exact test that |sum_j counts[j] omega_q^j|^2 equals the given integer,
/// via reduction modulo the q-th cyclotomic polynomial.
bool abs_squared_equals(const ExponentHistogram& h, uint64_t target);

/// Aperiodic correlation sum at shift tau as a phase-difference histogram
/// (the second sequence enters conjugated). |tau| >= length gives the empty
/// histogram.
ExponentHistogram aperiodic_correlation(const PhaseSequence& a, const PhaseSequence& b,
                                        int64_t tau);

/// Complementary-set test: the pooled autocorrelation histogram vanishes
/// exactly at every nonzero shift.
bool cs_check(const std::vector<PhaseSequence>& family);

/// A spreading matrix in generator form: L quadratic-matrix blocks over a
/// common modulus, alphabet Z_q with q = p^h, and one column per linear
/// form index c in [0, p^m). Columns are generated on demand.
struct SpreadingMatrix {
    PrimeModulus p;
    uint32_t m;
    uint32_t h;
    std::vector<QuadMatrix> blocks;
    std::string provenance;

    uint32_t q() const;
    uint64_t seq_len() const;
    uint64_t num_columns() const { return seq_len() * blocks.size(); }
    uint32_t overloading_factor() const { return static_cast<uint32_t>(blocks.size()); }

    /// Values of x A_b x^T mod p for all x, indexed by integer x.
    std::vector<uint8_t> quad_table(size_t block) const;

    /// Column c of block `block`: phases of (q/p) x A x^T + L_c(x).
    PhaseSequence column(size_t block, uint64_t c) const;

    /// Same, reusing a quad_table() result when sweeping many columns of
    /// one block.
    PhaseSequence column_from_quad(const std::vector<uint8_t>& quad, uint64_t c) const;
};

SpreadingMatrix spreading_matrix(const MatrixFamily& family, uint32_t h = 1);

/// ceil(N/M) for an N-column, length-M sequence set.
uint32_t overloading_factor(uint64_t num_columns, uint64_t seq_len);

struct WorstPair {
    size_t block_i = 0;
    uint64_t col_i = 0;
    size_t block_j = 0;
    uint64_t col_j = 0;
};

struct CoherenceReport {
    double mu = 0.0;
    double peak_abs = 0.0;       // max |<s_i, s_j>| over distinct columns
    uint32_t rank_min = 0;       // meaningful for the rank-formula method
    std::string method;          // "rank-formula" or "brute-force"
    WorstPair worst;
};

/// mu = p^{-r_min/2} from the pairwise symplectic ranks.
CoherenceReport coherence_by_rank(const MatrixFamily& family);

/// Exact maximum of |<s_i, s_j>| / M over all distinct column pairs.
/// Inner products between columns depend only on the block pair and the
/// difference of linear-form indices, so the sweep runs over L^2 p^m
/// difference profiles instead of all N^2 column pairs.
CoherenceReport coherence_bruteforce(const SpreadingMatrix& phi);

/// Reference all-pairs sweep over materialized columns (no structure
/// assumed); used to cross-check the reduced sweep and to verify files.
CoherenceReport coherence_naive(const std::vector<PhaseSequence>& columns);

/// Histogram of the single cross inner product <s_{A1}^{(c1)}, s_{A2}^{(c2)}>
/// maximized over all (c1, c2); returns the peak histogram.
ExponentHistogram max_cross_correlation(const QuadMatrix& a1, const QuadMatrix& a2,
                                        uint32_t h = 1);

/// Peak-to-average power ratio estimate of the multicarrier signal
/// sum_k s_k e^{2 pi i k t}: max over the oversampled grid t = j/(os*M),
/// sharpened by ternary search around the best grid point, of |S(t)|^2 / M.
double papr_estimate(const PhaseSequence& s, uint32_t oversample = 128);

/// Peak power ratio over the M critically sampled instants t = j/M only
/// (the DFT bins). This is the figure quoted for the worked examples.
double papr_nyquist(const PhaseSequence& s);

struct PaprReport {
    double set_estimate = 0.0;       // oversampled + refined, whole set
    double set_nyquist = 0.0;        // DFT-bin peak ratio, whole set
    std::vector<double> block_estimate;
    std::vector<double> block_nyquist;
    uint32_t oversample = 0;
};

PaprReport papr_set(const SpreadingMatrix& phi, uint32_t oversample = 128);

}  // namespace spreadseq

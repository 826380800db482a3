#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "spreadseq/quadform.hpp"

namespace spreadseq {

/// A length-p^m vector of phases in Z_q, q = p^h. Complex materialization
/// is deferred to the analysis layer.
struct PhaseSequence {
    std::vector<uint32_t> phases;
    uint32_t q;

    size_t size() const { return phases.size(); }
    uint32_t operator[](size_t i) const { return phases[i]; }
};

/// A function F_p^m -> Z_q stored as a map from exponent vectors (entries
/// below p) to coefficients mod q. With q = p this is the plain monomial
/// form; for q = p^h only the lifted quadratic/linear shapes are built by
/// this library, and evaluation reduces monomials mod q throughout, which
/// agrees with computing the quadratic part mod p and scaling by q/p.
class Ebf {
  public:
    Ebf(uint32_t num_vars, PrimeModulus p, uint32_t q);

    uint32_t num_vars() const { return m_; }
    const PrimeModulus& modulus() const { return p_; }
    uint32_t phase_modulus() const { return q_; }
    const std::map<std::vector<uint8_t>, uint32_t>& terms() const { return terms_; }

    /// Adds coeff to the monomial with the given exponent vector.
    void add_term(std::vector<uint8_t> exponents, uint64_t coeff);

    uint32_t eval(std::span<const uint8_t> x) const;
    uint32_t eval(const DigitVector& x) const;

  private:
    uint32_t m_;
    PrimeModulus p_;
    uint32_t q_;
    std::map<std::vector<uint8_t>, uint32_t> terms_;
};

/// phases[i] = f evaluated at the p-ary digits of i, for i in [0, p^m).
PhaseSequence sequence_of(const Ebf& f);

/// Quadratic form with a plain F_p linear part and constant: evaluates to
/// x A x^T + c x^T + constant mod p.
struct QuadraticEbfSpec {
    QuadMatrix a;
    std::vector<uint8_t> linear;  // c in F_p^m
    uint32_t constant = 0;

    Ebf to_ebf() const;
};

/// The linear form used for alphabet size q = p^h: splitting
/// c = d + sum_{i>h} v_i p^{i-1} with d in Z_q, v_i in Z_p,
///   L_c(x) = (q/p) sum_{i>h} v_i x_i + d sum_{i<=h} x_i p^{i-1}  (mod q).
class LinearFormQ {
  public:
    LinearFormQ(uint64_t c, PrimeModulus p, uint32_t m, uint32_t h);

    uint64_t c() const { return c_; }
    uint32_t h() const { return h_; }
    uint32_t q() const { return q_; }
    uint32_t d_lin() const { return d_; }
    const std::vector<uint8_t>& v() const { return v_; }

    uint32_t eval(std::span<const uint8_t> x) const;

  private:
    uint64_t c_;
    PrimeModulus p_;
    uint32_t m_, h_, q_, d_;
    std::vector<uint8_t> v_;  // digits h+1..m of c
};

/// Lifted quadratic form (q/p) x A x^T + L_c(x) + constant mod q.
Ebf quadratic_ebf_q(const QuadMatrix& a, const LinearFormQ& lc, uint32_t constant = 0);

/// The p functions f_n = sum_i a_i x_{pi(i)} x_{pi(i+1)}
///                       + sum_{t=1}^{p-1} sum_k c_{t,k} x_k^t + n x_{pi(1)},
/// whose sequences form a (p, p^m) complementary set. c_coeffs is indexed
/// [t-1][k-1] with t = 1..p-1 and may be empty (all zero).
std::vector<Ebf> cs_family_pary(const Permutation& pi, const std::vector<uint8_t>& a,
                                const std::vector<std::vector<uint8_t>>& c_coeffs,
                                PrimeModulus p);

/// The p functions f_n = (q/p) x A x^T + L_c(x) + (q/p) n x_{pi(1)}, a q-ary
/// (p, p^m) complementary set. A must carry psi provenance with nonzero
/// path coefficients.
std::vector<Ebf> cs_family_qary(const QuadMatrix& a, const LinearFormQ& lc);

}  // namespace spreadseq

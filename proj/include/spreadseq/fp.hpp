#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spreadseq/errors.hpp"

namespace spreadseq {

/// An odd prime modulus p with 3 <= p <= 251, so that a digit always fits
/// a byte. Primality is checked by trial division at construction.
class PrimeModulus {
  public:
    explicit PrimeModulus(uint32_t p);

    uint32_t value() const { return p_; }

    /// Multiplicative inverse of a nonzero residue.
    uint32_t inverse(uint32_t a) const;

    bool operator==(const PrimeModulus& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeModulus& o) const { return p_ != o.p_; }

  private:
    uint32_t p_;
};

/// p^e if it fits in 64 bits, nullopt otherwise.
std::optional<uint64_t> checked_pow(uint64_t base, uint32_t exp);

/// (k mod m) mapped into [1, m]: returns m when m divides k, else k mod m.
uint32_t bracket_mod(uint64_t k, uint32_t m);

/// The p-ary expansion of an integer, least-significant digit first:
/// x = sum_k digits[k] * p^k (0-indexed storage; the k-th stored digit is
/// the coefficient of p^k, i.e. digit number k+1 in 1-indexed notation).
class DigitVector {
  public:
    DigitVector(std::vector<uint8_t> digits, PrimeModulus p);

    size_t size() const { return digits_.size(); }
    uint8_t operator[](size_t i) const { return digits_[i]; }
    const std::vector<uint8_t>& digits() const { return digits_; }
    const PrimeModulus& modulus() const { return p_; }

    uint64_t to_integer() const;

  private:
    std::vector<uint8_t> digits_;
    PrimeModulus p_;
};

/// p-ary digits of x in [0, p^m), least-significant first.
DigitVector digits_of(uint64_t x, uint32_t m, PrimeModulus p);

/// Raw digit expansion without the wrapper type, for hot loops.
void digits_into(uint64_t x, uint32_t m, uint32_t p, uint8_t* out);

/// A permutation of {1, ..., m}, stored and addressed 1-indexed.
class Permutation {
  public:
    explicit Permutation(std::vector<uint32_t> one_indexed);

    uint32_t size() const { return static_cast<uint32_t>(map_.size()); }

    /// pi(i) for i in [1, m].
    uint32_t operator()(uint32_t i) const { return map_[i - 1]; }

    const std::vector<uint32_t>& values() const { return map_; }

    bool operator==(const Permutation& o) const { return map_ == o.map_; }

  private:
    std::vector<uint32_t> map_;
};

/// The cyclic tau-shift of pi: result(i) = pi([i + tau]_m).
Permutation cyclic_shift_perm(const Permutation& pi, uint32_t tau);

/// Dense matrix over F_p with byte entries, always kept reduced mod p.
class MatrixFp {
  public:
    MatrixFp(uint32_t rows, uint32_t cols, PrimeModulus p);
    MatrixFp(std::vector<std::vector<uint32_t>> entries, PrimeModulus p);

    uint32_t rows() const { return rows_; }
    uint32_t cols() const { return cols_; }
    const PrimeModulus& modulus() const { return p_; }

    uint8_t at(uint32_t r, uint32_t c) const { return data_[r * cols_ + c]; }
    void set(uint32_t r, uint32_t c, uint32_t v) {
        data_[r * cols_ + c] = static_cast<uint8_t>(v % p_.value());
    }

    MatrixFp transposed() const;
    MatrixFp operator+(const MatrixFp& o) const;
    MatrixFp operator-(const MatrixFp& o) const;

    bool is_symmetric() const;
    bool is_zero() const;
    std::vector<std::vector<uint32_t>> to_rows() const;

    bool operator==(const MatrixFp& o) const;

  private:
    uint32_t rows_, cols_;
    PrimeModulus p_;
    std::vector<uint8_t> data_;
};

/// Rank over F_p by row reduction; pivots are found by first nonzero entry.
uint32_t rank_fp(const MatrixFp& M);

}  // namespace spreadseq

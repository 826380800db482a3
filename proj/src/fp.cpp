#include "spreadseq/fp.hpp"

#include <algorithm>
#include <string>

namespace spreadseq {

namespace {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint32_t pow_mod(uint32_t base, uint32_t exp, uint32_t mod) {
    uint64_t acc = 1, b = base % mod;
    while (exp) {
        if (exp & 1) acc = acc * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<uint32_t>(acc);
}

}  // namespace

PrimeModulus::PrimeModulus(uint32_t p) : p_(p) {
    if (p < 3 || p % 2 == 0)
        throw ValueError("modulus must be an odd prime >= 3, got " + std::to_string(p));
    if (p > 251)
        throw ValueError("modulus must be <= 251 so digits fit a byte, got " + std::to_string(p));
    if (!is_prime(p))
        throw ValueError("modulus must be prime, got " + std::to_string(p));
}

uint32_t PrimeModulus::inverse(uint32_t a) const {
    a %= p_;
    if (a == 0) throw ValueError("zero has no inverse mod " + std::to_string(p_));
    return pow_mod(a, p_ - 2, p_);
}

std::optional<uint64_t> checked_pow(uint64_t base, uint32_t exp) {
    uint64_t acc = 1;
    for (uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && acc > UINT64_MAX / base) return std::nullopt;
        acc *= base;
    }
    return acc;
}

uint32_t bracket_mod(uint64_t k, uint32_t m) {
    if (k == 0) throw ValueError("bracket_mod requires k >= 1");
    if (m == 0) throw ValueError("bracket_mod requires m >= 1");
    uint64_t r = k % m;
    return r == 0 ? m : static_cast<uint32_t>(r);
}

DigitVector::DigitVector(std::vector<uint8_t> digits, PrimeModulus p)
    : digits_(std::move(digits)), p_(p) {
    for (uint8_t d : digits_)
        if (d >= p_.value())
            throw ValueError("digit " + std::to_string(d) + " not below modulus " +
                             std::to_string(p_.value()));
}

uint64_t DigitVector::to_integer() const {
    uint64_t x = 0;
    for (size_t k = digits_.size(); k-- > 0;) x = x * p_.value() + digits_[k];
    return x;
}

DigitVector digits_of(uint64_t x, uint32_t m, PrimeModulus p) {
    auto bound = checked_pow(p.value(), m);
    if (bound && x >= *bound)
        throw ValueError("value " + std::to_string(x) + " out of range [0, p^m) with p=" +
                         std::to_string(p.value()) + ", m=" + std::to_string(m));
    std::vector<uint8_t> d(m);
    digits_into(x, m, p.value(), d.data());
    return DigitVector(std::move(d), p);
}

void digits_into(uint64_t x, uint32_t m, uint32_t p, uint8_t* out) {
    for (uint32_t k = 0; k < m; ++k) {
        out[k] = static_cast<uint8_t>(x % p);
        x /= p;
    }
}

Permutation::Permutation(std::vector<uint32_t> one_indexed) : map_(std::move(one_indexed)) {
    const uint32_t m = static_cast<uint32_t>(map_.size());
    if (m == 0) throw ValueError("permutation must be nonempty");
    std::vector<bool> seen(m + 1, false);
    for (uint32_t v : map_) {
        if (v < 1 || v > m)
            throw ValueError("permutation entry " + std::to_string(v) + " outside [1, " +
                             std::to_string(m) + "]");
        if (seen[v]) throw ValueError("permutation repeats entry " + std::to_string(v));
        seen[v] = true;
    }
}

Permutation cyclic_shift_perm(const Permutation& pi, uint32_t tau) {
    if (tau == 0) throw ValueError("cyclic shift requires tau >= 1");
    const uint32_t m = pi.size();
    std::vector<uint32_t> out(m);
    for (uint32_t i = 1; i <= m; ++i) out[i - 1] = pi(bracket_mod(uint64_t(i) + tau, m));
    return Permutation(std::move(out));
}

MatrixFp::MatrixFp(uint32_t rows, uint32_t cols, PrimeModulus p)
    : rows_(rows), cols_(cols), p_(p), data_(size_t(rows) * cols, 0) {
    if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be positive");
}

MatrixFp::MatrixFp(std::vector<std::vector<uint32_t>> entries, PrimeModulus p)
    : rows_(static_cast<uint32_t>(entries.size())),
      cols_(entries.empty() ? 0 : static_cast<uint32_t>(entries[0].size())),
      p_(p),
      data_() {
    if (rows_ == 0 || cols_ == 0) throw ShapeError("matrix dimensions must be positive");
    data_.resize(size_t(rows_) * cols_);
    for (uint32_t r = 0; r < rows_; ++r) {
        if (entries[r].size() != cols_) throw ShapeError("ragged matrix rows");
        for (uint32_t c = 0; c < cols_; ++c)
            data_[size_t(r) * cols_ + c] = static_cast<uint8_t>(entries[r][c] % p.value());
    }
}

MatrixFp MatrixFp::transposed() const {
    MatrixFp t(cols_, rows_, p_);
    for (uint32_t r = 0; r < rows_; ++r)
        for (uint32_t c = 0; c < cols_; ++c) t.data_[size_t(c) * rows_ + r] = at(r, c);
    return t;
}

MatrixFp MatrixFp::operator+(const MatrixFp& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
        throw ShapeError("matrix shape/modulus mismatch in addition");
    MatrixFp out(rows_, cols_, p_);
    for (size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = static_cast<uint8_t>((data_[i] + o.data_[i]) % p_.value());
    return out;
}

MatrixFp MatrixFp::operator-(const MatrixFp& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
        throw ShapeError("matrix shape/modulus mismatch in subtraction");
    MatrixFp out(rows_, cols_, p_);
    for (size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = static_cast<uint8_t>((data_[i] + p_.value() - o.data_[i]) % p_.value());
    return out;
}

bool MatrixFp::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (uint32_t r = 0; r < rows_; ++r)
        for (uint32_t c = r + 1; c < cols_; ++c)
            if (at(r, c) != at(c, r)) return false;
    return true;
}

bool MatrixFp::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](uint8_t v) { return v == 0; });
}

std::vector<std::vector<uint32_t>> MatrixFp::to_rows() const {
    std::vector<std::vector<uint32_t>> out(rows_, std::vector<uint32_t>(cols_));
    for (uint32_t r = 0; r < rows_; ++r)
        for (uint32_t c = 0; c < cols_; ++c) out[r][c] = at(r, c);
    return out;
}

bool MatrixFp::operator==(const MatrixFp& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && data_ == o.data_;
}

uint32_t rank_fp(const MatrixFp& M) {
    const uint32_t p = M.modulus().value();
    const uint32_t rows = M.rows(), cols = M.cols();
    std::vector<uint32_t> w(size_t(rows) * cols);
    for (uint32_t r = 0; r < rows; ++r)
        for (uint32_t c = 0; c < cols; ++c) w[size_t(r) * cols + c] = M.at(r, c);

    uint32_t rank = 0;
    for (uint32_t col = 0; col < cols && rank < rows; ++col) {
        uint32_t piv = rank;
        while (piv < rows && w[size_t(piv) * cols + col] == 0) ++piv;
        if (piv == rows) continue;
        for (uint32_t c = 0; c < cols; ++c)
            std::swap(w[size_t(rank) * cols + c], w[size_t(piv) * cols + c]);
        const uint32_t inv = M.modulus().inverse(w[size_t(rank) * cols + col]);
        for (uint32_t c = col; c < cols; ++c)
            w[size_t(rank) * cols + c] = w[size_t(rank) * cols + c] * inv % p;
        for (uint32_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            const uint32_t f = w[size_t(r) * cols + col];
            if (f == 0) continue;
            for (uint32_t c = col; c < cols; ++c)
                w[size_t(r) * cols + c] =
                    (w[size_t(r) * cols + c] + (p - f) * w[size_t(rank) * cols + c]) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace spreadseq

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace spreadseq {

/// Forward DFT plan for a fixed length, X[k] = sum_j x[j] e^{-2 pi i jk/n}.
/// Mixed-radix Cooley-Tukey over the prime factorization of n; prime
/// factors combine with a direct O(r^2) butterfly, so any length works
/// (small-prime lengths such as 2^a 3^b p^c are the intended fast path).
class Dft {
  public:
    explicit Dft(size_t n);

    size_t size() const { return n_; }

    /// In-place transform; data.size() must equal size().
    void forward(std::vector<std::complex<double>>& data) const;

  private:
    void recurse(const std::complex<double>* in, size_t in_stride, std::complex<double>* out,
                 size_t n) const;

    size_t n_;
    std::vector<std::complex<double>> twiddles_;  // e^{-2 pi i j / n}
};

}  // namespace spreadseq

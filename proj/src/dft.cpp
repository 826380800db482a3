#include "spreadseq/dft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spreadseq {

namespace {

size_t smallest_factor(size_t n) {
    for (size_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;
}

}  // namespace

Dft::Dft(size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("Dft size must be positive");
    twiddles_.resize(n);
    for (size_t j = 0; j < n; ++j) {
        const double ang = -2.0 * std::numbers::pi * double(j) / double(n);
        twiddles_[j] = {std::cos(ang), std::sin(ang)};
    }
}

void Dft::forward(std::vector<std::complex<double>>& data) const {
    if (data.size() != n_) throw std::invalid_argument("Dft input size mismatch");
    if (n_ == 1) return;
    std::vector<std::complex<double>> out(n_);
    recurse(data.data(), 1, out.data(), n_);
    data.swap(out);
}

void Dft::recurse(const std::complex<double>* in, size_t in_stride, std::complex<double>* out,
                  size_t n) const {
    if (n == 1) {
        out[0] = in[0];
        return;
    }
    const size_t r = smallest_factor(n);
    const size_t sub = n / r;
    for (size_t e = 0; e < r; ++e) recurse(in + e * in_stride, in_stride * r, out + e * sub, sub);

    const size_t root_step = n_ / n;  // twiddles_ indexed by multiples of 1/n
    std::complex<double> gathered[64];
    std::vector<std::complex<double>> heap_gathered;
    std::complex<double>* g = gathered;
    if (r > 64) {
        heap_gathered.resize(r);
        g = heap_gathered.data();
    }
    // X[j + s*sub] = sum_e (E_e[j] * omega_n^{je}) * omega_r^{se}
    for (size_t j = 0; j < sub; ++j) {
        for (size_t e = 0; e < r; ++e)
            g[e] = out[e * sub + j] * twiddles_[((j * e) % n) * root_step];
        for (size_t s = 0; s < r; ++s) {
            std::complex<double> acc = g[0];
            for (size_t e = 1; e < r; ++e) acc += g[e] * twiddles_[((s * e) % r) * (n_ / r)];
            out[j + s * sub] = acc;
        }
    }
}

}  // namespace spreadseq

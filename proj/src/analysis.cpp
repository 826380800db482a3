#include "spreadseq/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "spreadseq/dft.hpp"

namespace spreadseq {

namespace {

// Smallest prime factor; used to recognize prime-power phase moduli.
uint32_t smallest_prime_factor(uint32_t n) {
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;
}

uint32_t prime_of_prime_power(uint32_t q) {
    if (q < 2) throw ValueError("phase modulus must be at least 2");
    const uint32_t p = smallest_prime_factor(q);
    uint32_t r = q;
    while (r % p == 0) r /= p;
    if (r != 1) throw ValueError("phase modulus " + std::to_string(q) + " is not a prime power");
    return p;
}

std::vector<std::complex<double>> unit_roots(uint32_t q) {
    std::vector<std::complex<double>> w(q);
    for (uint32_t j = 0; j < q; ++j) {
        const double ang = 2.0 * std::numbers::pi * double(j) / double(q);
        w[j] = {std::cos(ang), std::sin(ang)};
    }
    return w;
}

}  // namespace

uint64_t ExponentHistogram::total() const {
    return std::accumulate(counts.begin(), counts.end(), uint64_t(0));
}

std::complex<double> ExponentHistogram::complex_value() const {
    const auto w = unit_roots(q);
    std::complex<double> acc{0.0, 0.0};
    for (uint32_t j = 0; j < q; ++j)
        if (counts[j]) acc += double(counts[j]) * w[j];
    return acc;
}

ExponentHistogram inner_product_exact(const PhaseSequence& s1, const PhaseSequence& s2) {
    if (s1.size() != s2.size()) throw ShapeError("inner product requires equal lengths");
    if (s1.q != s2.q) throw ShapeError("inner product requires equal phase moduli");
    ExponentHistogram h(s1.q);
    for (size_t k = 0; k < s1.size(); ++k)
        ++h.counts[(s1.phases[k] % s1.q + s1.q - s2.phases[k] % s1.q) % s1.q];
    return h;
}

bool is_zero_sum(const ExponentHistogram& h) {
    const uint32_t p = prime_of_prime_power(h.q);
    const uint32_t period = h.q / p;
    for (uint32_t j = 0; j < h.q; ++j)
        if (h.counts[j] != h.counts[j % period]) return false;
    return true;
}

bool abs_squared_equals(const ExponentHistogram& h, uint64_t target) {
    const uint32_t q = h.q;
    const uint32_t p = prime_of_prime_power(q);
    // |sum|^2 as a cyclotomic integer: autocorrelation of the counts.
    std::vector<int64_t> g(q, 0);
    for (uint32_t d = 0; d < q; ++d) {
        uint64_t e = 0;
        for (uint32_t j = 0; j < q; ++j) e += h.counts[j] * h.counts[(j + d) % q];
        g[d] = static_cast<int64_t>(e);
    }
    g[0] -= static_cast<int64_t>(target);
    // Reduce modulo Phi_q(x) = sum_{k=0}^{p-1} x^{k q/p}.
    const uint32_t s = q / p;
    const uint32_t deg = (p - 1) * s;
    for (uint32_t t = q; t-- > deg;) {
        const int64_t c = g[t];
        if (!c) continue;
        g[t] = 0;
        for (uint32_t k = 0; k < p - 1; ++k) g[t - deg + k * s] -= c;
    }
    return std::all_of(g.begin(), g.begin() + deg, [](int64_t v) { return v == 0; });
}

ExponentHistogram aperiodic_correlation(const PhaseSequence& a, const PhaseSequence& b,
                                        int64_t tau) {
    if (a.size() != b.size()) throw ShapeError("correlation requires equal lengths");
    if (a.q != b.q) throw ShapeError("correlation requires equal phase moduli");
    const int64_t len = static_cast<int64_t>(a.size());
    ExponentHistogram h(a.q);
    if (std::llabs(tau) >= len) return h;
    if (tau >= 0) {
        for (int64_t k = 0; k + tau < len; ++k)
            ++h.counts[(a.phases[k] + a.q - b.phases[k + tau]) % a.q];
    } else {
        for (int64_t k = 0; k - tau < len; ++k)
            ++h.counts[(a.phases[k - tau] + a.q - b.phases[k]) % a.q];
    }
    return h;
}

bool cs_check(const std::vector<PhaseSequence>& family) {
    if (family.empty()) throw ShapeError("complementary-set check requires a nonempty family");
    const size_t len = family.front().size();
    const uint32_t q = family.front().q;
    for (const auto& s : family)
        if (s.size() != len || s.q != q)
            throw ShapeError("complementary-set members must share length and modulus");
    for (size_t tau = 1; tau < len; ++tau) {
        ExponentHistogram pooled(q);
        for (const auto& s : family)
            for (size_t k = 0; k + tau < len; ++k)
                ++pooled.counts[(s.phases[k] + q - s.phases[k + tau]) % q];
        if (!is_zero_sum(pooled)) return false;
    }
    return true;
}

uint32_t SpreadingMatrix::q() const {
    auto v = checked_pow(p.value(), h);
    if (!v || *v > UINT32_MAX) throw CapacityError("phase modulus p^h too large");
    return static_cast<uint32_t>(*v);
}

uint64_t SpreadingMatrix::seq_len() const {
    auto v = checked_pow(p.value(), m);
    if (!v || *v > (uint64_t(1) << 28))
        throw CapacityError("sequence length p^m too large to enumerate");
    return *v;
}

std::vector<uint8_t> SpreadingMatrix::quad_table(size_t block) const {
    const QuadMatrix& a = blocks.at(block);
    const uint32_t pv = p.value();
    const uint64_t len = seq_len();
    std::vector<uint8_t> table(len);
    std::vector<uint8_t> x(m, 0);
    for (uint64_t i = 0; i < len; ++i) {
        uint32_t acc = 0;
        for (uint32_t r = 0; r < m; ++r) {
            if (!x[r]) continue;
            for (uint32_t c = 0; c < m; ++c) {
                const uint8_t v = a.matrix.at(r, c);
                if (v && x[c]) acc += uint32_t(v) * x[r] * x[c];
            }
        }
        table[i] = static_cast<uint8_t>(acc % pv);
        for (uint32_t k = 0; k < m; ++k) {
            if (++x[k] < pv) break;
            x[k] = 0;
        }
    }
    return table;
}

PhaseSequence SpreadingMatrix::column(size_t block, uint64_t c) const {
    return column_from_quad(quad_table(block), c);
}

PhaseSequence SpreadingMatrix::column_from_quad(const std::vector<uint8_t>& quad,
                                                uint64_t c) const {
    const uint64_t len = seq_len();
    if (c >= len) throw ValueError("column index out of range");
    if (quad.size() != len) throw ShapeError("quad table length mismatch");
    const uint32_t qq = q();
    const uint32_t lift = qq / p.value();
    const LinearFormQ lc(c, p, m, h);
    PhaseSequence s{std::vector<uint32_t>(len), qq};
    std::vector<uint8_t> x(m, 0);
    for (uint64_t i = 0; i < len; ++i) {
        s.phases[i] = (lift * quad[i] + lc.eval(std::span<const uint8_t>(x.data(), m))) % qq;
        for (uint32_t k = 0; k < m; ++k) {
            if (++x[k] < p.value()) break;
            x[k] = 0;
        }
    }
    return s;
}

SpreadingMatrix spreading_matrix(const MatrixFamily& family, uint32_t h) {
    if (h < 1 || h > family.m)
        throw ValueError("alphabet exponent h must satisfy 1 <= h <= m");
    return SpreadingMatrix{family.p, family.m, h, family.members, family.provenance};
}

uint32_t overloading_factor(uint64_t num_columns, uint64_t seq_len) {
    return static_cast<uint32_t>((num_columns + seq_len - 1) / seq_len);
}

CoherenceReport coherence_by_rank(const MatrixFamily& family) {
    if (family.size() < 2)
        throw InsufficientFamilyError("coherence requires a family of at least two matrices");
    CoherenceReport rep;
    rep.method = "rank-formula";
    uint32_t best = UINT32_MAX;
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = i + 1; j < family.size(); ++j) {
            const uint32_t r = symplectic_q(family.members[i], family.members[j]).rank;
            if (r < best) {
                best = r;
                rep.worst = WorstPair{i, 0, j, 0};
            }
        }
    rep.rank_min = best;
    rep.mu = std::pow(double(family.p.value()), -0.5 * double(best));
    const double mlen = std::pow(double(family.p.value()), double(family.m));
    rep.peak_abs = rep.mu * mlen;
    return rep;
}

namespace {

// Sweeps |sum_x omega^{(q/p) x C x^T + L_delta(x)}| over all difference
// profiles delta for one ordered block pair. Returns the peak magnitude and
// the achieving delta.
struct PairSweepResult {
    double peak = -1.0;
    uint64_t delta = 0;
};

PairSweepResult sweep_pair(const SpreadingMatrix& phi, const std::vector<uint8_t>& quad_diff,
                           bool skip_zero_delta) {
    const uint32_t pv = phi.p.value();
    const uint32_t qq = phi.q();
    const uint32_t lift = qq / pv;
    const uint64_t len = phi.seq_len();
    const uint32_t m = phi.m;
    const uint32_t h = phi.h;
    const auto roots = unit_roots(qq);

    // digit table and low-part residues, shared across deltas
    std::vector<uint8_t> digit(len * m);
    std::vector<uint32_t> lowmod(len);
    std::vector<uint32_t> lifted(len);
    for (uint64_t x = 0; x < len; ++x) {
        digits_into(x, m, pv, &digit[x * m]);
        lowmod[x] = static_cast<uint32_t>(x % qq);
        lifted[x] = lift * quad_diff[x];
    }

    PairSweepResult res;
    std::vector<uint8_t> vd(m - h);
    for (uint64_t delta = 0; delta < len; ++delta) {
        if (skip_zero_delta && delta == 0) continue;
        const uint64_t d = delta % qq;
        digits_into(delta / qq, m - h, pv, vd.data());
        std::complex<double> acc{0.0, 0.0};
        for (uint64_t x = 0; x < len; ++x) {
            uint64_t t = lifted[x] + d * lowmod[x] % qq;
            const uint8_t* dx = &digit[x * m];
            for (uint32_t k = 0; k < m - h; ++k) t += uint64_t(lift) * vd[k] % qq * dx[h + k];
            acc += roots[t % qq];
        }
        const double mag = std::abs(acc);
        if (mag > res.peak) {
            res.peak = mag;
            res.delta = delta;
        }
    }
    return res;
}

}  // namespace

CoherenceReport coherence_bruteforce(const SpreadingMatrix& phi) {
    if (phi.num_columns() < 2) throw InsufficientFamilyError("need at least two columns");
    CoherenceReport rep;
    rep.method = "brute-force";
    const uint64_t len = phi.seq_len();
    for (size_t i = 0; i < phi.blocks.size(); ++i) {
        for (size_t j = i; j < phi.blocks.size(); ++j) {
            MatrixFp diff = phi.blocks[i].matrix - phi.blocks[j].matrix;
            SpreadingMatrix probe{phi.p, phi.m, phi.h,
                                  {QuadMatrix{std::move(diff), std::nullopt}},
                                  ""};
            const auto quad = probe.quad_table(0);
            const PairSweepResult r = sweep_pair(phi, quad, i == j);
            if (r.peak > rep.peak_abs) {
                rep.peak_abs = r.peak;
                rep.worst = WorstPair{i, r.delta, j, 0};
            }
        }
    }
    rep.mu = rep.peak_abs / double(len);
    return rep;
}

CoherenceReport coherence_naive(const std::vector<PhaseSequence>& columns) {
    if (columns.size() < 2) throw InsufficientFamilyError("need at least two columns");
    CoherenceReport rep;
    rep.method = "brute-force";
    for (size_t i = 0; i < columns.size(); ++i)
        for (size_t j = i + 1; j < columns.size(); ++j) {
            const double mag = inner_product_exact(columns[i], columns[j]).abs();
            if (mag > rep.peak_abs) {
                rep.peak_abs = mag;
                rep.worst = WorstPair{0, i, 0, j};
            }
        }
    rep.mu = rep.peak_abs / double(columns.front().size());
    return rep;
}

ExponentHistogram max_cross_correlation(const QuadMatrix& a1, const QuadMatrix& a2, uint32_t h) {
    if (a1.m() != a2.m() || a1.modulus() != a2.modulus())
        throw ShapeError("cross correlation requires matching dimensions and moduli");
    MatrixFp diff = a1.matrix - a2.matrix;
    SpreadingMatrix probe{a1.modulus(), a1.m(), h,
                          {QuadMatrix{std::move(diff), std::nullopt}},
                          ""};
    const auto quad = probe.quad_table(0);
    const PairSweepResult r = sweep_pair(probe, quad, false);
    // rebuild the exact histogram for the winning difference profile
    const PhaseSequence win = probe.column(0, r.delta);
    PhaseSequence zero{std::vector<uint32_t>(win.size(), 0), win.q};
    return inner_product_exact(win, zero);
}

namespace {

double signal_power(const std::vector<std::complex<double>>& s, double t) {
    std::complex<double> acc{0.0, 0.0};
    for (size_t k = 0; k < s.size(); ++k) {
        const double ang = 2.0 * std::numbers::pi * double(k) * t;
        acc += s[k] * std::complex<double>{std::cos(ang), std::sin(ang)};
    }
    return std::norm(acc);
}

std::vector<std::complex<double>> to_complex(const PhaseSequence& s) {
    const auto roots = unit_roots(s.q);
    std::vector<std::complex<double>> out(s.size());
    for (size_t k = 0; k < s.size(); ++k) out[k] = roots[s.phases[k]];
    return out;
}

double papr_with_plans(const PhaseSequence& s, const Dft& plan, uint32_t oversample,
                       uint32_t refine_iters) {
    const size_t len = s.size();
    const size_t n = plan.size();
    std::vector<std::complex<double>> sig = to_complex(s);
    std::vector<std::complex<double>> padded(n, {0.0, 0.0});
    std::copy(sig.begin(), sig.end(), padded.begin());
    plan.forward(padded);
    double best = 0.0;
    size_t best_j = 0;
    for (size_t j = 0; j < n; ++j) {
        const double pw = std::norm(padded[j]);
        if (pw > best) {
            best = pw;
            best_j = j;
        }
    }
    if (refine_iters > 0 && oversample > 1) {
        double lo = (double(best_j) - 1.0) / double(n);
        double hi = (double(best_j) + 1.0) / double(n);
        for (uint32_t it = 0; it < refine_iters; ++it) {
            const double m1 = lo + (hi - lo) / 3.0;
            const double m2 = hi - (hi - lo) / 3.0;
            if (signal_power(sig, m1) < signal_power(sig, m2))
                lo = m1;
            else
                hi = m2;
        }
        best = std::max(best, signal_power(sig, 0.5 * (lo + hi)));
    }
    return best / double(len);
}

constexpr uint32_t kRefineIterations = 40;

}  // namespace

double papr_estimate(const PhaseSequence& s, uint32_t oversample) {
    if (oversample < 4) throw ValueError("oversample factor must be at least 4");
    const Dft plan(s.size() * size_t(oversample));
    return papr_with_plans(s, plan, oversample, kRefineIterations);
}

double papr_nyquist(const PhaseSequence& s) {
    const Dft plan(s.size());
    return papr_with_plans(s, plan, 1, 0);
}

PaprReport papr_set(const SpreadingMatrix& phi, uint32_t oversample) {
    if (oversample < 4) throw ValueError("oversample factor must be at least 4");
    PaprReport rep;
    rep.oversample = oversample;
    const uint64_t len = phi.seq_len();
    const Dft plan_os(len * oversample);
    const Dft plan_crit(len);
    for (size_t b = 0; b < phi.blocks.size(); ++b) {
        double be = 0.0, bn = 0.0;
        const auto quad = phi.quad_table(b);
        for (uint64_t c = 0; c < len; ++c) {
            const PhaseSequence col = phi.column_from_quad(quad, c);
            be = std::max(be, papr_with_plans(col, plan_os, oversample, kRefineIterations));
            bn = std::max(bn, papr_with_plans(col, plan_crit, 1, 0));
        }
        rep.block_estimate.push_back(be);
        rep.block_nyquist.push_back(bn);
        rep.set_estimate = std::max(rep.set_estimate, be);
        rep.set_nyquist = std::max(rep.set_nyquist, bn);
    }
    return rep;
}

}  // namespace spreadseq

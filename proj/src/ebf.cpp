#include "spreadseq/ebf.hpp"

#include <string>

namespace spreadseq {

namespace {

constexpr size_t kMaxSequenceEntries = size_t(1) << 28;

uint64_t sequence_length(PrimeModulus p, uint32_t m) {
    auto len = checked_pow(p.value(), m);
    if (!len || *len > kMaxSequenceEntries)
        throw CapacityError("sequence length p^m too large to materialize (p=" +
                            std::to_string(p.value()) + ", m=" + std::to_string(m) + ")");
    return *len;
}

}  // namespace

Ebf::Ebf(uint32_t num_vars, PrimeModulus p, uint32_t q) : m_(num_vars), p_(p), q_(q) {
    if (q < p.value()) throw ValueError("phase modulus must be a power of p, at least p");
    uint32_t r = q;
    while (r % p.value() == 0) r /= p.value();
    if (r != 1) throw ValueError("phase modulus must be a power of p");
}

void Ebf::add_term(std::vector<uint8_t> exponents, uint64_t coeff) {
    if (exponents.size() != m_)
        throw ShapeError("exponent vector length must equal the variable count");
    for (uint8_t e : exponents)
        if (e >= p_.value()) throw ValueError("monomial exponents must be below p");
    const uint32_t c = static_cast<uint32_t>(coeff % q_);
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(std::move(exponents), c);
        return;
    }
    it->second = (it->second + c) % q_;
    if (it->second == 0) terms_.erase(it);
}

uint32_t Ebf::eval(std::span<const uint8_t> x) const {
    if (x.size() != m_) throw ShapeError("evaluation point length must equal variable count");
    uint64_t acc = 0;
    for (const auto& [exps, coeff] : terms_) {
        uint64_t term = coeff;
        for (uint32_t i = 0; i < m_ && term != 0; ++i) {
            for (uint8_t e = 0; e < exps[i]; ++e) term = term * x[i] % q_;
        }
        acc += term;
    }
    return static_cast<uint32_t>(acc % q_);
}

uint32_t Ebf::eval(const DigitVector& x) const {
    return eval(std::span<const uint8_t>(x.digits().data(), x.digits().size()));
}

PhaseSequence sequence_of(const Ebf& f) {
    const uint32_t p = f.modulus().value();
    const uint32_t m = f.num_vars();
    const uint64_t len = sequence_length(f.modulus(), m);
    PhaseSequence s{std::vector<uint32_t>(len), f.phase_modulus()};
    std::vector<uint8_t> x(m, 0);
    for (uint64_t i = 0; i < len; ++i) {
        s.phases[i] = f.eval(std::span<const uint8_t>(x.data(), m));
        for (uint32_t k = 0; k < m; ++k) {  // increment p-ary counter
            if (++x[k] < p) break;
            x[k] = 0;
        }
    }
    return s;
}

Ebf QuadraticEbfSpec::to_ebf() const {
    const uint32_t m = a.m();
    if (linear.size() != m) throw ShapeError("linear part must have m coefficients");
    Ebf f(m, a.modulus(), a.modulus().value());
    if (constant) f.add_term(std::vector<uint8_t>(m, 0), constant);
    for (uint32_t r = 0; r < m; ++r)
        for (uint32_t c = 0; c < m; ++c) {
            const uint8_t v = a.matrix.at(r, c);
            if (!v) continue;
            std::vector<uint8_t> e(m, 0);
            e[r] += 1;
            e[c] += 1;
            f.add_term(std::move(e), v);
        }
    for (uint32_t k = 0; k < m; ++k) {
        if (!linear[k]) continue;
        std::vector<uint8_t> e(m, 0);
        e[k] = 1;
        f.add_term(std::move(e), linear[k]);
    }
    return f;
}

LinearFormQ::LinearFormQ(uint64_t c, PrimeModulus p, uint32_t m, uint32_t h)
    : c_(c), p_(p), m_(m), h_(h) {
    if (h < 1 || h > m)
        throw ValueError("linear form requires 1 <= h <= m, got h=" + std::to_string(h));
    auto qv = checked_pow(p.value(), h);
    if (!qv || *qv > UINT32_MAX) throw CapacityError("phase modulus p^h too large");
    q_ = static_cast<uint32_t>(*qv);
    auto bound = checked_pow(p.value(), m);
    if (bound && c >= *bound) throw ValueError("linear form index c out of range [0, p^m)");
    d_ = static_cast<uint32_t>(c % q_);
    v_.resize(m - h);
    digits_into(c / q_, m - h, p.value(), v_.data());
}

uint32_t LinearFormQ::eval(std::span<const uint8_t> x) const {
    if (x.size() != m_) throw ShapeError("evaluation point length must equal variable count");
    uint64_t acc = 0;
    uint64_t w = 1;
    for (uint32_t i = 0; i < h_; ++i) {  // d * sum_{i<=h} x_i p^(i-1)
        acc += uint64_t(d_) * x[i] % q_ * w % q_;
        w = w * p_.value() % q_;
    }
    const uint32_t lift = q_ / p_.value();
    for (uint32_t i = h_; i < m_; ++i) acc += uint64_t(lift) * v_[i - h_] % q_ * x[i];
    return static_cast<uint32_t>(acc % q_);
}

Ebf quadratic_ebf_q(const QuadMatrix& a, const LinearFormQ& lc, uint32_t constant) {
    const uint32_t m = a.m();
    const uint32_t q = lc.q();
    const uint32_t lift = q / a.modulus().value();
    Ebf f(m, a.modulus(), q);
    if (constant) f.add_term(std::vector<uint8_t>(m, 0), constant);
    for (uint32_t r = 0; r < m; ++r)
        for (uint32_t c = 0; c < m; ++c) {
            const uint8_t v = a.matrix.at(r, c);
            if (!v) continue;
            std::vector<uint8_t> e(m, 0);
            e[r] += 1;
            e[c] += 1;
            f.add_term(std::move(e), uint64_t(lift) * v);
        }
    uint64_t w = 1;
    const uint32_t p = a.modulus().value();
    for (uint32_t i = 0; i < lc.h(); ++i) {
        std::vector<uint8_t> e(m, 0);
        e[i] = 1;
        f.add_term(std::move(e), uint64_t(lc.d_lin()) * w % q);
        w = w * p % q;
    }
    for (uint32_t i = lc.h(); i < m; ++i) {
        std::vector<uint8_t> e(m, 0);
        e[i] = 1;
        f.add_term(std::move(e), uint64_t(lift) * lc.v()[i - lc.h()]);
    }
    return f;
}

std::vector<Ebf> cs_family_pary(const Permutation& pi, const std::vector<uint8_t>& a,
                                const std::vector<std::vector<uint8_t>>& c_coeffs,
                                PrimeModulus p) {
    const uint32_t m = pi.size();
    if (a.size() + 1 != m) throw ShapeError("path coefficient count must be m-1");
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] % p.value() == 0)
            throw ConditionViolation("a[" + std::to_string(i + 1) + "] must be nonzero");
    if (!c_coeffs.empty() && c_coeffs.size() != size_t(p.value()) - 1)
        throw ShapeError("c coefficient table must have p-1 rows");
    for (const auto& row : c_coeffs)
        if (row.size() != m) throw ShapeError("c coefficient rows must have m entries");

    Ebf base(m, p, p.value());
    for (uint32_t k = 1; k < m; ++k) {
        std::vector<uint8_t> e(m, 0);
        e[pi(k) - 1] += 1;
        e[pi(k + 1) - 1] += 1;
        base.add_term(std::move(e), a[k - 1]);
    }
    if (!c_coeffs.empty())
        for (uint32_t t = 1; t < p.value(); ++t)
            for (uint32_t k = 0; k < m; ++k) {
                const uint8_t coeff = c_coeffs[t - 1][k];
                if (!coeff) continue;
                std::vector<uint8_t> e(m, 0);
                e[k] = static_cast<uint8_t>(t);
                base.add_term(std::move(e), coeff);
            }

    std::vector<Ebf> family;
    family.reserve(p.value());
    for (uint32_t n = 0; n < p.value(); ++n) {
        Ebf f = base;
        std::vector<uint8_t> e(m, 0);
        e[pi(1) - 1] = 1;
        f.add_term(std::move(e), n);
        family.push_back(std::move(f));
    }
    return family;
}

std::vector<Ebf> cs_family_qary(const QuadMatrix& a, const LinearFormQ& lc) {
    if (!a.in_ap())
        throw ConditionViolation(
            "q-ary family requires psi provenance with nonzero path coefficients");
    const uint32_t p = a.modulus().value();
    const uint32_t lift = lc.q() / p;
    const Permutation& pi = a.spec->pi;
    Ebf base = quadratic_ebf_q(a, lc);
    std::vector<Ebf> family;
    family.reserve(p);
    for (uint32_t n = 0; n < p; ++n) {
        Ebf f = base;
        std::vector<uint8_t> e(a.m(), 0);
        e[pi(1) - 1] = 1;
        f.add_term(std::move(e), uint64_t(lift) * n);
        family.push_back(std::move(f));
    }
    return family;
}

}  // namespace spreadseq

#include "spreadseq/quadform.hpp"

#include <algorithm>
#include <limits>

namespace spreadseq {

bool PsiSpec::all_path_nonzero() const {
    return std::all_of(a.begin(), a.end(), [](uint8_t v) { return v != 0; });
}

QuadMatrix psi(const PsiSpec& spec) {
    const uint32_t m = spec.m();
    if (spec.a.size() + 1 != m)
        throw ShapeError("psi: |a| must be m-1, got " + std::to_string(spec.a.size()) +
                         " for m=" + std::to_string(m));
    if (spec.d.size() != m)
        throw ShapeError("psi: |d| must be m, got " + std::to_string(spec.d.size()));
    const uint32_t p = spec.p.value();
    for (uint8_t v : spec.a)
        if (v >= p) throw ValueError("psi: path coefficient not reduced mod p");
    for (uint8_t v : spec.d)
        if (v >= p) throw ValueError("psi: diagonal entry not reduced mod p");

    MatrixFp mat(m, m, spec.p);
    for (uint32_t i = 0; i < m; ++i) mat.set(i, i, spec.d[i]);
    for (uint32_t k = 1; k < m; ++k) mat.set(spec.pi(k) - 1, spec.pi(k + 1) - 1, spec.a[k - 1]);
    return QuadMatrix{std::move(mat), spec};
}

SymplecticMatrix symplectic_q(const QuadMatrix& ai, const QuadMatrix& aj) {
    if (ai.m() != aj.m() || ai.modulus() != aj.modulus())
        throw ShapeError("symplectic_q: dimension or modulus mismatch");
    MatrixFp diff = ai.matrix - aj.matrix;
    MatrixFp q = diff + diff.transposed();
    uint32_t rank = rank_fp(q);
    return SymplecticMatrix{std::move(q), rank};
}

MatrixFamily::MatrixFamily(std::vector<QuadMatrix> members_, std::string provenance_)
    : members(std::move(members_)),
      p(members.empty() ? throw ValueError("family must contain at least one matrix")
                        : members.front().modulus()),
      m(members.front().m()),
      provenance(std::move(provenance_)) {
    for (const auto& a : members)
        if (a.m() != m || a.modulus() != p)
            throw ShapeError("family members must share dimension and modulus");
}

std::vector<std::vector<uint32_t>> pairwise_rank_table(const MatrixFamily& family) {
    const size_t L = family.size();
    std::vector<std::vector<uint32_t>> table(L, std::vector<uint32_t>(L, 0));
    for (size_t i = 0; i < L; ++i)
        for (size_t j = i + 1; j < L; ++j) {
            const uint32_t r = symplectic_q(family.members[i], family.members[j]).rank;
            table[i][j] = table[j][i] = r;
        }
    return table;
}

uint32_t r_min(const MatrixFamily& family) {
    if (family.size() < 2)
        throw InsufficientFamilyError("r_min requires a family of at least two matrices");
    uint32_t best = std::numeric_limits<uint32_t>::max();
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = i + 1; j < family.size(); ++j)
            best = std::min(best, symplectic_q(family.members[i], family.members[j]).rank);
    return best;
}

bool verify_rank_lower_bound(const QuadMatrix& a) {
    if (!a.spec)
        throw ConditionViolation("rank lower bound requires psi provenance");
    if (!a.spec->all_path_nonzero())
        throw ConditionViolation("rank lower bound requires all path coefficients nonzero");
    const uint32_t r = rank_fp(a.matrix + a.matrix.transposed());
    return r + 1 >= a.m();
}

}  // namespace spreadseq

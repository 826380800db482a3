#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spreadseq/constructions.hpp"
#include "spreadseq/io.hpp"

namespace py = pybind11;
using namespace spreadseq;

namespace {

QuadMatrix psi_from_lists(const std::vector<uint32_t>& pi, const std::vector<uint8_t>& a,
                          const std::vector<uint8_t>& d, uint32_t p) {
    return psi(PsiSpec{Permutation(pi), a, d, PrimeModulus(p)});
}

py::dict coherence_dict(const CoherenceReport& rep) {
    py::dict d;
    d["mu"] = rep.mu;
    d["peak_abs"] = rep.peak_abs;
    d["method"] = rep.method;
    d["r_min"] = rep.rank_min;
    d["worst_pair"] = py::make_tuple(rep.worst.block_i, rep.worst.col_i, rep.worst.block_j,
                                     rep.worst.col_j);
    return d;
}

}  // namespace

PYBIND11_MODULE(_spreadseq, m) {
    m.doc() = "spreading sequence sets from quadratic functions over F_p";

    py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
    py::register_exception<ValueError>(m, "ValueError", PyExc_ValueError);
    py::register_exception<ConditionViolation>(m, "ConditionViolation", PyExc_ValueError);
    py::register_exception<InsufficientFamilyError>(m, "InsufficientFamilyError",
                                                    PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_MemoryError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("digits_of", [](uint64_t x, uint32_t mm, uint32_t p) {
        return digits_of(x, mm, PrimeModulus(p)).digits();
    }, py::arg("x"), py::arg("m"), py::arg("p"),
       "p-ary digits of x, least-significant first");
    m.def("int_of_digits", [](const std::vector<uint8_t>& d, uint32_t p) {
        return DigitVector(d, PrimeModulus(p)).to_integer();
    }, py::arg("digits"), py::arg("p"));
    m.def("bracket_mod", &bracket_mod, py::arg("k"), py::arg("m"));
    m.def("cyclic_shift_perm", [](const std::vector<uint32_t>& pi, uint32_t tau) {
        return cyclic_shift_perm(Permutation(pi), tau).values();
    }, py::arg("pi"), py::arg("tau"));
    m.def("rank_fp", [](const std::vector<std::vector<uint32_t>>& rows, uint32_t p) {
        return rank_fp(MatrixFp(rows, PrimeModulus(p)));
    }, py::arg("rows"), py::arg("p"), "matrix rank over F_p");

    py::class_<QuadMatrix>(m, "QuadMatrix")
        .def_property_readonly("rows",
                               [](const QuadMatrix& a) { return a.matrix.to_rows(); })
        .def_property_readonly("m", &QuadMatrix::m)
        .def_property_readonly("p",
                               [](const QuadMatrix& a) { return a.modulus().value(); })
        .def_property_readonly("in_ap", &QuadMatrix::in_ap)
        .def("__repr__", [](const QuadMatrix& a) {
            return "<QuadMatrix m=" + std::to_string(a.m()) + " p=" +
                   std::to_string(a.modulus().value()) + ">";
        });

    m.def("psi", &psi_from_lists, py::arg("pi"), py::arg("a"), py::arg("d"), py::arg("p"),
          "structured quadratic matrix with diagonal d and path a along pi");
    m.def("symplectic_rank", [](const QuadMatrix& a, const QuadMatrix& b) {
        return symplectic_q(a, b).rank;
    }, py::arg("a"), py::arg("b"));
    m.def("verify_rank_lower_bound", &verify_rank_lower_bound, py::arg("a"));

    py::class_<MatrixFamily>(m, "MatrixFamily")
        .def_property_readonly("members",
                               [](const MatrixFamily& f) { return f.members; })
        .def_property_readonly("p", [](const MatrixFamily& f) { return f.p.value(); })
        .def_property_readonly("m", [](const MatrixFamily& f) { return f.m; })
        .def_property_readonly("provenance",
                               [](const MatrixFamily& f) { return f.provenance; })
        .def("__len__", &MatrixFamily::size)
        .def("__repr__", [](const MatrixFamily& f) {
            return "<MatrixFamily " + f.provenance + " L=" + std::to_string(f.size()) + ">";
        });

    m.def("r_min", &r_min, py::arg("family"));
    m.def("pairwise_rank_table", &pairwise_rank_table, py::arg("family"));

    m.def("build_thm_lp", [](const std::vector<uint32_t>& pi, const std::vector<uint8_t>& a,
                             const std::vector<std::vector<uint8_t>>& d, uint32_t p) {
        return build_thm_lp(Permutation(pi), a, d, PrimeModulus(p));
    }, py::arg("pi"), py::arg("a"), py::arg("d"), py::arg("p"));
    m.def("build_thm_2p_diff",
          [](const std::vector<uint32_t>& pi, const std::vector<uint8_t>& a,
             const std::vector<uint8_t>& b, const std::vector<std::vector<uint8_t>>& da,
             const std::vector<std::vector<uint8_t>>& db, uint32_t p) {
              return build_thm_2p_diff(Permutation(pi), a, b, da, db, PrimeModulus(p));
          },
          py::arg("pi"), py::arg("a"), py::arg("b"), py::arg("d_a"), py::arg("d_b"),
          py::arg("p"));
    m.def("build_thm_2p_shift",
          [](const std::vector<uint32_t>& pi, uint32_t tau, const std::vector<uint8_t>& a,
             const std::vector<uint8_t>& b, const std::vector<std::vector<uint8_t>>& da,
             const std::vector<std::vector<uint8_t>>& db, uint32_t p) {
              return build_thm_2p_shift(Permutation(pi), tau, a, b, da, db, PrimeModulus(p));
          },
          py::arg("pi"), py::arg("tau"), py::arg("a"), py::arg("b"), py::arg("d_a"),
          py::arg("d_b"), py::arg("p"));
    m.def("build_thm_p3_even",
          [](const std::vector<uint32_t>& pi, const std::vector<uint8_t>& a,
             const std::vector<uint8_t>& b, const std::vector<uint8_t>& d1,
             const std::optional<std::vector<uint8_t>>& d4) {
              return build_thm_p3_even(Permutation(pi), a, b, d1, d4);
          },
          py::arg("pi"), py::arg("a"), py::arg("b"), py::arg("d1"),
          py::arg("d4") = py::none());
    m.def("build_thm_p3_any",
          [](const std::vector<uint32_t>& pi, const std::vector<uint8_t>& a,
             const std::vector<uint8_t>& b, const std::vector<uint8_t>& d1, uint32_t s,
             uint32_t e) { return build_thm_p3_any(Permutation(pi), a, b, d1, s, e); },
          py::arg("pi"), py::arg("a"), py::arg("b"), py::arg("d1"), py::arg("s"), py::arg("e"));
    m.def("compute_index_set_u", [](uint32_t mm) {
        const auto u = compute_index_set_u(mm);
        return std::vector<uint32_t>(u.members.begin(), u.members.end());
    }, py::arg("m"));
    m.def("count_configs", [](const std::string& variant, uint32_t p, uint32_t mm) {
        const auto v = variant_from_name(variant);
        if (!v) throw ValueError("unknown variant '" + variant + "'");
        return count_configs(*v, PrimeModulus(p), mm);
    }, py::arg("variant"), py::arg("p"), py::arg("m"));

    py::class_<SpreadingMatrix>(m, "SpreadingMatrix")
        .def_property_readonly("p", [](const SpreadingMatrix& s) { return s.p.value(); })
        .def_property_readonly("m", [](const SpreadingMatrix& s) { return s.m; })
        .def_property_readonly("h", [](const SpreadingMatrix& s) { return s.h; })
        .def_property_readonly("q", &SpreadingMatrix::q)
        .def_property_readonly("seq_len", &SpreadingMatrix::seq_len)
        .def_property_readonly("num_columns", &SpreadingMatrix::num_columns)
        .def_property_readonly("blocks",
                               [](const SpreadingMatrix& s) { return s.blocks; })
        .def("column", [](const SpreadingMatrix& s, size_t block, uint64_t c) {
            return s.column(block, c).phases;
        }, py::arg("block"), py::arg("c"), "integer phases of one column")
        .def("__repr__", [](const SpreadingMatrix& s) {
            return "<SpreadingMatrix " + std::to_string(s.seq_len()) + "x" +
                   std::to_string(s.num_columns()) + " q=" + std::to_string(s.q()) + ">";
        });

    m.def("lift_family_q", &lift_family_q, py::arg("family"), py::arg("h") = 1);
    m.def("materialize_phi", [](const SpreadingMatrix& phi, uint64_t budget) {
        std::vector<std::vector<uint32_t>> cols;
        for (auto& c : materialize_phi(phi, budget)) cols.push_back(std::move(c.phases));
        return cols;
    }, py::arg("phi"), py::arg("budget") = uint64_t(1) << 22);

    m.def("sequence_of_quadratic",
          [](const QuadMatrix& a, uint64_t c, uint32_t h) {
              const SpreadingMatrix one{a.modulus(), a.m(), h, {a}, ""};
              return one.column(0, c).phases;
          },
          py::arg("a"), py::arg("c") = 0, py::arg("h") = 1,
          "phases of the sequence generated by one quadratic matrix and linear index c");

    m.def("cs_check_phases", [](const std::vector<std::vector<uint32_t>>& fam, uint32_t q) {
        std::vector<PhaseSequence> seqs;
        for (const auto& f : fam) seqs.push_back(PhaseSequence{f, q});
        return cs_check(seqs);
    }, py::arg("family"), py::arg("q"), "exact complementary-set test on phase vectors");
    m.def("cs_family_quadratic", [](const QuadMatrix& a, uint64_t c, uint32_t h) {
        const auto fam = cs_family_qary(a, LinearFormQ(c, a.modulus(), a.m(), h));
        std::vector<std::vector<uint32_t>> out;
        for (const auto& f : fam) out.push_back(sequence_of(f).phases);
        return out;
    }, py::arg("a"), py::arg("c") = 0, py::arg("h") = 1);

    m.def("coherence_by_rank",
          [](const MatrixFamily& f) { return coherence_dict(coherence_by_rank(f)); },
          py::arg("family"));
    m.def("coherence_bruteforce",
          [](const SpreadingMatrix& phi) { return coherence_dict(coherence_bruteforce(phi)); },
          py::arg("phi"));
    m.def("papr_estimate", [](const std::vector<uint32_t>& phases, uint32_t q,
                              uint32_t oversample) {
        return papr_estimate(PhaseSequence{phases, q}, oversample);
    }, py::arg("phases"), py::arg("q"), py::arg("oversample") = 128);
    m.def("papr_nyquist", [](const std::vector<uint32_t>& phases, uint32_t q) {
        return papr_nyquist(PhaseSequence{phases, q});
    }, py::arg("phases"), py::arg("q"));
    m.def("papr_set", [](const SpreadingMatrix& phi, uint32_t oversample) {
        const auto rep = papr_set(phi, oversample);
        py::dict d;
        d["set_estimate"] = rep.set_estimate;
        d["set_nyquist"] = rep.set_nyquist;
        d["block_estimate"] = rep.block_estimate;
        d["block_nyquist"] = rep.block_nyquist;
        d["oversample"] = rep.oversample;
        return d;
    }, py::arg("phi"), py::arg("oversample") = 128);
    m.def("overloading_factor", &overloading_factor, py::arg("num_columns"), py::arg("seq_len"));

    m.def("write_phi_json", [](const SpreadingMatrix& phi, const std::string& path,
                               uint64_t budget) {
        write_phi_json(document_from(phi, budget), path);
    }, py::arg("phi"), py::arg("path"), py::arg("budget") = uint64_t(1) << 22);
    m.def("verify_phi_file", [](const std::string& path, uint32_t oversample) {
        const auto rep = verify_phi(load_phi(path), oversample);
        py::dict d;
        d["orthogonality"] = rep.orthogonality_ok;
        d["cs_checked"] = rep.cs_checked;
        d["cs_ok"] = rep.cs_ok;
        d["mu"] = rep.coherence.mu;
        d["papr_set_estimate"] = rep.papr_set_estimate;
        d["papr_set_nyquist"] = rep.papr_set_nyquist;
        d["passed"] = rep.passed();
        return d;
    }, py::arg("path"), py::arg("oversample") = 128);
}

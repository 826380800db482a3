#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spreadseq/analysis.hpp"
#include "spreadseq/constructions.hpp"

namespace spreadseq {

/// A spreading matrix together with its materialized phases, as written to
/// and read back from disk. JSON keeps the block generators (and psi specs
/// when known) next to the integer phase table; CSV keeps one column per
/// sequence under a small metadata header.
struct PhiDocument {
    PrimeModulus p;
    uint32_t m = 0;
    uint32_t h = 1;
    std::string construction;
    std::string normalization = "none";
    std::vector<QuadMatrix> blocks;
    std::vector<PhaseSequence> columns;  // block-major, c ascending

    uint32_t q() const;
    uint64_t seq_len() const { return columns.empty() ? 0 : columns.front().size(); }
};

PhiDocument document_from(const SpreadingMatrix& phi, uint64_t budget = uint64_t(1) << 22);

void write_phi_json(const PhiDocument& doc, const std::string& path);
void write_phi_csv(const PhiDocument& doc, const std::string& path);

/// Complex values of every column, one "re<sep>im" pair per cell, scaled by
/// 1/sqrt(M) when the document's normalization asks for unit-energy columns.
void write_complex_csv(const PhiDocument& doc, const std::string& path);

/// Loads a document written by the functions above; the format is chosen by
/// the file extension (.json or .csv).
PhiDocument load_phi(const std::string& path);

struct VerificationReport {
    bool orthogonality_ok = false;
    // first violating pair when orthogonality fails
    size_t bad_block = 0;
    uint64_t bad_c1 = 0, bad_c2 = 0;

    bool cs_checked = false;  // requires psi provenance in the file
    bool cs_ok = false;
    uint64_t cs_bad_column = 0;
    size_t cs_bad_block = 0;

    CoherenceReport coherence;
    double papr_set_estimate = 0.0;
    double papr_set_nyquist = 0.0;
    uint32_t oversample = 0;

    bool passed() const { return orthogonality_ok && (!cs_checked || cs_ok); }
};

/// Exact orthogonality and complementary-set checks on the phases as stored
/// (not regenerated), plus brute-force coherence and PAPR readouts.
VerificationReport verify_phi(const PhiDocument& doc, uint32_t oversample = 128);

}  // namespace spreadseq

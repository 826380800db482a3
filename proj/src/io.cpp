#include "spreadseq/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace spreadseq {

namespace {

using ordered_json = nlohmann::ordered_json;

void require(bool cond, const std::string& what) {
    if (!cond) throw ParseError(what);
}

std::string lower_ext(const std::string& path) {
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos) return "";
    std::string ext = path.substr(dot + 1);
    for (char& c : ext) c = static_cast<char>(std::tolower(c));
    return ext;
}

}  // namespace

uint32_t PhiDocument::q() const {
    auto v = checked_pow(p.value(), h);
    if (!v || *v > UINT32_MAX) throw CapacityError("phase modulus p^h too large");
    return static_cast<uint32_t>(*v);
}

PhiDocument document_from(const SpreadingMatrix& phi, uint64_t budget) {
    PhiDocument doc{phi.p, phi.m, phi.h, phi.provenance, "none", phi.blocks, {}};
    doc.columns = materialize_phi(phi, budget);
    return doc;
}

void write_phi_json(const PhiDocument& doc, const std::string& path) {
    const uint64_t mlen = doc.seq_len();
    const uint64_t ncols = doc.columns.size();
    ordered_json j;
    j["format"] = "spreadseq-phi";
    j["version"] = 1;
    j["p"] = doc.p.value();
    j["m"] = doc.m;
    j["h"] = doc.h;
    j["q"] = doc.q();
    j["construction"] = doc.construction;
    j["normalization"] = doc.normalization;
    j["rows"] = mlen;
    j["columns"] = ncols;
    j["blocks"] = ordered_json::array();
    for (const auto& blk : doc.blocks) {
        ordered_json b;
        b["matrix"] = blk.matrix.to_rows();
        if (blk.spec) {
            ordered_json spec;
            spec["pi"] = blk.spec->pi.values();
            spec["a"] = blk.spec->a;
            spec["d"] = blk.spec->d;
            b["psi"] = spec;
        }
        b["linear_forms_range"] = {0, mlen - 1};
        j["blocks"].push_back(std::move(b));
    }
    // row-major: entry (k, col) of the M x N matrix at index k*N + col
    std::vector<uint32_t> flat(mlen * ncols);
    for (uint64_t col = 0; col < ncols; ++col)
        for (uint64_t k = 0; k < mlen; ++k) flat[k * ncols + col] = doc.columns[col].phases[k];
    j["phases"] = std::move(flat);

    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << j.dump(1) << "\n";
}

void write_phi_csv(const PhiDocument& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    const uint64_t mlen = doc.seq_len();
    out << "# spreadseq-phi p=" << doc.p.value() << " m=" << doc.m << " h=" << doc.h
        << " blocks=" << doc.blocks.size() << " normalization=" << doc.normalization << "\n";
    for (uint64_t k = 0; k < mlen; ++k) {
        for (size_t col = 0; col < doc.columns.size(); ++col) {
            if (col) out << ',';
            out << doc.columns[col].phases[k];
        }
        out << "\n";
    }
}

void write_complex_csv(const PhiDocument& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    const uint64_t mlen = doc.seq_len();
    const uint32_t q = doc.q();
    const double scale =
        doc.normalization == "unit-energy" ? 1.0 / std::sqrt(double(mlen)) : 1.0;
    out << "# spreadseq-phi complex p=" << doc.p.value() << " m=" << doc.m << " h=" << doc.h
        << " scale=" << (doc.normalization == "unit-energy" ? "1/sqrt(M)" : "1") << "\n";
    char buf[80];
    for (uint64_t k = 0; k < mlen; ++k) {
        for (size_t col = 0; col < doc.columns.size(); ++col) {
            const double ang = 2.0 * std::numbers::pi * doc.columns[col].phases[k] / double(q);
            std::snprintf(buf, sizeof buf, "%.12g%+.12gi", scale * std::cos(ang),
                          scale * std::sin(ang));
            if (col) out << ',';
            out << buf;
        }
        out << "\n";
    }
}

namespace {

PhiDocument load_phi_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    require(j.is_object(), "top-level JSON value must be an object");
    require(j.value("format", "") == "spreadseq-phi", "missing or wrong format tag");
    for (const char* key : {"p", "m", "h", "rows", "columns", "blocks", "phases"})
        require(j.contains(key), std::string("missing field '") + key + "'");

    PhiDocument doc{PrimeModulus(j["p"].get<uint32_t>()),
                    j["m"].get<uint32_t>(),
                    j["h"].get<uint32_t>(),
                    j.value("construction", ""),
                    j.value("normalization", "none"),
                    {},
                    {}};
    const uint64_t mlen = j["rows"].get<uint64_t>();
    const uint64_t ncols = j["columns"].get<uint64_t>();
    auto expect_len = checked_pow(doc.p.value(), doc.m);
    require(expect_len && mlen == *expect_len, "rows must equal p^m");
    const uint32_t q = doc.q();

    for (const auto& b : j["blocks"]) {
        require(b.contains("matrix"), "block missing 'matrix'");
        auto rows = b["matrix"].get<std::vector<std::vector<uint32_t>>>();
        require(rows.size() == doc.m, "block matrix must be m x m");
        QuadMatrix qm{MatrixFp(rows, doc.p), std::nullopt};
        if (b.contains("psi")) {
            const auto& s = b["psi"];
            qm.spec = PsiSpec{Permutation(s["pi"].get<std::vector<uint32_t>>()),
                              s["a"].get<std::vector<uint8_t>>(),
                              s["d"].get<std::vector<uint8_t>>(), doc.p};
            require(psi(*qm.spec).matrix == qm.matrix, "block matrix does not match its psi spec");
        }
        doc.blocks.push_back(std::move(qm));
    }
    require(!doc.blocks.empty(), "at least one block required");
    require(ncols == mlen * doc.blocks.size(), "columns must equal blocks * p^m");

    const auto& ph = j["phases"];
    require(ph.is_array() && ph.size() == mlen * ncols,
            "phases must hold rows*columns entries");
    doc.columns.assign(ncols, PhaseSequence{std::vector<uint32_t>(mlen), q});
    for (uint64_t idx = 0; idx < ph.size(); ++idx) {
        const auto& cell = ph[idx];
        require(cell.is_number_unsigned(), "phase entries must be nonnegative integers");
        const uint64_t v = cell.get<uint64_t>();
        require(v < q, "phase entry " + std::to_string(v) + " not below q=" + std::to_string(q));
        doc.columns[idx % ncols].phases[idx / ncols] = static_cast<uint32_t>(v);
    }
    return doc;
}

PhiDocument load_phi_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::string header;
    require(static_cast<bool>(std::getline(in, header)), "empty file");
    require(header.rfind("# spreadseq-phi", 0) == 0, "missing spreadseq-phi CSV header");
    uint32_t p = 0, m = 0, h = 1;
    size_t blocks = 0;
    std::string norm = "none";
    std::istringstream hs(header.substr(15));
    std::string tok;
    while (hs >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "p") p = static_cast<uint32_t>(std::stoul(val));
        else if (key == "m") m = static_cast<uint32_t>(std::stoul(val));
        else if (key == "h") h = static_cast<uint32_t>(std::stoul(val));
        else if (key == "blocks") blocks = std::stoul(val);
        else if (key == "normalization") norm = val;
    }
    require(p && m && blocks, "CSV header must carry p, m and blocks");

    PhiDocument doc{PrimeModulus(p), m, h, "", norm, {}, {}};
    const uint32_t q = doc.q();
    auto expect_len = checked_pow(p, m);
    require(static_cast<bool>(expect_len), "p^m overflows");
    const uint64_t mlen = *expect_len;
    const uint64_t ncols = mlen * blocks;
    doc.columns.assign(ncols, PhaseSequence{std::vector<uint32_t>(mlen), q});

    std::string line;
    uint64_t row = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        require(row < mlen, "more data rows than p^m");
        std::istringstream ls(line);
        std::string cell;
        uint64_t col = 0;
        while (std::getline(ls, cell, ',')) {
            require(col < ncols, "row " + std::to_string(row + 1) + " has too many columns");
            uint64_t v = 0;
            try {
                v = std::stoull(cell);
            } catch (const std::exception&) {
                throw ParseError("row " + std::to_string(row + 1) + ", column " +
                                 std::to_string(col + 1) + ": not an integer: '" + cell + "'");
            }
            require(v < q, "row " + std::to_string(row + 1) + ", column " +
                               std::to_string(col + 1) + ": phase " + std::to_string(v) +
                               " not below q");
            doc.columns[col].phases[row] = static_cast<uint32_t>(v);
            ++col;
        }
        require(col == ncols, "row " + std::to_string(row + 1) + " has " + std::to_string(col) +
                                  " columns, expected " + std::to_string(ncols));
        ++row;
    }
    require(row == mlen, "expected " + std::to_string(mlen) + " data rows, got " +
                             std::to_string(row));
    // raw matrices are unknown in CSV form; keep placeholder zero blocks
    for (size_t b = 0; b < blocks; ++b)
        doc.blocks.push_back(QuadMatrix{MatrixFp(m, m, doc.p), std::nullopt});
    return doc;
}

}  // namespace

PhiDocument load_phi(const std::string& path) {
    const std::string ext = lower_ext(path);
    if (ext == "json") return load_phi_json(path);
    if (ext == "csv") return load_phi_csv(path);
    throw ParseError("unrecognized file extension '" + ext + "', expected .json or .csv");
}

VerificationReport verify_phi(const PhiDocument& doc, uint32_t oversample) {
    VerificationReport rep;
    rep.oversample = oversample;
    const uint64_t mlen = doc.seq_len();
    const size_t nblocks = doc.blocks.size();
    require(!doc.columns.empty(), "document has no columns");

    // Within-block orthogonality, exact.
    rep.orthogonality_ok = true;
    for (size_t b = 0; b < nblocks && rep.orthogonality_ok; ++b)
        for (uint64_t c1 = 0; c1 < mlen && rep.orthogonality_ok; ++c1)
            for (uint64_t c2 = c1 + 1; c2 < mlen; ++c2) {
                const auto hist = inner_product_exact(doc.columns[b * mlen + c1],
                                                      doc.columns[b * mlen + c2]);
                if (!is_zero_sum(hist)) {
                    rep.orthogonality_ok = false;
                    rep.bad_block = b;
                    rep.bad_c1 = c1;
                    rep.bad_c2 = c2;
                    break;
                }
            }

    // Complementary-set membership of every stored column, exact. Needs the
    // psi spec to know pi(1); members differ by (q/p) n x_{pi(1)}.
    rep.cs_checked = !doc.blocks.empty() &&
                     std::all_of(doc.blocks.begin(), doc.blocks.end(),
                                 [](const QuadMatrix& b) { return b.spec.has_value(); });
    if (rep.cs_checked) {
        rep.cs_ok = true;
        const uint32_t q = doc.q();
        const uint32_t p = doc.p.value();
        const uint32_t lift = q / p;
        std::vector<uint8_t> xs(doc.m);
        for (size_t b = 0; b < nblocks && rep.cs_ok; ++b) {
            const uint32_t pi1 = doc.blocks[b].spec->pi(1);
            std::vector<uint8_t> xpi(mlen);
            for (uint64_t x = 0; x < mlen; ++x) {
                digits_into(x, doc.m, p, xs.data());
                xpi[x] = xs[pi1 - 1];
            }
            for (uint64_t c = 0; c < mlen; ++c) {
                const PhaseSequence& base = doc.columns[b * mlen + c];
                std::vector<PhaseSequence> fam(p, PhaseSequence{std::vector<uint32_t>(mlen), q});
                for (uint32_t n = 0; n < p; ++n)
                    for (uint64_t x = 0; x < mlen; ++x)
                        fam[n].phases[x] = (base.phases[x] + lift * n * xpi[x]) % q;
                if (!cs_check(fam)) {
                    rep.cs_ok = false;
                    rep.cs_bad_block = b;
                    rep.cs_bad_column = c;
                    break;
                }
            }
        }
    }

    rep.coherence = coherence_naive(doc.columns);
    // the naive sweep reports flat column indices; express them as
    // (block, column) pairs
    rep.coherence.worst.block_i = rep.coherence.worst.col_i / mlen;
    rep.coherence.worst.col_i %= mlen;
    rep.coherence.worst.block_j = rep.coherence.worst.col_j / mlen;
    rep.coherence.worst.col_j %= mlen;
    for (size_t col = 0; col < doc.columns.size(); ++col) {
        rep.papr_set_estimate =
            std::max(rep.papr_set_estimate, papr_estimate(doc.columns[col], oversample));
        rep.papr_set_nyquist = std::max(rep.papr_set_nyquist, papr_nyquist(doc.columns[col]));
    }
    return rep;
}

}  // namespace spreadseq

// Command-line front end: generate, verify, analyze and export
// non-orthogonal spreading sequence sets built from quadratic functions
// over F_p.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spreadseq/constructions.hpp"
#include "spreadseq/io.hpp"

using namespace spreadseq;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCondition = 2;
constexpr int kExitParse = 3;
constexpr int kExitCapacity = 4;

double round4(double v) { return std::round(v * 1e4) / 1e4; }

uint64_t memory_budget() {
    if (const char* env = std::getenv("SPREADSEQ_MEM_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw ValueError("SPREADSEQ_MEM_BUDGET must be a positive integer");
    }
    return uint64_t(1) << 22;
}

std::vector<uint8_t> parse_byte_vector(const std::string& text, const char* label) {
    std::vector<uint8_t> out;
    std::istringstream is(text);
    std::string cell;
    while (std::getline(is, cell, ',')) {
        try {
            const unsigned long v = std::stoul(cell);
            if (v > 255) throw std::out_of_range("byte");
            out.push_back(static_cast<uint8_t>(v));
        } catch (const std::exception&) {
            throw ParseError(std::string(label) + ": expected comma-separated digits, got '" +
                             cell + "'");
        }
    }
    if (out.empty()) throw ParseError(std::string(label) + ": empty vector");
    return out;
}

std::vector<std::vector<uint8_t>> parse_vector_list(const std::string& text, const char* label) {
    std::vector<std::vector<uint8_t>> out;
    std::istringstream is(text);
    std::string group;
    while (std::getline(is, group, ';')) out.push_back(parse_byte_vector(group, label));
    return out;
}

// Construction parameters shared by generate / papr / coherence.
struct GenOptions {
    std::string variant = "thm-lp";
    uint32_t p = 3;
    uint32_t m = 2;
    uint32_t h = 1;
    uint32_t tau = 1;
    uint32_t s = 0;  // 0 = unset; drawn from U when a seed is given
    uint32_t e = 1;
    std::string pi_text, a_text, b_text, d_text;
    std::optional<uint64_t> seed;
};

void add_generation_flags(CLI::App* cmd, GenOptions& opt) {
    cmd->set_help_flag("--help", "print this help");  // frees -h for the alphabet flag
    cmd->add_option("--variant", opt.variant,
                    "construction: thm-lp, thm-2p-diff, thm-2p-shift, thm-p3-even, thm-p3-any")
        ->required();
    cmd->add_option("--p", opt.p, "odd prime alphabet base")->required();
    cmd->add_option("--m", opt.m, "number of variables; sequences have length p^m")->required();
    cmd->add_option("--h", opt.h, "alphabet exponent, phases live in Z_{p^h}");
    cmd->add_option("--pi", opt.pi_text, "permutation of 1..m, comma separated");
    cmd->add_option("--a", opt.a_text, "m-1 path coefficients, comma separated");
    cmd->add_option("--b", opt.b_text, "second path coefficient vector");
    cmd->add_option("--d", opt.d_text,
                    "diagonal vectors, ';' separated (p or 2p vectors; one or two for the "
                    "six-block variants)");
    cmd->add_option("--tau", opt.tau, "cyclic shift for thm-2p-shift");
    cmd->add_option("--s", opt.s, "shift coordinate (index into U) for thm-p3-any");
    cmd->add_option("--e", opt.e, "diagonal shift amount for thm-p3-any");
    cmd->add_option("--seed", opt.seed, "draw any unspecified parameters at random");
}

// Uniform draws via the raw engine keep results identical across compilers.
uint64_t draw(std::mt19937_64& rng, uint64_t bound) { return rng() % bound; }

struct RandomReport {
    uint64_t rejections = 0;
};

Permutation random_permutation(std::mt19937_64& rng, uint32_t m) {
    std::vector<uint32_t> v(m);
    for (uint32_t i = 0; i < m; ++i) v[i] = i + 1;
    for (uint32_t i = m; i > 1; --i) std::swap(v[i - 1], v[draw(rng, i)]);
    return Permutation(std::move(v));
}

std::vector<uint8_t> random_nonzero(std::mt19937_64& rng, uint32_t p, uint32_t len) {
    std::vector<uint8_t> v(len);
    for (auto& x : v) x = static_cast<uint8_t>(1 + draw(rng, p - 1));
    return v;
}

std::vector<std::vector<uint8_t>> random_d_list(std::mt19937_64& rng, uint32_t p, uint32_t m) {
    // coordinate-wise random permutations of F_p
    std::vector<std::vector<uint8_t>> d(p, std::vector<uint8_t>(m));
    for (uint32_t k = 0; k < m; ++k) {
        std::vector<uint8_t> col(p);
        for (uint32_t i = 0; i < p; ++i) col[i] = static_cast<uint8_t>(i);
        for (uint32_t i = p; i > 1; --i) std::swap(col[i - 1], col[draw(rng, i)]);
        for (uint32_t i = 0; i < p; ++i) d[i][k] = col[i];
    }
    return d;
}

struct BuiltFamily {
    MatrixFamily family;
    ordered_json echo;
    RandomReport random;
};

BuiltFamily build_family(const GenOptions& opt) {
    const auto variant = variant_from_name(opt.variant);
    if (!variant) throw ParseError("unknown variant '" + opt.variant + "'");
    const PrimeModulus p(opt.p);
    const uint32_t m = opt.m;
    if (m < 2) throw ConditionViolation("condition violated: m must be at least 2");

    std::optional<std::mt19937_64> rng;
    RandomReport rr;
    if (opt.seed) rng.emplace(*opt.seed);
    auto need_rng = [&]() -> std::mt19937_64& {
        if (!rng)
            throw ParseError("missing explicit parameters; pass --seed to draw them randomly");
        return *rng;
    };

    const Permutation pi = opt.pi_text.empty()
                               ? random_permutation(need_rng(), m)
                               : Permutation([&] {
                                     auto v = parse_byte_vector(opt.pi_text, "--pi");
                                     return std::vector<uint32_t>(v.begin(), v.end());
                                 }());
    if (pi.size() != m) throw ParseError("--pi must list 1..m in some order");

    auto vec_or_random = [&](const std::string& text, const char* label) {
        return text.empty() ? random_nonzero(need_rng(), opt.p, m - 1)
                            : parse_byte_vector(text, label);
    };
    const std::vector<uint8_t> a = vec_or_random(opt.a_text, "--a");

    auto d_groups = opt.d_text.empty() ? std::vector<std::vector<uint8_t>>{}
                                       : parse_vector_list(opt.d_text, "--d");

    ordered_json echo;
    echo["variant"] = opt.variant;
    echo["p"] = opt.p;
    echo["m"] = m;
    echo["h"] = opt.h;
    echo["pi"] = pi.values();
    echo["a"] = a;
    if (opt.seed) echo["seed"] = *opt.seed;

    auto take_d_lists = [&](size_t lists) {
        std::vector<std::vector<std::vector<uint8_t>>> out;
        if (d_groups.empty()) {
            for (size_t i = 0; i < lists; ++i) out.push_back(random_d_list(need_rng(), opt.p, m));
        } else {
            if (d_groups.size() != lists * opt.p)
                throw ParseError("--d must supply " + std::to_string(lists * opt.p) +
                                 " vectors for this variant");
            for (size_t i = 0; i < lists; ++i)
                out.emplace_back(d_groups.begin() + i * opt.p,
                                 d_groups.begin() + (i + 1) * opt.p);
        }
        return out;
    };

    switch (*variant) {
        case Variant::ThmLp: {
            auto d = take_d_lists(1);
            echo["d"] = d[0];
            return {build_thm_lp(pi, a, d[0], p), echo, rr};
        }
        case Variant::Thm2pDiff: {
            std::vector<uint8_t> b;
            if (!opt.b_text.empty()) {
                b = parse_byte_vector(opt.b_text, "--b");
            } else {
                auto& r = need_rng();
                do {
                    b = random_nonzero(r, opt.p, m - 1);
                    bool ok = true;
                    for (uint32_t k = 0; k < m - 1; ++k)
                        if (a[k] == b[k]) ok = false;
                    if (ok) break;
                    ++rr.rejections;
                } while (true);
            }
            auto d = take_d_lists(2);
            echo["b"] = b;
            echo["d"] = ordered_json{d[0], d[1]};
            return {build_thm_2p_diff(pi, a, b, d[0], d[1], p), echo, rr};
        }
        case Variant::Thm2pShift: {
            std::vector<uint8_t> b;
            if (!opt.b_text.empty()) {
                b = parse_byte_vector(opt.b_text, "--b");
            } else {
                // choose t, set b_t to match and the rest to differ
                auto& r = need_rng();
                const uint32_t tau_eff = bracket_mod(opt.tau, m);
                if (tau_eff == m)
                    throw ConditionViolation(
                        "condition violated: tau congruent 0 mod m leaves pi unchanged, so no "
                        "index t can satisfy condition (2)");
                std::vector<uint32_t> candidates;
                for (uint32_t i = 1; i < m; ++i)
                    if (i != m - tau_eff) candidates.push_back(i);
                if (candidates.empty())
                    throw ConditionViolation(
                        "condition violated: no admissible index t exists for this m and tau");
                const uint32_t t = candidates[draw(r, candidates.size())];
                b.assign(m - 1, 0);
                for (uint32_t i = 1; i < m; ++i) {
                    if (i == m - tau_eff) {
                        b[i - 1] = static_cast<uint8_t>(1 + draw(r, opt.p - 1));
                        continue;
                    }
                    const uint8_t ai = a[bracket_mod(uint64_t(i) + tau_eff, m) - 1];
                    if (i == t) {
                        b[i - 1] = ai;
                    } else {
                        uint8_t v;
                        do {
                            v = static_cast<uint8_t>(1 + draw(r, opt.p - 1));
                            if (v != ai) break;
                            ++rr.rejections;
                        } while (true);
                        b[i - 1] = v;
                    }
                }
            }
            auto d = take_d_lists(2);
            echo["b"] = b;
            echo["tau"] = opt.tau;
            echo["d"] = ordered_json{d[0], d[1]};
            return {build_thm_2p_shift(pi, opt.tau, a, b, d[0], d[1], p), echo, rr};
        }
        case Variant::ThmP3Even:
        case Variant::ThmP3Any: {
            if (opt.p != 3)
                throw ConditionViolation("condition violated: this variant requires p = 3");
            std::vector<uint8_t> b;
            if (!opt.b_text.empty()) {
                b = parse_byte_vector(opt.b_text, "--b");
            } else {
                b.resize(m - 1);
                for (uint32_t k = 0; k < m - 1; ++k) b[k] = static_cast<uint8_t>(3 - a[k]);
            }
            std::vector<uint8_t> d1;
            std::optional<std::vector<uint8_t>> d4;
            const size_t max_groups = *variant == Variant::ThmP3Even ? 2 : 1;
            if (d_groups.empty()) {
                d1.resize(m);
                for (auto& v : d1) v = static_cast<uint8_t>(draw(need_rng(), 3));
            } else {
                if (d_groups.size() > max_groups)
                    throw ParseError("--d takes at most " + std::to_string(max_groups) +
                                     " vector(s) for this variant");
                d1 = d_groups[0];
                if (d_groups.size() == 2) d4 = d_groups[1];
            }
            echo["b"] = b;
            echo["d"] = d1;
            if (*variant == Variant::ThmP3Even) {
                if (d4) echo["d4"] = *d4;
                return {build_thm_p3_even(pi, a, b, d1, d4), echo, rr};
            }
            uint32_t s = opt.s;
            if (s == 0) {
                if (!opt.seed) throw ParseError("thm-p3-any needs --s (or --seed)");
                const auto u = compute_index_set_u(m);
                std::vector<uint32_t> members(u.members.begin(), u.members.end());
                s = members[draw(need_rng(), members.size())];
            }
            echo["s"] = s;
            echo["e"] = opt.e;
            return {build_thm_p3_any(pi, a, b, d1, s, opt.e), echo, rr};
        }
    }
    throw ParseError("unreachable variant");
}

ordered_json coherence_json(const CoherenceReport& rep) {
    ordered_json j;
    j["mu"] = round4(rep.mu);
    j["peak_abs"] = round4(rep.peak_abs);
    j["method"] = rep.method;
    if (rep.method == "rank-formula") j["r_min"] = rep.rank_min;
    j["worst_pair"] = {{"block_i", rep.worst.block_i},
                       {"col_i", rep.worst.col_i},
                       {"block_j", rep.worst.block_j},
                       {"col_j", rep.worst.col_j}};
    return j;
}

// Full analysis of a generated family: rank table, coherence both ways,
// PAPR, verification toggles.
ordered_json analyze(const MatrixFamily& family, const SpreadingMatrix& phi,
                     uint32_t oversample, bool brute_force, bool verify_properties,
                     uint64_t budget) {
    ordered_json rep;
    const uint64_t mlen = phi.seq_len();
    rep["N"] = phi.num_columns();
    rep["M"] = mlen;
    rep["q"] = phi.q();
    rep["overloading_factor"] = overloading_factor(phi.num_columns(), mlen);

    const auto table = pairwise_rank_table(family);
    rep["pairwise_ranks"] = table;
    const auto by_rank = coherence_by_rank(family);
    rep["coherence_rank_formula"] = coherence_json(by_rank);
    rep["r_min"] = by_rank.rank_min;

    std::optional<CoherenceReport> brute;
    if (brute_force) {
        brute = coherence_bruteforce(phi);
        rep["coherence_brute_force"] = coherence_json(*brute);
        // the two routes must agree exactly in squared form on the base
        // alphabet; the lifted alphabet may exceed the rank figure
        if (phi.h == 1) {
            const PhaseSequence c1 = phi.column(brute->worst.block_i, brute->worst.col_i);
            const PhaseSequence c2 = phi.column(brute->worst.block_j, brute->worst.col_j);
            const uint64_t target =
                *checked_pow(phi.p.value(), 2 * phi.m - by_rank.rank_min);
            rep["coherence_methods_agree"] =
                abs_squared_equals(inner_product_exact(c1, c2), target);
        }
    }

    const auto papr = papr_set(phi, oversample);
    rep["papr"] = {{"set_nyquist", round4(papr.set_nyquist)},
                   {"set_estimate", round4(papr.set_estimate)},
                   {"oversample", papr.oversample},
                   {"bound", phi.p.value()}};
    {
        ordered_json blocks = ordered_json::array();
        for (size_t b = 0; b < papr.block_estimate.size(); ++b)
            blocks.push_back({{"nyquist", round4(papr.block_nyquist[b])},
                              {"estimate", round4(papr.block_estimate[b])}});
        rep["papr"]["per_block"] = std::move(blocks);
    }

    if (verify_properties) {
        const PhiDocument doc = document_from(phi, budget);
        bool orth = true;
        for (size_t b = 0; b < phi.blocks.size() && orth; ++b)
            for (uint64_t c1 = 0; c1 < mlen && orth; ++c1)
                for (uint64_t c2 = c1 + 1; c2 < mlen; ++c2)
                    if (!is_zero_sum(inner_product_exact(doc.columns[b * mlen + c1],
                                                         doc.columns[b * mlen + c2]))) {
                        orth = false;
                        break;
                    }
        rep["verification"]["orthogonality"] = orth;
        bool cs_ok = true;
        for (size_t b = 0; b < phi.blocks.size() && cs_ok; ++b) {
            const auto fam =
                cs_family_qary(phi.blocks[b], LinearFormQ(0, phi.p, phi.m, phi.h));
            std::vector<PhaseSequence> seqs;
            for (const auto& f : fam) seqs.push_back(sequence_of(f));
            cs_ok = cs_check(seqs);
        }
        rep["verification"]["complementary_sets"] = cs_ok;
    }
    return rep;
}

int run(int argc, char** argv) {
    CLI::App app{"spreading sequence sets from quadratic functions over F_p"};
    app.require_subcommand(1);

    GenOptions gen_opt;
    uint32_t oversample = 128;
    std::string out_path, format = "json", complex_path, in_path;
    bool brute = false, no_verify = false, unit_energy = false;

    CLI::App* generate = app.add_subcommand("generate", "build a set, analyze and export it");
    add_generation_flags(generate, gen_opt);
    generate->add_option("--oversample", oversample, "grid factor for the PAPR sweep");
    generate->add_option("--out", out_path, "phase matrix output path");
    generate->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    generate->add_option("--complex-out", complex_path, "also write complex values (CSV)");
    generate->add_flag("--normalize", unit_energy,
                       "scale complex values by 1/sqrt(M) (unit-energy columns)");
    generate->add_flag("--brute-force", brute, "run the exact coherence sweep as well");
    generate->add_flag("--no-verify", no_verify, "skip orthogonality/CS verification");

    GenOptions papr_opt;
    uint32_t papr_oversample = 128;
    std::string papr_in;
    CLI::App* papr_cmd = app.add_subcommand("papr", "PAPR of a generated or loaded set");
    add_generation_flags(papr_cmd, papr_opt);
    papr_cmd->get_option("--variant")->required(false);
    papr_cmd->get_option("--p")->required(false);
    papr_cmd->get_option("--m")->required(false);
    papr_cmd->add_option("--in", papr_in, "verify a previously exported file instead");
    papr_cmd->add_option("--oversample", papr_oversample, "grid factor");

    GenOptions coh_opt;
    bool coh_brute = false;
    std::string coh_in;
    CLI::App* coh_cmd = app.add_subcommand("coherence", "coherence of a generated or loaded set");
    add_generation_flags(coh_cmd, coh_opt);
    coh_cmd->get_option("--variant")->required(false);
    coh_cmd->get_option("--p")->required(false);
    coh_cmd->get_option("--m")->required(false);
    coh_cmd->add_option("--in", coh_in, "load a previously exported file instead");
    coh_cmd->add_flag("--brute-force", coh_brute, "exact sweep over all column pairs");

    std::string verify_in;
    uint32_t verify_oversample = 128;
    CLI::App* verify = app.add_subcommand("verify", "check an exported phase matrix");
    verify->add_option("file", verify_in, "path to a .json or .csv export")->required();
    verify->add_option("--oversample", verify_oversample, "grid factor for the PAPR sweep");

    std::string table_p = "3", table_m = "4";
    CLI::App* table = app.add_subcommand("table", "parameter table for the constructions");
    table->add_option("--p", table_p, "comma-separated list of primes");
    table->add_option("--m", table_m, "comma-separated list of m values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    if (generate->parsed()) {
        const auto t0 = std::chrono::steady_clock::now();
        BuiltFamily built = build_family(gen_opt);
        const SpreadingMatrix phi = lift_family_q(built.family, gen_opt.h);
        const uint64_t budget = memory_budget();

        ordered_json report;
        report["construction"] = built.echo;
        if (gen_opt.seed) report["rejections"] = built.random.rejections;
        report["analysis"] =
            analyze(built.family, phi, oversample, brute, !no_verify, budget);

        if (!out_path.empty()) {
            PhiDocument doc = document_from(phi, budget);
            doc.construction = built.echo.dump();
            if (unit_energy) doc.normalization = "unit-energy";
            if (format == "json")
                write_phi_json(doc, out_path);
            else
                write_phi_csv(doc, out_path);
            report["outputs"]["phases"] = out_path;
            if (!complex_path.empty()) {
                write_complex_csv(doc, complex_path);
                report["outputs"]["complex"] = complex_path;
            }
        }
        std::cout << report.dump(1) << "\n";
        const auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);
        std::cerr << "elapsed: " << dt.count() << " s\n";
        return kExitOk;
    }

    if (papr_cmd->parsed()) {
        ordered_json report;
        if (!papr_in.empty()) {
            const PhiDocument doc = load_phi(papr_in);
            double est = 0.0, nyq = 0.0;
            for (const auto& col : doc.columns) {
                est = std::max(est, papr_estimate(col, papr_oversample));
                nyq = std::max(nyq, papr_nyquist(col));
            }
            report["papr"] = {{"set_nyquist", round4(nyq)},
                              {"set_estimate", round4(est)},
                              {"oversample", papr_oversample}};
        } else {
            BuiltFamily built = build_family(papr_opt);
            const SpreadingMatrix phi = lift_family_q(built.family, papr_opt.h);
            const auto papr = papr_set(phi, papr_oversample);
            report["construction"] = built.echo;
            report["papr"] = {{"set_nyquist", round4(papr.set_nyquist)},
                              {"set_estimate", round4(papr.set_estimate)},
                              {"oversample", papr.oversample},
                              {"bound", papr_opt.p}};
        }
        std::cout << report.dump(1) << "\n";
        return kExitOk;
    }

    if (coh_cmd->parsed()) {
        ordered_json report;
        if (!coh_in.empty()) {
            const PhiDocument doc = load_phi(coh_in);
            report["coherence_brute_force"] = coherence_json(coherence_naive(doc.columns));
        } else {
            BuiltFamily built = build_family(coh_opt);
            report["construction"] = built.echo;
            report["pairwise_ranks"] = pairwise_rank_table(built.family);
            report["coherence_rank_formula"] = coherence_json(coherence_by_rank(built.family));
            if (coh_brute) {
                const SpreadingMatrix phi = lift_family_q(built.family, coh_opt.h);
                report["coherence_brute_force"] = coherence_json(coherence_bruteforce(phi));
            }
        }
        std::cout << report.dump(1) << "\n";
        return kExitOk;
    }

    if (verify->parsed()) {
        const PhiDocument doc = load_phi(verify_in);
        const VerificationReport rep = verify_phi(doc, verify_oversample);
        ordered_json report;
        report["file"] = verify_in;
        report["orthogonality"] = rep.orthogonality_ok;
        if (!rep.orthogonality_ok)
            report["first_violation"] = {{"block", rep.bad_block},
                                         {"col_a", rep.bad_c1},
                                         {"col_b", rep.bad_c2}};
        report["complementary_sets"] =
            rep.cs_checked ? ordered_json(rep.cs_ok) : ordered_json("not-checked");
        if (rep.cs_checked && !rep.cs_ok)
            report["first_cs_violation"] = {{"block", rep.cs_bad_block},
                                            {"col", rep.cs_bad_column}};
        report["coherence_brute_force"] = coherence_json(rep.coherence);
        report["papr"] = {{"set_nyquist", round4(rep.papr_set_nyquist)},
                          {"set_estimate", round4(rep.papr_set_estimate)},
                          {"oversample", rep.oversample}};
        report["passed"] = rep.passed();
        std::cout << report.dump(1) << "\n";
        if (!rep.passed()) {
            std::cerr << "verification failed";
            if (!rep.orthogonality_ok)
                std::cerr << ": block " << rep.bad_block << " columns " << rep.bad_c1 << " and "
                          << rep.bad_c2 << " are not orthogonal";
            std::cerr << "\n";
            return kExitCondition;
        }
        return kExitOk;
    }

    if (table->parsed()) {
        const auto ps = parse_byte_vector(table_p, "--p");
        const auto ms = parse_byte_vector(table_m, "--m");
        std::cout << "variant       p   m  alphabet  coherence                overloading  papr\n";
        char line[160];
        for (const uint8_t pv : ps) {
            for (const uint8_t mv : ms) {
                const double root_m = std::pow(double(pv), -0.5 * double(mv));
                const auto row = [&](const char* name, const char* muform, double muval,
                                     uint32_t over) {
                    std::snprintf(line, sizeof line,
                                  "%-12s %3u %3u  %-8u  %-10s = %-10.4f  %-11u  <= %u\n", name,
                                  pv, mv, pv, muform, muval, over, pv);
                    std::cout << line;
                };
                row("thm-lp", "1/sqrt(M)", root_m, pv);
                row("thm-2p-diff", "sqrt(p/M)", root_m * std::sqrt(double(pv)), 2 * pv);
                row("thm-2p-shift", "sqrt(p/M)", root_m * std::sqrt(double(pv)), 2 * pv);
                if (pv == 3) {
                    if (mv % 2 == 0 && mv % 3 != 2 && mv >= 4)
                        row("thm-p3-even", "1/sqrt(M)", root_m, 6);
                    row("thm-p3-any", "1/sqrt(M)", root_m, 6);
                }
            }
        }
        return kExitOk;
    }

    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const ConditionViolation& e) {
        std::cerr << e.what() << "\n";
        return kExitCondition;
    } catch (const ValueError& e) {
        std::cerr << "condition violated: " << e.what() << "\n";
        return kExitCondition;
    } catch (const InsufficientFamilyError& e) {
        std::cerr << "condition violated: " << e.what() << "\n";
        return kExitCondition;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

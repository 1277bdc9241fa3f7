// quantum.hpp
//
// Parameter-level mapping from certified Hermitian self-orthogonal MDS
// codes over GF(q^2) to q-ary quantum MDS parameters [[n, n-2k, k+1]]_q,
// plus the catalog of every parameter tuple the construction families
// reach for a given q. No stabilizer generators are produced; rows link
// to on-disk code files through their verification reports.

#ifndef GRSHERMES_QUANTUM_HPP
#define GRSHERMES_QUANTUM_HPP

#include <filesystem>
#include <fstream>

#include "grshermes/verify.hpp"

namespace grshermes {

struct QuantumParams {
    std::uint64_t q = 0;
    std::size_t n = 0;
    long long kq = 0;     // n - 2k
    std::size_t d = 0;    // k + 1
    std::string source;
    bool certified = false;
    bool sampled_mds = false;  // certificate rests on sampled column ranks
};

/// [[n, n-2k, k+1]]_q from a code and its verification report. Never
/// refuses: uncertified inputs just come back with certified = false. The
/// report must belong to the code (content hash match).
inline QuantumParams derive_quantum(const GrsCode& code, const VerifyReport& report,
                                    std::string source = {}) {
    if (report.code_id != code_content_hash(code))
        throw std::invalid_argument("derive_quantum: report does not belong to this code");
    QuantumParams p;
    p.q = code.tower->q();
    p.n = code.length();
    p.kq = static_cast<long long>(p.n) - 2 * static_cast<long long>(code.k);
    p.d = code.k + 1;
    p.source = std::move(source);
    p.sampled_mds = report.mds == MdsOutcome::sampled_pass;
    p.certified = report.hermitian &&
                  (report.mds == MdsOutcome::pass || report.mds == MdsOutcome::sampled_pass);
    return p;
}

/// Quantum Singleton bound met with equality: kq = n - 2d + 2.
inline bool singleton_check(const QuantumParams& p) {
    return p.kq == static_cast<long long>(p.n) - 2 * static_cast<long long>(p.d) + 2;
}

struct CatalogRow {
    std::uint64_t q = 0;
    std::size_t n = 0;
    long long kq = 0;
    std::size_t d = 0;
    std::string family;
    std::uint64_t r = 0;  // 0 when not an r_family row
    std::size_t k = 0;
    bool certified = false;
    std::string mds_mode;   // report method when certified
    std::string code_file;  // path of the certificate's code file
};

/// Every admissible (family, r, k) tuple for one q, in deterministic
/// order: the q^2+1 family for k <= q, each r-family (r < q+1 with
/// q+1 = r (mod 2r)) for k <= (q-1+r)/2, and the q^2 family for
/// k <= q-1. r = q+1 formally satisfies the r-family congruence but is
/// the q^2 family in disguise, which is where those rows live.
inline std::vector<CatalogRow> catalog_rows(std::uint64_t q) {
    factor_prime_power(q);  // validates; throws otherwise
    std::vector<CatalogRow> rows;
    const auto push = [&](std::string family, std::uint64_t r, std::size_t n, std::size_t k) {
        CatalogRow row;
        row.q = q;
        row.n = n;
        row.k = k;
        row.kq = static_cast<long long>(n) - 2 * static_cast<long long>(k);
        row.d = k + 1;
        row.family = std::move(family);
        row.r = r;
        rows.push_back(std::move(row));
    };
    for (std::size_t k = 1; k <= q; ++k) push("q2plus1", 0, q * q + 1, k);
    for (std::uint64_t r = 1; r <= q; ++r) {
        if ((q + 1) % (2 * r) != r) continue;
        for (std::size_t k = 1; k <= (q - 1 + r) / 2; ++k) push("r_family", r, r * (q - 1) + 1, k);
    }
    for (std::size_t k = 1; k + 1 <= q; ++k) push("q2", 0, q * q, k);
    return rows;
}

/// Marks rows whose construction exists on disk: a code file in dir whose
/// (q, n, k, infinity flag) matches the row and whose sibling
/// <stem>.report.json certifies hermitian pass and mds pass/sampled-pass
/// for exactly that file content.
inline void attach_certificates(std::vector<CatalogRow>& rows, const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) return;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const fs::path& path = entry.path();
        if (path.extension() != ".json") continue;
        const std::string name = path.filename().string();
        if (name.size() > 12 && name.ends_with(".report.json")) continue;
        if (name.starts_with("catalog")) continue;

        GrsCode code;
        VerifyReport report;
        try {
            std::ifstream in(path);
            code = code_from_json(nlohmann::json::parse(in));
            fs::path report_path = path;
            report_path.replace_extension(".report.json");
            std::ifstream rin(report_path);
            if (!rin) continue;
            report = report_from_json(nlohmann::json::parse(rin));
        } catch (const std::exception&) {
            continue;  // not a code file, or unreadable; skip
        }
        if (report.code_id != code_content_hash(code)) continue;
        if (!report.hermitian) continue;
        if (report.mds != MdsOutcome::pass && report.mds != MdsOutcome::sampled_pass) continue;

        for (CatalogRow& row : rows) {
            if (row.certified) continue;
            if (row.q != code.tower->q() || row.n != code.length() || row.k != code.k) continue;
            const bool wants_infinity = row.family == "q2plus1";
            if (code.eval.with_infinity != wants_infinity) continue;
            row.certified = true;
            row.mds_mode = report.method;
            row.code_file = path.filename().string();
        }
    }
}

inline nlohmann::json catalog_row_to_json(const CatalogRow& r) {
    return nlohmann::json{{"q", r.q},
                          {"n", r.n},
                          {"kq", r.kq},
                          {"d", r.d},
                          {"family", r.family},
                          {"r", r.r},
                          {"k", r.k},
                          {"certified", r.certified},
                          {"mds_mode", r.mds_mode},
                          {"code_file", r.code_file}};
}

inline std::string catalog_csv_header() {
    return "q,n,kq,d,family,r,k,certified,mds_mode,code_file";
}

inline std::string catalog_row_to_csv(const CatalogRow& r) {
    std::string line;
    line += std::to_string(r.q) + ',' + std::to_string(r.n) + ',' + std::to_string(r.kq) + ',';
    line += std::to_string(r.d) + ',' + r.family + ',' + std::to_string(r.r) + ',';
    line += std::to_string(r.k) + ',' + (r.certified ? "true" : "false") + ',';
    line += r.mds_mode + ',' + r.code_file;
    return line;
}

}  // namespace grshermes

#endif  // GRSHERMES_QUANTUM_HPP

// verify.hpp
//
// Independent brute-force and combinatorial oracles. Minimum distance by
// full message enumeration (guard q^(2k) <= 2^24), MDS by k-column rank
// checks (exhaustive when C(n,k) <= 10^7, otherwise seeded sampling), and
// the orchestrating verify_all that fills a VerifyReport.
//
// Worker parallelism is capped by the GRS_HERMES_THREADS environment
// variable (0 or unset = auto); results never depend on the partitioning.

#ifndef GRSHERMES_VERIFY_HPP
#define GRSHERMES_VERIFY_HPP

#include <chrono>
#include <cstdlib>
#include <optional>
#include <random>
#include <thread>

#include "grshermes/serialization.hpp"

namespace grshermes {

inline unsigned resolve_threads(unsigned requested = 0) {
    unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("GRS_HERMES_THREADS")) {
        const unsigned long cap = std::strtoul(env, nullptr, 10);
        if (cap > 0) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return std::max(1u, n);
}

/// C(n, k) saturated at limit+1 so guard comparisons cannot overflow.
inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k,
                                     std::uint64_t limit = UINT64_MAX / 2) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (c > limit) return limit + 1;
        c = c * (n - k + i) / i;
    }
    return std::min(c, limit + 1);
}

namespace detail {

// Minimum nonzero codeword weight over every message whose leading
// coefficient index is >= depth, given the partial combination in buf.
inline void min_weight_dfs(const FieldTower& f, const Matrix& gen, std::size_t depth,
                           std::vector<std::vector<Felt>>& buf, unsigned& best) {
    const std::size_t n = gen.cols;
    if (depth == gen.rows) {
        unsigned w = 0;
        for (Felt x : buf[depth]) w += x != 0;
        if (w != 0 && w < best) best = w;
        return;
    }
    for (Felt s = 0; s < f.q_squared(); ++s) {
        if (s == 0) {
            buf[depth + 1] = buf[depth];
        } else {
            for (std::size_t j = 0; j < n; ++j)
                buf[depth + 1][j] = f.add(buf[depth][j], f.mul(s, gen.at(depth, j)));
        }
        min_weight_dfs(f, gen, depth + 1, buf, best);
    }
}

}  // namespace detail

/// Exact minimum distance by enumerating all q^(2k) - 1 nonzero messages.
/// Throws GuardExceeded when q^(2k) > 2^24; fall back to
/// mds_by_column_rank in that case.
inline unsigned min_distance_enumerate(const GrsCode& code, unsigned threads = 0) {
    if (code.k < 1) throw std::invalid_argument("min distance: k must be >= 1");
    const FieldTower& f = *code.tower;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < code.k; ++i) {
        total *= f.q_squared();
        if (total > (1u << 24))
            throw GuardExceeded("min distance enumeration: q^(2k) exceeds the 2^24 guard");
    }

    const std::size_t n = code.gen.cols;
    const unsigned nthreads =
        static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), f.q_squared()));

    // Partition on the first message symbol; min-combining makes the
    // result independent of the partition.
    std::vector<unsigned> best(nthreads, UINT32_MAX);
    auto work = [&](unsigned t) {
        std::vector<std::vector<Felt>> buf(code.k + 1, std::vector<Felt>(n, 0));
        for (Felt s = t; s < f.q_squared(); s += nthreads) {
            for (std::size_t j = 0; j < n; ++j)
                buf[1][j] = f.mul(s, code.gen.at(0, j));
            detail::min_weight_dfs(f, code.gen, 1, buf, best[t]);
        }
    };
    if (nthreads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    unsigned d = UINT32_MAX;
    for (unsigned b : best) d = std::min(d, b);
    return d;
}

enum class MdsOutcome { pass, fail, sampled_pass, not_computed };

inline std::string mds_outcome_name(MdsOutcome o) {
    switch (o) {
        case MdsOutcome::pass: return "pass";
        case MdsOutcome::fail: return "fail";
        case MdsOutcome::sampled_pass: return "sampled-pass";
        default: return "not computed";
    }
}

struct MdsMode {
    enum class Kind { exhaustive, sampled } kind = Kind::exhaustive;
    std::uint64_t sample_count = 10000;
    std::uint64_t seed = 0;
};

/// d = n-k+1 iff every k columns of the generator are independent.
/// Exhaustive mode proves or refutes that (guard C(n,k) <= 10^7); sampled
/// mode checks seeded pseudorandom subsets and can only report
/// sampled-pass, never pass.
inline MdsOutcome mds_by_column_rank(const GrsCode& code, const MdsMode& mode,
                                     unsigned threads = 0) {
    const FieldTower& f = *code.tower;
    const std::size_t n = code.gen.cols, k = code.k;
    if (k == 0 || k > n) throw std::invalid_argument("mds check: dimension out of range");

    if (mode.kind == MdsMode::Kind::exhaustive) {
        if (binomial_capped(n, k, 10000000) > 10000000)
            throw GuardExceeded("mds check: C(n,k) exceeds the 10^7 guard; use sampled mode");
        const auto next_combination = [n, k](std::vector<std::size_t>& c) {
            std::size_t i = k;
            while (i-- > 0)
                if (c[i] != i + n - k) {
                    ++c[i];
                    for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
                    return true;
                }
            return false;
        };
        std::vector<std::size_t> cols(k);
        for (std::size_t i = 0; i < k; ++i) cols[i] = i;
        do {
            if (!columns_full_rank(f, code.gen, cols)) return MdsOutcome::fail;
        } while (next_combination(cols));
        return MdsOutcome::pass;
    }

    // Sampled: draw all subsets up front with the seeded generator, then
    // check them (chunked across workers; any failure fails).
    std::mt19937_64 rng(mode.seed);
    std::vector<std::vector<std::size_t>> subsets(mode.sample_count);
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (auto& sub : subsets) {
        for (std::size_t i = 0; i < k; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, n - 1);
            std::swap(idx[i], idx[pick(rng)]);
        }
        sub.assign(idx.begin(), idx.begin() + k);
        std::sort(sub.begin(), sub.end());
    }

    const unsigned nthreads = resolve_threads(threads);
    std::vector<char> ok(nthreads, 1);
    auto work = [&](unsigned t) {
        for (std::size_t s = t; s < subsets.size(); s += nthreads)
            if (!columns_full_rank(f, code.gen, subsets[s])) {
                ok[t] = 0;
                return;
            }
    };
    if (nthreads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    for (char o : ok)
        if (!o) return MdsOutcome::fail;
    return MdsOutcome::sampled_pass;
}

struct VerifyBudget {
    enum class Distance { automatic, exhaustive, sampled, none } distance = Distance::automatic;
    std::uint64_t sample_count = 10000;
    std::uint64_t seed = 0;
    unsigned threads = 0;
};

struct VerifyReport {
    std::string code_id;
    std::optional<unsigned> min_distance;  // enumeration only
    MdsOutcome mds = MdsOutcome::not_computed;
    bool hermitian = false;
    bool rational_dual = false;
    std::string method = "none";  // enumeration | column-rank | sampled | none
    std::uint64_t sample_count = 0;
    std::uint64_t seed = 0;
    double elapsed = 0.0;

    bool all_pass() const {
        return hermitian && rational_dual &&
               (mds == MdsOutcome::pass || mds == MdsOutcome::sampled_pass);
    }
};

inline nlohmann::json report_to_json(const VerifyReport& r) {
    nlohmann::json j{{"code_id", r.code_id},
                     {"mds", mds_outcome_name(r.mds)},
                     {"hermitian", r.hermitian ? "pass" : "fail"},
                     {"rational_dual", r.rational_dual ? "pass" : "fail"},
                     {"method", r.method},
                     {"sample_count", r.sample_count},
                     {"seed", r.seed},
                     {"elapsed", r.elapsed}};
    if (r.min_distance)
        j["min_distance"] = *r.min_distance;
    else
        j["min_distance"] = "not computed";
    return j;
}

inline VerifyReport report_from_json(const nlohmann::json& j) {
    VerifyReport r;
    r.code_id = j.at("code_id").get<std::string>();
    if (j.at("min_distance").is_number())
        r.min_distance = j.at("min_distance").get<unsigned>();
    const std::string mds = j.at("mds").get<std::string>();
    r.mds = mds == "pass"           ? MdsOutcome::pass
            : mds == "fail"         ? MdsOutcome::fail
            : mds == "sampled-pass" ? MdsOutcome::sampled_pass
                                    : MdsOutcome::not_computed;
    r.hermitian = j.at("hermitian").get<std::string>() == "pass";
    r.rational_dual = j.at("rational_dual").get<std::string>() == "pass";
    r.method = j.at("method").get<std::string>();
    r.sample_count = j.at("sample_count").get<std::uint64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.elapsed = j.at("elapsed").get<double>();
    return r;
}

/// The Lemma 3.1 witness check on the stored scaling vector: the
/// evaluation set's dual is rational and v^(q+1) is a scaling of it.
inline bool rational_dual_check(const GrsCode& code) {
    const FieldTower& f = *code.tower;
    const DualVector dual = solve_dual(code.eval);
    if (!dual.rational) return false;
    const Felt mu = f.div(f.norm_to_base(code.v.front()), dual.c.front());
    for (std::size_t i = 0; i < code.v.size(); ++i)
        if (f.norm_to_base(code.v[i]) != f.mul(mu, dual.c[i])) return false;
    return true;
}

/// Runs the rationality check, the direct Hermitian check, and the
/// strongest affordable distance oracle allowed by the budget. Failures
/// are report entries, not exceptions; only an explicitly requested
/// exhaustive mode propagates its guard.
inline VerifyReport verify_all(const GrsCode& code, const VerifyBudget& budget = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyReport r;
    r.code_id = code_content_hash(code);
    r.seed = budget.seed;

    GrsCode scratch = code;  // hermitian check updates the checks record
    r.hermitian = is_hermitian_self_orthogonal(scratch);
    r.rational_dual = rational_dual_check(code);

    const std::size_t n = code.length();
    const auto run_enumeration = [&] {
        const unsigned d = min_distance_enumerate(code, budget.threads);
        r.min_distance = d;
        r.mds = d == n - code.k + 1 ? MdsOutcome::pass : MdsOutcome::fail;
        r.method = "enumeration";
    };
    const auto run_exhaustive = [&] {
        r.mds = mds_by_column_rank(code, {MdsMode::Kind::exhaustive, 0, 0}, budget.threads);
        r.method = "column-rank";
    };
    const auto run_sampled = [&] {
        r.mds = mds_by_column_rank(
            code, {MdsMode::Kind::sampled, budget.sample_count, budget.seed}, budget.threads);
        r.method = "sampled";
        r.sample_count = budget.sample_count;
    };

    switch (budget.distance) {
        case VerifyBudget::Distance::automatic: {
            if (code.k == 0) break;  // zero code: no distance to certify
            std::uint64_t msgs = 1;
            bool enum_ok = true;
            for (std::size_t i = 0; i < code.k && enum_ok; ++i) {
                msgs *= code.tower->q_squared();
                enum_ok = msgs <= (1u << 24);
            }
            if (enum_ok)
                run_enumeration();
            else if (binomial_capped(n, code.k, 10000000) <= 10000000)
                run_exhaustive();
            else
                run_sampled();
            break;
        }
        case VerifyBudget::Distance::exhaustive:
            run_exhaustive();
            break;
        case VerifyBudget::Distance::sampled:
            run_sampled();
            break;
        case VerifyBudget::Distance::none:
            break;
    }

    r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace grshermes

#endif  // GRSHERMES_VERIFY_HPP

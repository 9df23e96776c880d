#include "solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>

#include "error.hpp"
#include "rng.hpp"

namespace qqsim {

std::string to_string(SolveMethod method) {
    return method == SolveMethod::Exhaustive ? "exhaustive" : "local-search";
}

ReducedCoefficients reduce_for_q(const ObjectiveFunction& f, std::span<const int> q) {
    if (q.size() != f.generator_count)
        raise(ErrorCode::Dimension, "q has " + std::to_string(q.size()) + " entries, expected " +
                                        std::to_string(f.generator_count));
    ReducedCoefficients rc;
    rc.h0 = f.constant;
    rc.a.assign(f.clique_count, 0.0);
    for (const auto& row : f.rows) {
        int parity = +1;
        for (std::size_t j : row.generator_indices) parity *= q[j];
        rc.h0 += row.coefficient * parity;
        for (std::size_t i = 0; i < row.clique_coefficients.size(); ++i)
            rc.a[i] += row.clique_coefficients[i] * parity;
    }
    double sum = 0.0;
    for (double value : rc.a) sum += value * value;
    rc.norm = std::sqrt(sum);
    if (rc.norm > 0.0) {
        rc.unit.resize(rc.a.size());
        for (std::size_t i = 0; i < rc.a.size(); ++i) rc.unit[i] = rc.a[i] / rc.norm;
    }
    return rc;
}

InnerMinimum inner_minimize(const ReducedCoefficients& rc) {
    InnerMinimum out;
    if (rc.a.empty()) {
        out.energy = rc.h0;
        return out;
    }
    if (rc.norm == 0.0) {
        out.r.assign(rc.a.size(), 0.0);
        out.r[0] = 1.0;
        out.energy = rc.h0;
        return out;
    }
    out.r.resize(rc.unit.size());
    for (std::size_t i = 0; i < rc.unit.size(); ++i) out.r[i] = -rc.unit[i];
    out.energy = rc.h0 - rc.norm;
    return out;
}

bool verify_witness(const ObjectiveFunction& f, const EpistemicState& s, double threshold) {
    return evaluate_objective(f, s) < threshold;
}

// ------------------------------- ground search -------------------------------

namespace {

// +1 sorts before -1, matching the documented tie-break.
bool q_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

struct Candidate {
    bool valid = false;
    double energy = 0.0;
    std::vector<int> q;
    std::vector<double> r;
    std::uint64_t evaluations = 0;
};

void consider(Candidate& best, const ObjectiveFunction& f, const std::vector<int>& q) {
    auto inner = inner_minimize(reduce_for_q(f, q));
    if (!best.valid || inner.energy < best.energy ||
        (inner.energy == best.energy && q_lex_less(q, best.q))) {
        best.valid = true;
        best.energy = inner.energy;
        best.q = q;
        best.r = std::move(inner.r);
    }
}

std::vector<int> q_from_gray(std::uint64_t gray, std::size_t width) {
    std::vector<int> q(width);
    for (std::size_t j = 0; j < width; ++j) q[j] = (gray >> j) & 1u ? -1 : +1;
    return q;
}

// Walk one contiguous block of the Gray-code order, keeping the per-row
// parities incrementally and re-evaluating candidates from scratch so the
// merged result does not depend on the segmentation. The accumulators are
// rebuilt periodically to stop float drift from accumulating over long walks.
Candidate scan_segment(const ObjectiveFunction& f, std::uint64_t begin, std::uint64_t end) {
    Candidate best;
    if (begin >= end) return best;
    const std::size_t width = f.generator_count;
    const std::size_t cliques = f.clique_count;

    std::vector<std::uint64_t> row_masks(f.rows.size(), 0);
    for (std::size_t r = 0; r < f.rows.size(); ++r)
        for (std::size_t j : f.rows[r].generator_indices)
            row_masks[r] |= std::uint64_t(1) << j;
    std::vector<std::vector<std::size_t>> rows_with_bit(width);
    for (std::size_t r = 0; r < f.rows.size(); ++r)
        for (std::size_t j = 0; j < width; ++j)
            if (row_masks[r] & (std::uint64_t(1) << j)) rows_with_bit[j].push_back(r);

    std::vector<int> row_parity(f.rows.size(), +1);
    std::vector<double> a(cliques, 0.0);
    double h0 = 0.0;
    std::uint64_t gray = begin ^ (begin >> 1);

    auto rebuild = [&]() {
        h0 = f.constant;
        std::fill(a.begin(), a.end(), 0.0);
        for (std::size_t r = 0; r < f.rows.size(); ++r) {
            row_parity[r] = std::popcount(gray & row_masks[r]) & 1 ? -1 : +1;
            h0 += f.rows[r].coefficient * row_parity[r];
            for (std::size_t i = 0; i < cliques; ++i)
                a[i] += f.rows[r].clique_coefficients[i] * row_parity[r];
        }
    };
    rebuild();

    constexpr std::uint64_t kRebuildInterval = 4096;
    for (std::uint64_t k = begin;; ++k) {
        double norm_sq = 0.0;
        for (double value : a) norm_sq += value * value;
        double energy = h0 - std::sqrt(norm_sq);
        ++best.evaluations;
        // Margin absorbs incremental rounding; candidates are re-derived
        // fresh inside consider().
        if (!best.valid || energy <= best.energy + 1e-8 * (1.0 + std::abs(best.energy)))
            consider(best, f, q_from_gray(gray, width));
        if (k + 1 >= end) break;
        unsigned flip = std::countr_zero(k + 1);
        gray ^= std::uint64_t(1) << flip;
        if ((k + 1 - begin) % kRebuildInterval == 0) {
            rebuild();
        } else {
            for (std::size_t r : rows_with_bit[flip]) {
                int old = row_parity[r];
                row_parity[r] = -old;
                h0 -= 2.0 * f.rows[r].coefficient * old;
                for (std::size_t i = 0; i < cliques; ++i)
                    a[i] -= 2.0 * f.rows[r].clique_coefficients[i] * old;
            }
        }
    }
    return best;
}

Candidate merge(Candidate a, Candidate b) {
    if (!a.valid) {
        b.evaluations += a.evaluations;
        return b;
    }
    if (!b.valid) {
        a.evaluations += b.evaluations;
        return a;
    }
    std::uint64_t evals = a.evaluations + b.evaluations;
    Candidate out = (b.energy < a.energy || (b.energy == a.energy && q_lex_less(b.q, a.q)))
                        ? std::move(b)
                        : std::move(a);
    out.evaluations = evals;
    return out;
}

Candidate exhaustive_search(const ObjectiveFunction& f, unsigned threads) {
    const std::size_t width = f.generator_count;
    const std::uint64_t total = std::uint64_t(1) << width;
    unsigned workers = std::max(1u, threads);
    if (workers > total) workers = unsigned(total);
    if (workers == 1) return scan_segment(f, 0, total);

    std::vector<Candidate> results(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::uint64_t chunk = total / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t begin = w * chunk;
        std::uint64_t end = w + 1 == workers ? total : begin + chunk;
        pool.emplace_back([&f, &results, w, begin, end] { results[w] = scan_segment(f, begin, end); });
    }
    for (auto& t : pool) t.join();
    Candidate best;
    for (auto& r : results) best = merge(std::move(best), std::move(r));
    return best;
}

Candidate local_search(const ObjectiveFunction& f, const SolveOptions& options) {
    const std::size_t width = f.generator_count;
    const std::size_t restarts = std::max<std::size_t>(1, options.restarts);

    auto run_restart = [&](std::size_t index) {
        Candidate best;
        Rng rng(options.seed ^ ((index + 1) * 0x9E3779B97F4A7C15ULL));
        std::vector<int> q(width);
        for (auto& value : q) value = rng.coin() ? +1 : -1;
        double current = inner_minimize(reduce_for_q(f, q)).energy;
        ++best.evaluations;
        for (;;) {
            std::size_t best_flip = width;
            double best_energy = current;
            for (std::size_t j = 0; j < width; ++j) {
                q[j] = -q[j];
                double e = inner_minimize(reduce_for_q(f, q)).energy;
                ++best.evaluations;
                q[j] = -q[j];
                if (e < best_energy) {
                    best_energy = e;
                    best_flip = j;
                }
            }
            if (best_flip == width) break;
            q[best_flip] = -q[best_flip];
            current = best_energy;
        }
        consider(best, f, q);
        return best;
    };

    unsigned workers = std::max(1u, options.threads);
    if (workers > restarts) workers = unsigned(restarts);
    std::vector<Candidate> results(restarts);
    if (workers == 1) {
        for (std::size_t i = 0; i < restarts; ++i) results[i] = run_restart(i);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < restarts; i += workers) results[i] = run_restart(i);
            });
        }
        for (auto& t : pool) t.join();
    }
    Candidate best;
    for (auto& r : results) best = merge(std::move(best), std::move(r));
    return best;
}

}  // namespace

GroundResult solve_ground(const ObjectiveFunction& f, const SolveOptions& options) {
    std::size_t threshold = std::min<std::size_t>(options.exhaustive_threshold, 62);
    bool exhaustive = f.generator_count <= threshold;
    Candidate best = exhaustive ? exhaustive_search(f, options.threads) : local_search(f, options);
    if (!best.valid) raise(ErrorCode::Internal, "ground search produced no candidate");

    auto witness = EpistemicState::make(std::move(best.q), std::move(best.r));
    GroundResult result{evaluate_objective(f, witness), std::move(witness),
                        exhaustive ? SolveMethod::Exhaustive : SolveMethod::LocalSearch,
                        best.evaluations};
    return result;
}

}  // namespace qqsim

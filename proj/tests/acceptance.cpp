// Acceptance suite: the seven gate criteria, one pass/fail line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "approx.hpp"
#include "generators.hpp"
#include "hamiltonian.hpp"
#include "model.hpp"
#include "oracle.hpp"
#include "solver.hpp"
#include "structure.hpp"
#include "support.hpp"

using namespace qqsim;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int number, bool passed, const std::string& description) {
    std::printf("[%s] criterion %d: %s\n", passed ? "PASS" : "FAIL", number, description.c_str());
    if (!passed) ++g_failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Pipeline {
    NoncontextualStructure structure;
    RConstruction construction;
    ObjectiveFunction objective;
};

Pipeline pipeline_of(const Hamiltonian& h) {
    Pipeline p;
    p.structure = build_structure(h.support());
    p.construction = build_R(p.structure, h);
    p.objective = compile_objective(h, p.construction);
    return p;
}

std::vector<double> random_unit(std::mt19937_64& rng, std::size_t n) {
    std::vector<double> r(n);
    if (n == 0) return r;
    double norm_sq = 0.0;
    while (norm_sq < 1e-8) {
        norm_sq = 0.0;
        for (auto& value : r) {
            double u1 = (double(rng() >> 11) + 0.5) * 0x1.0p-53;
            double u2 = double(rng() >> 11) * 0x1.0p-53;
            value = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
            norm_sq += value * value;
        }
    }
    double norm = std::sqrt(norm_sq);
    for (auto& value : r) value /= norm;
    return r;
}

// ---------------------------------------------------------------------------
// 1. Solver energies equal dense diagonalization on the four bundled
//    noncontextual sub-Hamiltonians to 1e-9, each solve+check under 1 s.

void criterion_1() {
    const char* names[] = {"heh+_noncon", "lih_hempel_noncon", "lih_kandala_noncon",
                           "beh2_noncon"};
    double worst_diff = 0.0, worst_time = 0.0;
    bool ok = true;
    for (const char* name : names) {
        auto start = Clock::now();
        auto h = testsupport::load_fixture(name);
        auto p = pipeline_of(h);
        auto result = solve_ground(p.objective);
        double reference = ground_energy(h);
        double elapsed = seconds_since(start);
        double diff = std::abs(result.energy - reference);
        worst_diff = std::max(worst_diff, diff);
        worst_time = std::max(worst_time, elapsed);
        if (diff > 1e-9 || elapsed >= 1.0) ok = false;
    }
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "model vs dense ground energies on 4 systems (max |diff| = %.2e <= 1e-9, "
                  "slowest %.3f s < 1 s)",
                  worst_diff, worst_time);
    report(1, ok, detail);
}

// ---------------------------------------------------------------------------
// 2. Greedy selection sizes and both error columns, within max(2%, 0.05)
//    units, in under 30 s total.

void criterion_2() {
    struct Row {
        const char* name;
        std::size_t full_size, noncon_size, r_size;
        double eps_noncon, eps_diag;
    };
    const Row rows[] = {
        {"heh+_full", 9, 5, 3, 0.21, 4.1},
        {"lih_hempel_full", 13, 9, 4, 0.56, 0.56},
        {"lih_kandala_full", 99, 23, 5, 4.2, 9.3},
        {"beh2_full", 164, 42, 7, 156.0, 266.0},
    };
    auto start = Clock::now();
    bool ok = true;
    std::string bad;
    for (const auto& row : rows) {
        auto report_out = approximation_report(testsupport::load_fixture(row.name));
        bool sizes = report_out.full_size == row.full_size &&
                     report_out.noncon_size == row.noncon_size &&
                     report_out.generator_set_size == row.r_size;
        double tol_noncon = std::max(0.02 * row.eps_noncon, 0.05);
        double tol_diag = std::max(0.02 * row.eps_diag, 0.05);
        bool eps = std::abs(report_out.eps_noncon - row.eps_noncon) <= tol_noncon &&
                   std::abs(report_out.eps_diag - row.eps_diag) <= tol_diag;
        if (!sizes || !eps) {
            ok = false;
            bad += std::string(" ") + row.name;
        }
    }
    double elapsed = seconds_since(start);
    if (elapsed >= 30.0) ok = false;
    char detail[200];
    std::snprintf(detail, sizeof(detail),
                  "greedy sizes (5,9,23,42), generator sets (3,4,5,7), and error columns on all "
                  "4 systems within max(2%%, 0.05) units%s (%.2f s < 30 s)",
                  bad.empty() ? "" : (" - FAILED:" + bad).c_str(), elapsed);
    report(2, ok, detail);
}

// ---------------------------------------------------------------------------
// 3. Witness reproduction for the 2-qubit and 3-qubit systems.

void criterion_3() {
    bool ok = true;

    auto heh = testsupport::load_fixture("heh+_noncon");
    auto p1 = pipeline_of(heh);
    auto r1 = solve_ground(p1.objective);
    // clique order (IZ, XX); published setting lists (XX, IZ)
    ok &= r1.witness.q().size() == 1 && r1.witness.q()[0] == +1;  // <ZZ> = +1
    ok &= r1.witness.r().size() == 2;
    ok &= std::abs(std::abs(r1.witness.r()[0]) - 0.9922982949760547) <= 1e-6;
    ok &= std::abs(std::abs(r1.witness.r()[1]) - 0.1238712791070418) <= 1e-6;

    auto lih = testsupport::load_fixture("lih_hempel_noncon");
    auto p2 = pipeline_of(lih);
    auto r2 = solve_ground(p2.objective);
    for (std::size_t j = 0; j < p2.construction.set.generators.size(); ++j) {
        auto label = p2.construction.set.generators[j].label();
        if (label == "IIZ") ok &= r2.witness.q()[j] == +1;
        if (label == "ZZI") ok &= r2.witness.q()[j] == -1;
    }
    ok &= r2.witness.r().size() == 2;
    // clique order (IZI, XXI); published magnitudes (0.999999999999, 1.29227e-7)
    ok &= std::abs(std::abs(r2.witness.r()[0]) - 0.999999999999) <= 1e-5;
    ok &= std::abs(std::abs(r2.witness.r()[1]) - 1.29227e-7) <= 1e-5;

    report(3, ok,
           "optimal witnesses match the published parameter settings (|r| to 1e-6 and 1e-5, "
           "generator signs exact)");
}

// ---------------------------------------------------------------------------
// 4. Joint-distribution round trip for 1000 random states.

void criterion_4() {
    std::mt19937_64 rng(20240314);
    bool ok = true;
    double worst = 0.0;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        std::size_t total = 1 + rng() % 10;  // N + |G| <= 10
        std::size_t cliques = rng() % (total + 1);
        std::size_t generators = total - cliques;
        std::vector<int> q(generators);
        for (auto& value : q) value = rng() % 2 ? +1 : -1;
        auto state = EpistemicState::make(q, random_unit(rng, cliques));
        auto table = joint_distribution(state);
        double sum = 0.0;
        for (double p : table.probabilities) {
            if (p < 0.0) ok = false;
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-12) ok = false;
        auto [q_est, r_est] = marginal_expectations(table);
        for (std::size_t j = 0; j < generators; ++j)
            worst = std::max(worst, std::abs(q_est[j] - state.q()[j]));
        for (std::size_t i = 0; i < cliques; ++i)
            worst = std::max(worst, std::abs(r_est[i] - state.r()[i]));
        if (worst > 1e-12) ok = false;
    }
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "1000 random states round-trip the joint distribution (max error %.2e <= "
                  "1e-12, all tables nonnegative and normalized)",
                  worst);
    report(4, ok, detail);
}

// ---------------------------------------------------------------------------
// 5. Solver equals dense diagonalization on 200 seeded random noncontextual
//    Hamiltonians; gapped instances saturate the representative-expectation
//    identity.

void criterion_5() {
    std::mt19937_64 rng(5);
    bool ok = true;
    double worst_energy = 0.0, worst_saturation = 0.0;
    int gapped = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + rng() % 4;  // up to 5 qubits
        std::size_t g = rng() % n;
        if (g > n - 1) g = n - 1;
        std::size_t max_cliques = 2 * (n - g) + 1;
        std::size_t cliques = rng() % (max_cliques + 1);
        if (cliques == 1) cliques = 2;
        auto h = random_noncontextual_instance(n, cliques, g, 150000 + trial);
        auto p = pipeline_of(h);
        auto result = solve_ground(p.objective);
        auto gs = ground_state(h);
        worst_energy = std::max(worst_energy, std::abs(result.energy - gs.energy));
        if (std::abs(result.energy - gs.energy) > 1e-9) ok = false;

        if (!p.construction.set.representatives.empty() && gs.gap > 1e-6) {
            double sum_sq = 0.0;
            for (const auto& rep : p.construction.set.representatives) {
                double value = state_expectation(gs.amplitudes, rep);
                sum_sq += value * value;
            }
            worst_saturation = std::max(worst_saturation, std::abs(sum_sq - 1.0));
            if (std::abs(sum_sq - 1.0) > 1e-6) ok = false;
            ++gapped;
        }
    }
    if (gapped < 20) ok = false;
    char detail[200];
    std::snprintf(detail, sizeof(detail),
                  "200 seeded random systems: solver vs dense energies (max |diff| = %.2e <= "
                  "1e-9); representative expectations on %d gapped instances sum to 1 (max "
                  "deviation %.2e <= 1e-6)",
                  worst_energy, gapped, worst_saturation);
    report(5, ok, detail);
}

// ---------------------------------------------------------------------------
// 6. Anticommuting families: unit combinations square to the identity, and
//    squared expectations never exceed 1.

void criterion_6() {
    std::mt19937_64 rng(6);
    bool ok = true;
    double worst_square = 0.0, worst_bound = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng() % 4;
        std::size_t count = 1 + rng() % (2 * n + 1);
        auto family = anticommuting_family(n, count);
        auto a = random_unit(rng, count);

        std::vector<PauliTerm> terms;
        for (std::size_t i = 0; i < count; ++i) terms.push_back(PauliTerm{family[i], a[i]});
        Hamiltonian combo(n, terms, 0.0, false);
        auto m = to_matrix(combo);
        auto square = testsupport::matmul(m.entries, m.entries, m.dim);
        double diff =
            testsupport::max_abs_diff(square, testsupport::identity_matrix(m.dim));
        worst_square = std::max(worst_square, diff);
        if (diff > 1e-10) ok = false;

        auto psi = testsupport::random_state(rng, m.dim);
        double sum_sq = 0.0;
        for (const auto& op : family) {
            double value = state_expectation(psi, op);
            sum_sq += value * value;
        }
        worst_bound = std::max(worst_bound, sum_sq);
        if (sum_sq > 1.0 + 1e-10) ok = false;
    }
    char detail[200];
    std::snprintf(detail, sizeof(detail),
                  "100 anticommuting families: (a.A)^2 = identity (max deviation %.2e <= 1e-10) "
                  "and sum <A_i>^2 <= 1 + 1e-10 on random states (max %.12f)",
                  worst_square, worst_bound);
    report(6, ok, detail);
}

// ---------------------------------------------------------------------------
// 7. Every term of every fixture and of 500 random instances reconstructs
//    exactly, sign included, from its decomposition.

void criterion_7() {
    bool ok = true;
    std::size_t terms_checked = 0;

    auto check_hamiltonian = [&](const Hamiltonian& h) {
        auto p = pipeline_of(h);
        for (std::size_t t = 0; t < h.terms().size(); ++t) {
            const auto& dec = p.construction.decompositions[t];
            Phase phase = Phase::one();
            PauliOp op = PauliOp::identity(h.num_qubits());
            for (std::size_t j : dec.generator_indices) {
                auto step = multiply(op, p.construction.set.generators[j]);
                phase = phase * step.phase;
                op = std::move(step.op);
            }
            if (dec.clique_index) {
                auto step = multiply(op, p.construction.set.representatives[*dec.clique_index]);
                phase = phase * step.phase;
                op = std::move(step.op);
            }
            bool exact = op == h.terms()[t].op && phase.is_real() &&
                         dec.sign * phase.sign() == +1;
            if (!exact) ok = false;
            ++terms_checked;
        }
    };

    for (const char* name : {"heh+_noncon", "lih_hempel_noncon", "lih_kandala_noncon",
                             "beh2_noncon"})
        check_hamiltonian(testsupport::load_fixture(name));

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = 2 + rng() % 7;
        std::size_t g = rng() % n;
        std::size_t max_cliques = 2 * (n - g) + 1;
        std::size_t cliques = rng() % (max_cliques + 1);
        check_hamiltonian(random_noncontextual_instance(n, cliques, g, 700000 + trial));
    }

    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "%zu terms across 4 fixtures and 500 random instances reconstruct exactly "
                  "(sign included) from their decompositions",
                  terms_checked);
    report(7, ok, detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    std::printf("ACCEPTANCE: %d/7 criteria passed\n", 7 - g_failures);
    return g_failures;
}

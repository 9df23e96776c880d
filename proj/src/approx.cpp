#include "approx.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "error.hpp"
#include "generators.hpp"
#include "model.hpp"
#include "structure.hpp"

namespace qqsim {

namespace {

// Decreasing |coefficient|, label order among equal magnitudes. Zero
// coefficients land last.
std::vector<std::size_t> greedy_order(const std::vector<PauliTerm>& terms) {
    std::vector<std::size_t> order(terms.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        double ma = std::abs(terms[a].coefficient);
        double mb = std::abs(terms[b].coefficient);
        if (ma != mb) return ma > mb;
        return terms[a].op < terms[b].op;
    });
    return order;
}

Hamiltonian subset_hamiltonian(const Hamiltonian& h, const std::vector<std::size_t>& keep) {
    std::vector<PauliTerm> terms;
    terms.reserve(keep.size());
    for (std::size_t i : keep) terms.push_back(h.terms()[i]);
    return Hamiltonian(h.num_qubits(), std::move(terms), h.identity_offset(),
                       h.has_identity_term());
}

}  // namespace

Hamiltonian greedy_noncontextual(const Hamiltonian& h, const GreedyOptions& options) {
    const auto& terms = h.terms();
    auto order = greedy_order(terms);
    std::vector<std::size_t> kept;
    std::vector<PauliOp> kept_ops;

    auto admissible = [&](const std::vector<std::size_t>& batch) {
        auto ops = kept_ops;
        for (std::size_t i : batch) ops.push_back(terms[i].op);
        return is_noncontextual(ops);
    };

    if (options.batch <= 1) {
        for (std::size_t i : order) {
            if (admissible({i})) {
                kept.push_back(i);
                kept_ops.push_back(terms[i].op);
            }
        }
    } else {
        // Each step adds the admissible batch of size <= k with the largest
        // total weight (ties: earlier greedy order). A term rejected alone
        // stays rejected forever - supersets of a contextual set are
        // contextual - so the step loop ends when no single term fits.
        std::vector<std::size_t> remaining = order;
        for (;;) {
            std::vector<std::size_t> singles;
            for (std::size_t i : remaining)
                if (admissible({i})) singles.push_back(i);
            if (singles.empty()) break;

            std::vector<std::size_t> best_batch;
            double best_weight = -1.0;
            std::vector<std::size_t> batch;
            auto search = [&](auto&& self, std::size_t from, double weight) -> void {
                if (!batch.empty() && weight > best_weight && admissible(batch)) {
                    best_weight = weight;
                    best_batch = batch;
                }
                if (batch.size() >= options.batch) return;
                for (std::size_t p = from; p < remaining.size(); ++p) {
                    batch.push_back(remaining[p]);
                    self(self, p + 1, weight + std::abs(terms[remaining[p]].coefficient));
                    batch.pop_back();
                }
            };
            if (remaining.size() > 24 && options.batch > 2)
                raise(ErrorCode::Limit,
                      "batch search over " + std::to_string(remaining.size()) +
                          " remaining terms is too large; reduce --batch");
            search(search, 0, 0.0);
            if (best_batch.empty()) break;
            for (std::size_t i : best_batch) {
                kept.push_back(i);
                kept_ops.push_back(terms[i].op);
                remaining.erase(std::find(remaining.begin(), remaining.end(), i));
            }
        }
        std::sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) {
            return std::find(order.begin(), order.end(), a) < std::find(order.begin(), order.end(), b);
        });
    }
    return subset_hamiltonian(h, kept);
}

Hamiltonian diagonal_subset(const Hamiltonian& h) {
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < h.terms().size(); ++i)
        if (h.terms()[i].op.is_diagonal()) kept.push_back(i);
    return subset_hamiltonian(h, kept);
}

GroundResult solve_noncontextual(const Hamiltonian& h, const SolveOptions& options) {
    auto structure = build_structure(h.support());
    auto construction = build_R(structure, h);
    auto objective = compile_objective(h, construction);
    return solve_ground(objective, options);
}

double diagonal_minimum(const Hamiltonian& h) {
    const std::size_t n = h.num_qubits();
    struct Mask {
        std::size_t z = 0;
        double coefficient = 0.0;
    };
    std::vector<Mask> masks;
    for (const auto& term : h.terms()) {
        if (!term.op.is_diagonal())
            raise(ErrorCode::InvalidArgument,
                  "diagonal minimum requested for non-diagonal term " + term.op.label());
        Mask m;
        m.coefficient = term.coefficient;
        for (std::size_t q = 0; q < n; ++q)
            if (term.op.z_bit(q)) m.z |= std::size_t(1) << (n - 1 - q);
        masks.push_back(m);
    }
    double best = h.identity_offset();
    bool first = true;
    for (std::size_t b = 0; b < (std::size_t(1) << n); ++b) {
        double value = h.identity_offset();
        for (const auto& m : masks)
            value += (std::popcount(b & m.z) & 1) ? -m.coefficient : m.coefficient;
        if (first || value < best) {
            best = value;
            first = false;
        }
    }
    return best;
}

Hamiltonian best_noncontextual_subset(const Hamiltonian& h, double full_ground,
                                      const SolveOptions& solve) {
    const auto& terms = h.terms();
    if (terms.size() > 16)
        raise(ErrorCode::Limit, "brute-force subset search is capped at 16 non-identity terms");
    std::vector<std::size_t> best_subset;
    double best_error = std::numeric_limits<double>::infinity();
    for (std::size_t mask = 0; mask < (std::size_t(1) << terms.size()); ++mask) {
        std::vector<std::size_t> subset;
        for (std::size_t i = 0; i < terms.size(); ++i)
            if (mask & (std::size_t(1) << i)) subset.push_back(i);
        std::vector<PauliOp> ops;
        for (std::size_t i : subset) ops.push_back(terms[i].op);
        if (!is_noncontextual(ops)) continue;
        auto sub = subset_hamiltonian(h, subset);
        double energy = solve_noncontextual(sub, solve).energy;
        double error = std::abs(energy - full_ground);
        bool better = error < best_error ||
                      (error == best_error && subset.size() > best_subset.size());
        if (better) {
            best_error = error;
            best_subset = std::move(subset);
        }
    }
    return subset_hamiltonian(h, best_subset);
}

ApproximationReport approximation_report(const Hamiltonian& h, const ReportOptions& options) {
    ApproximationReport report;
    report.full_ground = ground_energy(h, options.oracle_max_qubits);

    Hamiltonian noncon = options.brute_force
                             ? best_noncontextual_subset(h, report.full_ground, options.solve)
                             : greedy_noncontextual(h, GreedyOptions{options.batch});
    Hamiltonian diag = diagonal_subset(h);

    auto ground = solve_noncontextual(noncon, options.solve);
    report.noncon_ground = ground.energy;
    report.diag_ground = diagonal_minimum(diag);

    report.eps_noncon = std::abs(report.noncon_ground - report.full_ground) / options.chem_accuracy;
    report.eps_diag = std::abs(report.diag_ground - report.full_ground) / options.chem_accuracy;

    if (noncon.has_identity_term())
        report.kept_terms.push_back(PauliOp::identity(noncon.num_qubits()).label());
    for (const auto& term : noncon.terms()) report.kept_terms.push_back(term.op.label());

    report.full_size = h.term_count();
    report.noncon_size = noncon.term_count();
    auto structure = build_structure(noncon.support());
    auto construction = build_R(structure, noncon);
    report.generator_set_size = construction.set.size();
    report.kept = std::move(noncon);
    return report;
}

}  // namespace qqsim

#pragma once

#include <string>
#include <vector>

#include "hamiltonian.hpp"
#include "oracle.hpp"
#include "solver.hpp"

namespace qqsim {

struct GreedyOptions {
    /// Terms per step: 1 reproduces the one-by-one heuristic; larger values
    /// pick the heaviest admissible batch of up to this size each step.
    std::size_t batch = 1;
};

/// Keep terms in decreasing |coefficient| (ties: label order) while the kept
/// set stays noncontextual. The identity offset is always kept. Deterministic;
/// the output term order is the acceptance order.
Hamiltonian greedy_noncontextual(const Hamiltonian& h, const GreedyOptions& options = {});

/// Exactly the terms whose strings are products of I and Z, plus the offset.
Hamiltonian diagonal_subset(const Hamiltonian& h);

/// Exhaustive search over all sub-supports (capped at 16 non-identity terms)
/// for the noncontextual sub-Hamiltonian whose ground energy best matches the
/// full ground energy.
Hamiltonian best_noncontextual_subset(const Hamiltonian& h, double full_ground,
                                      const SolveOptions& solve = {});

struct ApproximationReport {
    double full_ground = 0.0;
    double noncon_ground = 0.0;
    double diag_ground = 0.0;
    double eps_noncon = 0.0;  // |noncon - full| / chem_accuracy
    double eps_diag = 0.0;    // |diag - full| / chem_accuracy
    std::vector<std::string> kept_terms;
    std::size_t full_size = 0;    // term counts include the identity when present
    std::size_t noncon_size = 0;
    std::size_t generator_set_size = 0;  // |R| of the kept sub-Hamiltonian
    Hamiltonian kept;                    // the noncontextual sub-Hamiltonian itself
};

struct ReportOptions {
    double chem_accuracy = 0.0016;
    std::size_t batch = 1;
    bool brute_force = false;
    std::size_t oracle_max_qubits = kDefaultOracleQubits;
    SolveOptions solve;
};

/// Full comparison pipeline: greedy (or brute-force) noncontextual subset
/// solved through the classical model, the diagonal-only baseline minimized
/// over computational-basis assignments, and the exact ground energy, with
/// both errors expressed in chemical-accuracy units.
ApproximationReport approximation_report(const Hamiltonian& h, const ReportOptions& options = {});

/// Ground energy of the noncontextual pipeline (structure -> generators ->
/// objective -> solver) for an already-noncontextual Hamiltonian.
GroundResult solve_noncontextual(const Hamiltonian& h, const SolveOptions& options = {});

/// Minimum of a diagonal Hamiltonian over all computational-basis states.
double diagonal_minimum(const Hamiltonian& h);

}  // namespace qqsim

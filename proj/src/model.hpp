#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "generators.hpp"
#include "hamiltonian.hpp"

namespace qqsim {

/// The classical variational parameter: definite +/-1 values q for the
/// commuting generators and a unit vector r of clique-representative
/// expectations. With no cliques, r is empty and the norm constraint is
/// vacuous. Construction rejects |r| off unit by more than 1e-6 and silently
/// renormalizes deviations between 1e-12 and 1e-6.
class EpistemicState {
public:
    static EpistemicState make(std::vector<int> q, std::vector<double> r);

    const std::vector<int>& q() const { return q_; }
    const std::vector<double>& r() const { return r_; }

private:
    EpistemicState(std::vector<int> q, std::vector<double> r)
        : q_(std::move(q)), r_(std::move(r)) {}
    std::vector<int> q_;
    std::vector<double> r_;
};

/// One aggregated row of the classical objective: all Hamiltonian terms whose
/// decomposition uses the same generator subset, split into the part without
/// a clique factor (coefficient) and the per-clique parts (clique_coefficients).
struct ObjectiveRow {
    std::vector<std::size_t> generator_indices;  // the shared subset, ascending
    double coefficient = 0.0;
    std::vector<double> clique_coefficients;  // length = clique count
};

/// <H> as a function over epistemic states:
///   constant + sum_rows (coefficient + clique_coefficients . r) * prod_{j} q_j.
struct ObjectiveFunction {
    double constant = 0.0;
    std::size_t generator_count = 0;
    std::size_t clique_count = 0;
    std::vector<ObjectiveRow> rows;  // sorted by generator subset, each subset once
};

/// Fold every term's signed decomposition into the aggregated objective.
/// Terms are accumulated in canonical label order so the float sums do not
/// depend on the input term order.
ObjectiveFunction compile_objective(const Hamiltonian& h, const RConstruction& construction);

/// Exact weighted evaluation of the objective at a state. Pure; this is the
/// single arithmetic path all reported energies go through.
double evaluate_objective(const ObjectiveFunction& f, const EpistemicState& s);

/// Expectation of a single decomposed term: sign * prod q_j * (r_i if the
/// term carries a clique factor). Always lies in [-1, 1].
double expectation_of_term(const TermDecomposition& dec, const EpistemicState& s);

/// The full joint distribution over ontic states (value assignments to the
/// generator set). Coordinate order is (clique values, generator values);
/// bit b of an index set means that coordinate takes the value -1.
struct OntologyTable {
    std::size_t clique_count = 0;
    std::size_t generator_count = 0;
    std::vector<double> probabilities;  // 2^(clique_count + generator_count) entries

    int coordinate_value(std::size_t index, std::size_t coordinate) const {
        return (index >> coordinate) & 1u ? -1 : +1;
    }
};

/// Materialize the table: delta factors pin the generator values to q, each
/// clique coordinate is independent with weight |c_i + r_i| / 2. Diagnostic
/// facility, exponential in the generator-set size; guarded at 24 coordinates.
OntologyTable joint_distribution(const EpistemicState& s);

/// Recover (q estimates, r estimates) from a normalized table by
/// marginalizing each coordinate and mapping p -> 2p - 1.
std::pair<std::vector<double>, std::vector<double>> marginal_expectations(const OntologyTable& t);

}  // namespace qqsim

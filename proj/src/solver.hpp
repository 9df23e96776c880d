#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "model.hpp"

namespace qqsim {

/// The objective at a fixed q, reduced to an affine function over the unit
/// sphere of clique expectations: h0 + a . r, with norm = |a| and unit = a/|a|
/// (empty when the norm vanishes).
struct ReducedCoefficients {
    double h0 = 0.0;
    std::vector<double> a;
    double norm = 0.0;
    std::vector<double> unit;
};

ReducedCoefficients reduce_for_q(const ObjectiveFunction& f, std::span<const int> q);

struct InnerMinimum {
    std::vector<double> r;
    double energy = 0.0;
};

/// Minimum of h0 + a . r over unit r: energy h0 - |a| at r = -a/|a|. With a
/// vanishing a any unit vector is optimal; the first basis vector is returned
/// to keep results reproducible. With no cliques r is empty and the energy is
/// h0 itself.
InnerMinimum inner_minimize(const ReducedCoefficients& rc);

enum class SolveMethod { Exhaustive, LocalSearch };

struct SolveOptions {
    /// Enumerate all 2^|G| generator assignments up to this size (Gray-code
    /// walk with incremental row updates); above it, seeded multi-restart
    /// steepest-descent bit flips take over and the result is an upper bound.
    std::size_t exhaustive_threshold = 22;
    std::size_t restarts = 64;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

struct GroundResult {
    double energy = 0.0;
    EpistemicState witness;
    SolveMethod method = SolveMethod::Exhaustive;
    std::uint64_t q_evaluations = 0;
};

/// Minimize the objective over epistemic states. The reported energy is
/// evaluate_objective(f, witness), bit for bit. Exhaustive ties resolve to
/// the lexicographically smallest q (+1 before -1).
GroundResult solve_ground(const ObjectiveFunction& f, const SolveOptions& options = {});

/// True iff the state's energy lies strictly below the threshold. Linear in
/// the objective size.
bool verify_witness(const ObjectiveFunction& f, const EpistemicState& s, double threshold);

std::string to_string(SolveMethod method);

}  // namespace qqsim

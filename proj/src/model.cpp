#include "model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "error.hpp"

namespace qqsim {

EpistemicState EpistemicState::make(std::vector<int> q, std::vector<double> r) {
    for (int value : q)
        if (value != +1 && value != -1)
            raise(ErrorCode::InvalidArgument, "generator values must be +1 or -1");
    if (!r.empty()) {
        double norm = std::sqrt(std::inner_product(r.begin(), r.end(), r.begin(), 0.0));
        if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-6)
            raise(ErrorCode::InvalidArgument,
                  "clique expectation vector must be unit length (|r| = " +
                      format_double(norm) + ")");
        if (std::abs(norm - 1.0) > 1e-12)
            for (double& value : r) value /= norm;
    }
    return EpistemicState(std::move(q), std::move(r));
}

ObjectiveFunction compile_objective(const Hamiltonian& h, const RConstruction& construction) {
    const auto& terms = h.terms();
    if (construction.decompositions.size() != terms.size())
        raise(ErrorCode::InvalidArgument,
              "decompositions do not cover the Hamiltonian terms (" +
                  std::to_string(construction.decompositions.size()) + " for " +
                  std::to_string(terms.size()) + ")");

    ObjectiveFunction f;
    f.constant = h.identity_offset();
    f.generator_count = construction.set.generators.size();
    f.clique_count = construction.set.representatives.size();

    // Accumulate in canonical term order for order-independent float sums.
    std::vector<std::size_t> order(terms.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return terms[a].op < terms[b].op; });

    std::map<std::vector<std::size_t>, std::size_t> row_of;
    for (std::size_t i : order) {
        const auto& dec = construction.decompositions[i];
        auto [it, inserted] = row_of.try_emplace(dec.generator_indices, f.rows.size());
        if (inserted) {
            ObjectiveRow row;
            row.generator_indices = dec.generator_indices;
            row.clique_coefficients.assign(f.clique_count, 0.0);
            f.rows.push_back(std::move(row));
        }
        ObjectiveRow& row = f.rows[it->second];
        double signed_coefficient = dec.sign * terms[i].coefficient;
        if (dec.clique_index)
            row.clique_coefficients[*dec.clique_index] += signed_coefficient;
        else
            row.coefficient += signed_coefficient;
    }

    // Deterministic row order: by generator subset.
    std::vector<std::size_t> row_order(f.rows.size());
    for (std::size_t i = 0; i < row_order.size(); ++i) row_order[i] = i;
    std::sort(row_order.begin(), row_order.end(), [&](std::size_t a, std::size_t b) {
        return f.rows[a].generator_indices < f.rows[b].generator_indices;
    });
    std::vector<ObjectiveRow> sorted;
    sorted.reserve(f.rows.size());
    for (std::size_t i : row_order) sorted.push_back(std::move(f.rows[i]));
    f.rows = std::move(sorted);
    return f;
}

static void check_dimensions(const ObjectiveFunction& f, const EpistemicState& s) {
    if (s.q().size() != f.generator_count || s.r().size() != f.clique_count)
        raise(ErrorCode::Dimension,
              "state has (" + std::to_string(s.q().size()) + ", " + std::to_string(s.r().size()) +
                  ") parameters, objective expects (" + std::to_string(f.generator_count) + ", " +
                  std::to_string(f.clique_count) + ")");
}

double evaluate_objective(const ObjectiveFunction& f, const EpistemicState& s) {
    check_dimensions(f, s);
    double total = f.constant;
    for (const auto& row : f.rows) {
        int parity = +1;
        for (std::size_t j : row.generator_indices) parity *= s.q()[j];
        double inner = row.coefficient;
        for (std::size_t i = 0; i < row.clique_coefficients.size(); ++i)
            inner += row.clique_coefficients[i] * s.r()[i];
        total += inner * parity;
    }
    return total;
}

double expectation_of_term(const TermDecomposition& dec, const EpistemicState& s) {
    double value = dec.sign;
    for (std::size_t j : dec.generator_indices) {
        if (j >= s.q().size()) raise(ErrorCode::Dimension, "generator index out of range");
        value *= s.q()[j];
    }
    if (dec.clique_index) {
        if (*dec.clique_index >= s.r().size())
            raise(ErrorCode::Dimension, "clique index out of range");
        value *= s.r()[*dec.clique_index];
    }
    return value;
}

OntologyTable joint_distribution(const EpistemicState& s) {
    const std::size_t cliques = s.r().size();
    const std::size_t generators = s.q().size();
    if (cliques + generators > 24)
        raise(ErrorCode::Limit, "joint distribution over " +
                                    std::to_string(cliques + generators) +
                                    " coordinates exceeds the 24-coordinate guard");
    OntologyTable t;
    t.clique_count = cliques;
    t.generator_count = generators;
    t.probabilities.assign(std::size_t(1) << (cliques + generators), 0.0);
    for (std::size_t index = 0; index < t.probabilities.size(); ++index) {
        double p = 1.0;
        for (std::size_t i = 0; i < cliques && p != 0.0; ++i)
            p *= 0.5 * std::abs(t.coordinate_value(index, i) + s.r()[i]);
        for (std::size_t j = 0; j < generators && p != 0.0; ++j)
            if (t.coordinate_value(index, cliques + j) != s.q()[j]) p = 0.0;
        t.probabilities[index] = p;
    }
    return t;
}

std::pair<std::vector<double>, std::vector<double>> marginal_expectations(const OntologyTable& t) {
    double total = 0.0;
    for (double p : t.probabilities) {
        if (p < 0.0) raise(ErrorCode::InvalidArgument, "table has a negative probability");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12)
        raise(ErrorCode::InvalidArgument,
              "table is not normalized (sum = " + format_double(total) + ")");

    const std::size_t coordinates = t.clique_count + t.generator_count;
    std::vector<double> expectation(coordinates, 0.0);
    for (std::size_t c = 0; c < coordinates; ++c) {
        double plus = 0.0;
        for (std::size_t index = 0; index < t.probabilities.size(); ++index)
            if (t.coordinate_value(index, c) == +1) plus += t.probabilities[index];
        expectation[c] = 2.0 * plus - 1.0;
    }
    std::vector<double> q_estimates(expectation.begin() + t.clique_count, expectation.end());
    std::vector<double> r_estimates(expectation.begin(), expectation.begin() + t.clique_count);
    return {std::move(q_estimates), std::move(r_estimates)};
}

}  // namespace qqsim

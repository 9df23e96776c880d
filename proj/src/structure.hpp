#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hamiltonian.hpp"
#include "pauli.hpp"

namespace qqsim {

/// A triple (a, b, c) with [a,b] = 0, [b,c] = 0, [a,c] != 0: a witness that
/// commutation fails to be transitive on the non-universal part of the input.
struct ContextualityCertificate {
    PauliOp a, b, c;
};

/// The commutation structure of a noncontextual operator set: the universally
/// commuting part plus the anticommuting cliques. Members and cliques are in
/// canonical (label) order; representatives[i] is cliques[i].front().
struct NoncontextualStructure {
    std::vector<PauliOp> universal;
    std::vector<std::vector<PauliOp>> cliques;
    std::vector<PauliOp> representatives;

    std::size_t clique_count() const { return cliques.size(); }
};

/// Split ops into (universal, rest): an op is universal iff it commutes with
/// every op of the input. Identities are stripped first; both outputs are in
/// canonical order. All ops must share one qubit count.
std::pair<std::vector<PauliOp>, std::vector<PauliOp>> partition(const std::vector<PauliOp>& ops);

/// True iff commutation is transitive on the non-universal part, i.e. the set
/// splits into cliques that commute inside and anticommute across.
bool is_noncontextual(const std::vector<PauliOp>& ops);

/// As is_noncontextual, but on failure yields the first violating triple in
/// canonical order.
std::optional<ContextualityCertificate> find_certificate(const std::vector<PauliOp>& ops);

/// Build the validated clique structure. Throws ErrorCode::Contextual with a
/// certificate in the message if the input is contextual.
NoncontextualStructure build_structure(const std::vector<PauliOp>& ops);

/// Pairwise anticommuting strings: the standard ladder family (Z-prefixes
/// ending in X or Y, plus the all-Z string), up to 2n+1 of them.
std::vector<PauliOp> anticommuting_family(std::size_t num_qubits, std::size_t count);

/// A seeded random Hamiltonian whose support is noncontextual with the
/// requested clique count and universal generator count: diagonal generators
/// plus a ladder family, dressed by generator products and scrambled by a
/// random symplectic (Clifford) change of frame. Coefficients are uniform in
/// [-1, 1]. Requires cliques <= 2(n - generators) + 1, and generators <= n-1
/// when cliques >= 1. Note: a lone clique commutes with everything and is
/// therefore reported as universal by the criterion, so the analyzed clique
/// count equals the request only for 0 or >= 2 cliques.
Hamiltonian random_noncontextual_instance(std::size_t num_qubits, std::size_t cliques,
                                          std::size_t generators, std::uint64_t seed);

}  // namespace qqsim

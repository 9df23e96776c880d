#pragma once

#include <optional>
#include <vector>

#include "hamiltonian.hpp"
#include "pauli.hpp"
#include "structure.hpp"

namespace qqsim {

/// A Pauli string with an exact +/-1 sign in front.
struct SignedPauli {
    int sign = +1;
    PauliOp op;
};

/// sign * product of the indexed generators (ascending index order).
struct GeneratorExpansion {
    int sign = +1;
    std::vector<std::size_t> generator_indices;
};

/// Result of the multiplicative Gaussian elimination: an independent
/// commuting set plus, for every input row, its exact signed expansion
/// over that set.
struct ReductionResult {
    std::vector<PauliOp> generators;
    std::vector<GeneratorExpansion> expansions;
};

/// The coordinate system for ontic states: an independent commuting set that
/// commutes with everything in the source support, plus the pairwise
/// anticommuting clique representatives.
struct GeneratorSet {
    std::vector<PauliOp> generators;       // mutually commuting, independent
    std::vector<PauliOp> representatives;  // pairwise anticommuting

    std::size_t size() const { return generators.size() + representatives.size(); }
};

/// How one Hamiltonian term factors over the generator set:
///   term = sign * prod_{j in generator_indices} G_j * (rep[clique_index]?)
/// with overall phase exactly +1 once the sign is included.
struct TermDecomposition {
    int sign = +1;
    std::vector<std::size_t> generator_indices;
    std::optional<std::size_t> clique_index;
};

struct RConstruction {
    GeneratorSet set;
    /// Aligned with the Hamiltonian's term order (identity excluded).
    std::vector<TermDecomposition> decompositions;
};

/// The universal part together with the signed in-clique products
/// member * representative. Every returned sign is exact and +/-1 (the
/// factors commute); every returned op commutes with the whole input set.
std::vector<SignedPauli> build_gprime(const NoncontextualStructure& structure);

/// Multiplicative Gaussian elimination over the single-qubit entries, with
/// the running sign updated on every row multiplication: X pivot, Z pivot,
/// Y cleared against both, lone-Y pivot as fallback. Generators come out
/// ordered by pivot column. Inputs must commute pairwise. The expansion of
/// each input is recovered exactly, including rows that reduce to the
/// identity (their sign may legitimately be -1, e.g. ZZ = -1 * XX * YY).
ReductionResult reduce_to_independent(const std::vector<SignedPauli>& rows);

/// True iff the (mutually commuting) ops are independent: none is a product
/// of the others, i.e. their symplectic rows have full GF(2) rank.
bool verify_independent(const std::vector<PauliOp>& ops);

/// Assemble the generator set for a Hamiltonian with the given structure and
/// record every term's signed decomposition. Each decomposition is verified
/// by exact Pauli multiplication before return; a mismatch is a bug trap
/// (ErrorCode::Internal), not a recoverable condition.
RConstruction build_R(const NoncontextualStructure& structure, const Hamiltonian& h);

/// GF(2) solver over a fixed independent commuting set; used to expand
/// arbitrary members of the generated group.
class GeneratorBasis {
public:
    explicit GeneratorBasis(const std::vector<PauliOp>& generators);

    /// Indices J with op = +/- prod_{j in J} G_j, or nullopt if op is outside
    /// the generated group (as an unsigned string).
    std::optional<std::vector<std::size_t>> solve(const PauliOp& op) const;

    /// Exact signed expansion: op = sign * prod G_j. Throws InvalidArgument
    /// if op is not in the generated group.
    GeneratorExpansion expand(const PauliOp& op) const;

private:
    const std::vector<PauliOp>* generators_;
    std::size_t num_qubits_ = 0;
    std::size_t word_count_ = 0;
    std::vector<std::vector<std::uint64_t>> rows_;  // reduced symplectic rows
    std::vector<std::uint64_t> combos_;             // generator subset per row
};

}  // namespace qqsim

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pauli.hpp"

namespace qqsim {

struct PauliTerm {
    PauliOp op;
    double coefficient = 0.0;

    bool operator==(const PauliTerm& other) const {
        return op == other.op && coefficient == other.coefficient;
    }
};

/// A weighted sum of distinct non-identity Pauli strings plus an identity
/// offset. Term order is the order of appearance in the source text; the
/// analysis layers impose their own canonical orderings.
class Hamiltonian {
public:
    Hamiltonian() = default;
    Hamiltonian(std::size_t num_qubits, std::vector<PauliTerm> terms, double identity_offset,
                bool has_identity_term);

    std::size_t num_qubits() const { return n_; }
    const std::vector<PauliTerm>& terms() const { return terms_; }
    double identity_offset() const { return identity_offset_; }

    /// True when the source text carried an explicit all-identity entry.
    /// Term counts and serialization include the identity exactly when set.
    bool has_identity_term() const { return has_identity_; }

    /// Number of terms including the identity entry when present.
    std::size_t term_count() const { return terms_.size() + (has_identity_ ? 1 : 0); }

    std::size_t zero_coefficient_count() const;

    /// The non-identity operators, in stored order.
    std::vector<PauliOp> support() const;

    bool operator==(const Hamiltonian& other) const;

private:
    std::size_t n_ = 0;
    double identity_offset_ = 0.0;
    bool has_identity_ = false;
    std::vector<PauliTerm> terms_;
};

/// Parse the on-disk format: a JSON-style object whose keys are Pauli labels
/// and whose values are finite numbers, e.g. {"IZ": -0.39863, "XX": 0.099524}.
/// Single-quoted keys are accepted as well. Duplicate keys, inconsistent label
/// lengths, non-finite values, and malformed syntax are rejected with
/// line/column positions. The all-identity entry is routed to the offset.
Hamiltonian load_hamiltonian(std::string_view text);
Hamiltonian load_hamiltonian_stream(std::istream& in);
Hamiltonian load_hamiltonian_file(const std::string& path);

/// Serialize to the same format, identity entry first when present, with
/// shortest round-trip number formatting: load(serialize(h)) == h bit for bit.
std::string serialize_hamiltonian(const Hamiltonian& h);

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double value);

}  // namespace qqsim

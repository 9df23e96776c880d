#pragma once

#include <complex>
#include <vector>

#include "hamiltonian.hpp"
#include "pauli.hpp"

namespace qqsim {

/// Dense 2^n x 2^n Hermitian matrix, row major. Basis index bit (n-1-q)
/// carries qubit q, so qubit 0 is the most significant bit, matching the
/// tensor-product order of the labels.
struct DenseHamiltonian {
    std::size_t num_qubits = 0;
    std::size_t dim = 1;
    std::vector<std::complex<double>> entries;

    std::complex<double>& at(std::size_t row, std::size_t col) { return entries[row * dim + col]; }
    const std::complex<double>& at(std::size_t row, std::size_t col) const {
        return entries[row * dim + col];
    }
};

inline constexpr std::size_t kDefaultOracleQubits = 12;

/// Sum of coefficient-weighted Pauli tensor products plus the identity offset.
DenseHamiltonian to_matrix(const Hamiltonian& h, std::size_t max_qubits = kDefaultOracleQubits);

/// All eigenvalues, ascending. The Hermitian problem is embedded as a real
/// symmetric one of doubled dimension (each eigenvalue appears twice there;
/// the duplicates are collapsed before returning).
std::vector<double> eigenvalues(const DenseHamiltonian& m);

/// Smallest eigenvalue of to_matrix(h).
double ground_energy(const Hamiltonian& h, std::size_t max_qubits = kDefaultOracleQubits);

struct GroundState {
    double energy = 0.0;
    /// Distance to the next distinct level; degenerate ground spaces show up
    /// as a (near-)zero gap, in which case the amplitudes are basis dependent.
    double gap = 0.0;
    std::vector<std::complex<double>> amplitudes;
};

GroundState ground_state(const Hamiltonian& h, std::size_t max_qubits = kDefaultOracleQubits);

/// <psi|P|psi> for the computed ground eigenvector and each listed operator.
std::vector<double> ground_expectations(const Hamiltonian& h, const std::vector<PauliOp>& ops,
                                        std::size_t max_qubits = kDefaultOracleQubits);

/// Expectation of a single Pauli string in an arbitrary normalized state,
/// evaluated column-wise without materializing the matrix.
double state_expectation(const std::vector<std::complex<double>>& amplitudes, const PauliOp& op);

}  // namespace qqsim

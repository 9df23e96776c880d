#pragma once

// Shared helpers for the test suites: dense complex matrix arithmetic kept
// deliberately dumb (the oracle side of every dual-route check), fixture
// loading, and deterministic instance draws.

#include <complex>
#include <random>
#include <string>
#include <vector>

#include "hamiltonian.hpp"
#include "oracle.hpp"
#include "pauli.hpp"

namespace testsupport {

using Complex = std::complex<double>;
using Matrix = std::vector<Complex>;  // row-major, square

inline qqsim::DenseHamiltonian dense_of(const qqsim::PauliOp& op) {
    if (op.is_identity()) {
        qqsim::Hamiltonian h(op.num_qubits(), {}, 1.0, true);
        return qqsim::to_matrix(h);
    }
    qqsim::Hamiltonian h(op.num_qubits(), {qqsim::PauliTerm{op, 1.0}}, 0.0, false);
    return qqsim::to_matrix(h);
}

// Plain triple-loop product; zero entries of the left factor are skipped so
// monomial Pauli matrices stay cheap, but nothing else is assumed.
inline Matrix matmul(const Matrix& a, const Matrix& b, std::size_t dim) {
    Matrix c(dim * dim, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < dim; ++k) {
            Complex aik = a[i * dim + k];
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < dim; ++j) c[i * dim + j] += aik * b[k * dim + j];
        }
    return c;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

inline Matrix identity_matrix(std::size_t dim) {
    Matrix m(dim * dim, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = 1.0;
    return m;
}

inline Matrix scaled(const Matrix& a, Complex factor) {
    Matrix out = a;
    for (auto& value : out) value *= factor;
    return out;
}

inline std::string fixture_path(const std::string& name) {
    return std::string(QQSIM_FIXTURE_DIR) + "/" + name;
}

inline qqsim::Hamiltonian load_fixture(const std::string& name) {
    return qqsim::load_hamiltonian_file(fixture_path(name));
}

// Random Pauli string (possibly identity) on n qubits.
inline qqsim::PauliOp random_pauli(std::mt19937_64& rng, std::size_t n) {
    auto op = qqsim::PauliOp::identity(n);
    for (std::size_t q = 0; q < n; ++q) {
        switch (rng() % 4) {
            case 1: op.set_x(q, true); break;
            case 2: op.set_x(q, true); op.set_z(q, true); break;
            case 3: op.set_z(q, true); break;
            default: break;
        }
    }
    return op;
}

// Random normalized complex state of the given dimension.
inline std::vector<Complex> random_state(std::mt19937_64& rng, std::size_t dim) {
    std::vector<Complex> psi(dim);
    double norm_sq = 0.0;
    auto gauss = [&rng]() {
        // Box-Muller on raw uniform draws; keeps the draw portable.
        double u1 = (double(rng() >> 11) + 0.5) * 0x1.0p-53;
        double u2 = double(rng() >> 11) * 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    };
    for (auto& amp : psi) {
        amp = {gauss(), gauss()};
        norm_sq += std::norm(amp);
    }
    double norm = std::sqrt(norm_sq);
    for (auto& amp : psi) amp /= norm;
    return psi;
}

}  // namespace testsupport

#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "error.hpp"

namespace qqsim {

// ----------------------- real symmetric eigensolver --------------------------
//
// Householder tridiagonalization followed by implicit-shift QL, the classic
// dense-symmetric pair. Kept self-contained so the oracle stays independent
// of the model code it is used to check.

namespace {

class SymmetricEigenSolver {
public:
    // a: n x n symmetric, row major; consumed in place.
    SymmetricEigenSolver(std::vector<double> a, std::size_t n, bool want_vectors)
        : a_(std::move(a)), n_(n), vectors_(want_vectors) {
        d_.assign(n_, 0.0);
        e_.assign(n_, 0.0);
        tridiagonalize();
        if (!ql_implicit_shift())
            raise(ErrorCode::Internal, "symmetric eigensolver failed to converge");
        sort_ascending();
    }

    const std::vector<double>& values() const { return d_; }

    // Eigenvector for the sorted position k (only with want_vectors).
    std::vector<double> vector(std::size_t k) const {
        std::vector<double> v(n_);
        for (std::size_t row = 0; row < n_; ++row) v[row] = a_[row * n_ + order_[k]];
        return v;
    }

private:
    double& at(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }

    void tridiagonalize() {
        if (n_ == 0) return;
        for (std::size_t i = n_ - 1; i >= 1; --i) {
            std::size_t l = i - 1;
            double h = 0.0, scale = 0.0;
            if (l > 0) {
                for (std::size_t k = 0; k <= l; ++k) scale += std::abs(at(i, k));
                if (scale == 0.0) {
                    e_[i] = at(i, l);
                } else {
                    for (std::size_t k = 0; k <= l; ++k) {
                        at(i, k) /= scale;
                        h += at(i, k) * at(i, k);
                    }
                    double f = at(i, l);
                    double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                    e_[i] = scale * g;
                    h -= f * g;
                    at(i, l) = f - g;
                    f = 0.0;
                    for (std::size_t j = 0; j <= l; ++j) {
                        if (vectors_) at(j, i) = at(i, j) / h;
                        g = 0.0;
                        for (std::size_t k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
                        for (std::size_t k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
                        e_[j] = g / h;
                        f += e_[j] * at(i, j);
                    }
                    double hh = f / (h + h);
                    for (std::size_t j = 0; j <= l; ++j) {
                        f = at(i, j);
                        e_[j] = g = e_[j] - hh * f;
                        for (std::size_t k = 0; k <= j; ++k)
                            at(j, k) -= f * e_[k] + g * at(i, k);
                    }
                }
            } else {
                e_[i] = at(i, l);
            }
            d_[i] = h;
        }
        d_[0] = 0.0;
        e_[0] = 0.0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (vectors_) {
                if (d_[i] != 0.0) {
                    for (std::size_t j = 0; j < i; ++j) {
                        double g = 0.0;
                        for (std::size_t k = 0; k < i; ++k) g += at(i, k) * at(k, j);
                        for (std::size_t k = 0; k < i; ++k) at(k, j) -= g * at(k, i);
                    }
                }
                d_[i] = at(i, i);
                at(i, i) = 1.0;
                for (std::size_t j = 0; j < i; ++j) at(j, i) = at(i, j) = 0.0;
            } else {
                d_[i] = at(i, i);
            }
        }
    }

    bool ql_implicit_shift() {
        if (n_ == 0) return true;
        const double eps = std::numeric_limits<double>::epsilon();
        for (std::size_t i = 1; i < n_; ++i) e_[i - 1] = e_[i];
        e_[n_ - 1] = 0.0;
        for (std::size_t l = 0; l < n_; ++l) {
            int iterations = 0;
            std::size_t m;
            do {
                for (m = l; m + 1 < n_; ++m) {
                    double dd = std::abs(d_[m]) + std::abs(d_[m + 1]);
                    if (std::abs(e_[m]) <= eps * dd) break;
                }
                if (m != l) {
                    if (iterations++ == 64) return false;
                    double g = (d_[l + 1] - d_[l]) / (2.0 * e_[l]);
                    double r = std::hypot(g, 1.0);
                    g = d_[m] - d_[l] + e_[l] / (g + std::copysign(r, g));
                    double s = 1.0, c = 1.0, p = 0.0;
                    bool underflow = false;
                    for (std::size_t i = m; i-- > l;) {
                        double f = s * e_[i];
                        double b = c * e_[i];
                        r = std::hypot(f, g);
                        e_[i + 1] = r;
                        if (r == 0.0) {
                            d_[i + 1] -= p;
                            e_[m] = 0.0;
                            underflow = true;
                            break;
                        }
                        s = f / r;
                        c = g / r;
                        g = d_[i + 1] - p;
                        r = (d_[i] - g) * s + 2.0 * c * b;
                        p = s * r;
                        d_[i + 1] = g + p;
                        g = c * r - b;
                        if (vectors_) {
                            for (std::size_t k = 0; k < n_; ++k) {
                                f = at(k, i + 1);
                                at(k, i + 1) = s * at(k, i) + c * f;
                                at(k, i) = c * at(k, i) - s * f;
                            }
                        }
                    }
                    if (underflow) continue;
                    d_[l] -= p;
                    e_[l] = g;
                    e_[m] = 0.0;
                }
            } while (m != l);
        }
        return true;
    }

    void sort_ascending() {
        order_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) order_[i] = i;
        std::sort(order_.begin(), order_.end(),
                  [&](std::size_t x, std::size_t y) { return d_[x] < d_[y]; });
        std::vector<double> sorted(n_);
        for (std::size_t i = 0; i < n_; ++i) sorted[i] = d_[order_[i]];
        d_ = std::move(sorted);
    }

    std::vector<double> a_;
    std::size_t n_;
    bool vectors_;
    std::vector<double> d_, e_;
    std::vector<std::size_t> order_;
};

// [[Re H, -Im H], [Im H, Re H]]: symmetric iff H is Hermitian; every
// eigenvalue of H appears twice.
std::vector<double> real_embedding(const DenseHamiltonian& m) {
    const std::size_t d = m.dim;
    std::vector<double> a(4 * d * d, 0.0);
    const std::size_t dd = 2 * d;
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            double re = m.at(r, c).real();
            double im = m.at(r, c).imag();
            a[r * dd + c] = re;
            a[(r + d) * dd + (c + d)] = re;
            a[r * dd + (c + d)] = -im;
            a[(r + d) * dd + c] = im;
        }
    return a;
}

struct PauliAction {
    std::size_t flip_mask = 0;             // x bits as a basis-index mask
    std::size_t z_mask = 0;                // z bits as a basis-index mask
    std::complex<double> y_phase{1.0, 0.0};  // i^(#Y)

    // amplitude of |b ^ flip_mask> in P|b>
    std::complex<double> amplitude(std::size_t b) const {
        int z_parity = std::popcount(b & z_mask) & 1;
        return z_parity ? -y_phase : y_phase;
    }
};

PauliAction action_of(const PauliOp& op) {
    PauliAction act;
    const std::size_t n = op.num_qubits();
    int y_count = 0;
    for (std::size_t q = 0; q < n; ++q) {
        std::size_t bit = std::size_t(1) << (n - 1 - q);
        if (op.x_bit(q)) act.flip_mask |= bit;
        if (op.z_bit(q)) act.z_mask |= bit;
        if (op.x_bit(q) && op.z_bit(q)) ++y_count;
    }
    static const std::complex<double> powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    act.y_phase = powers[y_count % 4];
    return act;
}

void check_cap(const Hamiltonian& h, std::size_t max_qubits) {
    if (h.num_qubits() > max_qubits)
        raise(ErrorCode::Limit, "dense diagonalization capped at " + std::to_string(max_qubits) +
                                    " qubits, got " + std::to_string(h.num_qubits()));
}

}  // namespace

DenseHamiltonian to_matrix(const Hamiltonian& h, std::size_t max_qubits) {
    check_cap(h, max_qubits);
    DenseHamiltonian m;
    m.num_qubits = h.num_qubits();
    m.dim = std::size_t(1) << m.num_qubits;
    m.entries.assign(m.dim * m.dim, {0.0, 0.0});
    for (const auto& term : h.terms()) {
        PauliAction act = action_of(term.op);
        for (std::size_t col = 0; col < m.dim; ++col)
            m.at(col ^ act.flip_mask, col) += term.coefficient * act.amplitude(col);
    }
    for (std::size_t i = 0; i < m.dim; ++i) m.at(i, i) += h.identity_offset();
    return m;
}

std::vector<double> eigenvalues(const DenseHamiltonian& m) {
    SymmetricEigenSolver solver(real_embedding(m), 2 * m.dim, /*want_vectors=*/false);
    // Doubled spectrum: collapse the pairs.
    std::vector<double> out;
    out.reserve(m.dim);
    for (std::size_t i = 0; i < solver.values().size(); i += 2)
        out.push_back(0.5 * (solver.values()[i] + solver.values()[i + 1]));
    return out;
}

double ground_energy(const Hamiltonian& h, std::size_t max_qubits) {
    auto m = to_matrix(h, max_qubits);
    SymmetricEigenSolver solver(real_embedding(m), 2 * m.dim, /*want_vectors=*/false);
    return solver.values().front();
}

GroundState ground_state(const Hamiltonian& h, std::size_t max_qubits) {
    auto m = to_matrix(h, max_qubits);
    const std::size_t dd = 2 * m.dim;
    SymmetricEigenSolver solver(real_embedding(m), dd, /*want_vectors=*/true);

    GroundState gs;
    gs.energy = solver.values().front();
    gs.gap = dd > 2 ? solver.values()[2] - solver.values()[0]
                    : std::numeric_limits<double>::infinity();

    auto v = solver.vector(0);
    gs.amplitudes.resize(m.dim);
    double norm = 0.0;
    for (std::size_t b = 0; b < m.dim; ++b) {
        gs.amplitudes[b] = {v[b], v[b + m.dim]};
        norm += std::norm(gs.amplitudes[b]);
    }
    norm = std::sqrt(norm);
    for (auto& amp : gs.amplitudes) amp /= norm;

    // Residual check on the recovered complex vector.
    double max_residual = 0.0;
    double scale = std::max(1.0, std::abs(gs.energy));
    for (std::size_t r = 0; r < m.dim; ++r) {
        std::complex<double> acc = 0.0;
        for (std::size_t c = 0; c < m.dim; ++c) acc += m.at(r, c) * gs.amplitudes[c];
        acc -= gs.energy * gs.amplitudes[r];
        max_residual = std::max(max_residual, std::abs(acc));
    }
    if (max_residual > 1e-10 * scale * m.dim)
        raise(ErrorCode::Internal, "eigenvector residual too large: " + format_double(max_residual));
    return gs;
}

double state_expectation(const std::vector<std::complex<double>>& amplitudes, const PauliOp& op) {
    if ((std::size_t(1) << op.num_qubits()) != amplitudes.size())
        raise(ErrorCode::Dimension, "state dimension does not match the operator");
    PauliAction act = action_of(op);
    std::complex<double> acc = 0.0;
    for (std::size_t b = 0; b < amplitudes.size(); ++b)
        acc += std::conj(amplitudes[b ^ act.flip_mask]) * act.amplitude(b) * amplitudes[b];
    return acc.real();
}

std::vector<double> ground_expectations(const Hamiltonian& h, const std::vector<PauliOp>& ops,
                                        std::size_t max_qubits) {
    check_cap(h, max_qubits);
    auto gs = ground_state(h, max_qubits);
    std::vector<double> out;
    out.reserve(ops.size());
    for (const auto& op : ops) {
        if (op.num_qubits() != h.num_qubits())
            raise(ErrorCode::Dimension, "operator " + op.label() + " does not act on " +
                                            std::to_string(h.num_qubits()) + " qubits");
        out.push_back(state_expectation(gs.amplitudes, op));
    }
    return out;
}

}  // namespace qqsim

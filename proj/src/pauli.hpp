#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qqsim {

/// A power of the imaginary unit, i^k with k in {0,1,2,3}.
///
/// Products of Pauli strings pick up one of the four phases {+1,+i,-1,-i};
/// we keep the exponent exactly instead of a complex float so that the sign
/// bookkeeping of generator elimination never degrades.
class Phase {
public:
    constexpr Phase() = default;
    static constexpr Phase from_exponent(int k) { return Phase((k % 4 + 4) % 4); }
    static constexpr Phase one() { return Phase(0); }
    static constexpr Phase imaginary() { return Phase(1); }
    static constexpr Phase minus_one() { return Phase(2); }
    static constexpr Phase minus_imaginary() { return Phase(3); }

    constexpr int exponent() const { return k_; }
    constexpr bool is_real() const { return k_ == 0 || k_ == 2; }

    /// +1 or -1; only meaningful when is_real().
    constexpr int sign() const { return k_ == 0 ? +1 : -1; }

    constexpr Phase operator*(Phase other) const { return Phase((k_ + other.k_) & 3); }
    constexpr bool operator==(const Phase&) const = default;

    std::complex<double> value() const {
        switch (k_) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }

    std::string str() const;

private:
    explicit constexpr Phase(int k) : k_(static_cast<std::uint8_t>(k)) {}
    std::uint8_t k_ = 0;
};

/// An n-qubit Pauli string in binary symplectic form: per qubit, an x bit and
/// a z bit encode I=(0,0), X=(1,0), Y=(1,1), Z=(0,1). Qubit 0 is the leftmost
/// character of the label. Bits are packed into 64-bit words so commutation
/// checks run word-parallel. The all-zero pair is the identity. Immutable
/// after construction; all operations below are pure.
class PauliOp {
public:
    PauliOp() = default;

    static PauliOp identity(std::size_t num_qubits);

    /// Parse a label over {I,X,Y,Z}. Rejects empty labels and any other
    /// character, reporting the 1-based offending position.
    static PauliOp parse(std::string_view label);

    std::size_t num_qubits() const { return n_; }

    bool x_bit(std::size_t qubit) const { return bit(x_, qubit); }
    bool z_bit(std::size_t qubit) const { return bit(z_, qubit); }

    /// 0=I, 1=X, 2=Y, 3=Z at the given qubit.
    int kind(std::size_t qubit) const;

    bool is_identity() const;

    /// True iff every tensor factor is I or Z (no x bits set).
    bool is_diagonal() const;

    std::string label() const;

    bool operator==(const PauliOp& other) const { return n_ == other.n_ && x_ == other.x_ && z_ == other.z_; }

    /// Lexicographic order on labels with I < X < Y < Z; the canonical order
    /// used everywhere a deterministic arrangement of operators is needed.
    std::strong_ordering operator<=>(const PauliOp& other) const;

    const std::vector<std::uint64_t>& x_words() const { return x_; }
    const std::vector<std::uint64_t>& z_words() const { return z_; }

    // Mutators used by construction code (instance generators, Clifford
    // scrambling). Not part of the algebraic surface.
    void set_x(std::size_t qubit, bool value) { set_bit(x_, qubit, value); }
    void set_z(std::size_t qubit, bool value) { set_bit(z_, qubit, value); }
    void swap_xz(std::size_t qubit);

private:
    explicit PauliOp(std::size_t n);
    static bool bit(const std::vector<std::uint64_t>& words, std::size_t i);
    static void set_bit(std::vector<std::uint64_t>& words, std::size_t i, bool value);

    std::size_t n_ = 0;
    std::vector<std::uint64_t> x_, z_;
};

struct PauliProduct {
    Phase phase;
    PauliOp op;
};

/// True iff the two strings commute as 2^n x 2^n matrices, i.e. the symplectic
/// form x_p.z_q + z_p.x_q vanishes mod 2. Throws on mismatched qubit counts.
bool commutes(const PauliOp& p, const PauliOp& q);

/// Exact matrix product p*q = phase * r, with r the bitwise-XOR string and the
/// phase accumulated per qubit as a power of i. Commuting operands always
/// yield a real phase.
PauliProduct multiply(const PauliOp& p, const PauliOp& q);

inline bool is_diagonal(const PauliOp& p) { return p.is_diagonal(); }

}  // namespace qqsim

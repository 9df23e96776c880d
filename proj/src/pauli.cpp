#include "pauli.hpp"

#include <bit>

#include "error.hpp"

namespace qqsim {

std::string Phase::str() const {
    static const char* names[4] = {"+1", "+i", "-1", "-i"};
    return names[k_];
}

PauliOp::PauliOp(std::size_t n)
    : n_(n), x_((n + 63) / 64, 0), z_((n + 63) / 64, 0) {}

PauliOp PauliOp::identity(std::size_t num_qubits) { return PauliOp(num_qubits); }

PauliOp PauliOp::parse(std::string_view label) {
    if (label.empty())
        raise(ErrorCode::Parse, "empty Pauli label");
    PauliOp p(label.size());
    for (std::size_t i = 0; i < label.size(); ++i) {
        switch (label[i]) {
            case 'I': break;
            case 'X': p.set_x(i, true); break;
            case 'Y': p.set_x(i, true); p.set_z(i, true); break;
            case 'Z': p.set_z(i, true); break;
            default:
                raise(ErrorCode::Parse, "invalid Pauli character '" + std::string(1, label[i]) +
                                            "' at position " + std::to_string(i + 1));
        }
    }
    return p;
}

bool PauliOp::bit(const std::vector<std::uint64_t>& words, std::size_t i) {
    return (words[i / 64] >> (i % 64)) & 1u;
}

void PauliOp::set_bit(std::vector<std::uint64_t>& words, std::size_t i, bool value) {
    if (value)
        words[i / 64] |= std::uint64_t(1) << (i % 64);
    else
        words[i / 64] &= ~(std::uint64_t(1) << (i % 64));
}

int PauliOp::kind(std::size_t qubit) const {
    int x = x_bit(qubit) ? 1 : 0;
    int z = z_bit(qubit) ? 1 : 0;
    // 0=I, 1=X, 2=Y, 3=Z
    return x ? (z ? 2 : 1) : (z ? 3 : 0);
}

bool PauliOp::is_identity() const {
    for (auto w : x_)
        if (w) return false;
    for (auto w : z_)
        if (w) return false;
    return true;
}

bool PauliOp::is_diagonal() const {
    for (auto w : x_)
        if (w) return false;
    return true;
}

std::string PauliOp::label() const {
    static const char names[4] = {'I', 'X', 'Y', 'Z'};
    std::string out(n_, 'I');
    for (std::size_t i = 0; i < n_; ++i) out[i] = names[kind(i)];
    return out;
}

std::strong_ordering PauliOp::operator<=>(const PauliOp& other) const {
    // Label order, with shorter strings first among unequal lengths.
    static const char names[4] = {'I', 'X', 'Y', 'Z'};
    std::size_t common = n_ < other.n_ ? n_ : other.n_;
    for (std::size_t i = 0; i < common; ++i) {
        char a = names[kind(i)];
        char b = names[other.kind(i)];
        if (a != b) return a <=> b;
    }
    return n_ <=> other.n_;
}

void PauliOp::swap_xz(std::size_t qubit) {
    bool x = x_bit(qubit), z = z_bit(qubit);
    set_x(qubit, z);
    set_z(qubit, x);
}

static void check_same_width(const PauliOp& p, const PauliOp& q, const char* what) {
    if (p.num_qubits() != q.num_qubits())
        raise(ErrorCode::Dimension, std::string(what) + ": operands act on " +
                                        std::to_string(p.num_qubits()) + " and " +
                                        std::to_string(q.num_qubits()) + " qubits");
}

bool commutes(const PauliOp& p, const PauliOp& q) {
    check_same_width(p, q, "commutes");
    std::uint64_t acc = 0;
    const auto& px = p.x_words();
    const auto& pz = p.z_words();
    const auto& qx = q.x_words();
    const auto& qz = q.z_words();
    for (std::size_t w = 0; w < px.size(); ++w)
        acc ^= std::uint64_t(std::popcount(px[w] & qz[w]) ^ std::popcount(pz[w] & qx[w]));
    return (acc & 1u) == 0;
}

PauliProduct multiply(const PauliOp& p, const PauliOp& q) {
    check_same_width(p, q, "multiply");
    // Exponent of i contributed by each single-qubit product, indexed
    // [kind(p)][kind(q)] over 0=I,1=X,2=Y,3=Z. E.g. X*Z = -iY -> 3.
    static const int phase_table[4][4] = {
        {0, 0, 0, 0},
        {0, 0, 1, 3},
        {0, 3, 0, 1},
        {0, 1, 3, 0},
    };
    int exponent = 0;
    PauliOp r = PauliOp::identity(p.num_qubits());
    for (std::size_t i = 0; i < p.num_qubits(); ++i) {
        exponent += phase_table[p.kind(i)][q.kind(i)];
        r.set_x(i, p.x_bit(i) ^ q.x_bit(i));
        r.set_z(i, p.z_bit(i) ^ q.z_bit(i));
    }
    return PauliProduct{Phase::from_exponent(exponent), std::move(r)};
}

}  // namespace qqsim

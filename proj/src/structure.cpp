#include "structure.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"
#include "rng.hpp"

namespace qqsim {

namespace {

// Canonically sorted, deduplicated, identity-free copy of the input.
// Mixed qubit counts surface as a Dimension error via commutes() later,
// but we check here to fail before any pairwise work.
std::vector<PauliOp> canonical_support(const std::vector<PauliOp>& ops) {
    std::vector<PauliOp> out;
    out.reserve(ops.size());
    for (const auto& op : ops) {
        if (!op.is_identity()) out.push_back(op);
    }
    for (const auto& op : out)
        if (op.num_qubits() != out.front().num_qubits())
            raise(ErrorCode::Dimension, "operator set mixes qubit counts");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct CommutationTable {
    std::size_t size;
    std::vector<char> commute;  // row-major size x size

    bool operator()(std::size_t i, std::size_t j) const { return commute[i * size + j]; }
};

CommutationTable build_table(const std::vector<PauliOp>& ops) {
    CommutationTable t{ops.size(), std::vector<char>(ops.size() * ops.size(), 1)};
    for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            char c = commutes(ops[i], ops[j]) ? 1 : 0;
            t.commute[i * t.size + j] = c;
            t.commute[j * t.size + i] = c;
        }
    return t;
}

std::vector<std::size_t> universal_indices(const std::vector<PauliOp>& ops,
                                           const CommutationTable& table) {
    std::vector<std::size_t> universal;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        bool all = true;
        for (std::size_t j = 0; j < ops.size() && all; ++j) all = table(i, j);
        if (all) universal.push_back(i);
    }
    return universal;
}

// Group the non-universal indices into commutation classes and verify the
// equivalence-relation property. Returns nullopt if some pair violates it.
std::optional<std::vector<std::vector<std::size_t>>> try_cliques(
    const std::vector<std::size_t>& rest, const CommutationTable& table) {
    std::vector<std::vector<std::size_t>> cliques;
    std::vector<std::size_t> clique_of(table.size, SIZE_MAX);
    for (std::size_t i : rest) {
        bool placed = false;
        for (std::size_t c = 0; c < cliques.size() && !placed; ++c) {
            if (table(i, cliques[c].front())) {
                cliques[c].push_back(i);
                clique_of[i] = c;
                placed = true;
            }
        }
        if (!placed) {
            clique_of[i] = cliques.size();
            cliques.push_back({i});
        }
    }
    // In-clique pairs must commute, cross-clique pairs must anticommute.
    for (std::size_t a = 0; a < rest.size(); ++a)
        for (std::size_t b = a + 1; b < rest.size(); ++b) {
            std::size_t i = rest[a], j = rest[b];
            bool same = clique_of[i] == clique_of[j];
            if (table(i, j) != same) return std::nullopt;
        }
    return cliques;
}

}  // namespace

std::pair<std::vector<PauliOp>, std::vector<PauliOp>> partition(const std::vector<PauliOp>& ops) {
    auto sorted = canonical_support(ops);
    auto table = build_table(sorted);
    auto universal = universal_indices(sorted, table);
    std::vector<PauliOp> z, t;
    std::size_t u = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (u < universal.size() && universal[u] == i) {
            z.push_back(sorted[i]);
            ++u;
        } else {
            t.push_back(sorted[i]);
        }
    }
    return {std::move(z), std::move(t)};
}

bool is_noncontextual(const std::vector<PauliOp>& ops) {
    auto sorted = canonical_support(ops);
    auto table = build_table(sorted);
    auto universal = universal_indices(sorted, table);
    std::vector<char> is_universal(sorted.size(), 0);
    for (std::size_t i : universal) is_universal[i] = 1;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (!is_universal[i]) rest.push_back(i);
    return try_cliques(rest, table).has_value();
}

std::optional<ContextualityCertificate> find_certificate(const std::vector<PauliOp>& ops) {
    auto sorted = canonical_support(ops);
    auto table = build_table(sorted);
    // Transitivity is only required outside the universal part; a universal
    // middle element commutes with everything and would fake a violation.
    auto universal = universal_indices(sorted, table);
    std::vector<char> is_universal(sorted.size(), 0);
    for (std::size_t i : universal) is_universal[i] = 1;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (!is_universal[i]) rest.push_back(i);

    // First (i, j, k) in lexicographic order, i < k, with the chain
    // [i,j] = 0, [j,k] = 0 but [i,k] != 0.
    for (std::size_t i : rest)
        for (std::size_t j : rest) {
            if (j == i) continue;
            for (std::size_t k : rest) {
                if (k <= i || k == j) continue;
                if (table(i, j) && table(j, k) && !table(i, k))
                    return ContextualityCertificate{sorted[i], sorted[j], sorted[k]};
            }
        }
    return std::nullopt;
}

NoncontextualStructure build_structure(const std::vector<PauliOp>& ops) {
    auto sorted = canonical_support(ops);
    auto table = build_table(sorted);
    auto universal = universal_indices(sorted, table);
    std::vector<char> is_universal(sorted.size(), 0);
    for (std::size_t i : universal) is_universal[i] = 1;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (!is_universal[i]) rest.push_back(i);

    auto cliques = try_cliques(rest, table);
    if (!cliques) {
        auto cert = find_certificate(ops);
        raise(ErrorCode::Contextual,
              "operator set is contextual: [" + cert->a.label() + ", " + cert->b.label() +
                  "] = 0 and [" + cert->b.label() + ", " + cert->c.label() + "] = 0 but " +
                  cert->a.label() + " and " + cert->c.label() + " anticommute");
    }

    NoncontextualStructure s;
    for (std::size_t i : universal) s.universal.push_back(sorted[i]);
    for (const auto& clique : *cliques) {
        std::vector<PauliOp> members;
        members.reserve(clique.size());
        for (std::size_t i : clique) members.push_back(sorted[i]);
        // indices ascend, and sorted[] ascends, so members are already canonical
        s.cliques.push_back(std::move(members));
    }
    std::sort(s.cliques.begin(), s.cliques.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (const auto& clique : s.cliques) s.representatives.push_back(clique.front());
    return s;
}

std::vector<PauliOp> anticommuting_family(std::size_t num_qubits, std::size_t count) {
    if (count > 2 * num_qubits + 1)
        raise(ErrorCode::Infeasible,
              "an anticommuting family on " + std::to_string(num_qubits) +
                  " qubits has at most " + std::to_string(2 * num_qubits + 1) + " members");
    std::vector<PauliOp> family;
    family.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        PauliOp op = PauliOp::identity(num_qubits);
        std::size_t block = k / 2;
        if (block == num_qubits) {
            for (std::size_t q = 0; q < num_qubits; ++q) op.set_z(q, true);  // the all-Z cap
        } else {
            for (std::size_t q = 0; q < block; ++q) op.set_z(q, true);
            op.set_x(block, true);
            if (k % 2) op.set_z(block, true);  // Y instead of X
        }
        family.push_back(std::move(op));
    }
    return family;
}

namespace {

// Random symplectic scrambling: a sequence of elementary Clifford moves applied
// to the (x, z) bits of every term. Signs are irrelevant here because the
// coefficients are random anyway.
void scramble(std::vector<PauliOp>& ops, std::size_t n, Rng& rng) {
    if (n == 0) return;
    std::size_t moves = 3 * n + 4;
    for (std::size_t m = 0; m < moves; ++m) {
        switch (rng.below(3)) {
            case 0: {  // Hadamard: swap x/z on one qubit
                std::size_t q = rng.below(n);
                for (auto& op : ops) op.swap_xz(q);
                break;
            }
            case 1: {  // phase gate: z ^= x on one qubit
                std::size_t q = rng.below(n);
                for (auto& op : ops) op.set_z(q, op.z_bit(q) ^ op.x_bit(q));
                break;
            }
            case 2: {  // CNOT a -> b: x_b ^= x_a, z_a ^= z_b
                if (n < 2) break;
                std::size_t a = rng.below(n);
                std::size_t b = rng.below(n - 1);
                if (b >= a) ++b;
                for (auto& op : ops) {
                    op.set_x(b, op.x_bit(b) ^ op.x_bit(a));
                    op.set_z(a, op.z_bit(a) ^ op.z_bit(b));
                }
                break;
            }
        }
    }
}

}  // namespace

Hamiltonian random_noncontextual_instance(std::size_t num_qubits, std::size_t cliques,
                                          std::size_t generators, std::uint64_t seed) {
    const std::size_t n = num_qubits;
    if (n == 0) raise(ErrorCode::InvalidArgument, "need at least one qubit");
    if (generators > n)
        raise(ErrorCode::Infeasible, "more universal generators than qubits");
    if (cliques >= 1 && generators > n - 1)
        raise(ErrorCode::Infeasible,
              "with cliques present the universal generators occupy at most n-1 qubits");
    const std::size_t m = n - generators;
    if (cliques > 2 * m + 1)
        raise(ErrorCode::Infeasible, "requested " + std::to_string(cliques) +
                                         " cliques but at most " + std::to_string(2 * m + 1) +
                                         " pairwise-anticommuting operators fit on " +
                                         std::to_string(m) + " qubits");

    Rng rng(seed);

    // Independent commuting diagonal generators: Z on qubit j, j < generators.
    std::vector<PauliOp> diag;
    for (std::size_t j = 0; j < generators; ++j) {
        PauliOp op = PauliOp::identity(n);
        op.set_z(j, true);
        diag.push_back(std::move(op));
    }
    auto random_generator_product = [&](bool allow_empty) {
        PauliOp op = PauliOp::identity(n);
        bool empty = true;
        for (std::size_t j = 0; j < generators; ++j) {
            if (rng.coin()) {
                op.set_z(j, op.z_bit(j) ^ true);
                empty = false;
            }
        }
        if (!allow_empty && empty && generators > 0) {
            std::size_t j = rng.below(generators);
            op.set_z(j, true);
        }
        return op;
    };

    std::vector<PauliOp> ops;
    std::set<std::string> labels;
    auto try_add = [&](const PauliOp& op) {
        if (op.is_identity()) return false;
        if (!labels.insert(op.label()).second) return false;
        ops.push_back(op);
        return true;
    };

    // Universal part: generator j dressed with a random subset of the earlier
    // generators, which keeps the set full rank by triangularity.
    for (std::size_t j = 0; j < generators; ++j) {
        PauliOp op = diag[j];
        for (std::size_t l = 0; l < j; ++l)
            if (rng.coin()) op.set_z(l, op.z_bit(l) ^ true);
        try_add(op);
    }

    // Clique representatives: the ladder family on the remaining qubits,
    // shifted past the generator block. Extra members are representative times
    // a nonempty generator product.
    auto family = anticommuting_family(m, cliques);
    for (std::size_t i = 0; i < cliques; ++i) {
        PauliOp rep = PauliOp::identity(n);
        for (std::size_t q = 0; q < m; ++q) {
            rep.set_x(generators + q, family[i].x_bit(q));
            rep.set_z(generators + q, family[i].z_bit(q));
        }
        try_add(rep);
        std::size_t extras = generators > 0 ? rng.below(3) : 0;
        for (std::size_t e = 0; e < extras; ++e) {
            PauliOp dress = random_generator_product(false);
            auto member = multiply(rep, dress).op;
            try_add(member);
        }
    }

    scramble(ops, n, rng);

    std::vector<PauliTerm> terms;
    terms.reserve(ops.size());
    for (auto& op : ops) terms.push_back(PauliTerm{std::move(op), rng.uniform(-1.0, 1.0)});
    double offset = rng.uniform(-1.0, 1.0);
    return Hamiltonian(n, std::move(terms), offset, /*has_identity_term=*/true);
}

}  // namespace qqsim

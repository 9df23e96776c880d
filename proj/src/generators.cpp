#include "generators.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "error.hpp"

namespace qqsim {

std::vector<SignedPauli> build_gprime(const NoncontextualStructure& structure) {
    std::vector<SignedPauli> out;
    for (const auto& z : structure.universal) out.push_back(SignedPauli{+1, z});
    for (const auto& clique : structure.cliques) {
        for (std::size_t j = 1; j < clique.size(); ++j) {
            auto product = multiply(clique[j], clique[0]);
            if (!product.phase.is_real())
                raise(ErrorCode::Internal, "clique members " + clique[j].label() + " and " +
                                               clique[0].label() + " do not commute");
            out.push_back(SignedPauli{product.phase.sign(), std::move(product.op)});
        }
    }
    return out;
}

// ------------------------- multiplicative elimination ------------------------

namespace {

struct Row {
    int sign;
    PauliOp op;
};

// row i *= row k, with the sign updated by the (necessarily real) phase.
void row_multiply(std::vector<Row>& rows, std::size_t i, std::size_t k) {
    auto product = multiply(rows[i].op, rows[k].op);
    if (!product.phase.is_real())
        raise(ErrorCode::InvalidArgument,
              "rows " + rows[i].op.label() + " and " + rows[k].op.label() + " anticommute");
    rows[i].sign *= rows[k].sign * product.phase.sign();
    rows[i].op = std::move(product.op);
}

}  // namespace

ReductionResult reduce_to_independent(const std::vector<SignedPauli>& input) {
    for (std::size_t i = 0; i < input.size(); ++i)
        for (std::size_t j = i + 1; j < input.size(); ++j)
            if (!commutes(input[i].op, input[j].op))
                raise(ErrorCode::InvalidArgument, "inputs " + input[i].op.label() + " and " +
                                                      input[j].op.label() + " anticommute");

    std::vector<Row> rows;
    rows.reserve(input.size());
    std::size_t n = 0;
    for (const auto& in : input) {
        if (in.sign != +1 && in.sign != -1)
            raise(ErrorCode::InvalidArgument, "row signs must be +1 or -1");
        rows.push_back(Row{in.sign, in.op});
        n = in.op.num_qubits();
    }

    std::vector<std::size_t> active(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) active[i] = i;
    std::vector<std::size_t> pivot_rows;

    for (std::size_t col = 0; col < n && !active.empty(); ++col) {
        auto first_with = [&](int kind) -> std::optional<std::size_t> {
            for (std::size_t i : active)
                if (rows[i].op.kind(col) == kind) return i;
            return std::nullopt;
        };
        auto x_pivot = first_with(1);
        auto z_pivot = first_with(3);

        if (x_pivot)
            for (std::size_t i : active)
                if (i != *x_pivot && rows[i].op.kind(col) == 1) row_multiply(rows, i, *x_pivot);
        if (z_pivot)
            for (std::size_t i : active)
                if (i != *z_pivot && rows[i].op.kind(col) == 3) row_multiply(rows, i, *z_pivot);

        std::optional<std::size_t> y_pivot;
        if (x_pivot && z_pivot) {
            // clear every Y against the X and Z pivots
            for (std::size_t i : active)
                if (i != *x_pivot && i != *z_pivot && rows[i].op.kind(col) == 2) {
                    row_multiply(rows, i, *x_pivot);
                    row_multiply(rows, i, *z_pivot);
                }
        } else {
            y_pivot = first_with(2);
            if (y_pivot)
                for (std::size_t i : active)
                    if (i != *y_pivot && rows[i].op.kind(col) == 2) row_multiply(rows, i, *y_pivot);
        }

        // The surviving non-identity entries in this column are the pivots;
        // retire them in kind order X, Y, Z.
        std::vector<std::size_t> here;
        for (auto p : {x_pivot, y_pivot, z_pivot})
            if (p) here.push_back(*p);
        std::sort(here.begin(), here.end(), [&](std::size_t a, std::size_t b) {
            return rows[a].op.kind(col) < rows[b].op.kind(col);
        });
        for (std::size_t p : here) {
            pivot_rows.push_back(p);
            active.erase(std::find(active.begin(), active.end(), p));
        }
    }

    for (std::size_t i : active)
        if (!rows[i].op.is_identity())
            raise(ErrorCode::Internal, "non-identity row survived elimination: " + rows[i].op.label());

    ReductionResult result;
    result.generators.reserve(pivot_rows.size());
    for (std::size_t p : pivot_rows) result.generators.push_back(rows[p].op);

    GeneratorBasis basis(result.generators);
    result.expansions.reserve(input.size());
    for (const auto& in : input) {
        auto expansion = basis.expand(in.op);
        expansion.sign *= in.sign;
        result.expansions.push_back(std::move(expansion));
    }
    return result;
}

// ------------------------------ GF(2) basis ---------------------------------

GeneratorBasis::GeneratorBasis(const std::vector<PauliOp>& generators)
    : generators_(&generators) {
    if (generators.size() > 64)
        raise(ErrorCode::Limit, "generator sets above 64 elements are not supported");
    num_qubits_ = generators.empty() ? 0 : generators.front().num_qubits();
    word_count_ = (num_qubits_ + 63) / 64;
    auto sympvec = [&](const PauliOp& op) {
        std::vector<std::uint64_t> v(2 * word_count_, 0);
        for (std::size_t w = 0; w < op.x_words().size(); ++w) {
            v[w] = op.x_words()[w];
            v[word_count_ + w] = op.z_words()[w];
        }
        return v;
    };
    for (std::size_t j = 0; j < generators.size(); ++j) {
        auto v = sympvec(generators[j]);
        std::uint64_t combo = std::uint64_t(1) << j;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            // eliminate against the stored row's leading bit
            const auto& row = rows_[r];
            std::size_t pivot = 0;
            while (pivot < row.size() && row[pivot] == 0) ++pivot;
            if (pivot == row.size()) continue;
            std::uint64_t lead = row[pivot] & (~row[pivot] + 1);
            if (v[pivot] & lead) {
                for (std::size_t w = 0; w < v.size(); ++w) v[w] ^= row[w];
                combo ^= combos_[r];
            }
        }
        bool zero = std::all_of(v.begin(), v.end(), [](std::uint64_t w) { return w == 0; });
        if (zero)
            raise(ErrorCode::InvalidArgument,
                  "generator " + generators[j].label() + " is dependent on earlier generators");
        rows_.push_back(std::move(v));
        combos_.push_back(combo);
    }
}

std::optional<std::vector<std::size_t>> GeneratorBasis::solve(const PauliOp& op) const {
    if (generators_->empty()) {
        if (op.is_identity()) return std::vector<std::size_t>{};
        return std::nullopt;
    }
    if (op.num_qubits() != num_qubits_)
        raise(ErrorCode::Dimension, "operator width does not match the generator set");
    std::vector<std::uint64_t> v(2 * word_count_, 0);
    for (std::size_t w = 0; w < op.x_words().size() && w < word_count_; ++w) {
        v[w] = op.x_words()[w];
        v[word_count_ + w] = op.z_words()[w];
    }
    std::uint64_t combo = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        std::size_t pivot = 0;
        while (pivot < row.size() && row[pivot] == 0) ++pivot;
        if (pivot == row.size()) continue;
        std::uint64_t lead = row[pivot] & (~row[pivot] + 1);
        if (v[pivot] & lead) {
            for (std::size_t w = 0; w < v.size(); ++w) v[w] ^= row[w];
            combo ^= combos_[r];
        }
    }
    if (!std::all_of(v.begin(), v.end(), [](std::uint64_t w) { return w == 0; }))
        return std::nullopt;
    std::vector<std::size_t> indices;
    for (std::size_t j = 0; j < generators_->size(); ++j)
        if (combo & (std::uint64_t(1) << j)) indices.push_back(j);
    return indices;
}

GeneratorExpansion GeneratorBasis::expand(const PauliOp& op) const {
    auto indices = solve(op);
    if (!indices)
        raise(ErrorCode::InvalidArgument,
              op.label() + " is not a product of the generator set");
    PauliProduct acc{Phase::one(), PauliOp::identity(op.num_qubits())};
    for (std::size_t j : *indices) {
        auto step = multiply(acc.op, (*generators_)[j]);
        acc.phase = acc.phase * step.phase;
        acc.op = std::move(step.op);
    }
    if (!(acc.op == op) || !acc.phase.is_real())
        raise(ErrorCode::Internal, "generator expansion of " + op.label() + " is inconsistent");
    // prod G_j = phase * op, and the phase is +/-1, so op = phase * prod G_j.
    return GeneratorExpansion{acc.phase.sign(), std::move(*indices)};
}

bool verify_independent(const std::vector<PauliOp>& ops) {
    if (ops.empty()) return true;
    std::size_t word_count = (ops.front().num_qubits() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& op : ops) {
        std::vector<std::uint64_t> v(2 * word_count, 0);
        for (std::size_t w = 0; w < op.x_words().size(); ++w) {
            v[w] = op.x_words()[w];
            v[word_count + w] = op.z_words()[w];
        }
        for (const auto& row : rows) {
            std::size_t pivot = 0;
            while (pivot < row.size() && row[pivot] == 0) ++pivot;
            if (pivot == row.size()) continue;
            std::uint64_t lead = row[pivot] & (~row[pivot] + 1);
            if (v[pivot] & lead)
                for (std::size_t w = 0; w < v.size(); ++w) v[w] ^= row[w];
        }
        if (std::all_of(v.begin(), v.end(), [](std::uint64_t w) { return w == 0; }))
            return false;  // dependent row
        rows.push_back(std::move(v));
    }
    return true;
}

// --------------------------------- build_R ----------------------------------

namespace {

void validate_generator_set(const GeneratorSet& set, std::size_t num_qubits) {
    const auto& g = set.generators;
    const auto& reps = set.representatives;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (!commutes(g[i], g[j])) raise(ErrorCode::Internal, "generators do not commute");
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
            if (commutes(reps[i], reps[j]))
                raise(ErrorCode::Internal, "clique representatives must anticommute");
    for (const auto& gen : g)
        for (const auto& rep : reps)
            if (!commutes(gen, rep))
                raise(ErrorCode::Internal, "generators must commute with every representative");
    if (!verify_independent(g)) raise(ErrorCode::Internal, "generators are dependent");
    std::size_t limit = reps.empty() ? num_qubits : num_qubits - 1;
    if (g.size() > limit) raise(ErrorCode::Internal, "too many commuting generators");
    if (set.size() > 2 * num_qubits + 1)
        raise(ErrorCode::Internal, "generator set exceeds the 2n+1 bound");
}

}  // namespace

RConstruction build_R(const NoncontextualStructure& structure, const Hamiltonian& h) {
    auto gprime = build_gprime(structure);
    auto reduction = reduce_to_independent(gprime);

    RConstruction out;
    out.set.generators = std::move(reduction.generators);
    out.set.representatives = structure.representatives;
    validate_generator_set(out.set, h.num_qubits());

    GeneratorBasis basis(out.set.generators);

    // Locate every support operator inside the structure.
    std::map<std::string, std::pair<std::size_t, std::size_t>> member_of;  // label -> (clique, j)
    std::map<std::string, bool> universal;
    for (const auto& z : structure.universal) universal[z.label()] = true;
    for (std::size_t i = 0; i < structure.cliques.size(); ++i)
        for (std::size_t j = 0; j < structure.cliques[i].size(); ++j)
            member_of[structure.cliques[i][j].label()] = {i, j};

    out.decompositions.reserve(h.terms().size());
    for (const auto& term : h.terms()) {
        const PauliOp& op = term.op;
        TermDecomposition dec;
        if (universal.count(op.label())) {
            auto e = basis.expand(op);
            dec.sign = e.sign;
            dec.generator_indices = std::move(e.generator_indices);
        } else if (auto it = member_of.find(op.label()); it != member_of.end()) {
            auto [clique, j] = it->second;
            dec.clique_index = clique;
            if (j != 0) {
                auto product = multiply(op, structure.representatives[clique]);
                if (!product.phase.is_real())
                    raise(ErrorCode::Internal, "clique member anticommutes with its representative");
                auto e = basis.expand(product.op);
                dec.sign = product.phase.sign() * e.sign;
                dec.generator_indices = std::move(e.generator_indices);
            }
        } else {
            raise(ErrorCode::InvalidArgument,
                  "structure does not cover Hamiltonian term " + op.label());
        }

        // Bug trap: re-multiply the decomposition and insist on the exact term.
        PauliProduct acc{Phase::one(), PauliOp::identity(h.num_qubits())};
        for (std::size_t j : dec.generator_indices) {
            auto step = multiply(acc.op, out.set.generators[j]);
            acc.phase = acc.phase * step.phase;
            acc.op = std::move(step.op);
        }
        if (dec.clique_index) {
            auto step = multiply(acc.op, out.set.representatives[*dec.clique_index]);
            acc.phase = acc.phase * step.phase;
            acc.op = std::move(step.op);
        }
        bool ok = acc.op == op && acc.phase.is_real() && dec.sign * acc.phase.sign() == +1;
        if (!ok)
            raise(ErrorCode::Internal, "decomposition of " + op.label() + " fails to reconstruct");

        out.decompositions.push_back(std::move(dec));
    }
    return out;
}

}  // namespace qqsim

#include "qqsim.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "approx.hpp"
#include "error.hpp"
#include "generators.hpp"
#include "hamiltonian.hpp"
#include "model.hpp"
#include "oracle.hpp"
#include "solver.hpp"
#include "structure.hpp"

using namespace qqsim;

extern "C" {

struct qqsim_hamiltonian {
    Hamiltonian value;
};

struct qqsim_model {
    Hamiltonian h;
    NoncontextualStructure structure;
    RConstruction construction;
    ObjectiveFunction objective;
};

struct qqsim_result {
    GroundResult value;
};

struct qqsim_report {
    ApproximationReport value;
};

}  // extern "C"

namespace {

thread_local std::string g_last_error;

qqsim_status status_of(const Error& e) {
    switch (e.code()) {
        case ErrorCode::Parse: return QQSIM_ERR_PARSE;
        case ErrorCode::Dimension: return QQSIM_ERR_DIMENSION;
        case ErrorCode::InvalidArgument: return QQSIM_ERR_INVALID_ARGUMENT;
        case ErrorCode::Contextual: return QQSIM_ERR_CONTEXTUAL;
        case ErrorCode::Infeasible: return QQSIM_ERR_INFEASIBLE;
        case ErrorCode::Limit: return QQSIM_ERR_LIMIT;
        case ErrorCode::Internal: return QQSIM_ERR_INTERNAL;
    }
    return QQSIM_ERR_INTERNAL;
}

template <typename Fn>
qqsim_status guarded(Fn&& fn) {
    try {
        fn();
        return QQSIM_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QQSIM_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return QQSIM_ERR_INTERNAL;
    }
}

char* copy_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

qqsim_status invalid(const char* message) {
    g_last_error = message;
    return QQSIM_ERR_INVALID_ARGUMENT;
}

SolveOptions solve_options_of(const qqsim_solve_options* options) {
    SolveOptions out;
    if (options) {
        out.exhaustive_threshold = options->exhaustive_threshold;
        out.restarts = options->restarts;
        out.seed = options->seed;
        out.threads = options->threads == 0 ? 1 : options->threads;
    }
    return out;
}

EpistemicState state_of(const qqsim_model* m, const int* q, size_t q_len, const double* r,
                        size_t r_len) {
    if (q_len != m->objective.generator_count || r_len != m->objective.clique_count)
        raise(ErrorCode::Dimension,
              "witness has (" + std::to_string(q_len) + ", " + std::to_string(r_len) +
                  ") parameters, model expects (" + std::to_string(m->objective.generator_count) +
                  ", " + std::to_string(m->objective.clique_count) + ")");
    return EpistemicState::make(std::vector<int>(q, q + q_len),
                                std::vector<double>(r, r + r_len));
}

}  // namespace

extern "C" {

const char* qqsim_version(void) { return "1.0.0"; }

const char* qqsim_last_error(void) { return g_last_error.c_str(); }

void qqsim_string_free(char* text) { std::free(text); }

/* ----------------------------- hamiltonians ----------------------------- */

qqsim_status qqsim_hamiltonian_parse(const char* text, qqsim_hamiltonian** out) {
    if (!text || !out) return invalid("null argument");
    return guarded([&] { *out = new qqsim_hamiltonian{load_hamiltonian(text)}; });
}

qqsim_status qqsim_hamiltonian_load(const char* path, qqsim_hamiltonian** out) {
    if (!path || !out) return invalid("null argument");
    return guarded([&] { *out = new qqsim_hamiltonian{load_hamiltonian_file(path)}; });
}

void qqsim_hamiltonian_free(qqsim_hamiltonian* h) { delete h; }

qqsim_status qqsim_hamiltonian_serialize(const qqsim_hamiltonian* h, char** out) {
    if (!h || !out) return invalid("null argument");
    return guarded([&] { *out = copy_string(serialize_hamiltonian(h->value)); });
}

size_t qqsim_hamiltonian_num_qubits(const qqsim_hamiltonian* h) {
    return h ? h->value.num_qubits() : 0;
}

size_t qqsim_hamiltonian_term_count(const qqsim_hamiltonian* h) {
    return h ? h->value.term_count() : 0;
}

double qqsim_hamiltonian_identity_offset(const qqsim_hamiltonian* h) {
    return h ? h->value.identity_offset() : 0.0;
}

qqsim_status qqsim_random_noncontextual(size_t num_qubits, size_t cliques, size_t generators,
                                        uint64_t seed, qqsim_hamiltonian** out) {
    if (!out) return invalid("null argument");
    return guarded([&] {
        *out = new qqsim_hamiltonian{
            random_noncontextual_instance(num_qubits, cliques, generators, seed)};
    });
}

/* --------------------------- structure analysis -------------------------- */

qqsim_status qqsim_check_noncontextual(const qqsim_hamiltonian* h, int* noncontextual,
                                       char** certificate) {
    if (!h || !noncontextual) return invalid("null argument");
    return guarded([&] {
        auto cert = find_certificate(h->value.support());
        *noncontextual = cert ? 0 : 1;
        if (certificate) {
            *certificate = nullptr;
            if (cert)
                *certificate = copy_string(cert->a.label() + " " + cert->b.label() + " " +
                                           cert->c.label());
        }
    });
}

/* ------------------------------- the model ------------------------------- */

qqsim_status qqsim_model_build(const qqsim_hamiltonian* h, qqsim_model** out) {
    if (!h || !out) return invalid("null argument");
    return guarded([&] {
        auto m = std::make_unique<qqsim_model>();
        m->h = h->value;
        m->structure = build_structure(m->h.support());
        m->construction = build_R(m->structure, m->h);
        m->objective = compile_objective(m->h, m->construction);
        *out = m.release();
    });
}

void qqsim_model_free(qqsim_model* m) { delete m; }

size_t qqsim_model_generator_count(const qqsim_model* m) {
    return m ? m->construction.set.generators.size() : 0;
}

size_t qqsim_model_clique_count(const qqsim_model* m) {
    return m ? m->construction.set.representatives.size() : 0;
}

qqsim_status qqsim_model_generator_label(const qqsim_model* m, size_t index, char** out) {
    if (!m || !out) return invalid("null argument");
    if (index >= m->construction.set.generators.size())
        return invalid("generator index out of range");
    return guarded([&] { *out = copy_string(m->construction.set.generators[index].label()); });
}

qqsim_status qqsim_model_representative_label(const qqsim_model* m, size_t index, char** out) {
    if (!m || !out) return invalid("null argument");
    if (index >= m->construction.set.representatives.size())
        return invalid("representative index out of range");
    return guarded([&] { *out = copy_string(m->construction.set.representatives[index].label()); });
}

size_t qqsim_model_term_count(const qqsim_model* m) { return m ? m->h.terms().size() : 0; }

qqsim_status qqsim_model_term_label(const qqsim_model* m, size_t term, char** out) {
    if (!m || !out) return invalid("null argument");
    if (term >= m->h.terms().size()) return invalid("term index out of range");
    return guarded([&] { *out = copy_string(m->h.terms()[term].op.label()); });
}

qqsim_status qqsim_model_term_decomposition(const qqsim_model* m, size_t term, int* sign,
                                            size_t* indices, size_t capacity, size_t* count,
                                            int* clique) {
    if (!m || !sign || !count || !clique) return invalid("null argument");
    if (term >= m->construction.decompositions.size()) return invalid("term index out of range");
    const auto& dec = m->construction.decompositions[term];
    *sign = dec.sign;
    *count = dec.generator_indices.size();
    *clique = dec.clique_index ? int(*dec.clique_index) : -1;
    if (dec.generator_indices.size() > capacity) return QQSIM_ERR_BUFFER;
    for (size_t i = 0; i < dec.generator_indices.size(); ++i) indices[i] = dec.generator_indices[i];
    return QQSIM_OK;
}

qqsim_status qqsim_model_objective_text(const qqsim_model* m, char** out) {
    if (!m || !out) return invalid("null argument");
    return guarded([&] {
        std::string text = "constant " + format_double(m->objective.constant) + "\n";
        for (const auto& row : m->objective.rows) {
            std::string product;
            for (size_t j : row.generator_indices) {
                if (!product.empty()) product += "*";
                product += m->construction.set.generators[j].label();
            }
            if (product.empty()) product = "1";
            text += "row " + product + " coefficient " + format_double(row.coefficient);
            for (size_t i = 0; i < row.clique_coefficients.size(); ++i)
                text += " " + m->construction.set.representatives[i].label() + " " +
                        format_double(row.clique_coefficients[i]);
            text += "\n";
        }
        *out = copy_string(text);
    });
}

qqsim_status qqsim_model_joint_distribution(const qqsim_model* m, const int* q, size_t q_len,
                                            const double* r, size_t r_len, double* probabilities,
                                            size_t capacity, size_t* count) {
    if (!m || !count || (q_len && !q) || (r_len && !r)) return invalid("null argument");
    qqsim_status buffer_status = QQSIM_OK;
    auto status = guarded([&] {
        auto state = state_of(m, q, q_len, r, r_len);
        auto table = joint_distribution(state);
        *count = table.probabilities.size();
        if (table.probabilities.size() > capacity) {
            buffer_status = QQSIM_ERR_BUFFER;
            return;
        }
        for (size_t i = 0; i < table.probabilities.size(); ++i)
            probabilities[i] = table.probabilities[i];
    });
    return status != QQSIM_OK ? status : buffer_status;
}

/* -------------------------------- solving -------------------------------- */

void qqsim_solve_options_init(qqsim_solve_options* options) {
    if (!options) return;
    options->exhaustive_threshold = 22;
    options->restarts = 64;
    options->seed = 0;
    options->threads = 1;
}

qqsim_status qqsim_solve(const qqsim_model* m, const qqsim_solve_options* options,
                         qqsim_result** out) {
    if (!m || !out) return invalid("null argument");
    return guarded([&] {
        *out = new qqsim_result{solve_ground(m->objective, solve_options_of(options))};
    });
}

void qqsim_result_free(qqsim_result* r) { delete r; }

double qqsim_result_energy(const qqsim_result* r) { return r ? r->value.energy : 0.0; }

const char* qqsim_result_method(const qqsim_result* r) {
    if (!r) return "";
    return r->value.method == SolveMethod::Exhaustive ? "exhaustive" : "local-search";
}

uint64_t qqsim_result_evaluations(const qqsim_result* r) { return r ? r->value.q_evaluations : 0; }

size_t qqsim_result_q(const qqsim_result* r, int* out, size_t capacity) {
    if (!r) return 0;
    const auto& q = r->value.witness.q();
    for (size_t i = 0; i < q.size() && i < capacity; ++i) out[i] = q[i];
    return q.size();
}

size_t qqsim_result_r(const qqsim_result* r, double* out, size_t capacity) {
    if (!r) return 0;
    const auto& values = r->value.witness.r();
    for (size_t i = 0; i < values.size() && i < capacity; ++i) out[i] = values[i];
    return values.size();
}

qqsim_status qqsim_verify(const qqsim_model* m, const int* q, size_t q_len, const double* r,
                          size_t r_len, double threshold, int* verified) {
    if (!m || !verified || (q_len && !q) || (r_len && !r)) return invalid("null argument");
    return guarded([&] {
        auto state = state_of(m, q, q_len, r, r_len);
        *verified = verify_witness(m->objective, state, threshold) ? 1 : 0;
    });
}

/* ----------------------------- exact reference --------------------------- */

qqsim_status qqsim_oracle_ground_energy(const qqsim_hamiltonian* h, size_t max_qubits,
                                        double* out) {
    if (!h || !out) return invalid("null argument");
    return guarded(
        [&] { *out = ground_energy(h->value, max_qubits ? max_qubits : kDefaultOracleQubits); });
}

qqsim_status qqsim_oracle_expectations(const qqsim_hamiltonian* h, const char* const* labels,
                                       size_t count, size_t max_qubits, double* out) {
    if (!h || (!labels && count) || (!out && count)) return invalid("null argument");
    return guarded([&] {
        std::vector<PauliOp> ops;
        ops.reserve(count);
        for (size_t i = 0; i < count; ++i) ops.push_back(PauliOp::parse(labels[i]));
        auto values =
            ground_expectations(h->value, ops, max_qubits ? max_qubits : kDefaultOracleQubits);
        for (size_t i = 0; i < values.size(); ++i) out[i] = values[i];
    });
}

/* ----------------------- noncontextual approximation --------------------- */

qqsim_status qqsim_greedy_noncontextual(const qqsim_hamiltonian* h, size_t batch,
                                        qqsim_hamiltonian** out) {
    if (!h || !out) return invalid("null argument");
    return guarded([&] {
        GreedyOptions options;
        options.batch = batch == 0 ? 1 : batch;
        *out = new qqsim_hamiltonian{greedy_noncontextual(h->value, options)};
    });
}

qqsim_status qqsim_diagonal_subset(const qqsim_hamiltonian* h, qqsim_hamiltonian** out) {
    if (!h || !out) return invalid("null argument");
    return guarded([&] { *out = new qqsim_hamiltonian{diagonal_subset(h->value)}; });
}

void qqsim_report_options_init(qqsim_report_options* options) {
    if (!options) return;
    options->chem_accuracy = 0.0016;
    options->batch = 1;
    options->brute_force = 0;
    options->oracle_max_qubits = kDefaultOracleQubits;
    qqsim_solve_options_init(&options->solve);
}

qqsim_status qqsim_report_run(const qqsim_hamiltonian* h, const qqsim_report_options* options,
                              qqsim_report** out) {
    if (!h || !out) return invalid("null argument");
    return guarded([&] {
        ReportOptions opts;
        if (options) {
            opts.chem_accuracy = options->chem_accuracy;
            opts.batch = options->batch == 0 ? 1 : options->batch;
            opts.brute_force = options->brute_force != 0;
            opts.oracle_max_qubits =
                options->oracle_max_qubits ? options->oracle_max_qubits : kDefaultOracleQubits;
            opts.solve = solve_options_of(&options->solve);
        }
        *out = new qqsim_report{approximation_report(h->value, opts)};
    });
}

void qqsim_report_free(qqsim_report* r) { delete r; }

double qqsim_report_full_ground(const qqsim_report* r) { return r ? r->value.full_ground : 0.0; }
double qqsim_report_noncon_ground(const qqsim_report* r) {
    return r ? r->value.noncon_ground : 0.0;
}
double qqsim_report_diag_ground(const qqsim_report* r) { return r ? r->value.diag_ground : 0.0; }
double qqsim_report_eps_noncon(const qqsim_report* r) { return r ? r->value.eps_noncon : 0.0; }
double qqsim_report_eps_diag(const qqsim_report* r) { return r ? r->value.eps_diag : 0.0; }

void qqsim_report_sizes(const qqsim_report* r, size_t* full_size, size_t* noncon_size,
                        size_t* generator_set_size) {
    if (!r) return;
    if (full_size) *full_size = r->value.full_size;
    if (noncon_size) *noncon_size = r->value.noncon_size;
    if (generator_set_size) *generator_set_size = r->value.generator_set_size;
}

qqsim_status qqsim_report_kept(const qqsim_report* r, char** out) {
    if (!r || !out) return invalid("null argument");
    return guarded([&] { *out = copy_string(serialize_hamiltonian(r->value.kept)); });
}

}  // extern "C"

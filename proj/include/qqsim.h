/* qqsim - classical simulation of noncontextual Pauli Hamiltonians.
 *
 * C interface to the core library: opaque handles, integer status codes,
 * strings allocated by the library and released with qqsim_string_free.
 * All functions are thread-safe on distinct handles; the error message is
 * kept per thread.
 */

#ifndef QQSIM_H
#define QQSIM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QQSIM_API __declspec(dllexport)
#else
#define QQSIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qqsim_status {
    QQSIM_OK = 0,
    QQSIM_ERR_PARSE = 1,            /* malformed text or Pauli label */
    QQSIM_ERR_DIMENSION = 2,        /* mismatched qubit counts or lengths */
    QQSIM_ERR_INVALID_ARGUMENT = 3, /* contract violation by the caller */
    QQSIM_ERR_CONTEXTUAL = 4,       /* operator set is contextual */
    QQSIM_ERR_INFEASIBLE = 5,       /* requested random instance cannot exist */
    QQSIM_ERR_LIMIT = 6,            /* size guard exceeded */
    QQSIM_ERR_INTERNAL = 7,         /* consistency trap; indicates a bug */
    QQSIM_ERR_BUFFER = 8            /* caller buffer too small */
} qqsim_status;

typedef struct qqsim_hamiltonian qqsim_hamiltonian;
typedef struct qqsim_model qqsim_model; /* structure + generators + objective */
typedef struct qqsim_result qqsim_result;
typedef struct qqsim_report qqsim_report;

QQSIM_API const char* qqsim_version(void);

/* Message describing the most recent failure on this thread. */
QQSIM_API const char* qqsim_last_error(void);

QQSIM_API void qqsim_string_free(char* text);

/* ----------------------------- hamiltonians ----------------------------- */

/* Text format: {"IZ": -0.39863, "XX": 0.099524, ...}. */
QQSIM_API qqsim_status qqsim_hamiltonian_parse(const char* text, qqsim_hamiltonian** out);
QQSIM_API qqsim_status qqsim_hamiltonian_load(const char* path, qqsim_hamiltonian** out);
QQSIM_API void qqsim_hamiltonian_free(qqsim_hamiltonian* h);
QQSIM_API qqsim_status qqsim_hamiltonian_serialize(const qqsim_hamiltonian* h, char** out);
QQSIM_API size_t qqsim_hamiltonian_num_qubits(const qqsim_hamiltonian* h);
/* Number of entries in the source map, identity included when present. */
QQSIM_API size_t qqsim_hamiltonian_term_count(const qqsim_hamiltonian* h);
QQSIM_API double qqsim_hamiltonian_identity_offset(const qqsim_hamiltonian* h);

/* A seeded random Hamiltonian whose support is noncontextual with the given
 * clique and universal-generator counts. */
QQSIM_API qqsim_status qqsim_random_noncontextual(size_t num_qubits, size_t cliques,
                                                  size_t generators, uint64_t seed,
                                                  qqsim_hamiltonian** out);

/* --------------------------- structure analysis -------------------------- */

/* noncontextual is set to 1 or 0. When contextual and certificate is not
 * NULL, *certificate receives the violating triple as "A B C". */
QQSIM_API qqsim_status qqsim_check_noncontextual(const qqsim_hamiltonian* h, int* noncontextual,
                                                 char** certificate);

/* ------------------------------- the model ------------------------------- */

/* Builds the clique structure, the independent generator set, every term's
 * signed decomposition, and the compiled objective. Fails with
 * QQSIM_ERR_CONTEXTUAL on contextual input. */
QQSIM_API qqsim_status qqsim_model_build(const qqsim_hamiltonian* h, qqsim_model** out);
QQSIM_API void qqsim_model_free(qqsim_model* m);

QQSIM_API size_t qqsim_model_generator_count(const qqsim_model* m);
QQSIM_API size_t qqsim_model_clique_count(const qqsim_model* m);
QQSIM_API qqsim_status qqsim_model_generator_label(const qqsim_model* m, size_t index, char** out);
QQSIM_API qqsim_status qqsim_model_representative_label(const qqsim_model* m, size_t index,
                                                        char** out);

/* Non-identity terms, in the Hamiltonian's stored order. */
QQSIM_API size_t qqsim_model_term_count(const qqsim_model* m);
QQSIM_API qqsim_status qqsim_model_term_label(const qqsim_model* m, size_t term, char** out);

/* term = sign * prod generators[indices] * (representative[clique] if
 * clique >= 0). indices receives up to capacity entries; *count is the true
 * number (QQSIM_ERR_BUFFER when capacity is too small). */
QQSIM_API qqsim_status qqsim_model_term_decomposition(const qqsim_model* m, size_t term, int* sign,
                                                      size_t* indices, size_t capacity,
                                                      size_t* count, int* clique);

/* Machine-readable dump of the compiled objective, one record per line. */
QQSIM_API qqsim_status qqsim_model_objective_text(const qqsim_model* m, char** out);

/* Joint distribution over ontic states for the state (q, r): probabilities
 * for all 2^(cliques+generators) assignments; index bit b set means
 * coordinate b is -1, clique coordinates first. Guarded at 24 coordinates. */
QQSIM_API qqsim_status qqsim_model_joint_distribution(const qqsim_model* m, const int* q,
                                                      size_t q_len, const double* r, size_t r_len,
                                                      double* probabilities, size_t capacity,
                                                      size_t* count);

/* -------------------------------- solving -------------------------------- */

typedef struct qqsim_solve_options {
    size_t exhaustive_threshold; /* enumerate up to 2^threshold assignments */
    size_t restarts;             /* local-search restarts beyond the threshold */
    uint64_t seed;
    unsigned threads;
} qqsim_solve_options;

QQSIM_API void qqsim_solve_options_init(qqsim_solve_options* options);

QQSIM_API qqsim_status qqsim_solve(const qqsim_model* m, const qqsim_solve_options* options,
                                   qqsim_result** out);
QQSIM_API void qqsim_result_free(qqsim_result* r);
QQSIM_API double qqsim_result_energy(const qqsim_result* r);
QQSIM_API const char* qqsim_result_method(const qqsim_result* r); /* static string */
QQSIM_API uint64_t qqsim_result_evaluations(const qqsim_result* r);
/* Returns the parameter count; fills up to capacity entries. */
QQSIM_API size_t qqsim_result_q(const qqsim_result* r, int* out, size_t capacity);
QQSIM_API size_t qqsim_result_r(const qqsim_result* r, double* out, size_t capacity);

/* verified is set to 1 iff the state's energy lies strictly below the
 * threshold. q and r follow the model's generator and clique order. */
QQSIM_API qqsim_status qqsim_verify(const qqsim_model* m, const int* q, size_t q_len,
                                    const double* r, size_t r_len, double threshold,
                                    int* verified);

/* ----------------------------- exact reference --------------------------- */

/* Dense diagonalization; max_qubits = 0 selects the default cap (12). */
QQSIM_API qqsim_status qqsim_oracle_ground_energy(const qqsim_hamiltonian* h, size_t max_qubits,
                                                  double* out);
/* Ground-state expectation of each labelled Pauli string. */
QQSIM_API qqsim_status qqsim_oracle_expectations(const qqsim_hamiltonian* h,
                                                 const char* const* labels, size_t count,
                                                 size_t max_qubits, double* out);

/* ----------------------- noncontextual approximation --------------------- */

QQSIM_API qqsim_status qqsim_greedy_noncontextual(const qqsim_hamiltonian* h, size_t batch,
                                                  qqsim_hamiltonian** out);
QQSIM_API qqsim_status qqsim_diagonal_subset(const qqsim_hamiltonian* h, qqsim_hamiltonian** out);

typedef struct qqsim_report_options {
    double chem_accuracy; /* error unit, default 0.0016 */
    size_t batch;
    int brute_force; /* exhaustive sub-support search, capped at 16 terms */
    size_t oracle_max_qubits;
    qqsim_solve_options solve;
} qqsim_report_options;

QQSIM_API void qqsim_report_options_init(qqsim_report_options* options);

QQSIM_API qqsim_status qqsim_report_run(const qqsim_hamiltonian* h,
                                        const qqsim_report_options* options, qqsim_report** out);
QQSIM_API void qqsim_report_free(qqsim_report* r);
QQSIM_API double qqsim_report_full_ground(const qqsim_report* r);
QQSIM_API double qqsim_report_noncon_ground(const qqsim_report* r);
QQSIM_API double qqsim_report_diag_ground(const qqsim_report* r);
QQSIM_API double qqsim_report_eps_noncon(const qqsim_report* r);
QQSIM_API double qqsim_report_eps_diag(const qqsim_report* r);
QQSIM_API void qqsim_report_sizes(const qqsim_report* r, size_t* full_size, size_t* noncon_size,
                                  size_t* generator_set_size);
/* The kept noncontextual sub-Hamiltonian, serialized in the text format. */
QQSIM_API qqsim_status qqsim_report_kept(const qqsim_report* r, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QQSIM_H */

// Command-line front end. Everything goes through the public C API in
// qqsim.h; exit status 0 = success, 1 = domain negative (contextual input,
// failed verification), 2 = input or usage error.

#include <qqsim.h>

#include <CLI11.hpp>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitError = 2;

std::string fmt(double value) {
    char buf[32];
    auto result = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, result.ptr);
}

struct StringHolder {
    char* text = nullptr;
    ~StringHolder() { qqsim_string_free(text); }
    std::string str() const { return text ? text : ""; }
};

[[noreturn]] void bail(qqsim_status status) {
    std::cerr << "error: " << qqsim_last_error() << "\n";
    std::exit(status == QQSIM_ERR_CONTEXTUAL ? kExitDomain : kExitError);
}

void require_ok(qqsim_status status) {
    if (status != QQSIM_OK) bail(status);
}

using HamiltonianPtr = std::unique_ptr<qqsim_hamiltonian, decltype(&qqsim_hamiltonian_free)>;
using ModelPtr = std::unique_ptr<qqsim_model, decltype(&qqsim_model_free)>;
using ResultPtr = std::unique_ptr<qqsim_result, decltype(&qqsim_result_free)>;
using ReportPtr = std::unique_ptr<qqsim_report, decltype(&qqsim_report_free)>;

HamiltonianPtr read_input(const std::string& path) {
    qqsim_hamiltonian* h = nullptr;
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        require_ok(qqsim_hamiltonian_parse(buffer.str().c_str(), &h));
    } else {
        require_ok(qqsim_hamiltonian_load(path.c_str(), &h));
    }
    return HamiltonianPtr(h, qqsim_hamiltonian_free);
}

ModelPtr build_model(const qqsim_hamiltonian* h) {
    qqsim_model* m = nullptr;
    require_ok(qqsim_model_build(h, &m));
    return ModelPtr(m, qqsim_model_free);
}

std::string label_of_generator(const qqsim_model* m, size_t index) {
    StringHolder s;
    require_ok(qqsim_model_generator_label(m, index, &s.text));
    return s.str();
}

std::string label_of_representative(const qqsim_model* m, size_t index) {
    StringHolder s;
    require_ok(qqsim_model_representative_label(m, index, &s.text));
    return s.str();
}

unsigned default_threads() {
    if (const char* env = std::getenv("QQSIM_THREADS")) {
        unsigned value = unsigned(std::strtoul(env, nullptr, 10));
        if (value > 0) return value;
    }
    return 1;
}

std::vector<int> parse_signs(const std::string& text) {
    std::vector<int> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item == "+1" || item == "1")
            out.push_back(+1);
        else if (item == "-1")
            out.push_back(-1);
        else {
            std::cerr << "error: q entries must be +1 or -1, got '" << item << "'\n";
            std::exit(kExitError);
        }
    }
    return out;
}

std::vector<double> parse_reals(const std::string& text) {
    std::vector<double> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (...) {
            std::cerr << "error: r entries must be numbers, got '" << item << "'\n";
            std::exit(kExitError);
        }
    }
    return out;
}

struct Witness {
    std::vector<int> q;
    std::vector<double> r;
};

Witness witness_of(const qqsim_result* result) {
    Witness w;
    w.q.resize(qqsim_result_q(result, nullptr, 0));
    qqsim_result_q(result, w.q.data(), w.q.size());
    w.r.resize(qqsim_result_r(result, nullptr, 0));
    qqsim_result_r(result, w.r.data(), w.r.size());
    return w;
}

std::string q_map(const qqsim_model* m, const std::vector<int>& q) {
    std::string out = "{";
    for (size_t j = 0; j < q.size(); ++j) {
        if (j) out += ", ";
        out += "\"" + label_of_generator(m, j) + "\": " + (q[j] > 0 ? "1" : "-1");
    }
    return out + "}";
}

std::string r_map(const qqsim_model* m, const std::vector<double>& r) {
    std::string out = "{";
    for (size_t i = 0; i < r.size(); ++i) {
        if (i) out += ", ";
        out += "\"" + label_of_representative(m, i) + "\": " + fmt(r[i]);
    }
    return out + "}";
}

// ------------------------------- subcommands --------------------------------

int run_check(const std::string& input, bool machine) {
    auto h = read_input(input);
    int noncontextual = 0;
    StringHolder certificate;
    require_ok(qqsim_check_noncontextual(h.get(), &noncontextual, &certificate.text));
    if (machine) {
        std::cout << "noncontextual " << noncontextual << "\n";
        if (!noncontextual) std::cout << "certificate " << certificate.str() << "\n";
    } else if (noncontextual) {
        std::cout << "noncontextual\n";
    } else {
        std::cout << "contextual; violating triple: " << certificate.str() << "\n";
    }
    return noncontextual ? 0 : kExitDomain;
}

int run_generators(const std::string& input, bool machine) {
    auto h = read_input(input);
    auto m = build_model(h.get());
    const size_t generators = qqsim_model_generator_count(m.get());
    const size_t cliques = qqsim_model_clique_count(m.get());
    for (size_t j = 0; j < generators; ++j)
        std::cout << (machine ? "generator " : "G: ") << label_of_generator(m.get(), j) << "\n";
    for (size_t i = 0; i < cliques; ++i)
        std::cout << (machine ? "representative " : "C: ") << label_of_representative(m.get(), i)
                  << "\n";
    const size_t terms = qqsim_model_term_count(m.get());
    std::vector<size_t> indices(generators);
    for (size_t t = 0; t < terms; ++t) {
        StringHolder label;
        require_ok(qqsim_model_term_label(m.get(), t, &label.text));
        int sign = 0, clique = -1;
        size_t count = 0;
        require_ok(qqsim_model_term_decomposition(m.get(), t, &sign, indices.data(),
                                                  indices.size(), &count, &clique));
        std::string product;
        for (size_t k = 0; k < count; ++k) {
            if (!product.empty()) product += " * ";
            product += label_of_generator(m.get(), indices[k]);
        }
        if (clique >= 0) {
            if (!product.empty()) product += " * ";
            product += label_of_representative(m.get(), size_t(clique));
        }
        if (product.empty()) product = "1";
        std::cout << (machine ? "term " : "") << label.str() << " = "
                  << (sign > 0 ? "+1" : "-1") << " * " << product << "\n";
    }
    return 0;
}

int run_model(const std::string& input, bool machine, const std::string& q_text,
              const std::string& r_text) {
    auto h = read_input(input);
    auto m = build_model(h.get());
    StringHolder objective;
    require_ok(qqsim_model_objective_text(m.get(), &objective.text));
    std::cout << objective.str();
    if (q_text.empty() && r_text.empty()) return 0;

    auto q = parse_signs(q_text);
    auto r = parse_reals(r_text);
    size_t count = 0;
    qqsim_status probe = qqsim_model_joint_distribution(m.get(), q.data(), q.size(), r.data(),
                                                        r.size(), nullptr, 0, &count);
    if (probe != QQSIM_ERR_BUFFER && probe != QQSIM_OK) bail(probe);
    std::vector<double> probabilities(count);
    require_ok(qqsim_model_joint_distribution(m.get(), q.data(), q.size(), r.data(), r.size(),
                                              probabilities.data(), probabilities.size(), &count));
    const size_t cliques = qqsim_model_clique_count(m.get());
    const size_t generators = qqsim_model_generator_count(m.get());
    for (size_t index = 0; index < probabilities.size(); ++index) {
        std::string assignment;
        for (size_t c = 0; c < cliques + generators; ++c) {
            if (c) assignment += ",";
            assignment += ((index >> c) & 1) ? "-1" : "+1";
        }
        std::cout << (machine ? "p " : "P(") << assignment << (machine ? " " : ") = ")
                  << fmt(probabilities[index]) << "\n";
    }
    return 0;
}

int run_solve(const std::string& input, bool machine, const qqsim_solve_options& options) {
    auto h = read_input(input);
    auto m = build_model(h.get());
    qqsim_result* raw = nullptr;
    require_ok(qqsim_solve(m.get(), &options, &raw));
    ResultPtr result(raw, qqsim_result_free);
    auto w = witness_of(result.get());
    if (machine) {
        std::cout << "energy " << fmt(qqsim_result_energy(result.get())) << "\n"
                  << "method " << qqsim_result_method(result.get()) << "\n"
                  << "evaluations " << qqsim_result_evaluations(result.get()) << "\n"
                  << "q " << q_map(m.get(), w.q) << "\n"
                  << "r " << r_map(m.get(), w.r) << "\n";
    } else {
        std::cout << "ground energy: " << fmt(qqsim_result_energy(result.get())) << "\n"
                  << "method: " << qqsim_result_method(result.get()) << " ("
                  << qqsim_result_evaluations(result.get()) << " assignments examined)\n";
        for (size_t j = 0; j < w.q.size(); ++j)
            std::cout << "  <" << label_of_generator(m.get(), j) << "> = "
                      << (w.q[j] > 0 ? "+1" : "-1") << "\n";
        for (size_t i = 0; i < w.r.size(); ++i)
            std::cout << "  <" << label_of_representative(m.get(), i) << "> = " << fmt(w.r[i])
                      << "\n";
    }
    return 0;
}

int run_verify(const std::string& input, const std::string& q_text, const std::string& r_text,
               double threshold) {
    auto h = read_input(input);
    auto m = build_model(h.get());
    auto q = parse_signs(q_text);
    auto r = parse_reals(r_text);
    int verified = 0;
    require_ok(qqsim_verify(m.get(), q.data(), q.size(), r.data(), r.size(), threshold, &verified));
    std::cout << (verified ? "verified: energy below " : "not verified: energy not below ")
              << fmt(threshold) << "\n";
    return verified ? 0 : kExitDomain;
}

int run_oracle(const std::string& input, bool machine, const std::string& expect,
               size_t max_qubits) {
    auto h = read_input(input);
    double energy = 0.0;
    require_ok(qqsim_oracle_ground_energy(h.get(), max_qubits, &energy));
    std::cout << (machine ? "ground_energy " : "ground energy: ") << fmt(energy) << "\n";
    if (!expect.empty()) {
        std::vector<std::string> labels;
        std::stringstream stream(expect);
        std::string item;
        while (std::getline(stream, item, ',')) labels.push_back(item);
        std::vector<const char*> raw;
        for (const auto& l : labels) raw.push_back(l.c_str());
        std::vector<double> values(labels.size());
        require_ok(qqsim_oracle_expectations(h.get(), raw.data(), raw.size(), max_qubits,
                                             values.data()));
        if (machine) {
            std::cout << "expectations {";
            for (size_t i = 0; i < labels.size(); ++i)
                std::cout << (i ? ", " : "") << "\"" << labels[i] << "\": " << fmt(values[i]);
            std::cout << "}\n";
        } else {
            for (size_t i = 0; i < labels.size(); ++i)
                std::cout << "  <" << labels[i] << "> = " << fmt(values[i]) << "\n";
        }
    }
    return 0;
}

void print_report(const qqsim_report* report, const std::string& name, bool machine) {
    size_t full_size = 0, noncon_size = 0, r_size = 0;
    qqsim_report_sizes(report, &full_size, &noncon_size, &r_size);
    if (machine) {
        if (!name.empty()) std::cout << "system " << name << "\n";
        std::cout << "full_ground " << fmt(qqsim_report_full_ground(report)) << "\n"
                  << "noncon_ground " << fmt(qqsim_report_noncon_ground(report)) << "\n"
                  << "diag_ground " << fmt(qqsim_report_diag_ground(report)) << "\n"
                  << "eps_noncon " << fmt(qqsim_report_eps_noncon(report)) << "\n"
                  << "eps_diag " << fmt(qqsim_report_eps_diag(report)) << "\n"
                  << "full_size " << full_size << "\n"
                  << "noncon_size " << noncon_size << "\n"
                  << "generator_set_size " << r_size << "\n";
        StringHolder kept;
        require_ok(qqsim_report_kept(report, &kept.text));
        std::cout << "kept " << kept.str() << "\n";
    } else {
        if (!name.empty()) std::cout << name << ":\n";
        std::printf("  ground energies: full %.9f, noncontextual %.9f, diagonal %.9f\n",
                    qqsim_report_full_ground(report), qqsim_report_noncon_ground(report),
                    qqsim_report_diag_ground(report));
        std::printf("  errors (chemical-accuracy units): noncontextual %.3f, diagonal %.3f\n",
                    qqsim_report_eps_noncon(report), qqsim_report_eps_diag(report));
        std::printf("  sizes: |full| = %zu, |kept| = %zu, |generator set| = %zu\n", full_size,
                    noncon_size, r_size);
    }
}

int run_approx(const std::string& input, bool machine, const qqsim_report_options& options) {
    auto h = read_input(input);
    qqsim_report* raw = nullptr;
    require_ok(qqsim_report_run(h.get(), &options, &raw));
    ReportPtr report(raw, qqsim_report_free);
    print_report(report.get(), "", machine);
    return 0;
}

int run_report(const std::string& fixtures, bool machine, const qqsim_report_options& options) {
    struct System {
        const char* file;
        const char* name;
    };
    const System systems[] = {
        {"heh+_full", "HeH+ (2 qubits)"},
        {"lih_hempel_full", "LiH (3 qubits)"},
        {"lih_kandala_full", "LiH (4 qubits)"},
        {"beh2_full", "BeH2 (6 qubits)"},
    };
    if (!machine)
        std::printf("%-18s %6s %8s %5s %12s %10s\n", "system", "|full|", "|noncon|", "|R|",
                    "eps_noncon", "eps_diag");
    for (const auto& system : systems) {
        std::string path = fixtures + "/" + system.file;
        qqsim_hamiltonian* h = nullptr;
        require_ok(qqsim_hamiltonian_load(path.c_str(), &h));
        HamiltonianPtr holder(h, qqsim_hamiltonian_free);
        qqsim_report* raw = nullptr;
        require_ok(qqsim_report_run(h, &options, &raw));
        ReportPtr report(raw, qqsim_report_free);
        if (machine) {
            print_report(report.get(), system.file, true);
        } else {
            size_t full_size = 0, noncon_size = 0, r_size = 0;
            qqsim_report_sizes(report.get(), &full_size, &noncon_size, &r_size);
            std::printf("%-18s %6zu %8zu %5zu %12.2f %10.2f\n", system.name, full_size,
                        noncon_size, r_size, qqsim_report_eps_noncon(report.get()),
                        qqsim_report_eps_diag(report.get()));
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"classical simulation of noncontextual Pauli Hamiltonians"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(qqsim_version()));

    std::string input = "-";
    std::string format = "text";
    std::string q_text, r_text, expect, fixtures = "fixtures";
    double below = 0.0;
    qqsim_solve_options solve_options;
    qqsim_solve_options_init(&solve_options);
    solve_options.threads = default_threads();
    qqsim_report_options report_options;
    qqsim_report_options_init(&report_options);

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "Hamiltonian file, or - for standard input");
        cmd->add_option("--format", format, "output format: text or machine")
            ->check(CLI::IsMember({"text", "machine"}));
    };

    auto* check = app.add_subcommand("check", "decide noncontextuality (exit 1 if contextual)");
    add_input(check);

    auto* generators =
        app.add_subcommand("generators", "print the generator set and every term's decomposition");
    add_input(generators);

    auto* model = app.add_subcommand("model", "dump the compiled objective (and a joint table)");
    add_input(model);
    model->add_option("--q", q_text, "comma-separated +1/-1 generator values");
    model->add_option("--r", r_text, "comma-separated clique expectations (unit vector)");

    auto* solve = app.add_subcommand("solve", "minimize over the classical state space");
    add_input(solve);
    solve->add_option("--seed", solve_options.seed, "search seed");
    solve->add_option("--threads", solve_options.threads, "worker threads");
    solve->add_option("--exhaustive-threshold", solve_options.exhaustive_threshold,
                      "enumerate exactly up to this many generators");
    solve->add_option("--restarts", solve_options.restarts, "local-search restarts");

    auto* verify = app.add_subcommand("verify", "check a witness against a threshold");
    add_input(verify);
    verify->add_option("--q", q_text, "comma-separated +1/-1 generator values")->required();
    verify->add_option("--r", r_text, "comma-separated clique expectations");
    verify->add_option("--below", below, "energy threshold")->required();

    auto* oracle = app.add_subcommand("oracle", "dense exact diagonalization");
    add_input(oracle);
    oracle->add_option("--expect", expect, "comma-separated Pauli labels to evaluate");
    oracle->add_option("--oracle-max-qubits", report_options.oracle_max_qubits,
                       "dense-matrix size cap");

    auto* approx = app.add_subcommand("approx", "noncontextual approximation report");
    add_input(approx);
    approx->add_option("--batch", report_options.batch, "terms per greedy step");
    approx->add_flag("--brute-force", "search all sub-supports (max 16 terms)");
    approx->add_option("--chem-accuracy", report_options.chem_accuracy, "error unit in Hartree");
    approx->add_option("--oracle-max-qubits", report_options.oracle_max_qubits,
                       "dense-matrix size cap");
    approx->add_option("--seed", report_options.solve.seed, "search seed");
    approx->add_option("--threads", report_options.solve.threads, "worker threads");

    auto* report = app.add_subcommand("report", "comparison table over the bundled systems");
    report->add_option("--fixtures", fixtures, "directory with the bundled Hamiltonians");
    report->add_option("--format", format, "output format: text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
    report->add_option("--seed", report_options.solve.seed, "search seed");
    report->add_option("--threads", report_options.solve.threads, "worker threads");

    CLI11_PARSE(app, argc, argv);

    bool machine = format == "machine";
    report_options.brute_force = approx->count("--brute-force") > 0;
    if (report_options.solve.threads == 0) report_options.solve.threads = default_threads();

    try {
        if (check->parsed()) return run_check(input, machine);
        if (generators->parsed()) return run_generators(input, machine);
        if (model->parsed()) return run_model(input, machine, q_text, r_text);
        if (solve->parsed()) return run_solve(input, machine, solve_options);
        if (verify->parsed()) return run_verify(input, q_text, r_text, below);
        if (oracle->parsed())
            return run_oracle(input, machine, expect, report_options.oracle_max_qubits);
        if (approx->parsed()) return run_approx(input, machine, report_options);
        if (report->parsed()) return run_report(fixtures, machine, report_options);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

#include "hamiltonian.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "error.hpp"

namespace qqsim {

Hamiltonian::Hamiltonian(std::size_t num_qubits, std::vector<PauliTerm> terms,
                         double identity_offset, bool has_identity_term)
    : n_(num_qubits),
      identity_offset_(identity_offset),
      has_identity_(has_identity_term),
      terms_(std::move(terms)) {
    std::set<std::string> seen;
    for (const auto& t : terms_) {
        if (t.op.num_qubits() != n_)
            raise(ErrorCode::Dimension, "term " + t.op.label() + " does not act on " +
                                            std::to_string(n_) + " qubits");
        if (t.op.is_identity())
            raise(ErrorCode::InvalidArgument,
                  "identity belongs in the offset, not in the term list");
        if (!std::isfinite(t.coefficient))
            raise(ErrorCode::InvalidArgument, "non-finite coefficient for " + t.op.label());
        if (!seen.insert(t.op.label()).second)
            raise(ErrorCode::InvalidArgument, "duplicate term " + t.op.label());
    }
    if (!std::isfinite(identity_offset_))
        raise(ErrorCode::InvalidArgument, "non-finite identity offset");
}

std::size_t Hamiltonian::zero_coefficient_count() const {
    std::size_t count = 0;
    for (const auto& t : terms_)
        if (t.coefficient == 0.0) ++count;
    return count;
}

std::vector<PauliOp> Hamiltonian::support() const {
    std::vector<PauliOp> ops;
    ops.reserve(terms_.size());
    for (const auto& t : terms_) ops.push_back(t.op);
    return ops;
}

bool Hamiltonian::operator==(const Hamiltonian& other) const {
    return n_ == other.n_ && identity_offset_ == other.identity_offset_ &&
           has_identity_ == other.has_identity_ && terms_ == other.terms_;
}

// ----------------------------- text format ----------------------------------

namespace {

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    [[noreturn]] void fail(const std::string& message) const {
        raise(ErrorCode::Parse,
              message + " at line " + std::to_string(line_) + ", column " + std::to_string(col_));
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == ' ' || c == '\t' || c == '\r') {
                advance();
            } else if (c == '\n') {
                advance();
                ++line_;
                col_ = 1;
            } else {
                break;
            }
        }
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c, const char* what) {
        if (at_end() || text_[pos_] != c) fail(std::string("expected ") + what);
        advance();
    }

    std::string parse_key() {
        char quote = peek();
        if (quote != '"' && quote != '\'') fail("expected quoted Pauli label");
        advance();
        std::string key;
        while (!at_end() && text_[pos_] != quote) {
            key.push_back(text_[pos_]);
            advance();
        }
        if (at_end()) fail("unterminated label");
        advance();  // closing quote
        return key;
    }

    double parse_number() {
        std::size_t start = pos_;
        if (!at_end() && (text_[pos_] == '+' || text_[pos_] == '-')) advance();
        while (!at_end()) {
            char c = text_[pos_];
            if ((c >= '0' && c <= '9') || c == '.' || c == 'e' || c == 'E' || c == '+' || c == '-')
                advance();
            else
                break;
        }
        if (pos_ == start) fail("expected a number");
        double value = 0.0;
        auto result = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (result.ec == std::errc::result_out_of_range || !std::isfinite(value))
            fail("coefficient is not a finite number");
        if (result.ec != std::errc() || result.ptr != text_.data() + pos_)
            fail("malformed number");
        return value;
    }

private:
    void advance() {
        ++pos_;
        ++col_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

}  // namespace

Hamiltonian load_hamiltonian(std::string_view text) {
    Reader r(text);
    r.skip_space();
    r.expect('{', "'{'");
    std::set<std::string> seen;
    std::vector<PauliTerm> terms;
    std::size_t n = 0;
    bool width_known = false;
    bool has_identity = false;
    double offset = 0.0;

    r.skip_space();
    if (r.peek() != '}') {
        for (;;) {
            r.skip_space();
            std::string key = r.parse_key();
            if (!seen.insert(key).second) r.fail("duplicate key \"" + key + "\"");
            PauliOp op = PauliOp::parse(key);
            if (width_known && op.num_qubits() != n)
                r.fail("label \"" + key + "\" has length " + std::to_string(op.num_qubits()) +
                       ", expected " + std::to_string(n));
            n = op.num_qubits();
            width_known = true;
            r.skip_space();
            r.expect(':', "':'");
            r.skip_space();
            double value = r.parse_number();
            if (op.is_identity()) {
                has_identity = true;
                offset = value;
            } else {
                terms.push_back(PauliTerm{std::move(op), value});
            }
            r.skip_space();
            if (r.peek() == ',') {
                r.expect(',', "','");
                continue;
            }
            break;
        }
        r.skip_space();
    }
    r.expect('}', "'}'");
    r.skip_space();
    if (!r.at_end()) r.fail("trailing content after closing '}'");
    return Hamiltonian(n, std::move(terms), offset, has_identity);
}

Hamiltonian load_hamiltonian_stream(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_hamiltonian(buffer.str());
}

Hamiltonian load_hamiltonian_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::Parse, "cannot open file: " + path);
    return load_hamiltonian_stream(in);
}

std::string format_double(double value) {
    char buf[32];
    auto result = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, result.ptr);
}

std::string serialize_hamiltonian(const Hamiltonian& h) {
    std::string out = "{";
    bool first = true;
    auto emit = [&](const std::string& key, double value) {
        if (!first) out += ", ";
        first = false;
        out += '"';
        out += key;
        out += "\": ";
        out += format_double(value);
    };
    if (h.has_identity_term())
        emit(PauliOp::identity(h.num_qubits()).label(), h.identity_offset());
    for (const auto& t : h.terms()) emit(t.op.label(), t.coefficient);
    out += "}";
    return out;
}

}  // namespace qqsim

#include <doctest.h>

#include <algorithm>
#include <random>

#include "error.hpp"
#include "structure.hpp"
#include "support.hpp"

using namespace qqsim;

namespace {

std::vector<PauliOp> ops_of(const std::vector<std::string>& labels) {
    std::vector<PauliOp> out;
    for (const auto& l : labels) out.push_back(PauliOp::parse(l));
    return out;
}

std::vector<std::string> labels_of(const std::vector<PauliOp>& ops) {
    std::vector<std::string> out;
    for (const auto& op : ops) out.push_back(op.label());
    return out;
}

// All-triples transitivity check, the brute-force reference for the
// criterion: commutation must be transitive outside the universal part.
bool noncontextual_brute(const std::vector<PauliOp>& raw) {
    std::vector<PauliOp> ops;
    for (const auto& op : raw)
        if (!op.is_identity()) ops.push_back(op);
    std::sort(ops.begin(), ops.end());
    ops.erase(std::unique(ops.begin(), ops.end()), ops.end());
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        bool universal = true;
        for (std::size_t j = 0; j < ops.size(); ++j)
            if (!commutes(ops[i], ops[j])) universal = false;
        if (!universal) rest.push_back(i);
    }
    for (std::size_t a : rest)
        for (std::size_t b : rest)
            for (std::size_t c : rest) {
                if (a == b || b == c || a == c) continue;
                if (commutes(ops[a], ops[b]) && commutes(ops[b], ops[c]) &&
                    !commutes(ops[a], ops[c]))
                    return false;
            }
    return true;
}

void check_structure_invariants(const NoncontextualStructure& s,
                                const std::vector<PauliOp>& ops) {
    for (const auto& z : s.universal)
        for (const auto& op : ops) CHECK(commutes(z, op));
    for (std::size_t i = 0; i < s.cliques.size(); ++i) {
        CHECK(!s.cliques[i].empty());
        CHECK(s.representatives[i] == s.cliques[i].front());
        for (const auto& a : s.cliques[i])
            for (const auto& b : s.cliques[i]) CHECK(commutes(a, b));
        for (std::size_t j = i + 1; j < s.cliques.size(); ++j)
            for (const auto& a : s.cliques[i])
                for (const auto& b : s.cliques[j]) CHECK_FALSE(commutes(a, b));
    }
}

}  // namespace

TEST_SUITE_BEGIN("structure");

TEST_CASE("partition of the 4-term noncontextual set") {
    auto [z, t] = partition(ops_of({"IZ", "ZI", "ZZ", "XX"}));
    CHECK(labels_of(z) == std::vector<std::string>{"ZZ"});
    CHECK(labels_of(t) == std::vector<std::string>{"IZ", "XX", "ZI"});
}

TEST_CASE("partition extremes") {
    auto [z1, t1] = partition(ops_of({"ZI", "IZ", "ZZ"}));
    CHECK(z1.size() == 3);
    CHECK(t1.empty());

    auto [z2, t2] = partition(ops_of({"X", "Z"}));
    CHECK(z2.empty());
    CHECK(t2.size() == 2);
}

TEST_CASE("is_noncontextual on the bundled systems") {
    auto noncon = testsupport::load_fixture("heh+_noncon");
    CHECK(is_noncontextual(noncon.support()));
    auto full = testsupport::load_fixture("heh+_full");
    CHECK_FALSE(is_noncontextual(full.support()));
    CHECK(is_noncontextual(ops_of({"ZI", "IZ", "ZZ"})));
}

TEST_CASE("build_structure on the 4-term set") {
    auto s = build_structure(ops_of({"IZ", "ZI", "ZZ", "XX"}));
    CHECK(labels_of(s.universal) == std::vector<std::string>{"ZZ"});
    REQUIRE(s.clique_count() == 2);
    CHECK(labels_of(s.cliques[0]) == std::vector<std::string>{"IZ", "ZI"});
    CHECK(labels_of(s.cliques[1]) == std::vector<std::string>{"XX"});
    CHECK(labels_of(s.representatives) == std::vector<std::string>{"IZ", "XX"});
}

TEST_CASE("an anticommuting pair gives two singleton cliques") {
    auto s = build_structure(ops_of({"X", "Z"}));
    CHECK(s.universal.empty());
    REQUIRE(s.clique_count() == 2);
    CHECK(s.cliques[0].size() == 1);
    CHECK(s.cliques[1].size() == 1);
}

TEST_CASE("contextual input raises with a genuine certificate") {
    auto full = testsupport::load_fixture("heh+_full");
    CHECK_THROWS_AS(build_structure(full.support()), Error);
    auto cert = find_certificate(full.support());
    REQUIRE(cert.has_value());
    CHECK(commutes(cert->a, cert->b));
    CHECK(commutes(cert->b, cert->c));
    CHECK_FALSE(commutes(cert->a, cert->c));

    CHECK_FALSE(find_certificate(ops_of({"IZ", "ZI", "ZZ", "XX"})).has_value());
}

TEST_CASE("structure is independent of input order") {
    auto noncon = testsupport::load_fixture("lih_kandala_noncon");
    auto ops = noncon.support();
    auto reference = build_structure(ops);
    std::mt19937_64 rng(7);
    for (int round = 0; round < 10; ++round) {
        std::shuffle(ops.begin(), ops.end(), rng);
        auto s = build_structure(ops);
        CHECK(labels_of(s.universal) == labels_of(reference.universal));
        CHECK(labels_of(s.representatives) == labels_of(reference.representatives));
        REQUIRE(s.clique_count() == reference.clique_count());
        for (std::size_t i = 0; i < s.clique_count(); ++i)
            CHECK(labels_of(s.cliques[i]) == labels_of(reference.cliques[i]));
    }
}

TEST_CASE("criterion agrees with the all-triples reference on random sets") {
    std::mt19937_64 rng(2024);
    int contextual_seen = 0, noncontextual_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 2 + rng() % 3;
        std::size_t count = 2 + rng() % 11;  // |T| <= 12
        std::vector<PauliOp> ops;
        for (std::size_t i = 0; i < count; ++i) {
            auto op = testsupport::random_pauli(rng, n);
            if (!op.is_identity()) ops.push_back(op);
        }
        bool expected = noncontextual_brute(ops);
        REQUIRE(is_noncontextual(ops) == expected);
        (expected ? noncontextual_seen : contextual_seen)++;
        if (expected) {
            auto s = build_structure(ops);
            check_structure_invariants(s, ops);
        } else {
            auto cert = find_certificate(ops);
            REQUIRE(cert.has_value());
            CHECK(commutes(cert->a, cert->b));
            CHECK(commutes(cert->b, cert->c));
            CHECK_FALSE(commutes(cert->a, cert->c));
        }
    }
    CHECK(contextual_seen > 20);
    CHECK(noncontextual_seen > 20);
}

TEST_CASE("random instances have the requested structure") {
    auto h1 = random_noncontextual_instance(3, 1, 2, 7);
    CHECK(is_noncontextual(h1.support()));

    auto h2 = random_noncontextual_instance(2, 3, 0, 1);
    CHECK(h2.terms().size() == 3);
    for (const auto& a : h2.terms())
        for (const auto& b : h2.terms())
            if (!(a.op == b.op)) CHECK_FALSE(commutes(a.op, b.op));

    CHECK_THROWS_AS(random_noncontextual_instance(2, 6, 0, 99), Error);

    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 2 + rng() % 5;
        std::size_t g = rng() % n;  // leaves room for cliques
        std::size_t max_cliques = 2 * (n - g) + 1;
        std::size_t cliques = rng() % (max_cliques + 1);
        if (cliques == 1) cliques = 2;  // a lone clique is absorbed into the universal part
        auto h = random_noncontextual_instance(n, cliques, g, 1000 + trial);
        REQUIRE(is_noncontextual(h.support()));
        auto s = build_structure(h.support());
        check_structure_invariants(s, h.support());
        CHECK(s.clique_count() == cliques);
    }
}

TEST_CASE("instances are deterministic in the seed") {
    auto a = random_noncontextual_instance(5, 3, 2, 42);
    auto b = random_noncontextual_instance(5, 3, 2, 42);
    CHECK(a == b);
    auto c = random_noncontextual_instance(5, 3, 2, 43);
    CHECK_FALSE(a == c);
}

TEST_CASE("anticommuting families") {
    for (std::size_t n = 1; n <= 4; ++n) {
        auto family = anticommuting_family(n, 2 * n + 1);
        for (std::size_t i = 0; i < family.size(); ++i)
            for (std::size_t j = i + 1; j < family.size(); ++j)
                CHECK_FALSE(commutes(family[i], family[j]));
    }
    CHECK_THROWS_AS(anticommuting_family(2, 6), Error);
}

TEST_CASE("structure analysis on wide instances") {
    auto h = random_noncontextual_instance(70, 3, 10, 9001);
    REQUIRE(is_noncontextual(h.support()));
    auto s = build_structure(h.support());
    CHECK(s.clique_count() == 3);
    check_structure_invariants(s, h.support());
}

TEST_SUITE_END();

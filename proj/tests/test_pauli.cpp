#include <doctest.h>

#include <random>

#include "error.hpp"
#include "pauli.hpp"
#include "support.hpp"

using namespace qqsim;
using testsupport::dense_of;
using testsupport::matmul;
using testsupport::max_abs_diff;
using testsupport::scaled;

TEST_SUITE_BEGIN("pauli");

TEST_CASE("parse encodes X/Z/Y/I bits with qubit 0 leftmost") {
    auto xx = PauliOp::parse("XX");
    CHECK(xx.x_bit(0));
    CHECK(xx.x_bit(1));
    CHECK_FALSE(xx.z_bit(0));
    CHECK_FALSE(xx.z_bit(1));

    auto iz = PauliOp::parse("IZ");
    CHECK_FALSE(iz.x_bit(0));
    CHECK_FALSE(iz.x_bit(1));
    CHECK_FALSE(iz.z_bit(0));
    CHECK(iz.z_bit(1));

    auto y = PauliOp::parse("Y");
    CHECK(y.x_bit(0));
    CHECK(y.z_bit(0));

    CHECK(PauliOp::parse("IZYX").label() == "IZYX");
}

TEST_CASE("parse rejects bad labels with the offending position") {
    CHECK_THROWS_WITH_AS(PauliOp::parse("XQ"), doctest::Contains("position 2"), Error);
    CHECK_THROWS_AS(PauliOp::parse(""), Error);
    CHECK_THROWS_AS(PauliOp::parse("xz"), Error);
}

TEST_CASE("commutes matches the sign rules") {
    auto xx = PauliOp::parse("XX");
    auto zz = PauliOp::parse("ZZ");
    auto iz = PauliOp::parse("IZ");
    CHECK(commutes(xx, xx));
    CHECK(commutes(zz, zz));
    CHECK(commutes(xx, zz));   // anticommute on both qubits, signs cancel
    CHECK_FALSE(commutes(iz, xx));  // anticommute on exactly one qubit
    CHECK_THROWS_AS(commutes(PauliOp::parse("X"), xx), Error);
}

TEST_CASE("multiply tracks exact phases") {
    auto xz = multiply(PauliOp::parse("X"), PauliOp::parse("Z"));
    CHECK(xz.op.label() == "Y");
    CHECK(xz.phase == Phase::minus_imaginary());

    auto zi_iz = multiply(PauliOp::parse("ZI"), PauliOp::parse("IZ"));
    CHECK(zi_iz.op.label() == "ZZ");
    CHECK(zi_iz.phase == Phase::one());

    auto yy = multiply(PauliOp::parse("Y"), PauliOp::parse("Y"));
    CHECK(yy.op.is_identity());
    CHECK(yy.phase == Phase::one());

    CHECK_THROWS_AS(multiply(PauliOp::parse("X"), PauliOp::parse("XX")), Error);
}

TEST_CASE("is_diagonal") {
    CHECK(PauliOp::parse("ZZI").is_diagonal());
    CHECK_FALSE(PauliOp::parse("XXI").is_diagonal());
    CHECK(PauliOp::parse("I").is_diagonal());
}

TEST_CASE("all 16 single-qubit products match the dense matrices") {
    const char kinds[4] = {'I', 'X', 'Y', 'Z'};
    for (char a : kinds)
        for (char b : kinds) {
            auto p = PauliOp::parse(std::string(1, a));
            auto q = PauliOp::parse(std::string(1, b));
            auto product = multiply(p, q);
            auto direct = matmul(dense_of(p).entries, dense_of(q).entries, 2);
            auto expected = scaled(dense_of(product.op).entries, product.phase.value());
            CHECK(max_abs_diff(direct, expected) == 0.0);

            // commutes() agrees with PQ == QP on matrices
            auto qp = matmul(dense_of(q).entries, dense_of(p).entries, 2);
            bool equal = max_abs_diff(direct, qp) == 0.0;
            CHECK(equal == commutes(p, q));
        }
}

TEST_CASE("random products against the dense-matrix oracle") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t n = 1 + rng() % 8;
        auto p = testsupport::random_pauli(rng, n);
        auto q = testsupport::random_pauli(rng, n);
        auto product = multiply(p, q);
        std::size_t dim = std::size_t(1) << n;
        auto direct = matmul(dense_of(p).entries, dense_of(q).entries, dim);
        auto expected = scaled(dense_of(product.op).entries, product.phase.value());
        REQUIRE(max_abs_diff(direct, expected) == 0.0);

        // multiplying back recovers the other factor up to phase
        auto back = multiply(p, product.op);
        REQUIRE(back.op == q);

        REQUIRE(commutes(p, q) == commutes(q, p));
        if (commutes(p, q)) REQUIRE(product.phase.is_real());
    }
}

TEST_CASE("phase composition is associative and exact") {
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) {
                auto pa = Phase::from_exponent(a);
                auto pb = Phase::from_exponent(b);
                auto pc = Phase::from_exponent(c);
                CHECK((pa * pb) * pc == pa * (pb * pc));
            }
    CHECK(Phase::one().sign() == +1);
    CHECK(Phase::minus_one().sign() == -1);
    CHECK(Phase::imaginary() * Phase::imaginary() == Phase::minus_one());
}

TEST_CASE("random commuting pairs multiply to a real phase") {
    std::mt19937_64 rng(998);
    int found = 0;
    while (found < 300) {
        std::size_t n = 1 + rng() % 6;
        auto p = testsupport::random_pauli(rng, n);
        auto q = testsupport::random_pauli(rng, n);
        if (!commutes(p, q)) continue;
        ++found;
        auto product = multiply(p, q);
        REQUIRE(product.phase.is_real());
    }
}

TEST_CASE("label order is the canonical order") {
    CHECK(PauliOp::parse("IZ") < PauliOp::parse("ZI"));
    CHECK(PauliOp::parse("XXI") < PauliOp::parse("YYI"));
    CHECK(PauliOp::parse("II") < PauliOp::parse("IX"));
}

TEST_CASE("wide operators spanning several words") {
    std::string a_label(100, 'I'), b_label(100, 'I');
    a_label[0] = 'X';
    a_label[70] = 'Z';   // second word
    a_label[99] = 'Y';
    b_label[0] = 'Z';
    b_label[70] = 'Z';
    b_label[99] = 'Y';
    auto a = PauliOp::parse(a_label);
    auto b = PauliOp::parse(b_label);
    CHECK(a.label() == a_label);

    // qubits 0 and 99 anticommute factor-wise? X/Z yes, Y/Y no, Z/Z no: one
    // anticommuting factor in total.
    CHECK_FALSE(commutes(a, b));

    auto product = multiply(a, b);
    CHECK(product.op.kind(0) == 2);    // X*Z = -iY
    CHECK(product.op.kind(70) == 0);   // Z*Z = I
    CHECK(product.op.kind(99) == 0);   // Y*Y = I
    CHECK(product.phase == Phase::minus_imaginary());

    // self-products collapse to the identity with phase +1
    auto square = multiply(b, b);
    CHECK(square.op.is_identity());
    CHECK(square.phase == Phase::one());
}

TEST_SUITE_END();

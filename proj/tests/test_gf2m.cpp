#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "d2p/gf2m.hpp"

using namespace d2p;

namespace {

// Direct-powering oracle for the multiplicative order of 2 mod p.
int order_of_two_oracle(int p) {
    int v = 2 % p;
    int k = 1;
    while (v != 1) {
        v = (v * 2) % p;
        ++k;
    }
    return k;
}

// Trial-division oracle: a degree-n polynomial over GF(2) is irreducible
// iff no polynomial of degree 1..n/2 divides it.
bool irreducible_oracle(std::uint64_t f) {
    const int n = gf2poly::degree(f);
    for (int d = 1; 2 * d <= n; ++d) {
        for (std::uint64_t g = (std::uint64_t{1} << d); g < (std::uint64_t{1} << (d + 1)); ++g) {
            std::uint64_t rem = f;
            while (gf2poly::degree(rem) >= d)
                rem ^= g << (gf2poly::degree(rem) - d);
            if (rem == 0) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("field_for_p picks the degree from the order of 2 mod p") {
    // oracle-derived: ord_3(2)=2, ord_7(2)=3, ord_5(2)=4
    CHECK(order_of_two_oracle(3) == 2);
    CHECK(order_of_two_oracle(7) == 3);
    CHECK(order_of_two_oracle(5) == 4);
    CHECK(Field::for_p(3).m() == 2);
    CHECK(Field::for_p(7).m() == 3);
    CHECK(Field::for_p(5).m() == 4);
    for (int p : {3, 5, 7, 9, 11, 13}) CHECK(Field::for_p(p).m() == order_of_two_oracle(p));
}

TEST_CASE("field_for_p rejects bad p") {
    CHECK_THROWS_AS(Field::for_p(4), InvalidParameterError);
    CHECK_THROWS_AS(Field::for_p(2), InvalidParameterError);
    CHECK_THROWS_AS(Field::for_p(1), InvalidParameterError);
    CHECK_THROWS_AS(Field::for_p(-3), InvalidParameterError);
    CHECK_THROWS_AS(Field::for_p(3, 0), InvalidParameterError);
}

TEST_CASE("modulus is the smallest irreducible of its degree") {
    for (int p : {3, 5, 7, 11}) {
        const Field f = Field::for_p(p);
        CHECK(gf2poly::degree(f.modulus()) == f.m());
        CHECK(irreducible_oracle(f.modulus()));
        for (std::uint64_t c = std::uint64_t{1} << f.m(); c < f.modulus(); ++c)
            CHECK_FALSE(irreducible_oracle(c));
    }
    CHECK(Field::for_p(3).modulus() == 7);   // x^2+x+1
    CHECK(Field::for_p(7).modulus() == 11);  // x^3+x+1
    CHECK(Field::for_p(5).modulus() == 19);  // x^4+x+1
}

TEST_CASE("lambda is the smallest encoding of order exactly p") {
    for (int p : {3, 5, 7, 9, 11}) {
        const Field f = Field::for_p(p);
        CHECK(element_order(f.lambda()) == p);
        CHECK(pow(f.lambda(), p).bits == 1);
        for (std::uint32_t b = 2; b < f.lambda().bits; ++b)
            CHECK(element_order(f.element(b)) != p);
    }
}

TEST_CASE("construction is deterministic") {
    const Field a = Field::for_p(7);
    const Field b = Field::for_p(7);
    CHECK(a == b);
}

TEST_CASE("addition is XOR with characteristic-two cancellation") {
    const Field f = Field::for_p(3);
    for (std::uint32_t a = 0; a < 4; ++a) {
        CHECK((f.element(a) + f.element(a)).bits == 0);
        CHECK((f.element(a) + f.zero()) == f.element(a));
    }
    CHECK((f.element(2) + f.element(3)) == f.element(1));
}

TEST_CASE("elements of different fields refuse to mix") {
    const Field f4 = Field::for_p(3);
    const Field f8 = Field::for_p(7);
    CHECK_THROWS_AS(f4.element(1) + f8.element(1), IncompatibleFieldError);
    CHECK_THROWS_AS(f4.element(2) * f8.element(2), IncompatibleFieldError);
    CHECK_THROWS_AS(f4.element(5), IncompatibleFieldError);  // out of range
}

TEST_CASE("field axioms: inverses, powers, division by zero") {
    const Field f = Field::for_p(5);  // GF(16)
    for (std::uint32_t a = 1; a < 16; ++a) {
        CHECK((f.element(a) * inv(f.element(a))) == f.one());
        CHECK(f.mul_bits(a, f.inv_bits(a)) == 1);
    }
    CHECK_THROWS_AS(inv(f.zero()), DivisionByZeroError);
    CHECK_THROWS_AS(f.inv_bits(0), DivisionByZeroError);
    CHECK(pow(f.lambda(), 5) == f.one());
    CHECK(pow(f.lambda(), -1) == inv(f.lambda()));
    CHECK(pow(f.element(7), 0) == f.one());
    CHECK(pow(f.zero(), 3) == f.zero());
}

TEST_CASE("exhaustive: no zero divisors and Frobenius additivity for m <= 8") {
    for (int p : {3, 7, 5, 17}) {  // m = 2, 3, 4, 8
        const Field f = Field::for_p(p);
        const std::uint32_t n = static_cast<std::uint32_t>(f.size());
        for (std::uint32_t a = 0; a < n; ++a) {
            for (std::uint32_t b = 0; b < n; ++b) {
                if (a && b) CHECK(f.mul_bits(a, b) != 0);
                // (a+b)^2 = a^2 + b^2
                const std::uint32_t lhs = f.mul_bits(a ^ b, a ^ b);
                CHECK(lhs == (f.mul_bits(a, a) ^ f.mul_bits(b, b)));
            }
        }
        // table and carry-less kernels agree
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b)
                CHECK(f.mul_bits(a, b) == gf2_mul_bits(a, b, f.modulus()));
    }
}

TEST_CASE("p equals 1 in the field, so the eigenprojector scalar 1/p is 1") {
    for (int p : {3, 5, 7, 9}) {
        const Field f = Field::for_p(p);
        FieldElement acc = f.zero();
        for (int i = 0; i < p; ++i) acc = acc + f.one();
        CHECK(acc == f.one());
    }
}

TEST_CASE("field multiplier gives the stress-test extension") {
    const Field f = Field::for_p(3, 2);  // GF(16) containing GF(4)
    CHECK(f.m() == 4);
    CHECK(element_order(f.lambda()) == 3);
    CHECK(f.p() == 3);
    CHECK_THROWS_AS(Field::for_p(3, 20), InvalidParameterError);  // over the degree cap
}

TEST_CASE("from_params validates every invariant") {
    const Field f = Field::for_p(5);
    const Field same = Field::from_params(f.p(), f.m(), f.modulus(), f.lambda().bits);
    CHECK(same == f);
    CHECK_THROWS_AS(Field::from_params(5, 4, 0b10101, f.lambda().bits),
                    InvalidParameterError);  // reducible modulus (x^4+x^2+1)
    CHECK_THROWS_AS(Field::from_params(5, 3, f.modulus(), f.lambda().bits),
                    InvalidParameterError);  // degree mismatch
    CHECK_THROWS_AS(Field::from_params(5, 4, f.modulus(), 1), InvalidParameterError);
    CHECK_THROWS_AS(Field::from_params(3, 3, 11, 2), InvalidParameterError);  // 2^3 != 1 mod 3
}

TEST_CASE("element_order matches a brute-force scan") {
    const Field f = Field::for_p(7);  // GF(8)
    for (std::uint32_t a = 1; a < 8; ++a) {
        FieldElement x = f.element(a);
        FieldElement acc = x;
        int n = 1;
        while (!(acc == f.one())) {
            acc = acc * x;
            ++n;
        }
        CHECK(element_order(x) == n);
    }
    CHECK_THROWS_AS(element_order(f.zero()), PreconditionError);
}

TEST_CASE("random product/sum identities under the tagged operators") {
    const Field f = Field::for_p(5);
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::uint32_t> d(0, 15);
    for (int i = 0; i < 500; ++i) {
        const FieldElement a = f.element(d(rng));
        const FieldElement b = f.element(d(rng));
        const FieldElement c = f.element(d(rng));
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK((a * b) == (b * a));
        CHECK(((a * b) * c) == (a * (b * c)));
    }
}

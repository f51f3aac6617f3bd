#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "d2p/errors.hpp"

namespace d2p {

/// Element of GF(2^m) in polynomial-basis encoding. `bits` holds the
/// coefficient bitmask, `mod` the reduction modulus of the owning field;
/// the modulus doubles as the field tag, so elements of different fields
/// never silently mix.
struct FieldElement {
    std::uint32_t bits = 0;
    std::uint32_t mod = 0;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

inline bool is_zero(FieldElement a) { return a.bits == 0; }

FieldElement operator+(FieldElement a, FieldElement b);
FieldElement operator*(FieldElement a, FieldElement b);
FieldElement inv(FieldElement a);
FieldElement pow(FieldElement a, std::int64_t e);

/// Least n >= 1 with a^n = 1. Requires a != 0.
int element_order(FieldElement a);

/// Carry-less multiply of two polynomials over GF(2), reduced by `mod`
/// (a polynomial of degree exactly bit_width(mod)-1).
std::uint32_t gf2_mul_bits(std::uint32_t a, std::uint32_t b, std::uint32_t mod);

/// GF(2^m) with m chosen so that the field contains a primitive p-th root
/// of unity lambda. Immutable after construction; cheap to copy (the
/// multiplication tables are shared).
class Field {
  public:
    /// Deterministic construction: m = multiplier * ord_p(2), modulus = the
    /// irreducible degree-m polynomial with the smallest integer encoding,
    /// lambda = the order-p element with the smallest encoding.
    static Field for_p(int p, int multiplier = 1);

    /// Rebuild from serialized parameters, validating every invariant
    /// (irreducible modulus of degree m, 2^m = 1 mod p, ord(lambda) = p).
    static Field from_params(int p, int m, std::uint32_t modulus, std::uint32_t lambda);

    int p() const { return p_; }
    int m() const { return m_; }
    std::uint32_t modulus() const { return modulus_; }
    std::uint64_t size() const { return std::uint64_t{1} << m_; }

    FieldElement zero() const { return {0, modulus_}; }
    FieldElement one() const { return {1, modulus_}; }
    FieldElement lambda() const { return {lambda_, modulus_}; }

    /// lambda^e for any integer e (reduced mod p).
    FieldElement lambda_pow(long e) const;

    /// Wrap an encoding as an element of this field; range-checked.
    FieldElement element(std::uint32_t bits) const;

    bool contains(FieldElement a) const { return a.mod == modulus_; }

    /// Raw-encoding kernels for hot loops (no tag checks). Multiplication
    /// uses log/antilog tables when m is small enough to afford them.
    std::uint32_t mul_bits(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv_bits(std::uint32_t a) const;
    std::uint32_t pow_bits(std::uint32_t a, std::uint64_t e) const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_ && a.lambda_ == b.lambda_;
    }

  private:
    Field(int p, int m, std::uint32_t modulus, std::uint32_t lambda);

    struct Tables {
        std::vector<std::uint32_t> log;  // log[bits] for bits != 0
        std::vector<std::uint32_t> exp;  // exp[k] = g^k, doubled to skip a mod
    };

    int p_ = 0;
    int m_ = 0;
    std::uint32_t modulus_ = 0;
    std::uint32_t lambda_ = 0;
    std::vector<std::uint32_t> lambda_pows_;  // lambda^0 .. lambda^(p-1)
    std::shared_ptr<const Tables> tables_;    // null when m > kTableDegreeCap
};

namespace gf2poly {

// Polynomials over GF(2) as bitmasks; helpers used for modulus selection.
int degree(std::uint64_t f);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
bool is_irreducible(std::uint64_t f);

}  // namespace gf2poly

/// Multiplicative order of a modulo n (gcd(a, n) = 1).
int multiplicative_order(long a, long n);

bool is_prime(long n);

}  // namespace d2p

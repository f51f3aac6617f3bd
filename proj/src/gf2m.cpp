#include "d2p/gf2m.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace d2p {

namespace {

// Table-based multiplication pays off only while the tables stay small.
constexpr int kTableDegreeCap = 16;
// Elements are stored in 32-bit encodings; degree 24 is plenty for desk scale.
constexpr int kDegreeCap = 24;

void check_same_field(FieldElement a, FieldElement b, const char* op) {
    if (a.mod == 0 || b.mod == 0 || a.mod != b.mod) {
        throw IncompatibleFieldError(std::string("gf2m: ") + op +
                                     " on elements of different fields");
    }
}

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Least n >= 1 with a^n = 1 given that a^group_order = 1.
std::uint64_t order_from_group_order(std::uint32_t a, std::uint64_t group_order,
                                     std::uint32_t mod) {
    std::uint64_t ord = group_order;
    for (long q : prime_factors(static_cast<long>(group_order))) {
        while (ord % q == 0) {
            std::uint64_t cand = ord / q;
            std::uint32_t v = 1;
            std::uint32_t base = a;
            std::uint64_t e = cand;
            while (e) {
                if (e & 1) v = gf2_mul_bits(v, base, mod);
                base = gf2_mul_bits(base, base, mod);
                e >>= 1;
            }
            if (v != 1) break;
            ord = cand;
        }
    }
    return ord;
}

}  // namespace

std::uint32_t gf2_mul_bits(std::uint32_t a, std::uint32_t b, std::uint32_t mod) {
    const int m = std::bit_width(mod) - 1;
    const std::uint32_t top = std::uint32_t{1} << m;
    std::uint32_t acc = 0;
    while (b) {
        if (b & 1) acc ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= mod;
    }
    return acc;
}

FieldElement operator+(FieldElement a, FieldElement b) {
    check_same_field(a, b, "add");
    return {a.bits ^ b.bits, a.mod};
}

FieldElement operator*(FieldElement a, FieldElement b) {
    check_same_field(a, b, "mul");
    return {gf2_mul_bits(a.bits, b.bits, a.mod), a.mod};
}

FieldElement pow(FieldElement a, std::int64_t e) {
    if (a.mod == 0) throw IncompatibleFieldError("gf2m: pow on untagged element");
    const int m = std::bit_width(a.mod) - 1;
    const std::uint64_t group = (std::uint64_t{1} << m) - 1;
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    std::uint64_t exp = static_cast<std::uint64_t>(e);
    if (a.bits != 0) exp %= group;
    std::uint32_t acc = 1;
    std::uint32_t base = a.bits;
    while (exp) {
        if (exp & 1) acc = gf2_mul_bits(acc, base, a.mod);
        base = gf2_mul_bits(base, base, a.mod);
        exp >>= 1;
    }
    if (a.bits == 0 && e != 0) acc = 0;
    return {acc, a.mod};
}

FieldElement inv(FieldElement a) {
    if (a.mod == 0) throw IncompatibleFieldError("gf2m: inv on untagged element");
    if (a.bits == 0) throw DivisionByZeroError("gf2m: inverse of zero");
    const int m = std::bit_width(a.mod) - 1;
    const std::uint64_t group = (std::uint64_t{1} << m) - 1;
    return pow(a, static_cast<std::int64_t>(group - 1));
}

int element_order(FieldElement a) {
    if (a.mod == 0) throw IncompatibleFieldError("gf2m: order of untagged element");
    if (a.bits == 0) throw PreconditionError("gf2m: order of zero is undefined");
    const int m = std::bit_width(a.mod) - 1;
    const std::uint64_t group = (std::uint64_t{1} << m) - 1;
    return static_cast<int>(order_from_group_order(a.bits, group, a.mod));
}

namespace gf2poly {

int degree(std::uint64_t f) { return f == 0 ? -1 : std::bit_width(f) - 1; }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f) {
    const int m = degree(f);
    const std::uint64_t top = std::uint64_t{1} << m;
    std::uint64_t acc = 0;
    while (b) {
        if (b & 1) acc ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= f;
    }
    return acc;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        // a mod b by long division over GF(2)
        while (degree(a) >= degree(b)) a ^= b << (degree(a) - degree(b));
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(std::uint64_t f) {
    const int n = degree(f);
    if (n <= 0) return false;
    if ((f & 1) == 0) return n == 1;  // divisible by x
    // x^(2^n) == x mod f, and gcd(x^(2^(n/q)) - x, f) = 1 for prime q | n.
    auto frob_power = [&](int k) {
        std::uint64_t v = 2;  // the polynomial x
        for (int i = 0; i < k; ++i) v = mulmod(v, v, f);
        return v;
    };
    if (frob_power(n) != 2) return false;
    for (long q : prime_factors(n)) {
        if (gcd(frob_power(static_cast<int>(n / q)) ^ 2u, f) != 1) return false;
    }
    return true;
}

}  // namespace gf2poly

int multiplicative_order(long a, long n) {
    a %= n;
    if (a < 0) a += n;
    long v = a % n;
    int k = 1;
    while (v != 1) {
        v = (v * a) % n;
        ++k;
        if (k > n) throw InvalidParameterError("multiplicative_order: a not invertible mod n");
    }
    return k;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

Field::Field(int p, int m, std::uint32_t modulus, std::uint32_t lambda)
    : p_(p), m_(m), modulus_(modulus), lambda_(lambda) {
    lambda_pows_.resize(p);
    std::uint32_t v = 1;
    for (int e = 0; e < p; ++e) {
        lambda_pows_[e] = v;
        v = gf2_mul_bits(v, lambda_, modulus_);
    }
    if (m_ <= kTableDegreeCap) {
        auto t = std::make_shared<Tables>();
        const std::uint64_t n = (std::uint64_t{1} << m_) - 1;
        t->log.assign(std::size_t{1} << m_, 0);
        t->exp.assign(2 * n, 0);
        // Find a generator of the multiplicative group.
        std::uint32_t g = 2;
        while (order_from_group_order(g, n, modulus_) != n) ++g;
        std::uint32_t x = 1;
        for (std::uint64_t k = 0; k < n; ++k) {
            t->exp[k] = x;
            t->exp[k + n] = x;
            t->log[x] = static_cast<std::uint32_t>(k);
            x = gf2_mul_bits(x, g, modulus_);
        }
        tables_ = std::move(t);
    }
}

Field Field::for_p(int p, int multiplier) {
    if (p < 3 || p % 2 == 0)
        throw InvalidParameterError("field_for_p: p must be an odd integer >= 3");
    if (multiplier < 1) throw InvalidParameterError("field_for_p: multiplier must be >= 1");
    const int m = multiplicative_order(2, p) * multiplier;
    if (m > kDegreeCap)
        throw InvalidParameterError("field_for_p: required extension degree " +
                                    std::to_string(m) + " exceeds the supported cap " +
                                    std::to_string(kDegreeCap));
    // Smallest irreducible of degree m by integer encoding.
    std::uint32_t modulus = 0;
    for (std::uint64_t c = (std::uint64_t{1} << m) + 1; c < (std::uint64_t{1} << (m + 1));
         c += 2) {
        if (gf2poly::is_irreducible(c)) {
            modulus = static_cast<std::uint32_t>(c);
            break;
        }
    }
    // Smallest encoding among elements of multiplicative order exactly p.
    const std::uint64_t n = (std::uint64_t{1} << m) - 1;
    std::uint32_t lambda = 0;
    for (std::uint64_t a = 2; a <= n; ++a) {
        if (order_from_group_order(static_cast<std::uint32_t>(a), n, modulus) ==
            static_cast<std::uint64_t>(p)) {
            lambda = static_cast<std::uint32_t>(a);
            break;
        }
    }
    return Field(p, m, modulus, lambda);
}

Field Field::from_params(int p, int m, std::uint32_t modulus, std::uint32_t lambda) {
    if (p < 3 || p % 2 == 0)
        throw InvalidParameterError("field params: p must be an odd integer >= 3");
    if (m < 1 || m > kDegreeCap) throw InvalidParameterError("field params: bad degree m");
    if (gf2poly::degree(modulus) != m)
        throw InvalidParameterError("field params: modulus degree differs from m");
    if (!gf2poly::is_irreducible(modulus))
        throw InvalidParameterError("field params: modulus is reducible");
    const std::uint64_t n = (std::uint64_t{1} << m) - 1;
    if (n % static_cast<std::uint64_t>(p) != 0)
        throw InvalidParameterError("field params: 2^m is not 1 mod p");
    if (lambda == 0 || lambda > n)
        throw InvalidParameterError("field params: lambda out of range");
    if (order_from_group_order(lambda, n, modulus) != static_cast<std::uint64_t>(p))
        throw InvalidParameterError("field params: lambda does not have order p");
    return Field(p, m, modulus, lambda);
}

FieldElement Field::lambda_pow(long e) const {
    long r = e % p_;
    if (r < 0) r += p_;
    return {lambda_pows_[static_cast<std::size_t>(r)], modulus_};
}

FieldElement Field::element(std::uint32_t bits) const {
    if (bits >= (std::uint64_t{1} << m_))
        throw IncompatibleFieldError("gf2m: encoding out of range for this field");
    return {bits, modulus_};
}

std::uint32_t Field::mul_bits(std::uint32_t a, std::uint32_t b) const {
    if (tables_) {
        if (a == 0 || b == 0) return 0;
        return tables_->exp[tables_->log[a] + tables_->log[b]];
    }
    return gf2_mul_bits(a, b, modulus_);
}

std::uint32_t Field::inv_bits(std::uint32_t a) const {
    if (a == 0) throw DivisionByZeroError("gf2m: inverse of zero");
    if (tables_) {
        const std::uint64_t n = (std::uint64_t{1} << m_) - 1;
        return tables_->exp[(n - tables_->log[a]) % n];
    }
    return inv(FieldElement{a, modulus_}).bits;
}

std::uint32_t Field::pow_bits(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t acc = 1;
    std::uint32_t base = a;
    while (e) {
        if (e & 1) acc = mul_bits(acc, base);
        base = mul_bits(base, base);
        e >>= 1;
    }
    return acc;
}

}  // namespace d2p

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "d2p/module_spec.hpp"

namespace d2p {

/// Canonical variable order x_1..x_r, y_1..y_r, z_1..z_s, w_1..w_s, e_1..e_t.
struct VariableLayout {
    int r = 0;
    int s = 0;
    int t = 0;

    int var_count() const { return 2 * r + 2 * s + t; }
    int x(int i) const { return i; }              // 0-based block offsets
    int y(int i) const { return r + i; }
    int z(int j) const { return 2 * r + j; }
    int w(int j) const { return 2 * r + s + j; }
    int e(int k) const { return 2 * r + 2 * s + k; }

    std::string var_name(int index) const;
    /// Index for names like "x1", "w2", "e3"; nullopt if unknown.
    std::optional<int> var_index(std::string_view name) const;

    friend bool operator==(const VariableLayout&, const VariableLayout&) = default;
};

inline VariableLayout layout_of(const ModuleSpec& spec) {
    return {spec.r(), spec.s(), spec.t()};
}

/// Exponent vector over a fixed variable layout.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(int var_count) : exps_(var_count, 0) {}
    explicit Monomial(std::vector<std::uint16_t> exps) : exps_(std::move(exps)) {}

    int var_count() const { return static_cast<int>(exps_.size()); }
    int degree() const;
    int exp(int i) const { return exps_[static_cast<std::size_t>(i)]; }
    void set_exp(int i, int e) { exps_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(e); }
    const std::vector<std::uint16_t>& exps() const { return exps_; }

    bool is_one() const { return degree() == 0; }
    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;  // this | o
    Monomial divided_by(const Monomial& o) const;

    std::string str(const VariableLayout& layout) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

  private:
    std::vector<std::uint16_t> exps_;
};

/// Degree first, ties broken lexicographically on the exponent vector in
/// the canonical variable order (so y1^3 < x1^3, matching graded lex with
/// x1 > ... > e_t).
bool deglex_less(const Monomial& a, const Monomial& b);

struct DeglexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return deglex_less(a, b); }
};

/// Sparse polynomial over GF(2^m); no zero coefficients are stored, and
/// addition cancels exactly (characteristic two).
class Polynomial {
  public:
    using TermMap = std::map<Monomial, std::uint32_t, DeglexLess>;

    Polynomial(VariableLayout layout, std::uint32_t coeff_mod)
        : layout_(layout), mod_(coeff_mod) {}
    Polynomial(VariableLayout layout, const Field& field)
        : layout_(layout), mod_(field.modulus()) {}

    static Polynomial term(VariableLayout layout, const Monomial& m, FieldElement coeff);

    const VariableLayout& layout() const { return layout_; }
    std::uint32_t coeff_mod() const { return mod_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    /// Max term degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    FieldElement coeff(const Monomial& m) const;
    void add_term(const Monomial& m, FieldElement coeff);
    void add_term_bits(const Monomial& m, std::uint32_t coeff_bits);

    FieldElement eval(std::span<const FieldElement> point) const;

    friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Deglex-descending text form, e.g. "x1^3+y1^3" or "2*x1*z1+w1".
    std::string str() const;

    /// Inverse of str(); accepts arbitrary whitespace and decimal or hex
    /// coefficient encodings.
    static Polynomial parse(std::string_view text, const VariableLayout& layout,
                            const Field& field);

  private:
    VariableLayout layout_;
    std::uint32_t mod_ = 0;
    TermMap terms_;
};

/// Sum of weights[i] * (a_i - b_i) mod p; zero iff the monomial is fixed by rho.
int rho_character(const Monomial& m, const ModuleSpec& spec);

/// Swap exponent pairs (a_i, b_i) and (c_j, d_j); trivial variables stay put.
Monomial sigma_image(const Monomial& m, const VariableLayout& layout);

}  // namespace d2p

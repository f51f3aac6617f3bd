#include "d2p/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace d2p {

std::string VariableLayout::var_name(int index) const {
    if (index < r) return "x" + std::to_string(index + 1);
    if (index < 2 * r) return "y" + std::to_string(index - r + 1);
    if (index < 2 * r + s) return "z" + std::to_string(index - 2 * r + 1);
    if (index < 2 * r + 2 * s) return "w" + std::to_string(index - 2 * r - s + 1);
    return "e" + std::to_string(index - 2 * r - 2 * s + 1);
}

std::optional<int> VariableLayout::var_index(std::string_view name) const {
    if (name.size() < 2) return std::nullopt;
    int k = 0;
    auto res = std::from_chars(name.data() + 1, name.data() + name.size(), k);
    if (res.ec != std::errc{} || res.ptr != name.data() + name.size() || k < 1)
        return std::nullopt;
    switch (name[0]) {
        case 'x': return k <= r ? std::optional<int>(x(k - 1)) : std::nullopt;
        case 'y': return k <= r ? std::optional<int>(y(k - 1)) : std::nullopt;
        case 'z': return k <= s ? std::optional<int>(z(k - 1)) : std::nullopt;
        case 'w': return k <= s ? std::optional<int>(w(k - 1)) : std::nullopt;
        case 'e': return k <= t ? std::optional<int>(e(k - 1)) : std::nullopt;
        default: return std::nullopt;
    }
}

int Monomial::degree() const {
    int d = 0;
    for (auto e : exps_) d += e;
    return d;
}

Monomial Monomial::times(const Monomial& o) const {
    if (exps_.size() != o.exps_.size())
        throw ShapeError("monomial product: variable counts differ");
    Monomial out(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        out.exps_[i] = static_cast<std::uint16_t>(out.exps_[i] + o.exps_[i]);
    return out;
}

bool Monomial::divides(const Monomial& o) const {
    if (exps_.size() != o.exps_.size()) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    if (!o.divides(*this)) throw PreconditionError("monomial quotient: not divisible");
    Monomial out(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        out.exps_[i] = static_cast<std::uint16_t>(out.exps_[i] - o.exps_[i]);
    return out;
}

std::string Monomial::str(const VariableLayout& layout) const {
    std::string out;
    for (int i = 0; i < var_count(); ++i) {
        if (exps_[static_cast<std::size_t>(i)] == 0) continue;
        if (!out.empty()) out += "*";
        out += layout.var_name(i);
        if (exps_[static_cast<std::size_t>(i)] > 1)
            out += "^" + std::to_string(exps_[static_cast<std::size_t>(i)]);
    }
    return out.empty() ? "1" : out;
}

bool deglex_less(const Monomial& a, const Monomial& b) {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(a.exps().begin(), a.exps().end(), b.exps().begin(),
                                        b.exps().end());
}

Polynomial Polynomial::term(VariableLayout layout, const Monomial& m, FieldElement coeff) {
    Polynomial f(layout, coeff.mod);
    f.add_term(m, coeff);
    return f;
}

int Polynomial::degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.degree();
    return terms_.rbegin()->first.degree() == d;
}

FieldElement Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return {it == terms_.end() ? 0u : it->second, mod_};
}

void Polynomial::add_term(const Monomial& m, FieldElement coeff) {
    if (coeff.mod != mod_)
        throw IncompatibleFieldError("polynomial: coefficient from a different field");
    add_term_bits(m, coeff.bits);
}

void Polynomial::add_term_bits(const Monomial& m, std::uint32_t coeff_bits) {
    if (m.var_count() != layout_.var_count())
        throw ShapeError("polynomial: monomial does not match the variable layout");
    if (coeff_bits == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff_bits);
    if (!inserted) {
        it->second ^= coeff_bits;
        if (it->second == 0) terms_.erase(it);
    }
}

FieldElement Polynomial::eval(std::span<const FieldElement> point) const {
    if (static_cast<int>(point.size()) != layout_.var_count())
        throw ShapeError("eval: point length does not match the variable layout");
    for (const auto& c : point)
        if (c.mod != mod_)
            throw IncompatibleFieldError("eval: point coordinates from a different field");
    std::uint32_t acc = 0;
    for (const auto& [mono, coeff] : terms_) {
        std::uint32_t v = coeff;
        for (int i = 0; i < mono.var_count() && v != 0; ++i) {
            const int e = mono.exp(i);
            if (e == 0) continue;
            // square-and-multiply on the coordinate
            std::uint32_t base = point[static_cast<std::size_t>(i)].bits;
            std::uint32_t pw = 1;
            int k = e;
            while (k) {
                if (k & 1) pw = gf2_mul_bits(pw, base, mod_);
                base = gf2_mul_bits(base, base, mod_);
                k >>= 1;
            }
            v = gf2_mul_bits(v, pw, mod_);
        }
        acc ^= v;
    }
    return {acc, mod_};
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    if (f.layout_ != g.layout_) throw ShapeError("polynomial add: layouts differ");
    if (f.mod_ != g.mod_) throw IncompatibleFieldError("polynomial add: fields differ");
    Polynomial out = f;
    for (const auto& [m, c] : g.terms_) out.add_term_bits(m, c);
    return out;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    if (f.layout_ != g.layout_) throw ShapeError("polynomial mul: layouts differ");
    if (f.mod_ != g.mod_) throw IncompatibleFieldError("polynomial mul: fields differ");
    Polynomial out(f.layout_, f.mod_);
    for (const auto& [ma, ca] : f.terms_)
        for (const auto& [mb, cb] : g.terms_)
            out.add_term_bits(ma.times(mb), gf2_mul_bits(ca, cb, f.mod_));
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // deglex-descending
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += "+";
        const auto& [mono, coeff] = *it;
        if (coeff != 1) {
            out += std::to_string(coeff);
            if (!mono.is_one()) out += "*" + mono.str(layout_);
        } else {
            out += mono.str(layout_);
        }
    }
    return out;
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return text[pos];
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

std::uint64_t parse_uint(Cursor& cur) {
    cur.skip_ws();
    const auto start = cur.pos;
    int base = 10;
    if (cur.pos + 1 < cur.text.size() && cur.text[cur.pos] == '0' &&
        (cur.text[cur.pos + 1] == 'x' || cur.text[cur.pos + 1] == 'X')) {
        base = 16;
        cur.pos += 2;
    }
    std::uint64_t value = 0;
    auto res = std::from_chars(cur.text.data() + cur.pos, cur.text.data() + cur.text.size(),
                               value, base);
    if (res.ec != std::errc{} || res.ptr == cur.text.data() + cur.pos)
        throw ParseError("polynomial: expected integer at offset " + std::to_string(start));
    cur.pos = static_cast<std::size_t>(res.ptr - cur.text.data());
    return value;
}

std::string parse_ident(Cursor& cur) {
    cur.skip_ws();
    std::string out;
    while (cur.pos < cur.text.size() &&
           (std::isalnum(static_cast<unsigned char>(cur.text[cur.pos])))) {
        out += cur.text[cur.pos];
        ++cur.pos;
    }
    return out;
}

}  // namespace

Polynomial Polynomial::parse(std::string_view text, const VariableLayout& layout,
                             const Field& field) {
    Polynomial out(layout, field);
    Cursor cur{text};
    if (cur.done()) throw ParseError("polynomial: empty input");
    do {
        // one term: factors joined by '*'
        Monomial mono(layout.var_count());
        std::uint32_t coeff = 1;
        bool first_factor = true;
        do {
            cur.skip_ws();
            if (cur.pos >= cur.text.size())
                throw ParseError("polynomial: dangling '*' or '+'");
            const char c = cur.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                const std::uint64_t v = parse_uint(cur);
                if (v >= field.size())
                    throw ParseError("polynomial: coefficient encoding " + std::to_string(v) +
                                     " out of range for GF(2^" + std::to_string(field.m()) + ")");
                coeff = gf2_mul_bits(coeff, static_cast<std::uint32_t>(v), field.modulus());
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                const std::string name = parse_ident(cur);
                const auto idx = layout.var_index(name);
                if (!idx)
                    throw ParseError("polynomial: unknown variable '" + name + "'");
                int e = 1;
                if (cur.accept('^')) e = static_cast<int>(parse_uint(cur));
                mono.set_exp(*idx, mono.exp(*idx) + e);
            } else {
                throw ParseError(std::string("polynomial: unexpected character '") + c + "'");
            }
            first_factor = false;
        } while (cur.accept('*'));
        (void)first_factor;
        out.add_term_bits(mono, coeff);
    } while (cur.accept('+'));
    if (!cur.done())
        throw ParseError("polynomial: trailing garbage at offset " + std::to_string(cur.pos));
    return out;
}

int rho_character(const Monomial& m, const ModuleSpec& spec) {
    const VariableLayout layout = layout_of(spec);
    if (m.var_count() != layout.var_count())
        throw ShapeError("rho_character: monomial does not match the spec layout");
    const int p = spec.p();
    long acc = 0;
    for (int i = 0; i < spec.r(); ++i) {
        const long w = spec.weights()[static_cast<std::size_t>(i)];
        acc += w * (m.exp(layout.x(i)) - m.exp(layout.y(i)));
    }
    return static_cast<int>(((acc % p) + p) % p);
}

Monomial sigma_image(const Monomial& m, const VariableLayout& layout) {
    if (m.var_count() != layout.var_count())
        throw ShapeError("sigma_image: monomial does not match the layout");
    Monomial out(m);
    for (int i = 0; i < layout.r; ++i) {
        out.set_exp(layout.x(i), m.exp(layout.y(i)));
        out.set_exp(layout.y(i), m.exp(layout.x(i)));
    }
    for (int j = 0; j < layout.s; ++j) {
        out.set_exp(layout.z(j), m.exp(layout.w(j)));
        out.set_exp(layout.w(j), m.exp(layout.z(j)));
    }
    return out;
}

}  // namespace d2p

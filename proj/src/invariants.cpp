#include "d2p/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "linalg.hpp"

namespace d2p {

namespace {

// Character contribution of each variable: +m_i for x_i, p - m_i for y_i,
// 0 for z, w, e.
std::vector<int> variable_characters(const ModuleSpec& spec) {
    const VariableLayout lay = layout_of(spec);
    std::vector<int> chars(static_cast<std::size_t>(lay.var_count()), 0);
    for (int i = 0; i < spec.r(); ++i) {
        const int w = spec.weights()[static_cast<std::size_t>(i)] % spec.p();
        chars[static_cast<std::size_t>(lay.x(i))] = w;
        chars[static_cast<std::size_t>(lay.y(i))] = (spec.p() - w) % spec.p();
    }
    return chars;
}

std::vector<std::uint32_t> densify(const Polynomial& f,
                                   const std::map<Monomial, std::size_t, DeglexLess>& columns) {
    std::vector<std::uint32_t> row(columns.size(), 0);
    for (const auto& [mono, coeff] : f.terms()) {
        auto it = columns.find(mono);
        if (it == columns.end())
            throw PreconditionError(
                "degree slice: product contains a monomial outside the rho-invariant span");
        row[it->second] = coeff;
    }
    return row;
}

Polynomial polynomial_from_row(const std::vector<std::uint32_t>& row,
                               const std::vector<Monomial>& monomials, const ModuleSpec& spec) {
    Polynomial f(layout_of(spec), spec.field());
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j]) f.add_term_bits(monomials[j], row[j]);
    return f;
}

}  // namespace

int default_d_max(const ModuleSpec& spec) {
    return spec.s() + std::max(spec.r(), spec.p()) + 3;
}

std::vector<Monomial> enumerate_rho_invariant_monomials(const ModuleSpec& spec, int degree) {
    if (degree < 0) throw InvalidParameterError("enumerate: degree must be >= 0");
    const int nvars = layout_of(spec).var_count();
    const int p = spec.p();
    const std::vector<int> chars = variable_characters(spec);
    std::vector<Monomial> out;
    Monomial current(nvars);
    // Ascending lexicographic enumeration: low exponents first at the front.
    std::function<void(int, int, int)> rec = [&](int pos, int remaining, int character) {
        if (pos == nvars - 1) {
            current.set_exp(pos, remaining);
            if ((character + remaining * chars[static_cast<std::size_t>(pos)]) % p == 0)
                out.push_back(current);
            current.set_exp(pos, 0);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            current.set_exp(pos, e);
            rec(pos + 1, remaining - e,
                (character + e * chars[static_cast<std::size_t>(pos)]) % p);
        }
        current.set_exp(pos, 0);
    };
    if (nvars == 0) {
        if (degree == 0) out.push_back(Monomial(0));
        return out;
    }
    rec(0, degree, 0);
    return out;
}

OrbitSum orbit_sum(const Monomial& m, const ModuleSpec& spec) {
    if (rho_character(m, spec) != 0)
        throw PreconditionError("orbit_sum: monomial is not rho-invariant");
    const VariableLayout lay = layout_of(spec);
    const Monomial img = sigma_image(m, lay);
    const Monomial& rep = deglex_less(img, m) ? img : m;
    Polynomial poly(lay, spec.field());
    poly.add_term_bits(rep, 1);
    if (!(img == m)) poly.add_term_bits(sigma_image(rep, lay), 1);
    return {rep, std::move(poly)};
}

std::vector<OrbitSum> invariant_basis(const ModuleSpec& spec, int degree) {
    const VariableLayout lay = layout_of(spec);
    std::vector<OrbitSum> out;
    for (const auto& m : enumerate_rho_invariant_monomials(spec, degree)) {
        const Monomial img = sigma_image(m, lay);
        if (deglex_less(img, m)) continue;  // the representative was already visited
        out.push_back(orbit_sum(m, spec));
    }
    return out;
}

namespace {

// Shared product-span engine: enumerates multisets of generators with the
// given total degree, inserting each product row into the echelon; stops
// early once `rank_cap` is reached (pass SIZE_MAX for no cap).
void span_products(std::span<const Polynomial> generators, int degree, const ModuleSpec& spec,
                   const std::map<Monomial, std::size_t, DeglexLess>& columns,
                   detail::Echelon& ech, std::size_t rank_cap) {
    const Polynomial unit =
        Polynomial::term(layout_of(spec), Monomial(layout_of(spec).var_count()),
                         spec.field().one());
    std::function<bool(std::size_t, const Polynomial&, int)> rec =
        [&](std::size_t from, const Polynomial& acc, int remaining) -> bool {
        if (remaining == 0) {
            ech.insert(densify(acc, columns));
            return ech.rank() >= rank_cap;
        }
        for (std::size_t i = from; i < generators.size(); ++i) {
            const int d = generators[i].degree();
            if (d > remaining) continue;
            if (rec(i, acc * generators[i], remaining - d)) return true;
        }
        return false;
    };
    rec(0, unit, degree);
}

std::map<Monomial, std::size_t, DeglexLess> column_index(const std::vector<Monomial>& monos) {
    std::map<Monomial, std::size_t, DeglexLess> columns;
    for (std::size_t j = 0; j < monos.size(); ++j) columns.emplace(monos[j], j);
    return columns;
}

}  // namespace

DegreeSlice subalgebra_degree_slice(std::span<const Polynomial> generators, int degree,
                                    const ModuleSpec& spec) {
    if (degree < 1) throw InvalidParameterError("degree slice: degree must be >= 1");
    for (const auto& g : generators) {
        if (g.is_zero() || !g.is_homogeneous() || g.degree() < 1)
            throw PreconditionError(
                "degree slice: generators must be homogeneous of degree >= 1");
        if (g.layout() != layout_of(spec))
            throw ShapeError("degree slice: generator layout does not match the spec");
        for (const auto& [mono, coeff] : g.terms())
            if (rho_character(mono, spec) != 0)
                throw PreconditionError(
                    "degree slice: generator is not rho-invariant; span would leave the "
                    "invariant monomial space");
    }
    const std::vector<Monomial> monos = enumerate_rho_invariant_monomials(spec, degree);
    const auto columns = column_index(monos);
    detail::Echelon ech(spec.field(), monos.size());
    span_products(generators, degree, spec, columns, ech, static_cast<std::size_t>(-1));
    DegreeSlice slice;
    slice.rank = static_cast<int>(ech.rank());
    for (const auto& row : ech.rows())
        slice.basis.push_back(polynomial_from_row(row, monos, spec));
    return slice;
}

GeneratorTable minimal_generator_degrees(const ModuleSpec& spec, int d_max) {
    if (d_max < 1) throw InvalidParameterError("generator table: d_max must be >= 1");
    GeneratorTable table;
    table.d_max = d_max;
    table.paper_bound = spec.s() + std::max(spec.r(), spec.p());
    std::vector<Polynomial> chosen;
    for (int d = 1; d <= d_max; ++d) {
        const std::vector<Monomial> monos = enumerate_rho_invariant_monomials(spec, d);
        const auto columns = column_index(monos);
        const std::vector<OrbitSum> basis = invariant_basis(spec, d);

        detail::Echelon ech(spec.field(), monos.size());
        span_products(chosen, d, spec, columns, ech, basis.size());
        GeneratorTableRow row;
        row.degree = d;
        row.dim_invariants = static_cast<int>(basis.size());
        row.rank_from_below = static_cast<int>(ech.rank());
        // Greedy completion in deglex order of representatives.
        for (const auto& os : basis) {
            if (ech.rank() >= basis.size()) break;
            if (ech.insert(densify(os.polynomial, columns))) {
                row.representatives.push_back(os);
                chosen.push_back(os.polynomial);
            }
        }
        row.new_generators = static_cast<int>(row.representatives.size());
        if (ech.rank() != basis.size())
            throw InfeasibleError("generator table: orbit sums failed to span degree " +
                                  std::to_string(d));
        if (row.new_generators > 0) table.beta_observed = d;
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::vector<int> zero_sum_split(std::span<const ZeroSumTerm> terms, int anchor_index, int p) {
    if (p < 2) throw InvalidParameterError("zero_sum_split: p must be >= 2");
    if (anchor_index < 0 || anchor_index >= static_cast<int>(terms.size()))
        throw PreconditionError("zero_sum_split: anchor index out of range");
    long total_mult = 0;
    long signed_sum = 0;
    for (const auto& t : terms) {
        if (t.multiplicity < 0)
            throw PreconditionError("zero_sum_split: negative multiplicity");
        total_mult += t.multiplicity;
        signed_sum += static_cast<long>(((t.value % p) + p) % p) * t.multiplicity;
    }
    if (terms[static_cast<std::size_t>(anchor_index)].multiplicity < 2)
        throw PreconditionError("zero_sum_split: anchor multiplicity must be >= 2");
    if (total_mult < p + 1)
        throw PreconditionError("zero_sum_split: total multiplicity must be >= p + 1");
    if (signed_sum % p != 0)
        throw PreconditionError("zero_sum_split: full signed sum is not 0 mod p");

    const int n = static_cast<int>(terms.size());
    auto lo_hi = [&](int i) {
        const int mult = terms[static_cast<std::size_t>(i)].multiplicity;
        return i == anchor_index ? std::pair<int, int>{1, mult - 1}
                                 : std::pair<int, int>{0, mult};
    };
    // feasible[i][res]: residue `res` is reachable using terms i..n-1.
    std::vector<std::vector<char>> feasible(static_cast<std::size_t>(n + 1),
                                            std::vector<char>(static_cast<std::size_t>(p), 0));
    feasible[static_cast<std::size_t>(n)][0] = 1;
    for (int i = n - 1; i >= 0; --i) {
        const int v = ((terms[static_cast<std::size_t>(i)].value % p) + p) % p;
        const auto [lo, hi] = lo_hi(i);
        for (int res = 0; res < p; ++res) {
            for (int u = lo; u <= hi; ++u) {
                const int next = ((res - u * v) % p + p) % p;
                if (feasible[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(next)]) {
                    feasible[static_cast<std::size_t>(i)][static_cast<std::size_t>(res)] = 1;
                    break;
                }
            }
        }
    }
    if (!feasible[0][0])
        throw InfeasibleError("zero_sum_split: no valid split exists (bug signal)");
    // Lexicographically smallest multiplicity vector via greedy extraction.
    std::vector<int> out(static_cast<std::size_t>(n), 0);
    int res = 0;
    for (int i = 0; i < n; ++i) {
        const int v = ((terms[static_cast<std::size_t>(i)].value % p) + p) % p;
        const auto [lo, hi] = lo_hi(i);
        bool placed = false;
        for (int u = lo; u <= hi; ++u) {
            const int next = ((res - u * v) % p + p) % p;
            if (feasible[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(next)]) {
                out[static_cast<std::size_t>(i)] = u;
                res = next;
                placed = true;
                break;
            }
        }
        if (!placed) throw InfeasibleError("zero_sum_split: greedy extraction failed (bug signal)");
    }
    return out;
}

namespace {

Monomial single_variable(int nvars, int index, int exponent = 1) {
    Monomial m(nvars);
    m.set_exp(index, exponent);
    return m;
}

}  // namespace

SplitWitness reduce_monomial(const Monomial& m, const ModuleSpec& spec) {
    const VariableLayout lay = layout_of(spec);
    if (m.var_count() != lay.var_count())
        throw ShapeError("reduce_monomial: monomial does not match the spec layout");
    if (rho_character(m, spec) != 0)
        throw PreconditionError("reduce_monomial: monomial is not rho-invariant");
    const int bound = spec.s() + std::max(spec.r(), spec.p());
    if (m.degree() < bound + 1)
        throw PreconditionError("reduce_monomial: degree must exceed s + max{r, p}");
    const int nvars = lay.var_count();

    auto witness = [&](const Monomial& m1) {
        return SplitWitness{m1, m.divided_by(m1)};
    };

    // Trivial coordinates are invariant variables of degree one.
    for (int k = 0; k < spec.t(); ++k)
        if (m.exp(lay.e(k)) >= 1) return witness(single_variable(nvars, lay.e(k)));
    // (i) an invariant quadratic divides m
    for (int j = 0; j < spec.s(); ++j)
        if (m.exp(lay.z(j)) >= 1 && m.exp(lay.w(j)) >= 1)
            return witness(single_variable(nvars, lay.z(j)).times(
                single_variable(nvars, lay.w(j))));
    for (int i = 0; i < spec.r(); ++i)
        if (m.exp(lay.x(i)) >= 1 && m.exp(lay.y(i)) >= 1)
            return witness(single_variable(nvars, lay.x(i)).times(
                single_variable(nvars, lay.y(i))));
    // (ii) a repeated W_0 variable splits off alone
    for (int j = 0; j < spec.s(); ++j) {
        if (m.exp(lay.z(j)) >= 2) return witness(single_variable(nvars, lay.z(j)));
        if (m.exp(lay.w(j)) >= 2) return witness(single_variable(nvars, lay.w(j)));
    }
    // (iii) zero-sum split of the x/y part. Normalize so the anchored pair
    // has its repeat on the x side, applying sigma and transforming back
    // when needed.
    int pair = -1;
    for (int i = 0; i < spec.r(); ++i)
        if (m.exp(lay.x(i)) + m.exp(lay.y(i)) >= 2) {
            pair = i;
            break;
        }
    if (pair < 0)
        throw InfeasibleError("reduce_monomial: no repeated pair found (bug signal)");
    const bool flipped = m.exp(lay.x(pair)) < 2;
    const Monomial work = flipped ? sigma_image(m, lay) : m;

    std::vector<ZeroSumTerm> terms(2 * static_cast<std::size_t>(spec.r()));
    for (int i = 0; i < spec.r(); ++i) {
        const int w = spec.weights()[static_cast<std::size_t>(i)] % spec.p();
        terms[static_cast<std::size_t>(i)] = {w, work.exp(lay.x(i))};
        terms[static_cast<std::size_t>(spec.r() + i)] = {(spec.p() - w) % spec.p(),
                                                         work.exp(lay.y(i))};
    }
    const std::vector<int> sub = zero_sum_split(terms, pair, spec.p());
    Monomial m1(nvars);
    for (int i = 0; i < spec.r(); ++i) {
        m1.set_exp(lay.x(i), sub[static_cast<std::size_t>(i)]);
        m1.set_exp(lay.y(i), sub[static_cast<std::size_t>(spec.r() + i)]);
    }
    // m1 takes the whole z/w part; m2 stays inside the x/y variables.
    for (int j = 0; j < spec.s(); ++j) {
        m1.set_exp(lay.z(j), work.exp(lay.z(j)));
        m1.set_exp(lay.w(j), work.exp(lay.w(j)));
    }
    Monomial m2 = work.divided_by(m1);
    if (flipped) {
        m1 = sigma_image(m1, lay);
        m2 = sigma_image(m2, lay);
    }
    return {m1, m2};
}

Polynomial split_residual(const Monomial& m, const SplitWitness& w, const ModuleSpec& spec) {
    if (!(w.m1.times(w.m2) == m))
        throw PreconditionError("split certificate: m1 * m2 != m");
    const OrbitSum om = orbit_sum(m, spec);
    const OrbitSum o1 = orbit_sum(w.m1, spec);
    const OrbitSum o2 = orbit_sum(w.m2, spec);
    return om.polynomial + o1.polynomial * o2.polynomial;
}

bool check_split_certificate(const Monomial& m, const SplitWitness& w, const ModuleSpec& spec) {
    if (rho_character(w.m1, spec) != 0 || rho_character(w.m2, spec) != 0) return false;
    if (w.m1.degree() < 1 || w.m2.degree() < 1) return false;
    if (!(w.m1.times(w.m2) == m)) return false;
    const VariableLayout lay = layout_of(spec);
    const Polynomial residual = split_residual(m, w, spec);
    // The invariant quadratics are monomials, so the ideal slice they span
    // is the set of monomials divisible by one of them.
    for (const auto& [mono, coeff] : residual.terms()) {
        bool divisible = false;
        for (int i = 0; i < spec.r() && !divisible; ++i)
            divisible = mono.exp(lay.x(i)) >= 1 && mono.exp(lay.y(i)) >= 1;
        for (int j = 0; j < spec.s() && !divisible; ++j)
            divisible = mono.exp(lay.z(j)) >= 1 && mono.exp(lay.w(j)) >= 1;
        if (!divisible) return false;
    }
    return true;
}

}  // namespace d2p

#include "d2p/rep.hpp"

#include <algorithm>
#include <string>

#include "linalg.hpp"

namespace d2p {

namespace {

void check_point_shape(const Point& v, const ModuleSpec& spec, const char* op) {
    if (static_cast<int>(v.size()) != spec.dimension())
        throw ShapeError(std::string(op) + ": point length " + std::to_string(v.size()) +
                         " does not match the module dimension " +
                         std::to_string(spec.dimension()));
    for (const auto& c : v)
        if (!spec.field().contains(c))
            throw IncompatibleFieldError(std::string(op) +
                                         ": point coordinate from a different field");
}

}  // namespace

void validate(const MatrixRep& rep) {
    using detail::MatBits;
    const int n = rep.n;
    if (n <= 0 || rep.rho.size() != static_cast<std::size_t>(n) * n ||
        rep.sigma.size() != static_cast<std::size_t>(n) * n)
        throw InvalidRepresentationError("matrix rep: entry count does not match n^2");
    const Field& f = rep.field;
    for (std::uint32_t v : rep.rho)
        if (v >= f.size()) throw InvalidRepresentationError("matrix rep: rho entry out of field range");
    for (std::uint32_t v : rep.sigma)
        if (v >= f.size()) throw InvalidRepresentationError("matrix rep: sigma entry out of field range");

    const MatBits id = detail::mat_identity(n);
    MatBits rp = id;
    for (int k = 0; k < f.p(); ++k) rp = detail::mat_mul(n, rp, rep.rho, f);
    if (rp != id) throw InvalidRepresentationError("matrix rep: rho^p != identity");
    if (detail::mat_mul(n, rep.sigma, rep.sigma, f) != id)
        throw InvalidRepresentationError("matrix rep: sigma^2 != identity");
    // sigma rho sigma = rho^{-1}  <=>  sigma rho sigma rho = identity
    MatBits srs = detail::mat_mul(n, rep.sigma, rep.rho, f);
    srs = detail::mat_mul(n, srs, rep.sigma, f);
    srs = detail::mat_mul(n, srs, rep.rho, f);
    if (srs != id)
        throw InvalidRepresentationError("matrix rep: sigma rho sigma != rho^{-1}");
}

Decomposition decompose(const MatrixRep& rep) {
    using detail::MatBits;
    validate(rep);
    const Field& f = rep.field;
    const int n = rep.n;
    const int p = f.p();

    // Powers of rho.
    std::vector<MatBits> rho_pow(static_cast<std::size_t>(p));
    rho_pow[0] = detail::mat_identity(n);
    for (int j = 1; j < p; ++j) rho_pow[j] = detail::mat_mul(n, rho_pow[j - 1], rep.rho, f);

    // Eigenprojector onto Eig(rho, lambda^k): sum_j lambda^{-kj} rho^j.
    auto projector = [&](int k) {
        MatBits pi(static_cast<std::size_t>(n) * n, 0);
        for (int j = 0; j < p; ++j) {
            const std::uint32_t scale = f.lambda_pow(-static_cast<long>(k) * j).bits;
            const MatBits& rj = rho_pow[static_cast<std::size_t>(j)];
            for (std::size_t idx = 0; idx < pi.size(); ++idx)
                if (rj[idx]) pi[idx] ^= f.mul_bits(scale, rj[idx]);
        }
        return pi;
    };

    Decomposition out;
    int dim_seen = 0;
    for (int k = 1; k <= (p - 1) / 2; ++k) {
        const std::size_t mult = detail::mat_rank(n, projector(k), f);
        const std::size_t mult_conj = detail::mat_rank(n, projector(p - k), f);
        if (mult != mult_conj)
            throw InvalidRepresentationError(
                "matrix rep: eigenspaces of lambda^k and lambda^{-k} have different dimensions");
        if (mult > 0) out.w_counts[k] = static_cast<int>(mult);
        dim_seen += 2 * static_cast<int>(mult);
    }

    // Fixed space of rho: split the sigma-action into W_0 and trivial parts.
    const MatBits pi0 = projector(0);
    detail::Echelon col_basis(f, static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        std::vector<std::uint32_t> col(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)] = pi0[static_cast<std::size_t>(i) * n + j];
        col_basis.insert(std::move(col));
    }
    const int u = static_cast<int>(col_basis.rank());
    if (u > 0) {
        // Coordinates of sigma * b_i in the RREF basis read off at the pivots.
        MatBits c_plus_id(static_cast<std::size_t>(u) * u, 0);
        for (int i = 0; i < u; ++i) {
            const auto sb = detail::mat_vec(n, rep.sigma, col_basis.rows()[static_cast<std::size_t>(i)], f);
            std::vector<std::uint32_t> residual = sb;
            for (int j = 0; j < u; ++j) {
                const std::uint32_t cij = sb[col_basis.pivots()[static_cast<std::size_t>(j)]];
                c_plus_id[static_cast<std::size_t>(i) * u + j] = cij;
                if (cij) {
                    const auto& bj = col_basis.rows()[static_cast<std::size_t>(j)];
                    for (int l = 0; l < n; ++l)
                        if (bj[static_cast<std::size_t>(l)])
                            residual[static_cast<std::size_t>(l)] ^=
                                f.mul_bits(cij, bj[static_cast<std::size_t>(l)]);
                }
            }
            if (std::any_of(residual.begin(), residual.end(), [](std::uint32_t x) { return x != 0; }))
                throw InvalidRepresentationError(
                    "matrix rep: sigma does not preserve the rho-fixed space");
            c_plus_id[static_cast<std::size_t>(i) * u + i] ^= 1;
        }
        const int w0 = static_cast<int>(detail::mat_rank(u, c_plus_id, f));
        if (w0 > 0) out.w_counts[0] = w0;
        out.trivial = u - 2 * w0;
        dim_seen += u;
    }
    if (dim_seen != n)
        throw InvalidRepresentationError("matrix rep: eigenspace dimensions do not sum to n");
    return out;
}

MatrixRep regular_representation(int p, const Field& field) {
    if (field.p() != p)
        throw InvalidParameterError("regular_representation: field was built for a different p");
    const int n = 2 * p;
    MatrixRep rep{field, n, std::vector<std::uint32_t>(static_cast<std::size_t>(n) * n, 0),
                  std::vector<std::uint32_t>(static_cast<std::size_t>(n) * n, 0)};
    auto index = [&](GroupElement g) { return g.eps * p + g.j; };
    for (int eps = 0; eps <= 1; ++eps)
        for (int j = 0; j < p; ++j) {
            const GroupElement h{j, eps};
            rep.rho[static_cast<std::size_t>(index(compose(group_rho(), h, p))) * n + index(h)] = 1;
            rep.sigma[static_cast<std::size_t>(index(compose(group_sigma(), h, p))) * n + index(h)] = 1;
        }
    return rep;
}

MatrixRep matrices_from_spec(const ModuleSpec& spec) {
    const Field& f = spec.field();
    const int n = spec.dimension();
    const VariableLayout lay = layout_of(spec);
    MatrixRep rep{f, n, std::vector<std::uint32_t>(static_cast<std::size_t>(n) * n, 0),
                  std::vector<std::uint32_t>(static_cast<std::size_t>(n) * n, 0)};
    auto set = [&](std::vector<std::uint32_t>& m, int i, int j, std::uint32_t v) {
        m[static_cast<std::size_t>(i) * n + j] = v;
    };
    for (int i = 0; i < spec.r(); ++i) {
        const int w = spec.weights()[static_cast<std::size_t>(i)];
        set(rep.rho, lay.x(i), lay.x(i), f.lambda_pow(-w).bits);
        set(rep.rho, lay.y(i), lay.y(i), f.lambda_pow(w).bits);
        set(rep.sigma, lay.x(i), lay.y(i), 1);
        set(rep.sigma, lay.y(i), lay.x(i), 1);
    }
    for (int j = 0; j < spec.s(); ++j) {
        set(rep.rho, lay.z(j), lay.z(j), 1);
        set(rep.rho, lay.w(j), lay.w(j), 1);
        set(rep.sigma, lay.z(j), lay.w(j), 1);
        set(rep.sigma, lay.w(j), lay.z(j), 1);
    }
    for (int k = 0; k < spec.t(); ++k) {
        set(rep.rho, lay.e(k), lay.e(k), 1);
        set(rep.sigma, lay.e(k), lay.e(k), 1);
    }
    return rep;
}

Point act_on_point(GroupElement g, const Point& v, const ModuleSpec& spec) {
    check_point_shape(v, spec, "act_on_point");
    const Field& f = spec.field();
    const VariableLayout lay = layout_of(spec);
    Point out = v;
    if (g.eps) {
        for (int i = 0; i < spec.r(); ++i) std::swap(out[lay.x(i)], out[lay.y(i)]);
        for (int j = 0; j < spec.s(); ++j) std::swap(out[lay.z(j)], out[lay.w(j)]);
    }
    if (g.j) {
        for (int i = 0; i < spec.r(); ++i) {
            const long w = spec.weights()[static_cast<std::size_t>(i)];
            out[lay.x(i)] = f.lambda_pow(-static_cast<long>(g.j) * w) * out[lay.x(i)];
            out[lay.y(i)] = f.lambda_pow(static_cast<long>(g.j) * w) * out[lay.y(i)];
        }
    }
    return out;
}

Polynomial act_on_polynomial(GroupElement g, const Polynomial& f, const ModuleSpec& spec) {
    const VariableLayout lay = layout_of(spec);
    if (f.layout() != lay)
        throw ShapeError("act_on_polynomial: polynomial layout does not match the spec");
    if (f.coeff_mod() != spec.field().modulus())
        throw IncompatibleFieldError("act_on_polynomial: polynomial over a different field");
    Polynomial out(lay, f.coeff_mod());
    for (const auto& [mono, coeff] : f.terms()) {
        Monomial img = g.eps ? sigma_image(mono, lay) : mono;
        // rho^j scales a monomial by lambda^{j * character}
        const std::uint32_t scale = spec.field().lambda_pow(
            static_cast<long>(g.j) * rho_character(img, spec)).bits;
        out.add_term_bits(img, gf2_mul_bits(coeff, scale, f.coeff_mod()));
    }
    return out;
}

bool is_invariant(const Polynomial& f, const ModuleSpec& spec) {
    return act_on_polynomial(group_rho(), f, spec) == f &&
           act_on_polynomial(group_sigma(), f, spec) == f;
}

std::vector<std::uint32_t> encode_point(const Point& v) {
    std::vector<std::uint32_t> out;
    out.reserve(v.size());
    for (const auto& c : v) out.push_back(c.bits);
    return out;
}

Point decode_point(const std::vector<std::uint32_t>& bits, const Field& field) {
    Point out;
    out.reserve(bits.size());
    for (std::uint32_t b : bits) out.push_back(field.element(b));
    return out;
}

std::vector<Point> orbit_of_point(const Point& v, const ModuleSpec& spec) {
    std::vector<std::vector<std::uint32_t>> seen;
    for (const auto& g : all_group_elements(spec.p()))
        seen.push_back(encode_point(act_on_point(g, v, spec)));
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    std::vector<Point> out;
    out.reserve(seen.size());
    for (const auto& enc : seen) out.push_back(decode_point(enc, spec.field()));
    return out;
}

}  // namespace d2p

#pragma once

#include <map>
#include <vector>

#include "d2p/poly.hpp"

namespace d2p {

/// A matrix representation of D_2p: the images of rho and sigma as square
/// matrices over the field, row-major raw encodings.
struct MatrixRep {
    Field field;
    int n = 0;
    std::vector<std::uint32_t> rho;
    std::vector<std::uint32_t> sigma;

    std::uint32_t rho_at(int i, int j) const { return rho[static_cast<std::size_t>(i) * n + j]; }
    std::uint32_t sigma_at(int i, int j) const {
        return sigma[static_cast<std::size_t>(i) * n + j];
    }
};

/// Throws InvalidRepresentationError naming the violated relation
/// (rho^p = 1, sigma^2 = 1, or sigma rho sigma = rho^{-1}).
void validate(const MatrixRep& rep);

/// Multiset of indecomposable summands: multiplicity of each W_k
/// (k = 0 for the swap module) plus the number of trivial summands.
struct Decomposition {
    std::map<int, int> w_counts;  // k -> multiplicity, zero entries omitted
    int trivial = 0;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Decompose via the eigenprojectors of rho (the scalar 1/p equals 1 in
/// characteristic two for odd p) and the sigma-action on the fixed space.
Decomposition decompose(const MatrixRep& rep);

/// Left-multiplication action on the group-element basis of FG; basis
/// index of rho^j sigma^eps is eps*p + j.
MatrixRep regular_representation(int p, const Field& field);

/// Point-layout matrices of rho and sigma for the given module spec;
/// round-trips with decompose.
MatrixRep matrices_from_spec(const ModuleSpec& spec);

Point act_on_point(GroupElement g, const Point& v, const ModuleSpec& spec);

/// Action on polynomial functions, g(f) = f after substituting the
/// variable images under g^{-1}; satisfies
/// eval(act(g, f), v) = eval(f, act(g^{-1}, v)).
Polynomial act_on_polynomial(GroupElement g, const Polynomial& f, const ModuleSpec& spec);

bool is_invariant(const Polynomial& f, const ModuleSpec& spec);

/// {g v : g in D_2p}, deduplicated, sorted lexicographically on encodings.
std::vector<Point> orbit_of_point(const Point& v, const ModuleSpec& spec);

std::vector<std::uint32_t> encode_point(const Point& v);
Point decode_point(const std::vector<std::uint32_t>& bits, const Field& field);

}  // namespace d2p

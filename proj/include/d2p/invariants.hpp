#pragma once

#include <span>
#include <vector>

#include "d2p/rep.hpp"

namespace d2p {

/// Orbit sum o(m) of a rho-invariant monomial: m itself when sigma-fixed,
/// m + sigma(m) otherwise. The representative is the deglex-smaller of the
/// pair {m, sigma(m)}.
struct OrbitSum {
    Monomial representative;
    Polynomial polynomial;
};

struct GeneratorTableRow {
    int degree = 0;
    int dim_invariants = 0;   // dim F[V]^G in this degree
    int rank_from_below = 0;  // rank of products of lower-degree generators
    int new_generators = 0;
    std::vector<OrbitSum> representatives;
};

/// Degree-by-degree generator report, truncated at d_max; degrees above
/// d_max are unexplored, not proven empty.
struct GeneratorTable {
    std::vector<GeneratorTableRow> rows;
    int d_max = 0;
    int beta_observed = 0;  // largest degree with a new generator, 0 if none
    int paper_bound = 0;    // s + max{r, p}
};

/// Default truncation window for generator tables.
int default_d_max(const ModuleSpec& spec);

/// Monomials of the given degree fixed by rho, in ascending deglex order.
std::vector<Monomial> enumerate_rho_invariant_monomials(const ModuleSpec& spec, int degree);

OrbitSum orbit_sum(const Monomial& m, const ModuleSpec& spec);

/// One orbit sum per sigma-orbit of the degree-d rho-invariant monomials;
/// their supports are disjoint, so they form a basis of F[V]^G_d.
std::vector<OrbitSum> invariant_basis(const ModuleSpec& spec, int degree);

struct DegreeSlice {
    std::vector<Polynomial> basis;  // echelonized, deterministic
    int rank = 0;
};

/// Row-reduced basis of the span of all products of the generators with
/// total degree exactly `degree` (each generator may repeat).
DegreeSlice subalgebra_degree_slice(std::span<const Polynomial> generators, int degree,
                                    const ModuleSpec& spec);

GeneratorTable minimal_generator_degrees(const ModuleSpec& spec, int d_max);

struct ZeroSumTerm {
    int value = 0;         // residue mod p
    int multiplicity = 0;  // available copies
};

/// Sub-multiplicities u_i <= multiplicity_i with sum u_i * value_i = 0 mod p
/// and 0 < u_anchor < multiplicity_anchor; lexicographically smallest such
/// vector, found by a feasibility DP over residues.
std::vector<int> zero_sum_split(std::span<const ZeroSumTerm> terms, int anchor_index, int p);

/// Factorization m = m1 * m2 into rho-invariant monomials of degree >= 1,
/// witnessing that the orbit sum o(m) is expressible.
struct SplitWitness {
    Monomial m1;
    Monomial m2;
};

/// Constructive reduction for rho-invariant monomials of degree above
/// s + max{r, p}: peel an invariant quadratic or single W_0 variable when
/// possible, otherwise split the x/y part through a zero-sum subsequence.
SplitWitness reduce_monomial(const Monomial& m, const ModuleSpec& spec);

/// The product-expansion residual o(m) + o(m1) o(m2).
Polynomial split_residual(const Monomial& m, const SplitWitness& w, const ModuleSpec& spec);

/// Certificate: the residual lies in the degree-deg(m) slice of the ideal
/// generated by the invariant quadratics x_i y_i and z_j w_j.
bool check_split_certificate(const Monomial& m, const SplitWitness& w, const ModuleSpec& spec);

}  // namespace d2p

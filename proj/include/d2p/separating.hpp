#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "d2p/invariants.hpp"

namespace d2p {

enum class Provenance {
    XyBlock,            // x_r y_r
    FrobeniusBlock,     // x_r^p + y_r^p
    Fi,                 // x_r y_i^{n_i} + y_r x_i^{n_i}
    Gi,                 // x_r x_i^{p-n_i} + y_r y_i^{p-n_i}
    Fij,                // x_r y_i^{n_i} z_j + y_r x_i^{n_i} w_j
    Hj,                 // x_r^p z_j + y_r^p w_j
    W0Block,            // separating set for the W_0 summands
    TrivialCoordinate,  // e_k
    Recursive,          // element of unknown origin (e.g. read from a file)
};

std::string provenance_name(Provenance p);

struct SeparatingElement {
    Polynomial poly;
    Provenance provenance = Provenance::Recursive;
    std::string label;  // human-readable detail, e.g. "f_1 (level r=2)"
};

struct SeparatingSet {
    std::vector<SeparatingElement> elements;
};

/// The recursive explicit construction: peel the last weight, emit the
/// block set T for it, recurse on the remaining weights, and close with
/// the W_0 block and one coordinate function per trivial summand.
/// Requires p prime.
SeparatingSet theorem42_set(const ModuleSpec& spec);

/// {z_j + w_j, z_j w_j} for each j plus the cross terms z_j w_k + z_k w_j;
/// separates the simultaneous-swap orbits on the W_0 part (oracle-checked
/// exhaustively in the test suite).
std::vector<Polynomial> w0_separating_set(const ModuleSpec& spec);

enum class VerifyMode { Exhaustive, Sampled };

enum class Verdict { Separating, Counterexample, InconclusiveSampled };

struct SeparationReport {
    VerifyMode mode = VerifyMode::Exhaustive;
    std::uint64_t points_examined = 0;
    std::uint64_t signature_classes = 0;
    Verdict verdict = Verdict::Separating;
    std::optional<std::pair<Point, Point>> counterexample;
    std::optional<std::uint64_t> seed;  // sampled mode only
};

/// Exhaustive mode keys every rational point by its evaluation signature
/// and checks each signature class is a single orbit; the scan order is
/// lexicographic on encoded points, so the first counterexample is
/// deterministic. Sampled mode draws seeded uniform pairs. Throws
/// BudgetExceededError when the exhaustive point count exceeds the budget.
SeparationReport verify_separating(const ModuleSpec& spec, const SeparatingSet& set,
                                   VerifyMode mode, std::uint64_t budget, std::uint64_t seed);

struct BetaSepWitness {
    bool separated_at_p_plus_1 = false;  // z x^p + w y^p splits the witness pair
    bool separated_at_le_p = false;      // some orbit sum of degree <= p does
};

/// The witness computation on W_1 + W_0 behind beta_sep(D_2p) = p + 1:
/// expected result is (true, false) for every odd p >= 3.
BetaSepWitness beta_sep_witness(int p);

/// The two points and the invariant used by the witness argument.
struct BetaSepFixture {
    ModuleSpec spec;
    Point v1;
    Point v2;
    Polynomial separating_invariant;  // z x^p + w y^p
};

BetaSepFixture beta_sep_fixture(int p);

struct BoundComparison {
    int paper_bound = 0;        // s + max{r, p}
    long symonds_bound = 0;     // dim V * (2p - 1)
    int beta_sep_bound = 0;     // p + 1
};

BoundComparison bound_comparison(const ModuleSpec& spec);

}  // namespace d2p

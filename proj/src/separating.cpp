#include "d2p/separating.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <map>
#include <random>
#include <thread>

namespace d2p {

namespace {

long modinv(long a, long p) {
    long t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
    while (new_r != 0) {
        const long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw InvalidParameterError("modinv: not invertible");
    return ((t % p) + p) % p;
}

Monomial mono_of(const VariableLayout& lay, std::initializer_list<std::pair<int, int>> exps) {
    Monomial m(lay.var_count());
    for (auto [idx, e] : exps) m.set_exp(idx, m.exp(idx) + e);
    return m;
}

Polynomial two_term(const VariableLayout& lay, const Field& f, const Monomial& a,
                    const Monomial& b) {
    Polynomial poly(lay, f);
    poly.add_term_bits(a, 1);
    poly.add_term_bits(b, 1);
    return poly;
}

void push_checked(SeparatingSet& set, Polynomial poly, Provenance prov, std::string label,
                  const ModuleSpec& spec) {
    if (!is_invariant(poly, spec))
        throw InfeasibleError("separating set: produced a non-invariant element (" + label +
                              "); bug signal");
    set.elements.push_back({std::move(poly), prov, std::move(label)});
}

}  // namespace

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::XyBlock: return "xy-block";
        case Provenance::FrobeniusBlock: return "frobenius-block";
        case Provenance::Fi: return "f_i";
        case Provenance::Gi: return "g_i";
        case Provenance::Fij: return "f_ij";
        case Provenance::Hj: return "h_j";
        case Provenance::W0Block: return "w0-block";
        case Provenance::TrivialCoordinate: return "trivial-coordinate";
        case Provenance::Recursive: return "recursive";
    }
    return "unknown";
}

std::vector<Polynomial> w0_separating_set(const ModuleSpec& spec) {
    const VariableLayout lay = layout_of(spec);
    const Field& f = spec.field();
    std::vector<Polynomial> out;
    for (int j = 0; j < spec.s(); ++j) {
        out.push_back(two_term(lay, f, mono_of(lay, {{lay.z(j), 1}}), mono_of(lay, {{lay.w(j), 1}})));
        Polynomial prod(lay, f);
        prod.add_term_bits(mono_of(lay, {{lay.z(j), 1}, {lay.w(j), 1}}), 1);
        out.push_back(std::move(prod));
    }
    for (int j = 0; j < spec.s(); ++j)
        for (int k = j + 1; k < spec.s(); ++k)
            out.push_back(two_term(lay, f, mono_of(lay, {{lay.z(j), 1}, {lay.w(k), 1}}),
                                   mono_of(lay, {{lay.z(k), 1}, {lay.w(j), 1}})));
    return out;
}

SeparatingSet theorem42_set(const ModuleSpec& spec) {
    const int p = spec.p();
    if (!is_prime(p))
        throw UnsupportedError("theorem42_set: the construction assumes p prime, got p = " +
                               std::to_string(p));
    const VariableLayout lay = layout_of(spec);
    const Field& f = spec.field();
    SeparatingSet set;

    for (int level = spec.r(); level >= 1; --level) {
        const int rr = level - 1;  // 0-based index of the peeled pair
        const long m_r = spec.weights()[static_cast<std::size_t>(rr)];
        const std::string at = " (level r=" + std::to_string(level) + ")";

        push_checked(set,
                     Polynomial::term(lay, mono_of(lay, {{lay.x(rr), 1}, {lay.y(rr), 1}}),
                                      f.one()),
                     Provenance::XyBlock, "x_r*y_r" + at, spec);
        push_checked(set,
                     two_term(lay, f, mono_of(lay, {{lay.x(rr), p}}),
                              mono_of(lay, {{lay.y(rr), p}})),
                     Provenance::FrobeniusBlock, "x_r^p+y_r^p" + at, spec);

        for (int i = 0; i < rr; ++i) {
            const long m_i = spec.weights()[static_cast<std::size_t>(i)];
            // unique n_i in [1, p-1] making x_r y_i^{n_i} rho-invariant
            const int n_i = static_cast<int>((m_r * modinv(m_i, p)) % p);
            if (n_i < 1 || rho_character(mono_of(lay, {{lay.x(rr), 1}, {lay.y(i), n_i}}),
                                         spec) != 0)
                throw InfeasibleError("theorem42_set: n_i does not cancel the character");
            const std::string which = "_" + std::to_string(i + 1);
            push_checked(set,
                         two_term(lay, f, mono_of(lay, {{lay.x(rr), 1}, {lay.y(i), n_i}}),
                                  mono_of(lay, {{lay.y(rr), 1}, {lay.x(i), n_i}})),
                         Provenance::Fi, "f" + which + at, spec);
            push_checked(set,
                         two_term(lay, f, mono_of(lay, {{lay.x(rr), 1}, {lay.x(i), p - n_i}}),
                                  mono_of(lay, {{lay.y(rr), 1}, {lay.y(i), p - n_i}})),
                         Provenance::Gi, "g" + which + at, spec);
            for (int j = 0; j < spec.s(); ++j) {
                push_checked(
                    set,
                    two_term(lay, f,
                             mono_of(lay, {{lay.x(rr), 1}, {lay.y(i), n_i}, {lay.z(j), 1}}),
                             mono_of(lay, {{lay.y(rr), 1}, {lay.x(i), n_i}, {lay.w(j), 1}})),
                    Provenance::Fij, "f" + which + "_" + std::to_string(j + 1) + at, spec);
            }
        }
        for (int j = 0; j < spec.s(); ++j) {
            push_checked(set,
                         two_term(lay, f, mono_of(lay, {{lay.x(rr), p}, {lay.z(j), 1}}),
                                  mono_of(lay, {{lay.y(rr), p}, {lay.w(j), 1}})),
                         Provenance::Hj, "h_" + std::to_string(j + 1) + at, spec);
        }
    }
    int j = 0;
    for (auto& poly : w0_separating_set(spec))
        push_checked(set, std::move(poly), Provenance::W0Block,
                     "w0-block #" + std::to_string(++j), spec);
    for (int k = 0; k < spec.t(); ++k)
        push_checked(set,
                     Polynomial::term(lay, mono_of(lay, {{lay.e(k), 1}}), f.one()),
                     Provenance::TrivialCoordinate, "e_" + std::to_string(k + 1), spec);
    return set;
}

namespace {

using Encoded = std::vector<std::uint32_t>;

Encoded orbit_canon(const Point& v, const ModuleSpec& spec) {
    Encoded best;
    for (const auto& g : all_group_elements(spec.p())) {
        Encoded enc = encode_point(act_on_point(g, v, spec));
        if (best.empty() || enc < best) best = std::move(enc);
    }
    return best;
}

Encoded signature_of(const Point& v, const std::vector<const Polynomial*>& polys) {
    Encoded sig;
    sig.reserve(polys.size());
    for (const auto* f : polys) sig.push_back(f->eval(v).bits);
    return sig;
}

Point point_from_index(std::uint64_t index, int dim, const Field& field) {
    const std::uint64_t q = field.size();
    Point v(static_cast<std::size_t>(dim));
    for (int c = dim - 1; c >= 0; --c) {
        v[static_cast<std::size_t>(c)] = field.element(static_cast<std::uint32_t>(index % q));
        index /= q;
    }
    return v;
}

// Per-chunk record for one signature: the first point seen and, when the
// chunk itself contains a clash, the first point with a different canon.
struct SigEntry {
    Encoded canon;
    std::uint64_t first_index = 0;
    std::optional<std::pair<Encoded, std::uint64_t>> second;  // different canon
};

using SigMap = std::map<Encoded, SigEntry>;

SigMap scan_range(std::uint64_t lo, std::uint64_t hi, const ModuleSpec& spec,
                  const std::vector<const Polynomial*>& polys) {
    SigMap out;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        const Point v = point_from_index(idx, spec.dimension(), spec.field());
        Encoded sig = signature_of(v, polys);
        Encoded canon = orbit_canon(v, spec);
        auto [it, inserted] = out.try_emplace(std::move(sig));
        if (inserted) {
            it->second.canon = std::move(canon);
            it->second.first_index = idx;
        } else if (!it->second.second && canon != it->second.canon) {
            it->second.second = {std::move(canon), idx};
        }
    }
    return out;
}

}  // namespace

SeparationReport verify_separating(const ModuleSpec& spec, const SeparatingSet& set,
                                   VerifyMode mode, std::uint64_t budget, std::uint64_t seed) {
    const VariableLayout lay = layout_of(spec);
    std::vector<const Polynomial*> polys;
    for (const auto& el : set.elements) {
        if (el.poly.layout() != lay)
            throw ShapeError("verify_separating: set element layout does not match the spec");
        if (!is_invariant(el.poly, spec))
            throw PreconditionError(
                "verify_separating: set element is not G-invariant: " + el.poly.str());
        polys.push_back(&el.poly);
    }

    SeparationReport report;
    report.mode = mode;
    const int dim = spec.dimension();
    const Field& field = spec.field();

    if (mode == VerifyMode::Sampled) {
        report.seed = seed;
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint32_t> coord(
            0, static_cast<std::uint32_t>(field.size() - 1));
        auto draw = [&] {
            Point v(static_cast<std::size_t>(dim));
            for (auto& c : v) c = field.element(coord(rng));
            return v;
        };
        std::map<Encoded, int> classes;
        for (std::uint64_t k = 0; k < budget; ++k) {
            const Point u = draw();
            const Point v = draw();
            report.points_examined += 2;
            Encoded su = signature_of(u, polys);
            Encoded sv = signature_of(v, polys);
            classes.try_emplace(su);
            classes.try_emplace(sv);
            if (su == sv && orbit_canon(u, spec) != orbit_canon(v, spec)) {
                report.signature_classes = classes.size();
                report.verdict = Verdict::Counterexample;
                report.counterexample = {u, v};
                return report;
            }
        }
        report.signature_classes = classes.size();
        report.verdict = Verdict::InconclusiveSampled;
        return report;
    }

    // Exhaustive: the rational point count is 2^(m * dim); refuse over budget.
    const long total_bits = static_cast<long>(field.m()) * dim;
    if (total_bits >= 64)
        throw BudgetExceededError("verify_separating: exhaustive scan needs 2^" +
                                      std::to_string(total_bits) + " points, budget is " +
                                      std::to_string(budget),
                                  std::numeric_limits<std::uint64_t>::max());
    const std::uint64_t total = std::uint64_t{1} << total_bits;
    if (total > budget)
        throw BudgetExceededError("verify_separating: exhaustive scan needs " +
                                      std::to_string(total) + " points, budget is " +
                                      std::to_string(budget),
                                  total);

    // Partition the scan into index ranges; the merge below is associative
    // and processed in range order, so the outcome is chunk-independent.
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t nchunks =
        total >= 4096 ? std::min<std::uint64_t>(hw, std::max<std::uint64_t>(1, total / 4096))
                      : 1;
    std::vector<std::future<SigMap>> futures;
    for (std::uint64_t k = 0; k < nchunks; ++k) {
        const std::uint64_t lo = total / nchunks * k + std::min(k, total % nchunks);
        const std::uint64_t hi = total / nchunks * (k + 1) + std::min(k + 1, total % nchunks);
        futures.push_back(std::async(nchunks == 1 ? std::launch::deferred : std::launch::async,
                                     scan_range, lo, hi, std::cref(spec), std::cref(polys)));
    }

    SigMap merged;
    std::optional<std::uint64_t> clash_index;   // earliest conflicting point
    std::optional<std::uint64_t> clash_partner; // first point of its class
    auto consider = [&](std::uint64_t idx, std::uint64_t partner) {
        if (!clash_index || idx < *clash_index) {
            clash_index = idx;
            clash_partner = partner;
        }
    };
    for (auto& fut : futures) {
        SigMap part = fut.get();
        for (auto& [sig, entry] : part) {
            auto it = merged.find(sig);
            if (it == merged.end()) {
                merged.emplace(sig, std::move(entry));
                continue;
            }
            SigEntry& first = it->second;
            if (entry.canon != first.canon)
                consider(entry.first_index, first.first_index);
            else if (entry.second)
                consider(entry.second->second, first.first_index);
        }
    }
    // Clashes inside a single chunk surface through the merged entries too.
    for (const auto& [sig, entry] : merged)
        if (entry.second) consider(entry.second->second, entry.first_index);

    report.points_examined = total;
    report.signature_classes = merged.size();
    if (clash_index) {
        report.verdict = Verdict::Counterexample;
        report.counterexample = {point_from_index(*clash_partner, dim, field),
                                 point_from_index(*clash_index, dim, field)};
    } else {
        report.verdict = Verdict::Separating;
    }
    return report;
}

BetaSepFixture beta_sep_fixture(int p) {
    if (p < 3 || p % 2 == 0)
        throw InvalidParameterError("beta_sep_witness: p must be an odd integer >= 3");
    ModuleSpec spec(Field::for_p(p), {1}, 1);
    const Field& f = spec.field();
    const VariableLayout lay = layout_of(spec);
    const Point v1 = {f.zero(), f.one(), f.one(), f.zero()};
    const Point v2 = {f.zero(), f.one(), f.zero(), f.one()};
    Polynomial h(lay, f);
    h.add_term_bits(mono_of(lay, {{lay.z(0), 1}, {lay.x(0), p}}), 1);
    h.add_term_bits(mono_of(lay, {{lay.w(0), 1}, {lay.y(0), p}}), 1);
    return {std::move(spec), v1, v2, std::move(h)};
}

BetaSepWitness beta_sep_witness(int p) {
    const BetaSepFixture fx = beta_sep_fixture(p);
    BetaSepWitness out;
    out.separated_at_p_plus_1 =
        fx.separating_invariant.eval(fx.v1) != fx.separating_invariant.eval(fx.v2);
    // By the spanning lemma, checking every orbit-sum basis element of
    // degree <= p decides all invariants of degree <= p.
    out.separated_at_le_p = false;
    for (int d = 0; d <= p && !out.separated_at_le_p; ++d)
        for (const auto& os : invariant_basis(fx.spec, d))
            if (os.polynomial.eval(fx.v1) != os.polynomial.eval(fx.v2)) {
                out.separated_at_le_p = true;
                break;
            }
    return out;
}

BoundComparison bound_comparison(const ModuleSpec& spec) {
    BoundComparison out;
    out.paper_bound = spec.s() + std::max(spec.r(), spec.p());
    out.symonds_bound = static_cast<long>(spec.dimension()) * (2L * spec.p() - 1);
    out.beta_sep_bound = spec.p() + 1;
    return out;
}

}  // namespace d2p

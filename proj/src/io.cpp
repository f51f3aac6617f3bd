#include "d2p/io.hpp"

#include <fstream>
#include <sstream>

namespace d2p::io {

namespace {

json require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("json: missing key \"") + key + "\"");
    return j.at(key);
}

}  // namespace

json field_to_json(const Field& f) {
    return json{{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}, {"lambda", f.lambda().bits}};
}

Field field_from_json(const json& j) {
    try {
        return Field::from_params(require(j, "p").get<int>(), require(j, "m").get<int>(),
                                  require(j, "modulus").get<std::uint32_t>(),
                                  require(j, "lambda").get<std::uint32_t>());
    } catch (const json::exception& e) {
        throw ParseError(std::string("field json: ") + e.what());
    }
}

ModuleSpec module_spec_from_json(const json& j, int field_multiplier) {
    try {
        const int p = require(j, "p").get<int>();
        auto weights = require(j, "weights").get<std::vector<int>>();
        const int s = require(j, "s").get<int>();
        const int t = j.value("t", 0);
        Field field = j.contains("field") ? field_from_json(j.at("field"))
                                          : Field::for_p(p, field_multiplier);
        if (field.p() != p)
            throw ParseError("module spec json: field p differs from spec p");
        return ModuleSpec(std::move(field), std::move(weights), s, t);
    } catch (const json::exception& e) {
        throw ParseError(std::string("module spec json: ") + e.what());
    }
}

json module_spec_to_json(const ModuleSpec& spec) {
    return json{{"p", spec.p()},
                {"weights", spec.weights()},
                {"s", spec.s()},
                {"t", spec.t()},
                {"field", field_to_json(spec.field())}};
}

MatrixRep matrix_rep_from_json(const json& j) {
    try {
        Field field = field_from_json(require(j, "field"));
        const int n = require(j, "n").get<int>();
        auto rho = require(j, "rho").get<std::vector<std::uint32_t>>();
        auto sigma = require(j, "sigma").get<std::vector<std::uint32_t>>();
        return MatrixRep{std::move(field), n, std::move(rho), std::move(sigma)};
    } catch (const json::exception& e) {
        throw ParseError(std::string("matrix rep json: ") + e.what());
    }
}

json matrix_rep_to_json(const MatrixRep& rep) {
    return json{{"field", field_to_json(rep.field)},
                {"n", rep.n},
                {"rho", rep.rho},
                {"sigma", rep.sigma}};
}

json decomposition_to_json(const Decomposition& d) {
    json multiset = json::object();
    for (const auto& [k, count] : d.w_counts)
        multiset["W_" + std::to_string(k)] = count;
    if (d.trivial > 0) multiset["trivial"] = d.trivial;
    return json{{"multiset", multiset}};
}

json generator_table_to_json(const GeneratorTable& t, const ModuleSpec& spec) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json reps = json::array();
        for (const auto& os : row.representatives) reps.push_back(os.polynomial.str());
        rows.push_back(json{{"degree", row.degree},
                            {"dim_invariants", row.dim_invariants},
                            {"rank_from_below", row.rank_from_below},
                            {"new_generators", row.new_generators},
                            {"representatives", reps}});
    }
    return json{{"spec", module_spec_to_json(spec)},
                {"d_max", t.d_max},
                {"beta_observed", t.beta_observed},
                {"paper_bound", t.paper_bound},
                {"unexplored_above", t.d_max},
                {"rows", rows}};
}

std::string generator_table_to_csv(const GeneratorTable& t) {
    std::ostringstream out;
    out << "degree,dim_invariants,rank_from_below,new_generators,representatives\n";
    for (const auto& row : t.rows) {
        out << row.degree << "," << row.dim_invariants << "," << row.rank_from_below << ","
            << row.new_generators << ",";
        for (std::size_t i = 0; i < row.representatives.size(); ++i) {
            if (i) out << ";";
            out << row.representatives[i].polynomial.str();
        }
        out << "\n";
    }
    return out.str();
}

std::string generator_table_to_text(const GeneratorTable& t) {
    std::ostringstream out;
    out << "deg  dim  from_below  new  representatives\n";
    for (const auto& row : t.rows) {
        out << row.degree << "    " << row.dim_invariants << "    " << row.rank_from_below
            << "           " << row.new_generators << "   ";
        for (std::size_t i = 0; i < row.representatives.size(); ++i) {
            if (i) out << "; ";
            out << row.representatives[i].polynomial.str();
        }
        out << "\n";
    }
    out << "beta_observed " << t.beta_observed << ", paper bound " << t.paper_bound
        << ", degrees above " << t.d_max << " unexplored\n";
    return out.str();
}

json separating_set_to_json(const SeparatingSet& set) {
    json elements = json::array();
    for (const auto& el : set.elements)
        elements.push_back(json{{"poly", el.poly.str()},
                                {"provenance", provenance_name(el.provenance)},
                                {"label", el.label}});
    return json{{"size", set.elements.size()}, {"elements", elements}};
}

std::string separating_set_to_text(const SeparatingSet& set) {
    std::ostringstream out;
    for (const auto& el : set.elements) {
        out << el.poly.str() << "  # " << provenance_name(el.provenance);
        if (!el.label.empty()) out << " " << el.label;
        out << "\n";
    }
    return out.str();
}

SeparatingSet separating_set_from_text(const std::string& text, const ModuleSpec& spec) {
    SeparatingSet set;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        set.elements.push_back({Polynomial::parse(line, layout_of(spec), spec.field()),
                                Provenance::Recursive, ""});
    }
    return set;
}

json point_to_json(const Point& v) {
    json out = json::array();
    for (const auto& c : v) out.push_back(c.bits);
    return out;
}

json separation_report_to_json(const SeparationReport& r) {
    json out{{"mode", r.mode == VerifyMode::Exhaustive ? "exhaustive" : "sampled"},
             {"points", r.points_examined},
             {"classes", r.signature_classes}};
    switch (r.verdict) {
        case Verdict::Separating: out["verdict"] = "separating"; break;
        case Verdict::Counterexample: out["verdict"] = "counterexample"; break;
        case Verdict::InconclusiveSampled: out["verdict"] = "inconclusive-sampled"; break;
    }
    out["counterexample"] = r.counterexample
            ? json::array({point_to_json(r.counterexample->first),
                           point_to_json(r.counterexample->second)})
            : json(nullptr);
    out["seed"] = r.seed ? json(*r.seed) : json(nullptr);
    return out;
}

json beta_sep_witness_to_json(int p, const BetaSepWitness& w) {
    const BetaSepFixture fx = beta_sep_fixture(p);
    return json{{"p", p},
                {"beta_sep", p + 1},
                {"separated_at_p_plus_1", w.separated_at_p_plus_1},
                {"separated_at_le_p", w.separated_at_le_p},
                {"witness_points", json::array({point_to_json(fx.v1), point_to_json(fx.v2)})},
                {"separating_invariant", fx.separating_invariant.str()}};
}

json bound_comparison_to_json(const ModuleSpec& spec, const BoundComparison& b) {
    return json{{"spec", module_spec_to_json(spec)},
                {"paper_bound", b.paper_bound},
                {"symonds_bound", b.symonds_bound},
                {"beta_sep_bound", b.beta_sep_bound}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace d2p::io

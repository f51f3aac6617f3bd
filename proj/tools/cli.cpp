#include "cli.hpp"

#include <CLI11.hpp>

#include "d2p/io.hpp"

namespace d2p::cli {

namespace {

constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 20;
constexpr std::uint64_t kDefaultSeed = 1;

ModuleSpec load_spec(const std::string& spec_arg, int field_multiplier) {
    const std::string text =
        !spec_arg.empty() && spec_arg.front() == '{' ? spec_arg : io::read_file(spec_arg);
    io::json j;
    try {
        j = io::json::parse(text);
    } catch (const io::json::exception& e) {
        throw ParseError(std::string("spec: ") + e.what());
    }
    return io::module_spec_from_json(j, field_multiplier);
}

void emit_json(std::ostream& out, const io::json& j) { out << j.dump(2) << "\n"; }

int cmd_field(int p, int multiplier, const std::string& format, std::ostream& out) {
    const Field f = Field::for_p(p, multiplier);
    if (format == "text") {
        out << "GF(2^" << f.m() << "), p = " << f.p() << ", modulus = " << f.modulus()
            << ", lambda = " << f.lambda().bits << " (order " << element_order(f.lambda())
            << ")\n";
    } else {
        emit_json(out, io::field_to_json(f));
    }
    return 0;
}

int cmd_decompose(const std::string& path, const std::string& format, std::ostream& out) {
    io::json j;
    try {
        j = io::json::parse(io::read_file(path));
    } catch (const io::json::exception& e) {
        throw ParseError(std::string("matrix file: ") + e.what());
    }
    const MatrixRep rep = io::matrix_rep_from_json(j);
    const Decomposition dec = decompose(rep);
    if (format == "text") {
        for (const auto& [k, count] : dec.w_counts) out << "W_" << k << " x " << count << "\n";
        if (dec.trivial) out << "trivial x " << dec.trivial << "\n";
    } else {
        emit_json(out, io::decomposition_to_json(dec));
    }
    return 0;
}

int cmd_gens(const std::string& spec_arg, int dmax, int multiplier, const std::string& format,
             std::ostream& out) {
    const ModuleSpec spec = load_spec(spec_arg, multiplier);
    const int effective_dmax = dmax > 0 ? dmax : default_d_max(spec);
    const GeneratorTable table = minimal_generator_degrees(spec, effective_dmax);
    if (format == "csv")
        out << io::generator_table_to_csv(table);
    else if (format == "text")
        out << io::generator_table_to_text(table);
    else
        emit_json(out, io::generator_table_to_json(table, spec));
    return 0;
}

int cmd_sepset(const std::string& spec_arg, int multiplier, const std::string& format,
               std::ostream& out) {
    const ModuleSpec spec = load_spec(spec_arg, multiplier);
    const SeparatingSet set = theorem42_set(spec);
    if (format == "text") {
        out << io::separating_set_to_text(set);
    } else {
        io::json j = io::separating_set_to_json(set);
        j["spec"] = io::module_spec_to_json(spec);
        const BoundComparison b = bound_comparison(spec);
        j["bounds"] = io::bound_comparison_to_json(spec, b);
        emit_json(out, j);
    }
    return 0;
}

int cmd_verify_sep(const std::string& spec_arg, const std::string& set_path, bool builtin,
                   const std::string& mode_name, std::uint64_t budget, std::uint64_t seed,
                   int multiplier, const std::string& format, std::ostream& out) {
    const ModuleSpec spec = load_spec(spec_arg, multiplier);
    if (!set_path.empty() && builtin)
        throw InvalidParameterError("verify-sep: choose either --set or --builtin");
    const SeparatingSet set = set_path.empty()
                                  ? theorem42_set(spec)
                                  : io::separating_set_from_text(io::read_file(set_path), spec);
    const VerifyMode mode =
        mode_name == "sample" ? VerifyMode::Sampled : VerifyMode::Exhaustive;
    const SeparationReport report = verify_separating(spec, set, mode, budget, seed);
    if (format == "text") {
        out << io::separation_report_to_json(report)["verdict"].get<std::string>() << " ("
            << report.points_examined << " points, " << report.signature_classes
            << " classes)\n";
    } else {
        emit_json(out, io::separation_report_to_json(report));
    }
    return report.verdict == Verdict::Counterexample ? 2 : 0;
}

int cmd_beta_sep(int p, const std::string& format, std::ostream& out) {
    const BetaSepWitness w = beta_sep_witness(p);
    if (format == "text") {
        out << "beta_sep = p+1 = " << p + 1 << "; witness pair separated in degree p+1: "
            << (w.separated_at_p_plus_1 ? "yes" : "no")
            << "; separated by some invariant of degree <= p: "
            << (w.separated_at_le_p ? "yes" : "no") << "\n";
    } else {
        emit_json(out, io::beta_sep_witness_to_json(p, w));
    }
    return 0;
}

int cmd_bounds(const std::string& spec_arg, int multiplier, const std::string& format,
               std::ostream& out) {
    const ModuleSpec spec = load_spec(spec_arg, multiplier);
    const BoundComparison b = bound_comparison(spec);
    if (format == "text")
        out << "paper bound " << b.paper_bound << ", symonds bound " << b.symonds_bound
            << ", beta_sep bound " << b.beta_sep_bound << "\n";
    else
        emit_json(out, io::bound_comparison_to_json(spec, b));
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants of D_2p in characteristic two: fields, decompositions, "
                 "generator degrees, separating sets"};
    app.require_subcommand(1);

    int p = 0;
    int dmax = 0;
    int multiplier = 1;
    std::string spec_arg, matrix_path, set_path, format = "json", mode = "exhaustive";
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = kDefaultSeed;
    bool builtin = false;

    auto add_format = [&](CLI::App* cmd, const std::string& choices) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember(CLI::detail::split(choices, '|')));
    };
    auto add_spec = [&](CLI::App* cmd) {
        cmd->add_option("--spec", spec_arg, "ModuleSpec JSON file or inline JSON")->required();
        cmd->add_option("--field-multiplier", multiplier, "Extension-degree multiplier k")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* field = app.add_subcommand("field", "Field parameters for a given p");
    field->add_option("-p,--p", p, "Odd integer >= 3")->required();
    field->add_option("--field-multiplier", multiplier, "Extension-degree multiplier k")
        ->check(CLI::PositiveNumber);
    add_format(field, "json|text");

    CLI::App* dec = app.add_subcommand("decompose", "Decompose a matrix representation");
    dec->add_option("--matrix", matrix_path, "MatrixRep JSON file")->required();
    add_format(dec, "json|text");

    CLI::App* gens = app.add_subcommand("gens", "Degreewise minimal generator table");
    add_spec(gens);
    gens->add_option("--dmax", dmax, "Truncation degree (default s+max{r,p}+3)");
    add_format(gens, "json|csv|text");

    CLI::App* sepset = app.add_subcommand("sepset", "Explicit separating set (p prime)");
    add_spec(sepset);
    add_format(sepset, "json|text");

    CLI::App* verify = app.add_subcommand("verify-sep", "Verify a separating set against orbits");
    add_spec(verify);
    verify->add_option("--set", set_path, "Polynomial list file (one per line, # comments)");
    verify->add_flag("--builtin", builtin, "Use the built-in construction (default)");
    verify->add_option("--mode", mode, "exhaustive|sample")
        ->check(CLI::IsMember({"exhaustive", "sample"}));
    verify->add_option("--budget", budget, "Max points (exhaustive) or pairs (sample)");
    verify->add_option("--seed", seed, "RNG seed for sampled mode");
    add_format(verify, "json|text");

    CLI::App* beta = app.add_subcommand("beta-sep", "Witness computation for beta_sep = p+1");
    beta->add_option("-p,--p", p, "Odd integer >= 3")->required();
    add_format(beta, "json|text");

    CLI::App* bounds = app.add_subcommand("bounds", "Degree-bound comparison for a spec");
    add_spec(bounds);
    add_format(bounds, "json|text");

    std::vector<const char*> argv;
    argv.push_back("d2p");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (field->parsed()) return cmd_field(p, multiplier, format, out);
        if (dec->parsed()) return cmd_decompose(matrix_path, format, out);
        if (gens->parsed()) return cmd_gens(spec_arg, dmax, multiplier, format, out);
        if (sepset->parsed()) return cmd_sepset(spec_arg, multiplier, format, out);
        if (verify->parsed())
            return cmd_verify_sep(spec_arg, set_path, builtin, mode, budget, seed, multiplier,
                                  format, out);
        if (beta->parsed()) return cmd_beta_sep(p, format, out);
        if (bounds->parsed()) return cmd_bounds(spec_arg, multiplier, format, out);
        err << "error: no command\n";
        return 4;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 4;
    } catch (const BudgetExceededError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const InfeasibleError& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace d2p::cli

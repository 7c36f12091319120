#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "capi.hpp"
#include "commands.hpp"

namespace {

void require_variant(const cli::Document& doc, const std::string& sub) {
    const auto allowed = cli::variants_of(sub);
    for (const auto& v : allowed)
        if (v == doc.variant) return;
    std::string list;
    for (const auto& v : allowed) list += (list.empty() ? "" : ", ") + v;
    cli::invalid("variant", "\"" + doc.variant + "\" cannot be run by '" + sub + "' (expected " + list + ")");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Posterior probabilities of identity for the island problem and its extensions"};
    app.set_version_flag("--version", std::string(island_version()));
    app.require_subcommand(1);

    cli::Options opt;
    std::string out_path;
    app.add_option("--resolution", opt.resolution, "Quadrature nodes for tabulated densities")
        ->check(CLI::Range(5, 1 << 24))
        ->capture_default_str();
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"table", "csv"}));
    app.add_option("--out", out_path, "Write the report to this file");

    std::string doc_path;
    const char* modelled[] = {"classical", "yellin", "depend",  "hetero", "uncertain",
                              "membership", "database", "growth", "run"};
    const char* help[] = {"Homogeneous population",
                          "Suspect found by searching until the first trait bearer",
                          "Biased search or correlated traits",
                          "Subpopulations with known frequencies",
                          "Uncertain frequencies, with or without subpopulations",
                          "Suspect's subpopulation unknown",
                          "Database searches and database effectiveness",
                          "Database growth curve (CSV n,odds,p_unique)",
                          "Any scenario document"};
    std::uint64_t trials = 0, seed = 0;
    std::vector<CLI::Option*> trials_opts, seed_opts;
    auto oracle_flags = [&](CLI::App* sub) {
        sub->add_option("--method", opt.method, "Oracle method: exact or mc")->check(CLI::IsMember({"exact", "mc"}));
        trials_opts.push_back(sub->add_option("--trials", trials, "Monte-Carlo trials"));
        seed_opts.push_back(sub->add_option("--seed", seed, "Monte-Carlo seed"));
        sub->add_option("--threads", opt.threads, "Worker threads, 0 for all");
    };
    for (std::size_t i = 0; i < std::size(modelled); ++i) {
        auto* sub = app.add_subcommand(modelled[i], help[i]);
        sub->add_option("document", doc_path, "Scenario document (JSON), or - for stdin")->required();
        if (std::string(modelled[i]) == "run") oracle_flags(sub);
    }
    auto* oracle = app.add_subcommand("oracle", "Brute-force reference: exact enumeration or Monte-Carlo");
    oracle->add_option("document", doc_path, "Scenario document (JSON), or - for stdin")->required();
    oracle_flags(oracle);

    std::string target;
    auto* repro = app.add_subcommand("reproduce", "Check the published numbers");
    repro->add_option("target", target, "table1, table2 or examples")
        ->required()
        ->check(CLI::IsMember({"table1", "table2", "examples"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kValidation;
    }
    for (auto* o : trials_opts)
        if (o->count()) opt.trials = trials;
    for (auto* o : seed_opts)
        if (o->count()) opt.seed = seed;

    std::ostringstream buffer;
    int status = cli::kOk;
    try {
        if (repro->parsed()) {
            status = cli::reproduce(target, opt, buffer) == 0 ? cli::kOk : cli::kComputation;
        } else {
            const auto* sub = app.get_subcommands().front();
            const cli::Document doc = cli::load_document(doc_path);
            if (sub->get_name() != "run") require_variant(doc, sub->get_name());
            cli::execute(doc, opt, buffer);
        }
    } catch (const cli::Failure& f) {
        std::cerr << "error: " << f.what() << '\n';
        return f.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kComputation;
    }

    if (out_path.empty()) {
        std::cout << buffer.str();
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << '\n';
            return cli::kComputation;
        }
        out << buffer.str();
    }
    return status;
}

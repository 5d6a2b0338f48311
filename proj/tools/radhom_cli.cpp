#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli/commands.hpp"

using namespace radhom::cli;

namespace {

int emit(const json& doc, const std::string& out_path) {
    const auto text = doc.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return 2;
    }
    out << text;
    return 0;
}

json error_doc(const std::string& kind, const std::string& location, const std::string& message) {
    return json{{"error", {{"type", kind}, {"location", location}, {"message", message}}}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Radical submodule semimodules, radical homology and lifting checks over finite rings"};
    app.require_subcommand(1);

    std::string input, out_path;
    bool no_cache = false;
    CommandOptions opts;
    for (const auto& name : command_names()) {
        auto* sub = app.add_subcommand(name);
        auto* in = sub->add_option("--input", input, "input document (JSON)");
        if (name == "verify-paper")
            in->default_val("corpus/verify-paper/bundled.json");
        else
            in->required();
        sub->add_option("--out", out_path, "write the report here instead of stdout");
        sub->add_flag("--no-cache", no_cache, "ignore RADHOM_CACHE_DIR");
        sub->add_option("--max-basis", opts.max_basis, "largest basis size in retract searches")
            ->check(CLI::PositiveNumber);
        sub->add_option("--hom-bound", opts.hom_bound, "candidate bound for hom enumeration")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", opts.seed, "lift candidate shuffle seed (0: canonical order)");
    }
    CLI11_PARSE(app, argc, argv);
    const auto command = app.get_subcommands().front()->get_name();

    json doc;
    {
        std::ifstream in(input);
        if (!in) return emit(error_doc("IOError", "", "cannot read " + input), out_path), 2;
        try {
            doc = json::parse(in);
        } catch (const json::parse_error& e) {
            return emit(error_doc("SchemaError", "", e.what()), out_path), 2;
        }
    }

    auto cache = LatticeCache::from_env(no_cache);
    Reader reader(cache);
    try {
        auto res = run_command(command, doc, reader, opts);
        if (int rc = emit(res.output, out_path); rc != 0) return rc;
        return res.violations == 0 ? 0 : 1;
    } catch (const InputError& e) {
        emit(error_doc(e.kind, e.location, e.what()), out_path);
        return 2;
    } catch (const std::exception& e) {
        emit(error_doc("InternalError", "", e.what()), out_path);
        return 3;
    }
}

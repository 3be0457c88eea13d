// near — constructs nearness approximation spaces from structure documents
// and verifies near groups, nearness rings, ideals, weak-coset quotients and
// nearness homomorphisms on them.
//
// Commands:
//   approx    --set NAME                          approximations of a named subset
//   verify ring    --carrier NAME                 NR1-NR5 axiom report
//   verify subring --carrier NAME --sub NAME      subnearness-ring criterion
//   verify ideal   --carrier NAME --sub NAME      nearness-ideal check
//   verify hom     --map NAME --from DOC --to DOC --carrier NAME --to-carrier NAME
//   cosets    --carrier NAME --sub NAME [--extended]
//   quotient  --carrier NAME --sub NAME [--powerset]
//   iso-check --map NAME --from DOC --to DOC --carrier NAME --to-carrier NAME
//   search    --size N --seed K [--exhaustive] [--samples M]
//
// Exit codes: 0 every requested verdict passes, 1 verification failure,
// 2 malformed input or structural error.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nearness/commands.hpp"
#include "nearness/errors.hpp"

namespace {

std::size_t powerset_bound_from_env() {
    const char* v = std::getenv("NEARNESS_POWERSET_MAX");
    if (v == nullptr) return nearness::descriptive::kDefaultPowersetBound;
    try {
        const long parsed = std::stol(v);
        if (parsed < 1) throw std::invalid_argument("nonpositive");
        return static_cast<std::size_t>(parsed);
    } catch (const std::exception&) {
        throw nearness::InputError("NEARNESS_POWERSET_MAX must be a positive integer");
    }
}

}  // namespace

int main(int argc, char** argv) {
    using nearness::io::StructureDocument;
    namespace io = nearness::io;

    CLI::App app{"nearness approximation space structure workbench"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string input = "-";
    std::string from_path, to_path;
    std::string set_name, carrier, sub, map_name, to_carrier, side = "both";
    bool extended = false, powerset = false, strict = false, exhaustive = false;
    std::size_t size = 3, samples = 2000;
    std::uint64_t seed = 0;

    std::function<io::ReportDocument()> runner;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "structure document path, or - for stdin");
    };

    CLI::App* approx = app.add_subcommand("approx", "lower/upper approximation of a subset");
    approx->fallthrough();
    add_input(approx);
    approx->add_option("--set", set_name, "subset name")->required();
    approx->callback([&] {
        runner = [&] { return io::cmd_approx(io::load_document(input), set_name); };
    });

    CLI::App* verify = app.add_subcommand("verify", "axiom verification");
    verify->fallthrough();
    verify->require_subcommand(1);

    CLI::App* ring = verify->add_subcommand("ring", "nearness ring axioms NR1-NR5");
    ring->fallthrough();
    add_input(ring);
    ring->add_option("--carrier", carrier, "carrier subset name")->required();
    ring->callback([&] {
        runner = [&] { return io::cmd_verify_ring(io::load_document(input), carrier); };
    });

    CLI::App* subring = verify->add_subcommand("subring", "subnearness ring criterion");
    subring->fallthrough();
    add_input(subring);
    subring->add_option("--carrier", carrier, "ambient carrier name")->required();
    subring->add_option("--sub", sub, "subset name")->required();
    subring->callback([&] {
        runner = [&] { return io::cmd_verify_subring(io::load_document(input), carrier, sub); };
    });

    CLI::App* ideal = verify->add_subcommand("ideal", "nearness ideal check");
    ideal->fallthrough();
    add_input(ideal);
    ideal->add_option("--carrier", carrier, "ambient carrier name")->required();
    ideal->add_option("--sub", sub, "ideal candidate name")->required();
    ideal->add_option("--side", side, "left, right or both")
        ->check(CLI::IsMember({"left", "right", "both"}));
    ideal->callback([&] {
        runner = [&] {
            const auto s = side == "left"    ? nearness::structures::Side::left
                           : side == "right" ? nearness::structures::Side::right
                                             : nearness::structures::Side::two_sided;
            return io::cmd_verify_ideal(io::load_document(input), carrier, sub, s);
        };
    });

    CLI::App* hom = verify->add_subcommand("hom", "nearness ring homomorphism check");
    hom->fallthrough();
    hom->add_option("--map", map_name, "map name in the from-document")->required();
    hom->add_option("--from", from_path, "domain document")->required();
    hom->add_option("--to", to_path, "codomain document")->required();
    hom->add_option("--carrier", carrier, "R1 subset name in the from-document")->required();
    hom->add_option("--to-carrier", to_carrier, "R2 subset name in the to-document")->required();
    hom->add_flag("--strict", strict, "also bind the laws on upper-approximation pairs");
    hom->callback([&] {
        runner = [&] {
            return io::cmd_verify_hom(io::load_document(from_path), io::load_document(to_path),
                                      map_name, carrier, to_carrier, strict);
        };
    });

    CLI::App* cosets = app.add_subcommand("cosets", "weak cosets of a carrier by a subset");
    cosets->fallthrough();
    add_input(cosets);
    cosets->add_option("--carrier", carrier, "carrier subset name")->required();
    cosets->add_option("--sub", sub, "subset name")->required();
    cosets->add_flag("--extended", extended, "representatives from the upper approximation");
    cosets->callback([&] {
        runner = [&] { return io::cmd_cosets(io::load_document(input), carrier, sub, extended); };
    });

    CLI::App* quotient = app.add_subcommand("quotient", "weak-coset quotient nearness ring");
    quotient->fallthrough();
    add_input(quotient);
    quotient->add_option("--carrier", carrier, "carrier subset name")->required();
    quotient->add_option("--sub", sub, "subset name")->required();
    quotient->add_flag("--powerset", powerset,
                       "use powerset candidates for the quotient hypothesis");
    quotient->callback([&] {
        runner = [&] {
            return io::cmd_quotient(io::load_document(input), carrier, sub, powerset,
                                    powerset_bound_from_env());
        };
    });

    CLI::App* iso = app.add_subcommand("iso-check", "restricted first isomorphism theorem");
    iso->fallthrough();
    iso->add_option("--map", map_name, "map name in the from-document")->required();
    iso->add_option("--from", from_path, "domain document")->required();
    iso->add_option("--to", to_path, "codomain document")->required();
    iso->add_option("--carrier", carrier, "R1 subset name")->required();
    iso->add_option("--to-carrier", to_carrier, "R2 subset name")->required();
    iso->callback([&] {
        runner = [&] {
            return io::cmd_iso_check(io::load_document(from_path), io::load_document(to_path),
                                     map_name, carrier, to_carrier);
        };
    });

    CLI::App* search = app.add_subcommand("search", "small-structure search");
    search->fallthrough();
    search->add_option("--size", size, "universe size (2-5; exhaustive up to 3)")->required();
    search->add_option("--seed", seed, "random seed");
    search->add_flag("--exhaustive", exhaustive, "enumerate the whole space");
    search->add_option("--samples", samples, "sample count in random mode");
    search->callback([&] {
        runner = [&] {
            nearness::io::SearchOptions opts;
            opts.size = size;
            opts.seed = seed;
            opts.exhaustive = exhaustive;
            opts.samples = samples;
            return io::cmd_search(opts);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const io::ReportDocument report = runner();
        std::cout << io::render(report, format);
        return report.exit_code();
    } catch (const nearness::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

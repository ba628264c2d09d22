// topskit command-line front end.
//
//   topskit rbw <rho> --max-len L
//   topskit gifs {validate|classify|upsilon|invariance|orderings|top-address} <config.json> [flags]
//
// Exit codes: 0 ok, 2 parse/usage error, 3 validation or invariant failure,
// 4 uncertified component hulls.

#include "topskit/config.hpp"
#include "topskit/error.hpp"
#include "topskit/rbw.hpp"
#include "topskit/report.hpp"
#include "topskit/svg.hpp"
#include "topskit/tops.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace topskit;

enum Exit { Ok = 0, Usage = 2, Invalid = 3, Uncertified = 4 };

// "key: value" lines for --format text.
void print_text(const Json& j, const std::string& prefix = "")
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            print_text(v, prefix.empty() ? k : prefix + "." + k);
    } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); })) {
        for (std::size_t i = 0; i < j.size(); ++i)
            print_text(j[i], prefix + "[" + std::to_string(i) + "]");
    } else {
        std::cout << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const Json& j, const std::string& format)
{
    if (format == "text")
        print_text(j);
    else
        std::cout << j.dump(2) << "\n";
}

struct GifsArgs {
    std::string sub;
    std::string config;
    std::string point;
    std::string vertex;
    std::size_t depth = 12;
    std::size_t n = 1;
    std::optional<std::uint64_t> budget;
    std::string format = "json";
};

int run_gifs(const GifsArgs& a)
{
    if (a.format == "svg" && a.sub != "classify" && a.sub != "upsilon")
        throw ParseError("--format svg is only available for classify and upsilon");
    GraphIFS g = load_config(a.config);
    ValidationReport vr = validate(g);
    if (a.sub == "validate") {
        Json j = to_json(vr);
        if (vr.ok())
            j["hulls"] = to_json(g, component_hulls(g));
        emit(j, a.format);
        return vr.ok() ? Ok : Invalid;
    }
    if (!vr.ok()) {
        for (const auto& v : vr.violations)
            std::cerr << "topskit: invalid system: " << v << "\n";
        return Invalid;
    }
    if (a.sub == "classify") {
        TopsClassification c = classify(g);
        if (a.format == "svg") {
            std::cout << render_svg(g, component_hulls(g), std::nullopt,
                                    std::string("classification: ") + to_string(c.verdict));
            return Ok;
        }
        emit(to_json(c), a.format);
        return Ok;
    }
    if (a.sub == "upsilon") {
        if (a.n < 1)
            throw ParseError("--n must be positive");
        ComponentHulls h = certified_hulls(g);
        UpsilonRegion r = upsilon(g, h, a.n);
        if (a.format == "svg")
            std::cout << render_svg(g, h, r, "upsilon region, n = " + std::to_string(a.n));
        else
            emit(to_json(g, r), a.format);
        return Ok;
    }
    if (a.sub == "invariance") {
        emit(to_json(g, invariance_verdict(g)), a.format);
        return Ok;
    }
    if (a.sub == "orderings") {
        OrderingOptions opt;
        opt.budget = a.budget;
        emit(to_json(ordering_search(g, opt)), a.format);
        return Ok;
    }
    if (a.sub == "top-address") {
        if (a.point.empty() || a.vertex.empty())
            throw ParseError("top-address needs --point and --vertex");
        if (a.depth < 1)
            throw ParseError("--depth must be positive");
        VertexId v = 0;
        try {
            v = g.vertex(a.vertex);
        } catch (const ValidationError& ex) {
            throw ParseError(ex.what());
        }
        emit(to_json(g, top_address(g, ExactReal::parse(a.point), v, a.depth)), a.format);
        return Ok;
    }
    throw ParseError("unknown gifs subcommand '" + a.sub + "'");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Fractal tops of graph-directed IFSs on the line"};
    app.require_subcommand(1);

    std::string rho_text;
    std::size_t max_len = 15;
    std::string rbw_format = "json";
    auto* rbw = app.add_subcommand("rbw", "reduced banned words of the two-map IFS");
    rbw->add_option("rho", rho_text, "p/q or poly:[c0,c1,...]@[lo,hi]")->required();
    rbw->add_option("--max-len", max_len, "longest word searched")->check(CLI::PositiveNumber);
    rbw->add_option("--format", rbw_format)->check(CLI::IsMember({"json", "text"}));

    GifsArgs ga;
    auto* gifs = app.add_subcommand("gifs", "graph IFS analyses");
    gifs->add_option("command", ga.sub, "validate, classify, upsilon, invariance, orderings, top-address")
        ->required()
        ->check(CLI::IsMember({"validate", "classify", "upsilon", "invariance", "orderings", "top-address"}));
    gifs->add_option("config", ga.config, "JSON config")->required();
    gifs->add_option("--point", ga.point, "exact point for top-address");
    gifs->add_option("--vertex", ga.vertex, "vertex name for top-address");
    gifs->add_option("--depth", ga.depth, "address length for top-address");
    gifs->add_option("--n", ga.n, "depth of the upsilon region");
    gifs->add_option("--budget", ga.budget, "labelings to sample when exhaustive search is too large");
    gifs->add_option("--format", ga.format)->check(CLI::IsMember({"json", "text", "svg"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Usage;
    }

    try {
        if (rbw->parsed()) {
            RhoParam rho = RhoParam::parse(rho_text);
            emit(to_json(enumerate(rho, max_len)), rbw_format);
            return Ok;
        }
        return run_gifs(ga);
    } catch (const ParseError& e) {
        std::cerr << "topskit: parse error: " << e.what() << "\n";
        return Usage;
    } catch (const UncertifiedHullError& e) {
        std::cerr << "topskit: " << e.what() << "\n";
        return Uncertified;
    } catch (const Error& e) {
        std::cerr << "topskit: " << e.what() << "\n";
        return Invalid;
    }
}

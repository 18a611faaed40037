// Command-line front end.  Subcommands:
//
//   classify  --dim {3|4} [--format json|markdown] [--out PATH]
//   intersect --dim {3|4} --d N [--g N | --hk N --c2 N] --expr EXPR
//   lattice   --check {mult5|contradiction|saturation|discriminant} [...]
//
// Exit codes: 0 success, 2 internal verification failure, 64 usage error,
// 65 malformed input data.  Documents go to standard output; --out writes
// the same bytes to a file as well.

#include <quadbir/classifier.hpp>
#include <quadbir/expression.hpp>
#include <quadbir/report.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace {

constexpr int kExitVerification = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

void emit(const std::string& text, const std::string& outPath) {
    std::cout << text;
    if (!outPath.empty()) {
        std::ofstream file(outPath, std::ios::binary);
        if (!file) throw std::domain_error("cannot open output file " + outPath);
        file << text;
    }
}

std::string command_echo(int argc, char** argv) {
    std::string echo;
    for (int i = 1; i < argc; ++i) {
        if (!echo.empty()) echo += " ";
        echo += argv[i];
    }
    return echo;
}

quadbir::IntMatrix parse_gram_json(const std::string& text) {
    quadbir::Json parsed;
    try {
        parsed = quadbir::Json::parse(text);
    } catch (const quadbir::Json::exception& e) {
        throw std::domain_error(std::string("invalid gram JSON: ") + e.what());
    }
    if (!parsed.is_array()) throw std::domain_error("gram must be an array of arrays");
    quadbir::IntMatrix gram;
    for (const auto& row : parsed) {
        if (!row.is_array()) throw std::domain_error("gram must be an array of arrays");
        std::vector<quadbir::Int> r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw std::domain_error("gram entries must be integers");
            r.emplace_back(x.get<std::int64_t>());
        }
        gram.push_back(std::move(r));
    }
    return gram;
}

quadbir::GramLattice gram_lattice_from(const quadbir::IntMatrix& gram) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < gram.size(); ++i) labels.push_back("g" + std::to_string(i));
    return quadbir::make_gram_lattice(std::move(labels), gram);
}

int run_classify(int dim, const std::string& format, const std::string& outPath,
                 const std::string& echo) {
    const quadbir::ClassificationReport report = quadbir::classify(dim);
    const quadbir::ReportDocument doc = quadbir::build_classification_document(report, echo);
    if (format == "markdown")
        emit(quadbir::to_markdown(doc, report), outPath);
    else
        emit(doc.dump(), outPath);
    return 0;
}

int run_intersect(int dim, std::int64_t d, std::optional<std::int64_t> g,
                  std::optional<std::int64_t> hk, std::optional<std::int64_t> c2,
                  const std::string& exprText, const std::string& format,
                  const std::string& outPath, const std::string& echo) {
    quadbir::BaseLocusNumbers base =
        dim == 3 ? quadbir::BaseLocusNumbers::curve(d, g.value())
                 : quadbir::BaseLocusNumbers::surface(d, hk.value(), c2.value());
    const quadbir::Int hPrimeDegree = dim == 3 ? 2 : 3;
    const quadbir::Int value = quadbir::expr::evaluate(exprText, base, hPrimeDegree);
    if (format == "json") {
        quadbir::ReportDocument doc;
        doc.command = echo;
        doc.result["dim"] = dim;
        doc.result["expression"] = exprText;
        doc.result["value"] = quadbir::json_int(value);
        doc.trace.push_back({"evaluation", exprText + " = " + value.str(),
                             quadbir::json_int(value)});
        emit(doc.dump(), outPath);
    } else {
        emit(value.str() + "\n", outPath);
    }
    return 0;
}

int run_lattice(const std::string& check, const std::string& gramText,
                const std::vector<std::size_t>& primitive, std::int64_t p,
                std::int64_t modulus, std::int64_t multiplier, const std::string& format,
                const std::string& outPath, const std::string& echo) {
    quadbir::ReportDocument doc;
    doc.command = echo;
    std::string text;

    if (check == "mult5") {
        const auto result = quadbir::verify_mult_by_5();
        doc.result["check"] = check;
        doc.result["holds"] = result.holds;
        doc.result["multiplier"] = quadbir::json_int(result.multiplier);
        doc.result["identity"] = result.identity;
        doc.result["residual"] = result.residual.str();
        doc.trace.push_back({"generator_image", result.identity,
                             quadbir::json_int(result.multiplier)});
        text = "multiplier " + result.multiplier.str() + ", holds " +
               (result.holds ? "true" : "false") + "\n" + result.identity + "\n";
    } else if (check == "contradiction") {
        const bool contradiction = quadbir::isometry_contradiction(modulus, multiplier);
        doc.result["check"] = check;
        doc.result["modulus"] = modulus;
        doc.result["multiplier"] = multiplier;
        doc.result["contradiction"] = contradiction;
        const std::string verdict =
            contradiction
                ? std::to_string(multiplier) + " is not +-1 mod " + std::to_string(modulus) +
                      ": S0 and T0 non-isomorphic"
                : std::to_string(multiplier) + " is +-1 mod " + std::to_string(modulus) +
                      ": no contradiction";
        doc.result["analysis"] = verdict;
        doc.trace.push_back({"residue_analysis", "multiplication by c on Z/n vs +-Id", verdict});
        text = verdict + "\n";
    } else if (check == "saturation") {
        const quadbir::GramLattice lattice = gramText.empty()
                                                 ? quadbir::polarization_elliptic_gram()
                                                 : gram_lattice_from(parse_gram_json(gramText));
        std::set<std::size_t> prim(primitive.begin(), primitive.end());
        if (gramText.empty() && primitive.empty()) prim = {1};
        const auto result = quadbir::saturation_check(lattice, prim, p);
        doc.result["check"] = check;
        doc.result["saturated"] = result.saturated;
        doc.result["prime"] = quadbir::json_int(result.prime);
        quadbir::Json candidates = quadbir::Json::array();
        for (const auto& cand : result.candidates) {
            quadbir::Json vec = quadbir::Json::array();
            for (const auto& x : cand.vec) vec.push_back(quadbir::json_int(x));
            quadbir::Json c;
            c["vector"] = std::move(vec);
            c["excludedByPrimitivity"] = cand.excludedByPrimitivity;
            candidates.push_back(std::move(c));
        }
        doc.result["candidates"] = std::move(candidates);
        doc.trace.push_back({"saturation", "index-p even overlattice candidates",
                             result.saturated});
        text = std::string("saturated ") + (result.saturated ? "true" : "false") + ", " +
               std::to_string(result.candidates.size()) + " candidate class(es)\n";
    } else {  // discriminant
        if (gramText.empty())
            throw std::domain_error("--gram is required for the discriminant check");
        const quadbir::GramLattice lattice = gram_lattice_from(parse_gram_json(gramText));
        const auto group = quadbir::discriminant_group(lattice);
        doc.result["check"] = check;
        doc.result["group"] = group.str();
        doc.result["order"] = quadbir::json_int(group.order());
        doc.trace.push_back({"discriminant_group", "cokernel of the Gram matrix", group.str()});
        text = group.str() + "\n";
    }

    emit(format == "json" ? doc.dump() : text, outPath);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic classification of special self-birational "
                 "transformations of smooth quadrics"};
    app.require_subcommand(1);

    // classify
    auto* classifyCmd = app.add_subcommand("classify", "run the full classification");
    int dim = 0;
    std::string format = "json";
    std::string outPath;
    classifyCmd->add_option("--dim", dim, "quadric dimension")
        ->required()
        ->check(CLI::IsMember({3, 4}));
    classifyCmd->add_option("--format", format, "json or markdown")
        ->check(CLI::IsMember({"json", "markdown"}));
    classifyCmd->add_option("--out", outPath, "also write the document to a file");

    // intersect
    auto* intersectCmd = app.add_subcommand("intersect", "evaluate an intersection expression");
    int iDim = 0;
    std::int64_t dOpt = 0;
    std::optional<std::int64_t> gOpt, hkOpt, c2Opt;
    std::string exprText;
    std::string iFormat = "plain";
    std::string iOut;
    intersectCmd->add_option("--dim", iDim, "quadric dimension")
        ->required()
        ->check(CLI::IsMember({3, 4}));
    intersectCmd->add_option("--d", dOpt, "degree of the base locus")->required();
    intersectCmd->add_option("--g", gOpt, "genus of the base curve (dim 3)");
    intersectCmd->add_option("--hk", hkOpt, "H_S.K_S of the base surface (dim 4)");
    intersectCmd->add_option("--c2", c2Opt, "c_2 of the base surface (dim 4)");
    intersectCmd->add_option("--expr", exprText, "expression in H, E, H'")->required();
    intersectCmd->add_option("--format", iFormat, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));
    intersectCmd->add_option("--out", iOut, "also write the output to a file");

    // lattice
    auto* latticeCmd = app.add_subcommand("lattice", "run a lattice check");
    std::string check;
    std::string gramText;
    std::vector<std::size_t> primitive;
    std::int64_t p = 5;
    std::int64_t modulus = 12;
    std::int64_t multiplier = 5;
    std::string lFormat = "plain";
    std::string lOut;
    latticeCmd->add_option("--check", check, "mult5, contradiction, saturation or discriminant")
        ->required()
        ->check(CLI::IsMember({"mult5", "contradiction", "saturation", "discriminant"}));
    latticeCmd->add_option("--gram", gramText, "Gram matrix as a JSON array of arrays");
    latticeCmd->add_option("--primitive", primitive,
                           "indices of generators that are primitive in the ambient lattice");
    latticeCmd->add_option("--p", p, "prime for the saturation check");
    latticeCmd->add_option("--modulus", modulus, "discriminant-group order");
    latticeCmd->add_option("--multiplier", multiplier, "generator multiplier");
    latticeCmd->add_option("--format", lFormat, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));
    latticeCmd->add_option("--out", lOut, "also write the output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const std::string echo = command_echo(argc, argv);
    try {
        if (classifyCmd->parsed()) return run_classify(dim, format, outPath, echo);
        if (intersectCmd->parsed()) {
            if (iDim == 3 && !gOpt)
                throw CLI::RequiredError("--g (required for --dim 3)");
            if (iDim == 4 && (!hkOpt || !c2Opt))
                throw CLI::RequiredError("--hk and --c2 (required for --dim 4)");
            return run_intersect(iDim, dOpt, gOpt, hkOpt, c2Opt, exprText, iFormat, iOut, echo);
        }
        return run_lattice(check, gramText, primitive, p, modulus, multiplier, lFormat, lOut,
                           echo);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const quadbir::VerificationError& e) {
        std::cerr << "verification failed [" << e.claim << "]: " << e.what() << "\n";
        return kExitVerification;
    } catch (const quadbir::expr::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
}

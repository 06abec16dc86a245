// boxikit command-line tool: builds the comparability-graph families, emits
// verified cube representations, runs the exact boxicity/cubicity oracle,
// evaluates bound formulas and produces consolidated reports.  All machine
// output is JSON on stdout; diagnostics go to stderr as JSON (exit 2 input
// errors, 3 capacity errors, 1 verification failures).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "boxikit/boxikit.hpp"

namespace {

using boxikit::Json;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

[[noreturn]] void fail(int code, const std::string& kind, const std::string& message) {
    Json j;
    j["error"] = kind;
    j["message"] = message;
    std::cerr << j.dump(2) << "\n";
    std::exit(code);
}

std::vector<int> parseParams(const std::string& csv) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        std::string token = csv.substr(start, comma == std::string::npos ? csv.size() - start
                                                                         : comma - start);
        if (token.empty()) throw boxikit::InputError("empty entry in parameter list '" + csv + "'");
        try {
            out.push_back(std::stoi(token));
        } catch (const std::logic_error&) {
            throw boxikit::InputError("bad integer '" + token + "' in parameter list");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

int oracleDefaultMaxNonEdges() {
    if (const char* env = std::getenv("BOXIKIT_MAX_NONEDGES")) {
        try {
            return std::stoi(env);
        } catch (const std::logic_error&) {
            throw boxikit::InputError("BOXIKIT_MAX_NONEDGES is not an integer");
        }
    }
    return boxikit::OracleConfig{}.maxNonEdges;
}

struct FamilyFlags {
    std::string family;
    std::string params;
    std::int64_t n = -1;
    int s = -1;
    int k = -1;
    bool truncated = false;
    std::string specFile;

    void attach(CLI::App* cmd, bool withSpec) {
        cmd->add_option("--family", family,
                        "tcc | divisor | power-cyclic | reduced-power | hypercube-tc | crown | lifted");
        cmd->add_option("--params", params, "comma-separated exponents, e.g. 1,2,3");
        cmd->add_option("--n", n, "integer parameter for divisor/power families");
        cmd->add_option("--s", s, "order parameter for hypercube-tc/crown/lifted");
        cmd->add_option("--k", k, "level parameter for lifted");
        cmd->add_flag("--truncated", truncated, "drop the two universal tuples (hypercube-tc)");
        if (withSpec)
            cmd->add_option("--spec", specFile, "family spec JSON file {\"kind\":..., \"params\":[...]}");
    }

    boxikit::FamilySpec toSpec() const {
        if (!specFile.empty()) return boxikit::familySpecFromJson(boxikit::loadJsonFile(specFile));
        if (family.empty()) throw boxikit::InputError("missing --family (or --spec)");
        boxikit::FamilySpec spec;
        spec.kind = boxikit::familyKindFromName(
            family == "hypercube-tc" && truncated ? "hypercube-tc-truncated" : family);
        if (!params.empty())
            for (int v : parseParams(params)) spec.params.push_back(v);
        else if (n >= 0)
            spec.params.push_back(n);
        else if (s >= 0) {
            spec.params.push_back(s);
            if (k >= 0) spec.params.push_back(k);
        }
        return spec;
    }
};

Json traceToJson(const boxikit::ConstructionTrace& trace) {
    Json levels = Json::array();
    for (const boxikit::TraceLevel& level : trace.perLevel) {
        Json j;
        j["level"] = level.level;
        j["S"] = level.S;
        j["type1_dims"] = level.type1Dims;
        j["type2_dims"] = level.type2Dims;
        levels.push_back(std::move(j));
    }
    return levels;
}

Json certificateToJson(const boxikit::LabeledGraph& g,
                       const std::vector<boxikit::CompletionSet>& certificate) {
    Json out = Json::array();
    for (const boxikit::CompletionSet& c : certificate) {
        Json pairs = Json::array();
        for (auto [u, v] : c.added) pairs.push_back(Json::array({g.label(u), g.label(v)}));
        out.push_back(std::move(pairs));
    }
    return out;
}

Json boundReportToJson(const boxikit::BoundReport& report) {
    Json j;
    j["m"] = report.m;
    j["lower"] = report.lower;
    j["upper"] = report.upper;
    j["general_lower"] = report.generalLower;
    j["eq1"] = report.eq1;
    j["eq2"] = report.eq2;
    j["eq3"] = report.eq3.str();
    j["chain"] = report.chain;
    return j;
}

Json witnessToJson(const boxikit::WitnessDecomposition& witness) {
    Json components = Json::array();
    for (const boxikit::WitnessComponent& comp : witness.components) {
        Json j;
        j["vertices"] = comp.vertices;
        j["hypercube_order"] = comp.hypercubeOrder;
        j["level"] = comp.level;
        components.push_back(std::move(j));
    }
    Json j;
    j["components"] = std::move(components);
    j["components_verified"] = witness.componentsVerified;
    j["join_verified"] = witness.joinVerified;
    return j;
}

int runBuild(const FamilyFlags& flags, bool verbose) {
    boxikit::FamilySpec spec = flags.toSpec();
    boxikit::LabeledGraph g = boxikit::buildFamily(spec);
    if (verbose)
        std::cerr << "built " << boxikit::familyKindName(spec.kind) << ": " << g.vertexCount()
                  << " vertices, " << g.edgeCount() << " edges\n";
    emit(boxikit::graphToJson(g));
    return 0;
}

int runRepresent(const FamilyFlags& flags, bool unit, bool translate, bool verbose) {
    boxikit::FamilySpec spec = flags.toSpec();
    boxikit::TccRepresentation built;
    boxikit::LabeledGraph graph;
    switch (spec.kind) {
        case boxikit::FamilySpec::Kind::Tcc: {
            std::vector<int> m;
            for (std::int64_t p : spec.params) m.push_back(static_cast<int>(p));
            graph = boxikit::buildTCC(m);
            built = boxikit::tccCubeRepresentation(m);
            break;
        }
        case boxikit::FamilySpec::Kind::Divisor:
            if (spec.params.size() != 1) throw boxikit::InputError("represent: divisor needs --n");
            graph = boxikit::buildDivisorGraph(spec.params[0]);
            built = boxikit::representationForDivisorGraph(spec.params[0]);
            break;
        case boxikit::FamilySpec::Kind::PowerCyclic:
            if (spec.params.size() != 1) throw boxikit::InputError("represent: power-cyclic needs --n");
            graph = boxikit::buildPowerGraphCyclic(spec.params[0]);
            built = boxikit::representationForPowerGraphCyclic(spec.params[0]);
            break;
        default:
            throw boxikit::InputError(
                "represent supports --family tcc, divisor and power-cyclic only");
    }

    boxikit::BoxRepresentation rep = built.rep;
    if (unit) rep = boxikit::normalizeToUnit(rep);
    if (translate) rep = boxikit::translateToOrigin(rep);

    boxikit::VerifyResult check = boxikit::verifyRepresentation(graph, rep);
    if (!check.ok)
        fail(1, "verify", "internal: representation failed self-verification");
    if (verbose)
        std::cerr << "representation dimension " << rep.dimension() << ", verified against "
                  << graph.vertexCount() << " vertices\n";

    Json j = boxikit::representationToJson(rep);
    j["trace"] = traceToJson(built.trace);
    j["complete_graph_fallback"] = built.trace.completeGraphFallback;
    emit(j);
    return 0;
}

int runVerify(const std::string& graphFile, const std::string& repFile, bool verbose) {
    boxikit::LabeledGraph g = boxikit::graphFromJson(boxikit::loadJsonFile(graphFile));
    boxikit::BoxRepresentation rep =
        boxikit::representationFromJson(boxikit::loadJsonFile(repFile));
    boxikit::VerifyResult check = boxikit::verifyRepresentation(g, rep);
    Json j;
    j["ok"] = check.ok;
    if (!check.ok) {
        j["kind"] = check.kind == boxikit::MismatchKind::MissingEdge ? "missing-edge"
                                                                     : "spurious-edge";
        j["pair"] = Json::array({check.pair->first, check.pair->second});
    }
    if (verbose)
        std::cerr << (check.ok ? "representation matches the graph\n"
                               : "representation mismatch\n");
    emit(j);
    return check.ok ? 0 : 1;
}

int runExact(const std::string& graphFile, const std::string& param, int maxNonEdges, int cap,
             bool verbose) {
    boxikit::LabeledGraph g = boxikit::graphFromJson(boxikit::loadJsonFile(graphFile));
    boxikit::OracleConfig config;
    config.maxNonEdges = maxNonEdges;
    config.maxK = cap;
    Json j;
    try {
        boxikit::OracleResult result = param == "cubicity" ? boxikit::exactCubicity(g, config)
                                                           : boxikit::exactBoxicity(g, config);
        if (result.exceededMaxK) {
            j["value"] = nullptr;
            j["certificate"] = Json::array();
            j["status"] = "greater-than-" + std::to_string(cap);
        } else {
            j["value"] = *result.value;
            j["certificate"] = certificateToJson(g, result.certificate);
            j["status"] = "exact";
        }
    } catch (const boxikit::CapacityError& err) {
        j["value"] = nullptr;
        j["certificate"] = Json::array();
        j["status"] = "skipped";
        j["reason"] = err.what();
        emit(j);
        return 3;
    }
    if (verbose) std::cerr << param << " computed for " << g.vertexCount() << " vertices\n";
    emit(j);
    return 0;
}

int runBounds(const std::string& params, bool verbose) {
    std::vector<int> m = parseParams(params);
    boxikit::BoundReport report = boxikit::boundReport(m);
    if (verbose)
        std::cerr << "bounds for d=" << m.size() << ": [" << report.lower << ", " << report.upper
                  << "]\n";
    emit(boundReportToJson(report));
    return 0;
}

int runWitness(const std::string& params, bool verbose) {
    std::vector<int> m = parseParams(params);
    boxikit::WitnessDecomposition witness = boxikit::extractWitness(m);
    if (verbose) std::cerr << witness.components.size() << " witness component(s)\n";
    emit(witnessToJson(witness));
    return 0;
}

int runRealizer(std::int64_t n, bool verify, bool exactDim, int capExtensions, int capK,
                bool verbose) {
    if (n < 1) throw boxikit::InputError("realizer: --n must be positive");
    boxikit::Realizer realizer = boxikit::buildDivisibilityRealizer(n);
    Json j = boxikit::realizerToJson(realizer);
    j["n"] = n;
    j["size"] = realizer.extensions.size();

    std::vector<std::int64_t> divisors;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    boxikit::Poset poset = boxikit::divisibilityPoset(divisors);

    if (verify) j["verified"] = boxikit::verifyRealizer(poset, realizer).ok;
    if (exactDim) j["dimension"] = boxikit::exactPosetDimension(poset, capExtensions, capK);
    if (verbose)
        std::cerr << "realizer of size " << realizer.extensions.size() << " over "
                  << divisors.size() << " divisors\n";
    emit(j);
    return 0;
}

int runReport(const std::string& params, int maxNonEdges, bool verbose) {
    std::vector<int> m = parseParams(params);
    boxikit::OracleConfig config;
    config.maxNonEdges = maxNonEdges;

    boxikit::BoundReport bounds = boxikit::boundReport(m);
    boxikit::CertifyReport certify = boxikit::certifyRepresentationOptimal(m, config);
    boxikit::TccRepresentation rep = boxikit::tccCubeRepresentation(m);

    Json j;
    j["m"] = m;
    j["bounds"] = boundReportToJson(bounds);
    Json construction;
    construction["dimension"] = certify.constructionDimension;
    construction["verified"] = certify.constructionVerified;
    construction["trace"] = traceToJson(rep.trace);
    j["construction"] = std::move(construction);
    Json oracle;
    oracle["status"] = certify.oracleStatus;
    oracle["boxicity"] = certify.exactBoxicity ? Json(*certify.exactBoxicity) : Json(nullptr);
    oracle["cubicity"] = certify.exactCubicity ? Json(*certify.exactCubicity) : Json(nullptr);
    oracle["sandwich_holds"] = certify.sandwichHolds;
    oracle["exact_equals_upper"] = certify.exactEqualsUpper;
    j["oracle"] = std::move(oracle);
    j["witness"] = m.size() >= 2 ? witnessToJson(boxikit::extractWitness(m)) : Json(nullptr);
    if (verbose) std::cerr << "report ready (oracle " << certify.oracleStatus << ")\n";
    emit(j);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"boxikit: exact box/cube representations for divisor-style comparability graphs"};
    app.require_subcommand(1);
    bool verbose = false;
    app.add_flag("--verbose", verbose, "human-readable summary on stderr");

    FamilyFlags buildFlags, representFlags;
    auto* build = app.add_subcommand("build", "emit a family graph as JSON");
    buildFlags.attach(build, true);

    auto* represent = app.add_subcommand("represent", "emit a verified box representation");
    representFlags.attach(represent, false);
    bool unit = false, translate = false;
    represent->add_flag("--unit", unit, "normalize every dimension to unit length");
    represent->add_flag("--translate", translate, "shift each dimension to start at 0");

    auto* verify = app.add_subcommand("verify", "check a representation against a graph");
    std::string graphFile, repFile;
    verify->add_option("--graph", graphFile, "graph JSON file")->required();
    verify->add_option("--rep", repFile, "representation JSON file")->required();

    auto* exact = app.add_subcommand("exact", "exact boxicity/cubicity with certificate");
    std::string exactGraphFile, exactParam = "boxicity";
    int maxNonEdges = -1;
    int capK = boxikit::OracleConfig{}.maxK;
    exact->add_option("--graph", exactGraphFile, "graph JSON file")->required();
    exact->add_option("--param", exactParam, "boxicity | cubicity")
        ->check(CLI::IsMember({"boxicity", "cubicity"}));
    exact->add_option("--max-nonedges", maxNonEdges, "non-edge cap (default 18)");
    exact->add_option("--cap", capK, "answer ceiling");

    auto* bounds = app.add_subcommand("bounds", "evaluate every bound formula");
    std::string boundsParams;
    bounds->add_option("--params", boundsParams, "non-decreasing exponents")->required();

    auto* witness = app.add_subcommand("witness", "lower-bound witness decomposition");
    std::string witnessParams;
    witness->add_option("--params", witnessParams, "non-decreasing exponents")->required();

    auto* realizer = app.add_subcommand("realizer", "divisibility realizer for the divisors of n");
    std::int64_t realizerN = 0;
    bool realizerVerify = false, realizerExactDim = false;
    int capExtensions = boxikit::kDefaultExtensionCap;
    int capDim = boxikit::kDefaultDimensionCap;
    realizer->add_option("--n", realizerN, "the integer whose divisors form the poset")->required();
    realizer->add_flag("--verify", realizerVerify, "verify the realizer");
    realizer->add_flag("--exact-dim", realizerExactDim, "compute the exact poset dimension");
    realizer->add_option("--cap-extensions", capExtensions, "linear extension cap");
    realizer->add_option("--cap-k", capDim, "dimension search ceiling");

    auto* report = app.add_subcommand("report", "construction + bounds + oracle + witness");
    std::string reportParams;
    report->add_option("--params", reportParams, "non-decreasing exponents")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return runBuild(buildFlags, verbose);
        if (represent->parsed()) return runRepresent(representFlags, unit, translate, verbose);
        if (verify->parsed()) return runVerify(graphFile, repFile, verbose);
        if (exact->parsed()) {
            int cap = maxNonEdges >= 0 ? maxNonEdges : oracleDefaultMaxNonEdges();
            return runExact(exactGraphFile, exactParam, cap, capK, verbose);
        }
        if (bounds->parsed()) return runBounds(boundsParams, verbose);
        if (witness->parsed()) return runWitness(witnessParams, verbose);
        if (realizer->parsed())
            return runRealizer(realizerN, realizerVerify, realizerExactDim, capExtensions, capDim,
                               verbose);
        if (report->parsed()) {
            int cap = oracleDefaultMaxNonEdges();
            return runReport(reportParams, cap, verbose);
        }
    } catch (const boxikit::InputError& err) {
        fail(2, "input", err.what());
    } catch (const boxikit::CapacityError& err) {
        fail(3, "capacity", err.what());
    }
    return 0;
}

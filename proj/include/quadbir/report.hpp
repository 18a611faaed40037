#pragma once

// Machine-readable report documents.  The JSON layout is frozen (see
// schemas/report.schema.json): top-level keys "version", "command",
// "result", "trace" in that order, stable key order everywhere, no
// timestamps.  Each trace entry carries the claim it checks, the formula
// it instantiates, and the computed value.

#include <quadbir/classifier.hpp>
#include <quadbir/integers.hpp>

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace quadbir {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

/// cpp_int to JSON; emitted as a number whenever it fits 64 bits, as a
/// decimal string otherwise.
inline Json json_int(const Int& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() &&
        x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

struct TraceEntry {
    std::string claim;
    std::string anchor;  // the formula or identity being instantiated
    Json value;
};

struct ReportDocument {
    std::string version = kToolVersion;
    std::string command;
    Json result;
    std::vector<TraceEntry> trace;

    [[nodiscard]] Json to_json() const {
        Json doc;
        doc["version"] = version;
        doc["command"] = command;
        doc["result"] = result;
        Json entries = Json::array();
        for (const auto& t : trace) {
            Json e;
            e["claim"] = t.claim;
            e["anchor"] = t.anchor;
            e["value"] = t.value;
            entries.push_back(std::move(e));
        }
        doc["trace"] = std::move(entries);
        return doc;
    }

    static ReportDocument from_json(const Json& doc) {
        ReportDocument out;
        out.version = doc.at("version").get<std::string>();
        out.command = doc.at("command").get<std::string>();
        out.result = doc.at("result");
        for (const auto& e : doc.at("trace")) {
            out.trace.push_back(
                {e.at("claim").get<std::string>(), e.at("anchor").get<std::string>(),
                 e.at("value")});
        }
        return out;
    }

    [[nodiscard]] std::string dump() const { return to_json().dump(2) + "\n"; }
};

// ---------------------------------------------------------------------------
// Classification report serialization.

namespace detail {

inline Json profile_json(const MapProfile& p) {
    return Json::array({json_int(p.n), json_int(p.m), json_int(p.r), json_int(p.rPrime)});
}

inline Json bidegree_json(const std::pair<Int, Int>& ab) {
    return Json::array({json_int(ab.first), json_int(ab.second)});
}

inline Json elimination_json(const EliminationVerdict& v) {
    Json e;
    e["d"] = json_int(v.d);
    e["verdict"] = verdict_name(v.status);
    if (!v.bidegrees.empty()) {
        Json list = Json::array();
        for (const auto& ab : v.bidegrees) list.push_back(bidegree_json(ab));
        e["bidegrees"] = std::move(list);
    }
    if (v.genusPair) {
        e["pi"] = json_int(v.genusPair->first);
        e["pi1"] = json_int(v.genusPair->second);
    }
    return e;
}

}  // namespace detail

inline Json classification_result_json(const ClassificationReport& r) {
    Json out;
    out["dim"] = r.k;
    out["profile"] = detail::profile_json(r.profile);
    Json profiles = Json::array();
    for (const auto& p : r.allProfiles) {
        Json e;
        e["profile"] = detail::profile_json(p);
        e["standard"] = p.standard;
        profiles.push_back(std::move(e));
    }
    out["allProfiles"] = std::move(profiles);

    if (r.k == 3) {
        Json locus;
        locus["degree"] = json_int(r.curve->d);
        locus["genus"] = json_int(r.curve->g);
        out["baseLocus"] = std::move(locus);
        out["h0"] = json_int(r.h0);
        return out;
    }

    out["type"] = r.surfaceType->label;
    Json locus;
    locus["degree"] = json_int(r.surface->d);
    locus["bidegree"] = detail::bidegree_json({r.surface->a, r.surface->b});
    locus["sectionalGenus"] = json_int(r.surface->pi);
    locus["chiO"] = json_int(r.surface->chiO);
    locus["HK"] = json_int(r.surface->hk);
    locus["c2"] = json_int(r.surface->c2);
    locus["K2"] = json_int(r.surface->Ksq);
    locus["description"] = r.surfaceType->description;
    out["baseLocus"] = std::move(locus);
    out["h0"] = json_int(r.h0);

    Json elim = Json::array();
    for (const auto& v : r.elimination) elim.push_back(detail::elimination_json(v));
    out["elimination"] = std::move(elim);

    Json contraction;
    contraction["excDivisor"] = to_string(r.contraction->excDivisor);
    contraction["lambda"] = json_int(r.contraction->lambda);
    contraction["surfaceImageCheck"] = json_int(r.contraction->surfaceImageCheck);
    contraction["fanoIndex"] = json_int(r.contraction->fanoIndex);
    contraction["trisecantPairings"] = Json::array({json_int(r.contraction->trisecantPairings[0]),
                                                    json_int(r.contraction->trisecantPairings[1]),
                                                    json_int(r.contraction->trisecantPairings[2])});
    out["contraction"] = std::move(contraction);

    Json obstruction;
    obstruction["planeFiberCurveDegree"] = json_int(r.obstruction->planeFiberCurveDegree);
    obstruction["quadricFiberCurveDegree"] = json_int(r.obstruction->quadricFiberCurveDegree);
    Json xy = Json::array();
    for (const auto& s : r.obstruction->xySolutions)
        xy.push_back(Json::array({json_int(s.x), json_int(s.y), json_int(s.dSq)}));
    obstruction["xySolutions"] = std::move(xy);
    obstruction["exclusionPair"] = Json::array({json_int(r.obstruction->exclusionPair[0]),
                                                json_int(r.obstruction->exclusionPair[1])});
    obstruction["quadricSystemSolvable"] = r.obstruction->quadricSystemSolvable;
    out["obstruction"] = std::move(obstruction);

    Json lattice;
    lattice["discriminantGroup"] = r.lattice->discriminant.str();
    lattice["multiplier"] = json_int(r.lattice->multByFive.multiplier);
    lattice["multiplierHolds"] = r.lattice->multByFive.holds;
    lattice["contradiction"] = r.lattice->contradiction;
    Json saturation;
    saturation["saturated"] = r.lattice->saturation.saturated;
    saturation["prime"] = json_int(r.lattice->saturation.prime);
    Json candidates = Json::array();
    for (const auto& cand : r.lattice->saturation.candidates) {
        Json vec = Json::array();
        for (const auto& x : cand.vec) vec.push_back(json_int(x));
        Json c;
        c["vector"] = std::move(vec);
        c["excludedByPrimitivity"] = cand.excludedByPrimitivity;
        candidates.push_back(std::move(c));
    }
    saturation["candidates"] = std::move(candidates);
    lattice["saturation"] = std::move(saturation);
    Json idx = Json::array();
    for (const auto& i : r.lattice->indexCandidates) idx.push_back(json_int(i));
    lattice["indexCandidates"] = std::move(idx);
    out["lattice"] = std::move(lattice);

    out["assumptions"] = r.assumptions;
    return out;
}

inline std::vector<TraceEntry> classification_trace(const ClassificationReport& r) {
    std::vector<TraceEntry> trace;
    if (r.k == 3) {
        trace.push_back({"profile", "(n,m)=(2,2), (r,r')=(1,1)", detail::profile_json(r.profile)});
        trace.push_back({"image_conic_degree", "H(2H-E)^2 = 8-d = 4", json_int(4)});
        trace.push_back({"image_quadric_degree", "(2H-E)^3 = 14-3d+2g = 2", json_int(2)});
        trace.push_back({"base_locus", "(d,g)=(4,0)",
                         Json::array({json_int(r.curve->d), json_int(r.curve->g)})});
        trace.push_back({"linear_system", "h^0(I(2)) = k+2 = 5", json_int(r.h0)});
        return trace;
    }
    trace.push_back({"profile", "(n,m)=(3,3), (r,r')=(2,2)", detail::profile_json(r.profile)});
    trace.push_back({"degree_bound", "H^2(3H-E)^2 = 18-d > 0", json_int(17)});
    trace.push_back({"surviving_degree", "d = 10",
                     json_int(r.surface->d)});
    trace.push_back({"bidegree", "12 | d^2+23d-2ab-256 forces (a,b)=(5,5)",
                     detail::bidegree_json({r.surface->a, r.surface->b})});
    trace.push_back({"invariants", "H_S.K_S=5d-48, c_2=25d-224, pi=3d-23",
                     Json::array({json_int(r.surface->hk), json_int(r.surface->c2),
                                  json_int(r.surface->pi)})});
    trace.push_back({"type", "K3 blown up in two points, on no quadratic complex",
                     r.surfaceType->label});
    trace.push_back({"linear_system", "h^0(I(3)) = k+2 = 6", json_int(r.h0)});
    trace.push_back({"exceptional_divisor", "Exc(R) = 8H-3E",
                     to_string(r.contraction->excDivisor)});
    trace.push_back({"discrepancy", "K_X = tau^*K_Z + Exc(R)",
                     json_int(r.contraction->lambda)});
    trace.push_back({"surface_image", "(3H-E)^2(8H-3E)^2 = -10",
                     json_int(r.contraction->surfaceImageCheck)});
    trace.push_back({"fano_index", "-K_X = H+H' is primitive", json_int(r.contraction->fanoIndex)});
    trace.push_back({"trisecant_pairings", "K_X(l-3f) = -1, H'(l-3f) = 0, Exc(l-3f) = -1",
                     Json::array({json_int(r.contraction->trisecantPairings[0]),
                                  json_int(r.contraction->trisecantPairings[1]),
                                  json_int(r.contraction->trisecantPairings[2])})});
    trace.push_back({"plane_fiber_degree", "(H_S+K_S)C = 5",
                     json_int(r.obstruction->planeFiberCurveDegree)});
    trace.push_back({"quadric_fiber_degree", "(H_S+K_S)C = 10",
                     json_int(r.obstruction->quadricFiberCurveDegree)});
    trace.push_back({"quadric_fiber_system", "{10u+v+w=6, 2u-v-w=4} has no integer solution",
                     r.obstruction->quadricSystemSolvable});
    trace.push_back({"discriminant_group", "dA_1 = Z/12", r.lattice->discriminant.str()});
    trace.push_back({"generator_image", r.lattice->multByFive.identity,
                     json_int(r.lattice->multByFive.multiplier)});
    trace.push_back({"non_isomorphic", "5 is not +-1 mod 12", r.lattice->contradiction});
    trace.push_back({"saturation", "[M:<H_S0,E5>] = 1", r.lattice->saturation.saturated});
    return trace;
}

inline ReportDocument build_classification_document(const ClassificationReport& r,
                                                    std::string command) {
    ReportDocument doc;
    doc.command = std::move(command);
    doc.result = classification_result_json(r);
    doc.trace = classification_trace(r);
    return doc;
}

/// Human-readable rendering.  The elimination trace becomes a table with
/// one row per degree.
inline std::string to_markdown(const ReportDocument& doc, const ClassificationReport& r) {
    std::string md;
    md += "# Special self-birational transformation of Q^" + std::to_string(r.k) + "\n\n";
    md += "- command: `" + doc.command + "`\n";
    md += "- profile (n, m, r, r'): (" + r.profile.n.str() + ", " + r.profile.m.str() + ", " +
          r.profile.r.str() + ", " + r.profile.rPrime.str() + ")\n";
    if (r.k == 3) {
        md += "- base locus: rational curve of degree " + r.curve->d.str() + ", genus " +
              r.curve->g.str() + "\n";
        md += "- quadrics through the curve: " + r.h0.str() + "\n";
    } else {
        md += "- base locus: degree " + r.surface->d.str() + ", bidegree (" + r.surface->a.str() +
              ", " + r.surface->b.str() + "), type " + r.surfaceType->label + " (" +
              r.surfaceType->description + ")\n";
        md += "- invariants: pi = " + r.surface->pi.str() + ", chi(O) = " + r.surface->chiO.str() +
              ", H.K = " + r.surface->hk.str() + ", c2 = " + r.surface->c2.str() +
              ", K^2 = " + r.surface->Ksq.str() + "\n";
        md += "- cubics through the surface: " + r.h0.str() + "\n\n";
        md += "## Degree elimination\n\n";
        md += "| d | verdict | witness |\n|---|---------|---------|\n";
        for (const auto& v : r.elimination) {
            std::string witness;
            if (!v.bidegrees.empty()) {
                for (const auto& [a, b] : v.bidegrees)
                    witness += "(" + a.str() + "," + b.str() + ") ";
                witness.pop_back();
            } else if (v.genusPair) {
                witness = "pi = " + v.genusPair->first.str() +
                          ", pi1 = " + v.genusPair->second.str();
            }
            md += "| " + v.d.str() + " | " + verdict_name(v.status) + " | " + witness + " |\n";
        }
        md += "\n## Contraction\n\n";
        md += "- Exc(R) = " + to_string(r.contraction->excDivisor) +
              ", lambda = " + r.contraction->lambda.str() + "\n";
        md += "- H'^2 Exc^2 = " + r.contraction->surfaceImageCheck.str() + " (nonzero)\n";
        md += "- Fano index " + r.contraction->fanoIndex.str() + "\n";
        md += "\n## Lattice\n\n";
        md += "- discriminant group " + r.lattice->discriminant.str() + ", generator image " +
              r.lattice->multByFive.multiplier.str() + "x\n";
        md += "- minimal models non-isomorphic: " +
              std::string(r.lattice->contradiction ? "yes" : "no") + "\n";
    }
    md += "\n## Trace\n\n";
    for (const auto& t : doc.trace)
        md += "- " + t.claim + ": `" + t.anchor + "` -> " + t.value.dump() + "\n";
    return md;
}

}  // namespace quadbir

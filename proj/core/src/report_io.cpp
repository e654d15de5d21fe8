#include "ghzcert/report_io.h"

#include <json.hpp>

namespace ghzcert {
namespace {

using nlohmann::ordered_json;

ordered_json state_ref(const StateIndex& s) { return {{"tuple", s.tuple}, {"row", s.row}}; }

ordered_json hypotheses_json(const HypothesisResults& h) {
    ordered_json out;
    out["structurally_valid"] = h.structurally_valid;
    if (!h.structurally_valid) {
        out["structure_error"] = h.structure_error;
        return out;
    }
    out["special_set"] = {{"passed", h.special_set.passed}, {"offending_tuples", h.special_set.offending_tuples}};
    ordered_json violations = ordered_json::array();
    for (const auto& [a, b] : h.orthogonality_violations) {
        violations.push_back({state_ref(a), state_ref(b)});
    }
    out["orthogonality"] = {{"passed", h.orthogonality_violations.empty()}, {"violations", violations}};
    if (h.plane_witness) {
        const auto& w = *h.plane_witness;
        out["plane_containing"] = {{"passed", true}, {"witness", {w.i, w.j, w.k}}};
    } else {
        out["plane_containing"] = {{"passed", false}, {"witness", nullptr}};
    }
    ordered_json failures = ordered_json::array();
    for (const auto& s : h.not_genuinely_entangled) {
        failures.push_back(state_ref(s));
    }
    out["genuine_entanglement"] = {{"states", h.states},
                                   {"entangled", h.states - h.not_genuinely_entangled.size()},
                                   {"failures", failures}};
    out["failed"] = h.failed();
    out["genuinely_entangled_set"] = h.genuinely_entangled_set();
    return out;
}

ordered_json oracle_json(const OracleCrossCheck& check) {
    ordered_json out;
    ordered_json parts = ordered_json::array();
    for (const auto& r : check.partitions) {
        ordered_json p;
        p["partition"] = to_string(r.partition);
        p["unknowns"] = r.unknowns;
        p["rows"] = r.rows;
        p["nullspace_dimension"] = r.nullspace.dimension;
        p["contains_identity"] = r.nullspace.contains_identity;
        p["arithmetic"] = to_string(r.nullspace.arithmetic);
        p["tolerance"] = r.nullspace.tolerance;
        p["unstable"] = r.nullspace.unstable;
        p["verdict"] = to_string(r.verdict);
        parts.push_back(std::move(p));
    }
    out["partitions"] = std::move(parts);
    if (const auto v = check.verdict()) {
        out["verdict"] = to_string(*v);
    }
    out["refusal"] = check.refusal ? ordered_json(*check.refusal) : ordered_json(nullptr);
    out["agrees_with_graphs"] =
        check.agrees_with_graphs ? ordered_json(*check.agrees_with_graphs) : ordered_json(nullptr);
    return out;
}

}  // namespace

std::string write_report(const CertReport& report, const std::string& input_digest) {
    ordered_json out;
    if (!input_digest.empty()) {
        out["input_sha256"] = input_digest;
    }
    out["dims"] = {report.dims.d1, report.dims.d2, report.dims.d3};
    out["tuples"] = report.tuples;
    out["arithmetic"] = to_string(report.arithmetic);
    out["tolerance"] = report.tolerance;
    out["hypotheses"] = hypotheses_json(report.hypotheses);
    ordered_json graphs = ordered_json::array();
    for (const auto& c : report.connectivity) {
        graphs.push_back({{"partition", to_string(c.partition)},
                          {"full_components", c.full_components},
                          {"full_edges", c.full_edges},
                          {"full_connected", c.full_components == 1},
                          {"path_components", c.path_components},
                          {"path_edges", c.path_edges},
                          {"path_connected", c.path_components == 1}});
    }
    out["graphs"] = std::move(graphs);
    out["criterion"] = to_string(report.criterion);
    out["graph_verdict"] = to_string(report.graph_verdict);
    out["oracle"] = report.oracle ? oracle_json(*report.oracle) : ordered_json(nullptr);
    out["verdict"] = to_string(report.verdict);
    out["notes"] = report.notes;
    return out.dump(2) + "\n";
}

}  // namespace ghzcert

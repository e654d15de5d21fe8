#include "ghzcert/certifier.h"

#include <algorithm>

#include "ghzcert/graphs.h"

namespace ghzcert {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::StrongestNonlocal: return "strongest-nonlocal";
        case Verdict::NotStrongestNonlocal: return "not-strongest-nonlocal";
        case Verdict::Inconclusive: return "inconclusive";
        case Verdict::HypothesesViolated: return "hypotheses-violated";
    }
    return "?";
}

const char* to_string(Criterion c) {
    switch (c) {
        case Criterion::None: return "none";
        case Criterion::WeightTwoEquivalence: return "weight-two-equivalence";
        case Criterion::HighWeightSufficiency: return "high-weight-sufficiency";
    }
    return "?";
}

std::vector<std::string> HypothesisResults::failed() const {
    if (!structurally_valid) {
        return {"structure"};
    }
    std::vector<std::string> out;
    if (!special_set.passed) out.emplace_back("special-set");
    if (!orthogonality_violations.empty()) out.emplace_back("orthogonality");
    if (!plane_witness) out.emplace_back("plane-containing");
    return out;
}

std::optional<Verdict> OracleCrossCheck::verdict() const {
    if (partitions.size() != 3) {
        return std::nullopt;
    }
    const bool trivial = std::all_of(partitions.begin(), partitions.end(),
                                     [](const OracleResult& r) { return r.verdict == OracleVerdict::TrivialOnly; });
    return trivial ? Verdict::StrongestNonlocal : Verdict::NotStrongestNonlocal;
}

namespace {

template <class Field>
std::vector<StateIndex> entanglement_census(const StateSet& set) {
    std::vector<StateIndex> failures;
    for (std::size_t t = 0; t < set.tuples.size(); ++t) {
        const auto states = expand_tuple_lenient<Field>(set.tuples[t], set.dims);
        for (std::size_t n = 0; n < states.size(); ++n) {
            if (!check_genuine_entanglement(states[n])) {
                failures.push_back({t, n});
            }
        }
    }
    return failures;
}

bool decisive(Verdict v) { return v == Verdict::StrongestNonlocal || v == Verdict::NotStrongestNonlocal; }

}  // namespace

HypothesisResults check_hypotheses(const StateSet& set) {
    HypothesisResults out;
    try {
        validate_structure(set);
    } catch (const ValidationError& e) {
        out.structurally_valid = false;
        out.structure_error = e.what();
        return out;
    }
    out.special_set = check_special_set(set);
    out.orthogonality_violations = check_mutual_orthogonality(set);
    out.plane_witness = check_plane_containing(set);
    out.states = set.state_count();
    out.not_genuinely_entangled = preferred_arithmetic(set) == Arithmetic::Exact
                                      ? entanglement_census<GaussianRational>(set)
                                      : entanglement_census<std::complex<double>>(set);
    return out;
}

CertReport certify_via_graphs(const StateSet& set) {
    CertReport report;
    report.dims = set.dims;
    report.tuples = set.tuples.size();
    report.hypotheses = check_hypotheses(set);
    report.arithmetic = preferred_arithmetic(set);
    report.tolerance = report.arithmetic == Arithmetic::Float ? kFloatTolerance : 0.0;
    if (!report.hypotheses.structurally_valid) {
        report.graph_verdict = report.verdict = Verdict::HypothesesViolated;
        report.notes.push_back("structure: " + report.hypotheses.structure_error);
        return report;
    }

    bool all_connected = true;
    for (const auto p : kAllPartitions) {
        const auto full = build_graph(set, p);
        const auto path = build_path_graph(set, p);
        PartitionConnectivity c;
        c.partition = p;
        c.full_components = connected_components(full).count;
        c.full_edges = full.edges.size();
        c.path_components = connected_components(path).count;
        c.path_edges = path.edges.size();
        all_connected = all_connected && c.full_components == 1;
        report.connectivity.push_back(c);
    }

    const bool all_weight_two =
        std::all_of(set.tuples.begin(), set.tuples.end(), [](const GhzTuple& t) { return t.weight() == 2; });
    if (!report.hypotheses.passed()) {
        report.graph_verdict = Verdict::HypothesesViolated;
        for (const auto& name : report.hypotheses.failed()) {
            report.notes.push_back("hypothesis failed: " + name);
        }
    } else if (all_weight_two) {
        report.criterion = Criterion::WeightTwoEquivalence;
        report.graph_verdict = all_connected ? Verdict::StrongestNonlocal : Verdict::NotStrongestNonlocal;
    } else {
        report.criterion = Criterion::HighWeightSufficiency;
        report.graph_verdict = all_connected ? Verdict::StrongestNonlocal : Verdict::Inconclusive;
    }
    if (!report.hypotheses.genuinely_entangled_set()) {
        report.notes.push_back("not a genuinely entangled set: " +
                               std::to_string(report.hypotheses.not_genuinely_entangled.size()) +
                               " states fail the entanglement check");
    }
    report.verdict = report.graph_verdict;
    return report;
}

CertReport certify(const StateSet& set, bool use_oracle, const OracleOptions& options) {
    auto report = certify_via_graphs(set);
    if (options.arithmetic) {
        report.arithmetic = *options.arithmetic;
        report.tolerance = report.arithmetic == Arithmetic::Float ? options.tolerance : 0.0;
    }
    if (!use_oracle && decisive(report.graph_verdict)) {
        return report;
    }

    OracleCrossCheck check;
    bool resource_refusal = false;
    if (!report.hypotheses.structurally_valid) {
        check.refusal = "oracle not run: " + report.hypotheses.structure_error;
    } else {
        try {
            const auto results = oracle_all(set, options);
            check.partitions.assign(results.begin(), results.end());
        } catch (const ResourceLimitExceeded& e) {
            check.refusal = e.what();
            resource_refusal = true;
        } catch (const std::invalid_argument& e) {
            check.refusal = std::string("oracle not run: ") + e.what();
        }
    }

    if (const auto oracle = check.verdict()) {
        if (decisive(report.graph_verdict)) {
            check.agrees_with_graphs = *oracle == report.graph_verdict;
        }
        report.verdict = *oracle;
    } else if (resource_refusal && !decisive(report.graph_verdict)) {
        report.verdict = Verdict::Inconclusive;
    }
    if (check.refusal) {
        report.notes.push_back(*check.refusal);
    }
    report.oracle = std::move(check);
    return report;
}

}  // namespace ghzcert

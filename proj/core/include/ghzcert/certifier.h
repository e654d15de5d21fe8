#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ghzcert/povm_oracle.h"
#include "ghzcert/state_model.h"

namespace ghzcert {

enum class Verdict { StrongestNonlocal, NotStrongestNonlocal, Inconclusive, HypothesesViolated };

const char* to_string(Verdict v);

/// Which graph criterion produced the verdict.
///  - WeightTwoEquivalence: all tuples have weight 2; connectivity of the three
///    graphs is necessary and sufficient.
///  - HighWeightSufficiency: some tuple has weight > 2; connectivity is only sufficient.
enum class Criterion { None, WeightTwoEquivalence, HighWeightSufficiency };

const char* to_string(Criterion c);

struct HypothesisResults {
    bool structurally_valid = true;
    std::string structure_error;

    SpecialSetResult special_set;
    std::vector<std::pair<StateIndex, StateIndex>> orthogonality_violations;
    std::optional<Ket> plane_witness;

    std::size_t states = 0;
    std::vector<StateIndex> not_genuinely_entangled;

    bool orthogonal() const { return structurally_valid && orthogonality_violations.empty(); }
    /// The hypotheses of the graph criteria (entanglement is not one of them).
    bool passed() const { return orthogonal() && special_set.passed && plane_witness.has_value(); }
    /// Orthogonal and every state genuinely entangled.
    bool genuinely_entangled_set() const { return orthogonal() && not_genuinely_entangled.empty(); }
    /// Names of failed hypotheses: "structure", "special-set", "orthogonality", "plane-containing".
    std::vector<std::string> failed() const;
};

struct PartitionConnectivity {
    Partition partition = Partition::A;
    std::size_t full_components = 0;
    std::size_t full_edges = 0;
    std::size_t path_components = 0;
    std::size_t path_edges = 0;
};

struct OracleCrossCheck {
    /// Empty if the oracle could not run (see `refusal`).
    std::vector<OracleResult> partitions;
    std::optional<std::string> refusal;
    /// Set when both a decisive graph verdict and oracle verdicts exist.
    std::optional<bool> agrees_with_graphs;

    std::optional<Verdict> verdict() const;
};

struct CertReport {
    SystemDims dims;
    std::size_t tuples = 0;
    HypothesisResults hypotheses;
    std::vector<PartitionConnectivity> connectivity;
    Criterion criterion = Criterion::None;
    Verdict graph_verdict = Verdict::Inconclusive;
    std::optional<OracleCrossCheck> oracle;
    Verdict verdict = Verdict::Inconclusive;
    Arithmetic arithmetic = Arithmetic::Exact;
    double tolerance = 0.0;
    std::vector<std::string> notes;
};

HypothesisResults check_hypotheses(const StateSet& set);

/// Applies the graph criteria only.
CertReport certify_via_graphs(const StateSet& set);

/// Graph criteria, plus the oracle when `use_oracle` is set or the graphs are
/// not decisive. When the oracle runs its verdict is final.
CertReport certify(const StateSet& set, bool use_oracle, const OracleOptions& options = {});

}  // namespace ghzcert

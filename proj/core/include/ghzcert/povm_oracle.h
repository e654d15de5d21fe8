#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ghzcert/sparse_echelon.h"
#include "ghzcert/state_model.h"

namespace ghzcert {

// Orthogonality-preserving POVM oracle.
//
// For the cut X | YZ, a POVM element E on YZ preserves orthogonality of S iff
// <phi| I_X (x) E |psi> = 0 for every ordered pair of distinct states of S.
// These are homogeneous linear equations in the n^2 entries of E (n = d_Y d_Z).
//
// The oracle reports the dimension of their solution space. Dimension 1 with
// the identity inside means every solution is proportional to I, so only
// trivial OP-POVMs exist. The constraints come in conjugate pairs, hence the
// space is closed under E -> E^dagger; if the dimension exceeds 1 it contains
// a Hermitian H not proportional to I, and I +/- eps*H (eps small) is a
// nontrivial positive OP-POVM. Positivity therefore never has to be imposed.

/// Thrown when a system exceeds the unknown budget and no override is given.
class ResourceLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultMaxUnknowns = 20000;

struct OracleOptions {
    /// Defaults to exact when every weight divides 4.
    std::optional<Arithmetic> arithmetic;
    /// Relative pivot threshold for float elimination.
    double tolerance = kFloatTolerance;
    std::size_t max_unknowns = kDefaultMaxUnknowns;
    bool allow_large = false;
    /// Keep the nullspace basis in the result.
    bool keep_basis = false;
};

/// Unknown a_{u,v} = <u|E|v> lives at column u * n + v, where u, v are joint
/// indices of the two uncut parties in projection order (first * d_second + second).
template <class Field>
struct BasicConstraintSystem {
    Partition partition = Partition::A;
    std::size_t joint_dimension = 0;
    std::vector<SparseRow<Field>> rows;
    /// The state pair behind each row: (bra, ket).
    std::vector<std::pair<StateIndex, StateIndex>> sources;

    std::size_t unknowns() const { return joint_dimension * joint_dimension; }
};

using ExactConstraintSystem = BasicConstraintSystem<GaussianRational>;
using FloatConstraintSystem = BasicConstraintSystem<std::complex<double>>;

struct ConstraintSystem {
    std::variant<ExactConstraintSystem, FloatConstraintSystem> system;

    Arithmetic arithmetic() const { return system.index() == 0 ? Arithmetic::Exact : Arithmetic::Float; }
    Partition partition() const;
    std::size_t joint_dimension() const;
    std::size_t unknowns() const { return joint_dimension() * joint_dimension(); }
    std::size_t row_count() const;
};

/// Unknown count of the cut-p system for `set`.
std::size_t unknown_count(const SystemDims& dims, Partition p);

/// Rejects non-orthogonal sets and (unless allowed) systems above the unknown budget.
ConstraintSystem build_constraints(const StateSet& set, Partition p, const OracleOptions& options = {});

template <class Field>
BasicConstraintSystem<Field> build_constraints_as(const StateSet& set, Partition p);

struct NullspaceResult {
    Partition partition = Partition::A;
    std::size_t joint_dimension = 0;
    std::size_t dimension = 0;
    bool contains_identity = false;
    Arithmetic arithmetic = Arithmetic::Exact;
    /// Absolute threshold used in float mode (0 in exact mode).
    double tolerance = 0.0;
    /// Float mode only: some pivot came within 10x of the threshold.
    bool unstable = false;
    /// Present when requested: one matrix per free unknown, as sparse rows over the n^2 entries.
    std::optional<std::variant<std::vector<SparseRow<GaussianRational>>, std::vector<SparseRow<std::complex<double>>>>>
        basis;

    /// Every stored basis matrix has zero off-diagonal entries.
    bool basis_is_diagonal() const;
};

NullspaceResult nullspace(const ConstraintSystem& system, const OracleOptions& options = {});

enum class OracleVerdict { TrivialOnly, NontrivialExists };

const char* to_string(OracleVerdict v);

struct OracleResult {
    Partition partition = Partition::A;
    std::size_t unknowns = 0;
    std::size_t rows = 0;
    NullspaceResult nullspace;
    OracleVerdict verdict = OracleVerdict::NontrivialExists;
};

OracleResult oracle_verdict(const StateSet& set, Partition p, const OracleOptions& options = {});

/// The three cuts, evaluated concurrently.
std::array<OracleResult, 3> oracle_all(const StateSet& set, const OracleOptions& options = {});

inline bool strongest_nonlocal(const std::array<OracleResult, 3>& results) {
    for (const auto& r : results) {
        if (r.verdict != OracleVerdict::TrivialOnly) {
            return false;
        }
    }
    return true;
}

/// Sparse-triplet text dump, one "row column real imag" line per nonzero.
void write_triplets(std::ostream& out, const ConstraintSystem& system);

}  // namespace ghzcert

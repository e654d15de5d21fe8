#include "ghzcert/povm_oracle.h"

#include <future>
#include <iomanip>
#include <map>
#include <ostream>

namespace ghzcert {
namespace {

// Per expanded state, its coefficients grouped by the cut party's index:
// cut index -> [(joint index of the other two parties, coefficient)].
template <class Field>
using CutView = std::map<int, std::vector<std::pair<std::uint32_t, Field>>>;

template <class Field>
std::vector<CutView<Field>> cut_views(const StateSet& set, Partition p, std::size_t second_extent) {
    const auto x = cut_party(p);
    const auto [y, z] = joint_parties(p);
    std::vector<CutView<Field>> out;
    out.reserve(set.state_count());
    for (const auto& tuple : set.tuples) {
        for (auto& state : expand_tuple_lenient<Field>(tuple, set.dims)) {
            CutView<Field> view;
            for (auto& [ket, coef] : state.coefficients) {
                const auto joint = static_cast<std::uint32_t>(static_cast<std::size_t>(ket[y]) * second_extent +
                                                               static_cast<std::size_t>(ket[z]));
                view[ket[x]].emplace_back(joint, std::move(coef));
            }
            out.push_back(std::move(view));
        }
    }
    return out;
}

template <class Field>
double largest_magnitude(const BasicConstraintSystem<Field>& system) {
    double largest = 0.0;
    for (const auto& row : system.rows) {
        for (const auto& e : row) {
            largest = std::max(largest, magnitude(e.value));
        }
    }
    return largest;
}

template <class Field>
NullspaceResult solve(const BasicConstraintSystem<Field>& system, const OracleOptions& options) {
    constexpr bool exact = std::is_same_v<Field, GaussianRational>;
    NullspaceResult result;
    result.partition = system.partition;
    result.joint_dimension = system.joint_dimension;
    result.arithmetic = exact ? Arithmetic::Exact : Arithmetic::Float;
    result.tolerance = exact ? 0.0 : options.tolerance * std::max(1.0, largest_magnitude(system));

    SparseEchelon<Field> echelon(system.unknowns(), result.tolerance);
    for (const auto& row : system.rows) {
        if (!row.empty()) {
            echelon.insert(row);
        }
    }
    result.dimension = echelon.nullity();
    result.unstable = echelon.near_threshold();

    const std::size_t n = system.joint_dimension;
    SparseRow<Field> identity;
    identity.reserve(n);
    for (std::size_t u = 0; u < n; ++u) {
        identity.push_back({static_cast<std::uint32_t>(u * n + u), Field(1)});
    }
    result.contains_identity = true;
    for (const auto& row : echelon.rows()) {
        if (!is_negligible(dot(row, identity), result.tolerance * static_cast<double>(n))) {
            result.contains_identity = false;
            break;
        }
    }
    if (options.keep_basis) {
        result.basis = echelon.nullspace_basis();
    }
    return result;
}

template <class Field>
void write_rows(std::ostream& out, const BasicConstraintSystem<Field>& system) {
    for (std::size_t r = 0; r < system.rows.size(); ++r) {
        for (const auto& e : system.rows[r]) {
            out << r << ' ' << e.column << ' ';
            if constexpr (std::is_same_v<Field, GaussianRational>) {
                out << e.value.real().get_str() << ' ' << e.value.imag().get_str() << '\n';
            } else {
                out << std::setprecision(17) << e.value.real() << ' ' << e.value.imag() << '\n';
            }
        }
    }
}

}  // namespace

Partition ConstraintSystem::partition() const {
    return std::visit([](const auto& s) { return s.partition; }, system);
}

std::size_t ConstraintSystem::joint_dimension() const {
    return std::visit([](const auto& s) { return s.joint_dimension; }, system);
}

std::size_t ConstraintSystem::row_count() const {
    return std::visit([](const auto& s) { return s.rows.size(); }, system);
}

std::size_t unknown_count(const SystemDims& dims, Partition p) {
    const auto [y, z] = joint_parties(p);
    const auto n = static_cast<std::size_t>(dims[y]) * static_cast<std::size_t>(dims[z]);
    return n * n;
}

template <class Field>
BasicConstraintSystem<Field> build_constraints_as(const StateSet& set, Partition p) {
    const auto [y, z] = joint_parties(p);
    const auto second_extent = static_cast<std::size_t>(set.dims[z]);
    BasicConstraintSystem<Field> system;
    system.partition = p;
    system.joint_dimension = static_cast<std::size_t>(set.dims[y]) * second_extent;
    const auto n = system.joint_dimension;

    const auto views = cut_views<Field>(set, p, second_extent);
    const auto indices = state_indices(set);
    system.rows.reserve(views.size() * (views.size() - (views.empty() ? 0 : 1)));
    for (std::size_t a = 0; a < views.size(); ++a) {
        for (std::size_t b = 0; b < views.size(); ++b) {
            if (a == b) {
                continue;
            }
            // coefficient of a_{u,v}: sum over cut index x of conj(phi(x,u)) psi(x,v)
            std::map<std::uint32_t, Field> acc;
            for (const auto& [x, bra_terms] : views[a]) {
                auto it = views[b].find(x);
                if (it == views[b].end()) {
                    continue;
                }
                for (const auto& [u, c1] : bra_terms) {
                    const Field c1_conj = conj(c1);
                    for (const auto& [v, c2] : it->second) {
                        acc[static_cast<std::uint32_t>(u * n + v)] += c1_conj * c2;
                    }
                }
            }
            SparseRow<Field> row;
            row.reserve(acc.size());
            for (auto& [col, value] : acc) {
                if (!is_negligible(value, 0.0)) {
                    row.push_back({col, std::move(value)});
                }
            }
            system.rows.push_back(std::move(row));
            system.sources.emplace_back(indices[a], indices[b]);
        }
    }
    return system;
}

template ExactConstraintSystem build_constraints_as<GaussianRational>(const StateSet&, Partition);
template FloatConstraintSystem build_constraints_as<std::complex<double>>(const StateSet&, Partition);

ConstraintSystem build_constraints(const StateSet& set, Partition p, const OracleOptions& options) {
    validate_structure(set);
    const auto unknowns = unknown_count(set.dims, p);
    if (unknowns > options.max_unknowns && !options.allow_large) {
        throw ResourceLimitExceeded("cut " + std::string(to_string(p)) + " needs " + std::to_string(unknowns) +
                                    " unknowns, above the limit of " + std::to_string(options.max_unknowns) +
                                    " (pass an override to proceed)");
    }
    const Arithmetic mode = options.arithmetic.value_or(preferred_arithmetic(set));
    const auto violations = check_mutual_orthogonality(set, mode);
    if (!violations.empty()) {
        const auto& [a, b] = violations.front();
        throw ValidationError("state set is not mutually orthogonal: state " + std::to_string(a.row) +
                              " of tuple " + std::to_string(a.tuple) + " overlaps state " + std::to_string(b.row) +
                              " of tuple " + std::to_string(b.tuple) + " (" + std::to_string(violations.size()) +
                              " violating pairs)");
    }
    if (mode == Arithmetic::Exact) {
        return {build_constraints_as<GaussianRational>(set, p)};
    }
    return {build_constraints_as<std::complex<double>>(set, p)};
}

bool NullspaceResult::basis_is_diagonal() const {
    if (!basis) {
        return false;
    }
    const std::size_t n = joint_dimension;
    return std::visit(
        [&](const auto& vectors) {
            for (const auto& vec : vectors) {
                for (const auto& e : vec) {
                    if (e.column / n != e.column % n && !is_negligible(e.value, tolerance)) {
                        return false;
                    }
                }
            }
            return true;
        },
        *basis);
}

NullspaceResult nullspace(const ConstraintSystem& system, const OracleOptions& options) {
    return std::visit([&](const auto& s) { return solve(s, options); }, system.system);
}

const char* to_string(OracleVerdict v) {
    return v == OracleVerdict::TrivialOnly ? "trivial-only" : "nontrivial-exists";
}

OracleResult oracle_verdict(const StateSet& set, Partition p, const OracleOptions& options) {
    const auto system = build_constraints(set, p, options);
    OracleResult result;
    result.partition = p;
    result.unknowns = system.unknowns();
    result.rows = system.row_count();
    result.nullspace = nullspace(system, options);
    result.verdict = result.nullspace.dimension == 1 && result.nullspace.contains_identity
                         ? OracleVerdict::TrivialOnly
                         : OracleVerdict::NontrivialExists;
    return result;
}

std::array<OracleResult, 3> oracle_all(const StateSet& set, const OracleOptions& options) {
    std::array<std::future<OracleResult>, 3> pending;
    for (std::size_t k = 0; k < 3; ++k) {
        pending[k] = std::async(std::launch::async, [&, k] { return oracle_verdict(set, kAllPartitions[k], options); });
    }
    std::array<OracleResult, 3> out;
    for (std::size_t k = 0; k < 3; ++k) {
        out[k] = pending[k].get();
    }
    return out;
}

void write_triplets(std::ostream& out, const ConstraintSystem& system) {
    const auto p = system.partition();
    const auto [y, z] = joint_parties(p);
    const char* party_names = "ABC";
    out << "# ghzcert constraint system\n"
        << "# partition " << to_string(p) << "\n"
        << "# arithmetic " << to_string(system.arithmetic()) << "\n"
        << "# unknowns " << system.unknowns() << " rows " << system.row_count() << "\n"
        << "# column = u * " << system.joint_dimension() << " + v, entry <u|E|v>, u and v joint indices of "
        << party_names[y] << party_names[z] << "\n"
        << "# row column real imag\n";
    std::visit([&](const auto& s) { write_rows(out, s); }, system.system);
}

}  // namespace ghzcert

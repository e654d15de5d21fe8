#include "ghzcert/state_model.h"

#include <sstream>

#include "ghzcert/sparse_echelon.h"

namespace ghzcert {

std::string to_string(const Ket& ket) {
    std::ostringstream out;
    out << '(' << ket.i << ',' << ket.j << ',' << ket.k << ')';
    return out.str();
}

bool GhzTuple::coordinately_different() const {
    for (std::size_t a = 0; a < kets.size(); ++a) {
        for (std::size_t b = a + 1; b < kets.size(); ++b) {
            if (kets[a].i == kets[b].i || kets[a].j == kets[b].j || kets[a].k == kets[b].k) {
                return false;
            }
        }
    }
    return true;
}

std::size_t StateSet::state_count() const {
    std::size_t n = 0;
    for (const auto& t : tuples) {
        n += t.weight();
    }
    return n;
}

std::vector<StateIndex> state_indices(const StateSet& set) {
    std::vector<StateIndex> out;
    out.reserve(set.state_count());
    for (std::size_t t = 0; t < set.tuples.size(); ++t) {
        for (std::size_t n = 0; n < set.tuples[t].weight(); ++n) {
            out.push_back({t, n});
        }
    }
    return out;
}

const char* to_string(Partition p) {
    switch (p) {
        case Partition::A: return "A";
        case Partition::B: return "B";
        case Partition::C: return "C";
    }
    return "?";
}

Partition parse_partition(const std::string& name) {
    if (name == "A" || name == "a") return Partition::A;
    if (name == "B" || name == "b") return Partition::B;
    if (name == "C" || name == "c") return Partition::C;
    throw std::invalid_argument("unknown partition '" + name + "' (expected A, B or C)");
}

template <class Field>
std::complex<double> BasicStateVector<Field>::amplitude(const Ket& ket) const {
    auto it = coefficients.find(ket);
    if (it == coefficients.end()) {
        return {};
    }
    return to_complex(it->second) / std::sqrt(static_cast<double>(scale));
}

template struct BasicStateVector<GaussianRational>;
template struct BasicStateVector<std::complex<double>>;

template <>
bool ScaledValue<GaussianRational>::is_one(double /*tolerance*/) const {
    // numerator / sqrt(scale) == 1  <=>  numerator real, positive, numerator^2 == scale.
    if (!numerator.is_real() || sgn(numerator.real()) <= 0) {
        return false;
    }
    return numerator.real() * numerator.real() == mpq_class(static_cast<unsigned long>(scale));
}

template <>
bool ScaledValue<std::complex<double>>::is_one(double tolerance) const {
    return std::abs(value() - 1.0) <= tolerance;
}

void validate_tuple(const GhzTuple& tuple, const SystemDims& dims) {
    const std::string name = tuple.label ? "tuple '" + *tuple.label + "'" : "tuple";
    if (tuple.weight() < 2) {
        throw ValidationError(name + ": weight must be at least 2");
    }
    if (static_cast<int>(tuple.weight()) > dims.min()) {
        throw ValidationError(name + ": weight " + std::to_string(tuple.weight()) +
                              " exceeds the smallest local dimension");
    }
    std::set<Ket> seen;
    for (const auto& ket : tuple.kets) {
        if (!ket.in_bounds(dims)) {
            throw ValidationError(name + ": ket " + to_string(ket) + " is out of bounds");
        }
        if (!seen.insert(ket).second) {
            throw ValidationError(name + ": ket " + to_string(ket) + " appears twice");
        }
    }
}

void validate_structure(const StateSet& set) {
    if (!set.dims.valid()) {
        throw ValidationError("every local dimension must be at least 2");
    }
    for (std::size_t t = 0; t < set.tuples.size(); ++t) {
        try {
            validate_tuple(set.tuples[t], set.dims);
        } catch (const ValidationError& e) {
            throw ValidationError("tuples[" + std::to_string(t) + "]: " + e.what());
        }
    }
}

template <class Field>
std::vector<BasicStateVector<Field>> expand_tuple_lenient(const GhzTuple& tuple, const SystemDims& dims) {
    validate_tuple(tuple, dims);
    const std::size_t w = tuple.weight();
    std::vector<BasicStateVector<Field>> states(w);
    for (std::size_t n = 0; n < w; ++n) {
        auto& s = states[n];
        s.dims = dims;
        s.scale = w;
        for (std::size_t m = 0; m < w; ++m) {
            s.coefficients.emplace(tuple.kets[m], root_of_unity<Field>(m * n, w));
        }
    }
    return states;
}

template <class Field>
std::vector<BasicStateVector<Field>> expand_tuple(const GhzTuple& tuple, const SystemDims& dims) {
    if (!tuple.coordinately_different()) {
        throw ValidationError((tuple.label ? "tuple '" + *tuple.label + "'" : std::string("tuple")) +
                              ": kets are not coordinately different");
    }
    return expand_tuple_lenient<Field>(tuple, dims);
}

template <class Field>
ScaledValue<Field> inner_product(const BasicStateVector<Field>& bra, const BasicStateVector<Field>& ket) {
    if (bra.dims != ket.dims) {
        throw std::invalid_argument("inner_product: dimension mismatch");
    }
    ScaledValue<Field> out;
    out.scale = bra.scale * ket.scale;
    for (const auto& [k, v] : bra.coefficients) {
        auto it = ket.coefficients.find(k);
        if (it != ket.coefficients.end()) {
            out.numerator += conj(v) * it->second;
        }
    }
    return out;
}

Arithmetic preferred_arithmetic(const StateSet& set) {
    for (const auto& t : set.tuples) {
        if (!weight_supports_exact(t.weight())) {
            return Arithmetic::Float;
        }
    }
    return Arithmetic::Exact;
}

namespace {

template <class Field>
std::vector<std::pair<StateIndex, StateIndex>> orthogonality_violations(const StateSet& set) {
    std::vector<std::vector<BasicStateVector<Field>>> expanded;
    std::vector<std::set<Ket>> supports;
    expanded.reserve(set.tuples.size());
    for (const auto& t : set.tuples) {
        expanded.push_back(expand_tuple_lenient<Field>(t, set.dims));
        supports.emplace_back(t.kets.begin(), t.kets.end());
    }
    auto overlaps = [](const std::set<Ket>& a, const std::set<Ket>& b) {
        for (const auto& k : a) {
            if (b.contains(k)) {
                return true;
            }
        }
        return false;
    };
    std::vector<std::pair<StateIndex, StateIndex>> out;
    for (std::size_t a = 0; a < expanded.size(); ++a) {
        for (std::size_t b = a; b < expanded.size(); ++b) {
            if (a != b && !overlaps(supports[a], supports[b])) {
                continue;
            }
            for (std::size_t m = 0; m < expanded[a].size(); ++m) {
                for (std::size_t n = (a == b ? m + 1 : 0); n < expanded[b].size(); ++n) {
                    if (!inner_product(expanded[a][m], expanded[b][n]).is_zero()) {
                        out.push_back({{a, m}, {b, n}});
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace

std::vector<std::pair<StateIndex, StateIndex>> check_mutual_orthogonality(const StateSet& set,
                                                                        std::optional<Arithmetic> arithmetic) {
    validate_structure(set);
    const Arithmetic mode = arithmetic.value_or(preferred_arithmetic(set));
    if (mode == Arithmetic::Exact) {
        return orthogonality_violations<GaussianRational>(set);
    }
    return orthogonality_violations<std::complex<double>>(set);
}

std::set<Ket> coordinate_set(const StateSet& set) {
    std::set<Ket> out;
    for (const auto& t : set.tuples) {
        out.insert(t.kets.begin(), t.kets.end());
    }
    return out;
}

std::optional<Ket> check_plane_containing(const StateSet& set) {
    const auto coords = coordinate_set(set);
    const auto& dims = set.dims;
    // Smallest index v of `party` such that the whole plane {v} x Z x Z lies in C(S).
    auto first_full_plane = [&](std::size_t party) -> std::optional<int> {
        const std::size_t p1 = (party + 1) % 3;
        const std::size_t p2 = (party + 2) % 3;
        for (int v = 0; v < dims[party]; ++v) {
            bool full = true;
            for (int a = 0; a < dims[p1] && full; ++a) {
                for (int b = 0; b < dims[p2] && full; ++b) {
                    std::array<int, 3> c{};
                    c[party] = v;
                    c[p1] = a;
                    c[p2] = b;
                    full = coords.contains(Ket{c[0], c[1], c[2]});
                }
            }
            if (full) {
                return v;
            }
        }
        return std::nullopt;
    };
    const auto i0 = first_full_plane(0);
    const auto j0 = first_full_plane(1);
    const auto k0 = first_full_plane(2);
    if (!i0 || !j0 || !k0) {
        return std::nullopt;
    }
    return Ket{*i0, *j0, *k0};
}

SpecialSetResult check_special_set(const StateSet& set) {
    SpecialSetResult out;
    for (std::size_t t = 0; t < set.tuples.size(); ++t) {
        if (!set.tuples[t].coordinately_different()) {
            out.passed = false;
            out.offending_tuples.push_back(t);
        }
    }
    return out;
}

template <class Field>
std::size_t schmidt_rank(const BasicStateVector<Field>& state, std::size_t party) {
    const auto& dims = state.dims;
    const std::size_t p1 = (party + 1) % 3;
    const std::size_t p2 = (party + 2) % 3;
    const auto columns = static_cast<std::size_t>(dims[p1]) * static_cast<std::size_t>(dims[p2]);
    std::vector<SparseRow<Field>> rows(static_cast<std::size_t>(dims[party]));
    double largest = 0.0;
    // std::map iteration is ordered by (i, j, k), so columns arrive sorted only for party A;
    // sort afterwards for the general case.
    for (const auto& [ket, value] : state.coefficients) {
        const auto col = static_cast<std::uint32_t>(ket[p1] * dims[p2] + ket[p2]);
        rows[static_cast<std::size_t>(ket[party])].push_back({col, value});
        largest = std::max(largest, magnitude(value));
    }
    const double tolerance = std::is_same_v<Field, GaussianRational> ? 0.0 : kFloatTolerance * largest;
    SparseEchelon<Field> echelon(columns, tolerance);
    for (auto& row : rows) {
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.column < b.column; });
        echelon.insert(std::move(row));
    }
    return echelon.rank();
}

template <class Field>
bool check_genuine_entanglement(const BasicStateVector<Field>& state) {
    if (!inner_product(state, state).is_one()) {
        throw ValidationError("check_genuine_entanglement: state is not normalised");
    }
    for (std::size_t party = 0; party < 3; ++party) {
        if (schmidt_rank(state, party) < 2) {
            return false;
        }
    }
    return true;
}

template std::vector<ExactStateVector> expand_tuple<GaussianRational>(const GhzTuple&, const SystemDims&);
template std::vector<FloatStateVector> expand_tuple<std::complex<double>>(const GhzTuple&, const SystemDims&);
template std::vector<ExactStateVector> expand_tuple_lenient<GaussianRational>(const GhzTuple&, const SystemDims&);
template std::vector<FloatStateVector> expand_tuple_lenient<std::complex<double>>(const GhzTuple&,
                                                                                  const SystemDims&);
template ScaledValue<GaussianRational> inner_product(const ExactStateVector&, const ExactStateVector&);
template ScaledValue<std::complex<double>> inner_product(const FloatStateVector&, const FloatStateVector&);
template std::size_t schmidt_rank(const ExactStateVector&, std::size_t);
template std::size_t schmidt_rank(const FloatStateVector&, std::size_t);
template bool check_genuine_entanglement(const ExactStateVector&);
template bool check_genuine_entanglement(const FloatStateVector&);

}  // namespace ghzcert

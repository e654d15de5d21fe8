#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ghzcert/gaussian_rational.h"
#include "ghzcert/scalar.h"

namespace ghzcert {

/// Raised when a state set or tuple breaks a structural invariant.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Local dimensions of parties A, B and C.
struct SystemDims {
    int d1 = 0;
    int d2 = 0;
    int d3 = 0;

    int operator[](std::size_t party) const { return party == 0 ? d1 : party == 1 ? d2 : d3; }
    int min() const { return std::min({d1, d2, d3}); }
    std::size_t basis_size() const {
        return static_cast<std::size_t>(d1) * static_cast<std::size_t>(d2) * static_cast<std::size_t>(d3);
    }
    bool valid() const { return d1 >= 2 && d2 >= 2 && d3 >= 2; }

    friend auto operator<=>(const SystemDims&, const SystemDims&) = default;
};

/// Computational basis ket |i>_A |j>_B |k>_C.
struct Ket {
    int i = 0;
    int j = 0;
    int k = 0;

    int operator[](std::size_t party) const { return party == 0 ? i : party == 1 ? j : k; }
    bool in_bounds(const SystemDims& dims) const {
        return i >= 0 && j >= 0 && k >= 0 && i < dims.d1 && j < dims.d2 && k < dims.d3;
    }

    friend auto operator<=>(const Ket&, const Ket&) = default;
};

std::string to_string(const Ket& ket);

/// A weight-w family of GHZ-like states: the w Fourier combinations of `kets`.
/// Ket order fixes the coefficient of ket m in state n as omega^(m*n).
struct GhzTuple {
    std::vector<Ket> kets;
    std::optional<std::string> label;

    std::size_t weight() const { return kets.size(); }
    /// Pairwise distinct in every coordinate.
    bool coordinately_different() const;

    friend bool operator==(const GhzTuple&, const GhzTuple&) = default;
};

struct StateSet {
    SystemDims dims;
    std::vector<GhzTuple> tuples;

    std::size_t state_count() const;

    friend bool operator==(const StateSet&, const StateSet&) = default;
};

/// Position of an expanded state: tuple index and Fourier row.
struct StateIndex {
    std::size_t tuple = 0;
    std::size_t row = 0;

    friend auto operator<=>(const StateIndex&, const StateIndex&) = default;
};

/// Enumerates expanded states in set order (tuple-major, then Fourier row).
std::vector<StateIndex> state_indices(const StateSet& set);

enum class Partition { A, B, C };

inline constexpr std::array<Partition, 3> kAllPartitions{Partition::A, Partition::B, Partition::C};

const char* to_string(Partition p);
Partition parse_partition(const std::string& name);

/// The party that is cut off (0, 1 or 2).
inline std::size_t cut_party(Partition p) { return static_cast<std::size_t>(p); }

/// The two remaining parties in projection order: A -> (B, C), B -> (C, A), C -> (A, B).
inline std::array<std::size_t, 2> joint_parties(Partition p) {
    const std::size_t x = cut_party(p);
    return {(x + 1) % 3, (x + 2) % 3};
}

/// A pure state sum_ket coefficient(ket) / sqrt(scale) |ket>.
template <class Field>
struct BasicStateVector {
    SystemDims dims;
    std::uint64_t scale = 1;
    std::map<Ket, Field> coefficients;

    std::complex<double> amplitude(const Ket& ket) const;
};

using ExactStateVector = BasicStateVector<GaussianRational>;
using FloatStateVector = BasicStateVector<std::complex<double>>;

/// numerator / sqrt(scale).
template <class Field>
struct ScaledValue {
    Field numerator{};
    std::uint64_t scale = 1;

    std::complex<double> value() const {
        return to_complex(numerator) / std::sqrt(static_cast<double>(scale));
    }
    bool is_zero(double tolerance = kFloatTolerance) const {
        return is_negligible(numerator, tolerance * std::sqrt(static_cast<double>(scale)));
    }
    /// Exactly (or within tolerance) equal to 1.
    bool is_one(double tolerance = kFloatTolerance) const;
};

/// Structural checks: dims >= 2, weight in [2, min(dims)], kets in bounds and distinct.
void validate_structure(const StateSet& set);
void validate_tuple(const GhzTuple& tuple, const SystemDims& dims);

/// The w states of a coordinately different tuple. Throws ValidationError otherwise.
template <class Field>
std::vector<BasicStateVector<Field>> expand_tuple(const GhzTuple& tuple, const SystemDims& dims);

/// Same expansion but only requires distinct, in-bound kets, so that sets
/// breaking coordinate distinctness can still be inspected.
template <class Field>
std::vector<BasicStateVector<Field>> expand_tuple_lenient(const GhzTuple& tuple, const SystemDims& dims);

template <class Field>
ScaledValue<Field> inner_product(const BasicStateVector<Field>& bra, const BasicStateVector<Field>& ket);

/// Exact when all weights divide 4, float otherwise.
Arithmetic preferred_arithmetic(const StateSet& set);

/// Pairs (a, b), a < b, of expanded states that are not orthogonal.
std::vector<std::pair<StateIndex, StateIndex>> check_mutual_orthogonality(
    const StateSet& set, std::optional<Arithmetic> arithmetic = std::nullopt);

std::set<Ket> coordinate_set(const StateSet& set);

/// Lexicographically smallest (i0, j0, k0) whose three coordinate planes all lie in C(S).
std::optional<Ket> check_plane_containing(const StateSet& set);

struct SpecialSetResult {
    bool passed = true;
    std::vector<std::size_t> offending_tuples;
};

SpecialSetResult check_special_set(const StateSet& set);

/// Schmidt rank of the state across the cut `party | rest`.
template <class Field>
std::size_t schmidt_rank(const BasicStateVector<Field>& state, std::size_t party);

/// True iff the Schmidt rank is at least 2 across all three cuts. Rejects unnormalised input.
template <class Field>
bool check_genuine_entanglement(const BasicStateVector<Field>& state);

template <>
bool ScaledValue<GaussianRational>::is_one(double tolerance) const;
template <>
bool ScaledValue<std::complex<double>>::is_one(double tolerance) const;

extern template struct BasicStateVector<GaussianRational>;
extern template struct BasicStateVector<std::complex<double>>;

}  // namespace ghzcert

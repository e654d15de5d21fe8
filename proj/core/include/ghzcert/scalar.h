#pragma once

// Uniform helpers over the two amplitude fields used throughout the library:
// GaussianRational (exact) and std::complex<double> (float, tolerance based).

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "ghzcert/gaussian_rational.h"

namespace ghzcert {

enum class Arithmetic { Exact, Float };

inline constexpr double kFloatTolerance = 1e-9;

inline const char* to_string(Arithmetic a) { return a == Arithmetic::Exact ? "exact" : "float"; }

/// Exact amplitudes are available when every w-th root of unity lies in {1, i, -1, -i}.
inline bool weight_supports_exact(std::size_t weight) { return weight != 0 && 4 % weight == 0; }

inline bool is_negligible(const GaussianRational& z, double /*tolerance*/) { return z.is_zero(); }
inline bool is_negligible(const std::complex<double>& z, double tolerance) { return std::abs(z) <= tolerance; }

inline double magnitude(const GaussianRational& z) { return std::abs(z.to_complex()); }
inline double magnitude(const std::complex<double>& z) { return std::abs(z); }

inline std::complex<double> conj(const std::complex<double>& z) { return std::conj(z); }

inline std::complex<double> to_complex(const GaussianRational& z) { return z.to_complex(); }
inline std::complex<double> to_complex(const std::complex<double>& z) { return z; }

/// omega^power with omega = exp(2*pi*i / weight).
template <class Field>
Field root_of_unity(std::size_t power, std::size_t weight);

template <>
inline GaussianRational root_of_unity<GaussianRational>(std::size_t power, std::size_t weight) {
    if (!weight_supports_exact(weight)) {
        throw std::invalid_argument("exact roots of unity require a weight dividing 4");
    }
    return GaussianRational::unit(static_cast<int>((power % weight) * (4 / weight)));
}

template <>
inline std::complex<double> root_of_unity<std::complex<double>>(std::size_t power, std::size_t weight) {
    const std::size_t reduced = power % weight;
    // Snap the quarter turns so that weights 2 and 4 stay free of rounding noise.
    if ((4 * reduced) % weight == 0) {
        return to_complex(GaussianRational::unit(static_cast<int>(4 * reduced / weight)));
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(reduced) / static_cast<double>(weight);
    return std::polar(1.0, angle);
}

}  // namespace ghzcert

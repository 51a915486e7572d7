#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace collapsim {

using Complex = std::complex<double>;

inline constexpr double kNormalizationTolerance = 1e-12;

// Normalized amplitudes C_1..C_n over the one-excitation basis, each basis
// state carrying an outcome label ("A excited", "photon free", ...).
class EntangledAmplitudes {
public:
    // Throws NormalizationError when sum |C_i|^2 deviates from 1 by more
    // than kNormalizationTolerance, InvalidArgument on n < 2 or a label
    // count mismatch.
    EntangledAmplitudes(std::vector<Complex> amplitudes,
                        std::vector<std::string> labels);

    std::size_t size() const { return amplitudes_.size(); }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }
    const std::vector<std::string>& labels() const { return labels_; }

    // |C_i|^2 for every basis state.
    std::vector<double> probabilities() const;

private:
    std::vector<Complex> amplitudes_;
    std::vector<std::string> labels_;
};

// Cumulative squared-amplitude coordinates x_1 <= ... <= x_{n-1} on [0, 1].
class DiffusionCoordinates {
public:
    explicit DiffusionCoordinates(std::vector<double> positions);

    const std::vector<double>& positions() const { return positions_; }
    std::size_t size() const { return positions_.size(); }
    double operator[](std::size_t i) const { return positions_[i]; }

    // x_1, x_2 - x_1, ..., 1 - x_{n-1}: the |C_i|^2 the coordinates encode.
    std::vector<double> interval_lengths() const;

private:
    std::vector<double> positions_;
};

struct AbsorptionOutcome {
    std::string label;
    double absorption_time = 0.0;
    std::uint64_t steps = 0;
};

// Standard labels for the scenarios.
std::vector<std::string> two_atom_labels();
std::vector<std::string> three_atom_labels();
std::vector<std::string> one_atom_labels();

// Phases are dropped; only moduli enter the coordinates. Supports n = 2, 3.
DiffusionCoordinates to_diffusion(const EntangledAmplitudes& state);

// Inverse map with nonnegative real amplitudes.
EntangledAmplitudes from_diffusion(const DiffusionCoordinates& coords,
                                   std::vector<std::string> labels);

// First n_digits binary digits of x in [0, 1]; x = 1 yields all ones.
std::vector<int> binary_expansion(double x, int n_digits);

} // namespace collapsim

#include "collapsim/amplitude.hpp"

#include "collapsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace collapsim {

EntangledAmplitudes::EntangledAmplitudes(std::vector<Complex> amplitudes,
                                         std::vector<std::string> labels)
    : amplitudes_(std::move(amplitudes)), labels_(std::move(labels))
{
    if (amplitudes_.size() < 2)
        throw InvalidArgument("entangled state needs at least two amplitudes");
    if (labels_.size() != amplitudes_.size())
        throw InvalidArgument("one label per amplitude is required");

    double norm = 0.0;
    for (const auto& c : amplitudes_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw NormalizationError("amplitude is not finite");
        norm += std::norm(c);
    }
    if (std::abs(norm - 1.0) > kNormalizationTolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "amplitudes are not normalized: sum |C_i|^2 = " << norm;
        throw NormalizationError(msg.str());
    }
}

std::vector<double> EntangledAmplitudes::probabilities() const
{
    std::vector<double> p;
    p.reserve(amplitudes_.size());
    for (const auto& c : amplitudes_)
        p.push_back(std::norm(c));
    return p;
}

DiffusionCoordinates::DiffusionCoordinates(std::vector<double> positions)
    : positions_(std::move(positions))
{
    if (positions_.empty())
        throw InvalidArgument("diffusion coordinates need at least one position");
    for (std::size_t i = 0; i < positions_.size(); ++i) {
        const double x = positions_[i];
        if (!(x >= 0.0 && x <= 1.0))
            throw DomainError("diffusion coordinate outside [0, 1]");
        if (i > 0 && x < positions_[i - 1])
            throw DomainError("diffusion coordinates must be nondecreasing");
    }
}

std::vector<double> DiffusionCoordinates::interval_lengths() const
{
    std::vector<double> lengths;
    lengths.reserve(positions_.size() + 1);
    double prev = 0.0;
    for (double x : positions_) {
        lengths.push_back(x - prev);
        prev = x;
    }
    lengths.push_back(1.0 - prev);
    return lengths;
}

std::vector<std::string> two_atom_labels() { return {"A excited", "B excited"}; }

std::vector<std::string> three_atom_labels()
{
    return {"A excited", "B excited", "C excited"};
}

std::vector<std::string> one_atom_labels() { return {"photon free", "excited"}; }

DiffusionCoordinates to_diffusion(const EntangledAmplitudes& state)
{
    const std::size_t n = state.size();
    if (n > 3)
        throw UnsupportedDimension("diffusion mapping supports 2 or 3 amplitudes");

    std::vector<double> positions;
    positions.reserve(n - 1);
    double cumulative = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        cumulative += std::norm(state.amplitudes()[i]);
        positions.push_back(std::clamp(cumulative, 0.0, 1.0));
    }
    return DiffusionCoordinates(std::move(positions));
}

EntangledAmplitudes from_diffusion(const DiffusionCoordinates& coords,
                                   std::vector<std::string> labels)
{
    std::vector<Complex> amplitudes;
    for (double len : coords.interval_lengths())
        amplitudes.emplace_back(std::sqrt(std::max(len, 0.0)), 0.0);
    return EntangledAmplitudes(std::move(amplitudes), std::move(labels));
}

std::vector<int> binary_expansion(double x, int n_digits)
{
    if (!(x >= 0.0 && x <= 1.0))
        throw DomainError("binary expansion requires x in [0, 1]");
    if (n_digits < 1)
        throw InvalidArgument("binary expansion requires at least one digit");

    std::vector<int> digits(static_cast<std::size_t>(n_digits), 1);
    if (x == 1.0)
        return digits;
    // Doubling and subtracting one are exact in binary floating point.
    double rest = x;
    for (auto& d : digits) {
        rest *= 2.0;
        d = rest >= 1.0 ? 1 : 0;
        rest -= d;
    }
    return digits;
}

} // namespace collapsim

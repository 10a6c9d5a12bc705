#include "harmonium/music.hpp"

#include <cmath>
#include <stdexcept>

namespace harmonium {

namespace {
constexpr double kReferenceFreqHz = 440.0;  // A4
constexpr double kReferencePitch = 69.0;
constexpr double kSemitonesPerOctave = 12.0;
}  // namespace

double freq_to_pitch(double f_hz) {
    if (!(f_hz > 0.0)) throw std::invalid_argument("freq_to_pitch: frequency must be positive");
    return kReferencePitch + kSemitonesPerOctave * std::log2(f_hz / kReferenceFreqHz);
}

double pitch_to_freq(double pitch) {
    return kReferenceFreqHz * std::exp2((pitch - kReferencePitch) / kSemitonesPerOctave);
}

double wavelength(double f_hz, double temperature_c) {
    if (!(f_hz > 0.0)) throw std::invalid_argument("wavelength: frequency must be positive");
    const double speed = 331.0 + 0.6 * temperature_c;
    if (!(speed > 0.0))
        throw std::invalid_argument("wavelength: speed of sound must be positive");
    return speed / f_hz;
}

}  // namespace harmonium

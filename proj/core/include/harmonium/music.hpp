#pragma once

namespace harmonium {

// Linear pitch space mappings (MIDI numbering, A4 = 440 Hz = pitch 69, one
// octave = 12 units) and the acoustic wavelength of a note in air. Pitch
// numbers are real-valued; quantization to semitones is the caller's concern.

// 69 + 12 log2(f / 440). Throws when f_hz <= 0.
double freq_to_pitch(double f_hz);

// 440 * 2^((p - 69) / 12). Exact inverse of freq_to_pitch.
double pitch_to_freq(double pitch);

// Wavelength in meters: (331 + 0.6 * temperature_c) / f_hz, using the dry-air
// speed of sound near 0 C. Throws when f_hz <= 0 or the speed is not positive.
double wavelength(double f_hz, double temperature_c);

}  // namespace harmonium

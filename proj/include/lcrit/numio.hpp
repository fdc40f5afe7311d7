#pragma once

// Text round-tripping helpers shared by the CLI and the report writers.
//
// All floating-point output uses "%.17g": 17 significant digits round-trip
// an IEEE double exactly, and the format is locale-independent here because
// every emitter in this library writes through these helpers ('.' decimal
// separator always).

#include <complex>
#include <cstdio>
#include <string>

namespace lcrit {

using Cplx = std::complex<double>;

inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return std::string(buf);
}

// "a+bi" / "a-bi"; pure-real and pure-imaginary values shorten to "a" / "bi".
inline std::string format_complex(const Cplx& z) {
    if (z.imag() == 0.0) return format_double(z.real());
    std::string im = format_double(z.imag());
    if (z.real() == 0.0) return im + "i";
    if (z.imag() >= 0.0) return format_double(z.real()) + "+" + im + "i";
    return format_double(z.real()) + im + "i";
}

// Parses "a", "bi", "a+bi", "a-bi", with "i", "+i", "-i" understood as
// coefficient 1.  Whitespace is not allowed.  Returns false on malformed
// input instead of throwing so the CLI can map failures to usage errors.
bool parse_complex(const std::string& text, Cplx& out);

}  // namespace lcrit

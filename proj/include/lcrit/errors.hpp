#pragma once

#include <stdexcept>
#include <string>

namespace lcrit {

// Domain violations: arguments outside an operation's documented domain
// (bad modulus, non-coprime residue where one is required, disc outside the
// admissible half-strip, and so on).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Evaluation at (or too close to) a pole of the requested function.
class pole_error : public domain_error {
public:
    explicit pole_error(const std::string& what) : domain_error(what) {}
};

// An internal cross-check failed: a quantity that must be real came out with a
// large imaginary part, a contour integral refused to settle on an integer,
// two routes to the same value disagree, etc.  CLI maps this to exit code 3.
class numeric_consistency_error : public std::runtime_error {
public:
    explicit numeric_consistency_error(const std::string& what)
        : std::runtime_error(what) {}
};

// A zero (or near-zero) of the integrand sits on a contour used for
// argument-principle counting, making the winding number unreliable.
class boundary_zero_error : public numeric_consistency_error {
public:
    explicit boundary_zero_error(const std::string& what)
        : numeric_consistency_error(what) {}
};

// Adaptive refinement hit its cap without meeting the phase-step criterion.
class resolution_error : public numeric_consistency_error {
public:
    explicit resolution_error(const std::string& what)
        : numeric_consistency_error(what) {}
};

// A zero atlas failed its completeness cross-validation (scan count vs.
// rectangle count), so a downstream consumer refused to use it.
class incomplete_atlas_error : public numeric_consistency_error {
public:
    explicit incomplete_atlas_error(const std::string& what)
        : numeric_consistency_error(what) {}
};

// A ratio's denominator is numerically indistinguishable from zero at the
// requested point, so the ratio cannot be reported.
class near_zero_error : public numeric_consistency_error {
public:
    explicit near_zero_error(const std::string& what)
        : numeric_consistency_error(what) {}
};

}  // namespace lcrit

#pragma once

namespace majeur {

// Process-wide numeric tolerances. `slack` is the additive slack applied to
// majorization partial sums and to every verification check; the environment
// variable MAJEUR_TOLERANCE overrides it once, when the singleton is first
// touched.
struct Tolerances {
    double unitarity = 1e-10;
    double hermiticity = 1e-10;
    double normalization = 1e-9;
    double slack = 1e-9;
};

Tolerances& tolerances();

} // namespace majeur

#include "tolerances.hpp"

#include <cstdlib>

namespace majeur {

namespace {

Tolerances make_defaults() {
    Tolerances t;
    if (const char* env = std::getenv("MAJEUR_TOLERANCE")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0) {
            t.slack = v;
        }
    }
    return t;
}

} // namespace

Tolerances& tolerances() {
    static Tolerances instance = make_defaults();
    return instance;
}

} // namespace majeur

#pragma once

#include <stdexcept>
#include <string>

namespace polya5 {

/* Exact arithmetic would exceed the supported magnitude (or a method is
 * only proven correct below some bound). */
struct magnitude_error : std::overflow_error {
    using std::overflow_error::overflow_error;
};

/* A composite cofactor survived every splitting strategy.  Callers must
 * surface this; no partial or guessed factorization is ever returned. */
struct factorization_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* An identity that is a theorem for the inputs in question failed to
 * hold.  Signals a bug, never a domain case. */
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

/* The quartic is the square of an integer quadratic, so Y^2 = f(X) has
 * infinitely many integral points and no Masser bound exists. */
struct perfect_square_error : std::domain_error {
    using std::domain_error::domain_error;
};

/* Hensel lifting hit a root with vanishing derivative where enumeration
 * is no longer feasible. */
struct lifting_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace polya5

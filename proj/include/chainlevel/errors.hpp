#pragma once

#include <stdexcept>
#include <string>

namespace chainlevel {

/// Base class for all domain errors thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct cycle_error : error {
    using error::error;
};
struct unknown_element : error {
    using error::error;
};
struct empty_poset : error {
    using error::error;
};
struct poset_too_large : error {
    using error::error;
};
struct not_comparable : error {
    using error::error;
};
struct not_in_ideal : error {
    using error::error;
};
struct not_in_power : error {
    using error::error;
};
struct not_in_ring : error {
    using error::error;
};
struct degree_too_small : error {
    using error::error;
};
struct not_reduced : error {
    using error::error;
};
struct not_generator : error {
    using error::error;
};
struct at_minimal_degree : error {
    using error::error;
};
struct box_too_large : error {
    using error::error;
};
struct graph_too_large : error {
    using error::error;
};
struct param_out_of_range : error {
    using error::error;
};

// Signals a violated internal invariant of the generator construction.
// Seeing this means a bug upstream, not bad user input.
struct construction_invariant_violated : error {
    using error::error;
};

} // namespace chainlevel

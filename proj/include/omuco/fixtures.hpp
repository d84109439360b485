#pragma once

#include "omuco/core.hpp"

namespace omuco::fixtures {

// Small hand-checkable instances used by tests, selftest and the bindings.

/// Six items in three categories (3,3,1,2,3,1), maximized (alpha = -1), with
/// f_i = i minimized and exactly three items selected.
Instance six_item_example();

/// Four items, senses (1, 1, -1); a single item dominates a pair.
Instance instance_a();

/// Four items, senses (1, 1, -1); every selection but {3, 4} is efficient.
Instance instance_b();

}  // namespace omuco::fixtures

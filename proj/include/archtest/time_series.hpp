#pragma once

#include <vector>

namespace archtest {

/// Ordered real-valued observations; the vector index is time.
using TimeSeries = std::vector<double>;

}  // namespace archtest

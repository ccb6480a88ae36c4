#pragma once

#include "dea/dataset.hpp"

namespace dea::fixtures {

/// The nine-DMU, two-input, unit-output benchmark (DMU1..DMU9) used
/// throughout the tests and the README walkthrough.
DMUDataset nine_dmu_example();

/// True when `ds` carries exactly the nine-DMU benchmark data, ignoring names
/// and labels.
bool is_nine_dmu_example(const DMUDataset& ds);

}  // namespace dea::fixtures

#include "dea/fixtures.hpp"

namespace dea::fixtures {

DMUDataset nine_dmu_example() {
  return DMUDataset(
      {"DMU1", "DMU2", "DMU3", "DMU4", "DMU5", "DMU6", "DMU7", "DMU8", "DMU9"},
      {"x1", "x2"}, {"y"},
      {{1, 2, 4, 6, 3, 3, 7, 5, 9},
       {7, 5, 3, 2, 4, 8, 4, 3, 3}},
      {{1, 1, 1, 1, 1, 1, 1, 1, 1}});
}

bool is_nine_dmu_example(const DMUDataset& ds) {
  static const DMUDataset reference = nine_dmu_example();
  if (ds.num_dmus() != reference.num_dmus() ||
      ds.num_inputs() != reference.num_inputs() ||
      ds.num_outputs() != reference.num_outputs()) {
    return false;
  }
  for (std::size_t j = 0; j < ds.num_dmus(); ++j) {
    if (ds.column(j) != reference.column(j)) return false;
  }
  return true;
}

}  // namespace dea::fixtures

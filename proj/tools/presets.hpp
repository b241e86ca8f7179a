#pragma once

#include <vector>

namespace descm::cli {

// Parameter sets of the published benchmark tables, with the reported
// values kept alongside for comparison.

struct SpectrumTable {
  int id;
  std::vector<double> coefficients;
  std::vector<int> half_widths;
  // reference[row][level], levels 0..2
  std::vector<std::vector<double>> reference;
};

struct GroundStateRow {
  std::vector<double> coefficients;
  int reference_half_width;
  double reference_energy;
  double reference_epsilon;
};

struct GroundStateTable {
  int id;
  std::vector<GroundStateRow> rows;
};

const SpectrumTable& spectrum_table(int id);       // 1 or 2
const GroundStateTable& ground_state_table(int id);  // 3..6

}  // namespace descm::cli

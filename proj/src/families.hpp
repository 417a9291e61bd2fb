#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fqv/harmonic.hpp"
#include "fqv/sweep.hpp"

namespace fqv::detail {

/// One parameter cell. Unused coordinates are zero.
struct Cell {
  std::int64_t x = 0;
  std::int64_t y = 0;
};

struct SweepContext {
  const SweepConfig& config;
  const HarmonicTable& harmonics;
  const StirlingTable& stirling;
};

struct Family {
  FamilyInfo info;
  std::vector<std::string> cell_params;  // names of x, y for error records
  // Largest n a cell reads from the shared tables; empty if it reads none.
  std::function<int(const Cell&)> extent;
  std::function<std::vector<Cell>(const SweepConfig&)> cells;
  std::function<std::vector<SweepRecord>(const Cell&, const SweepContext&)> run;
};

const std::vector<Family>& registry();
const Family* find_family(const std::string& id);

}  // namespace fqv::detail

#pragma once

#include <span>

#include "dav/group.hpp"

namespace dav {

// One row of the constants table for the non-abelian groups of order < 32:
// golden values for the small/large Davenport constants, the Noether number
// beta, and how beta was obtained.
struct TableRow {
  GapId id;
  const char* display;
  int d;
  int beta;
  int big_d;
  const char* source;
};

// All 45 rows, ordered by GAP id.
std::span<const TableRow> table_rows();

const TableRow* find_row(GapId id);

// Builds the group for a table row; throws UnknownGroup for ids outside the
// table. The result carries the row's display name and gap id.
Group registry(GapId id);

}  // namespace dav

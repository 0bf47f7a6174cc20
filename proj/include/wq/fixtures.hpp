#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wq/table_io.hpp"

namespace wq {

/// One bundled Cayley table with its designated generators, defining
/// relation, and the order/dimension it is documented to have.
struct FixtureRecord {
  std::string id;
  TableFile file;
  int claimed_order = 0;
  int claimed_dimension = 0;
  std::string note;  // provenance quirks worth surfacing in reports
};

/// Bundled ids, in canonical order: t4, table1, table2, table3_5, table6,
/// table7, table8, table9, table10.
const std::vector<std::string>& fixture_ids();

bool is_fixture_id(const std::string& id);

/// Loads a bundled fixture from the data directory.  Throws
/// std::invalid_argument for unknown ids and TableFormatError on bad assets.
FixtureRecord load_fixture(const std::string& id);

/// Directory the fixture assets are read from: $WQ_FIXTURE_DIR when set,
/// otherwise the compiled-in default.
std::string fixture_dir();

/// FNV-1a over the raw asset bytes; pinned in tests to catch accidental
/// edits of the data files.
std::uint64_t fixture_checksum(const std::string& id);

}  // namespace wq

#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "wq/cayley_table.hpp"
#include "wq/word.hpp"

namespace wq {

/// A table plus the designations carried by its file: generators, and an
/// optional defining relation over the letters {f, g}.
struct TableFile {
  CayleyTable table;
  GeneratorContext ctx;
  std::optional<Word> relation;
  bool had_labels = false;
};

class TableFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Line-based "wqt" format:
///
///   # wqt v1
///   order: 5
///   labels: e f ef fe fef
///   e: 0
///   f: 1
///   relation: ((f g) f)
///   table:
///   0 2 1 4 3
///   ...
///
/// `labels` and `relation` are optional; `order`, `e`, `f`, `table` are
/// required.  Entries are 0-based.  JSON input (first non-space byte '{')
/// with the same fields is accepted as well.
TableFile read_table(std::istream& in, const std::string& origin = "<stream>");
TableFile read_table_file(const std::string& path);

/// Canonical text rendering; rereading it yields an identical table.
void write_table(std::ostream& out, const TableFile& tf);
std::string table_to_text(const TableFile& tf);

/// Mirrored JSON rendering of the same fields.
std::string table_to_json(const TableFile& tf);

}  // namespace wq

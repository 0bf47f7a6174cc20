#include "wq/table_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wq {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

TableFile from_parts(std::optional<int> order, std::vector<std::string> labels,
                     std::optional<int> e, std::optional<int> f,
                     std::optional<std::string> relation,
                     std::vector<std::vector<int>> rows,
                     const std::string& origin) {
  auto fail = [&](const std::string& msg) -> void {
    throw TableFormatError(origin + ": " + msg);
  };
  if (!order) fail("missing 'order'");
  if (!e) fail("missing 'e'");
  if (!f) fail("missing 'f'");
  if (static_cast<int>(rows.size()) != *order)
    fail("expected " + std::to_string(*order) + " table rows, got " +
         std::to_string(rows.size()));
  std::vector<int> cells;
  cells.reserve(static_cast<std::size_t>(*order) * *order);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != *order)
      fail("table row needs " + std::to_string(*order) + " entries");
    cells.insert(cells.end(), row.begin(), row.end());
  }
  bool had_labels = !labels.empty();
  TableFile tf{CayleyTable(*order, std::move(cells), std::move(labels)),
               GeneratorContext{}, std::nullopt, had_labels};
  tf.ctx = GeneratorContext::with(tf.table, *e, *f);
  if (relation) tf.relation = Word::parse(*relation);
  return tf;
}

TableFile read_json(std::istream& in, const std::string& origin) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw TableFormatError(origin + ": " + ex.what());
  }
  std::optional<int> order, e, f;
  std::optional<std::string> relation;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> rows;
  if (j.contains("order")) order = j["order"].get<int>();
  if (j.contains("e")) e = j["e"].get<int>();
  if (j.contains("f")) f = j["f"].get<int>();
  if (j.contains("relation") && !j["relation"].is_null())
    relation = j["relation"].get<std::string>();
  if (j.contains("labels") && !j["labels"].is_null())
    labels = j["labels"].get<std::vector<std::string>>();
  if (j.contains("table")) rows = j["table"].get<std::vector<std::vector<int>>>();
  return from_parts(order, std::move(labels), e, f, std::move(relation),
                    std::move(rows), origin);
}

}  // namespace

TableFile read_table(std::istream& in, const std::string& origin) {
  // Sniff JSON input.
  int c = in.peek();
  while (c == ' ' || c == '\n' || c == '\t' || c == '\r') {
    in.get();
    c = in.peek();
  }
  if (c == '{') return read_json(in, origin);

  std::optional<int> order, e, f;
  std::optional<std::string> relation;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> rows;
  std::string line;
  int lineno = 0;
  bool in_table = false;
  auto fail = [&](const std::string& msg) -> void {
    throw TableFormatError(origin + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    if (in_table) {
      std::istringstream row(s);
      std::vector<int> vals;
      int v;
      while (row >> v) vals.push_back(v);
      if (!row.eof()) fail("bad table entry");
      rows.push_back(std::move(vals));
      continue;
    }
    auto colon = s.find(':');
    if (colon == std::string::npos) fail("expected 'key: value'");
    std::string key = trim(s.substr(0, colon));
    std::string value = trim(s.substr(colon + 1));
    if (key == "order") {
      order = std::stoi(value);
    } else if (key == "labels") {
      std::istringstream ls(value);
      std::string tok;
      while (ls >> tok) labels.push_back(tok);
    } else if (key == "e") {
      e = std::stoi(value);
    } else if (key == "f") {
      f = std::stoi(value);
    } else if (key == "relation") {
      relation = value;
    } else if (key == "table") {
      if (!value.empty()) fail("'table:' takes no inline value");
      in_table = true;
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  lineno = 0;
  return from_parts(order, std::move(labels), e, f, std::move(relation),
                    std::move(rows), origin);
}

TableFile read_table_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TableFormatError("cannot open " + path);
  return read_table(in, path);
}

void write_table(std::ostream& out, const TableFile& tf) {
  const CayleyTable& t = tf.table;
  out << "# wqt v1\n";
  out << "order: " << t.order() << "\n";
  if (tf.had_labels) {
    out << "labels:";
    for (const auto& l : t.labels()) out << " " << l;
    out << "\n";
  }
  out << "e: " << tf.ctx.e << "\n";
  out << "f: " << tf.ctx.f << "\n";
  if (tf.relation) out << "relation: " << tf.relation->render() << "\n";
  out << "table:\n";
  for (int x = 0; x < t.order(); ++x) {
    for (int y = 0; y < t.order(); ++y) {
      if (y) out << " ";
      out << t.at(x, y);
    }
    out << "\n";
  }
}

std::string table_to_text(const TableFile& tf) {
  std::ostringstream os;
  write_table(os, tf);
  return os.str();
}

std::string table_to_json(const TableFile& tf) {
  nlohmann::json j;
  j["order"] = tf.table.order();
  if (tf.had_labels) j["labels"] = tf.table.labels();
  j["e"] = tf.ctx.e;
  j["f"] = tf.ctx.f;
  if (tf.relation) j["relation"] = tf.relation->render();
  std::vector<std::vector<int>> rows;
  for (int x = 0; x < tf.table.order(); ++x) {
    std::vector<int> row;
    for (int y = 0; y < tf.table.order(); ++y) row.push_back(tf.table.at(x, y));
    rows.push_back(std::move(row));
  }
  j["table"] = rows;
  return j.dump(2);
}

}  // namespace wq

#include "wq/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef WQ_FIXTURE_DIR
#define WQ_FIXTURE_DIR "data/fixtures"
#endif

namespace wq {

namespace {

struct FixtureMeta {
  const char* id;
  int order;
  int dimension;
  const char* note;
};

// Claimed values are part of the bundle's documentation; the verification
// battery re-derives all of them from the table itself.
constexpr FixtureMeta kFixtures[] = {
    {"t4", 4, 2,
     "e = f.ef; the unique anti-rectangular one-step table (xy.x = y)"},
    {"table1", 5, 3, "e = fef.f"},
    {"table2", 11, 3, "e = f.fef; f is element 11 (= e.efe)"},
    {"table3_5", 29, 4,
     "one table published as three column blocks; e = f(f.fef)"},
    {"table6", 16, 4,
     "e = f(f.fe); f is element 16 (= e(e.ef)), inferred from f.f = f, "
     "f.e = fe, f.ef = fef"},
    {"table7", 9, 4, "e = (f.fef)(ef)"},
    {"table8", 11, 4, "e = (fef.f)(ef)"},
    {"table9", 19, 4, "e = f(fe.ef)"},
    {"table10", 19, 4, "e = f(ef.fe); not isomorphic to table9"},
};

const FixtureMeta* find_meta(const std::string& id) {
  for (const auto& m : kFixtures)
    if (id == m.id) return &m;
  return nullptr;
}

std::string asset_path(const std::string& id) {
  return fixture_dir() + "/" + id + ".wqt";
}

}  // namespace

const std::vector<std::string>& fixture_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& m : kFixtures) v.push_back(m.id);
    return v;
  }();
  return ids;
}

bool is_fixture_id(const std::string& id) { return find_meta(id) != nullptr; }

std::string fixture_dir() {
  if (const char* env = std::getenv("WQ_FIXTURE_DIR")) return env;
  return WQ_FIXTURE_DIR;
}

FixtureRecord load_fixture(const std::string& id) {
  const FixtureMeta* meta = find_meta(id);
  if (!meta) throw std::invalid_argument("unknown fixture id: " + id);
  FixtureRecord rec{id, read_table_file(asset_path(id)), meta->order,
                    meta->dimension, meta->note};
  if (rec.file.table.order() != meta->order)
    throw TableFormatError(asset_path(id) + ": order does not match bundle");
  return rec;
}

std::uint64_t fixture_checksum(const std::string& id) {
  std::ifstream in(asset_path(id), std::ios::binary);
  if (!in) throw TableFormatError("cannot open " + asset_path(id));
  std::uint64_t h = 0xcbf29ce484222325ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace wq

#include "knotord/table.hpp"

#include <fstream>
#include <sstream>

#include "knotord/errors.hpp"

namespace knotord {

std::vector<KnotTableRow> ingest_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string(), 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_knot_table(buf.str());
}

ExternalData load_external_data(const std::filesystem::path& path) { return ExternalData(ingest_table(path)); }

}  // namespace knotord

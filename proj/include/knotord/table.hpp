#pragma once

#include <filesystem>
#include <vector>

#include "knotord/verifier.hpp"

namespace knotord {

// Reads a `name,alexander,bridge,braid` CSV file. Rows whose polynomial is not
// of L-space form are kept with is_lspace_form = false. Throws DataError with
// the line number, or with row 0 when the file cannot be read.
std::vector<KnotTableRow> ingest_table(const std::filesystem::path& path);

ExternalData load_external_data(const std::filesystem::path& path);

}  // namespace knotord

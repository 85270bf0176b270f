#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tangletwist/errors.hpp"
#include "tangletwist/pd.hpp"

namespace tangletwist {

// Shipped diagrams. The data directory is resolved from TANGLETWIST_DATA at
// runtime, falling back to the build-time default.
struct CatalogEntry {
  std::string key;        // stable lookup key
  std::string file;       // file name under the data directory
  std::string summary;    // one-line description for `catalog`
};

inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"unknot", "unknot.pd", "0-crossing unknot diagram"},
      {"trefoil", "trefoil.pd", "left-handed trefoil, 3 crossings, all negative"},
      {"trefoil-right", "trefoil_right.pd", "right-handed trefoil, 3 crossings, all positive"},
      {"figure8", "figure8.pd", "figure-eight knot, 4 crossings"},
      {"pretzel-2-2-m2-m2", "pretzel_2_2_m2_m2.pd", "pretzel link D(2,2;-2,-2), 8 crossings, adequate"},
      {"10_152", "10_152.pd", "knot 10_152 (positive 3-braid closure), 10 crossings"},
  };
  return entries;
}

inline std::string data_dir() {
  if (const char* env = std::getenv("TANGLETWIST_DATA")) return env;
#ifdef TANGLETWIST_DATA_DIR
  return TANGLETWIST_DATA_DIR;
#else
  return "data";
#endif
}

inline Diagram load_pd_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw parse_error("cannot open PD file: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return parse_pd(ss.str());
}

inline Diagram catalog_diagram(const std::string& key) {
  for (const auto& e : catalog_entries())
    if (e.key == key) return load_pd_file(data_dir() + "/" + e.file);
  throw parse_error("no catalog entry named '" + key + "'");
}

}  // namespace tangletwist

#pragma once

#include "qadv/core.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace qadv::io {

// FNV-1a over the canonical config string; printed in every output header.
inline uint64_t config_hash(const std::string& config) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : config) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// RFC-4180-style table with one leading '#' header line carrying the full
// replay information: subcommand config, its hash, the seed and the RNG id.
class CsvWriter {
 public:
  CsvWriter(const std::string& out_path, const std::string& config, uint64_t seed) {
    if (!out_path.empty() && out_path != "-") {
      file_ = std::make_unique<std::ofstream>(out_path, std::ios::binary);
      if (!*file_) throw std::runtime_error("cannot open output file: " + out_path);
    }
    stream() << "# config=" << config << " hash=" << std::hex << config_hash(config) << std::dec
             << " seed=" << seed << " rng=mt19937_64+splitmix64\n";
  }

  void row(const std::vector<std::string>& cells) {
    std::ostream& os = stream();
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ",";
      os << escape(cells[i]);
    }
    os << "\n";
  }

 private:
  static std::string escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += "\"\"";
      else out += c;
    }
    out += "\"";
    return out;
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  std::unique_ptr<std::ofstream> file_;
};

inline std::string fmt(double v, int prec = 9) {
  std::ostringstream os;
  os.precision(prec);
  os << v;
  return os.str();
}

}  // namespace qadv::io

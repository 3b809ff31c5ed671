#pragma once

// Minimal CSV emission: comma separated, dot decimal, header row, one record
// per line. Doubles print as the shortest decimal that round-trips, so
// identical inputs give byte-identical files.

#include <charconv>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace aee::csv {

inline std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, r.ptr);
}

class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}

  void row(const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
  }

 private:
  std::ostream& out_;
};

inline std::string cell(double v) { return format_double(v); }
inline std::string cell(int v) { return std::to_string(v); }
inline std::string cell(std::string_view v) { return std::string(v); }

}  // namespace aee::csv

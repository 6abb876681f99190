#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace dtomo {

inline constexpr std::string_view kVersion = "0.1.0";

/// Up to 15 significant digits, shortest form; "nan", "inf", "-inf".
std::string format_number(double v);

/// `# dtomo <version> command=<cmd> config_hash=<hex> seed=<seed>`
void write_header_comment(std::ostream& os, std::string_view command, std::uint64_t config_hash,
                          std::uint64_t seed);

/// Comma-joined formatted fields.
class CsvRow {
 public:
  CsvRow& operator<<(double v);
  CsvRow& operator<<(int v);
  CsvRow& operator<<(std::int64_t v);
  CsvRow& operator<<(std::string_view s);
  const std::string& str() const { return line_; }

 private:
  void sep();
  std::string line_;
  bool first_ = true;
};

std::ostream& operator<<(std::ostream& os, const CsvRow& row);

}  // namespace dtomo

#include "dtomo/runner/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace dtomo {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 15);
  return std::string(buf, res.ptr);
}

void write_header_comment(std::ostream& os, std::string_view command, std::uint64_t config_hash,
                          std::uint64_t seed) {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(config_hash));
  os << "# dtomo " << kVersion << " command=" << command << " config_hash=" << hex << " seed=" << seed
     << '\n';
}

void CsvRow::sep() {
  if (!first_) line_ += ',';
  first_ = false;
}

CsvRow& CsvRow::operator<<(double v) {
  sep();
  line_ += format_number(v);
  return *this;
}

CsvRow& CsvRow::operator<<(int v) {
  sep();
  line_ += std::to_string(v);
  return *this;
}

CsvRow& CsvRow::operator<<(std::int64_t v) {
  sep();
  line_ += std::to_string(v);
  return *this;
}

CsvRow& CsvRow::operator<<(std::string_view s) {
  sep();
  line_ += s;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const CsvRow& row) { return os << row.str() << '\n'; }

}  // namespace dtomo

#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>

namespace lcs::csv {

/// Shortest round-trip is not required; fixed 17 significant digits keeps dumps diffable.
std::string format(double x);

/// Writes a comma-separated row of numbers terminated by a newline.
void write_row(std::ostream& os, std::initializer_list<double> values);
void write_header(std::ostream& os, std::initializer_list<std::string_view> names);

/// Output file that only appears at its final path once commit() succeeds;
/// destroyed uncommitted, it leaves nothing behind.
class AtomicFile {
 public:
  explicit AtomicFile(std::filesystem::path target);
  ~AtomicFile();
  AtomicFile(const AtomicFile&) = delete;
  AtomicFile& operator=(const AtomicFile&) = delete;

  std::ostream& stream() { return out_; }
  void commit();

 private:
  std::filesystem::path target_, temp_;
  std::ofstream out_;
  bool committed_ = false;
};

}  // namespace lcs::csv

#include "lcs/csv.hpp"

#include <cstdio>
#include <system_error>

#include "lcs/types.hpp"

namespace lcs::csv {

std::string format(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_row(std::ostream& os, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) os << ',';
    os << format(v);
    first = false;
  }
  os << '\n';
}

void write_header(std::ostream& os, std::initializer_list<std::string_view> names) {
  bool first = true;
  for (auto n : names) {
    if (!first) os << ',';
    os << n;
    first = false;
  }
  os << '\n';
}

AtomicFile::AtomicFile(std::filesystem::path target)
    : target_(std::move(target)), temp_(target_) {
  temp_ += ".tmp";
  out_.open(temp_, std::ios::out | std::ios::trunc);
  if (!out_) throw Error("cannot open " + temp_.string() + " for writing");
}

AtomicFile::~AtomicFile() {
  if (!committed_) {
    out_.close();
    std::error_code ec;
    std::filesystem::remove(temp_, ec);
  }
}

void AtomicFile::commit() {
  out_.flush();
  if (!out_) throw Error("write to " + temp_.string() + " failed");
  out_.close();
  std::filesystem::rename(temp_, target_);
  committed_ = true;
}

}  // namespace lcs::csv

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace factlab::cli {

using Row = nlohmann::ordered_json;

enum class Format { kCsv, kJson };

/// Emits rows with a frozen column list.
///
/// CSV streams a header and then one line per row. JSON buffers the rows so
/// the leading meta line can carry the wall time, then writes one object per
/// line.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, Format format, std::vector<std::string> columns,
               nlohmann::ordered_json meta, bool wall_time);

  /// Throws std::logic_error if row keys differ from the column list.
  void write(const Row& row);
  /// Flushes buffered output. elapsed_s is recorded only with wall time on.
  void finish(double elapsed_s);

  static std::string csv_cell(const nlohmann::ordered_json& v);

 private:
  std::ostream& out_;
  Format format_;
  std::vector<std::string> columns_;
  nlohmann::ordered_json meta_;
  bool wall_time_;
  std::vector<Row> buffered_;
  bool header_done_ = false;
};

}  // namespace factlab::cli

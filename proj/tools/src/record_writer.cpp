#include "record_writer.hpp"

#include <stdexcept>

namespace factlab::cli {

RecordWriter::RecordWriter(std::ostream& out, Format format,
                           std::vector<std::string> columns,
                           nlohmann::ordered_json meta, bool wall_time)
    : out_(out),
      format_(format),
      columns_(std::move(columns)),
      meta_(std::move(meta)),
      wall_time_(wall_time) {}

std::string RecordWriter::csv_cell(const nlohmann::ordered_json& v) {
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    return quoted + '"';
  }
  if (v.is_null()) return "";
  return v.dump();
}

void RecordWriter::write(const Row& row) {
  if (row.size() != columns_.size())
    throw std::logic_error("row width does not match schema");
  std::size_t i = 0;
  for (auto it = row.begin(); it != row.end(); ++it, ++i)
    if (it.key() != columns_[i])
      throw std::logic_error("row column " + it.key() + " out of schema");

  if (format_ == Format::kJson) {
    buffered_.push_back(row);
    return;
  }
  if (!header_done_) {
    for (std::size_t c = 0; c < columns_.size(); ++c)
      out_ << (c ? "," : "") << columns_[c];
    out_ << '\n';
    header_done_ = true;
  }
  i = 0;
  for (auto it = row.begin(); it != row.end(); ++it, ++i)
    out_ << (i ? "," : "") << csv_cell(*it);
  out_ << '\n';
}

void RecordWriter::finish(double elapsed_s) {
  if (format_ == Format::kCsv) {
    if (!header_done_) {
      for (std::size_t c = 0; c < columns_.size(); ++c)
        out_ << (c ? "," : "") << columns_[c];
      out_ << '\n';
    }
    out_.flush();
    return;
  }
  nlohmann::ordered_json meta = meta_;
  meta["columns"] = columns_;
  meta["rows"] = buffered_.size();
  if (wall_time_) meta["wall_time_s"] = elapsed_s;
  out_ << nlohmann::ordered_json{{"meta", meta}}.dump() << '\n';
  for (const auto& row : buffered_) out_ << row.dump() << '\n';
  out_.flush();
}

}  // namespace factlab::cli

#include "mecdsa/kvdoc.hpp"

#include "mecdsa/errors.hpp"

#include <algorithm>
#include <cctype>

namespace mecdsa {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

KvDocument KvDocument::parse(std::string_view text) {
  KvDocument doc;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw FormatError("expected 'key = value'", line_no);
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw FormatError("empty key", line_no);
    if (doc.contains(key)) throw FormatError("duplicate key '" + key + "'", line_no);
    doc.entries_.emplace_back(key, value);
  }
  return doc;
}

void KvDocument::set(std::string key, std::string value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries_.emplace_back(std::move(key), std::move(value));
}

bool KvDocument::contains(std::string_view key) const { return find(key).has_value(); }

std::optional<std::string> KvDocument::find(std::string_view key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  return std::nullopt;
}

const std::string& KvDocument::require(std::string_view key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  throw FormatError("missing key '" + std::string(key) + "'");
}

std::string KvDocument::serialize(std::string_view header_comment) const {
  std::string out;
  std::string_view rest = header_comment;
  while (!rest.empty()) {
    const std::size_t eol = rest.find('\n');
    out += "# ";
    out += rest.substr(0, eol);
    out += '\n';
    rest.remove_prefix(eol == std::string_view::npos ? rest.size() : eol + 1);
  }
  for (const auto& [k, v] : entries_) out += k + " = " + v + "\n";
  return out;
}

std::vector<std::string> split_list(std::string_view value, char sep) {
  std::vector<std::string> items;
  if (trim(value).empty()) return items;
  while (true) {
    const std::size_t pos = value.find(sep);
    items.emplace_back(trim(value.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    value.remove_prefix(pos + 1);
  }
  return items;
}

std::string join_list(const std::vector<std::string>& items, char sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace mecdsa

#include "bds/shell/golden.hpp"

#include <stdexcept>

#include "golden_data.hpp"

namespace bds::shell {

namespace {

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    out.emplace_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) return out;
    start = tab + 1;
  }
}

}  // namespace

bool GoldenRow::has(const std::string& col) const {
  auto it = cells.find(col);
  return it != cells.end() && it->second != "-" && !it->second.empty();
}

std::vector<GoldenRow> parse_golden(std::string_view text) {
  std::vector<GoldenRow> rows;
  bool header = true;
  std::size_t lineno = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> f = split_tabs(line);
    if (header) {
      if (f != kGoldenColumns) throw std::invalid_argument("golden corpus: unexpected header");
      header = false;
      continue;
    }
    if (f.size() != kGoldenColumns.size())
      throw std::invalid_argument("golden corpus: wrong column count on line " + std::to_string(lineno));
    GoldenRow r;
    for (std::size_t i = 0; i < f.size(); ++i) r.cells[kGoldenColumns[i]] = f[i];
    rows.push_back(std::move(r));
  }
  if (header) throw std::invalid_argument("golden corpus: missing header");
  return rows;
}

std::string_view embedded_golden_text() { return kGoldenTsv; }

const std::vector<GoldenRow>& embedded_golden() {
  static const std::vector<GoldenRow> rows = parse_golden(kGoldenTsv);
  return rows;
}

}  // namespace bds::shell

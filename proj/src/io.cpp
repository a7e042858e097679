#include "polyalg/io.hpp"

#include <json.hpp>
#include <sstream>

namespace polyalg {

namespace {

Polyomino from_cells(std::vector<Cell> cells, bool check_duplicates) {
  if (cells.empty()) fail(Errc::empty_input, "no cells in input");
  if (check_duplicates) {
    auto sorted = cells;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(Errc::duplicate_cell, "duplicate cell in input");
  }
  return Polyomino(std::move(cells)).translated_to_origin();
}

Polyomino parse_grid(const std::string& text) {
  std::vector<std::string> rows;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) rows.push_back(line);
  }
  if (rows.empty()) fail(Errc::empty_input, "empty grid");
  std::vector<Cell> cells;
  int nrows = static_cast<int>(rows.size());
  for (int k = 0; k < nrows; ++k) {
    for (int x = 0; x < static_cast<int>(rows[k].size()); ++x) {
      char ch = rows[k][x];
      if (ch == '#')
        cells.push_back({x, nrows - 1 - k});
      else if (ch != '.')
        fail(Errc::syntax_error, "unexpected character '" + std::string(1, ch) + "' at line " +
                                     std::to_string(k + 1) + ", column " + std::to_string(x + 1));
    }
  }
  return from_cells(std::move(cells), false);
}

Polyomino parse_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::syntax_error, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("cells") || !doc["cells"].is_array())
    fail(Errc::syntax_error, "expected {\"cells\": [[i,j], ...]}");
  std::vector<Cell> cells;
  for (const auto& item : doc["cells"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      fail(Errc::syntax_error, "each cell must be an [i, j] pair of integers");
    cells.push_back({item[0].get<int>(), item[1].get<int>()});
  }
  return from_cells(std::move(cells), true);
}

}  // namespace

Polyomino parse_input(const std::string& text) {
  for (char ch : text) {
    if (ch == ' ' || ch == '\n' || ch == '\r' || ch == '\t') continue;
    if (ch == '{' || ch == '[') return parse_json(text);
    break;
  }
  return parse_grid(text);
}

std::string render_ascii(const Polyomino& p) {
  GridPoint lo = p.min_corner(), hi = p.max_corner();
  std::string out;
  for (int y = hi.y - 1; y >= lo.y; --y) {
    for (int x = lo.x; x < hi.x; ++x) out += p.contains({x, y}) ? '#' : '.';
    if (y > lo.y) out += '\n';
  }
  return out;
}

std::string render_tikz(const Polyomino& p, const std::vector<Cell>& rooks) {
  std::ostringstream os;
  os << "\\begin{tikzpicture}[scale=0.6]\n";
  for (const auto& c : p.cells())
    os << "  \\draw (" << c.x << "," << c.y << ") rectangle (" << c.x + 1 << "," << c.y + 1
       << ");\n";
  for (const auto& r : rooks)
    os << "  \\node at (" << r.x << ".5," << r.y << ".5) {$\\mathcal{T}$};\n";
  os << "\\end{tikzpicture}\n";
  return os.str();
}

std::string render_svg(const Polyomino& p, const std::vector<Cell>& rooks) {
  const int unit = 24, margin = 4;
  GridPoint lo = p.min_corner(), hi = p.max_corner();
  int w = (hi.x - lo.x) * unit + 2 * margin, h = (hi.y - lo.y) * unit + 2 * margin;
  auto px = [&](int x) { return margin + (x - lo.x) * unit; };
  auto py = [&](int y) { return margin + (hi.y - y) * unit; };  // flip: SVG y grows downward
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
     << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  for (const auto& c : p.cells())
    os << "  <rect x=\"" << px(c.x) << "\" y=\"" << py(c.y + 1) << "\" width=\"" << unit
       << "\" height=\"" << unit << "\" fill=\"#f2f2f2\" stroke=\"black\"/>\n";
  for (const auto& r : rooks)
    os << "  <circle cx=\"" << px(r.x) + unit / 2 << "\" cy=\"" << py(r.y + 1) + unit / 2
       << "\" r=\"" << unit / 3 << "\" fill=\"black\"/>\n";
  os << "</svg>\n";
  return os.str();
}

std::vector<Cell> parse_rooks(const std::string& text) {
  std::vector<Cell> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (item.empty()) continue;
    std::istringstream pair(item);
    int x, y;
    char comma;
    if (!(pair >> x >> comma >> y) || comma != ',')
      fail(Errc::syntax_error, "rook list must look like \"x,y;x,y\"");
    out.push_back({x, y});
  }
  return out;
}

std::string cells_json(const Polyomino& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.cells()) arr.push_back({c.x, c.y});
  return nlohmann::json{{"cells", arr}}.dump();
}

}  // namespace polyalg

#include "klimm/io.hpp"

#include <fstream>
#include <stdexcept>

namespace klimm {

Json to_json(const RationalMatrix &m) {
  Json entries = Json::array();
  for (int i = 1; i <= m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= m.cols(); ++j)
      row.push_back(format_rational(m(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

namespace {

Rational entry_from_json(const Json &e) {
  if (e.is_number_integer())
    return Rational(mpz_class(std::to_string(e.get<long long>())));
  if (e.is_string())
    return parse_rational(e.get<std::string>());
  throw std::invalid_argument("matrix entries must be integers or \"p/q\" strings");
}

} // namespace

RationalMatrix matrix_from_json(const Json &j) {
  const Json &entries = j.is_array() ? j : j.at("entries");
  if (!entries.is_array() || entries.empty())
    throw std::invalid_argument("matrix needs a nonempty entries array");
  const int rows = static_cast<int>(entries.size());
  const int cols = static_cast<int>(entries.front().size());
  if (j.is_object() && ((j.contains("rows") && j.at("rows").get<int>() != rows) ||
                        (j.contains("cols") && j.at("cols").get<int>() != cols)))
    throw std::invalid_argument("matrix dimensions disagree with entries");
  RationalMatrix m(rows, cols);
  for (int i = 1; i <= rows; ++i) {
    const Json &row = entries[static_cast<std::size_t>(i - 1)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw std::invalid_argument("matrix rows have unequal lengths");
    for (int c = 1; c <= cols; ++c)
      m(i, c) = entry_from_json(row[static_cast<std::size_t>(c - 1)]);
  }
  return m;
}

RationalMatrix read_matrix(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path.string());
  try {
    return matrix_from_json(Json::parse(in));
  } catch (const nlohmann::json::exception &e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

void write_matrix(const std::filesystem::path &path, const RationalMatrix &m) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write " + path.string());
  out << to_json(m).dump(2) << '\n';
}

Json to_json(const Multiset &s) { return Json(std::vector<int>(s.entries().begin(), s.entries().end())); }

Json to_json(const LabeledGrid &g) {
  Json cells = Json::array();
  for (auto [i, j] : g.cells())
    cells.push_back({i, j});
  return Json{{"n", g.size()},
              {"cells", std::move(cells)},
              {"row_labels", to_json(g.row_labels())},
              {"col_labels", to_json(g.col_labels())}};
}

Json to_json(const ImmanantResult &r) {
  return Json{{"v", r.v.str()},
              {"R", to_json(r.rows)},
              {"C", to_json(r.cols)},
              {"method", to_string(r.method)},
              {"value", format_rational(r.value)},
              {"admissible", r.admissible},
              {"largest_square", r.largest_square},
              {"length_v", r.v.length()}};
}

} // namespace klimm

#include "flagvar/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace flagvar {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

long long parse_int(std::string_view s) {
  s = trim(s);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  return v;
}

std::vector<int> parse_int_list(std::string_view s) {
  std::vector<int> out;
  for (const auto& part : split(trim(s), ',')) out.push_back(static_cast<int>(parse_int(part)));
  return out;
}

std::string join(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

// Trimmed lines with # comments removed. Blank lines stay, as empty strings,
// so series blocks can be split on them.
std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    lines.emplace_back(trim(line));
  }
  return lines;
}

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream ss{std::string(line)};
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

}  // namespace

std::string format_scalar(const Field& f, Elem a) {
  if (a < static_cast<Elem>(f.p())) return std::to_string(a);
  return join(f.coeffs(a), ',');
}

Elem parse_scalar(const Field& f, std::string_view text) {
  auto c = parse_int_list(text);
  if (static_cast<int>(c.size()) > f.degree()) throw std::invalid_argument("too many coefficients for the field");
  if (c.size() == 1) return f.from_int(c[0]);
  for (int v : c)
    if (v < 0 || v >= f.p()) throw std::invalid_argument("coefficient out of range [0, p)");
  c.resize(f.degree(), 0);
  return f.from_coeffs(c);
}

Field parse_field(std::string_view text) {
  const auto v = parse_int_list(text);
  if (v.size() != 3) throw std::invalid_argument("field must be given as p,m,k");
  return Field::make(v[0], v[1], v[2]);
}

std::string format_partition(const Partition& lambda) { return join(lambda.parts(), ','); }
Partition parse_partition(std::string_view text) { return Partition(parse_int_list(text)); }

std::string format_perm(const Perm& w) { return join(w.word(), ','); }

Perm parse_perm(std::string_view text) {
  text = trim(text);
  if (text.find(',') == std::string_view::npos && text.size() > 1) {
    std::vector<int> word;
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw std::invalid_argument("bad permutation digit");
      word.push_back(ch - '0');
    }
    return Perm(std::move(word));
  }
  return Perm(parse_int_list(text));
}

std::string format_tableau(const Tableau& t) {
  std::string out;
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    if (i) out += ';';
    out += join(t.rows()[i], ',');
  }
  return out;
}

Tableau parse_tableau(std::string_view text) {
  std::vector<std::vector<int>> rows;
  for (const auto& r : split(trim(text), ';')) rows.push_back(parse_int_list(r));
  return Tableau(std::move(rows));
}

std::string format_matrix(const Mat& m) {
  const Field& f = m.field();
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << ' ' << f.p() << ' ' << f.m() << ' ' << f.k() << '\n';
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out << (c ? " " : "") << format_scalar(f, m(r, c));
    out << '\n';
  }
  return out.str();
}

Mat read_matrix(std::istream& in) {
  std::vector<std::string> lines;
  for (auto& l : read_lines(in))
    if (!l.empty()) lines.push_back(std::move(l));
  if (lines.empty()) throw std::invalid_argument("empty matrix file");
  const auto head = tokens(lines[0]);
  if (head.size() != 5) throw std::invalid_argument("matrix header must be 'rows cols p m k'");
  const int rows = static_cast<int>(parse_int(head[0])), cols = static_cast<int>(parse_int(head[1]));
  const Field f = Field::make(static_cast<int>(parse_int(head[2])), static_cast<int>(parse_int(head[3])),
                              static_cast<int>(parse_int(head[4])));
  if (rows < 0 || cols < 0 || static_cast<int>(lines.size()) != rows + 1)
    throw std::invalid_argument("matrix file has the wrong number of rows");
  Mat m(f, rows, cols);
  for (int r = 0; r < rows; ++r) {
    const auto t = tokens(lines[r + 1]);
    if (static_cast<int>(t.size()) != cols) throw std::invalid_argument("matrix row has the wrong number of entries");
    for (int c = 0; c < cols; ++c) m(r, c) = parse_scalar(f, t[c]);
  }
  return m;
}

Mat read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_matrix(in);
}

TruncatedSeriesMat read_series(std::istream& in, const Field& f) {
  std::vector<std::vector<std::string>> blocks(1);
  for (auto& l : read_lines(in)) {
    if (l.empty()) {
      if (!blocks.back().empty()) blocks.emplace_back();
    } else {
      blocks.back().push_back(std::move(l));
    }
  }
  if (blocks.back().empty()) blocks.pop_back();
  if (blocks.empty()) throw std::invalid_argument("empty series file");
  const int d = static_cast<int>(blocks.front().size());
  std::vector<Mat> coeffs;
  for (const auto& b : blocks) {
    if (static_cast<int>(b.size()) != d) throw std::invalid_argument("series blocks must all have d rows");
    Mat a(f, d, d);
    for (int r = 0; r < d; ++r) {
      const auto t = tokens(b[r]);
      if (static_cast<int>(t.size()) != d) throw std::invalid_argument("series block rows must have d entries");
      for (int c = 0; c < d; ++c) a(r, c) = parse_scalar(f, t[c]);
    }
    coeffs.push_back(std::move(a));
  }
  return TruncatedSeriesMat(std::move(coeffs));
}

TruncatedSeriesMat read_series_file(const std::string& path, const Field& f) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_series(in, f);
}

std::string format_series(const TruncatedSeriesMat& a) {
  std::ostringstream out;
  for (int i = 0; i < a.r(); ++i) {
    if (i) out << '\n';
    const Mat& m = a.coeff(i);
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) out << (c ? " " : "") << format_scalar(m.field(), m(r, c));
      out << '\n';
    }
  }
  return out.str();
}

std::string flag_to_json(const Flag& f) {
  nlohmann::json chain = nlohmann::json::array();
  for (int i = 1; i <= f.n(); ++i) {
    nlohmann::json rows = nlohmann::json::array();
    const Mat& b = f[i].basis();
    for (int r = 0; r < b.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int c = 0; c < b.cols(); ++c) row.push_back(format_scalar(f.field(), b(r, c)));
      rows.push_back(std::move(row));
    }
    chain.push_back(std::move(rows));
  }
  return chain.dump();
}

}  // namespace flagvar

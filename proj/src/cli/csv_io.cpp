#include "phasekit/csv_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include "phasekit/error.hpp"

namespace phasekit {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

double to_double(const std::string& s, int line_no) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": bad number '" + s + "'");
  }
  return v;
}

int to_int(const std::string& s, int line_no) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": bad integer '" + s + "'");
  }
  return v;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

// "# key=value" or "#key=value"; returns false for other comment lines.
bool parse_meta(const std::string& line, std::pair<std::string, std::string>& out) {
  std::string body = line.substr(1);
  if (!body.empty() && body.front() == ' ') body.erase(0, 1);
  const auto eq = body.find('=');
  if (eq == std::string::npos) return false;
  out = {body.substr(0, eq), body.substr(eq + 1)};
  return true;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

const std::string* CsvTable::find_metadata(const std::string& key) const {
  for (const auto& [k, v] : metadata) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::vector<double> CsvTable::column(const std::string& name) const {
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c] != name) continue;
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(row[c]);
    return out;
  }
  throw std::out_of_range("no column named '" + name + "'");
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp =
      path.string() + ".tmp." + std::to_string(static_cast<long>(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("short write to " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot move output into place at " + path.string());
  }
}

std::string render_csv(const CsvTable& table) {
  std::string out = std::string(kCsvMagic) + "\n";
  for (const auto& [k, v] : table.metadata) out += "# " + k + "=" + v + "\n";
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out += (c ? "," : "") + table.columns[c];
  }
  out += "\n";
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) throw std::invalid_argument("row width mismatch");
    for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + format_double(row[c]);
    out += "\n";
  }
  return out;
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
  write_file_atomic(path, render_csv(table));
}

CsvTable parse_csv(const std::string& content) {
  CsvTable table;
  std::istringstream in(content);
  std::string line;
  int line_no = 0;
  bool magic = false;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (line == kCsvMagic) {
        magic = true;
        continue;
      }
      std::pair<std::string, std::string> kv;
      if (parse_meta(line, kv)) table.metadata.push_back(std::move(kv));
      continue;
    }
    if (!magic) throw ParseError("line " + std::to_string(line_no) + ": missing '# phasekit v1' header");
    const auto fields = split(line, ',');
    if (table.columns.empty()) {
      table.columns = fields;
      continue;
    }
    if (fields.size() != table.columns.size()) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(table.columns.size()) + " fields, got " +
                       std::to_string(fields.size()));
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(to_double(f, line_no));
    table.rows.push_back(std::move(row));
  }
  if (!magic) throw ParseError("empty file or missing '# phasekit v1' header");
  if (table.columns.empty()) throw ParseError("no column header line");
  return table;
}

CsvTable read_csv(const std::filesystem::path& path) { return parse_csv(slurp(path)); }

void write_matrix_dump(const std::filesystem::path& path, const MatrixDump& dump) {
  const auto& m = dump.elems;
  std::string out = "#cutoff=" + std::to_string(m.rows() - 1) + "\n";
  for (const auto& [k, v] : dump.metadata) out += "# " + k + "=" + v + "\n";
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      out += std::to_string(j) + "," + std::to_string(k) + "," + format_double(m(j, k).real()) +
             "," + format_double(m(j, k).imag()) + "\n";
    }
  }
  write_file_atomic(path, out);
}

MatrixDump read_matrix_dump(const std::filesystem::path& path) {
  std::istringstream in(slurp(path));
  MatrixDump dump;
  std::string line;
  int line_no = 0;
  int cutoff = -1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::pair<std::string, std::string> kv;
      if (!parse_meta(line, kv)) continue;
      if (kv.first == "cutoff") {
        cutoff = to_int(kv.second, line_no);
        if (cutoff < 0) throw ParseError("line " + std::to_string(line_no) + ": negative cutoff");
        dump.elems = ComplexMatrix::Zero(cutoff + 1, cutoff + 1);
      } else {
        dump.metadata.push_back(std::move(kv));
      }
      continue;
    }
    if (cutoff < 0) throw ParseError("line " + std::to_string(line_no) + ": rows before #cutoff=N");
    const auto f = split(line, ',');
    if (f.size() != 4) throw ParseError("line " + std::to_string(line_no) + ": expected j,k,re,im");
    const int j = to_int(f[0], line_no);
    const int k = to_int(f[1], line_no);
    if (j < 0 || k < 0 || j > cutoff || k > cutoff) {
      throw ParseError("line " + std::to_string(line_no) + ": index outside cutoff");
    }
    dump.elems(j, k) = Complex(to_double(f[2], line_no), to_double(f[3], line_no));
  }
  if (cutoff < 0) throw ParseError(path.string() + ": missing #cutoff=N header");
  return dump;
}

}  // namespace phasekit

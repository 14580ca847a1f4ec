#pragma once

// File formats written by the phasekit CLI.
//
// Distribution CSV:
//   # phasekit v1
//   # state=pair:n=1
//   # method=radial
//   # ...more key=value lines
//   theta,value            (column names; figure1 files carry several)
//   -3.1415926535897931,0.38422...
//
// Matrix dump:
//   #cutoff=N
//   # operator=rho_w       (optional key=value lines)
//   j,k,re,im
//
// Numbers are printed with 17 significant digits, so reading a file back
// reproduces the doubles exactly. Writers go through a temporary file and a
// rename; a failed write leaves no partial output behind.

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "phasekit/fock.hpp"

namespace phasekit {

inline constexpr const char* kCsvMagic = "# phasekit v1";

struct CsvTable {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  const std::string* find_metadata(const std::string& key) const;
  std::vector<double> column(const std::string& name) const;
};

std::string format_double(double value);

void write_file_atomic(const std::filesystem::path& path, const std::string& content);

std::string render_csv(const CsvTable& table);
void write_csv(const std::filesystem::path& path, const CsvTable& table);
CsvTable parse_csv(const std::string& content);
CsvTable read_csv(const std::filesystem::path& path);

struct MatrixDump {
  std::vector<std::pair<std::string, std::string>> metadata;
  ComplexMatrix elems;
};

void write_matrix_dump(const std::filesystem::path& path, const MatrixDump& dump);
MatrixDump read_matrix_dump(const std::filesystem::path& path);

}  // namespace phasekit

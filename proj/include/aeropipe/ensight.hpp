#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "aeropipe/mesh.hpp"

namespace aeropipe::ensight {

/// One VARIABLE entry of a case file. Only "scalar per element" is accepted.
struct VariableEntry {
  std::string name;          // Ensight description, e.g. "Pressure"
  std::string file_pattern;  // path with '*' wildcards, relative paths resolved
  bool transient = false;    // pattern carries wildcards / a time set
};

/// Parsed Ensight-Gold ASCII case file.
struct CaseDescriptor {
  std::filesystem::path case_path;
  std::filesystem::path geometry_file;
  std::map<std::string, VariableEntry> variables;
  std::vector<int> file_numbers;    // per step, from start number + increment
  std::vector<double> time_values;  // per step

  int num_steps() const { return static_cast<int>(time_values.size()); }
};

/// Expands the '*' run in an Ensight file pattern with the zero-padded
/// file number (padding width = number of '*').
std::string expand_pattern(const std::string& pattern, int file_number);

CaseDescriptor parse_case(const std::filesystem::path& path);

/// Reads an ASCII Ensight-Gold geometry file. Each part becomes a region
/// named by its description line; part-local node blocks are concatenated.
Mesh read_geometry(const std::filesystem::path& path);

/// Per-element values of a scalar variable at one time step, ordered the
/// same way read_geometry orders elements. When expected_count >= 0 a value
/// count mismatch raises CorruptVariableFile.
std::vector<double> read_scalar_variable(const CaseDescriptor& descriptor,
                                         const std::string& quantity, int step,
                                         int expected_count = -1);

} // namespace aeropipe::ensight

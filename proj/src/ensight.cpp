#include "aeropipe/ensight.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace aeropipe::ensight {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

/// Line-oriented reader that skips blank lines.
class LineReader {
public:
  explicit LineReader(const std::filesystem::path& path) : stream_(path), path_(path) {
    if (!stream_) throw FileNotFound("cannot open '" + path.string() + "'");
  }

  bool next(std::string& line) {
    while (std::getline(stream_, line)) {
      line = trim(line);
      if (!line.empty()) return true;
    }
    return false;
  }

  const std::filesystem::path& path() const { return path_; }

private:
  std::ifstream stream_;
  std::filesystem::path path_;
};

std::vector<double> parse_doubles(const std::string& line) {
  std::vector<double> values;
  std::istringstream in(line);
  double v;
  while (in >> v) values.push_back(v);
  return values;
}

} // namespace

std::string expand_pattern(const std::string& pattern, int file_number) {
  const std::size_t first = pattern.find('*');
  if (first == std::string::npos) return pattern;
  std::size_t last = first;
  while (last + 1 < pattern.size() && pattern[last + 1] == '*') ++last;
  const int width = static_cast<int>(last - first + 1);
  std::ostringstream num;
  num.width(width);
  num.fill('0');
  num << file_number;
  return pattern.substr(0, first) + num.str() + pattern.substr(last + 1);
}

CaseDescriptor parse_case(const std::filesystem::path& path) {
  LineReader reader(path);
  CaseDescriptor desc;
  desc.case_path = path;
  const std::filesystem::path dir = path.parent_path();

  enum class Section { None, Format, Geometry, Variable, Time };
  Section section = Section::None;
  bool saw_geometry_section = false;
  bool format_ok = false;

  int num_steps = 0;
  int start_number = 0;
  int increment = 1;
  std::vector<double> time_values;
  bool reading_time_values = false;

  std::string line;
  while (reader.next(line)) {
    const std::string low = lower(line);
    if (low == "format") {
      section = Section::Format;
      continue;
    }
    if (low == "geometry") {
      section = Section::Geometry;
      saw_geometry_section = true;
      continue;
    }
    if (low == "variable") {
      section = Section::Variable;
      continue;
    }
    if (low == "time") {
      section = Section::Time;
      continue;
    }

    switch (section) {
      case Section::Format: {
        if (low.rfind("type:", 0) == 0 && lower(trim(line.substr(5))) == "ensight gold")
          format_ok = true;
        break;
      }
      case Section::Geometry: {
        if (low.rfind("model:", 0) == 0) {
          std::string value = trim(line.substr(6));
          // Optional leading time-set / change-coords tokens are not used for
          // static geometry; keep the last token as the file name.
          std::istringstream in(value);
          std::string tok, file;
          while (in >> tok) file = tok;
          desc.geometry_file = dir / file;
        }
        break;
      }
      case Section::Variable: {
        const std::size_t colon = line.find(':');
        if (colon == std::string::npos) break;
        const std::string kind = lower(trim(line.substr(0, colon)));
        const std::string rest = trim(line.substr(colon + 1));
        if (kind != "scalar per element")
          throw UnsupportedVariable("unsupported variable kind '" + kind + "' in '" +
                                    path.string() + "' (only 'scalar per element')");
        // [ts [fs]] description filename
        std::istringstream in(rest);
        std::vector<std::string> tokens;
        std::string tok;
        while (in >> tok) tokens.push_back(tok);
        if (tokens.size() < 2)
          throw MalformedCase("variable line '" + line + "' needs description and file");
        std::size_t first_word = 0;
        while (first_word + 2 < tokens.size() &&
               tokens[first_word].find_first_not_of("0123456789") == std::string::npos)
          ++first_word;
        VariableEntry entry;
        entry.file_pattern = (dir / tokens.back()).string();
        entry.transient = tokens.back().find('*') != std::string::npos;
        std::string name;
        for (std::size_t i = first_word; i + 1 < tokens.size(); ++i) {
          if (!name.empty()) name += ' ';
          name += tokens[i];
        }
        entry.name = name;
        desc.variables[name] = entry;
        break;
      }
      case Section::Time: {
        if (low.rfind("time set:", 0) == 0) break;
        if (low.rfind("number of steps:", 0) == 0) {
          num_steps = std::stoi(trim(line.substr(16)));
          break;
        }
        if (low.rfind("filename start number:", 0) == 0) {
          start_number = std::stoi(trim(line.substr(22)));
          break;
        }
        if (low.rfind("filename increment:", 0) == 0) {
          increment = std::stoi(trim(line.substr(19)));
          break;
        }
        if (low.rfind("time values:", 0) == 0) {
          reading_time_values = true;
          const auto values = parse_doubles(trim(line.substr(12)));
          time_values.insert(time_values.end(), values.begin(), values.end());
          break;
        }
        if (reading_time_values) {
          const auto values = parse_doubles(line);
          time_values.insert(time_values.end(), values.begin(), values.end());
        }
        break;
      }
      case Section::None:
        break;
    }
  }

  if (!format_ok)
    throw MalformedCase("'" + path.string() + "' lacks a FORMAT section with 'type: ensight gold'");
  if (!saw_geometry_section || desc.geometry_file.empty())
    throw MalformedCase("'" + path.string() + "' lacks a GEOMETRY section");
  if (num_steps > 0 && static_cast<int>(time_values.size()) != num_steps)
    throw MalformedCase("'" + path.string() + "': time set declares " + std::to_string(num_steps) +
                        " steps but lists " + std::to_string(time_values.size()) + " time values");

  const bool any_transient =
      std::any_of(desc.variables.begin(), desc.variables.end(),
                  [](const auto& kv) { return kv.second.transient; });
  if (any_transient && time_values.empty())
    throw MalformedCase("'" + path.string() +
                        "': transient variable pattern without a TIME section");

  desc.time_values = time_values;
  desc.file_numbers.resize(time_values.size());
  for (std::size_t k = 0; k < time_values.size(); ++k)
    desc.file_numbers[k] = start_number + static_cast<int>(k) * increment;
  return desc;
}

namespace {

bool is_keyword(const std::string& low) {
  return low == "part" || low == "coordinates" || low == "tetra4" || low == "hexa8" ||
         low.rfind("node id", 0) == 0 || low.rfind("element id", 0) == 0;
}

} // namespace

Mesh read_geometry(const std::filesystem::path& path) {
  LineReader reader(path);
  Mesh mesh;

  std::string line;
  // Two description lines.
  if (!reader.next(line)) throw MalformedCase("empty geometry file '" + path.string() + "'");
  reader.next(line);

  bool node_ids_listed = false;
  bool element_ids_listed = false;
  bool pending = false;  // `line` holds an unconsumed keyword

  auto read_id_mode = [&](const std::string& text, const char* what) {
    const std::string mode = trim(text);
    if (mode == "given") return true;
    if (mode == "assign") return false;
    throw UnsupportedIdMode(std::string("unsupported ") + what + " id mode '" + mode + "' in '" +
                            path.string() + "' (only assign/given)");
  };

  while (pending || reader.next(line)) {
    pending = false;
    std::string low = lower(line);
    if (low.rfind("node id", 0) == 0) {
      node_ids_listed = read_id_mode(line.substr(7), "node");
      continue;
    }
    if (low.rfind("element id", 0) == 0) {
      element_ids_listed = read_id_mode(line.substr(10), "element");
      continue;
    }
    if (low != "part") {
      if (low.rfind("extents", 0) == 0) {  // optional extents block: skip 3 lines
        for (int i = 0; i < 3; ++i) reader.next(line);
        continue;
      }
      throw UnsupportedElement("unexpected line '" + line + "' in '" + path.string() + "'");
    }

    // part number
    if (!reader.next(line)) throw MalformedCase("truncated part header in '" + path.string() + "'");
    // description -> region name
    std::string region_name;
    if (!reader.next(region_name))
      throw MalformedCase("truncated part header in '" + path.string() + "'");

    if (!reader.next(line) || lower(line) != "coordinates")
      throw MalformedCase("part '" + region_name + "' lacks a coordinates block");
    if (!reader.next(line)) throw MalformedCase("truncated coordinates block");
    const int nn = std::stoi(line);
    const int node_offset = mesh.num_nodes();

    if (node_ids_listed)
      for (int i = 0; i < nn; ++i) reader.next(line);
    std::vector<Vec3> coords(nn);
    for (int d = 0; d < 3; ++d)
      for (int i = 0; i < nn; ++i) {
        if (!reader.next(line)) throw MalformedCase("truncated coordinate data");
        coords[i][d] = std::stod(line);
      }
    mesh.nodes.insert(mesh.nodes.end(), coords.begin(), coords.end());

    auto& region = mesh.regions[region_name];

    // Element blocks until the next `part` or EOF.
    while (reader.next(line)) {
      const std::string block = lower(line);
      if (block == "part") {
        pending = true;
        break;
      }
      ElementKind kind;
      if (block == "tetra4")
        kind = ElementKind::Tet4;
      else if (block == "hexa8")
        kind = ElementKind::Hex8;
      else
        throw UnsupportedElement("unsupported element block '" + line + "' in '" + path.string() +
                                 "' (only tetra4/hexa8)");

      if (!reader.next(line)) throw MalformedCase("truncated element block");
      const int ne = std::stoi(line);
      if (element_ids_listed)
        for (int i = 0; i < ne; ++i) reader.next(line);
      for (int i = 0; i < ne; ++i) {
        if (!reader.next(line)) throw MalformedCase("truncated connectivity data");
        std::istringstream in(line);
        Element e;
        e.kind = kind;
        for (int c = 0; c < node_count(kind); ++c) {
          int one_based;
          if (!(in >> one_based)) throw MalformedCase("bad connectivity line '" + line + "'");
          e.conn[c] = node_offset + one_based - 1;
        }
        region.push_back(mesh.num_elements());
        mesh.elements.push_back(e);
      }
    }
  }

  mesh.validate();
  return mesh;
}

std::vector<double> read_scalar_variable(const CaseDescriptor& descriptor,
                                         const std::string& quantity, int step,
                                         int expected_count) {
  auto it = descriptor.variables.find(quantity);
  if (it == descriptor.variables.end())
    throw UnsupportedVariable("case '" + descriptor.case_path.string() + "' has no variable '" +
                              quantity + "'");
  const VariableEntry& entry = it->second;

  std::string file = entry.file_pattern;
  if (entry.transient) {
    if (step < 0 || step >= descriptor.num_steps())
      throw CorruptVariableFile("step " + std::to_string(step) + " outside time set of '" +
                                descriptor.case_path.string() + "' (" +
                                std::to_string(descriptor.num_steps()) + " steps)");
    file = expand_pattern(entry.file_pattern, descriptor.file_numbers[step]);
  }

  LineReader reader(file);
  std::string line;
  if (!reader.next(line)) throw CorruptVariableFile("empty variable file '" + file + "'");

  std::vector<double> values;
  while (reader.next(line)) {
    const std::string low = lower(line);
    if (low == "part") {
      reader.next(line);  // part number
      continue;
    }
    if (low == "tetra4" || low == "hexa8") continue;
    for (double v : parse_doubles(line)) values.push_back(v);
  }
  if (expected_count >= 0 && static_cast<int>(values.size()) != expected_count)
    throw CorruptVariableFile("variable file '" + file + "' holds " +
                              std::to_string(values.size()) + " values, mesh has " +
                              std::to_string(expected_count) + " elements");
  return values;
}

} // namespace aeropipe::ensight

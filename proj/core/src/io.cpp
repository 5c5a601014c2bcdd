#include "sympolar/io.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "sympolar/errors.hpp"

namespace sympolar {

using nlohmann::json;

std::string polytope_to_json(const Polytope& p) {
  json vertices = json::array();
  for (const auto& v : p.vertices()) {
    json row = json::array();
    for (const auto& c : v) row.push_back(to_string(c));
    vertices.push_back(std::move(row));
  }
  json doc = {{"dim", p.dim()}, {"vertices", std::move(vertices)}};
  return doc.dump() + "\n";
}

Polytope polytope_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("polytope JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("vertices")) {
    throw ParseError("polytope JSON: expected an object with \"dim\" and \"vertices\"");
  }
  if (!doc["dim"].is_number_unsigned() || doc["dim"].get<std::size_t>() == 0) {
    throw ParseError("polytope JSON: \"dim\" must be a positive integer");
  }
  const auto dim = doc["dim"].get<std::size_t>();
  if (!doc["vertices"].is_array()) throw ParseError("polytope JSON: \"vertices\" must be an array");

  std::vector<RationalVector> points;
  for (const auto& row : doc["vertices"]) {
    if (!row.is_array() || row.size() != dim) {
      throw ParseError("polytope JSON: every vertex needs exactly " + std::to_string(dim) + " coordinates");
    }
    RationalVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (row[i].is_number_float()) throw ParseError("polytope JSON: floating-point coordinate " + row[i].dump());
      if (!row[i].is_string()) throw ParseError("polytope JSON: coordinates must be \"p/q\" strings");
      v[i] = parse_rational(row[i].get<std::string>());
    }
    points.push_back(std::move(v));
  }
  return convex_hull(points);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Polytope read_polytope_file(const std::filesystem::path& path) { return polytope_from_json(read_text_file(path)); }

void write_polytope_file(const std::filesystem::path& path, const Polytope& p) {
  write_file_atomically(path, polytope_to_json(p));
}

void write_file_atomically(const std::filesystem::path& path, std::string_view contents) {
  static std::atomic<unsigned> counter{0};
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) + "." +
         std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace sympolar

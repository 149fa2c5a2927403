#include "qpredict/app/state_io.hpp"

#include <fstream>

namespace qpredict::app {

namespace {

Vec3 vec3_from(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_array() || v.size() != 3) throw ParseError(std::string(key) + " must be a 3-array");
  Vec3 out;
  for (int i = 0; i < 3; ++i) {
    if (!v[i].is_number()) throw ParseError(std::string(key) + " entries must be numbers");
    out(i) = v[i].get<double>();
  }
  return out;
}

}  // namespace

FanoState state_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("state must be a JSON object");
  const Vec3 t_a = vec3_from(j, "t_a");
  const Vec3 t_b = vec3_from(j, "t_b");
  if (!j.contains("c")) throw ParseError("missing key \"c\"");
  const auto& rows = j.at("c");
  if (!rows.is_array() || rows.size() != 3) throw ParseError("c must be a 3x3 array");
  Mat3 c;
  for (int i = 0; i < 3; ++i) {
    if (!rows[i].is_array() || rows[i].size() != 3) throw ParseError("c must be a 3x3 array");
    for (int k = 0; k < 3; ++k) {
      if (!rows[i][k].is_number()) throw ParseError("c entries must be numbers");
      c(i, k) = rows[i][k].get<double>();
    }
  }
  return FanoState(t_a, t_b, c);
}

nlohmann::json state_to_json(const FanoState& s) {
  nlohmann::json j;
  j["t_a"] = {s.t_a()(0), s.t_a()(1), s.t_a()(2)};
  j["t_b"] = {s.t_b()(0), s.t_b()(1), s.t_b()(2)};
  j["c"] = nlohmann::json::array();
  for (int i = 0; i < 3; ++i) j["c"].push_back({s.c()(i, 0), s.c()(i, 1), s.c()(i, 2)});
  return j;
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

FanoState read_state_file(const std::filesystem::path& path) {
  return state_from_json(read_json_file(path));
}

}  // namespace qpredict::app

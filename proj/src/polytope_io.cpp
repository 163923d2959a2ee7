#include "ehrtri/polytope_io.hpp"

#include <fstream>

namespace ehrtri {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::InvalidInput, "polytope file: " + what);
}

IntVector int_vector(const json& j, std::size_t len, const std::string& what) {
  if (!j.is_array() || j.size() != len) {
    schema_error(what + " must be an array of length " + std::to_string(len));
  }
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

std::size_t count(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    schema_error(what + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

Face index_list(const json& j, std::size_t bound, const std::string& what) {
  if (!j.is_array()) schema_error(what + " must be an array of indices");
  std::vector<std::size_t> out;
  for (const auto& x : j) {
    std::size_t i = count(x, what);
    if (i >= bound) schema_error(what + " index " + std::to_string(i) +
                                 " is out of range");
    out.push_back(i);
  }
  Face f = make_face(out);
  if (f.size() != out.size()) schema_error(what + " repeats an index");
  return f;
}

json vector_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

}  // namespace

json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) {
      schema_error("malformed integer string \"" + j.get<std::string>() + "\"");
    }
    return x;
  }
  schema_error("expected an integer");
}

json to_json(const PolytopeFile& f) {
  const Polytope& p = f.polytope.polytope;
  const CoordinateMap& map = f.polytope.lattice;
  json j;
  j["dimension"] = p.dim;
  j["denominator"] = integer_to_json(map.denominator());
  json gens = json::array();
  for (std::size_t c = 0; c < map.basis().cols(); ++c)
    gens.push_back(vector_json(map.basis().column(c)));
  j["lattice_generators"] = gens;
  json pts = json::array();
  for (const auto& pt : p.points) pts.push_back(vector_json(map.to_scaled_ambient(pt)));
  j["points"] = pts;
  j["vertex_indices"] = p.vertex_indices;
  if (f.triangulation) {
    j["triangulation"] = f.triangulation->maximal_faces;
    if (f.triangulation->special_face)
      j["special_face"] = *f.triangulation->special_face;
  }
  return j;
}

PolytopeFile polytope_file_from_json(const json& j) {
  if (!j.is_object()) schema_error("top level must be an object");
  if (!j.contains("dimension")) schema_error("missing \"dimension\"");
  if (!j.contains("points")) schema_error("missing \"points\"");
  if (!j.contains("vertex_indices")) schema_error("missing \"vertex_indices\"");

  const std::size_t d = count(j["dimension"], "dimension");
  if (d == 0) schema_error("dimension must be positive");
  Integer denom = j.contains("denominator")
                      ? integer_from_json(j["denominator"])
                      : Integer(1);
  if (denom <= 0) schema_error("denominator must be positive");

  IntMatrix gens;
  if (j.contains("lattice_generators")) {
    const json& g = j["lattice_generators"];
    if (!g.is_array() || g.size() < d) {
      schema_error("lattice_generators must list at least dimension columns");
    }
    std::vector<IntVector> cols;
    for (const auto& c : g) cols.push_back(int_vector(c, d, "generator column"));
    gens = IntMatrix::from_columns(cols, d);
  } else {
    gens = IntMatrix::identity(d);
    for (std::size_t i = 0; i < d; ++i) gens(i, i) = denom;
  }

  PolytopeFile f;
  try {
    f.polytope.lattice = CoordinateMap(denom, gens);
  } catch (const Error& e) {
    schema_error(std::string("lattice_generators: ") + e.what());
  }
  Polytope& p = f.polytope.polytope;
  p.dim = d;
  const json& pts = j["points"];
  if (!pts.is_array() || pts.empty()) schema_error("points must be a nonempty array");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    IntVector scaled = int_vector(pts[i], d, "point " + std::to_string(i));
    try {
      p.points.push_back(f.polytope.lattice.embed_scaled(scaled));
    } catch (const Error& e) {
      throw Error(e.code(),
                  "point " + std::to_string(i) + " is not in the lattice", i);
    }
  }
  p.vertex_indices = index_list(j["vertex_indices"], p.points.size(),
                                "vertex_indices");
  if (j.contains("triangulation")) {
    const json& t = j["triangulation"];
    if (!t.is_array()) schema_error("triangulation must be an array");
    Triangulation tri;
    for (const auto& face : t)
      tri.maximal_faces.push_back(
          index_list(face, p.points.size(), "triangulation face"));
    if (j.contains("special_face"))
      tri.special_face =
          index_list(j["special_face"], p.points.size(), "special_face");
    f.triangulation = std::move(tri);
  } else if (j.contains("special_face")) {
    schema_error("special_face requires a triangulation");
  }
  return f;
}

PolytopeFile read_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
  }
  return polytope_file_from_json(j);
}

void write_polytope_file(const PolytopeFile& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  }
  out << to_json(f).dump(2) << '\n';
}

Triangulation triangulation_or_boundary_join(const PolytopeFile& f) {
  if (f.triangulation) return *f.triangulation;
  return boundary_join(f.polytope.polytope);
}

}  // namespace ehrtri

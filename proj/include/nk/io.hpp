#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "nk/triangulation.hpp"

namespace nk {

// Triangulation file format:
//   {"label": str, "tets": n, "gluings": [[t, f, t2, f2, "p0p1p2p3"], ...]}
// where "p0p1p2p3" lists the images of corners 0123 under the gluing
// permutation.  Unlisted (t,f) pairs are boundary faces.  A glued pair may be
// listed once (the inverse is implied) or twice if consistent.

inline Triangulation triangulationFromJson(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("tets"))
      throw Error(ErrorCode::MalformedFile, "expected an object with a \"tets\" field");
    int n = j.at("tets").get<int>();
    if (n < 0) throw Error(ErrorCode::MalformedFile, "negative tetrahedron count");
    Triangulation T(n, j.value("label", std::string{}));
    if (j.contains("gluings")) {
      for (const auto& rec : j.at("gluings")) {
        if (!rec.is_array() || rec.size() != 5)
          throw Error(ErrorCode::MalformedFile, "gluing record must be [t,f,t2,f2,perm]");
        int t = rec[0].get<int>(), f = rec[1].get<int>();
        int t2 = rec[2].get<int>(), f2 = rec[3].get<int>();
        Perm4 p;
        try {
          p = Perm4::fromString(rec[4].get<std::string>());
        } catch (const std::invalid_argument& e) {
          throw Error(ErrorCode::MalformedFile, e.what());
        }
        T.glue(t, f, t2, f2, p);
      }
    }
    T.validate();
    return T;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedFile, e.what());
  }
}

inline Triangulation parseTriangulation(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::MalformedFile, "invalid JSON");
  return triangulationFromJson(j);
}

inline Triangulation loadTriangulation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedFile, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parseTriangulation(ss.str());
}

inline nlohmann::json triangulationToJson(const Triangulation& T) {
  nlohmann::json j;
  j["label"] = T.label();
  j["tets"] = T.size();
  auto gl = nlohmann::json::array();
  for (int t = 0; t < T.size(); ++t)
    for (int f = 0; f < 4; ++f) {
      const auto& g = T.gluing(t, f);
      if (!g) continue;
      // Emit each glued pair once.
      if (g->tet < t || (g->tet == t && g->face < f)) continue;
      if (g->tet == t && g->face == f && f < 4) {
        // self-gluing: emit once
      }
      gl.push_back({t, f, g->tet, g->face, g->perm.str()});
    }
  j["gluings"] = std::move(gl);
  return j;
}

inline void saveTriangulation(const Triangulation& T, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::MalformedFile, "cannot write " + path);
  out << triangulationToJson(T).dump(2) << "\n";
}

}  // namespace nk

#include "lht/io.hpp"

#include <algorithm>

#include "lht/error.hpp"

namespace lht {

namespace {

template <class F>
auto guarded(const char* what, F f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed ") + what + " document: " + e.what());
  }
}

Partition shape_of(const Json& doc) {
  const int n = doc.at("n").get<int>();
  auto parts = doc.at("lambda").get<std::vector<int>>();
  if (static_cast<int>(parts.size()) != n)
    throw Error(ErrorCode::ShapeMismatch, "lambda has " + std::to_string(parts.size()) + " parts but n = " + std::to_string(n));
  return Partition::make(std::move(parts));
}

Json vertex_list(const std::vector<LHVertex>& path) {
  Json out = Json::array();
  for (const auto& v : path) out.push_back({v.col, v.num});
  return out;
}

std::vector<std::vector<LHVertex>> read_paths(const Json& arr) {
  std::vector<std::vector<LHVertex>> out;
  for (const auto& p : arr) {
    std::vector<LHVertex> path;
    for (const auto& v : p) {
      if (!v.is_array() || v.size() != 2) throw Error(ErrorCode::InvalidArgument, "vertices are [col, num] pairs");
      path.push_back({v[0].get<int>(), v[1].get<std::int64_t>()});
    }
    out.push_back(std::move(path));
  }
  return out;
}

}  // namespace

Json tableau_to_json(const LectureHallTableau& T) {
  Json doc;
  doc["n"] = T.n();
  doc["t"] = T.t();
  doc["lambda"] = std::vector<int>(T.shape().parts().begin(), T.shape().parts().end());
  doc["rows"] = T.rows();
  return doc;
}

LectureHallTableau tableau_from_json(const Json& doc) {
  return guarded("tableau", [&] {
    const Partition shape = shape_of(doc);
    return LectureHallTableau::make(shape, doc.at("t").get<int>(), doc.at("rows").get<Rows>());
  });
}

Json paths_to_json(const PathSystem& ps) {
  Json doc;
  doc["n"] = ps.n;
  doc["t"] = ps.t;
  Json paths = Json::array();
  for (const auto& p : ps.paths) paths.push_back(vertex_list(p));
  doc["paths"] = std::move(paths);
  return doc;
}

PathSystem paths_from_json(const Json& doc) {
  return guarded("paths", [&] {
    PathSystem ps{doc.at("t").get<int>(), doc.at("n").get<int>(), read_paths(doc.at("paths"))};
    validate_paths(ps);
    return ps;
  });
}

Json dual_paths_to_json(const DualPathSystem& dps) {
  Json doc;
  doc["n"] = dps.n;
  doc["t"] = dps.t;
  doc["m"] = dps.m;
  Json paths = Json::array();
  for (const auto& p : dps.paths) paths.push_back(vertex_list(p));
  doc["paths"] = std::move(paths);
  return doc;
}

DualPathSystem dual_paths_from_json(const Json& doc) {
  return guarded("dual paths", [&] {
    DualPathSystem dps{doc.at("t").get<int>(), doc.at("n").get<int>(), doc.at("m").get<int>(), read_paths(doc.at("paths"))};
    validate_dual_paths(dps);
    return dps;
  });
}

Json dimers_to_json(const DimerConfiguration& d) {
  if (!d.lattice) throw Error(ErrorCode::InvalidArgument, "dimer configuration has no lattice");
  Json doc;
  doc["n"] = d.lattice->shape().n();
  doc["t"] = d.lattice->t();
  const auto parts = d.lattice->shape().parts();
  doc["lambda"] = std::vector<int>(parts.begin(), parts.end());
  doc["matching"] = d.matching;
  return doc;
}

DimerConfiguration dimers_from_json(const Json& doc) {
  return guarded("dimers", [&] {
    auto lattice = std::make_shared<const LectureHallLattice>(shape_of(doc), doc.at("t").get<int>());
    auto matching = doc.at("matching").get<std::vector<std::size_t>>();
    std::sort(matching.begin(), matching.end());
    DimerConfiguration d{lattice, std::move(matching)};
    if (!d.is_perfect()) throw Error(ErrorCode::InvalidArgument, "matching is not a perfect matching of the lattice");
    return d;
  });
}

Profile parse_profile(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw Error(ErrorCode::InvalidArgument, "empty profile");
  if (text[first] != '[' && text[first] != '{') return Profile::builtin(text);
  return guarded("profile", [&] {
    const Json doc = Json::parse(text);
    const Json& arr = doc.is_object() ? doc.at("segments") : doc;
    std::vector<ProfileSegment> segs;
    for (const auto& s : arr)
      segs.push_back({s.at("u_start").get<double>(), s.at("u_end").get<double>(), s.at("slope").get<double>(),
                      s.at("intercept").get<double>()});
    return Profile::make(std::move(segs));
  });
}

Json profile_to_json(const Profile& p) {
  Json segs = Json::array();
  for (const auto& s : p.segments())
    segs.push_back({{"u_start", s.u_start}, {"u_end", s.u_end}, {"slope", s.slope}, {"intercept", s.intercept}});
  return Json{{"segments", segs}};
}

}  // namespace lht

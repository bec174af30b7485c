#include <doctest.h>

#include <regex>

#include "lht/cftp.hpp"
#include "lht/error.hpp"
#include "lht/io.hpp"
#include "lht/render.hpp"

using namespace lht;

namespace {

LectureHallTableau intro() { return LectureHallTableau::make(Partition::make({2, 2}), 3, {{5, 6}, {2, 3}}); }

std::size_t count(const std::string& s, const std::string& what) {
  std::size_t k = 0;
  for (auto pos = s.find(what); pos != std::string::npos; pos = s.find(what, pos + 1)) ++k;
  return k;
}

std::string layer(const std::string& svg, const std::string& id) {
  const auto start = svg.find("<g id=\"" + id + "\"");
  if (start == std::string::npos) return {};
  return svg.substr(start, svg.find("</g>", start) - start);
}

}  // namespace

TEST_CASE("json round trips") {
  const auto T = intro();
  const Json doc = tableau_to_json(T);
  CHECK(doc.dump() == R"({"n":2,"t":3,"lambda":[2,2],"rows":[[5,6],[2,3]]})");
  CHECK(tableau_from_json(doc) == T);
  const PathSystem ps = tableau_to_paths(T);
  CHECK(paths_from_json(paths_to_json(ps)) == ps);
  const DualPathSystem dps = paths_to_dual(ps);
  CHECK(dual_paths_from_json(dual_paths_to_json(dps)) == dps);
  const DimerConfiguration d = paths_to_dimers(ps);
  CHECK(dimers_from_json(dimers_to_json(d)).matching == d.matching);
}

TEST_CASE("bad documents are domain errors") {
  CHECK_THROWS_AS(tableau_from_json(Json::parse(R"({"n":2,"t":3,"lambda":[2,2],"rows":[[6,6],[2,3]]})")), Error);
  CHECK_THROWS_AS(tableau_from_json(Json::parse(R"({"n":3,"t":3,"lambda":[2,2],"rows":[[5,6],[2,3]]})")), Error);
  CHECK_THROWS_AS(tableau_from_json(Json::parse(R"({"t":3})")), Error);
  CHECK_THROWS_AS(dimers_from_json(Json::parse(R"({"n":2,"t":3,"lambda":[2,2],"matching":[0]})")), Error);
}

TEST_CASE("profiles from names and segment lists") {
  CHECK(parse_profile("square").at_zero() == doctest::Approx(2));
  CHECK(parse_profile("square-3").at_zero() == doctest::Approx(3));
  const Profile p = parse_profile(R"([{"u_start":0,"u_end":1,"slope":-1,"intercept":4},{"u_start":1,"u_end":2,"slope":-2,"intercept":4}])");
  CHECK(p.segments().size() == 2);
  CHECK(parse_profile(profile_to_json(p).dump()).domain_end() == doctest::Approx(2));
  CHECK_THROWS_AS(parse_profile("[{\"u_start\":0}]"), Error);
}

TEST_CASE("two-path picture of [[5,6],[2,3]]") {
  RenderSpec spec;
  const std::string svg = render(tableau_to_paths(intro()), spec);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  const std::string paths = layer(svg, "paths");
  REQUIRE(count(paths, "<polyline") == 2);
  const std::regex poly("points=\"([^\"]*)\"");
  std::vector<std::size_t> sizes;
  for (std::sregex_iterator it(paths.begin(), paths.end(), poly), end; it != end; ++it)
    sizes.push_back(count((*it)[1].str(), ",") );
  CHECK(sizes == std::vector<std::size_t>{12, 8});
  CHECK(svg == render(tableau_to_paths(intro()), spec));
}

TEST_CASE("curve overlay on a square sample") {
  const int n = 24;
  const Partition shape = Partition::make(std::vector<int>(n, n));
  RenderSpec spec;
  spec.rescale = true;
  spec.overlay = CurveOverlay{Profile::square(2), 1.0, 100};
  const std::string svg = render(tableau_to_paths(cftp_sample(shape, n, 5)), spec);
  CHECK(count(layer(svg, "paths"), "<polyline") == n);
  CHECK(count(layer(svg, "curve"), "data-branch=\"first-path\"") == 1);
}

TEST_CASE("an empty shape draws only the skeleton") {
  const Partition shape = Partition::make({0, 0});
  const auto T = LectureHallTableau::make(shape, 2, {{}, {}});
  const std::string svg = render(tableau_to_paths(T), RenderSpec{});
  CHECK_FALSE(layer(svg, "skeleton").empty());
  CHECK(layer(svg, "paths").empty());
}

TEST_CASE("other scenes") {
  const PathSystem ps = tableau_to_paths(intro());
  RenderSpec spec;
  spec.scene = SceneKind::Dimers;
  const std::string d = render(paths_to_dimers(ps), spec);
  CHECK(count(layer(d, "dimers"), "<line") == paths_to_dimers(ps).matching.size());
  spec.scene = SceneKind::Height;
  CHECK(count(layer(render(height_function(ps), spec), "height"), "<rect") == 3 + 6 + 9);
  spec.scene = SceneKind::DualPaths;
  CHECK(count(layer(render(paths_to_dual(ps), spec), "dual-paths"), "<polyline") == 2);
  CHECK(render_curve({Profile::empty_cusp(), 1.0, 50}).find("empty-freezing") != std::string::npos);
}

TEST_CASE("render preconditions") {
  RenderSpec spec;
  spec.scene = SceneKind::Dimers;
  try {
    render(tableau_to_paths(intro()), spec);
    FAIL("expected MismatchedScene");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MismatchedScene);
  }
  RenderSpec bad;
  bad.overlay = CurveOverlay{Profile::square(2), 1.0, 10};
  CHECK_THROWS_AS(render(tableau_to_paths(intro()), bad), Error);
  bad.overlay.reset();
  bad.width = 0;
  CHECK_THROWS_AS(render(tableau_to_paths(intro()), bad), Error);
}

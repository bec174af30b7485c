#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include "lht/arctic.hpp"
#include "lht/burgers.hpp"
#include "lht/cftp.hpp"
#include "lht/counting.hpp"
#include "lht/dimer.hpp"
#include "lht/error.hpp"
#include "lht/io.hpp"
#include "lht/lattice.hpp"
#include "lht/render.hpp"
#include "lht/verify.hpp"

using namespace lht;

namespace {

// Top-level keys set global flags; an object under a subcommand name sets that subcommand's flags.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool, std::string) const override { return "{}"; }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    Json doc;
    try {
      doc = Json::parse(input);
    } catch (const nlohmann::json::exception& e) {
      throw CLI::ConversionError(std::string("config file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw CLI::ConversionError("config file must hold a JSON object");
    std::vector<CLI::ConfigItem> items;
    walk(doc, {}, items);
    return items;
  }

 private:
  static std::string scalar(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
  }

  static void walk(const Json& obj, std::vector<std::string> parents, std::vector<CLI::ConfigItem>& items) {
    for (const auto& [key, value] : obj.items()) {
      if (value.is_object()) {
        auto next = parents;
        next.push_back(key);
        walk(value, next, items);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_array()) {
        std::string joined;
        for (std::size_t i = 0; i < value.size(); ++i) joined += (i ? "," : "") + scalar(value[i]);
        item.inputs = {joined};
      } else {
        item.inputs = {scalar(value)};
      }
      items.push_back(std::move(item));
    }
  }
};

struct Globals {
  bool json = false;
  std::uint64_t seed = 0;
};

struct ShapeArgs {
  std::string lambda;
  int n = 0;
  int t = 1;

  void add(CLI::App* app, bool need_t = true) {
    app->add_option("--lambda", lambda, "partition as comma-separated parts, e.g. 3,2,1");
    app->add_option("--n", n, "number of rows; pads lambda with zeros")->check(CLI::NonNegativeNumber);
    auto* opt = app->add_option("--t", t, "bound parameter")->check(CLI::PositiveNumber);
    if (need_t) opt->required();
  }

  Partition shape() const {
    std::vector<int> parts;
    if (lambda.find_first_not_of(" ") != std::string::npos) parts = parse_int_list(lambda);
    if (n > 0) {
      if (static_cast<int>(parts.size()) > n)
        throw Error(ErrorCode::ShapeMismatch, "lambda has more than n = " + std::to_string(n) + " parts");
      parts.resize(n, 0);
    }
    if (parts.empty()) throw Error(ErrorCode::EmptyPartition, "give --lambda or --n");
    return Partition::make(parts);
  }
};

std::vector<int> as_vector(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string read_input(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
    ss << in.rdbuf();
  }
  return ss.str();
}

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

// ---- count

struct CountCmd {
  ShapeArgs shape;
  std::string method = "auto";

  void add(CLI::App& app) {
    auto* sub = app.add_subcommand("count", "number of bounded lecture hall tableaux");
    sub->configurable();
    shape.add(sub);
    sub->add_option("--method", method, "auto | formula | lgv | enumerate | kasteleyn | all")
        ->check(CLI::IsMember({"auto", "formula", "lgv", "enumerate", "kasteleyn", "all"}));
    sub->callback([this] { cmd_ = true; });
  }
  bool cmd_ = false;

  int run(const Globals& g) {
    const Partition p = shape.shape();
    std::vector<std::pair<std::string, BigCount>> results;
    const bool all = method == "all";
    if (method == "auto" || all || method == "formula") results.emplace_back("formula", count_blht(p, shape.t));
    if (method == "auto" || all || method == "lgv") results.emplace_back("lgv", count_via_lgv(p, shape.t));
    if (all || method == "kasteleyn") results.emplace_back("kasteleyn", kasteleyn_determinant(kasteleyn_matrix(p, shape.t)));
    if (all || method == "enumerate") {
      unsigned long k = 0;
      enumerate_blht(p, shape.t, [&](const LectureHallTableau&) { ++k; return true; });
      results.emplace_back("enumerate", BigCount(k));
    }
    for (const auto& r : results)
      if (r.second != results.front().second)
        throw Error(ErrorCode::NonIntegerResult, "methods disagree: " + results.front().first + " gives " +
                                                     results.front().second.get_str() + ", " + r.first + " gives " +
                                                     r.second.get_str());
    std::vector<std::string> names;
    for (const auto& r : results) names.push_back(r.first);
    if (g.json) {
      Json doc{{"lambda", as_vector(p)}, {"n", p.n()}, {"t", shape.t}, {"count", results.front().second.get_str()},
               {"methods", names}};
      std::cout << doc.dump() << '\n';
    } else {
      std::cout << results.front().second.get_str() << '\n' << "methods:";
      for (const auto& n : names) std::cout << ' ' << n;
      std::cout << '\n';
    }
    return 0;
  }
};

// ---- enumerate

struct EnumerateCmd {
  ShapeArgs shape;
  std::uint64_t cap = 10'000'000;
  std::uint64_t limit = 0;
  std::string out;
  bool cmd_ = false;

  void add(CLI::App& app) {
    auto* sub = app.add_subcommand("enumerate", "list every tableau in row-major lexicographic order");
    sub->configurable();
    shape.add(sub);
    sub->add_option("--cap", cap, "refuse shapes with more tableaux than this");
    sub->add_option("--limit", limit, "stop after this many tableaux (0: all)");
    sub->add_option("--out", out, "output file (default stdout)");
    sub->callback([this] { cmd_ = true; });
  }

  int run(const Globals& g) {
    const Partition p = shape.shape();
    Output o(out);
    std::uint64_t k = 0;
    enumerate_blht(
        p, shape.t,
        [&](const LectureHallTableau& T) {
          if (g.json) {
            o.os() << tableau_to_json(T).dump() << '\n';
          } else {
            const auto rows = T.rows();
            for (std::size_t r = 0; r < rows.size(); ++r) {
              if (r) o.os() << " | ";
              for (std::size_t c = 0; c < rows[r].size(); ++c) o.os() << (c ? " " : "") << rows[r][c];
            }
            o.os() << '\n';
          }
          return limit == 0 || ++k < limit;
        },
        EnumerationOptions{cap});
    return 0;
  }
};

// ---- sample

struct SampleCmd {
  ShapeArgs shape;
  std::size_t count = 1;
  unsigned workers = 1;
  std::string mode = "exact";
  std::int64_t tolerance = 1;
  std::uint64_t max_steps = std::uint64_t{1} << 30;
  std::uint64_t initial_horizon = 1;
  std::string out;
  bool cmd_ = false;

  void add(CLI::App& app) {
    auto* sub = app.add_subcommand("sample", "uniform random tableaux by coupling from the past");
    sub->configurable();
    shape.add(sub);
    sub->add_option("--count", count, "number of samples")->check(CLI::PositiveNumber);
    sub->add_option("--workers", workers, "worker threads (0: all cores)");
    sub->add_option("--mode", mode, "exact | approx")->check(CLI::IsMember({"exact", "approx"}));
    sub->add_option("--tolerance", tolerance, "approx mode: largest cellwise gap accepted")->check(CLI::NonNegativeNumber);
    sub->add_option("--max-steps", max_steps, "give up beyond this horizon");
    sub->add_option("--initial-horizon", initial_horizon, "first horizon of the doubling sequence")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", out, "JSON lines file (default stdout)");
    sub->callback([this] { cmd_ = true; });
  }

  int run(const Globals& g) {
    const Partition p = shape.shape();
    CftpOptions options;
    options.mode = mode == "exact" ? CftpMode::Exact : CftpMode::Approx;
    options.approx_tolerance = tolerance;
    options.max_steps = max_steps;
    options.initial_horizon = initial_horizon;
    const auto results = sample_many(p, shape.t, g.seed, count, workers ? workers : default_workers(), options);
    Output o(out);
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& r = results[i];
      if (!is_valid_blht(r.sample.rows(), p, shape.t))
        throw Error(ErrorCode::InvalidTableau, "sample " + std::to_string(i) + " failed re-validation");
      Json doc = tableau_to_json(r.sample);
      if (g.json) {
        doc["index"] = i;
        doc["seed"] = derive_seed(g.seed, i);
        doc["horizon"] = r.horizon;
        doc["exact"] = r.exact;
      }
      o.os() << doc.dump() << '\n';
    }
    return 0;
  }
};

// ---- curve

struct CurveCmd {
  std::string profile = "square";
  double tau = 1;
  int resolution = 200;
  std::string format = "csv";
  int width = 800, height = 800;
  std::string out;
  bool cmd_ = false;

  void add(CLI::App& app) {
    auto* sub = app.add_subcommand("curve", "arctic curve from the tangent method");
    sub->configurable();
    sub->add_option("--profile", profile, "built-in name or JSON segment list");
    sub->add_option("--tau", tau, "t / n")->check(CLI::PositiveNumber);
    sub->add_option("--resolution", resolution, "points per branch")->check(CLI::Range(2, 10'000'000));
    sub->add_option("--format", format, "csv | svg")->check(CLI::IsMember({"csv", "svg"}));
    sub->add_option("--width", width)->check(CLI::PositiveNumber);
    sub->add_option("--height", height)->check(CLI::PositiveNumber);
    sub->add_option("--out", out, "output file (default stdout)");
    sub->callback([this] { cmd_ = true; });
  }

  int run(const Globals& g) {
    const Profile prof = parse_profile(profile);
    Output o(out);
    if (format == "svg") {
      o.os() << render_curve({prof, tau, resolution}, width, height);
      return 0;
    }
    const auto lines = sample_curve(prof, tau, resolution);
    std::map<BranchKind, int> seen, total;
    for (const auto& pl : lines) ++total[pl.branch.kind];
    auto branch_id = [&](const CurveBranch& b) {
      const std::string name = branch_name(b.kind);
      const int k = seen[b.kind]++;
      return total[b.kind] > 1 ? name + "-" + std::to_string(k + 1) : name;
    };
    if (g.json) {
      Json branches = Json::array();
      for (const auto& pl : lines) {
        Json pts = Json::array();
        for (std::size_t i = 0; i < pl.points.size(); ++i)
          pts.push_back({number_or_null(pl.params[i]), pl.points[i].X, pl.points[i].Y});
        branches.push_back({{"branch_id", branch_id(pl.branch)},
                            {"kind", branch_name(pl.branch.kind)},
                            {"x_lo", number_or_null(pl.branch.x_lo)},
                            {"x_hi", number_or_null(pl.branch.x_hi)},
                            {"principal_value", pl.branch.principal_value},
                            {"overlaps", pl.branch.overlaps},
                            {"points", pts}});
      }
      o.os() << Json{{"profile", profile_to_json(prof)}, {"tau", tau}, {"branches", branches}}.dump() << '\n';
      return 0;
    }
    o.os() << "branch_id,x,X,Y\n";
    for (const auto& pl : lines) {
      const std::string id = branch_id(pl.branch);
      for (std::size_t i = 0; i < pl.points.size(); ++i)
        o.os() << id << ',' << fmt(pl.params[i]) << ',' << fmt(pl.points[i].X) << ',' << fmt(pl.points[i].Y) << '\n';
    }
    return 0;
  }
};

// ---- dimer

struct DimerCmd {
  ShapeArgs shape;
  std::vector<std::string> checks;
  std::string edge_prob;
  std::size_t exact_limit = EdgeProbabilityOptions{}.exact_limit;
  bool cmd_ = false;

  void add(CLI::App& app) {
    auto* sub = app.add_subcommand("dimer", "Kasteleyn matrix checks and edge probabilities");
    sub->configurable();
    shape.add(sub);
    sub->add_option("--check", checks, "det | faces | inverse (repeatable)")
        ->check(CLI::IsMember({"det", "faces", "inverse"}))
        ->delimiter(',');
    sub->add_option("--edge-prob", edge_prob, "\"w,b;w,b\": probability that all listed edges are dimers");
    sub->add_option("--exact-limit", exact_limit, "largest matrix solved in exact arithmetic");
    sub->callback([this] { cmd_ = true; });
  }

  static std::vector<EdgeRef> parse_edges(const std::string& text) {
    std::vector<EdgeRef> out;
    std::stringstream ss(text);
    std::string pair;
    while (std::getline(ss, pair, ';')) {
      if (pair.find_first_not_of(" ") == std::string::npos) continue;
      const auto v = parse_int_list(pair);
      if (v.size() != 2 || v[0] < 0 || v[1] < 0)
        throw Error(ErrorCode::InvalidArgument, "edges are given as white,black index pairs");
      out.push_back({static_cast<std::size_t>(v[0]), static_cast<std::size_t>(v[1])});
    }
    return out;
  }

  int run(const Globals& g) {
    const Partition p = shape.shape();
    const KasteleynMatrix K = kasteleyn_matrix(p, shape.t);
    if (checks.empty() && edge_prob.empty()) checks = {"det"};
    Json doc{{"lambda", as_vector(p)}, {"t", shape.t}, {"dimension", K.size()}};
    bool ok = true;
    std::ostringstream text;
    for (const auto& c : checks) {
      if (c == "det") {
        const BigCount det = kasteleyn_determinant(K), count = count_blht(p, shape.t);
        ok = ok && det == count;
        doc["det"] = {{"abs_det", det.get_str()}, {"count", count.get_str()}, {"equal", det == count}};
        text << "|det K| = " << det << ", tableaux = " << count << (det == count ? " (equal)" : " (DIFFERENT)") << '\n';
      } else if (c == "faces") {
        const auto r = check_face_signs(K);
        ok = ok && r.violations.empty();
        doc["faces"] = {{"faces", r.faces}, {"hexagons", r.hexagons}, {"octagons", r.octagons},
                        {"violations", r.violations}};
        text << r.faces << " bounded faces (" << r.hexagons << " hexagons, " << r.octagons << " octagons), "
             << r.violations.size() << " sign violations\n";
      } else {
        const RationalMatrix inv = inverse_exact(K);
        std::size_t bad = 0;
        const auto& edges = K.lattice->edges();
        for (std::size_t b = 0; b < K.size(); ++b)
          for (std::size_t b2 = 0; b2 < K.size(); ++b2) {
            mpq_class s = 0;
            for (std::size_t e : K.lattice->black_edges(b)) s += K.sign[e] * inv[edges[e].white][b2];
            if (s != (b == b2 ? 1 : 0)) ++bad;
          }
        ok = ok && bad == 0;
        doc["inverse"] = {{"failures", bad}};
        text << "K * K^-1 = I: " << (bad == 0 ? "exact" : std::to_string(bad) + " wrong entries") << '\n';
      }
    }
    if (!edge_prob.empty()) {
      const auto edges = parse_edges(edge_prob);
      const auto r = edge_probability(K, edges, EdgeProbabilityOptions{exact_limit});
      Json e{{"value", r.value}, {"exact", r.exact}};
      if (r.rational) e["rational"] = r.rational->get_str();
      if (!r.exact) {
        e["rcond"] = r.rcond;
        e["ill_conditioned"] = r.ill_conditioned;
      }
      doc["edge_probability"] = e;
      text << "P = " << fmt(r.value);
      if (r.rational) text << " = " << r.rational->get_str();
      if (r.ill_conditioned) text << " (ill-conditioned, rcond " << r.rcond << ")";
      text << '\n';
    }
    if (g.json) std::cout << doc.dump() << '\n';
    else std::cout << text.str();
    if (!ok) std::cerr << "lhl: a Kasteleyn check failed\n";
    return ok ? 0 : 1;
  }
};

// ---- burgers

Partition burgers_shape(const BurgersId& id, int n) {
  std::vector<int> parts(n);
  for (int i = 0; i < n; ++i) {
    switch (id.example) {
      case BurgersExample::Staircase: parts[i] = n - i; break;
      case BurgersExample::Square: parts[i] = n; break;
      case BurgersExample::SquareP: parts[i] = (id.p - 1) * n; break;
    }
  }
  return Partition::make(parts);
}

struct BurgersCmd {
  std::string example = "square";
  int p = 2;
  int grid = 32;
  std::string out;
  int hausdorff = 0;
  std::size_t conjecture_samples = 0;
  int conjecture_n = 20;
  int conjecture_grid = 16;
  int arg_shift = 0;
  unsigned workers = 0;
  bool cmd_ = false;

  void add(CLI::App& app) {
    auto* sub = app.add_subcommand("burgers", "complex Burgers solutions on a grid");
    sub->configurable();
    sub->add_option("--example", example, "staircase | square | square-p")
        ->check(CLI::IsMember({"staircase", "square", "square-p"}));
    sub->add_option("--p", p, "width of square-p")->check(CLI::Range(2, 1000));
    sub->add_option("--grid", grid, "grid points per axis")->check(CLI::PositiveNumber);
    sub->add_option("--out", out, "CSV file (default stdout)");
    sub->add_option("--hausdorff", hausdorff, "also report the distance to the arctic curve at this resolution");
    sub->add_option("--conjecture-samples", conjecture_samples, "height-gradient comparison from this many samples");
    sub->add_option("--conjecture-n", conjecture_n, "rows of the sampled shapes")->check(CLI::PositiveNumber);
    sub->add_option("--conjecture-grid", conjecture_grid)->check(CLI::PositiveNumber);
    sub->add_option("--arg-shift", arg_shift, "branch of arg(u): multiples of 2 added to arg(u)/pi");
    sub->add_option("--workers", workers, "worker threads for sampling (0: all cores)");
    sub->callback([this] { cmd_ = true; });
  }

  int run(const Globals& g) {
    const BurgersId id = BurgersId::parse(example, p);
    Output o(out);
    if (conjecture_samples > 0) return conjecture(g, id, o);
    double worst = 0, worst_char = 0;
    std::size_t liquid = 0;
    if (!g.json) o.os() << "x,y,discriminant,liquid,re_u,im_u,residual\n";
    for (int i = 0; i < grid; ++i)
      for (int j = 0; j < grid; ++j) {
        const double x = id.width() * (i + 0.5) / grid, y = (j + 0.5) / grid;
        const double D = burgers_discriminant(id, x, y);
        const bool liq = D < 0;
        const auto u = burgers_solution(id, x, y);
        std::string res;
        if (liq) {
          ++liquid;
          const double r = burgers_residual(id, x, y);
          worst = std::max(worst, r);
          worst_char = std::max(worst_char, characteristic_residual(id, x, y));
          res = fmt(r);
        }
        if (!g.json)
          o.os() << fmt(x) << ',' << fmt(y) << ',' << fmt(D) << ',' << (liq ? 1 : 0) << ',' << fmt(u.real()) << ','
                 << fmt(u.imag()) << ',' << res << '\n';
      }
    if (g.json) {
      Json doc{{"example", id.name()}, {"grid", grid}, {"liquid_points", liquid}, {"max_residual", worst},
               {"max_characteristic_residual", worst_char}};
      if (hausdorff > 0) doc["hausdorff"] = hausdorff_to_arctic(id, 1.0, hausdorff);
      o.os() << doc.dump() << '\n';
    } else if (hausdorff > 0) {
      std::cerr << "hausdorff distance to the arctic curve: " << fmt(hausdorff_to_arctic(id, 1.0, hausdorff)) << '\n';
    }
    return 0;
  }

  int conjecture(const Globals& g, const BurgersId& id, Output& o) {
    const Partition shape = burgers_shape(id, conjecture_n);
    const auto results = sample_many(shape, conjecture_n, g.seed, conjecture_samples, workers ? workers : default_workers());
    std::vector<PathSystem> samples;
    for (const auto& r : results) samples.push_back(tableau_to_paths(r.sample));
    const auto rep = conjecture_height_check(samples, id, conjecture_grid, arg_shift);
    if (g.json) {
      Json pts = Json::array();
      for (const auto& q : rep.points)
        pts.push_back({{"x", q.x}, {"y", q.y}, {"height", q.height}, {"dh_dx", q.dh_dx}, {"dh_dy", q.dh_dy},
                       {"liquid", q.liquid}, {"im_u_over_pi", q.im_over_pi}, {"arg_u_over_pi_minus_1", q.arg_over_pi_minus_1}});
      o.os() << Json{{"example", rep.example}, {"samples", rep.samples}, {"n", rep.n}, {"grid", rep.grid},
                     {"arg_shift", rep.arg_shift}, {"liquid_points", rep.liquid_points}, {"corr_im", rep.corr_im},
                     {"corr_arg", rep.corr_arg}, {"mean_abs_im", rep.mean_abs_im}, {"mean_abs_arg", rep.mean_abs_arg},
                     {"points", pts}}
                    .dump()
             << '\n';
      return 0;
    }
    o.os() << "x,y,height,dh_dx,dh_dy,liquid,im_u_over_pi,arg_u_over_pi_minus_1\n";
    for (const auto& q : rep.points)
      o.os() << fmt(q.x) << ',' << fmt(q.y) << ',' << fmt(q.height) << ',' << fmt(q.dh_dx) << ',' << fmt(q.dh_dy) << ','
             << (q.liquid ? 1 : 0) << ',' << fmt(q.im_over_pi) << ',' << fmt(q.arg_over_pi_minus_1) << '\n';
    std::cerr << "exploratory: " << rep.liquid_points << " liquid points, corr(dh/dx, Im u/pi) = " << fmt(rep.corr_im)
              << ", corr(dh/dy, arg u/pi - 1) = " << fmt(rep.corr_arg) << '\n';
    return 0;
  }
};

// ---- render

struct RenderCmd {
  std::string scene = "paths";
  std::string input;
  ShapeArgs shape;
  std::string overlay;
  double tau = 0;
  bool rescale = false;
  int width = 800, height = 800;
  std::size_t index = 0;
  std::string out;
  bool cmd_ = false;

  void add(CLI::App& app) {
    auto* sub = app.add_subcommand("render", "SVG picture of a configuration");
    sub->configurable();
    sub->add_option("--scene", scene, "paths | dual-paths | dimers | height")
        ->check(CLI::IsMember({"paths", "dual-paths", "dimers", "height"}));
    auto* in = sub->add_option("--input", input, "tableau, paths, dual-paths or dimers JSON document (- for stdin)");
    shape.add(sub, false);
    sub->add_option("--index", index, "which line of a JSON lines input to draw");
    auto* rs = sub->add_flag("--rescale", rescale, "divide coordinates by n");
    sub->add_option("--overlay", overlay, "profile of the arctic curve drawn on top")->needs(rs);
    sub->add_option("--tau", tau, "overlay tau (default t / n)");
    sub->add_option("--width", width)->check(CLI::PositiveNumber);
    sub->add_option("--height", height)->check(CLI::PositiveNumber);
    sub->add_option("--out", out, "SVG file (default stdout)");
    sub->callback([this, in] {
      cmd_ = true;
      if (in->count() == 0 && shape.lambda.empty() && shape.n == 0)
        throw CLI::ValidationError("render", "give --input or --lambda/--t to draw a fresh sample");
    });
  }

  Json load() const {
    const std::string text = read_input(input);
    if (index == 0 && Json::accept(text)) return Json::parse(text);
    std::stringstream ss(text);
    std::string line;
    std::size_t k = 0;
    while (std::getline(ss, line)) {
      if (line.find_first_not_of(" \r") == std::string::npos) continue;
      if (k++ != index) continue;
      if (!Json::accept(line)) throw Error(ErrorCode::InvalidArgument, "input line " + std::to_string(index) + " is not JSON");
      return Json::parse(line);
    }
    throw Error(ErrorCode::InvalidArgument, "input has no document " + std::to_string(index));
  }

  int run(const Globals& g) {
    std::optional<PathSystem> ps;
    std::optional<DimerConfiguration> dimers;
    std::optional<DualPathSystem> dual;
    if (!input.empty()) {
      const Json doc = load();
      if (doc.contains("rows")) ps = tableau_to_paths(tableau_from_json(doc));
      else if (doc.contains("matching")) dimers = dimers_from_json(doc);
      else if (doc.contains("m")) dual = dual_paths_from_json(doc);
      else if (doc.contains("paths")) ps = paths_from_json(doc);
      else throw Error(ErrorCode::InvalidArgument, "unrecognised input document");
      if (dual) ps = dual_to_paths(*dual);
    } else {
      ps = tableau_to_paths(cftp_sample(shape.shape(), shape.t, g.seed));
    }
    RenderSpec spec;
    spec.scene = parse_scene(scene);
    spec.width = width;
    spec.height = height;
    spec.rescale = rescale;
    const int n = ps ? ps->n : dimers->lattice->shape().n();
    const int t = ps ? ps->t : dimers->lattice->t();
    if (!overlay.empty()) spec.overlay = CurveOverlay{parse_profile(overlay), tau > 0 ? tau : static_cast<double>(t) / n};

    SceneData data = PathSystem{};
    switch (spec.scene) {
      case SceneKind::Paths:
        if (!ps) throw Error(ErrorCode::MismatchedScene, "a dimer document cannot be drawn as paths");
        data = *ps;
        break;
      case SceneKind::DualPaths:
        if (!ps) throw Error(ErrorCode::MismatchedScene, "a dimer document cannot be drawn as dual paths");
        data = dual ? *dual : paths_to_dual(*ps);
        break;
      case SceneKind::Dimers:
        data = dimers ? *dimers : paths_to_dimers(*ps);
        break;
      case SceneKind::Height:
        if (!ps) throw Error(ErrorCode::MismatchedScene, "a dimer document cannot be drawn as a height function");
        data = height_function(*ps);
        break;
    }
    Output o(out);
    o.os() << render(data, spec);
    return 0;
  }
};

// ---- verify

struct VerifyCmd {
  std::string suite = "oracles";
  int max_cells = 6;
  std::vector<int> criteria;
  unsigned workers = 0;
  bool cmd_ = false;

  void add(CLI::App& app) {
    auto* sub = app.add_subcommand("verify", "run the self-checks");
    sub->configurable();
    sub->add_option("--suite", suite, "oracles | acceptance")->check(CLI::IsMember({"oracles", "acceptance"}));
    sub->add_option("--max-cells", max_cells, "oracle suite: largest |lambda|")->check(CLI::Range(0, 12));
    sub->add_option("--criteria", criteria, "acceptance suite: only these ids")->delimiter(',')->check(CLI::Range(1, kCriteria));
    sub->add_option("--workers", workers, "threads for sampling checks (0: all cores)");
    sub->callback([this] { cmd_ = true; });
  }

  int run(const Globals& g) {
    VerifyOptions options;
    options.seed = g.seed;
    options.workers = workers;
    options.max_cells = max_cells;
    auto print = [&](const CheckResult& r) {
      if (g.json) {
        std::cout << Json{{"suite", suite}, {"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail},
                          {"seconds", r.seconds}}
                         .dump()
                  << std::endl;
      } else {
        std::printf("%-10s %2d %s: %s (%.1fs) %s\n", suite.c_str(), r.id, r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.seconds, r.detail.c_str());
        std::fflush(stdout);
      }
    };
    std::vector<CheckResult> results;
    if (suite == "oracles") {
      results = run_oracles(options, print);
    } else if (criteria.empty()) {
      results = run_acceptance(options, print);
    } else {
      for (int id : criteria) {
        results.push_back(run_criterion(id, options));
        print(results.back());
      }
    }
    for (const auto& r : results)
      if (!r.passed) return 1;
    return 0;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded lecture hall tableaux: counting, sampling, arctic curves, dimers."};
  app.name("lhl");
  app.require_subcommand(1);
  app.fallthrough();
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON file mirroring the command-line flags");

  Globals g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--seed", g.seed, "random seed")->envname("LHL_SEED");

  CountCmd count;
  EnumerateCmd enumerate;
  SampleCmd sample;
  CurveCmd curve;
  DimerCmd dimer;
  BurgersCmd burgers;
  RenderCmd render_cmd;
  VerifyCmd verify;
  count.add(app);
  enumerate.add(app);
  sample.add(app);
  curve.add(app);
  dimer.add(app);
  burgers.add(app);
  render_cmd.add(app);
  verify.add(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (count.cmd_) return count.run(g);
    if (enumerate.cmd_) return enumerate.run(g);
    if (sample.cmd_) return sample.run(g);
    if (curve.cmd_) return curve.run(g);
    if (dimer.cmd_) return dimer.run(g);
    if (burgers.cmd_) return burgers.run(g);
    if (render_cmd.cmd_) return render_cmd.run(g);
    if (verify.cmd_) return verify.run(g);
  } catch (const Error& e) {
    std::cerr << "lhl: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "lhl: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

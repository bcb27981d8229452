#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

#include "curvelab/cli.hpp"
#include "curvelab/errors.hpp"
#include "curvelab/io.hpp"
#include "curvelab/svg.hpp"

using namespace curvelab;
using namespace curvelab::test;
using doctest::Approx;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir() {
  const fs::path d = fs::temp_directory_path() / ("curvelab_cli_io_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("parse_curve_spec examples") {
  const CurveSpec a = parse_curve_spec(R"({"kind":"support","constant":40,"cos":{"3":3},"sin":{"2":-1},"rotation":1})");
  const auto& oa = std::get<SupportCurve>(a.curve);
  CHECK(oa == oval());
  CHECK(oa.closure_period() == Approx(2 * kPi));

  const CurveSpec b = parse_curve_spec(R"({"kind":"support","sin":{"5":1},"half_harmonics":true,"rotation":2.5})");
  const auto& sb = std::get<SupportCurve>(b.curve);
  CHECK(sb.closure_period() == Approx(4 * kPi));
  CHECK(sb.rotation() == 2.5);
  for (double t : {0.3, 1.7}) CHECK(sb.support()(t) == Approx(std::sin(2.5 * t)));

  const CurveSpec c = parse_curve_spec(R"({"kind":"parametric","x":{"poly":[0,0,1]},"y":{"poly":[0,0,0,1]},"domain":[-1,1]})");
  const auto& pc = std::get<ParamCurve>(c.curve);
  CHECK(pc == model_cusp());
}

TEST_CASE("parse_curve_spec rejects malformed input with a field path") {
  const auto field_of = [](const std::string& text) {
    try {
      parse_curve_spec(text);
    } catch (const SpecError& e) {
      return e.field();
    }
    return std::string("<accepted>");
  };
  CHECK(field_of(R"({"kind":"support","constant":1,"colour":2})") == "/colour");
  CHECK(field_of(R"({"kind":"support","cos":{"x":1}})").rfind("/cos", 0) == 0);
  CHECK(field_of(R"({"kind":"support","cos":{"3":"big"}})") == "/cos/3");
  CHECK(field_of(R"({"kind":"support","sin":{"5":1},"rotation":2.5})") != "<accepted>");
  CHECK(field_of(R"({"kind":"support","sin":{"4":1},"half_harmonics":true,"rotation":2})") != "<accepted>");
  CHECK(field_of(R"({"kind":"ellipse"})") == "/kind");
  CHECK(field_of(R"({"kind":"parametric","x":{"poly":[0,1]},"y":{"poly":[0,0,1]}})") == "/domain");
  CHECK(field_of(R"({"kind":"parametric","x":{"poly":[0,1],"tan":{}},"y":{"poly":[0]},"domain":[0,1]})") == "/x/tan");
  CHECK(field_of(R"({"kind":"parametric","x":{"poly":[0,1]},"y":{"poly":[0,0,1]},"domain":[0,1],"closed":true})") != "<accepted>");
  CHECK_THROWS_AS(parse_curve_spec("{not json"), SpecError);
  CHECK_THROWS_AS(parse_curve_spec("[1,2]"), SpecError);
  CHECK_THROWS_AS(load_curve_spec("/nonexistent/curve.json"), IoError);
}

TEST_CASE("curve specs survive a serialize/parse round trip") {
  for (const char* name : {"oval.json", "sin2_5.json", "fig6a.json", "bean.json", "model_cusp.json", "circle.json"}) {
    const CurveSpec a = load_curve_spec(data_path(name));
    const std::string text = serialize_curve_spec(a);
    const CurveSpec b = parse_curve_spec(text);
    CHECK(a.curve == b.curve);
    CHECK(a.name == b.name);
    CHECK(serialize_curve_spec(b) == text);
  }
}

TEST_CASE("parse_angle") {
  CHECK(parse_angle("pi/6") == Approx(kPi / 6).epsilon(1e-16));
  CHECK(parse_angle("3pi/4") == Approx(3 * kPi / 4).epsilon(1e-16));
  CHECK(parse_angle("3*pi/4") == Approx(3 * kPi / 4).epsilon(1e-16));
  CHECK(parse_angle("-2*pi") == Approx(-2 * kPi));
  CHECK(parse_angle("pi") == kPi);
  CHECK(parse_angle("0.25") == 0.25);
  CHECK(parse_angle("1e-3") == 1e-3);
  CHECK_THROWS_AS(parse_angle("pie"), SpecError);
  CHECK_THROWS_AS(parse_angle("pi/0"), SpecError);
  CHECK_THROWS_AS(parse_angle(""), SpecError);
}

TEST_CASE("number formatting is locale free and canonical") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1234567.891, 6) == "1.23457e+06");
  CHECK(format_fixed(-0.00001, 4) == "0.0000");
  CHECK(format_fixed(2.5, 2) == "2.50");
}

TEST_CASE("render_svg") {
  PlotScene one;
  one.layers.push_back({LayerStyle::base, {{{0, 0}, {1, 0}, {1, 1}}}, {}});
  const std::string s = render_svg(one);
  CHECK(count(s, "<path") == 1);
  CHECK(s == render_svg(one));
  CHECK(s.find("1.0000") != std::string::npos);

  PlotScene fig;
  fig.layers.push_back({LayerStyle::base, {{{0, 0}, {1, 0}}}, {}});
  fig.layers.push_back({LayerStyle::evolutoid, {{{0, 1}, {1, 1}}, {{2, 2}, {3, 3}}}, {}});
  fig.layers.push_back({LayerStyle::ses, {{{0, 2}, {1, 2}}}, {}});
  fig.layers.push_back({LayerStyle::marker, {}, {{{0.5, 0.5}, "cusp"}}});
  const std::string f = render_svg(fig);
  CHECK(count(f, "<path") == 3);
  const auto base = f.find("class=\"base\" d=");
  const auto family = f.find("class=\"evolutoid\" d=");
  const auto ses = f.find("class=\"ses\" d=");
  CHECK(base < family);
  CHECK(family < ses);
  CHECK(count(f, "<circle") == 1);
  CHECK(f.find("<title>cusp</title>") != std::string::npos);
  // two polylines in one layer become two subpaths of one path
  CHECK(count(f.substr(family, ses - family), "M ") == 2);

  const fs::path dir = scratch_dir();
  const fs::path target = dir / "empty.svg";
  fs::remove(target);
  CHECK_THROWS_AS(render_svg(PlotScene{}, target.string()), SpecError);
  CHECK_FALSE(fs::exists(target));
  PlotScene hollow;
  hollow.layers.push_back({LayerStyle::ses, {}, {}});
  CHECK_THROWS_AS(render_svg(hollow, target.string()), SpecError);
  CHECK_FALSE(fs::exists(target));
  CHECK_THROWS_AS(render_svg(one, (dir / "missing" / "x.svg").string()), IoError);
}

TEST_CASE("mesh_obj and sigma_csv") {
  const FrontMesh m = mesh_front(sin_k(2), 8, 16);
  const std::string obj = mesh_obj(m);
  CHECK(count(obj, "\nv ") == m.vertices.size() + [&] {
          std::size_t n = 0;
          for (const auto& l : m.sigma_polylines) n += l.size();
          return n + m.boundary_null_points.size();
        }());
  CHECK(count(obj, "\nvn ") == m.normals.size());
  CHECK(count(obj, "\nf ") == m.triangles.size());
  CHECK(obj.find("\no sigma\n") != std::string::npos);
  CHECK(obj.find("f 1//1 ") != std::string::npos);

  const auto marks = classify_sigma(extract_sigma(oval(), 64), oval());
  const std::string csv = sigma_csv(marks, oval());
  CHECK(csv.rfind("theta,alpha,x,y,kind\n", 0) == 0);
  CHECK(count(csv, "\n") == marks.size() + 1);
  CHECK(count(csv, ",swallowtail") == 6);
}

TEST_CASE("run: exit codes") {
  const fs::path dir = scratch_dir();
  const std::string circle = data_path("circle.json");
  const std::string oval = data_path("oval.json");

  const RunResult check = run_cli({"check", "--curve", circle});
  CHECK(check.code == 0);
  const auto report = nlohmann::json::parse(check.out);
  CHECK_FALSE(report["generic"].get<bool>());
  bool has_e = false;
  for (const auto& v : report["violations"]) has_e = has_e || v["check"] == "e";
  CHECK(has_e);

  const RunResult gb = run_cli({"gauss-bonnet", "--curve", oval, "--tol-residual", "1e-5",
                                "--report", (dir / "gb.json").string()});
  CHECK(gb.code == 0);
  const auto j = nlohmann::json::parse(slurp(dir / "gb.json"));
  CHECK(j["relative_residual"].get<double>() < 1e-5);
  CHECK(j["swallowtails"].size() == 6);
  for (const char* key : {"curve", "lhs", "rhs", "residual", "relative_residual", "boundary_null_points", "swallowtails"})
    CHECK(j.contains(key));
  CHECK(j["lhs"].contains("evals"));

  CHECK(run_cli({"gauss-bonnet", "--curve", oval, "--tol-residual", "1e-300"}).code == 3);

  const RunResult front = run_cli({"front", "--curve", circle, "--grid", "16,16", "--out", (dir / "c.obj").string()});
  CHECK(front.code == 2);
  const auto diag = nlohmann::json::parse(front.err);
  CHECK(diag["error"] == "DegenerateSingularSetError");
  CHECK(diag.contains("message"));
  CHECK(diag.contains("param"));
  CHECK(run_cli({"gauss-bonnet", "--curve", circle}).code == 2);

  CHECK(run_cli({"front", "--curve", data_path("model_cusp.json")}).code == 1);
  CHECK(run_cli({"front", "--curve", oval, "--grid", "4,16"}).code == 1);
  CHECK(run_cli({"evolutoid", "--curve", oval, "--alpha", "4"}).code == 1);
  CHECK(run_cli({"evolutoid", "--curve", "/nonexistent.json", "--alpha", "1"}).code == 1);
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"show", "--curve", oval}).code == 1);
  CHECK(run_cli({"show", "--curve", oval, "--what", "everything", "--out", (dir / "x.svg").string()}).code == 1);

  const RunResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("param,x,y,kind,rho_s1,rho_s2") != std::string::npos);
  CHECK(help.out.find("theta,alpha,x,y,kind") != std::string::npos);
}

TEST_CASE("run: outputs") {
  const fs::path dir = scratch_dir();
  const std::string oval = data_path("oval.json");

  const RunResult evo = run_cli({"evolutoid", "--curve", oval, "--alpha", "pi/6", "--singular"});
  CHECK(evo.code == 0);
  CHECK(evo.out.rfind("param,x,y,kind,rho_s1,rho_s2\n", 0) == 0);
  CHECK(count(evo.out, "\n") == 7);

  const RunResult ses = run_cli({"ses", "--curve", data_path("model_cusp.json"), "--samples", "16"});
  CHECK(ses.out.rfind("param,x,y,alpha\n", 0) == 0);
  CHECK(count(ses.out, "\n") == 18);

  const RunResult areas = run_cli({"areas", "--curve", oval, "--alpha", "pi/2"});
  const auto a = nlohmann::json::parse(areas.out);
  CHECK(a["oriented_area"].get<double>() == Approx(1562.5 * kPi));
  CHECK(a["cor24"]["gap"].get<double>() == Approx(330 * kPi));

  CHECK(run_cli({"show", "--curve", data_path("bean.json"), "--what", "family", "--alphas", "pi/4,pi/2",
                 "--asymptotes", "--out", (dir / "bean.svg").string()})
            .code == 0);
  const std::string svg = slurp(dir / "bean.svg");
  const auto base = svg.find("class=\"base\"");
  const auto family = svg.find("class=\"evolutoid\"");
  const auto ses_layer = svg.find("class=\"ses\"");
  CHECK(base < family);
  CHECK(family < ses_layer);
  CHECK(svg.find("class=\"asymptote\"") != std::string::npos);

  // a circle's singular evolutoids set still plots as its centre
  CHECK(run_cli({"show", "--curve", data_path("circle.json"), "--what", "ses", "--out", (dir / "c.svg").string()})
            .code == 0);
}

TEST_CASE("run: repeated runs are byte-identical") {
  const fs::path dir = scratch_dir();
  const std::string oval = data_path("oval.json");
  const std::vector<std::vector<std::string>> commands{
      {"show", "--curve", oval, "--what", "family", "--alphas", "pi/6,pi/2", "--out", "@.svg"},
      {"evolutoid", "--curve", oval, "--alpha", "pi/3", "--out", "@.csv"},
      {"ses", "--curve", oval, "--classify", "--out", "@.csv"},
      {"front", "--curve", data_path("sin3.json"), "--grid", "16,32", "--out", "@.obj", "--sigma", "@s.csv"},
      {"gauss-bonnet", "--curve", data_path("sin2.json"), "--report", "@.json"},
      {"areas", "--curve", oval, "--report", "@.json"},
      {"check", "--curve", data_path("bean.json"), "--report", "@.json"},
  };
  int k = 0;
  for (const auto& cmd : commands) {
    std::vector<std::string> outputs;
    for (int rep = 0; rep < 2; ++rep) {
      std::vector<std::string> args;
      std::vector<fs::path> files;
      for (const std::string& a : cmd) {
        if (!a.empty() && a[0] == '@') {
          files.push_back(dir / (std::to_string(k) + "_" + std::to_string(rep) + a.substr(1)));
          args.push_back(files.back().string());
        } else {
          args.push_back(a);
        }
      }
      REQUIRE(run_cli(args).code == 0);
      std::string all;
      for (const auto& f : files) all += slurp(f);
      outputs.push_back(all);
    }
    CHECK(outputs[0] == outputs[1]);
    CHECK_FALSE(outputs[0].empty());
    ++k;
  }
}

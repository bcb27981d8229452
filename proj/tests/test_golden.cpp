#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "support.hpp"

#include "curvelab/cli.hpp"

using namespace curvelab;
using namespace curvelab::test;
namespace fs = std::filesystem;

namespace {

/// One CLI invocation; "@" in an argument is replaced by a scratch path whose
/// content joins the golden text, stdout is appended last.
struct Golden {
  std::string name;
  std::vector<std::string> args;
};

std::string curve(const std::string& name) { return data_path(name + ".json"); }

std::vector<Golden> cases() {
  return {
      {"show_oval_family.svg", {"show", "--curve", curve("oval"), "--what", "family", "--alphas", "pi/6,pi/2", "--samples", "256", "--out", "@"}},
      {"show_bean_family.svg", {"show", "--curve", curve("bean"), "--what", "family", "--alphas", "pi/2", "--asymptotes", "--samples", "256", "--out", "@"}},
      {"show_model_cusp_ses.svg", {"show", "--curve", curve("model_cusp"), "--what", "ses", "--samples", "128", "--out", "@"}},
      {"show_sin3_base.svg", {"show", "--curve", curve("sin3"), "--samples", "128", "--out", "@"}},
      {"evolutoid_oval_singular.csv", {"evolutoid", "--curve", curve("oval"), "--alpha", "pi/6", "--singular"}},
      {"evolutoid_sin3_singular.csv", {"evolutoid", "--curve", curve("sin3"), "--alpha", "pi/2", "--singular"}},
      {"evolutoid_bean.csv", {"evolutoid", "--curve", curve("bean"), "--alpha", "pi/2", "--samples", "64"}},
      {"evolutoid_model_cusp.csv", {"evolutoid", "--curve", curve("model_cusp"), "--alpha", "pi/4", "--samples", "32"}},
      {"ses_oval_classify.csv", {"ses", "--curve", curve("oval"), "--classify"}},
      {"ses_fig6a_classify.csv", {"ses", "--curve", curve("fig6a"), "--classify"}},
      {"ses_sin5_classify.csv", {"ses", "--curve", curve("sin5"), "--classify"}},
      {"ses_bean.csv", {"ses", "--curve", curve("bean"), "--samples", "64"}},
      {"ses_model_cusp_classify.csv", {"ses", "--curve", curve("model_cusp"), "--classify"}},
      {"front_oval.obj", {"front", "--curve", curve("oval"), "--grid", "8,16", "--out", "@", "--sigma", "@"}},
      {"front_sin2.obj", {"front", "--curve", curve("sin2"), "--grid", "8,16"}},
      {"gauss_bonnet_oval.json", {"gauss-bonnet", "--curve", curve("oval"), "--tol-residual", "1e-5"}},
      {"gauss_bonnet_fig6a.json", {"gauss-bonnet", "--curve", curve("fig6a"), "--tol-residual", "1e-5"}},
      {"gauss_bonnet_sin2.json", {"gauss-bonnet", "--curve", curve("sin2"), "--tol-residual", "1e-4"}},
      {"gauss_bonnet_sin3.json", {"gauss-bonnet", "--curve", curve("sin3"), "--tol-residual", "1e-4"}},
      {"gauss_bonnet_sin5.json", {"gauss-bonnet", "--curve", curve("sin5"), "--tol-residual", "1e-4"}},
      {"gauss_bonnet_sin2_5.json", {"gauss-bonnet", "--curve", curve("sin2_5"), "--tol-residual", "1e-4"}},
      {"areas_oval.json", {"areas", "--curve", curve("oval"), "--alpha", "pi/3"}},
      {"areas_sin2_5.json", {"areas", "--curve", curve("sin2_5"), "--alpha", "pi/4"}},
      {"areas_bean.json", {"areas", "--curve", curve("bean")}},
      {"check_oval.json", {"check", "--curve", curve("oval")}},
      {"check_sin3.json", {"check", "--curve", curve("sin3")}},
      {"check_bean.json", {"check", "--curve", curve("bean")}},
      {"check_model_cusp.json", {"check", "--curve", curve("model_cusp")}},
      {"check_circle.json", {"check", "--curve", curve("circle")}},
  };
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("golden outputs of the command-line tool") {
  const fs::path golden_dir = CURVELAB_GOLDEN_DIR;
  const fs::path scratch = fs::temp_directory_path() / ("curvelab_golden_" + std::to_string(::getpid()));
  fs::create_directories(scratch);
  const char* env = std::getenv("CURVELAB_UPDATE_GOLDEN");
  const bool update = env && std::string(env) == "1";

  for (const Golden& g : cases()) {
    CAPTURE(g.name);
    std::vector<std::string> args;
    std::vector<fs::path> files;
    for (const std::string& a : g.args) {
      if (a == "@") {
        files.push_back(scratch / (g.name + "." + std::to_string(files.size())));
        args.push_back(files.back().string());
      } else {
        args.push_back(a);
      }
    }
    std::ostringstream out;
    std::ostringstream err;
    CHECK(run(args, out, err) == 0);
    std::string text;
    for (const fs::path& f : files) text += slurp(f);
    text += out.str();
    const fs::path target = golden_dir / g.name;
    if (update) {
      std::ofstream(target, std::ios::binary) << text;
      continue;
    }
    REQUIRE(fs::exists(target));
    CHECK(text == slurp(target));
  }
  fs::remove_all(scratch);
}

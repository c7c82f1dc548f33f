// quadell: inscribed ellipses of convex quadrilaterals.
//
//   quadell classify [--input FILE] [--tol X]
//   quadell family   [--input FILE] [--tol X] (--h H | --sweep N)
//   quadell minimal  [--input FILE] [--tol X] [--verify] [--svg FILE]
//   quadell verify   [--input FILE] [--tol X] [--svg FILE]
//
// Exit codes: 0 ok, 2 parse error, 3 geometry rejection, 4 verification failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "quadell/error.hpp"
#include "quadell/family.hpp"
#include "quadell/minecc.hpp"
#include "quadell/oracle.hpp"
#include "quadell/report.hpp"
#include "quadell/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitGeometry = 3;
constexpr int kExitVerify = 4;

struct Options {
  std::string input = "-";
  std::optional<double> tol;
  std::optional<double> h;
  std::optional<int> sweep;
  std::string svg;
  bool verify = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw quadell::InputError("cannot read input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string& command, const Options& opt) {
  using namespace quadell;
  const QuadInput input = parse_quad_input(read_input(opt.input));
  const double tol = opt.tol.value_or(input.tol.value_or(kDefaultTolerance));
  const CanonicalQuad cq = canonicalize(input.vertices, tol);
  Json doc = quad_report(input, cq, tol);

  if (command == "classify") {
    std::cout << dump(doc);
    return kExitOk;
  }

  if (command == "family") {
    Json members = Json::array();
    if (opt.h) {
      members.push_back(family_point_json(cq, family_point(cq, *opt.h)));
    } else {
      const int n = *opt.sweep;
      for (int k = 1; k <= n; ++k) {
        const double h = cq.h_lo() + k * cq.h_width() / (n + 1);
        members.push_back(family_point_json(cq, family_point(cq, h)));
      }
    }
    doc["members"] = members;
    std::cout << dump(doc);
    return kExitOk;
  }

  const MinEccResult result = solve(cq, {.tol = tol});
  doc["result"] = result_json(cq, result);
  int code = kExitOk;
  if (opt.verify || command == "verify") {
    const auto reports = oracle::verify_solution(cq, result);
    doc["oracles"] = oracle_json(reports);
    for (const auto& rep : reports)
      if (!rep.pass) code = kExitVerify;
  }
  if (!opt.svg.empty()) {
    std::ofstream out(opt.svg);
    if (!out) throw InputError("cannot write SVG file " + opt.svg);
    out << render_svg(cq, result);
  }
  std::cout << dump(doc);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inscribed ellipses of convex quadrilaterals"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "JSON input file ('-' for standard input)");
    sub->add_option("--tol", opt.tol, "relative classification tolerance")
        ->check(CLI::PositiveNumber);
  };

  auto* classify_cmd = app.add_subcommand("classify", "classify and canonicalize the quadrilateral");
  add_common(classify_cmd);

  auto* family_cmd = app.add_subcommand("family", "emit inscribed family members");
  family_cmd->set_help_flag("--help", "Print this help message and exit");
  add_common(family_cmd);
  auto* member = family_cmd->add_option_group("member", "which members to emit");
  member->add_option("--h", opt.h, "center abscissa in canonical coordinates");
  member->add_option("--sweep", opt.sweep, "number of interior samples")
      ->check(CLI::PositiveNumber);
  member->require_option(1);

  auto* minimal_cmd = app.add_subcommand("minimal", "find the minimal-eccentricity inscribed ellipse");
  add_common(minimal_cmd);
  minimal_cmd->add_flag("--verify", opt.verify, "run every oracle; exit 4 if any fails");
  minimal_cmd->add_option("--svg", opt.svg, "write a figure to this path");

  auto* verify_cmd = app.add_subcommand("verify", "solve and run every oracle check");
  add_common(verify_cmd);
  verify_cmd->add_option("--svg", opt.svg, "write a figure to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, opt);
  } catch (const quadell::InputError& e) {
    std::cout << quadell::dump(quadell::error_json("parse_error", e.what()));
    return kExitParse;
  } catch (const quadell::GeometryError& e) {
    std::cout << quadell::dump(quadell::error_json(quadell::error_code_name(e.code()), e.what()));
    return kExitGeometry;
  }
}

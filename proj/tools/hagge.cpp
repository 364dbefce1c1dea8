// hagge: construct, verify and draw special circles through a point.
//
// Exit codes: 0 success, 1 error (or verification FAIL), 2 degenerate output.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "hagge/construction.hpp"
#include "hagge/scene_io.hpp"
#include "hagge/similarity.hpp"
#include "hagge/svg.hpp"
#include "hagge/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitDegenerate = 2;

std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    if (ch == '\n') {
      out += "\\n";
      continue;
    }
    out += ch;
  }
  return out;
}

int report_error(std::string_view code, const std::string& message) {
  std::cerr << "{\"error\": \"" << code << "\", \"message\": \"" << json_escape(message) << "\"}\n";
  return kExitError;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

template <class Body>
int guarded(Body&& body) {
  try {
    return body();
  } catch (const hagge::GeometryError& e) {
    return report_error(hagge::code_name(e.code()), e.what());
  } catch (const std::exception& e) {
    return report_error("IO_ERROR", e.what());
  }
}

hagge::ConstructionOutput<double> construct_any(const hagge::Scene<double>& scene, hagge::ConstructionPath path) {
  if (path == hagge::ConstructionPath::closed_form && scene.frame() != hagge::Frame::canonical) {
    return hagge::construct_in_canonical_frame(scene);
  }
  return hagge::construct(scene, path);
}

hagge::ConstructionOutput<hagge::Rational> construct_any(const hagge::Scene<hagge::Rational>& scene,
                                                         hagge::ConstructionPath path) {
  return hagge::construct(scene, path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Special circles through a given point: construction, verification and figures"};
  app.require_subcommand(1);

  std::string scene_path;
  std::string out_path;
  std::string path_name = "closed-form";
  auto* construct_cmd = app.add_subcommand("construct", "Run the construction and write it as JSON");
  construct_cmd->add_option("--scene", scene_path, "Scene document (JSON)")->required();
  construct_cmd->add_option("--out", out_path, "Output file (default: stdout)");
  construct_cmd->add_option("--path", path_name, "closed-form or geometric")
      ->check(CLI::IsMember({"closed-form", "geometric"}));

  std::uint64_t trials = 1000;
  std::uint64_t seed = 42;
  std::string report_path;
  bool printed_y = false;
  bool zero_k = false;
  std::string frame = "exact";
  unsigned jobs = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Randomized verification of every construction invariant");
  verify_cmd->add_option("--trials", trials, "Number of random scenes")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed, "Master seed");
  verify_cmd->add_option("--report", report_path, "Report file (default: stdout)");
  verify_cmd->add_flag("--printed-eq32,--printed-y-coefficient", printed_y,
                       "Check the special circle with y-coefficient -2mn (expected to FAIL)");
  verify_cmd->add_flag("--k-zero", zero_k, "Put P at the circumcentre in every scene");
  verify_cmd->add_option("--frame", frame, "exact (canonical rational) or double (arbitrary frame)")
      ->check(CLI::IsMember({"exact", "double"}));
  verify_cmd->add_option("--jobs", jobs, "Worker threads (0 = all cores)");

  std::string svg_path;
  hagge::FigureOptions fig;
  bool no_labels = false;
  bool no_special = false;
  bool no_mid = false;
  bool no_chords = false;
  bool no_parallelograms = false;
  bool no_diagonals = false;
  auto* figure_cmd = app.add_subcommand("figure", "Render the construction as SVG");
  figure_cmd->add_option("--scene", scene_path, "Scene document (JSON)")->required();
  figure_cmd->add_option("--svg", svg_path, "Output SVG file (default: stdout)");
  figure_cmd->add_option("--width", fig.width, "Canvas width in pixels")->check(CLI::PositiveNumber);
  figure_cmd->add_option("--height", fig.height, "Canvas height in pixels")->check(CLI::PositiveNumber);
  figure_cmd->add_flag("--no-labels", no_labels, "Omit point labels");
  figure_cmd->add_flag("--no-special-circle", no_special, "Omit the circle through U, V, W, P");
  figure_cmd->add_flag("--no-midcircle", no_mid, "Omit the circle through U', V', W'");
  figure_cmd->add_flag("--no-chords", no_chords, "Omit chords AE, BF, CG");
  figure_cmd->add_flag("--no-parallelograms", no_parallelograms, "Omit parallelogram edges");
  figure_cmd->add_flag("--no-diagonals", no_diagonals, "Omit parallelogram diagonals");
  figure_cmd->add_flag("--hagge", fig.show_hagge, "Overlay the classic Hagge circle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  if (construct_cmd->parsed()) {
    return guarded([&] {
      const auto path =
          path_name == "geometric" ? hagge::ConstructionPath::geometric : hagge::ConstructionPath::closed_form;
      const hagge::AnyScene scene = hagge::parse_scene_document(read_file(scene_path));
      return std::visit(
          [&](const auto& s) {
            const auto out = construct_any(s, path);
            write_output(out_path, hagge::construction_to_json(out));
            return out.degenerate ? kExitDegenerate : kExitOk;
          },
          scene);
    });
  }

  if (verify_cmd->parsed()) {
    return guarded([&] {
      hagge::Report report;
      if (frame == "double") {
        report = hagge::verify_double_batch(trials, seed, {}, jobs);
      } else {
        hagge::ScenePolicy policy;
        policy.zero_k = zero_k;
        hagge::VerifyOptions options;
        options.printed_y_coefficient = printed_y;
        report = hagge::verify_batch(trials, seed, policy, options, jobs);
      }
      write_output(report_path, hagge::report_to_json(report));
      std::cerr << report.status() << ": " << report.trials << " trials, seed " << report.seed << ", "
                << std::chrono::duration<double>(report.elapsed).count() << " s cpu\n";
      for (const auto& c : report.checks) {
        if (!c.pass) std::cerr << "  FAIL " << c.name << " (" << c.passed << "/" << c.total << ")\n";
      }
      return report.passed() ? kExitOk : kExitError;
    });
  }

  if (figure_cmd->parsed()) {
    return guarded([&] {
      fig.labels = !no_labels;
      fig.show_special_circle = !no_special;
      fig.show_midpoint_circle = !no_mid;
      fig.show_chords = !no_chords;
      fig.show_parallelograms = !no_parallelograms;
      fig.show_diagonals = !no_diagonals;
      const hagge::AnyScene scene = hagge::parse_scene_document(read_file(scene_path));
      return std::visit(
          [&](const auto& s) {
            write_output(svg_path, hagge::render_figure(s, fig));
            return s.generator_at_circumcenter() ? kExitDegenerate : kExitOk;
          },
          scene);
    });
  }
  return kExitError;
}

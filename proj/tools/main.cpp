// Copyright 2026 The Reebtrap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "reebtrap/io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalidInput = 1;
constexpr int kUsageOrIo = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

reebtrap::PolygonWithHoles load_polygon(const std::string& path) {
  const reebtrap::io::PolygonDocument doc =
      reebtrap::io::parse_polygon_document(read_file(path));
  return reebtrap::validate(doc.outer, doc.holes);
}

struct SettingsFlags {
  bool ordered = false;
  bool no_mirror = false;
  bool no_flip = false;

  reebtrap::EquivalenceSettings settings() const {
    return reebtrap::EquivalenceSettings{ordered, !no_mirror, !no_flip};
  }
};

void add_settings_flags(CLI::App* cmd, SettingsFlags& flags) {
  auto* ordered = cmd->add_flag("--ordered", flags.ordered,
                                "compare full rank sequences instead of graph isomorphism");
  cmd->add_flag("--unordered", "compare up to oriented-graph isomorphism (default)")
      ->excludes(ordered);
  cmd->add_flag("--no-mirror", flags.no_mirror, "do not quotient by the vertical-axis mirror");
  cmd->add_flag("--no-flip", flags.no_flip, "do not quotient by the horizontal-axis flip");
}

int run(int argc, char** argv) {
  CLI::App app{"exact trapezoidal maps and Reeb graphs of polygons with holes"};
  app.require_subcommand(1);

  std::string input;
  std::string out_path;
  std::string format = "json";
  bool class_cert = false;
  SettingsFlags flags;
  int connectivity = 2;
  bool arrangements = false;
  int max_vertices = 5;

  CLI::App* check = app.add_subcommand("check", "validate a polygon file");
  check->add_option("input", input, "polygon JSON file")->required();

  CLI::App* reeb = app.add_subcommand("reeb", "emit the Reeb graph of a polygon");
  reeb->add_option("input", input, "polygon JSON file")->required();
  reeb->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "dot", "cert"}))
      ->capture_default_str();
  reeb->add_flag("--class", class_cert,
                 "with --format cert: emit the class certificate under the settings");
  add_settings_flags(reeb, flags);

  CLI::App* render = app.add_subcommand("render", "draw the trapezoidal map and Reeb graph");
  render->add_option("input", input, "polygon JSON file")->required();
  render->add_option("--out", out_path, "output SVG path")->required();

  CLI::App* enumerate = app.add_subcommand("enumerate", "count optimal Reeb graph classes");
  enumerate->add_option("--connectivity", connectivity, "boundary components (1..3)")
      ->required()
      ->check(CLI::Range(1, 3));
  enumerate->add_flag("--arrangements", arrangements,
                      "also group the n=3 classes by hole arrangement");
  add_settings_flags(enumerate, flags);

  CLI::App* closure = app.add_subcommand("closure", "count graph classes grown by edit ops");
  closure->add_option("--max-vertices", max_vertices, "largest vertex count")
      ->required()
      ->check(CLI::Range(3, 1000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageOrIo;
  }

  try {
    if (check->parsed()) {
      try {
        const reebtrap::PolygonWithHoles poly = load_polygon(input);
        std::cout << "vertices=" << poly.vertex_count()
                  << " connectivity=" << poly.connectivity() << "\n";
      } catch (const reebtrap::ValidationError& err) {
        for (const reebtrap::ValidationIssue& issue : err.issues()) {
          std::cout << issue.message << "\n";
        }
        return kInvalidInput;
      }
      return kOk;
    }

    if (reeb->parsed()) {
      if (class_cert && format != "cert") {
        std::cerr << "--class requires --format cert\n";
        return kUsageOrIo;
      }
      const reebtrap::PolygonWithHoles poly = load_polygon(input);
      const reebtrap::BuildResult result = reebtrap::build(poly);
      if (format == "json") {
        std::cout << reebtrap::io::write_graph_document(poly, result);
      } else if (format == "dot") {
        std::cout << reebtrap::io::write_dot(result);
      } else if (class_cert) {
        std::cout << reebtrap::class_certificate(result.graph, flags.settings()) << "\n";
      } else {
        std::cout << reebtrap::certificate(result.graph) << "\n";
      }
      return kOk;
    }

    if (render->parsed()) {
      const reebtrap::PolygonWithHoles poly = load_polygon(input);
      const std::string svg = reebtrap::io::write_svg(poly, reebtrap::build(poly));
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw UsageError("cannot write '" + out_path + "'");
      out << svg;
      if (!out.flush()) throw UsageError("cannot write '" + out_path + "'");
      return kOk;
    }

    if (enumerate->parsed()) {
      if (arrangements && connectivity != 3) {
        std::cerr << "--arrangements requires --connectivity 3\n";
        return kUsageOrIo;
      }
      const reebtrap::EquivalenceSettings settings = flags.settings();
      std::optional<int> reference;
      const bool default_settings = !settings.ordered && settings.quotient_mirror &&
                                    settings.quotient_flip;
      if (default_settings) {
        reference = connectivity == 1 ? 1 : connectivity == 2 ? 4 : 133;
      }
      const reebtrap::ClassReport report =
          reebtrap::enumerate_classes(connectivity, settings);
      std::cout << reebtrap::io::render_class_report(report, reference);
      if (arrangements) {
        const reebtrap::ArrangementReport table = reebtrap::arrangement_report(settings);
        std::cout << reebtrap::io::render_arrangement_report(
            table, default_settings ? std::optional<int>(13) : std::nullopt,
            default_settings ? std::optional<int>(120) : std::nullopt);
      }
      return kOk;
    }

    if (closure->parsed()) {
      std::cout << reebtrap::io::render_closure_report(reebtrap::closure_simple(max_vertices));
      return kOk;
    }
  } catch (const reebtrap::ValidationError& err) {
    for (const reebtrap::ValidationIssue& issue : err.issues()) {
      std::cout << issue.message << "\n";
    }
    return kInvalidInput;
  } catch (const reebtrap::io::DocumentError& err) {
    std::cerr << err.what() << "\n";
    return kUsageOrIo;
  } catch (const UsageError& err) {
    std::cerr << err.what() << "\n";
    return kUsageOrIo;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsageOrIo;
  }
  return kUsageOrIo;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }

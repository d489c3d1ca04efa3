// Command-line front end: classify | equivalent | frame | canonical |
// separate | render, JSON in, JSON (or SVG/CSV files) out.
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ktweb/report.hpp"

namespace {

using namespace ktweb;

enum class Cmd { Classify, Equivalent, Frame, Canonical, Separate, Render };

struct Options {
  std::string in = "-";
  std::string out = "-";
  double tol = 1e-9;
  bool tol_given = false;
  int jobs = 0;  // 0: single document; >= 1: one document per line
  std::string region = "-2,-2,2,2";
  int curves = 8;
  int samples = 512;
  std::string format = "svg";
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot open input: " + path);
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

void write_out(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << content)) throw std::runtime_error("cannot write: " + path);
}

Rect parse_region(const std::string& text) {
  Rect r;
  double v[4];
  char extra = 0;
  if (std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf%c", &v[0], &v[1], &v[2], &v[3], &extra) != 4) {
    throw ParseError("--region expects x0,y0,x1,y1");
  }
  r.x0 = v[0];
  r.y0 = v[1];
  r.x1 = v[2];
  r.y1 = v[3];
  return r;
}

// (exit code, one-line JSON) for a single document.
std::pair<int, std::string> run_doc(Cmd cmd, const Options& opt, const std::string& text) {
  try {
    const InputDoc doc = parse_input(text);
    const double tol = opt.tol_given ? opt.tol : doc.tol.value_or(1e-9);
    switch (cmd) {
      case Cmd::Classify:
        return {0, classify_json(doc.alpha)};
      case Cmd::Equivalent:
        if (!doc.alpha2) throw ParseError("equivalent needs fields alpha and alpha2");
        return {0, equivalent_json(doc.alpha, *doc.alpha2, tol)};
      case Cmd::Frame:
        return {0, frame_json(doc.alpha)};
      case Cmd::Canonical:
        return {0, canonical_json(doc.alpha)};
      case Cmd::Separate:
        if (!doc.potential) throw ParseError("separate needs fields alpha and potential");
        return {0, separate_json(doc.alpha, *doc.potential)};
      case Cmd::Render:
        break;  // handled by run_render
    }
    throw ParseError("unknown command");
  } catch (const ParseError& e) {
    return {1, error_json("ParseError", e.what())};
  } catch (const DegenerateInput& e) {
    return {2, error_json("DegenerateInput", e.what())};
  } catch (const Incompatible& e) {
    return {2, error_json("Incompatible", e.what())};
  } catch (const DegreeOverflow& e) {
    return {2, error_json("DegreeOverflow", e.what())};
  } catch (const std::invalid_argument& e) {
    return {1, error_json("InvalidInput", e.what())};
  }
}

int run_render(const Options& opt) {
  try {
    const InputDoc doc = parse_input(read_all(opt.in));
    const WebPlot plot = web_curves(doc.alpha, parse_region(opt.region), opt.curves, opt.samples);
    if (opt.format == "svg" || opt.format == "csv") {
      const std::string content = (opt.format == "svg") ? render_svg(plot) : render_csv(plot);
      write_out(opt.out, content);
      if (opt.out != "-") std::cout << render_summary_json(plot, opt.out) << "\n";
    } else if (opt.format == "json") {
      std::string out = "{\"region\":[" + fmt_double(plot.region.x0) + "," +
                        fmt_double(plot.region.y0) + "," + fmt_double(plot.region.x1) + "," +
                        fmt_double(plot.region.y1) + "],\"families\":[";
      for (size_t f = 0; f < 2; ++f) {
        if (f) out += ",";
        out += "[";
        for (size_t i = 0; i < plot.families[f].size(); ++i) {
          if (i) out += ",";
          out += "[";
          for (size_t k = 0; k < plot.families[f][i].size(); ++k) {
            if (k) out += ",";
            out += "[" + fmt_double(plot.families[f][i][k].x1) + "," +
                   fmt_double(plot.families[f][i][k].x2) + "]";
          }
          out += "]";
        }
        out += "]";
      }
      out += "],\"singular_points\":[";
      for (size_t i = 0; i < plot.singular_points.size(); ++i) {
        if (i) out += ",";
        out += "[" + fmt_double(plot.singular_points[i].x1) + "," +
               fmt_double(plot.singular_points[i].x2) + "]";
      }
      out += "]}";
      write_out(opt.out, out + "\n");
    } else {
      throw ParseError("--format must be svg, csv or json");
    }
    return 0;
  } catch (const ParseError& e) {
    std::cout << error_json("ParseError", e.what()) << "\n";
    return 1;
  } catch (const DegenerateInput& e) {
    std::cout << error_json("DegenerateInput", e.what()) << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cout << error_json("InvalidInput", e.what()) << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    std::cout << error_json("IOError", e.what()) << "\n";
    return 1;
  }
}

int run(Cmd cmd, const Options& opt) {
  if (cmd == Cmd::Render) return run_render(opt);

  const std::string input = read_all(opt.in);
  std::string output;
  int worst_parse = 0, worst_domain = 0;

  if (opt.jobs == 0) {
    auto [code, line] = run_doc(cmd, opt, input);
    output = line + "\n";
    worst_parse = (code == 1);
    worst_domain = (code == 2);
  } else {
    std::vector<std::string> lines;
    std::istringstream ss(input);
    for (std::string line; std::getline(ss, line);) {
      if (!line.empty()) lines.push_back(line);
    }
    std::vector<std::pair<int, std::string>> results(lines.size());
    const int workers = std::max(1, opt.jobs);
    std::atomic<size_t> next{0};
    auto work = [&]() {
      for (size_t i = next.fetch_add(1); i < lines.size(); i = next.fetch_add(1)) {
        results[i] = run_doc(cmd, opt, lines[i]);
      }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (const auto& [code, line] : results) {
      output += line + "\n";
      worst_parse |= (code == 1);
      worst_domain |= (code == 2);
    }
  }

  try {
    write_out(opt.out, output);
  } catch (const std::runtime_error& e) {
    std::cerr << error_json("IOError", e.what()) << "\n";
    return 1;
  }
  return worst_parse ? 1 : (worst_domain ? 2 : 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SE(2) classification of planar Killing two-tensors and orthogonal separation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ktweb 0.1.0");

  Options opt;
  std::vector<std::tuple<std::string, Cmd, std::string>> cmds = {
      {"classify", Cmd::Classify, "stratum, web type, invariants and leaf label"},
      {"equivalent", Cmd::Equivalent, "decide SE(2) equivalence of alpha and alpha2"},
      {"frame", Cmd::Frame, "chart, moving-frame group element and canonical parameters"},
      {"canonical", Cmd::Canonical, "canonical parameters on the cross-section"},
      {"separate", Cmd::Separate, "compatibility, frame, transported potential, first integral"},
      {"render", Cmd::Render, "orthogonal web curves as SVG, CSV or JSON"},
  };
  std::vector<std::pair<CLI::App*, Cmd>> subs;
  for (const auto& [name, cmd, help] : cmds) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--in", opt.in, "input document path, - for stdin");
    sub->add_option("--out", opt.out, "output path, - for stdout");
    sub->add_option("--tol", opt.tol, "equivalence tolerance")->check(CLI::NonNegativeNumber);
    sub->add_option("--jobs", opt.jobs, "process one document per input line, N workers")
        ->check(CLI::PositiveNumber);
    if (cmd == Cmd::Render) {
      sub->add_option("--region", opt.region, "plot window x0,y0,x1,y1");
      sub->add_option("--curves", opt.curves, "curves per family")->check(CLI::PositiveNumber);
      sub->add_option("--samples", opt.samples, "samples per curve")
          ->check(CLI::Range(2, 1 << 20));
      sub->add_option("--format", opt.format, "svg, csv or json")
          ->check(CLI::IsMember({"svg", "csv", "json"}));
    }
    subs.emplace_back(sub, cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  for (const auto& [sub, cmd] : subs) {
    if (sub->parsed()) {
      opt.tol_given = sub->count("--tol") > 0;
      return run(cmd, opt);
    }
  }
  return 1;
}

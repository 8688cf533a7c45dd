// vinberg: reflectivity of -p x0^2 + x1^2 + ... + xn^2.
//
// Exit codes: 0 decided (or certificate valid), 1 certificate invalid,
// 2 usage or input error, 3 undecided within the budget.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "vinberg/certificates.hpp"
#include "vinberg/classify.hpp"
#include "vinberg/diagram.hpp"
#include "vinberg/error.hpp"
#include "vinberg/polygon.hpp"

using namespace vinberg;

namespace {

constexpr int kUsage = 2;
constexpr int kUndecided = 3;

struct Common {
  long p = 0;
  int n = 0;
  std::string max_height = "400";
  std::size_t max_roots = 64;
  std::string check_every = "root";
  bool timings = false;
  std::string output;
};

void add_form(CLI::App* cmd, Common& c) {
  cmd->add_option("p", c.p, "prime p >= 5")->required();
  cmd->add_option("n", c.n, "rank n >= 2")->required();
}

void add_budget(CLI::App* cmd, Common& c) {
  cmd->add_option("--max-height", c.max_height, "largest batch height k0^2/m searched, as a/b")
      ->capture_default_str();
  cmd->add_option("--max-roots", c.max_roots, "largest number of accepted roots")->capture_default_str();
  cmd->add_option("--check-every", c.check_every, "finite-volume check after each root or each batch")
      ->check(CLI::IsMember({"root", "batch"}))
      ->capture_default_str();
  cmd->add_flag("--timings", c.timings, "include wall-clock timings in reports");
  cmd->add_option("-o,--output", c.output, "write to this file instead of stdout");
}

ClassifyOptions options_from(const Common& c) {
  ClassifyOptions o;
  o.budget.max_height = parse_rational(c.max_height);
  o.budget.max_roots = c.max_roots;
  o.check = c.check_every == "batch" ? CheckFrequency::EveryBatch : CheckFrequency::EveryRoot;
  o.timings = c.timings;
  return o;
}

void write(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.output);
  if (!f) throw Error(ErrorCode::Parse, "cannot write " + c.output);
  f << text;
}

Json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::Parse, "cannot read " + path);
  try {
    return Json::parse(f);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
}

std::string summary(const ClassificationReport& r) {
  std::ostringstream out;
  out << "p = " << r.form.p().get_str() << ", n = " << r.form.n() << ": " << to_string(r.verdict);
  if (r.searched) out << " (" << r.state.accepted.size() << " roots, " << to_string(*r.status) << ")";
  if (!r.certificate.is_null()) out << ", certificate " << r.certificate["kind"].get<std::string>();
  if (r.certificate_verified) out << " [verified]";
  if (r.timings) out << ", " << r.seconds << " s";
  return out.str() + "\n";
}

std::string emit_diagram(const ClassificationReport& r, const std::string& format) {
  const auto d = build_diagram(r.state.roots(), r.form);
  if (format == "text") {
    std::ostringstream out;
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = i + 1; j < d.size(); ++j)
        if (d.joined(i, j)) out << i + 1 << " -- " << j + 1 << "  " << to_string(d.edge(i, j).kind) << "\n";
    if (r.form.n() == 2 && r.verdict == Verdict::Reflective)
      out << "norm/angle sequence: " << norm_angle_sequence(r.state.roots(), r.form).symbol() << "\n";
    return out.str();
  }
  return render(d, parse_render_format(format));
}

int decided(const ClassificationReport& r) { return r.verdict == Verdict::Undecided ? kUndecided : 0; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vinberg's algorithm for -p x0^2 + x1^2 + ... + xn^2"};
  app.require_subcommand(1);

  Common c;
  std::string emit = "report", format;
  std::string resume;
  unsigned jobs = 1;
  std::string cert_path;

  auto* classify_cmd = app.add_subcommand("classify", "decide reflectivity and print a report");
  add_form(classify_cmd, c);
  add_budget(classify_cmd, c);
  classify_cmd->add_option("--emit", emit, "report, roots, diagram, certificate or table")
      ->check(CLI::IsMember({"report", "roots", "diagram", "certificate", "table"}))
      ->capture_default_str();
  classify_cmd->add_option("--format", format, "json, text, dot or tikz (depends on --emit)");
  classify_cmd->add_option("--resume", resume, "continue from a saved search state or undecided report");

  auto* family_cmd = app.add_subcommand("family", "classify n = 2 .. n_max");
  family_cmd->add_option("p", c.p, "prime p >= 5")->required();
  family_cmd->add_option("n_max", c.n, "largest rank")->required();
  add_budget(family_cmd, c);
  family_cmd->add_option("--jobs", jobs, "ranks searched in parallel")->capture_default_str();
  family_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* table_cmd = app.add_subcommand("table", "roots grouped by batch");
  add_form(table_cmd, c);
  add_budget(table_cmd, c);
  table_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* diagram_cmd = app.add_subcommand("diagram", "Coxeter diagram of the found roots");
  add_form(diagram_cmd, c);
  add_budget(diagram_cmd, c);
  diagram_cmd->add_option("--format", format, "dot, tikz, json or text")
      ->check(CLI::IsMember({"dot", "tikz", "json", "text"}));

  auto* certify_cmd = app.add_subcommand("certify", "print the certificate of the verdict");
  add_form(certify_cmd, c);
  add_budget(certify_cmd, c);

  auto* verify_cmd = app.add_subcommand("verify", "re-check a certificate from scratch");
  verify_cmd->add_option("certificate", cert_path, "certificate JSON file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify_cmd) {
      const auto v = check_certificate(read_json(cert_path));
      if (v.ok) {
        std::cout << "valid\n";
        return 0;
      }
      std::cout << "invalid\n";
      for (const auto& f : v.failures) std::cout << "  " << f << "\n";
      return 1;
    }

    const auto opts = options_from(c);

    if (*family_cmd) {
      const auto reports = classify_family(c.p, c.n, opts, jobs);
      bool undecided = false;
      for (const auto& r : reports) undecided |= r.verdict == Verdict::Undecided;
      if (format == "text") {
        std::string text;
        for (const auto& r : reports) text += summary(r);
        write(c, text);
      } else {
        Json all = Json::array();
        for (const auto& r : reports) all.push_back(r.to_json());
        write(c, all.dump(2) + "\n");
      }
      return undecided ? kUndecided : 0;
    }

    auto report = [&] {
      if (*classify_cmd && !resume.empty()) {
        // Either a bare state or an undecided report carrying one.
        Json j = read_json(resume);
        if (j.contains("state") && j["state"].is_object()) j = j["state"];
        return classify_resume(state_from_json(j), opts);
      }
      return classify(c.p, c.n, opts);
    }();

    if (*table_cmd) {
      write(c, emit_table(report, parse_table_format(format.empty() ? "text" : format)));
      return decided(report);
    }
    if (*diagram_cmd) {
      write(c, emit_diagram(report, format.empty() ? "dot" : format));
      return decided(report);
    }
    if (*certify_cmd) {
      if (report.verdict == Verdict::Undecided) {
        std::cerr << "undecided within the budget; no certificate\n";
        return kUndecided;
      }
      write(c, report.certificate.dump(2) + "\n");
      return 0;
    }

    if (emit == "report") {
      write(c, format == "text" ? summary(report) : report.to_json().dump(2) + "\n");
    } else if (emit == "roots") {
      if (format == "text") {
        std::string text;
        for (const auto& r : report.state.roots()) text += r.vector().to_string() + "  norm " + r.norm().get_str() + "\n";
        write(c, text);
      } else {
        write(c, report.to_json()["roots"].dump(2) + "\n");
      }
    } else if (emit == "diagram") {
      write(c, emit_diagram(report, format.empty() ? "json" : format));
    } else if (emit == "certificate") {
      write(c, report.certificate.dump(2) + "\n");
    } else {
      write(c, emit_table(report, parse_table_format(format.empty() ? "text" : format)));
    }
    return decided(report);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kUsage;
  }
}

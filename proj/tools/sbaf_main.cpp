// sbaf: solve, check and inspect structured bipolar argumentation frameworks.
//
// Exit codes: 0 success, 1 input error, 2 enumeration cap exceeded, 3 I/O.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sbaf/errors.hpp"
#include "sbaf/io/commands.hpp"
#include "sbaf/io/dot.hpp"
#include "sbaf/io/framework_file.hpp"
#include "sbaf/saturation.hpp"
#include "sbaf/verify/suite.hpp"

namespace {

constexpr int kInputError = 1;
constexpr int kCapExceeded = 2;
constexpr int kIoError = 3;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sbaf::IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw sbaf::IoError("failed writing '" + path + "'");
}

sbaf::Semantics semantics_from(const std::string& tag) {
  if (auto s = sbaf::parse_semantics(tag)) return *s;
  std::string known;
  for (auto s : sbaf::all_semantics()) known += (known.empty() ? "" : ", ") + std::string(sbaf::to_string(s));
  throw sbaf::ConfigError("unknown semantics '" + tag + "' (one of: " + known + ")");
}

struct SharedFlags {
  std::size_t max_args = sbaf::EnumerationLimits{}.max_arguments;
  std::size_t max_sents = sbaf::EnumerationLimits{}.max_sentences;
  std::string support_rule = "conclusion";
  bool confident = false;
  bool plain = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-args", max_args, "Argument cap for exhaustive enumeration")->capture_default_str();
    cmd->add_option("--max-sents", max_sents, "Sentence cap for language enumeration")->capture_default_str();
    cmd->add_option("--support-rule", support_rule, "Binary support for d-semantics: conclusion | singleton")
        ->capture_default_str();
    cmd->add_flag("--confident", confident, "Only confident (maximal) coherent or adequate extensions");
    cmd->add_flag("--plain", plain, "Plain text instead of JSON");
  }

  sbaf::io::SolveOptions options(sbaf::Semantics semantics) const {
    sbaf::io::SolveOptions o;
    o.semantics = semantics;
    o.confident = confident;
    o.limits = {max_args, max_sents};
    o.support_rule = sbaf::parse_support_rule(support_rule);
    return o;
  }
};

int run(int argc, char** argv) {
  CLI::App app{"Structured bipolar argumentation solver"};
  app.require_subcommand(1);

  std::string file, semantics_tag, mode, extension, output, suite, fixture;
  SharedFlags flags;
  bool strong = false;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  unsigned threads = 0;

  auto* solve = app.add_subcommand("solve", "Enumerate extensions");
  solve->add_option("file", file, "Framework file")->required();
  solve->add_option("-s,--semantics", semantics_tag, "Semantics tag")->required();
  solve->add_option("--mode", mode, "arguments | language (default depends on the semantics)");
  flags.attach(solve);

  auto* check = app.add_subcommand("check", "Check one extension and explain the verdict");
  check->add_option("file", file, "Framework file")->required();
  check->add_option("-s,--semantics", semantics_tag, "Semantics tag")->required();
  check->add_option("-e,--extension", extension, "Comma-separated ids (sentences for adequate semantics)")
      ->required();
  flags.attach(check);

  auto* saturate = app.add_subcommand("saturate", "Add minimal arguments until saturated");
  saturate->add_option("file", file, "Framework file")->required();
  saturate->add_flag("--strong", strong, "Strong saturation (both sides of every incompatibility)");
  saturate->add_option("-o,--output", output, "Output file (stdout when omitted)");

  auto* dot = app.add_subcommand("dot", "Graphviz rendering");
  dot->add_option("file", file, "Framework file")->required();
  dot->add_option("--support-rule", flags.support_rule, "conclusion | singleton")->capture_default_str();
  dot->add_option("-o,--output", output, "Output file (stdout when omitted)");

  auto* props = app.add_subcommand("props", "Counts and saturation flags");
  props->add_option("file", file, "Framework file")->required();

  auto* verify = app.add_subcommand("verify", "Run randomised correspondence checks");
  verify->add_option("--checks", suite, "Comma-separated check ids (default: all)");
  verify->add_option("--trials", trials, "Frameworks per check")->capture_default_str();
  verify->add_option("--seed", seed, "Base seed")->capture_default_str();
  verify->add_option("--threads", threads, "Worker threads, 0 for all cores")->capture_default_str();
  verify->add_flag("--list", [&](std::int64_t) {
    for (const auto& id : sbaf::verify::suite_ids())
      std::cout << id << "  " << sbaf::verify::describe(id) << '\n';
    throw CLI::Success();
  }, "List check ids and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (solve->parsed()) {
    auto options = flags.options(semantics_from(semantics_tag));
    if (!mode.empty()) options.mode = sbaf::io::parse_mode(mode);
    const auto doc = sbaf::io::solve(sbaf::io::read_framework(file), options);
    std::cout << (flags.plain ? sbaf::io::to_plain(doc) : sbaf::io::to_json(doc).dump(2) + "\n");
  } else if (check->parsed()) {
    const auto sem = semantics_from(semantics_tag);
    const auto members = split_list(extension);
    const auto verdict = sbaf::io::check(sbaf::io::read_framework(file), sem, members, flags.options(sem));
    if (flags.plain)
      std::cout << (verdict.accepted ? "accepted" : "rejected") << ": " << verdict.explanation << '\n';
    else
      std::cout << sbaf::io::to_json(verdict, sem, members).dump(2) << '\n';
  } else if (saturate->parsed()) {
    const auto sb = sbaf::io::read_framework(file);
    write_output(output, sbaf::io::emit_framework(strong ? sbaf::strongly_saturate(sb) : sbaf::saturate(sb)));
  } else if (dot->parsed()) {
    const auto rule = sbaf::parse_support_rule(flags.support_rule);
    write_output(output, sbaf::io::to_dot(sbaf::io::read_framework(file), rule));
  } else if (props->parsed()) {
    std::cout << sbaf::io::properties(sbaf::io::read_framework(file)).dump(2) << '\n';
  } else if (verify->parsed()) {
    sbaf::verify::SuiteConfig config;
    config.trials = trials;
    config.seed = seed;
    config.threads = threads;
    const auto ids = suite.empty() ? sbaf::verify::suite_ids() : split_list(suite);
    std::cout << sbaf::verify::to_json(sbaf::verify::run_suite(ids, config)).dump(2) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const sbaf::CapExceeded& e) {
    std::cerr << "sbaf: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const sbaf::IoError& e) {
    std::cerr << "sbaf: " << e.what() << '\n';
    return kIoError;
  } catch (const sbaf::Error& e) {
    std::cerr << "sbaf: " << e.what() << '\n';
    return kInputError;
  }
}

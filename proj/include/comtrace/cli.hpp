#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "comtrace/alphabet.hpp"
#include "comtrace/cdgraph.hpp"
#include "comtrace/congruence.hpp"
#include "comtrace/error.hpp"
#include "comtrace/io.hpp"
#include "comtrace/lsos.hpp"
#include "comtrace/sostruct.hpp"
#include "comtrace/stepseq.hpp"
#include "comtrace/transform.hpp"

namespace comtrace {

namespace cli_detail {

enum class Format { Text, Json, Dot };

struct Config {
  std::string alphabet_path;
  std::string format = "text";
  std::size_t max_class = kDefaultMaxClass;
  std::size_t max_ground = kDefaultMaxGround;

  Format parsed_format() const {
    if (format == "text") return Format::Text;
    if (format == "json") return Format::Json;
    if (format == "dot") return Format::Dot;
    fail(ErrorKind::Parse, "unknown format '" + format + "'");
  }
};

inline std::string read_input(const std::string& arg, std::istream& in) {
  if (arg == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(arg);
  if (!file) fail(ErrorKind::Parse, "cannot read file '" + arg + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

inline ComtraceAlphabet load_alphabet(const Config& cfg, std::istream& in) {
  if (cfg.alphabet_path.empty())
    fail(ErrorKind::Parse, "--alphabet is required");
  return alphabet_from_json(parse_json(read_input(cfg.alphabet_path, in)));
}

inline StepSequence load_sequence(const ComtraceAlphabet& theta,
                                  const std::string& text) {
  StepSequence t = parse_step_sequence(text);
  validate_step_sequence(theta, t);
  return t;
}

/// Loads a structure JSON and validates it against the alphabet; axioms
/// are verified here so later operations can rely on them.
inline SoStructure load_so_structure(const ComtraceAlphabet& theta,
                                     const json& j) {
  SoStructure s = so_from_json(j);
  detail::require_known_labels(theta, s.ground);
  require_so_structure(s);
  return s;
}

inline LsosComtrace load_lsos(const ComtraceAlphabet& theta, const json& j) {
  return make_lsos_comtrace(theta, load_so_structure(theta, j));
}

inline CdGraph load_cdgraph(const ComtraceAlphabet& theta, const json& j) {
  CdGraph d = cdgraph_from_json(j);
  auto report = check_cdgraph(theta, d);
  if (!report.ok)
    fail(ErrorKind::InvalidStructure, "not a cd-graph: " + to_text(report));
  return d;
}

inline void print_members(const Comtrace& ct, Format format, std::ostream& out) {
  if (format == Format::Json) {
    json arr = json::array();
    for (const auto& member : ct.members) arr.push_back(to_text(member));
    out << arr.dump(2) << '\n';
    return;
  }
  for (const auto& member : ct.members) out << to_text(member) << '\n';
}

template <class Structure>
void print_structure(const Structure& s, Format format, std::ostream& out) {
  switch (format) {
    case Format::Json:
      out << to_json(s).dump(2) << '\n';
      break;
    case Format::Dot:
      out << to_dot(s);
      break;
    case Format::Text:
      out << to_text(s);
      break;
  }
}

}  // namespace cli_detail

/// Command-line driver. Parses arguments, runs the requested subcommand,
/// writes results to out and diagnostics to err. Returns the process exit
/// status: 0 success, 1 parse error, 2 semantic error, 3 bound exceeded.
inline int run_cli(std::vector<std::string> args, std::istream& in,
                   std::ostream& out, std::ostream& err) {
  using cli_detail::Config;
  using cli_detail::Format;

  Config cfg;
  CLI::App app{"comtrace algebra toolkit"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--alphabet", cfg.alphabet_path,
                 "alphabet JSON file (events, sim, ser)");
  app.add_option("--format", cfg.format, "output format: text, json or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--max-class", cfg.max_class,
                 "bound on congruence class enumeration");
  app.add_option("--max-ground", cfg.max_ground,
                 "bound on extension enumeration ground size");

  std::string arg1, arg2;
  auto* cmd_validate = app.add_subcommand("validate", "check an alphabet file");
  auto* cmd_steps = app.add_subcommand("steps", "list the induced step set");
  auto* cmd_comtrace =
      app.add_subcommand("comtrace", "enumerate the congruence class");
  cmd_comtrace->add_option("sequence", arg1)->required();
  auto* cmd_equiv =
      app.add_subcommand("equiv", "decide congruence of two step sequences");
  cmd_equiv->add_option("first", arg1)->required();
  cmd_equiv->add_option("second", arg2)->required();
  auto* cmd_to_lsos =
      app.add_subcommand("to-lsos", "labeled so-structure of a class");
  cmd_to_lsos->add_option("sequence", arg1)->required();
  auto* cmd_to_cdg =
      app.add_subcommand("to-cdg", "combined dependency graph of a class");
  cmd_to_cdg->add_option("sequence", arg1)->required();
  auto* cmd_lsos_to_ct =
      app.add_subcommand("lsos-to-ct", "class represented by a structure");
  cmd_lsos_to_ct->add_option("structure", arg1)->required();
  auto* cmd_cdg_to_lsos =
      app.add_subcommand("cdg-to-lsos", "closure of a dependency graph");
  cmd_cdg_to_lsos->add_option("graph", arg1)->required();
  auto* cmd_quotient =
      app.add_subcommand("quotient", "quotient by the weak-causality cycles");
  cmd_quotient->add_option("structure", arg1)->required();
  auto* cmd_extensions =
      app.add_subcommand("extensions", "stratified extensions of a structure");
  cmd_extensions->add_option("structure", arg1)->required();
  auto* cmd_compose =
      app.add_subcommand("compose", "compose two structures of the same kind");
  cmd_compose->add_option("first", arg1)->required();
  cmd_compose->add_option("second", arg2)->required();
  auto* cmd_concat = app.add_subcommand("concat", "concatenate two classes");
  cmd_concat->add_option("first", arg1)->required();
  cmd_concat->add_option("second", arg2)->required();
  auto* cmd_dot = app.add_subcommand("dot", "DOT export of a structure");
  cmd_dot->add_option("structure", arg1)->required();

  // CLI11 wants argv order reversed.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends print to out and succeed.
      out << app.help();
      return 0;
    }
    err << "error (parse): " << e.what() << '\n';
    return 1;
  }

  try {
    const Format format = cfg.parsed_format();
    const ComtraceAlphabet theta = cli_detail::load_alphabet(cfg, in);

    if (cmd_validate->parsed()) {
      if (format == Format::Json) {
        json j{{"valid", true},
               {"events", theta.events().size()},
               {"sim", theta.sim().size()},
               {"ser", theta.ser().size()}};
        out << j.dump(2) << '\n';
      } else {
        out << "valid: events=" << theta.events().size()
            << " sim=" << theta.sim().size() << " ser=" << theta.ser().size()
            << '\n';
      }
    } else if (cmd_steps->parsed()) {
      const auto steps = all_steps(theta);
      if (format == Format::Json) {
        json arr = json::array();
        for (const auto& step : steps)
          arr.push_back(to_text(StepSequence{step}));
        out << arr.dump(2) << '\n';
      } else {
        for (const auto& step : steps) out << to_text(StepSequence{step}) << '\n';
      }
    } else if (cmd_comtrace->parsed()) {
      const auto t = cli_detail::load_sequence(theta, arg1);
      cli_detail::print_members(comtrace_of(theta, t, cfg.max_class), format, out);
    } else if (cmd_equiv->parsed()) {
      const auto t = cli_detail::load_sequence(theta, arg1);
      const auto u = cli_detail::load_sequence(theta, arg2);
      out << (equivalent(theta, t, u, cfg.max_class) ? "true" : "false") << '\n';
    } else if (cmd_to_lsos->parsed()) {
      const auto t = cli_detail::load_sequence(theta, arg1);
      const auto lct = ct2lct(theta, comtrace_of(theta, t, cfg.max_class));
      cli_detail::print_structure(lct, format, out);
    } else if (cmd_to_cdg->parsed()) {
      const auto t = cli_detail::load_sequence(theta, arg1);
      const auto d = ct2dep(theta, comtrace_of(theta, t, cfg.max_class));
      cli_detail::print_structure(d, format, out);
    } else if (cmd_lsos_to_ct->parsed()) {
      const auto j = parse_json(cli_detail::read_input(arg1, in));
      const auto lct = cli_detail::load_lsos(theta, j);
      cli_detail::print_members(lct2ct(theta, lct, cfg.max_ground), format, out);
    } else if (cmd_cdg_to_lsos->parsed()) {
      const auto j = parse_json(cli_detail::read_input(arg1, in));
      const auto d = cli_detail::load_cdgraph(theta, j);
      cli_detail::print_structure(dep2lct(theta, d), format, out);
    } else if (cmd_quotient->parsed()) {
      const auto j = parse_json(cli_detail::read_input(arg1, in));
      const auto s = cli_detail::load_so_structure(theta, j);
      cli_detail::print_structure(quotient(s), format, out);
    } else if (cmd_extensions->parsed()) {
      const auto j = parse_json(cli_detail::read_input(arg1, in));
      const auto s = cli_detail::load_so_structure(theta, j);
      const auto exts = stratified_extensions(s, cfg.max_ground);
      if (format == Format::Json) {
        json arr = json::array();
        for (const auto& omega : exts) arr.push_back(to_text(omega));
        out << arr.dump(2) << '\n';
      } else {
        for (const auto& omega : exts) out << to_text(omega) << '\n';
      }
    } else if (cmd_compose->parsed()) {
      const auto j1 = parse_json(cli_detail::read_input(arg1, in));
      const auto j2 = parse_json(cli_detail::read_input(arg2, in));
      const bool cdg1 = looks_like_cdgraph_json(j1);
      const bool cdg2 = looks_like_cdgraph_json(j2);
      if (cdg1 != cdg2)
        fail(ErrorKind::InvalidStructure,
             "compose needs two structures of the same kind");
      if (cdg1) {
        const auto d = compose_cdg(theta, cli_detail::load_cdgraph(theta, j1),
                                   cli_detail::load_cdgraph(theta, j2));
        cli_detail::print_structure(d, format, out);
      } else {
        const auto t = compose_lsos(theta, cli_detail::load_lsos(theta, j1),
                                    cli_detail::load_lsos(theta, j2));
        cli_detail::print_structure(t, format, out);
      }
    } else if (cmd_concat->parsed()) {
      const auto t = cli_detail::load_sequence(theta, arg1);
      const auto u = cli_detail::load_sequence(theta, arg2);
      const auto ct = concat(theta, comtrace_of(theta, t, cfg.max_class),
                             comtrace_of(theta, u, cfg.max_class), cfg.max_class);
      cli_detail::print_members(ct, format, out);
    } else if (cmd_dot->parsed()) {
      const auto j = parse_json(cli_detail::read_input(arg1, in));
      if (looks_like_cdgraph_json(j)) {
        out << to_dot(cli_detail::load_cdgraph(theta, j));
      } else {
        out << to_dot(cli_detail::load_so_structure(theta, j));
      }
    }
    return 0;
  } catch (const Error& e) {
    err << "error (" << error_kind_name(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

}  // namespace comtrace

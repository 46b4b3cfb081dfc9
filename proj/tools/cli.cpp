#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "tilekit/block.hpp"
#include "tilekit/compact.hpp"
#include "tilekit/design.hpp"
#include "tilekit/error.hpp"
#include "tilekit/sim.hpp"
#include "tilekit/tiles_io.hpp"

namespace tilekit::cli {

namespace {

std::string banner() { return std::string("tilekit ") + TILEKIT_VERSION; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) throw Error(Errc::Io, "cannot write '" + path + "'");
}

// out.tiles -> out.<ext>
std::string sidecar(const std::string& path, const std::string& ext) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + "." + ext;
  return path.substr(0, dot) + "." + ext;
}

void write_tiles(const std::string& path, const TileSystem& system) {
  write_file(path, emit_document({{banner()}, system}));
}

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw Error(Errc::InvalidArgument, what + ": '" + text + "' is not an integer");
  }
  return value;
}

std::map<GlueId, int> parse_overrides(const std::vector<std::string>& specs) {
  std::map<GlueId, int> out;
  for (const std::string& s : specs) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      throw Error(Errc::InvalidArgument, "--glue-strength expects N=S, got '" + s + "'");
    }
    const int glue = parse_int(s.substr(0, eq), "--glue-strength glue");
    const int strength = parse_int(s.substr(eq + 1), "--glue-strength strength");
    if (glue < 1 || strength < 0) {
      throw Error(Errc::InvalidArgument, "--glue-strength needs glue >= 1 and strength >= 0");
    }
    out[static_cast<GlueId>(glue)] = strength;
  }
  return out;
}

Box parse_box(const std::string& text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) throw Error(Errc::InvalidArgument, "--box expects WxH, got '" + text + "'");
  const int w = parse_int(text.substr(0, x), "--box width");
  const int h = parse_int(text.substr(x + 1), "--box height");
  if (w < 1 || h < 1) throw Error(Errc::InvalidArgument, "--box dimensions must be positive");
  return Box::north_west(w, h);
}

void print_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << '\n';
}

struct CompileArgs {
  std::string design;
  std::string frames;
  std::string output;
  std::vector<std::string> strengths;
  int frame_strength = 2;
};

struct BlockArgs {
  std::string input;
  std::string output;
  int m = 2;
  int tau = 2;
};

struct CompactArgs {
  std::string design;
  std::string output;
  int way = 2;
  std::string hframe;
  std::string vframe;
};

struct SimulateArgs {
  std::string input;
  long seed = 0;
  int tau = 2;
  std::string box = "64x64";
  std::string blockmap;
  bool check_serpentine = false;
  bool ascii = false;
  std::string events;
  long max_tiles = 1'000'000;
};

CompileResult compile_from(const CompileArgs& a) {
  CompileOptions options;
  options.frame_strength = a.frame_strength;
  options.strength_overrides = parse_overrides(a.strengths);
  return compile_design(parse_design(read_file(a.design)), a.frames, options);
}

int do_compile(const CompileArgs& a, std::ostream& out, std::ostream& err) {
  const CompileResult r = compile_from(a);
  print_warnings(r.warnings, err);
  write_tiles(a.output, r.system);
  out << "wrote " << a.output << ": " << r.system.tiles.size() << " tiles (" << r.rule_tiles
      << " computational), " << r.system.glues.size() << " glues\n";
  return kOk;
}

int do_gluetable(const CompileArgs& a, std::ostream& out, std::ostream& err) {
  const CompileResult r = compile_from(a);
  print_warnings(r.warnings, err);
  out << glue_table_report(r.system.glues);
  return kOk;
}

int do_block(const BlockArgs& a, bool snake_layout, std::ostream& out) {
  TileSystem system = parse_document(read_file(a.input)).system;
  system.temperature = a.tau;
  const BlockTransform t = snake_layout ? snake(system, a.m) : proofread(system, a.m);
  write_tiles(a.output, t.system);
  const std::string map_path = sidecar(a.output, "blockmap");
  write_file(map_path, emit_blockmap(t.map));
  out << "wrote " << a.output << ": " << t.system.tiles.size() << " tiles, "
      << t.system.glues.size() << " glues; block map " << map_path << '\n';
  return kOk;
}

int do_compact(const CompactArgs& a, std::ostream& out) {
  CompactDesign cd;
  cd.base = parse_design(read_file(a.design));
  cd.way = a.way;
  const int bits = ValueRule(cd.base).bits();
  cd.hframe = parse_frame_values(a.hframe, bits);
  cd.vframe = parse_frame_values(a.vframe, bits);
  const CompactResult r = compact_transform(cd);
  write_tiles(a.output, r.system);
  const std::string codec_path = sidecar(a.output, "codec");
  write_file(codec_path, emit_codec(r.codec));
  out << "wrote " << a.output << ": " << r.system.tiles.size() << " tiles (" << r.rule_tiles
      << " computational), seed tile " << r.seed + 1 << "; codec " << codec_path << '\n';
  return kOk;
}

int do_simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
  if (a.check_serpentine && a.blockmap.empty()) {
    throw Error(Errc::InvalidArgument, "--check-serpentine requires --blockmap");
  }
  if (a.seed < 1) throw Error(Errc::SeedOutOfRange, "--seed is 1-based and must be >= 1");
  if (a.max_tiles < 1) throw Error(Errc::InvalidArgument, "--max-tiles must be >= 1");
  if (a.tau < 1) throw Error(Errc::InvalidArgument, "--tau must be a positive integer");
  TileSystem system = parse_document(read_file(a.input)).system;
  system.temperature = a.tau;
  std::optional<BlockMap> map;
  if (!a.blockmap.empty()) map = parse_blockmap(read_file(a.blockmap));

  SimOptions options;
  options.seed = static_cast<std::size_t>(a.seed - 1);
  options.temperature = a.tau;
  options.box = parse_box(a.box);
  options.max_tiles = static_cast<std::size_t>(a.max_tiles);
  const SimReport report = simulate(system, options);

  int status = kOk;
  out << "placed " << report.assembly.cells.size() << " tiles from seed " << a.seed << " at tau "
      << a.tau << '\n';
  out << "nondeterministic sites: " << report.nondeterministic.size() << '\n';
  out << "mismatches: " << report.mismatches.size() << '\n';
  out << "facet attachments: " << report.facet_attachments.size() << '\n';
  for (const auto& site : report.nondeterministic) {
    err << "nondeterministic site (" << site.pos.x << "," << site.pos.y << "): tiles";
    for (std::size_t t : site.candidates) err << ' ' << t + 1;
    err << '\n';
    status = kVerifyFailed;
  }
  if (a.ascii) out << render_ascii(report.assembly, system);
  if (!a.events.empty()) write_file(a.events, emit_event_log(report));

  if (map) {
    try {
      const MacroAssembly macro = project(report, *map);
      out << "macro cells: " << macro.cells.size() << ", incomplete blocks: " << macro.incomplete.size()
          << '\n';
      if (a.ascii) out << render_macro_ascii(macro);
    } catch (const Error& e) {
      if (e.code() != Errc::MixedBlock) throw;
      err << "verification failed: " << e.what() << '\n';
      return kVerifyFailed;
    }
    if (a.check_serpentine) {
      const SerpentineVerdict v = serpentine_check(report, *map, system);
      if (v.passed) {
        out << "serpentine: pass (" << v.checked << " blocks checked, " << v.skipped << " skipped)\n";
      } else {
        const auto& bad = *v.violation;
        out << "serpentine: fail at block (" << bad.block.x << "," << bad.block.y << ") step "
            << bad.step << ": (" << bad.before.first << "," << bad.before.second << ") after ("
            << bad.after.first << "," << bad.after.second << ")\n";
        status = kVerifyFailed;
      }
    }
  }
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tile-set compiler, transforms and aTAM simulator", "tilekit"};
  app.set_version_flag("--version", banner());
  app.require_subcommand(1);

  CompileArgs compile_args;
  auto* compile = app.add_subcommand("compile", "Compile a design plus frame tiles to a .tiles file");
  compile->add_option("design", compile_args.design, "Design file")->required();
  compile->add_option("--frames", compile_args.frames, "Frame tiles \"n e s w; n e s w; ...\"");
  compile->add_option("-o,--output", compile_args.output, "Output .tiles file")->required();
  compile->add_option("--glue-strength", compile_args.strengths, "Override glue strength, N=S");
  compile->add_option("--frame-strength", compile_args.frame_strength,
                      "Strength of glues introduced by frame tiles")
      ->capture_default_str();

  CompileArgs table_args;
  auto* gluetable = app.add_subcommand("gluetable", "Print the glue table of a design");
  gluetable->add_option("design", table_args.design, "Design file")->required();
  gluetable->add_option("--frames", table_args.frames, "Frame tiles \"n e s w; ...\"");
  gluetable->add_option("--glue-strength", table_args.strengths, "Override glue strength, N=S");

  BlockArgs proof_args;
  auto* proof = app.add_subcommand("proofread", "Replace every tile by an m x m proofreading block");
  proof->add_option("input", proof_args.input, "Input .tiles file")->required();
  proof->add_option("-m", proof_args.m, "Block size")->required();
  proof->add_option("-o,--output", proof_args.output, "Output .tiles file")->required();
  proof->add_option("--tau", proof_args.tau, "Temperature")->capture_default_str();

  BlockArgs snake_args;
  auto* snk = app.add_subcommand("snake", "Replace every tile by an m x m snake block (m even)");
  snk->add_option("input", snake_args.input, "Input .tiles file")->required();
  snk->add_option("-m", snake_args.m, "Block size (even)")->required();
  snk->add_option("-o,--output", snake_args.output, "Output .tiles file")->required();
  snk->add_option("--tau", snake_args.tau, "Temperature")->capture_default_str();

  CompactArgs compact_args;
  auto* cmp = app.add_subcommand("compact", "Build a compact k-way tile set from a design");
  cmp->add_option("design", compact_args.design, "Design file with north = west")->required();
  cmp->add_option("--way", compact_args.way, "2 or 3")->required();
  cmp->add_option("--hframe", compact_args.hframe, "Row-0 values")->required();
  cmp->add_option("--vframe", compact_args.vframe, "Column-0 values")->required();
  cmp->add_option("-o,--output", compact_args.output, "Output .tiles file")->required();

  SimulateArgs sim_args;
  auto* sim = app.add_subcommand("simulate", "Grow an assembly in the abstract tile assembly model");
  sim->add_option("input", sim_args.input, "Input .tiles file")->required();
  sim->add_option("--seed", sim_args.seed, "Seed tile (1-based)")->required();
  sim->add_option("--tau", sim_args.tau, "Temperature")->capture_default_str();
  sim->add_option("--box", sim_args.box, "Bounding box WxH west and north of the seed")
      ->capture_default_str();
  sim->add_option("--blockmap", sim_args.blockmap, "Block map for macro projection");
  sim->add_flag("--check-serpentine", sim_args.check_serpentine,
                "Verify serpentine attachment order in every block");
  sim->add_flag("--ascii", sim_args.ascii, "Print the assembly");
  sim->add_option("--events", sim_args.events, "Write the attachment event log to a file");
  sim->add_option("--max-tiles", sim_args.max_tiles, "Stop after this many placements")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << banner() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const auto parsed = app.get_subcommands();
    if (!parsed.empty() && e.get_name() != "CallForAllHelp") {
      err << parsed.front()->help();
    } else {
      err << app.help();
    }
    return e.get_name() == "CallForAllHelp" ? kOk : kInputError;
  }

  try {
    if (compile->parsed()) return do_compile(compile_args, out, err);
    if (gluetable->parsed()) return do_gluetable(table_args, out, err);
    if (proof->parsed()) return do_block(proof_args, false, out);
    if (snk->parsed()) return do_block(snake_args, true, out);
    if (cmp->parsed()) return do_compact(compact_args, out);
    if (sim->parsed()) return do_simulate(sim_args, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace tilekit::cli

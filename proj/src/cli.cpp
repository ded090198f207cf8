#include "hypercat/cli.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypercat/series.hpp"
#include "hypercat/solver.hpp"
#include "hypercat/subdigon.hpp"
#include "hypercat/viz.hpp"

namespace hypercat {

namespace {

struct LevelFlags {
  std::string level;
  int d = 0;
  std::optional<int> q;

  void attach(CLI::App* cmd) {
    cmd->add_option("--level", level, "level kind: vertex, edge or face")->required();
    cmd->add_option("--d", d, "level bound d")->required();
    cmd->add_option("--q", q, "polygon bound q (largest (q+1)-gon)");
  }

  TruncationSpec to_spec(bool validate = true) const {
    auto kind = level_kind_parse(level);
    if (!kind) throw std::invalid_argument("unknown level kind '" + level + "'");
    TruncationSpec spec{*kind, d, q};
    if (validate) spec.validate();
    return spec;
  }
};

unsigned long long type_limit() {
  if (const char* env = std::getenv("HYPERCAT_MAX_TYPES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 1000000ULL;
}

// refuse runaway d/q combinations unless --force is given
void guardrail(const TruncationSpec& spec, bool force) {
  if (force) return;
  if (spec.d > 16)
    throw std::invalid_argument("d=" + std::to_string(spec.d) +
                                " exceeds the default ceiling of 16; pass --force to override");
  if (spec.q && *spec.q > 8)
    throw std::invalid_argument("q=" + std::to_string(*spec.q) +
                                " exceeds the default ceiling of 8; pass --force to override");
  unsigned long long limit = type_limit();
  if (count_types(spec, limit) > limit)
    throw std::invalid_argument("type count exceeds " + std::to_string(limit) +
                                "; pass --force or raise HYPERCAT_MAX_TYPES");
}

nlohmann::json vef_json(const VEF& s) { return {{"V", s.V}, {"E", s.E}, {"F", s.F}}; }

std::string frame_filename(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "frame_%04zu.svg", index);
  return buf;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hyper-Catalan subdigon toolkit"};
  app.require_subcommand(1);

  bool json = false, timing = false, force = false;
  int threads = 0;
  app.add_flag("--json", json, "emit a single JSON document");
  app.add_flag("--timing", timing, "report wall time on stderr");
  app.add_flag("--force", force, "bypass size guardrails");
  app.add_option("--threads", threads, "OpenMP thread count (0 = default)");

  std::string type_text, subdigon_text, out_dir;
  LevelFlags enum_lv, series_lv, verify_lv, solve_lv;
  bool list_types = false, layered = false, report = false;
  std::vector<std::string> coeff_args;
  int digits = 12, table_dmax = -1, frames = 0, newton_iters = 12;
  bool newton = false, smil = false, mirror = false;
  std::string x0_text = "1";
  double spf = 0.04;

  CLI::App* cmd_count = app.add_subcommand("count", "hyper-Catalan number of a type");
  cmd_count->add_option("type", type_text, "type vector, e.g. \"[m2=3]\"")->required();

  CLI::App* cmd_vef = app.add_subcommand("vef", "vertex/edge/face statistics of a type");
  cmd_vef->add_option("type", type_text, "type vector")->required();

  CLI::App* cmd_enum = app.add_subcommand("enumerate", "list subdigons up to a level");
  enum_lv.attach(cmd_enum);
  cmd_enum->add_flag("--types", list_types, "list type vectors instead of subdigons");

  CLI::App* cmd_series = app.add_subcommand("series", "truncated hyper-Catalan series");
  series_lv.attach(cmd_series);
  cmd_series->add_flag("--layered", layered, "carry the v/e/f layering variables");
  cmd_series->add_flag("--report", report, "per-type CSV report instead of the polynomial");

  CLI::App* cmd_verify = app.add_subcommand("verify", "check the layered series is a zero of h");
  verify_lv.attach(cmd_verify);

  CLI::App* cmd_solve = app.add_subcommand("solve", "approximate the geometric root numerically");
  solve_lv.attach(cmd_solve);
  cmd_solve->add_option("--coeff", coeff_args, "coefficient k=p/q (repeatable)");
  cmd_solve->add_option("--digits", digits, "decimal digits in rendered output");
  cmd_solve->add_option("--table", table_dmax, "emit a convergence table for d = 0..N");
  cmd_solve->add_flag("--newton", newton, "Newton iteration instead of the series");
  cmd_solve->add_option("--x0", x0_text, "Newton starting point (default 1)");
  cmd_solve->add_option("--iters", newton_iters, "Newton iteration count (default 12)");

  CLI::App* cmd_animate = app.add_subcommand("animate", "emit SVG frames of the merge");
  cmd_animate->add_option("subdigon", subdigon_text, "subdigon text, e.g. \"(2;|,|)\"")
      ->required();
  cmd_animate->add_option("--frames", frames, "frames per stage (default: 1/20/30/25 plan)");
  cmd_animate->add_option("--out", out_dir, "output directory")->required();
  cmd_animate->add_flag("--smil", smil, "additionally write a single animated SVG");
  cmd_animate->add_flag("--mirror", mirror, "mirror the layout chirality");
  cmd_animate->add_option("--spf", spf, "seconds per frame in the animated SVG");

  for (CLI::App* sub : {cmd_count, cmd_vef, cmd_enum, cmd_series, cmd_verify, cmd_solve,
                        cmd_animate})
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (threads > 0) omp_set_num_threads(threads);
  auto started = std::chrono::steady_clock::now();
  int status = 0;

  try {
    if (cmd_count->parsed()) {
      TypeVector m = TypeVector::from_text(type_text);
      Int c = hyper_catalan(m);
      if (json)
        out << nlohmann::json{{"type", nlohmann::json::parse(m.to_json())},
                              {"C", c.get_str()}}
                   .dump()
            << "\n";
      else
        out << c.get_str() << "\n";
    } else if (cmd_vef->parsed()) {
      TypeVector m = TypeVector::from_text(type_text);
      VEF s = vef(m);
      if (json)
        out << vef_json(s).dump() << "\n";
      else
        out << "V=" << s.V << " E=" << s.E << " F=" << s.F << "\n";
    } else if (cmd_enum->parsed()) {
      TruncationSpec spec = enum_lv.to_spec();
      guardrail(spec, force);
      if (list_types) {
        auto types = enumerate_types(spec);
        if (json) {
          nlohmann::json arr = nlohmann::json::array();
          for (const auto& m : types) arr.push_back(m.to_text());
          out << arr.dump() << "\n";
        } else {
          for (const auto& m : types) out << m.to_text() << "\n";
        }
      } else {
        auto subs = enumerate_by_level(spec);
        if (json) {
          nlohmann::json arr = nlohmann::json::array();
          for (const auto& s : subs) arr.push_back(s.to_text());
          out << arr.dump() << "\n";
        } else {
          for (const auto& s : subs) out << s.to_text() << "\n";
        }
      }
    } else if (cmd_series->parsed()) {
      TruncationSpec spec = series_lv.to_spec();
      guardrail(spec, force);
      if (report) {
        auto rows = coefficient_report(spec);
        if (json) {
          nlohmann::json arr = nlohmann::json::array();
          for (const auto& row : rows)
            arr.push_back({{"type", row.m.to_text()},
                           {"C", row.C.get_str()},
                           {"V", row.stats.V},
                           {"E", row.stats.E},
                           {"F", row.stats.F},
                           {"monomial", row.monomial}});
          out << arr.dump() << "\n";
        } else {
          out << report_csv(rows);
        }
      } else {
        LayeredSeries series = layered ? build_S_layered(spec) : build_S(spec);
        out << (json ? series.poly.to_json() : series.poly.to_text()) << "\n";
      }
    } else if (cmd_verify->parsed()) {
      TruncationSpec spec = verify_lv.to_spec();
      guardrail(spec, force);
      MultiPoly residual = verify_layer_zero(spec);
      if (json)
        out << nlohmann::json{{"zero", residual.is_zero()},
                              {"residual", nlohmann::json::parse(residual.to_json())}}
                   .dump()
            << "\n";
      else if (residual.is_zero())
        out << "ZERO\n";
      else
        out << "NONZERO residual: " << residual.to_text() << "\n";
      if (!residual.is_zero()) status = 1;
    } else if (cmd_solve->parsed()) {
      GeometricPoly p = GeometricPoly::from_coeff_args(coeff_args);
      // the face-level polygon bound comes from the polynomial itself
      TruncationSpec spec = solve_lv.to_spec(false);
      TruncationSpec guarded = spec;
      if (guarded.kind == LevelKind::face && !guarded.q) guarded.q = p.degree();
      guarded.d = std::max(guarded.d, table_dmax);
      guardrail(guarded, force);
      if (newton) {
        Rational x = newton_root(p, rational_from_string(x0_text), newton_iters);
        Rational res = p.value_at(x);
        if (json)
          out << nlohmann::json{{"method", "newton"},
                                {"x", rational_to_string(x)},
                                {"x_decimal", rational_to_decimal(x, digits)},
                                {"residual", rational_to_string(res)},
                                {"residual_decimal", rational_to_decimal(res, digits)}}
                     .dump()
              << "\n";
        else
          out << "x = " << rational_to_decimal(x, digits) << "\nresidual = "
              << rational_to_decimal(res, digits) << "\n";
      } else if (table_dmax >= 0) {
        auto rows = convergence_table(p, spec.kind, table_dmax);
        if (json) {
          nlohmann::json arr = nlohmann::json::array();
          for (const auto& row : rows)
            arr.push_back({{"d", row.d},
                           {"x", rational_to_string(row.x)},
                           {"x_decimal", rational_to_decimal(row.x, digits)},
                           {"residual", rational_to_string(row.abs_residual)},
                           {"residual_decimal", rational_to_decimal(row.abs_residual, digits)}});
          out << arr.dump() << "\n";
        } else {
          out << "d,x,residual\n";
          for (const auto& row : rows)
            out << row.d << "," << rational_to_decimal(row.x, digits) << ","
                << rational_to_decimal(row.abs_residual, digits) << "\n";
        }
      } else {
        ApproxResult res = approx_root(p, spec);
        if (json)
          out << nlohmann::json{{"level", level_kind_name(res.kind)},
                                {"d", res.d},
                                {"q", res.q},
                                {"x", rational_to_string(res.x)},
                                {"x_decimal", rational_to_decimal(res.x, digits)},
                                {"residual", rational_to_string(res.residual)},
                                {"residual_decimal", rational_to_decimal(res.residual, digits)}}
                     .dump()
              << "\n";
        else
          out << "x = " << rational_to_decimal(res.x, digits) << "\nresidual = "
              << rational_to_decimal(res.residual, digits) << "\n";
      }
    } else if (cmd_animate->parsed()) {
      Subdigon s = Subdigon::from_text(subdigon_text);
      std::vector<Frame> anim = frames > 0 ? animate_merge(s, frames, mirror)
                                           : animate_merge(s, StagePlan{}, mirror);
      std::filesystem::create_directories(out_dir);
      for (std::size_t i = 0; i < anim.size(); ++i) {
        std::ofstream file(std::filesystem::path(out_dir) / frame_filename(i),
                           std::ios::binary);
        file << emit_svg(anim[i]);
        if (!file) throw std::runtime_error("failed to write frame " + frame_filename(i));
      }
      if (smil) {
        std::ofstream file(std::filesystem::path(out_dir) / "animation.svg", std::ios::binary);
        file << emit_svg_animation(anim, spf);
        if (!file) throw std::runtime_error("failed to write animation.svg");
      }
      if (json)
        out << nlohmann::json{{"frames", anim.size()}, {"out", out_dir}, {"smil", smil}}.dump()
            << "\n";
      else
        out << "wrote " << anim.size() << " frames to " << out_dir << "\n";
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (timing) {
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started);
    err << "time: " << elapsed.count() << "s\n";
  }
  return status;
}

}  // namespace hypercat

#include "bimclp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "bimclp/bim_store.hpp"
#include "bimclp/compliance.hpp"
#include "bimclp/execution.hpp"
#include "bimclp/merge.hpp"
#include "bimclp/vague.hpp"
#include "bimclp/x3d.hpp"

namespace bimclp {

namespace {

// Input problems the user can fix; reported with exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_scene(const std::string& path, const std::vector<SceneGroup>& groups, std::ostream& out) {
  const std::string text = emit_scene(clip_groups(groups));
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

LoadResult load_store(const std::string& path, std::istream& in, std::ostream& err) {
  LoadResult r = load_facts(read_source(path, in));
  for (const auto& w : r.warnings) err << "warning: " << w << '\n';
  return r;
}

bool is_corner(const std::string& var) {
  return var.size() == 2 && (var[1] == 'a' || var[1] == 'b') && (var[0] == 'X' || var[0] == 'Y' || var[0] == 'Z');
}

std::optional<std::string> opt(const std::string& s) {
  return s.empty() ? std::nullopt : std::optional<std::string>(s);
}

std::vector<std::string> rooms_to_check(const ModelStore& store, const std::string& room) {
  if (!room.empty()) return {room};
  std::vector<std::string> out;
  for (const auto& o : select(store, std::string("ifcspace"), std::nullopt)) out.push_back(o.id);
  return out;
}

struct Options {
  std::string facts;
  std::string scenario;
  std::string label, tag;
  std::string target_label, target_tag, cover_label, cover_tag;
  std::vector<std::string> constraints, corners;
  std::string x3d;
  std::string room;
  std::string mode = "partial";
  std::string rule;
  std::string width_mode = "larger";
  std::string epsilon = "0";
  int jobs = 1;
  bool shapes = false;
  bool justify = false;
  bool enumerate = false;
};

int cmd_select(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto r = load_store(o.facts, in, err);
  for (const auto& obj : select(r.store, opt(o.label), opt(o.tag))) out << obj.to_fact() << '\n';
  return kOk;
}

int cmd_slice(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<Halfspace> space;
  std::vector<AxisConstraint> corners;
  std::vector<std::string> all = o.constraints;
  all.insert(all.end(), o.corners.begin(), o.corners.end());
  for (const auto& text : all) {
    AxisConstraint c = parse_axis_constraint(text);
    if (is_corner(c.var)) {
      corners.push_back(c);
    } else if (c.var == "X" || c.var == "Y" || c.var == "Z") {
      space.push_back(c.halfspace());
    } else {
      throw InputError("constraint variable must be X, Y, Z or Xa..Zb: " + text);
    }
  }
  const auto r = load_store(o.facts, in, err);
  const SliceResult s = slice(r.store, space, corners);
  for (const auto& w : s.warnings) err << "warning: " << w << '\n';
  for (const auto& obj : s.selected) out << obj.to_fact() << '\n';
  if (!o.x3d.empty()) {
    SceneGroup selected{"selected", Color::green(), Rational(0), {}};
    SceneGroup others{"others", Color::blue(), Rational(7, 10), {}};
    for (const auto& obj : r.store.objects()) {
      const bool hit = std::any_of(s.selected.begin(), s.selected.end(),
                                   [&](const BimObject& x) { return x.id == obj.id; });
      (hit ? selected : others).shapes.push_back(obj.shape());
    }
    // The envelope comes from the objects; the slice itself may be unbounded.
    const Envelope env = default_envelope({selected, others});
    SceneGroup region{"slice", {Rational(1), Rational(1), Rational(0)}, Rational(4, 5), {s.slice_shape}};
    write_scene(o.x3d, clip_groups({selected, others, region}, env), out);
  }
  return kOk;
}

int cmd_coverage(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  if (o.jobs < 1) throw InputError("--jobs must be at least 1");
  const auto r = load_store(o.facts, in, err);
  const auto targets = select(r.store, opt(o.target_label), opt(o.target_tag));
  std::vector<BimObject> covers;
  for (auto& c : select(r.store, opt(o.cover_label), opt(o.cover_tag))) {
    const bool is_target = std::any_of(targets.begin(), targets.end(),
                                       [&](const BimObject& t) { return t.id == c.id; });
    if (!is_target) covers.push_back(std::move(c));
  }

  CoverageReport report;
  if (o.jobs == 1) {
    report = coverage_stream(targets, covers, [&](const CoverageEntry& e) { out << to_tsv(e, o.shapes) << std::flush; });
  } else {
    set_worker_count(o.jobs);
    report = coverage(targets, covers, Execution::Parallel);
    out << report.to_tsv(o.shapes);
  }
  err << "targets " << report.targets << ", uncovered " << report.uncovered << '\n';

  if (!o.x3d.empty()) {
    SceneGroup covered{"covered", Color::blue(), Rational(0), {}};
    SceneGroup leftover{"leftover", Color::red(), Rational(0), {}};
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const auto& e = report.entries[i];
      covered.shapes.push_back(subtract(targets[i].shape(), e.leftover));
      if (!e.covered) leftover.shapes.push_back(e.leftover);
    }
    write_scene(o.x3d, {covered, leftover}, out);
  }
  return kOk;
}

int cmd_classify(const Options& o, std::istream& in, std::ostream& out, std::ostream&) {
  const EntityStore store = load_entities(read_source(o.facts, in));
  const ThresholdRule rule;
  const auto answers = o.room.empty() ? query_room_is(store, rule) : query_room_is(store, o.room, rule);
  for (const auto& a : answers) {
    if (o.justify) {
      out << justify(a);
    } else {
      out << "room_is(" << a.entity << ", " << a.label << ")\t" << a.model.to_string() << '\n';
    }
  }
  return kOk;
}

int cmd_count_models(const Options& o, std::istream& in, std::ostream& out, std::ostream&) {
  const EntityStore store = load_entities(read_source(o.facts, in));
  const ThresholdRule rule;
  if (o.mode == "partial") {
    out << query_room_is(store, rule).size() << '\n';
    return kOk;
  }
  out << count_global_models(store, rule).get_str() << '\n';
  if (o.enumerate) {
    for (const auto& m : enumerate_global_models(store, rule)) {
      std::string line = "{";
      for (std::size_t i = 0; i < m.size(); ++i) line += (i ? ", " : "") + m[i].to_string();
      out << line << "}\n";
    }
  }
  return kOk;
}

int cmd_merge(const Options& o, std::istream& in, std::ostream& out, std::ostream&) {
  const MergeStore store = load_scenario(read_source(o.scenario, in));
  for (const auto& v : store.valid_data()) {
    if (v.valid) {
      out << v.to_string() << '\n';
    } else {
      out << "invalid " << v.to_string() << " canceled by {Pr=" << v.witness->priority
          << ", Data=" << v.witness->atom.to_string() << "}\n";
    }
  }
  return kOk;
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const std::string text = read_source(o.facts, in);
  LoadResult r = load_facts(text);
  for (const auto& w : r.warnings) err << "warning: " << w << '\n';
  const Rational epsilon = Rational::parse(o.epsilon);
  if (epsilon < Rational(0)) throw InputError("--epsilon must be non-negative");

  bool failed = false;
  const auto rooms = rooms_to_check(r.store, o.room);
  if (o.rule == "window-width") {
    const EntityStore sizes = load_entities(text);
    WindowWidthRule rule;
    rule.width_mode = o.width_mode == "smaller" ? WidthMode::Smaller : WidthMode::Larger;
    rule.epsilon = epsilon;
    for (const auto& room : rooms) {
      const RuleVerdict v = check_window_width(room, r.store, sizes, rule);
      failed |= v.outcome == Outcome::Fail;
      out << v.to_string() << '\n';
    }
  } else {
    VentilationRule rule;
    rule.epsilon = epsilon;
    for (const auto& room : rooms) {
      const RuleVerdict v = check_natural_ventilation(room, r.store, rule);
      failed |= v.outcome == Outcome::Fail;
      out << v.to_string() << '\n';
    }
  }
  return failed ? kRuleFailed : kOk;
}

int cmd_export(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto r = load_store(o.facts, in, err);
  SceneGroup doors{"doors", Color::green(), Rational(0), {}};
  SceneGroup rest{"objects", Color::blue(), Rational(0), {}};
  for (const auto& obj : r.store.objects()) {
    std::string label = obj.label;
    std::transform(label.begin(), label.end(), label.begin(), [](unsigned char c) { return std::tolower(c); });
    (label == "ifcdoor" ? doors : rest).shapes.push_back(obj.shape());
  }
  write_scene(o.x3d, {doors, rest}, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spatial and vague reasoning over building object facts", "bimclp"};
  app.require_subcommand(1);
  Options o;

  auto facts = [&](CLI::App* c) { c->add_option("--facts", o.facts, "fact file, - for stdin")->required(); };

  auto* sel = app.add_subcommand("select", "list objects by IFC label and/or model tag");
  facts(sel);
  sel->add_option("--label", o.label, "IFC label, case-insensitive");
  sel->add_option("--tag", o.tag, "model tag such as arq or str");

  auto* sli = app.add_subcommand("slice", "objects meeting a constraint-defined region");
  facts(sli);
  sli->add_option("--constraint", o.constraints, "e.g. Y>=-7 (X, Y, Z) or Ya<-4 (corners)");
  sli->add_option("--corner", o.corners, "corner filter such as Ya<-4.002");
  sli->add_option("--x3d", o.x3d, "write a scene, - for stdout");

  auto* cov = app.add_subcommand("coverage", "parts of targets not covered by other objects");
  facts(cov);
  cov->add_option("--target-label", o.target_label);
  cov->add_option("--target-tag", o.target_tag);
  cov->add_option("--cover-label", o.cover_label);
  cov->add_option("--cover-tag", o.cover_tag);
  cov->add_option("--jobs", o.jobs, "worker threads; 1 streams results as they are found");
  cov->add_flag("--shapes", o.shapes, "dump leftover cells");
  cov->add_option("--x3d", o.x3d, "write a scene, - for stdout");

  auto* cls = app.add_subcommand("classify", "room_is answers with their partial models");
  facts(cls);
  cls->add_option("--room", o.room);
  cls->add_flag("--justify", o.justify, "print justification trees");

  auto* cnt = app.add_subcommand("count-models", "number of partial answers or global models");
  facts(cnt);
  cnt->add_option("--mode", o.mode)->check(CLI::IsMember({"partial", "global"}));
  cnt->add_flag("--enumerate", o.enumerate, "also list global models");

  auto* mrg = app.add_subcommand("merge", "valid data under priorities");
  mrg->add_option("--scenario", o.scenario, "scenario file, - for stdin")->required();

  auto* chk = app.add_subcommand("check", "run a compliance rule");
  facts(chk);
  chk->add_option("--rule", o.rule)->required()->check(CLI::IsMember({"window-width", "ventilation"}));
  chk->add_option("--room", o.room, "room id; default every ifcspace");
  chk->add_option("--width-mode", o.width_mode)->check(CLI::IsMember({"larger", "smaller"}));
  chk->add_option("--epsilon", o.epsilon, "room inflation when matching windows");

  auto* exp = app.add_subcommand("export", "whole model as an X3D scene");
  facts(exp);
  exp->add_option("--x3d", o.x3d, "output path, - for stdout")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kInputError;
  }

  try {
    if (sel->parsed()) return cmd_select(o, in, out, err);
    if (sli->parsed()) return cmd_slice(o, in, out, err);
    if (cov->parsed()) return cmd_coverage(o, in, out, err);
    if (cls->parsed()) return cmd_classify(o, in, out, err);
    if (cnt->parsed()) return cmd_count_models(o, in, out, err);
    if (mrg->parsed()) return cmd_merge(o, in, out, err);
    if (chk->parsed()) return cmd_check(o, in, out, err);
    if (exp->parsed()) return cmd_export(o, in, out, err);
  } catch (const std::logic_error& e) {  // invalid_argument, out_of_range, domain_error, length_error
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::runtime_error& e) {  // ParseError, InputError
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  err << app.help();
  return kInputError;
}

}  // namespace bimclp

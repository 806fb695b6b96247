#include "bimclp/bim_store.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "bimclp/facts.hpp"

namespace bimclp {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string fact_point(const Point& p) {
  return "point(" + p["X"].to_text() + ", " + p["Y"].to_text() + ", " + p["Z"].to_text() + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// BimObject / ModelStore

const Rational& BimObject::corner(std::string_view var) const {
  if (var.size() != 2 || (var[1] != 'a' && var[1] != 'b') || (var[0] != 'X' && var[0] != 'Y' && var[0] != 'Z')) {
    throw std::invalid_argument("unknown corner variable " + std::string(var));
  }
  const Point& p = var[1] == 'a' ? low : high;
  return p[std::string(1, var[0])];
}

std::optional<std::string> BimObject::tag() const {
  if (const auto* t = std::get_if<std::string>(&extra)) return *t;
  return std::nullopt;
}

std::string BimObject::to_fact() const {
  std::string out = "object(" + Term::atom(label).to_string() + ", " + Term::atom(id).to_string() + ", " +
                    fact_point(low) + ", " + fact_point(high) + ", ";
  if (const auto* c = std::get_if<Point>(&extra)) {
    out += fact_point(*c);
  } else {
    out += Term::atom(std::get<std::string>(extra)).to_string();
  }
  return out + ").";
}

ModelStore::ModelStore(std::vector<BimObject> objects) : objects_(std::move(objects)) {
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    const auto& o = objects_[i];
    if (!by_id_.emplace(o.id, i).second) throw std::invalid_argument("duplicate object id " + o.id);
    by_label_[lower(o.label)].push_back(i);
    if (auto t = o.tag()) by_tag_[*t].push_back(i);
  }
}

const BimObject* ModelStore::find(const std::string& id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &objects_[it->second];
}

const BimObject& ModelStore::at(const std::string& id) const {
  if (const auto* o = find(id)) return *o;
  throw std::out_of_range("unknown object " + id);
}

// ---------------------------------------------------------------------------
// Loading

namespace {

[[noreturn]] void bad_object(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what, 0, line);
}

std::string name_of(const Term& t, std::size_t line) {
  if (t.is_atom()) return t.name;
  if (t.is_number()) return t.number.to_text();
  bad_object(line, "expected an atom, got " + t.to_string());
}

Point point_of(const Term& t, std::size_t line) {
  if (!t.is("point", 3)) bad_object(line, "expected point(X, Y, Z), got " + t.to_string());
  for (const auto& a : t.args) {
    if (!a.is_number()) bad_object(line, "point coordinates must be numbers");
  }
  return Point::xyz(t.args[0].number, t.args[1].number, t.args[2].number);
}

}  // namespace

LoadResult load_facts(std::string_view text) {
  std::vector<BimObject> objects;
  std::vector<std::string> warnings;
  std::map<std::string, std::size_t> seen;
  for (const auto& f : parse_facts(text)) {
    if (!f.term.is_compound() || f.term.name != "object") continue;
    if (f.term.args.size() != 5) bad_object(f.line, "object/5 expects 5 arguments");
    const auto& args = f.term.args;
    BimObject o{name_of(args[0], f.line), name_of(args[1], f.line), point_of(args[2], f.line),
                point_of(args[3], f.line), std::string()};
    if (args[4].is("point", 3)) {
      o.extra = point_of(args[4], f.line);
    } else {
      o.extra = name_of(args[4], f.line);
    }
    if (auto [it, inserted] = seen.emplace(o.id, f.line); !inserted) {
      bad_object(f.line, "duplicate object id " + o.id + " (first on line " + std::to_string(it->second) + ")");
    }
    std::string degenerate;
    for (const char* d : {"X", "Y", "Z"}) {
      if (o.low[d] >= o.high[d]) degenerate += d;
    }
    if (!degenerate.empty()) {
      warnings.push_back("line " + std::to_string(f.line) + ": skipped " + o.id + ": degenerate box (" +
                         degenerate + " side)");
      continue;
    }
    objects.push_back(std::move(o));
  }
  return {ModelStore(std::move(objects)), std::move(warnings)};
}

std::string serialize(const ModelStore& store) {
  std::string out;
  for (const auto& o : store.objects()) out += o.to_fact() + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Queries

std::vector<BimObject> select(const ModelStore& store, const std::optional<std::string>& label,
                              const std::optional<std::string>& tag) {
  std::vector<BimObject> out;
  const std::string want = label ? lower(*label) : std::string();
  for (const auto& o : store.objects()) {
    if (label && lower(o.label) != want) continue;
    if (tag && o.tag() != tag) continue;
    out.push_back(o);
  }
  return out;
}

SliceResult slice(const ModelStore& store, const std::vector<Halfspace>& constraints,
                  const std::vector<AxisConstraint>& corner_filters) {
  SliceResult out;
  LinSystem cell(kXYZ);
  for (const auto& h : constraints) cell.add(h);
  for (const auto& f : corner_filters) {
    if (f.var.size() != 2 || (f.var[1] != 'a' && f.var[1] != 'b') ||
        (f.var[0] != 'X' && f.var[0] != 'Y' && f.var[0] != 'Z')) {
      throw std::invalid_argument("corner filters use Xa, Ya, Za, Xb, Yb or Zb, got " + f.var);
    }
  }
  if (!out.slice_shape.add(std::move(cell))) {
    out.warnings.push_back("slice constraints are infeasible; nothing selected");
    return out;
  }
  for (const auto& o : store.objects()) {
    const bool corners_ok = std::all_of(corner_filters.begin(), corner_filters.end(),
                                        [&](const AxisConstraint& f) { return f.holds(o.corner(f.var)); });
    if (!corners_ok) continue;
    if (!is_empty(intersect(o.shape(), out.slice_shape))) out.selected.push_back(o);
  }
  return out;
}

bool window_belongs(const ModelStore& store, const std::string& window_id, const std::string& room_id,
                    const Rational& epsilon) {
  const BimObject& window = store.at(window_id);
  const BimObject& room = store.at(room_id);
  Point low = room.low, high = room.high;
  for (auto& [d, v] : low.coords) v -= epsilon;
  for (auto& [d, v] : high.coords) v += epsilon;
  return !is_empty(intersect(window.shape(), box(low, high)));
}

// ---------------------------------------------------------------------------
// Coverage

std::string to_tsv(const CoverageEntry& e, bool with_shapes) {
  std::ostringstream os;
  os << e.id << '\t' << (e.covered ? "covered" : "uncovered") << '\t' << e.leftover.size() << '\n';
  if (with_shapes) {
    for (const auto& c : e.leftover.cells()) os << "  " << c.dump() << '\n';
  }
  return os.str();
}

std::string CoverageReport::to_tsv(bool with_shapes) const {
  std::string out;
  for (const auto& e : entries) out += bimclp::to_tsv(e, with_shapes);
  return out;
}

bool boxes_meet(const BimObject& a, const BimObject& b) {
  for (const char* d : {"X", "Y", "Z"}) {
    if (!(a.low[d] < b.high[d] && b.low[d] < a.high[d])) return false;
  }
  return true;
}

CoverageEntry cover_target(const BimObject& target, const std::vector<BimObject>& covers) {
  Shape cut(kXYZ);
  for (const auto& c : covers) {
    if (boxes_meet(target, c)) cut = shape_union(cut, c.shape());
  }
  CoverageEntry e{target.id, false, subtract(target.shape(), cut)};
  e.covered = is_empty(e.leftover);
  return e;
}

namespace {

CoverageReport tally(std::vector<CoverageEntry> entries) {
  CoverageReport r;
  r.targets = entries.size();
  r.uncovered = static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const CoverageEntry& e) { return !e.covered; }));
  r.entries = std::move(entries);
  return r;
}

}  // namespace

CoverageReport coverage(const std::vector<BimObject>& targets, const std::vector<BimObject>& covers,
                        Execution exec) {
  std::vector<CoverageEntry> entries(targets.size());
  const auto n = static_cast<std::int64_t>(targets.size());
  if (exec == Execution::Serial) {
    for (std::int64_t i = 0; i < n; ++i) entries[i] = cover_target(targets[i], covers);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) entries[i] = cover_target(targets[i], covers);
  }
  return tally(std::move(entries));
}

CoverageReport coverage_stream(const std::vector<BimObject>& targets, const std::vector<BimObject>& covers,
                               const std::function<void(const CoverageEntry&)>& sink) {
  std::vector<CoverageEntry> entries;
  entries.reserve(targets.size());
  for (const auto& t : targets) {
    entries.push_back(cover_target(t, covers));
    sink(entries.back());
  }
  return tally(std::move(entries));
}

}  // namespace bimclp

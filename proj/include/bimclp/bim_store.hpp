#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bimclp/execution.hpp"
#include "bimclp/linear.hpp"
#include "bimclp/shape.hpp"

namespace bimclp {

/// One `object(Label, Id, point(Xa,Ya,Za), point(Xb,Yb,Zb), Extra).` fact:
/// an IFC-labelled axis-aligned bounding box. Extra is either the centroid
/// point or a model tag such as `arq` / `str`.
struct BimObject {
  std::string label;
  std::string id;
  Point low;
  Point high;
  std::variant<Point, std::string> extra;

  Shape shape() const { return box(low, high); }
  /// Coordinate `var` of a corner: Xa, Ya, Za (low) or Xb, Yb, Zb (high).
  const Rational& corner(std::string_view var) const;
  std::optional<std::string> tag() const;

  std::string to_fact() const;
};

class ModelStore {
 public:
  ModelStore() = default;
  /// Throws std::invalid_argument on duplicate ids.
  explicit ModelStore(std::vector<BimObject> objects);

  const std::vector<BimObject>& objects() const noexcept { return objects_; }
  const BimObject* find(const std::string& id) const;
  /// Throws std::out_of_range for an unknown id.
  const BimObject& at(const std::string& id) const;
  /// Lower-cased label -> object positions, in file order.
  const std::map<std::string, std::vector<std::size_t>>& label_index() const noexcept { return by_label_; }
  const std::map<std::string, std::vector<std::size_t>>& tag_index() const noexcept { return by_tag_; }

 private:
  std::vector<BimObject> objects_;
  std::map<std::string, std::size_t> by_id_;
  std::map<std::string, std::vector<std::size_t>> by_label_;
  std::map<std::string, std::vector<std::size_t>> by_tag_;
};

struct LoadResult {
  ModelStore store;
  std::vector<std::string> warnings;  // one per skipped degenerate box
};

/// Reads object/5 facts with exact rational coordinates; facts of other
/// predicates are ignored. Throws ParseError (with line) on syntax errors,
/// malformed object facts and duplicate ids.
LoadResult load_facts(std::string_view text);

/// Re-serializes every object as an object/5 fact, one per line.
std::string serialize(const ModelStore& store);

/// Objects matching all given filters, in file order. Labels compare
/// case-insensitively (IfcBeam matches ifcbeam).
std::vector<BimObject> select(const ModelStore& store, const std::optional<std::string>& label,
                              const std::optional<std::string>& tag);

struct SliceResult {
  std::vector<BimObject> selected;
  Shape slice_shape{kXYZ};
  std::vector<std::string> warnings;
};

/// Objects whose box meets the (possibly unbounded) cell of `constraints`
/// and whose corners satisfy every corner filter (vars Xa..Zb).
SliceResult slice(const ModelStore& store, const std::vector<Halfspace>& constraints,
                  const std::vector<AxisConstraint>& corner_filters = {});

/// Whether the window box meets the room box inflated by `epsilon` per side.
bool window_belongs(const ModelStore& store, const std::string& window_id, const std::string& room_id,
                    const Rational& epsilon = Rational(0));

struct CoverageEntry {
  std::string id;
  bool covered = false;
  Shape leftover{kXYZ};
};

/// `id<TAB>covered|uncovered<TAB>n_leftover_cells`, newline-terminated, then
/// optionally the indented leftover cell dumps.
std::string to_tsv(const CoverageEntry& e, bool with_shapes = false);

struct CoverageReport {
  std::vector<CoverageEntry> entries;
  std::size_t targets = 0;
  std::size_t uncovered = 0;

  /// One to_tsv line block per entry.
  std::string to_tsv(bool with_shapes = false) const;
};

/// Whether two objects' half-open boxes share a point.
bool boxes_meet(const BimObject& a, const BimObject& b);

/// Leftover of one target after removing every meeting cover.
CoverageEntry cover_target(const BimObject& target, const std::vector<BimObject>& covers);

/// Serial walks targets in order; Parallel distributes targets over OpenMP
/// workers. Entries follow target order either way.
CoverageReport coverage(const std::vector<BimObject>& targets, const std::vector<BimObject>& covers,
                        Execution exec = Execution::Parallel);

/// Serial coverage that hands each entry to `sink` as soon as it is known.
CoverageReport coverage_stream(const std::vector<BimObject>& targets, const std::vector<BimObject>& covers,
                               const std::function<void(const CoverageEntry&)>& sink);

}  // namespace bimclp

#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "bimclp/execution.hpp"
#include "bimclp/linear.hpp"

namespace bimclp {

using Dims = std::vector<Dim>;

inline const Dims kXY{"X", "Y"};
inline const Dims kXYZ{"X", "Y", "Z"};

/// A point with one rational coordinate per named dimension.
struct Point {
  Valuation coords;

  Point() = default;
  Point(std::initializer_list<Valuation::value_type> init) : coords(init) {}
  explicit Point(Valuation c) : coords(std::move(c)) {}

  /// Zips `dims` with `values`; sizes must match.
  static Point of(const Dims& dims, const std::vector<Rational>& values);
  static Point xy(Rational x, Rational y) { return Point{{"X", x}, {"Y", y}}; }
  static Point xyz(Rational x, Rational y, Rational z) { return Point{{"X", x}, {"Y", y}, {"Z", z}}; }

  const Rational& operator[](const Dim& d) const { return coords.at(d); }
  Dims dims() const;
  std::string to_string() const;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// A feasible conjunction of halfspaces. Infeasible systems never become cells.
class ConvexCell {
 public:
  static std::optional<ConvexCell> make(LinSystem system);
  /// The unconstrained cell over `dims`.
  static ConvexCell whole(Dims dims);

  const LinSystem& system() const noexcept { return system_; }
  const Dims& dims() const noexcept { return system_.dims(); }
  const std::vector<Halfspace>& halfspaces() const noexcept { return system_.halfspaces(); }

  bool contains(const Point& p) const;
  /// Every halfspace constrains a single dimension.
  bool is_box() const;

  /// `convex{X in [1,4), Y in [2,5)}` for box cells, otherwise the
  /// halfspaces in construction order.
  std::string dump() const;

 private:
  explicit ConvexCell(LinSystem s) : system_(std::move(s)) {}
  LinSystem system_;
};

/// A finite union of convex cells over shared dimensions. No cells means the
/// empty shape.
class Shape {
 public:
  explicit Shape(Dims dims) : dims_(std::move(dims)) {}
  static Shape whole(Dims dims);

  const Dims& dims() const noexcept { return dims_; }
  const std::vector<ConvexCell>& cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }

  void add(ConvexCell cell);
  /// Adds the system as a cell if it is feasible; returns whether it was added.
  bool add(LinSystem system);

  /// One cell dump per line, in cell order.
  std::string dump() const;

 private:
  Dims dims_;
  std::vector<ConvexCell> cells_;
};

// -- constructors -----------------------------------------------------------

/// Half-open box low <= x < high. Empty shape when some side has zero or
/// negative width.
Shape box(const Point& low, const Point& high);

/// Extrudes a clockwise convex polygon (vertices at the height of the first
/// vertex) by `height` along Z. Edge halfspaces include the boundary; Z is
/// half-open. Throws std::invalid_argument for < 3 vertices, height <= 0,
/// repeated consecutive vertices, or an empty (e.g. counter-clockwise) result.
Shape poly_extrude(const std::vector<Point>& vertices, const Rational& height);

// -- set operations ---------------------------------------------------------

Shape shape_union(const Shape& a, const Shape& b);

/// Pairwise conjunction of cells, dropping infeasible pairs and pruning
/// redundant halfspaces of each kept cell.
Shape intersect(const Shape& a, const Shape& b);

/// Disjoint staircase complement: cell i is {h1 .. h(i-1), not h(i)}.
Shape complement_cell(const ConvexCell& c);

/// Complement of a union of cells; the complement of the empty shape is the
/// whole space.
Shape complement(const Shape& a);

/// a minus b, narrowing each cell of a by the staircase complement of each
/// intersecting cell of b in turn. Pieces of one source cell stay disjoint.
Shape subtract(const Shape& a, const Shape& b);

bool is_empty(const Shape& a);
bool contains_point(const Shape& a, const Point& p);
bool equivalent(const Shape& a, const Shape& b);

/// Per-dimension hull of all cells; unbounded sides are absent bounds.
struct BoundingBox {
  Dims dims;
  std::vector<Interval> extents;

  bool bounded() const;
  /// Only meaningful when bounded().
  Point low() const;
  Point high() const;
};

/// Throws std::domain_error on the empty shape.
BoundingBox bounding_box(const Shape& a);
BoundingBox bounding_box(const ConvexCell& c);

// -- grid sampling oracle ---------------------------------------------------

/// Regular grid over [low, high) with spacing `step`; the sample points are
/// offset by step/7 from the lower corner so they avoid the integer and
/// quarter-integer boundaries used by test shapes.
class Grid {
 public:
  Grid(Point low, Point high, Rational step);

  const Dims& dims() const noexcept { return dims_; }
  const Rational& step() const noexcept { return step_; }
  const Point& low() const noexcept { return low_; }
  std::size_t size() const noexcept { return size_; }
  const std::vector<std::size_t>& counts() const noexcept { return counts_; }

  /// Grid index per dimension, last dimension fastest.
  std::vector<std::size_t> unravel(std::size_t linear) const;
  Point point(std::size_t linear) const;

 private:
  Dims dims_;
  Point low_;
  Rational step_;
  std::vector<std::size_t> counts_;
  std::size_t size_ = 0;
};

/// Membership of every grid point in `a` (1 = member), indexed like Grid.
/// Serial evaluates each point with exact rational arithmetic; Parallel runs
/// an OpenMP kernel on integer-scaled halfspaces.
std::vector<std::uint8_t> grid_mask(const Shape& a, const Grid& grid,
                                    Execution exec = Execution::Parallel);

/// Grid points of [low, high) that lie in `a`.
std::vector<Point> sample_grid(const Shape& a, const Point& low, const Point& high,
                               const Rational& step);

}  // namespace bimclp

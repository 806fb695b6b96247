#include "bimclp/shape.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <omp.h>

namespace bimclp {

namespace {

void require_same_dims(const Shape& a, const Shape& b, const char* op) {
  if (a.dims() != b.dims()) throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}

void require_point_dims(const Dims& dims, const Point& p) {
  if (p.coords.size() != dims.size()) throw std::invalid_argument("point dimension mismatch");
  for (const auto& d : dims) {
    if (!p.coords.contains(d)) throw std::invalid_argument("point lacks dimension " + d);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Point

Point Point::of(const Dims& dims, const std::vector<Rational>& values) {
  if (dims.size() != values.size()) throw std::invalid_argument("Point::of: size mismatch");
  Point p;
  for (std::size_t i = 0; i < dims.size(); ++i) p.coords.emplace(dims[i], values[i]);
  return p;
}

Dims Point::dims() const {
  Dims out;
  for (const auto& [d, v] : coords) out.push_back(d);
  return out;
}

std::string Point::to_string() const {
  std::string out = "(";
  bool first = true;
  for (const auto& [d, v] : coords) {
    if (!first) out += ", ";
    out += v.to_text();
    first = false;
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// ConvexCell / Shape

std::optional<ConvexCell> ConvexCell::make(LinSystem system) {
  if (!is_feasible(system)) return std::nullopt;
  return ConvexCell(std::move(system));
}

ConvexCell ConvexCell::whole(Dims dims) { return ConvexCell(LinSystem(std::move(dims))); }

bool ConvexCell::contains(const Point& p) const {
  require_point_dims(dims(), p);
  return system_.contains(p.coords);
}

bool ConvexCell::is_box() const {
  return std::all_of(halfspaces().begin(), halfspaces().end(),
                     [](const Halfspace& h) { return h.single_dim().has_value(); });
}

std::string ConvexCell::dump() const {
  std::ostringstream os;
  os << "convex{";
  bool first = true;
  if (is_box()) {
    for (const auto& d : dims()) {
      const bool constrained = std::any_of(halfspaces().begin(), halfspaces().end(),
                                           [&](const Halfspace& h) { return h.mentions(d); });
      if (!constrained) continue;
      if (!first) os << ", ";
      os << d << " in " << interval_of(system_, d).to_string();
      first = false;
    }
  } else {
    for (const auto& h : halfspaces()) {
      if (!first) os << ", ";
      os << h.to_string();
      first = false;
    }
  }
  os << "}";
  return os.str();
}

Shape Shape::whole(Dims dims) {
  Shape s(dims);
  s.cells_.push_back(ConvexCell::whole(std::move(dims)));
  return s;
}

void Shape::add(ConvexCell cell) {
  if (cell.dims() != dims_) throw std::invalid_argument("cell dimension mismatch");
  cells_.push_back(std::move(cell));
}

bool Shape::add(LinSystem system) {
  if (system.dims() != dims_) throw std::invalid_argument("cell dimension mismatch");
  auto cell = ConvexCell::make(std::move(system));
  if (!cell) return false;
  cells_.push_back(std::move(*cell));
  return true;
}

std::string Shape::dump() const {
  std::string out;
  for (const auto& c : cells_) out += c.dump() + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Constructors

Shape box(const Point& low, const Point& high) {
  const Dims dims = low.dims();
  if (high.dims() != dims) throw std::invalid_argument("box: corner dimension mismatch");
  Shape out(dims);
  LinSystem system(dims);
  for (const auto& d : dims) {
    if (low[d] >= high[d]) return out;
    system.add(Halfspace::axis(d, Comparison::Ge, low[d]));
    system.add(Halfspace::axis(d, Comparison::Lt, high[d]));
  }
  out.add(std::move(system));
  return out;
}

Shape poly_extrude(const std::vector<Point>& vertices, const Rational& height) {
  if (vertices.size() < 3) throw std::invalid_argument("poly_extrude: need at least 3 vertices");
  if (height.sign() <= 0) throw std::invalid_argument("poly_extrude: height must be positive");
  for (const auto& v : vertices) {
    if (!v.coords.contains("X") || !v.coords.contains("Y") || !v.coords.contains("Z")) {
      throw std::invalid_argument("poly_extrude: vertices need X, Y and Z");
    }
  }
  LinSystem system(kXYZ);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Point& a = vertices[i];
    const Point& b = vertices[(i + 1) % vertices.size()];
    // (xb-xa)*(Y-ya) - (X-xa)*(yb-ya) <= 0
    const Rational dx = b["X"] - a["X"];
    const Rational dy = b["Y"] - a["Y"];
    if (dx.is_zero() && dy.is_zero()) throw std::invalid_argument("poly_extrude: repeated vertex");
    system.add(Halfspace({{"X", -dy}, {"Y", dx}}, Comparison::Le, dx * a["Y"] - dy * a["X"]));
  }
  const Rational& base = vertices.front()["Z"];
  system.add(Halfspace::axis("Z", Comparison::Ge, base));
  system.add(Halfspace::axis("Z", Comparison::Lt, base + height));
  Shape out(kXYZ);
  if (!out.add(std::move(system))) {
    throw std::invalid_argument("poly_extrude: empty polygon (vertices must be clockwise and convex)");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Set operations

Shape shape_union(const Shape& a, const Shape& b) {
  require_same_dims(a, b, "union");
  Shape out = a;
  for (const auto& c : b.cells()) out.add(c);
  return out;
}

namespace {

std::optional<ConvexCell> intersect_cells(const ConvexCell& a, const ConvexCell& b) {
  LinSystem joint = conjoin(a.system(), b.system());
  if (!is_feasible(joint)) return std::nullopt;
  return ConvexCell::make(prune_redundant(joint));
}

}  // namespace

Shape intersect(const Shape& a, const Shape& b) {
  require_same_dims(a, b, "intersect");
  Shape out(a.dims());
  for (const auto& ca : a.cells()) {
    for (const auto& cb : b.cells()) {
      if (auto c = intersect_cells(ca, cb)) out.add(std::move(*c));
    }
  }
  return out;
}

Shape complement_cell(const ConvexCell& c) {
  Shape out(c.dims());
  const auto& hs = c.halfspaces();
  for (std::size_t i = 0; i < hs.size(); ++i) {
    LinSystem step(c.dims());
    for (std::size_t j = 0; j < i; ++j) step.add(hs[j]);
    step.add(negate(hs[i]));
    out.add(std::move(step));
  }
  return out;
}

Shape complement(const Shape& a) {
  Shape out = Shape::whole(a.dims());
  for (const auto& c : a.cells()) {
    out = intersect(out, complement_cell(c));
    if (out.cells().empty()) break;
  }
  return out;
}

Shape subtract(const Shape& a, const Shape& b) {
  require_same_dims(a, b, "subtract");
  if (b.cells().empty()) return a;
  Shape out(a.dims());
  for (const auto& source : a.cells()) {
    std::vector<ConvexCell> pieces{source};
    for (const auto& cut : b.cells()) {
      std::vector<ConvexCell> next;
      std::optional<Shape> outside_cut;
      for (const auto& piece : pieces) {
        if (!is_feasible(conjoin(piece.system(), cut.system()))) {
          next.push_back(piece);
          continue;
        }
        if (!outside_cut) outside_cut = complement_cell(cut);
        for (const auto& outside : outside_cut->cells()) {
          if (auto c = intersect_cells(piece, outside)) next.push_back(std::move(*c));
        }
      }
      pieces = std::move(next);
      if (pieces.empty()) break;
    }
    for (auto& p : pieces) out.add(std::move(p));
  }
  return out;
}

bool is_empty(const Shape& a) { return a.cells().empty(); }

bool contains_point(const Shape& a, const Point& p) {
  require_point_dims(a.dims(), p);
  return std::any_of(a.cells().begin(), a.cells().end(),
                     [&](const ConvexCell& c) { return c.system().contains(p.coords); });
}

bool equivalent(const Shape& a, const Shape& b) {
  require_same_dims(a, b, "equivalent");
  return is_empty(subtract(a, b)) && is_empty(subtract(b, a));
}

// ---------------------------------------------------------------------------
// Bounding boxes

bool BoundingBox::bounded() const {
  return std::all_of(extents.begin(), extents.end(), [](const Interval& i) { return i.bounded(); });
}

Point BoundingBox::low() const {
  Point p;
  for (std::size_t i = 0; i < dims.size(); ++i) p.coords.emplace(dims[i], extents[i].lower.value().value);
  return p;
}

Point BoundingBox::high() const {
  Point p;
  for (std::size_t i = 0; i < dims.size(); ++i) p.coords.emplace(dims[i], extents[i].upper.value().value);
  return p;
}

BoundingBox bounding_box(const ConvexCell& c) {
  BoundingBox out{c.dims(), {}};
  for (const auto& d : c.dims()) out.extents.push_back(interval_of(c.system(), d));
  return out;
}

BoundingBox bounding_box(const Shape& a) {
  if (is_empty(a)) throw std::domain_error("bounding_box of the empty shape");
  BoundingBox out = bounding_box(a.cells().front());
  for (std::size_t k = 1; k < a.cells().size(); ++k) {
    const BoundingBox next = bounding_box(a.cells()[k]);
    for (std::size_t i = 0; i < out.dims.size(); ++i) {
      Interval& acc = out.extents[i];
      const Interval& in = next.extents[i];
      if (!acc.lower || !in.lower) {
        acc.lower.reset();
      } else if (in.lower->value < acc.lower->value ||
                 (in.lower->value == acc.lower->value && !in.lower->open)) {
        acc.lower = in.lower;
      }
      if (!acc.upper || !in.upper) {
        acc.upper.reset();
      } else if (in.upper->value > acc.upper->value ||
                 (in.upper->value == acc.upper->value && !in.upper->open)) {
        acc.upper = in.upper;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Grid sampling

namespace {

Integer ceil_div(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.raw().get_num_mpz_t(), q.raw().get_den_mpz_t());
  return out;
}

const Rational kOffset(1, 7);

}  // namespace

Grid::Grid(Point low, Point high, Rational step) : low_(std::move(low)), step_(std::move(step)) {
  dims_ = low_.dims();
  if (high.dims() != dims_) throw std::invalid_argument("Grid: corner dimension mismatch");
  if (step_.sign() <= 0) throw std::invalid_argument("Grid: step must be positive");
  size_ = 1;
  for (const auto& d : dims_) {
    const Rational q = (high[d] - low_[d]) / step_ - kOffset;
    const Integer n = q.sign() > 0 ? ceil_div(q) : Integer(0);
    if (!n.fits_ulong_p()) throw std::invalid_argument("Grid: too many points");
    counts_.push_back(n.get_ui());
    size_ *= counts_.back();
  }
}

std::vector<std::size_t> Grid::unravel(std::size_t linear) const {
  std::vector<std::size_t> idx(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    idx[k] = linear % counts_[k];
    linear /= counts_[k];
  }
  return idx;
}

Point Grid::point(std::size_t linear) const {
  const auto idx = unravel(linear);
  Point p;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    p.coords.emplace(dims_[k], low_[dims_[k]] + (Rational(static_cast<long>(idx[k])) + kOffset) * step_);
  }
  return p;
}

namespace {

// Halfspace rewritten over t_d = 7*i_d + 1 with integer coefficients:
// sum(coeff[d] * t_d) rel bound.
struct IntRow {
  std::vector<std::int64_t> coeff;
  std::int64_t bound;
  bool strict;
};

using IntCell = std::vector<IntRow>;

bool fits(const Integer& v, const Integer& limit) { return abs(v) <= limit; }

std::optional<std::vector<IntCell>> compile(const Shape& a, const Grid& grid) {
  const Dims& dims = grid.dims();
  const Integer limit = Integer(1) << 62;
  Integer max_t = 1;
  for (auto n : grid.counts()) {
    const Integer t = 7 * static_cast<long>(n) + 1;
    if (t > max_t) max_t = t;
  }

  std::vector<IntCell> out;
  for (const auto& cell : a.cells()) {
    IntCell compiled;
    for (const auto& h : cell.halfspaces()) {
      std::vector<Rational> c(dims.size());
      Rational r = h.bound();
      for (std::size_t k = 0; k < dims.size(); ++k) {
        const Rational coeff = h.coefficient(dims[k]);
        c[k] = coeff * grid.step() / Rational(7);
        r -= coeff * grid.low()[dims[k]];
      }
      Integer scale = r.denominator();
      for (const auto& x : c) scale = lcm(scale, x.denominator());
      IntRow row{{}, 0, h.strict()};
      Integer magnitude = 0;
      for (const auto& x : c) {
        const Integer v = (x * Rational(scale)).numerator();
        magnitude += abs(v) * max_t;
        row.coeff.push_back(v.fits_slong_p() ? v.get_si() : 0);
      }
      const Integer rb = (r * Rational(scale)).numerator();
      magnitude += abs(rb);
      if (!fits(magnitude, limit)) return std::nullopt;
      row.bound = rb.get_si();
      compiled.push_back(std::move(row));
    }
    out.push_back(std::move(compiled));
  }
  return out;
}

bool member(const std::vector<IntCell>& cells, const std::vector<std::int64_t>& t) {
  for (const auto& cell : cells) {
    bool inside = true;
    for (const auto& row : cell) {
      std::int64_t lhs = 0;
      for (std::size_t k = 0; k < t.size(); ++k) lhs += row.coeff[k] * t[k];
      if (row.strict ? lhs >= row.bound : lhs > row.bound) {
        inside = false;
        break;
      }
    }
    if (inside) return true;
  }
  return false;
}

}  // namespace

std::vector<std::uint8_t> grid_mask(const Shape& a, const Grid& grid, Execution exec) {
  Dims sorted = a.dims();
  std::sort(sorted.begin(), sorted.end());
  if (sorted != grid.dims()) throw std::invalid_argument("grid_mask: dimension mismatch");
  std::vector<std::uint8_t> mask(grid.size(), 0);
  const auto n = static_cast<std::int64_t>(grid.size());

  if (exec == Execution::Serial) {
    for (std::int64_t i = 0; i < n; ++i) {
      mask[static_cast<std::size_t>(i)] = contains_point(a, grid.point(static_cast<std::size_t>(i)));
    }
    return mask;
  }

  const auto compiled = compile(a, grid);
  if (!compiled) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      mask[static_cast<std::size_t>(i)] = contains_point(a, grid.point(static_cast<std::size_t>(i)));
    }
    return mask;
  }

  const auto& cells = *compiled;
  const auto& counts = grid.counts();
#pragma omp parallel
  {
    std::vector<std::int64_t> t(counts.size());
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      auto rest = static_cast<std::size_t>(i);
      for (std::size_t k = counts.size(); k-- > 0;) {
        t[k] = 7 * static_cast<std::int64_t>(rest % counts[k]) + 1;
        rest /= counts[k];
      }
      mask[static_cast<std::size_t>(i)] = member(cells, t);
    }
  }
  return mask;
}

std::vector<Point> sample_grid(const Shape& a, const Point& low, const Point& high,
                               const Rational& step) {
  const Grid grid(low, high, step);
  const auto mask = grid_mask(a, grid, Execution::Parallel);
  std::vector<Point> out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(grid.point(i));
  }
  return out;
}

// ---------------------------------------------------------------------------

void set_worker_count(int workers) {
  if (workers > 0) omp_set_num_threads(workers);
}

int worker_count() { return omp_get_max_threads(); }

}  // namespace bimclp

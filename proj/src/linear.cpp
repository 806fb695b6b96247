#include "bimclp/linear.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bimclp {

std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::Le: return "<=";
    case Comparison::Lt: return "<";
    case Comparison::Ge: return ">=";
    case Comparison::Gt: return ">";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Halfspace

Halfspace::Halfspace(Coefficients coefficients, Comparison cmp, Rational bound)
    : coefficients_(std::move(coefficients)), bound_(std::move(bound)) {
  if (cmp == Comparison::Ge || cmp == Comparison::Gt) {
    for (auto& [dim, c] : coefficients_) c = -c;
    bound_ = -bound_;
  }
  relation_ = (cmp == Comparison::Lt || cmp == Comparison::Gt) ? Relation::Less : Relation::LessEq;
  normalize();
}

Halfspace Halfspace::axis(const Dim& dim, Comparison cmp, Rational bound) {
  return Halfspace({{dim, Rational(1)}}, cmp, std::move(bound));
}

void Halfspace::normalize() {
  std::erase_if(coefficients_, [](const auto& kv) { return kv.second.is_zero(); });
  if (coefficients_.empty()) throw std::invalid_argument("halfspace needs a nonzero coefficient");
  const Rational scale = coefficients_.begin()->second.abs();
  if (scale != Rational(1)) {
    for (auto& [dim, c] : coefficients_) c /= scale;
    bound_ /= scale;
  }
}

Rational Halfspace::coefficient(const Dim& dim) const {
  auto it = coefficients_.find(dim);
  return it == coefficients_.end() ? Rational(0) : it->second;
}

std::optional<Dim> Halfspace::single_dim() const {
  if (coefficients_.size() != 1) return std::nullopt;
  return coefficients_.begin()->first;
}

bool Halfspace::contains(const Valuation& point) const {
  Rational lhs;
  for (const auto& [dim, c] : coefficients_) lhs += c * point.at(dim);
  return strict() ? lhs < bound_ : lhs <= bound_;
}

std::string Halfspace::to_string() const {
  std::ostringstream os;
  if (auto dim = single_dim()) {
    const Rational& c = coefficients_.begin()->second;
    const Rational value = bound_ / c;
    if (c.sign() > 0) {
      os << *dim << (strict() ? " < " : " <= ") << value.to_text();
    } else {
      os << *dim << (strict() ? " > " : " >= ") << value.to_text();
    }
    return os.str();
  }
  bool first = true;
  for (const auto& [dim, c] : coefficients_) {
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (mag != Rational(1)) os << mag.to_text() << "*";
    os << dim;
    first = false;
  }
  os << (strict() ? " < " : " <= ") << bound_.to_text();
  return os.str();
}

Halfspace negate(const Halfspace& h) {
  Halfspace out;
  out.coefficients_ = h.coefficients_;
  for (auto& [dim, c] : out.coefficients_) c = -c;
  out.bound_ = -h.bound_;
  out.relation_ = h.strict() ? Relation::LessEq : Relation::Less;
  out.normalize();
  return out;
}

// ---------------------------------------------------------------------------
// AxisConstraint

bool AxisConstraint::holds(const Rational& x) const {
  switch (cmp) {
    case Comparison::Le: return x <= value;
    case Comparison::Lt: return x < value;
    case Comparison::Ge: return x >= value;
    case Comparison::Gt: return x > value;
  }
  return false;
}

AxisConstraint parse_axis_constraint(std::string_view text) {
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  const std::size_t var_begin = i;
  if (i >= text.size() || !(std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
    throw ParseError("expected a variable name", i);
  }
  while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
  AxisConstraint out{std::string(text.substr(var_begin, i - var_begin)), Comparison::Le, Rational()};
  skip_ws();
  if (i >= text.size()) throw ParseError("expected a comparison operator", i);
  if (text.substr(i, 2) == ">=") {
    out.cmp = Comparison::Ge;
    i += 2;
  } else if (text.substr(i, 2) == "<=" || text.substr(i, 2) == "=<") {
    out.cmp = Comparison::Le;
    i += 2;
  } else if (text[i] == '>') {
    out.cmp = Comparison::Gt;
    ++i;
  } else if (text[i] == '<') {
    out.cmp = Comparison::Lt;
    ++i;
  } else {
    throw ParseError("expected one of >=, >, <=, <", i);
  }
  skip_ws();
  std::size_t end = text.size();
  while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  try {
    out.value = Rational::parse(text.substr(i, end - i));
  } catch (const ParseError& e) {
    throw ParseError(e.what(), i + e.position());
  }
  return out;
}

// ---------------------------------------------------------------------------
// LinSystem

LinSystem::LinSystem(std::vector<Dim> dims) : dims_(std::move(dims)) {
  auto sorted = dims_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate dimension name");
  }
}

LinSystem::LinSystem(std::vector<Dim> dims, std::vector<Halfspace> halfspaces)
    : LinSystem(std::move(dims)) {
  for (auto& h : halfspaces) add(std::move(h));
}

bool LinSystem::has_dim(const Dim& dim) const {
  return std::find(dims_.begin(), dims_.end(), dim) != dims_.end();
}

void LinSystem::add(Halfspace h) {
  for (const auto& [dim, c] : h.coefficients()) {
    if (!has_dim(dim)) throw std::invalid_argument("halfspace mentions unknown dimension " + dim);
  }
  halfspaces_.push_back(std::move(h));
}

bool LinSystem::contains(const Valuation& point) const {
  if (contradictory_) return false;
  return std::all_of(halfspaces_.begin(), halfspaces_.end(),
                     [&](const Halfspace& h) { return h.contains(point); });
}

LinSystem conjoin(const LinSystem& a, const LinSystem& b) {
  if (a.dims() != b.dims()) throw std::invalid_argument("conjoin: dimension mismatch");
  if (a.contradictory()) return a;
  if (b.contradictory()) return b;
  LinSystem out(a.dims(), a.halfspaces());
  for (const auto& h : b.halfspaces()) out.add(h);
  return out;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin over dense rows

namespace {

struct Row {
  std::vector<Rational> a;
  Rational b;
  bool strict = false;
};

bool is_ground(const Row& r) {
  return std::all_of(r.a.begin(), r.a.end(), [](const Rational& x) { return x.is_zero(); });
}

bool ground_holds(const Row& r) { return r.strict ? r.b.sign() > 0 : r.b.sign() >= 0; }

void normalize(Row& r) {
  for (const auto& x : r.a) {
    if (x.is_zero()) continue;
    const Rational scale = x.abs();
    if (scale != Rational(1)) {
      for (auto& y : r.a) y /= scale;
      r.b /= scale;
    }
    return;
  }
}

bool tighter(const Row& x, const Row& y) {
  if (x.b != y.b) return x.b < y.b;
  return x.strict && !y.strict;
}

// Drops true ground rows and keeps only the tightest of parallel rows, in
// first-occurrence order. Returns false on a false ground row.
bool tidy(std::vector<Row>& rows) {
  std::vector<Row> out;
  std::map<std::vector<Rational>, std::size_t> seen;
  for (auto& r : rows) {
    if (is_ground(r)) {
      if (!ground_holds(r)) return false;
      continue;
    }
    auto [it, inserted] = seen.try_emplace(r.a, out.size());
    if (inserted) {
      out.push_back(std::move(r));
    } else if (tighter(r, out[it->second])) {
      out[it->second] = std::move(r);
    }
  }
  rows = std::move(out);
  return true;
}

void eliminate_column(std::vector<Row>& rows, std::size_t k) {
  std::vector<const Row*> lower, upper;
  std::vector<Row> next;
  for (const auto& r : rows) {
    const int s = r.a[k].sign();
    if (s < 0) {
      lower.push_back(&r);
    } else if (s > 0) {
      upper.push_back(&r);
    } else {
      next.push_back(r);
    }
  }
  for (const Row* lo : lower) {
    for (const Row* up : upper) {
      // up.a[k] > 0, lo.a[k] < 0: up * |lo.a[k]| + lo * up.a[k] cancels column k.
      const Rational wu = -lo->a[k];
      const Rational wl = up->a[k];
      Row combined;
      combined.a.resize(up->a.size());
      for (std::size_t j = 0; j < combined.a.size(); ++j) {
        combined.a[j] = j == k ? Rational(0) : up->a[j] * wu + lo->a[j] * wl;
      }
      combined.b = up->b * wu + lo->b * wl;
      combined.strict = up->strict || lo->strict;
      normalize(combined);
      next.push_back(std::move(combined));
    }
  }
  rows = std::move(next);
}

// Eliminates every column flagged in `drop`, choosing at each step the column
// with the fewest lower*upper pairings. Returns false if infeasibility shows up.
bool project(std::vector<Row>& rows, std::vector<bool> drop) {
  if (!tidy(rows)) return false;
  for (;;) {
    std::size_t best = drop.size();
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t k = 0; k < drop.size(); ++k) {
      if (!drop[k]) continue;
      std::size_t lo = 0, up = 0;
      for (const auto& r : rows) {
        const int s = r.a[k].sign();
        lo += s < 0;
        up += s > 0;
      }
      if (lo == 0 && up == 0) {
        drop[k] = false;
        continue;
      }
      if (lo * up < best_cost) {
        best_cost = lo * up;
        best = k;
      }
    }
    if (best == drop.size()) return true;
    eliminate_column(rows, best);
    drop[best] = false;
    if (!tidy(rows)) return false;
  }
}

std::vector<Row> to_rows(const LinSystem& s) {
  std::vector<Row> rows;
  rows.reserve(s.size());
  const auto& dims = s.dims();
  for (const auto& h : s.halfspaces()) {
    Row r;
    r.a.resize(dims.size());
    for (const auto& [dim, c] : h.coefficients()) {
      const auto idx = static_cast<std::size_t>(std::find(dims.begin(), dims.end(), dim) - dims.begin());
      r.a[idx] = c;
    }
    r.b = h.bound();
    r.strict = h.strict();
    rows.push_back(std::move(r));
  }
  return rows;
}

std::size_t dim_index(const LinSystem& s, const Dim& v) {
  const auto& dims = s.dims();
  auto it = std::find(dims.begin(), dims.end(), v);
  if (it == dims.end()) throw std::invalid_argument("unknown dimension " + v);
  return static_cast<std::size_t>(it - dims.begin());
}

}  // namespace

LinSystem eliminate(const LinSystem& s, const Dim& v) {
  const std::size_t k = dim_index(s, v);
  std::vector<Dim> dims = s.dims();
  dims.erase(dims.begin() + static_cast<std::ptrdiff_t>(k));
  LinSystem out(dims);
  if (s.contradictory()) {
    out.contradictory_ = true;
    return out;
  }
  std::vector<Row> rows = to_rows(s);
  std::vector<bool> drop(s.dims().size(), false);
  drop[k] = true;
  if (!project(rows, drop)) {
    out.contradictory_ = true;
    return out;
  }
  for (const auto& r : rows) {
    Coefficients coeffs;
    for (std::size_t j = 0; j < r.a.size(); ++j) {
      if (!r.a[j].is_zero()) coeffs.emplace(s.dims()[j], r.a[j]);
    }
    out.add(Halfspace(std::move(coeffs), r.strict ? Comparison::Lt : Comparison::Le, r.b));
  }
  return out;
}

bool is_feasible(const LinSystem& s) {
  if (s.contradictory()) return false;
  if (s.empty()) return true;
  std::vector<Row> rows = to_rows(s);
  return project(rows, std::vector<bool>(s.dims().size(), true));
}

bool entails(const LinSystem& s, const Halfspace& h) {
  LinSystem probe = s;
  probe.add(negate(h));
  return !is_feasible(probe);
}

LinSystem prune_redundant(const LinSystem& s) {
  if (!is_feasible(s)) return s;
  std::vector<Halfspace> kept = s.halfspaces();
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<Halfspace> rest;
    rest.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != i) rest.push_back(kept[j]);
    }
    if (entails(LinSystem(s.dims(), rest), kept[i])) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return LinSystem(s.dims(), std::move(kept));
}

// ---------------------------------------------------------------------------
// Intervals

bool Interval::contains(const Rational& x) const {
  if (lower && (lower->open ? x <= lower->value : x < lower->value)) return false;
  if (upper && (upper->open ? x >= upper->value : x > upper->value)) return false;
  return true;
}

std::string Interval::to_string() const {
  std::string out;
  out += lower ? (lower->open ? "(" : "[") + lower->value.to_text() : "(-inf";
  out += ",";
  out += upper ? upper->value.to_text() + (upper->open ? ")" : "]") : "+inf)";
  return out;
}

Interval interval_of(const LinSystem& s, const Dim& v) {
  const std::size_t k = dim_index(s, v);
  if (s.contradictory()) throw std::domain_error("interval_of: infeasible system");
  std::vector<Row> rows = to_rows(s);
  std::vector<bool> drop(s.dims().size(), true);
  drop[k] = false;
  if (!project(rows, drop)) throw std::domain_error("interval_of: infeasible system");

  Interval out;
  for (const auto& r : rows) {
    const Rational& c = r.a[k];
    Bound b{r.b / c, r.strict};
    if (c.sign() > 0) {
      if (!out.upper || b.value < out.upper->value || (b.value == out.upper->value && b.open)) out.upper = b;
    } else {
      if (!out.lower || b.value > out.lower->value || (b.value == out.lower->value && b.open)) out.lower = b;
    }
  }
  if (out.lower && out.upper) {
    const bool empty = out.lower->value > out.upper->value ||
                       (out.lower->value == out.upper->value && (out.lower->open || out.upper->open));
    if (empty) throw std::domain_error("interval_of: infeasible system");
  }
  return out;
}

}  // namespace bimclp

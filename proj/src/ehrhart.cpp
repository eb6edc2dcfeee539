#include "sposet/ehrhart.hpp"


#include "sposet/errors.hpp"
#include "sposet/exact_lp.hpp"

namespace sposet {

namespace {

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Bound from a single-coordinate row c * x_i >= b.
void tighten(const Halfspace& h, Eigen::Index i, std::optional<Rational>& lo, std::optional<Rational>& hi) {
  const int c = h.normal(i);
  const Rational bound = Rational(h.offset) / Rational(c);
  if (c > 0) {
    if (!lo || bound > *lo) lo = bound;
  } else {
    if (!hi || bound < *hi) hi = bound;
  }
}

}  // namespace

LatticeCounter::LatticeCounter(const HalfspaceSystem& system) : system_(system) {
  const int n = system_.dim();
  lower_.resize(n);
  upper_.resize(n);
  const RationalMatrix G = system_.normals();
  const RationalVector h = system_.offsets();
  for (int i = 0; i < n; ++i) {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    for (const Halfspace& row : system_.rows()) {
      bool single = row.normal(i) != 0;
      for (int j = 0; j < n && single; ++j)
        if (j != i && row.normal(j) != 0) single = false;
      if (single) tighten(row, i, lo, hi);
    }
    auto solve = [&](int direction) -> Rational {
      if (system_.size() == 0) throw UnboundedSystem("empty halfspace system has no bounding box");
      RationalVector c = RationalVector::Zero(n);
      c(i) = direction;
      const auto r = lp::minimize_over_polyhedron<Rational>(G, h, c);
      if (r.status == lp::Status::unbounded)
        throw UnboundedSystem("coordinate " + std::to_string(i + 1) + " is unbounded");
      if (r.status == lp::Status::infeasible) return Rational(0);
      return direction * r.value;
    };
    lower_(i) = lo ? *lo : solve(1);
    upper_(i) = hi ? *hi : solve(-1);
  }
  for (const Halfspace& row : system_.rows()) {
    for (int j = 0; j < n; ++j) flat_rows_.push_back(row.normal(j));
    flat_rows_.push_back(row.offset);
  }
}

template <typename Visit>
void LatticeCounter::scan(int t, bool strict, Visit&& visit) const {
  const int n = dim();
  if (t < 0) throw InputError("dilation factor must be nonnegative");
  std::vector<int> lo(static_cast<std::size_t>(n));
  std::vector<int> hi(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Rational a = lower_(i) * t;
    const Rational b = upper_(i) * t;
    // ceil(a), floor(b) for exact rationals.
    auto floor_of = [](const Rational& q) {
      using boost::multiprecision::denominator;
      using boost::multiprecision::numerator;
      auto num = numerator(q);
      auto den = denominator(q);
      auto f = num / den;
      if (num < 0 && f * den != num) f -= 1;
      return static_cast<int>(f);
    };
    lo[static_cast<std::size_t>(i)] = -floor_of(-a);
    hi[static_cast<std::size_t>(i)] = floor_of(b);
    if (lo[static_cast<std::size_t>(i)] > hi[static_cast<std::size_t>(i)]) return;
  }
  const std::size_t stride = static_cast<std::size_t>(n) + 1;
  const std::size_t nrows = system_.size();
  std::vector<int> x = lo;
  for (;;) {
    bool ok = true;
    for (std::size_t r = 0; r < nrows && ok; ++r) {
      const int* row = flat_rows_.data() + r * stride;
      long lhs = 0;
      for (int j = 0; j < n; ++j) lhs += static_cast<long>(row[j]) * x[static_cast<std::size_t>(j)];
      const long rhs = static_cast<long>(t) * row[n];
      ok = strict ? lhs > rhs : lhs >= rhs;
    }
    if (ok) visit(x);
    int k = n - 1;
    while (k >= 0 && x[static_cast<std::size_t>(k)] == hi[static_cast<std::size_t>(k)]) {
      x[static_cast<std::size_t>(k)] = lo[static_cast<std::size_t>(k)];
      --k;
    }
    if (k < 0) break;
    ++x[static_cast<std::size_t>(k)];
  }
}

std::int64_t LatticeCounter::count(int t, bool strict) const {
  std::int64_t c = 0;
  scan(t, strict, [&](const std::vector<int>&) { ++c; });
  return c;
}

std::vector<IntVector> LatticeCounter::points(int t, bool strict) const {
  std::vector<IntVector> out;
  scan(t, strict, [&](const std::vector<int>& x) {
    IntVector v(dim());
    for (int j = 0; j < dim(); ++j) v(j) = x[static_cast<std::size_t>(j)];
    out.push_back(std::move(v));
  });
  return out;
}

std::int64_t count_points(const HalfspaceSystem& H, int t, bool strict) {
  return LatticeCounter(H).count(t, strict);
}

namespace {

std::vector<std::int64_t> counts_up_to(const LatticeCounter& counter, int last) {
  std::vector<std::int64_t> out;
  for (int t = 0; t <= last; ++t) out.push_back(counter.count(t));
  return out;
}

RatPolynomial interpolate_counts(const std::vector<std::int64_t>& values) {
  std::vector<Rational> nodes;
  std::vector<Rational> ys;
  for (std::size_t t = 0; t < values.size(); ++t) {
    nodes.emplace_back(static_cast<long>(t));
    ys.emplace_back(static_cast<long>(values[t]));
  }
  return RatPolynomial::interpolate(nodes, ys);
}

}  // namespace

RatPolynomial ehrhart_polynomial(const HalfspaceSystem& H) {
  return interpolate_counts(counts_up_to(LatticeCounter(H), H.dim()));
}

IntPolynomial hstar_from_values(const std::vector<std::int64_t>& ehr) {
  const int n = static_cast<int>(ehr.size()) - 1;
  std::vector<std::int64_t> h(ehr.size(), 0);
  for (int j = 0; j <= n; ++j) {
    std::int64_t s = 0;
    for (int i = 0; i <= j; ++i) s += (i % 2 ? -1 : 1) * binomial(n + 1, i) * ehr[static_cast<std::size_t>(j - i)];
    if (s < 0) throw InternalInconsistency("negative h* coefficient " + std::to_string(s) + " at degree " + std::to_string(j));
    h[static_cast<std::size_t>(j)] = s;
  }
  return IntPolynomial(std::move(h));
}

IntPolynomial hstar_from_counts(const HalfspaceSystem& H) {
  return hstar_from_values(counts_up_to(LatticeCounter(H), H.dim()));
}

bool reciprocity_check(const HalfspaceSystem& H) {
  const LatticeCounter counter(H);
  const int n = H.dim();
  const RatPolynomial ehr = interpolate_counts(counts_up_to(counter, n));
  for (int t = 1; t <= n + 1; ++t) {
    Rational lhs = ehr(Rational(-t));
    if (n % 2) lhs = -lhs;
    if (lhs != Rational(static_cast<long>(counter.count(t, true)))) return false;
  }
  return true;
}

std::optional<int> gorenstein_index_by_counts(const HalfspaceSystem& H) {
  const LatticeCounter counter(H);
  const int n = H.dim();
  for (int k = 1; k <= n + 1; ++k) {
    const std::int64_t interior = counter.count(k, true);
    if (interior == 0) continue;
    if (interior != 1) return std::nullopt;
    for (int t = k + 1; t <= k + n; ++t)
      if (counter.count(t, true) != counter.count(t - k)) return std::nullopt;
    return k;
  }
  return std::nullopt;
}

}  // namespace sposet

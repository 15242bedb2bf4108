#ifndef NEXFUZ_LP_HPP
#define NEXFUZ_LP_HPP

#include "nexfuz/errors.hpp"
#include "nexfuz/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nexfuz {

enum class RelOp { Eq, Lt, Le, Gt, Ge };

struct LinConstraint {
  std::vector<Rational> coeffs;
  RelOp op = RelOp::Le;
  Rational rhs;
};

/// Conjunction of linear (in)equalities over num_vars rational unknowns.
struct LinSystem {
  std::size_t num_vars = 0;
  std::vector<LinConstraint> rows;

  explicit LinSystem(std::size_t n = 0) : num_vars(n) {}

  void add(std::vector<Rational> coeffs, RelOp op, Rational rhs) {
    coeffs.resize(num_vars);
    rows.push_back({std::move(coeffs), op, std::move(rhs)});
  }
};

inline bool satisfies(const LinConstraint& c, const std::vector<Rational>& x) {
  Rational lhs(0);
  for (std::size_t k = 0; k < c.coeffs.size(); ++k) {
    if (!c.coeffs[k].is_zero()) lhs += c.coeffs[k] * x.at(k);
  }
  switch (c.op) {
    case RelOp::Eq: return lhs == c.rhs;
    case RelOp::Lt: return lhs < c.rhs;
    case RelOp::Le: return lhs <= c.rhs;
    case RelOp::Gt: return lhs > c.rhs;
    case RelOp::Ge: return lhs >= c.rhs;
  }
  return false;
}

inline bool satisfies(const LinSystem& sys, const std::vector<Rational>& x) {
  if (x.size() != sys.num_vars) return false;
  return std::all_of(sys.rows.begin(), sys.rows.end(), [&](const LinConstraint& c) { return satisfies(c, x); });
}

constexpr std::size_t kDefaultLpVarCap = 64;

namespace detail {

// a·x <= b, or a·x < b when strict.
struct FmRow {
  std::vector<Rational> a;
  Rational b;
  bool strict = false;
};

struct FmStage {
  std::size_t var;
  std::vector<FmRow> rows;  // every row that mentioned var at elimination time
};

struct EqSubst {
  std::size_t var;
  std::vector<Rational> a;  // x_var = b - a·x over the other unknowns
  Rational b;
};

inline bool all_zero(const std::vector<Rational>& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& q) { return q.is_zero(); });
}

// Keeps one row per normalised direction, the tightest one.
inline void prune(std::vector<FmRow>& rows) {
  std::vector<FmRow> kept;
  for (auto& r : rows) {
    auto lead = std::find_if(r.a.begin(), r.a.end(), [](const Rational& q) { return !q.is_zero(); });
    Rational scale = lead->sign() < 0 ? -*lead : *lead;
    if (scale != Rational(1)) {
      for (auto& q : r.a) q /= scale;
      r.b /= scale;
    }
    bool merged = false;
    for (auto& k : kept) {
      if (k.a == r.a) {
        if (r.b < k.b || (r.b == k.b && r.strict)) {
          k.b = r.b;
          k.strict = r.strict;
        }
        merged = true;
        break;
      }
    }
    if (!merged) kept.push_back(std::move(r));
  }
  rows = std::move(kept);
}

// Drops constant rows; false if one of them is violated.
inline bool drop_constant_rows(std::vector<FmRow>& rows) {
  std::vector<FmRow> rest;
  for (auto& r : rows) {
    if (all_zero(r.a)) {
      if (r.strict ? !(Rational(0) < r.b) : !(Rational(0) <= r.b)) return false;
    } else {
      rest.push_back(std::move(r));
    }
  }
  rows = std::move(rest);
  return true;
}

}  // namespace detail

/// Exact Fourier–Motzkin feasibility. Strict inequalities are tracked through
/// combination. `order` permutes the elimination order (default 0..n-1).
/// Returns a satisfying point or nullopt when infeasible.
inline std::optional<std::vector<Rational>> fm_feasible(const LinSystem& sys,
                                                         const std::vector<std::size_t>& order = {},
                                                         std::size_t cap = kDefaultLpVarCap) {
  using detail::FmRow;
  const std::size_t n = sys.num_vars;
  if (n > cap) throw CapExceeded("linear system has " + std::to_string(n) + " unknowns, cap is " + std::to_string(cap));
  std::vector<std::size_t> ord = order;
  if (ord.empty()) {
    ord.resize(n);
    std::iota(ord.begin(), ord.end(), 0);
  }

  std::vector<FmRow> rows;
  std::vector<std::pair<std::vector<Rational>, Rational>> eqs;
  for (const auto& c : sys.rows) {
    std::vector<Rational> a = c.coeffs;
    a.resize(n);
    switch (c.op) {
      case RelOp::Eq: eqs.emplace_back(std::move(a), c.rhs); break;
      case RelOp::Le: rows.push_back({std::move(a), c.rhs, false}); break;
      case RelOp::Lt: rows.push_back({std::move(a), c.rhs, true}); break;
      case RelOp::Ge:
      case RelOp::Gt: {
        for (auto& q : a) q = -q;
        rows.push_back({std::move(a), -c.rhs, c.op == RelOp::Gt});
        break;
      }
    }
  }

  // Equalities first, by substitution.
  std::vector<detail::EqSubst> substs;
  std::vector<bool> eliminated(n, false);
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    auto& [a, b] = eqs[e];
    std::optional<std::size_t> pivot;
    for (std::size_t k : ord) {
      if (!a[k].is_zero()) {
        pivot = k;
        break;
      }
    }
    if (!pivot) {
      if (!b.is_zero()) return std::nullopt;
      continue;
    }
    const std::size_t k = *pivot;
    Rational ak = a[k];
    detail::EqSubst s{k, std::vector<Rational>(n, Rational(0)), b / ak};
    for (std::size_t j = 0; j < n; ++j) {
      if (j != k) s.a[j] = a[j] / ak;
    }
    auto apply = [&](std::vector<Rational>& row, Rational& rhs) {
      if (row[k].is_zero()) return;
      Rational f = row[k];
      row[k] = Rational(0);
      for (std::size_t j = 0; j < n; ++j) {
        if (!s.a[j].is_zero()) row[j] -= f * s.a[j];
      }
      rhs -= f * s.b;
    };
    for (std::size_t e2 = e + 1; e2 < eqs.size(); ++e2) apply(eqs[e2].first, eqs[e2].second);
    for (auto& r : rows) apply(r.a, r.b);
    eliminated[k] = true;
    substs.push_back(std::move(s));
  }

  if (!detail::drop_constant_rows(rows)) return std::nullopt;
  if (!rows.empty()) detail::prune(rows);

  std::vector<detail::FmStage> stages;
  for (std::size_t k : ord) {
    if (eliminated[k]) continue;
    std::vector<FmRow> pos, neg, rest;
    for (auto& r : rows) {
      int s = r.a[k].sign();
      (s > 0 ? pos : s < 0 ? neg : rest).push_back(std::move(r));
    }
    detail::FmStage stage{k, {}};
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        Rational fp = Rational(1) / p.a[k];
        Rational fq = Rational(1) / (-q.a[k]);
        FmRow c{std::vector<Rational>(n, Rational(0)), p.b * fp + q.b * fq, p.strict || q.strict};
        for (std::size_t j = 0; j < n; ++j) {
          if (j != k) c.a[j] = p.a[j] * fp + q.a[j] * fq;
        }
        rest.push_back(std::move(c));
      }
    }
    stage.rows = std::move(pos);
    stage.rows.insert(stage.rows.end(), std::make_move_iterator(neg.begin()), std::make_move_iterator(neg.end()));
    stages.push_back(std::move(stage));
    if (!detail::drop_constant_rows(rest)) return std::nullopt;
    if (!rest.empty()) detail::prune(rest);
    rows = std::move(rest);
  }

  std::vector<Rational> x(n, Rational(0));
  for (auto st = stages.rbegin(); st != stages.rend(); ++st) {
    const std::size_t k = st->var;
    std::optional<Rational> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& r : st->rows) {
      Rational rest = r.b;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k && !r.a[j].is_zero()) rest -= r.a[j] * x[j];
      }
      Rational bound = rest / r.a[k];
      if (r.a[k].sign() > 0) {
        if (!hi || bound < *hi || (bound == *hi && r.strict)) {
          hi_strict = (hi && bound == *hi) ? (hi_strict || r.strict) : r.strict;
          hi = bound;
        }
      } else {
        if (!lo || bound > *lo || (bound == *lo && r.strict)) {
          lo_strict = (lo && bound == *lo) ? (lo_strict || r.strict) : r.strict;
          lo = bound;
        }
      }
    }
    if (lo && hi) {
      if (*lo == *hi) {
        if (lo_strict || hi_strict) throw InternalError("Fourier-Motzkin back-substitution hit an empty range");
        x[k] = *lo;
      } else {
        if (*lo > *hi) throw InternalError("Fourier-Motzkin back-substitution hit an empty range");
        x[k] = (*lo + *hi) / Rational(2);
      }
    } else if (lo) {
      x[k] = *lo + Rational(1);
    } else if (hi) {
      x[k] = *hi - Rational(1);
    }
  }
  for (auto s = substs.rbegin(); s != substs.rend(); ++s) {
    Rational v = s->b;
    for (std::size_t j = 0; j < n; ++j) {
      if (!s->a[j].is_zero()) v -= s->a[j] * x[j];
    }
    x[s->var] = v;
  }
  if (!satisfies(sys, x)) throw InternalError("Fourier-Motzkin witness fails re-substitution");
  return x;
}

/// Default feasibility engine: Fourier–Motzkin under the variable cap.
inline std::optional<std::vector<Rational>> feasible(const LinSystem& sys, std::size_t cap = kDefaultLpVarCap) {
  return fm_feasible(sys, {}, cap);
}

namespace detail {

// Dense simplex tableau over rationals, Bland's rule.
// Maximises c·z subject to A z = b, z >= 0, starting from a feasible basis.
class SimplexTableau {
 public:
  SimplexTableau(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<std::size_t> basis)
      : a_(std::move(a)), b_(std::move(b)), basis_(std::move(basis)) {}

  // Returns false when the objective is unbounded.
  bool maximise(const std::vector<Rational>& c, const std::vector<bool>& allowed) {
    const std::size_t m = a_.size();
    const std::size_t cols = c.size();
    while (true) {
      // Reduced costs c_j - c_B B^-1 A_j; the tableau already stores B^-1 A.
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < cols && !enter; ++j) {
        if (!allowed[j] || is_basic(j)) continue;
        Rational rc = c[j];
        for (std::size_t i = 0; i < m; ++i) {
          if (!a_[i][j].is_zero()) rc -= c[basis_[i]] * a_[i][j];
        }
        if (rc.sign() > 0) enter = j;
      }
      if (!enter) return true;
      const std::size_t j = *enter;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m; ++i) {
        if (a_[i][j].sign() <= 0) continue;
        Rational ratio = b_[i] / a_[i][j];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, j);
    }
  }

  void pivot(std::size_t r, std::size_t j) {
    Rational p = a_[r][j];
    for (auto& q : a_[r]) q /= p;
    b_[r] /= p;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == r || a_[i][j].is_zero()) continue;
      Rational f = a_[i][j];
      for (std::size_t k = 0; k < a_[i].size(); ++k) {
        if (!a_[r][k].is_zero()) a_[i][k] -= f * a_[r][k];
      }
      b_[i] -= f * b_[r];
    }
    basis_[r] = j;
  }

  bool is_basic(std::size_t j) const { return std::find(basis_.begin(), basis_.end(), j) != basis_.end(); }

  std::vector<Rational> solution(std::size_t cols) const {
    std::vector<Rational> z(cols, Rational(0));
    for (std::size_t i = 0; i < basis_.size(); ++i) z[basis_[i]] = b_[i];
    return z;
  }

  std::vector<std::vector<Rational>>& rows() { return a_; }
  std::vector<std::size_t>& basis() { return basis_; }

 private:
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Exact two-phase simplex feasibility for systems too wide for elimination.
/// Strict rows are handled by maximising a common slack t <= 1 that every
/// strict row must exceed; the system is feasible iff the optimum has t > 0.
inline std::optional<std::vector<Rational>> simplex_feasible(const LinSystem& sys) {
  const std::size_t n = sys.num_vars;
  // Columns: x+ (n), x- (n), t, one slack per inequality, one artificial per row.
  std::size_t ineq = 0;
  for (const auto& c : sys.rows) ineq += c.op != RelOp::Eq;
  const std::size_t m = sys.rows.size() + 1;  // extra row: t + s = 1
  const std::size_t t_col = 2 * n;
  const std::size_t slack0 = t_col + 1;
  const std::size_t art0 = slack0 + ineq + 1;
  const std::size_t cols = art0 + m;

  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(cols, Rational(0)));
  std::vector<Rational> b(m, Rational(0));
  std::size_t slack = slack0;
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    const auto& c = sys.rows[i];
    // Bring every row to the form a·x (- t) (- s) = rhs, i.e. >= or >.
    Rational sign = (c.op == RelOp::Le || c.op == RelOp::Lt) ? Rational(-1) : Rational(1);
    for (std::size_t k = 0; k < n && k < c.coeffs.size(); ++k) {
      a[i][k] = sign * c.coeffs[k];
      a[i][n + k] = -sign * c.coeffs[k];
    }
    b[i] = sign * c.rhs;
    if (c.op == RelOp::Lt || c.op == RelOp::Gt) a[i][t_col] = Rational(-1);
    if (c.op != RelOp::Eq) a[i][slack++] = Rational(-1);
  }
  a[m - 1][t_col] = Rational(1);
  a[m - 1][slack] = Rational(1);
  b[m - 1] = Rational(1);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i].sign() < 0) {
      for (auto& q : a[i]) q = -q;
      b[i] = -b[i];
    }
    a[i][art0 + i] = Rational(1);
    basis[i] = art0 + i;
  }

  detail::SimplexTableau tab(std::move(a), std::move(b), std::move(basis));
  std::vector<bool> allowed(cols, true);
  std::vector<Rational> phase1(cols, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[art0 + i] = Rational(-1);
  tab.maximise(phase1, allowed);
  std::vector<Rational> z = tab.solution(cols);
  for (std::size_t i = 0; i < m; ++i) {
    if (!z[art0 + i].is_zero()) return std::nullopt;
  }
  // Drive remaining (zero-valued) artificials out of the basis where possible.
  for (std::size_t r = 0; r < m; ++r) {
    std::size_t bj = tab.basis()[r];
    if (bj < art0) continue;
    for (std::size_t j = 0; j < art0; ++j) {
      if (!tab.rows()[r][j].is_zero() && !tab.is_basic(j)) {
        tab.pivot(r, j);
        break;
      }
    }
  }
  for (std::size_t j = art0; j < cols; ++j) allowed[j] = tab.is_basic(j);
  std::vector<Rational> phase2(cols, Rational(0));
  phase2[t_col] = Rational(1);
  tab.maximise(phase2, allowed);
  z = tab.solution(cols);

  bool any_strict = std::any_of(sys.rows.begin(), sys.rows.end(),
                                [](const LinConstraint& c) { return c.op == RelOp::Lt || c.op == RelOp::Gt; });
  if (any_strict && z[t_col].sign() <= 0) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = z[k] - z[n + k];
  if (!satisfies(sys, x)) throw InternalError("simplex witness fails re-substitution");
  return x;
}

/// Null vector of an r x k matrix with k > rank, by exact Gaussian elimination.
inline std::optional<std::vector<Rational>> null_vector(std::vector<std::vector<Rational>> m, std::size_t k) {
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational lead = m[row][col];
    for (auto& q : m[row]) q /= lead;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      Rational f = m[i][col];
      for (std::size_t j = 0; j < k; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::optional<std::size_t> free_col;
  for (std::size_t col = 0; col < k && !free_col; ++col) {
    if (std::find(pivot_col.begin(), pivot_col.end(), col) == pivot_col.end()) free_col = col;
  }
  if (!free_col) return std::nullopt;
  std::vector<Rational> v(k, Rational(0));
  v[*free_col] = Rational(1);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][*free_col];
  return v;
}

/// Carathéodory reduction: rewrites the convex combination sum λ_u u of the
/// given points so that at most dim+1 weights are non-zero, keeping the
/// combined point fixed. Returns the indices of the surviving points.
inline std::vector<std::size_t> caratheodory_reduce(const std::vector<std::vector<Rational>>& points,
                                                    std::vector<Rational>& lambda) {
  std::vector<std::size_t> support;
  for (std::size_t u = 0; u < lambda.size(); ++u) {
    if (lambda[u].sign() > 0) support.push_back(u);
  }
  const std::size_t dim = points.empty() ? 0 : points.front().size();
  while (support.size() > dim + 1) {
    std::vector<std::vector<Rational>> m(dim + 1, std::vector<Rational>(support.size()));
    for (std::size_t s = 0; s < support.size(); ++s) {
      for (std::size_t d = 0; d < dim; ++d) m[d][s] = points[support[s]][d];
      m[dim][s] = Rational(1);
    }
    auto mu = null_vector(std::move(m), support.size());
    if (!mu) throw InternalError("no affine dependency among more than dim+1 points");
    if (std::none_of(mu->begin(), mu->end(), [](const Rational& q) { return q.sign() > 0; })) {
      for (auto& q : *mu) q = -q;
    }
    std::optional<Rational> theta;
    for (std::size_t s = 0; s < support.size(); ++s) {
      if ((*mu)[s].sign() > 0) {
        Rational r = lambda[support[s]] / (*mu)[s];
        if (!theta || r < *theta) theta = r;
      }
    }
    std::vector<std::size_t> next;
    for (std::size_t s = 0; s < support.size(); ++s) {
      Rational& l = lambda[support[s]];
      l -= *theta * (*mu)[s];
      if (l.sign() > 0) next.push_back(support[s]);
      else l = Rational(0);
    }
    support = std::move(next);
  }
  return support;
}

}  // namespace nexfuz

#endif  // NEXFUZ_LP_HPP

#include "algvar/param_solver.hpp"

#include <map>
#include <utility>

namespace algvar {

bool ParamCell::contains(const Assignment& point) const {
  for (const auto& e : equations)
    if (!e.eval(point).is_zero()) return false;
  for (const auto& q : inequations)
    if (q.eval(point).is_zero()) return false;
  return true;
}

namespace {

enum class Sign { zero, nonzero, undecided };

struct State {
  std::vector<MultiPoly> eqs;
  std::vector<MultiPoly> neqs;
  PolyMatrix m;  // augmented
  int col = 0;
  int prow = 0;
  std::vector<int> pivots;
};

class Solver {
 public:
  Solver(int columns, const ParamSolverOptions& options) : columns_(columns), options_(options) {}

  ParamSolveResult run(State initial) {
    ParamSolveResult result;
    std::vector<State> work;
    work.push_back(std::move(initial));
    int created = 1;
    while (!work.empty()) {
      State s = std::move(work.back());
      work.pop_back();
      if (!prepare(s)) {
        if (exhausted_) break;
        continue;  // empty cell
      }
      std::optional<MultiPoly> split;
      ParamCell cell;
      if (!eliminate(s, split, cell)) {
        if (exhausted_) break;
        if (++created > options_.max_cells) {
          exhausted_ = true;
          break;
        }
        State zero = s, nonzero = std::move(s);
        zero.eqs.push_back(*split);
        nonzero.neqs.push_back(*split);
        work.push_back(std::move(nonzero));
        work.push_back(std::move(zero));
        continue;
      }
      result.cells.push_back(std::move(cell));
    }
    if (exhausted_) {
      result.complete = false;
      result.note = "case split budget or groebner caps exhausted";
    }
    return result;
  }

 private:
  // Computes the basis of the cell and drops empty cells.
  bool prepare(State& s) {
    EmptinessResult e = is_empty(s.eqs, s.neqs, options_.groebner, {}, false);
    if (e.verdict == Verdict::yes) return false;
    if (e.verdict == Verdict::unknown) {
      exhausted_ = true;
      return false;
    }
    GroebnerResult g = buchberger(Ideal(s.eqs), options_.groebner);
    if (g.status != GroebnerStatus::complete) {
      exhausted_ = true;
      return false;
    }
    basis_ = g.basis;
    cache_.clear();
    eqs_ = s.eqs;
    neqs_ = s.neqs;
    for (auto& row : s.m)
      for (auto& x : row) x = basis_.reduce(x);
    return true;
  }

  Sign sign(const MultiPoly& p) {
    if (p.is_zero()) return Sign::zero;
    if (p.is_constant()) return Sign::nonzero;
    std::string key = p.to_string();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Sign out = Sign::undecided;
    std::vector<MultiPoly> with = eqs_;
    with.push_back(p);
    EmptinessResult nz = is_empty(with, neqs_, options_.groebner, {}, false);
    if (nz.verdict == Verdict::yes) {
      out = Sign::nonzero;
    } else {
      std::vector<MultiPoly> n2 = neqs_;
      n2.push_back(p);
      EmptinessResult z = is_empty(eqs_, n2, options_.groebner, {}, false);
      if (z.verdict == Verdict::yes) out = Sign::zero;
      if (nz.verdict == Verdict::unknown || z.verdict == Verdict::unknown) exhausted_ = true;
    }
    cache_.emplace(std::move(key), out);
    return out;
  }

  void normalize(std::vector<MultiPoly>& row) {
    for (auto& x : row) x = basis_.reduce(x);
    // Divide out a common nonzero constant and, where exact, known-nonzero factors.
    MultiPoly lead;
    for (const auto& x : row)
      if (!x.is_zero()) {
        lead = x;
        break;
      }
    if (lead.is_zero()) return;
    std::vector<MultiPoly> factors = neqs_;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& f : factors) {
        if (f.is_constant()) continue;
        std::vector<MultiPoly> q;
        bool ok = true;
        for (const auto& x : row) {
          if (x.is_zero()) {
            q.push_back(x);
            continue;
          }
          auto d = x.divide_exact(f);
          if (!d) {
            ok = false;
            break;
          }
          q.push_back(std::move(*d));
        }
        if (ok) {
          row = std::move(q);
          changed = true;
        }
      }
    }
    Rational c;
    bool first = true;
    for (const auto& x : row) {
      if (x.is_zero()) continue;
      Rational cx = x.content();
      if (first) {
        c = cx;
        first = false;
      } else {
        // gcd of contents: numerators' gcd over denominators' lcm
        mpz_class num = gcd(c.numerator(), cx.numerator());
        mpz_class den = lcm(c.denominator(), cx.denominator());
        c = Rational(num, den);
      }
    }
    if (!first && !c.is_zero() && !c.is_one())
      for (auto& x : row) x = x * c.inverse();
  }

  // Returns true and fills `cell` when finished; false with `split` set when
  // the cell must be divided (or when resources ran out).
  bool eliminate(State& s, std::optional<MultiPoly>& split, ParamCell& cell) {
    const int nrows = static_cast<int>(s.m.size());
    for (; s.col < columns_; ++s.col) {
      int c = s.col;
      int best = -1;
      int best_rank = 3;
      int best_terms = 0;
      int undecided = -1;
      for (int r = s.prow; r < nrows; ++r) {
        const MultiPoly& x = s.m[r][c];
        Sign sg = sign(x);
        if (exhausted_) return false;
        if (sg == Sign::zero) {
          s.m[r][c] = MultiPoly();
          continue;
        }
        if (sg == Sign::undecided) {
          if (undecided < 0 || x.term_count() < s.m[undecided][c].term_count()) undecided = r;
          continue;
        }
        int rank = x.is_constant() ? 0 : 1;
        int terms = static_cast<int>(x.term_count());
        if (best < 0 || rank < best_rank || (rank == best_rank && terms < best_terms)) {
          best = r;
          best_rank = rank;
          best_terms = terms;
        }
      }
      if (best < 0) {
        if (undecided >= 0) {
          split = s.m[undecided][c];
          return false;
        }
        continue;
      }
      std::swap(s.m[s.prow], s.m[best]);
      const std::vector<MultiPoly> prow = s.m[s.prow];
      const MultiPoly& p = prow[c];
      for (int r = 0; r < nrows; ++r) {
        if (r == s.prow || s.m[r][c].is_zero()) continue;
        MultiPoly f = s.m[r][c];
        for (int k = 0; k <= columns_; ++k) s.m[r][k] = p * s.m[r][k] - f * prow[k];
        normalize(s.m[r]);
      }
      s.pivots.push_back(c);
      ++s.prow;
    }
    for (int r = s.prow; r < nrows; ++r) {
      Sign sg = sign(s.m[r][columns_]);
      if (exhausted_) return false;
      if (sg == Sign::undecided) {
        split = s.m[r][columns_];
        return false;
      }
      if (sg == Sign::nonzero) {
        cell = ParamCell{};
        cell.equations = s.eqs;
        cell.inequations = s.neqs;
        cell.consistent = false;
        cell.sample = find_rational_point(s.eqs, s.neqs, {}, PointSearchOptions{6, 2000});
        return true;
      }
    }
    cell = ParamCell{};
    cell.equations = s.eqs;
    cell.inequations = s.neqs;
    cell.consistent = true;
    cell.rank = s.prow;
    cell.solution_dim = columns_ - s.prow;
    cell.pivots = s.pivots;
    for (int r = 0; r < s.prow; ++r) {
      std::vector<MultiPoly> row(s.m[r].begin(), s.m[r].begin() + columns_);
      cell.rows.push_back(std::move(row));
      cell.rhs.push_back(s.m[r][columns_]);
    }
    cell.sample = find_rational_point(s.eqs, s.neqs, {}, PointSearchOptions{6, 2000});
    return true;
  }

  int columns_;
  ParamSolverOptions options_;
  bool exhausted_ = false;
  GroebnerBasis basis_;
  std::vector<MultiPoly> eqs_, neqs_;
  std::map<std::string, Sign> cache_;
};

}  // namespace

ParamSolveResult solve_parametric(const PolyMatrix& a, const std::vector<MultiPoly>& b, int columns,
                                  const std::vector<MultiPoly>& domain_eqs,
                                  const std::vector<MultiPoly>& domain_neqs,
                                  const ParamSolverOptions& options) {
  if (a.size() != b.size()) throw DimensionMismatch("solve_parametric: row count mismatch");
  State s;
  s.eqs = domain_eqs;
  s.neqs = domain_neqs;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (static_cast<int>(a[r].size()) != columns) throw DimensionMismatch("solve_parametric: column count");
    std::vector<MultiPoly> row = a[r];
    row.push_back(b[r]);
    bool all_zero = true;
    for (const auto& x : row)
      if (!x.is_zero()) all_zero = false;
    if (!all_zero) s.m.push_back(std::move(row));
  }
  Solver solver(columns, options);
  return solver.run(std::move(s));
}

}  // namespace algvar

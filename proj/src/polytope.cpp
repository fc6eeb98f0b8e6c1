#include "acausal/polytope.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstdint>
#include <ostream>
#include <thread>

#include "acausal/consistency.hpp"
#include "acausal/errors.hpp"

namespace acausal {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  std::optional<Clock::time_point> at;

  explicit Deadline(const std::optional<double>& budget_seconds) {
    if (budget_seconds)
      at = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                              std::chrono::duration<double>(*budget_seconds));
  }
  void check(const char* what) const {
    if (at && Clock::now() > *at)
      throw BudgetExceededError(std::string(what) + ": time budget exceeded");
  }
};

std::size_t family_power(const Scenario& sc) {
  std::size_t f = std::size_t(sc.d) * std::size_t(sc.d - 1) + 1;
  std::size_t rows = 1;
  for (int j = 0; j < sc.n; ++j) rows *= f;
  return rows;
}

// ---------------------------------------------------------------------------
// Double description on the homogenized cone {z = (t, y) : M z >= 0}.

// Tight-constraint sets as bitmasks over the cone rows.
struct Bits {
  std::vector<std::uint64_t> w;

  explicit Bits(std::size_t nbits) : w((nbits + 63) / 64, 0) {}
  void set(std::size_t i) { w[i / 64] |= std::uint64_t(1) << (i % 64); }
};

// A ray stores integer coordinates (gcd-normalized) and the integer slack
// values only for the rows not yet inserted; tightness at processed rows
// lives in the `zeros` bitmask. For a positive combination of two rays whose
// processed slacks are non-negative, the combined slack at a processed row
// vanishes exactly when both parents' do, so those bits propagate by AND and
// the values themselves can be dropped.
struct Ray {
  std::vector<Int> coords;  // length dim+1, first coordinate homogenizes
  std::vector<Int> values;  // slack at open_rows[s], in step order
  Bits zeros;               // tight rows (all rows)

  Ray(std::vector<Int> c, std::vector<Int> v, std::size_t nrows)
      : coords(std::move(c)), values(std::move(v)), zeros(nrows) {}

  void normalize() {
    Int g = 0;
    for (const Int& x : coords) {
      g = gcd(g, x);
      if (g == 1) return;
    }
    for (const Int& x : values) {
      g = gcd(g, x);
      if (g == 1) return;
    }
    if (g == 0) return;
    for (Int& x : coords) x /= g;
    for (Int& x : values) x /= g;
  }
};

// Clears the denominators of a rational row: returns (integer row, scale)
// with integer_row == scale * row.
std::pair<std::vector<Int>, Int> scale_row_to_int(const RatVector& row) {
  Int scale = 1;
  for (const Rat& x : row) scale = lcm(scale, denominator(x));
  std::vector<Int> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j)
    out[j] = numerator(row[j]) * (scale / denominator(row[j]));
  return {std::move(out), std::move(scale)};
}

// Enumerates the extreme rays of {z : rows[k] . z >= 0 for all k}.
// The cone must be pointed (always the case for the homogenization of a
// bounded non-empty polytope).
std::vector<Ray> dd_cone(const std::vector<RatVector>& rows,
                         const Deadline& deadline) {
  const std::size_t space_dim = rows[0].size();
  const std::size_t nrows = rows.size();

  // Positive row scaling does not change the cone: work with integer rows.
  std::vector<std::vector<Int>> irows(nrows);
  for (std::size_t k = 0; k < nrows; ++k)
    irows[k] = scale_row_to_int(rows[k]).first;

  auto idot = [&](std::size_t k, const std::vector<Int>& z) {
    Int s = 0;
    for (std::size_t j = 0; j < space_dim; ++j)
      if (irows[k][j] != 0) s += irows[k][j] * z[j];
    return s;
  };

  // Initial basis: a nonsingular subset of rows found by greedy
  // elimination; the initial rays are the columns of its inverse.
  std::vector<std::size_t> basis_rows;
  {
    RatMatrix probe(0, 0);
    std::vector<RatVector> kept;
    for (std::size_t k = 0; k < nrows && kept.size() < space_dim; ++k) {
      kept.push_back(rows[k]);
      RatMatrix m(kept.size(), space_dim);
      for (std::size_t r = 0; r < kept.size(); ++r)
        for (std::size_t j = 0; j < space_dim; ++j) m(r, j) = kept[r][j];
      if (rank(m) == kept.size()) {
        basis_rows.push_back(k);
      } else {
        kept.pop_back();
      }
    }
    if (basis_rows.size() != space_dim)
      throw InternalCheckError("cone is not pointed: no nonsingular row basis");
  }

  // Invert the basis matrix via Gauss-Jordan on [R | I].
  std::vector<RatVector> init_rays;
  {
    RatMatrix aug(space_dim, 2 * space_dim);
    for (std::size_t r = 0; r < space_dim; ++r) {
      for (std::size_t j = 0; j < space_dim; ++j)
        aug(r, j) = rows[basis_rows[r]][j];
      aug(r, space_dim + r) = 1;
    }
    RrefResult red = rref(aug);
    for (std::size_t col = 0; col < space_dim; ++col) {
      RatVector ray(space_dim);
      for (std::size_t r = 0; r < space_dim; ++r)
        ray[r] = red.reduced(r, space_dim + col);
      init_rays.push_back(std::move(ray));
    }
  }

  Bits processed(nrows);
  std::vector<bool> done(nrows, false);
  for (std::size_t k : basis_rows) {
    done[k] = true;
    processed.set(k);
  }

  // Rows still awaiting insertion, in index order; ray.values[s] is the
  // slack at open_rows[s].
  std::vector<std::size_t> open_rows;
  for (std::size_t k = 0; k < nrows; ++k)
    if (!done[k]) open_rows.push_back(k);

  std::vector<Ray> rays;
  for (RatVector& r : init_rays) {
    std::vector<Int> coords = scale_row_to_int(r).first;
    std::vector<Int> values(open_rows.size());
    Ray ray(std::move(coords), std::move(values), nrows);
    ray.normalize();
    for (std::size_t s = 0; s < open_rows.size(); ++s) {
      ray.values[s] = idot(open_rows[s], ray.coords);
      if (ray.values[s] == 0) ray.zeros.set(open_rows[s]);
    }
    for (std::size_t k : basis_rows)
      if (idot(k, ray.coords) == 0) ray.zeros.set(k);
    rays.push_back(std::move(ray));
  }

  const bool trace_progress = std::getenv("ACAUSAL_DD_TRACE") != nullptr;
  while (!open_rows.empty()) {
    deadline.check("double description");
    if (trace_progress)
      std::fprintf(stderr, "dd: %zu rows left, %zu rays\n", open_rows.size(),
                   rays.size());

    // Min-cut insertion order: the row cutting off the fewest rays,
    // ties broken by row index.
    std::size_t best_slot = 0;
    std::size_t best_cut = rays.size() + 1;
    for (std::size_t s = 0; s < open_rows.size(); ++s) {
      std::size_t cut = 0;
      for (const Ray& r : rays)
        if (r.values[s] < 0) ++cut;
      if (cut < best_cut) {
        best_slot = s;
        best_cut = cut;
      }
    }
    const std::size_t slot = best_slot;
    const std::size_t k = open_rows[slot];

    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      int sgn = rays[i].values[slot].sign();
      if (sgn > 0)
        pos.push_back(i);
      else if (sgn < 0)
        neg.push_back(i);
      else
        zero.push_back(i);
    }

    // Index rays by the processed rows they are tight at, so the adjacency
    // witness search only scans the sparsest candidate list instead of the
    // whole ray set.
    std::vector<std::vector<std::uint32_t>> tight_at(nrows);
    for (std::size_t i = 0; i < rays.size(); ++i) {
      const Bits& z = rays[i].zeros;
      for (std::size_t w = 0; w < z.w.size(); ++w) {
        std::uint64_t word = z.w[w] & processed.w[w];
        while (word != 0) {
          std::size_t bit = std::size_t(__builtin_ctzll(word));
          word &= word - 1;
          tight_at[w * 64 + bit].push_back(std::uint32_t(i));
        }
      }
    }

    std::vector<Ray> created;
    const std::size_t adjacency_floor = space_dim >= 2 ? space_dim - 2 : 0;
    const std::size_t words = processed.w.size();
    // Contiguous snapshot of every ray's tight-set mask: the pair filter and
    // the witness scans stream through this instead of chasing one heap
    // allocation per ray.
    std::vector<std::uint64_t> zsnap(rays.size() * words);
    for (std::size_t i = 0; i < rays.size(); ++i)
      for (std::size_t w = 0; w < words; ++w)
        zsnap[i * words + w] = rays[i].zeros.w[w];
    std::vector<std::uint64_t> rp_mask(words), common(words);
    // true iff ray i is tight at every row in `common`
    auto covers = [&](std::size_t i) {
      for (std::size_t w = 0; w < words; ++w)
        if ((common[w] & ~zsnap[i * words + w]) != 0) return false;
      return true;
    };
    for (std::size_t ip : pos) {
      deadline.check("double description");
      for (std::size_t w = 0; w < words; ++w)
        rp_mask[w] = zsnap[ip * words + w] & processed.w[w];
      for (std::size_t in : neg) {
        // Combinatorial adjacency over the processed rows.
        const std::uint64_t* zn = &zsnap[in * words];
        std::size_t ncommon = 0;
        for (std::size_t w = 0; w < words; ++w) {
          common[w] = rp_mask[w] & zn[w];
          ncommon += std::size_t(__builtin_popcountll(common[w]));
        }
        if (ncommon < adjacency_floor) continue;
        // Any witness ray must be tight at every row in `common`; scan the
        // shortest of those rows' candidate lists.
        const std::vector<std::uint32_t>* scan = nullptr;
        for (std::size_t w = 0; w < words; ++w) {
          std::uint64_t word = common[w];
          while (word != 0) {
            std::size_t bit = std::size_t(__builtin_ctzll(word));
            word &= word - 1;
            const auto& list = tight_at[w * 64 + bit];
            if (scan == nullptr || list.size() < scan->size()) scan = &list;
          }
        }
        bool adjacent = true;
        if (scan != nullptr) {
          for (std::uint32_t other : *scan) {
            if (other == ip || other == in) continue;
            if (covers(other)) {
              adjacent = false;
              break;
            }
          }
        } else {
          for (std::size_t other = 0; other < rays.size(); ++other) {
            if (other == ip || other == in) continue;
            if (covers(other)) {
              adjacent = false;
              break;
            }
          }
        }
        if (!adjacent) continue;
        const Ray& rp = rays[ip];
        const Ray& rn = rays[in];
        const Int& alpha = rp.values[slot];  // > 0
        const Int beta = -rn.values[slot];   // > 0
        std::vector<Int> coords(space_dim);
        for (std::size_t j = 0; j < space_dim; ++j)
          coords[j] = alpha * rn.coords[j] + beta * rp.coords[j];
        std::vector<Int> values(open_rows.size());
        for (std::size_t s = 0; s < open_rows.size(); ++s)
          values[s] = alpha * rn.values[s] + beta * rp.values[s];
        Ray nr(std::move(coords), std::move(values), nrows);
        nr.normalize();
        // Tight processed rows are exactly those tight for both parents
        // (positive combination of non-negative slacks); open rows from the
        // freshly computed slacks.
        for (std::size_t w = 0; w < nr.zeros.w.size(); ++w)
          nr.zeros.w[w] = rp.zeros.w[w] & rn.zeros.w[w] & processed.w[w];
        for (std::size_t s = 0; s < open_rows.size(); ++s)
          if (nr.values[s] == 0) nr.zeros.set(open_rows[s]);
        created.push_back(std::move(nr));
      }
    }

    std::vector<Ray> next;
    next.reserve(pos.size() + zero.size() + created.size());
    for (std::size_t i : pos) next.push_back(std::move(rays[i]));
    for (std::size_t i : zero) next.push_back(std::move(rays[i]));
    for (Ray& r : created) next.push_back(std::move(r));
    rays = std::move(next);

    // Row k is now processed: retire its slack slot.
    for (Ray& r : rays) r.values.erase(r.values.begin() + std::ptrdiff_t(slot));
    open_rows.erase(open_rows.begin() + std::ptrdiff_t(slot));
    done[k] = true;
    processed.set(k);
  }
  return rays;
}

}  // namespace

RatVector vectorize(const EnvironmentProcess& env) {
  std::size_t dim = env.scenario.joint_dim();
  RatVector x(dim * dim);
  for (std::size_t o = 0; o < dim; ++o)
    for (std::size_t i = 0; i < dim; ++i) x[o * dim + i] = env.matrix(i, o);
  return x;
}

EnvironmentProcess devectorize(const Scenario& sc, const RatVector& point) {
  std::size_t dim = sc.joint_dim();
  if (point.size() != dim * dim)
    throw DimensionMismatchError("point length does not match d^{2n}");
  RatMatrix m(dim, dim);
  for (std::size_t o = 0; o < dim; ++o)
    for (std::size_t i = 0; i < dim; ++i) m(i, o) = point[o * dim + i];
  return EnvironmentProcess(sc, std::move(m));
}

HPolytope build_hrep(const Scenario& sc) {
  std::size_t dim = sc.joint_dim();
  if (dim > (std::size_t(1) << 16))
    throw BudgetExceededError(
        "d^{2n} coordinates exceed the memory budget (need ~" +
        std::to_string(dim * dim) + " rationals per row)");
  auto family = sufficient_family(sc.d);
  std::size_t nrows = family_power(sc);

  RatMatrix lhs(nrows, dim * dim);
  std::vector<std::size_t> idx(sc.n, 0);
  for (std::size_t row = 0; row < nrows; ++row) {
    // <E, M> = Tr(E (D_0 x ... x D_{n-1})) = sum_i E[i, f(i)]: the row has
    // a 1 at coordinate (i * dim + f... ) for every joint input i.
    for (JointIndex i = 0; i < dim; ++i) {
      JointIndex rest = i;
      JointIndex mapped = 0;
      std::size_t scale = dim / std::size_t(sc.d);
      for (int j = 0; j < sc.n; ++j) {
        int digit = int(rest / scale);
        rest %= scale;
        mapped = mapped * std::size_t(sc.d) +
                 std::size_t(family[idx[j]].table[digit]);
        if (j + 1 < sc.n) scale /= std::size_t(sc.d);
      }
      // x[o * dim + i] with o = f(i): coordinate mapped * dim + i
      lhs(row, mapped * dim + i) = 1;
    }
    int j = sc.n - 1;
    while (j >= 0 && ++idx[j] == family.size()) idx[j--] = 0;
  }
  return HPolytope{sc, std::move(lhs), RatVector(nrows, Rat(1)), dim * dim};
}

std::size_t polytope_dimension(const HPolytope& p) {
  std::size_t r = rank(p.eq_lhs);
  std::size_t expected_rows = family_power(p.scenario);
  if (r != expected_rows)
    throw InternalCheckError(
        "equality system rank " + std::to_string(r) +
        " disagrees with the closed formula (d(d-1)+1)^n = " +
        std::to_string(expected_rows));
  return p.nonneg_count - r;
}

bool contains(const HPolytope& p, const RatVector& point) {
  if (point.size() != p.nonneg_count)
    throw DimensionMismatchError("point length does not match d^{2n}");
  for (const Rat& x : point)
    if (x < 0) return false;
  for (std::size_t r = 0; r < p.eq_lhs.rows(); ++r) {
    Rat s = 0;
    for (std::size_t j = 0; j < p.eq_lhs.cols(); ++j)
      if (p.eq_lhs(r, j) != 0) s += p.eq_lhs(r, j) * point[j];
    if (s != p.eq_rhs[r]) return false;
  }
  return true;
}

bool is_vertex(const HPolytope& p, const RatVector& point) {
  if (!contains(p, point))
    throw InvalidInputError("is_vertex requires a point inside the polytope");
  std::vector<std::size_t> zero_coords;
  for (std::size_t j = 0; j < point.size(); ++j)
    if (point[j] == 0) zero_coords.push_back(j);
  RatMatrix tight(p.eq_lhs.rows() + zero_coords.size(), p.nonneg_count);
  for (std::size_t r = 0; r < p.eq_lhs.rows(); ++r)
    for (std::size_t j = 0; j < p.eq_lhs.cols(); ++j)
      tight(r, j) = p.eq_lhs(r, j);
  for (std::size_t z = 0; z < zero_coords.size(); ++z)
    tight(p.eq_lhs.rows() + z, zero_coords[z]) = 1;
  return rank(tight) == p.nonneg_count;
}

std::vector<Vertex> enumerate_vertices_dd(const HPolytope& p,
                                          const EnumOptions& opts) {
  Deadline deadline(opts.budget_seconds);
  const std::size_t ncoords = p.nonneg_count;

  // Substitute out the pivot coordinates via exact elimination. Each
  // original coordinate becomes an affine expression in the free ones:
  // x_k = expr[k][0] + sum_f expr[k][1+f] * y_f.
  RatMatrix aug(p.eq_lhs.rows(), ncoords + 1);
  for (std::size_t r = 0; r < p.eq_lhs.rows(); ++r) {
    for (std::size_t j = 0; j < ncoords; ++j) aug(r, j) = p.eq_lhs(r, j);
    aug(r, ncoords) = p.eq_rhs[r];
  }
  RrefResult red = rref(aug);
  for (std::size_t col : red.pivot_cols)
    if (col == ncoords)
      throw InternalCheckError("equality system is infeasible");

  std::vector<bool> is_pivot(ncoords, false);
  std::vector<std::size_t> pivot_row(ncoords, 0);
  for (std::size_t r = 0; r < red.pivot_cols.size(); ++r) {
    is_pivot[red.pivot_cols[r]] = true;
    pivot_row[red.pivot_cols[r]] = r;
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < ncoords; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  const std::size_t dim = free_cols.size();

  // Cone rows over z = (t, y): one per non-negativity facet x_k >= 0,
  // plus the homogenization facet t >= 0.
  std::vector<RatVector> cone_rows;
  cone_rows.reserve(ncoords + 1);
  for (std::size_t k = 0; k < ncoords; ++k) {
    RatVector row(dim + 1, Rat(0));
    if (is_pivot[k]) {
      std::size_t r = pivot_row[k];
      row[0] = red.reduced(r, ncoords);
      for (std::size_t f = 0; f < dim; ++f)
        row[1 + f] = -red.reduced(r, free_cols[f]);
    } else {
      for (std::size_t f = 0; f < dim; ++f)
        if (free_cols[f] == k) row[1 + f] = 1;
    }
    cone_rows.push_back(std::move(row));
  }
  {
    RatVector homog(dim + 1, Rat(0));
    homog[0] = 1;
    cone_rows.push_back(std::move(homog));
  }

  std::vector<Ray> rays = dd_cone(cone_rows, deadline);

  // Dehomogenize: x_k = (row_k . z) / t with t the homogenizer z[0];
  // integer-scaled rows need the scale divided back out.
  std::vector<std::vector<Int>> lift_rows(ncoords);
  std::vector<Int> lift_scales(ncoords);
  for (std::size_t k = 0; k < ncoords; ++k) {
    auto scaled = scale_row_to_int(cone_rows[k]);
    lift_rows[k] = std::move(scaled.first);
    lift_scales[k] = std::move(scaled.second);
  }

  std::vector<Vertex> vertices;
  for (const Ray& ray : rays) {
    const Int& t = ray.coords[0];
    if (t == 0)
      throw InternalCheckError(
          "recession ray found: the process polytope must be bounded");
    RatVector x(ncoords);
    bool deterministic = true;
    for (std::size_t k = 0; k < ncoords; ++k) {
      Int num = 0;
      for (std::size_t j = 0; j <= dim; ++j)
        if (lift_rows[k][j] != 0) num += lift_rows[k][j] * ray.coords[j];
      x[k] = Rat(num) / Rat(lift_scales[k] * t);
      if (x[k] != 0 && x[k] != 1) deterministic = false;
    }
    vertices.push_back(Vertex{std::move(x), deterministic});
  }

  std::sort(vertices.begin(), vertices.end(),
            [](const Vertex& a, const Vertex& b) { return a.point < b.point; });
  vertices.erase(std::unique(vertices.begin(), vertices.end(),
                             [](const Vertex& a, const Vertex& b) {
                               return a.point == b.point;
                             }),
                 vertices.end());
  return vertices;
}

std::vector<DeterministicFunction> enumerate_deterministic_vertices(
    const Scenario& sc, const EnumOptions& opts) {
  Deadline deadline(opts.budget_seconds);
  const std::size_t dim = sc.joint_dim();

  std::size_t space = 1;
  for (std::size_t k = 0; k < dim; ++k) {
    if (space > opts.det_search_cap / dim)
      throw BudgetExceededError(
          "(d^n)^(d^n) candidate functions exceed the search budget");
    space *= dim;
  }

  // Precompute the joint lookup table of every op-tuple over the
  // sufficient family: tuple t maps joint input i to tuples[t][i].
  auto family = sufficient_family(sc.d);
  std::vector<std::vector<std::uint32_t>> tuples;
  {
    std::vector<std::size_t> idx(sc.n, 0);
    std::size_t ntuples = 1;
    for (int j = 0; j < sc.n; ++j) ntuples *= family.size();
    tuples.reserve(ntuples);
    for (std::size_t t = 0; t < ntuples; ++t) {
      std::vector<std::uint32_t> jf(dim);
      for (JointIndex i = 0; i < dim; ++i) {
        JointIndex rest = i;
        JointIndex mapped = 0;
        std::size_t scale = dim / std::size_t(sc.d);
        for (int j = 0; j < sc.n; ++j) {
          int digit = int(rest / scale);
          rest %= scale;
          mapped = mapped * std::size_t(sc.d) +
                   std::size_t(family[idx[j]].table[digit]);
          if (j + 1 < sc.n) scale /= std::size_t(sc.d);
        }
        jf[i] = std::uint32_t(mapped);
      }
      tuples.push_back(std::move(jf));
      int j = sc.n - 1;
      while (j >= 0 && ++idx[j] == family.size()) idx[j--] = 0;
    }
  }

  auto scan_range = [&](std::size_t begin, std::size_t end,
                        std::vector<std::size_t>& hits) {
    std::vector<std::uint32_t> g(dim);
    std::size_t rest = begin;
    for (std::size_t k = dim; k-- > 0;) {
      g[k] = std::uint32_t(rest % dim);
      rest /= dim;
    }
    for (std::size_t candidate = begin; candidate < end; ++candidate) {
      bool ok = true;
      for (const auto& jf : tuples) {
        unsigned count = 0;
        for (std::uint32_t i = 0; i < dim; ++i)
          if (g[jf[i]] == i && ++count > 1) break;
        if (count != 1) {
          ok = false;
          break;
        }
      }
      if (ok) hits.push_back(candidate);
      // increment g as a base-dim counter
      for (std::size_t k = dim; k-- > 0;) {
        if (++g[k] < dim) break;
        g[k] = 0;
      }
      if ((candidate & 0xffff) == 0) deadline.check("deterministic search");
    }
  };

  unsigned nthreads = opts.threads > 0
                          ? unsigned(opts.threads)
                          : std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min<unsigned>(nthreads, 64);
  std::vector<std::vector<std::size_t>> per_thread(nthreads);
  if (nthreads <= 1 || space < 1 << 16) {
    scan_range(0, space, per_thread[0]);
  } else {
    std::vector<std::thread> workers;
    std::size_t chunk = (space + nthreads - 1) / nthreads;
    for (unsigned t = 0; t < nthreads; ++t) {
      std::size_t begin = std::min(space, std::size_t(t) * chunk);
      std::size_t end = std::min(space, begin + chunk);
      workers.emplace_back(
          [&, begin, end, t] { scan_range(begin, end, per_thread[t]); });
    }
    for (auto& w : workers) w.join();
  }

  std::vector<DeterministicFunction> found;
  for (const auto& hits : per_thread)
    for (std::size_t candidate : hits) {
      DeterministicFunction g{sc, std::vector<JointIndex>(dim)};
      std::size_t rest = candidate;
      for (std::size_t k = dim; k-- > 0;) {
        g.table[k] = rest % dim;
        rest /= dim;
      }
      found.push_back(std::move(g));
    }
  return found;
}

void write_cdd_hrep(std::ostream& out, const HPolytope& p) {
  std::size_t m = p.eq_lhs.rows();
  out << "H-representation\n";
  out << "linearity " << m;
  for (std::size_t r = 0; r < m; ++r) out << " " << (r + 1);
  out << "\n";
  out << "begin\n";
  out << " " << (m + p.nonneg_count) << " " << (p.nonneg_count + 1)
      << " rational\n";
  // b - A x >= 0 rows: equalities first, then x_k >= 0.
  for (std::size_t r = 0; r < m; ++r) {
    out << " " << to_string(p.eq_rhs[r]);
    for (std::size_t j = 0; j < p.nonneg_count; ++j)
      out << " " << to_string(-p.eq_lhs(r, j));
    out << "\n";
  }
  for (std::size_t k = 0; k < p.nonneg_count; ++k) {
    out << " 0";
    for (std::size_t j = 0; j < p.nonneg_count; ++j)
      out << (j == k ? " 1" : " 0");
    out << "\n";
  }
  out << "end\n";
}

void write_cdd_vrep(std::ostream& out, const std::vector<Vertex>& vs) {
  out << "V-representation\n";
  out << "begin\n";
  std::size_t ncoords = vs.empty() ? 0 : vs[0].point.size();
  out << " " << vs.size() << " " << (ncoords + 1) << " rational\n";
  for (const Vertex& v : vs) {
    out << " 1";
    for (const Rat& x : v.point) out << " " << to_string(x);
    out << "\n";
  }
  out << "end\n";
}

void write_vertices(std::ostream& out, const std::vector<Vertex>& vs) {
  out << "# vertices: " << vs.size() << "\n";
  for (const Vertex& v : vs) {
    for (std::size_t j = 0; j < v.point.size(); ++j) {
      if (j) out << " ";
      out << to_string(v.point[j]);
    }
    out << " # deterministic=" << (v.deterministic ? 1 : 0) << "\n";
  }
}

}  // namespace acausal

#include "families.hpp"

#include <algorithm>
#include <stdexcept>

#include "fqv/errors.hpp"
#include "fqv/fermat.hpp"
#include "fqv/identities.hpp"
#include "fqv/primes.hpp"

namespace fqv::detail {

namespace {

using Check = std::function<std::vector<CheckReport>(Backend)>;

Range clamp_lo(Range r, std::int64_t min_lo) {
  r.lo = std::max(r.lo, min_lo);
  return r;
}

Range n_range(const SweepConfig& c, Range fallback, std::int64_t min_lo) {
  return clamp_lo(c.n_range.value_or(fallback), min_lo);
}

int r_limit(const SweepConfig& c, int fallback) {
  return c.r_max.value_or(fallback);
}

// Odd primes in the configured range or the family default. Under the exact
// backend an unconfigured range is cut at the exact cap.
std::vector<Cell> prime_cells(const SweepConfig& c, Range fallback) {
  Range r = c.prime_range.value_or(fallback);
  if (!c.prime_range && c.backend == BackendChoice::exact) {
    r.hi = std::min<std::int64_t>(r.hi, static_cast<std::int64_t>(c.exact_cap));
  }
  r.lo = std::max<std::int64_t>(r.lo, 3);
  std::vector<Cell> out;
  if (r.lo > r.hi) return out;
  for (u64 p : primes_in_range(static_cast<u64>(r.lo), static_cast<u64>(r.hi))) {
    out.push_back({static_cast<std::int64_t>(p), 0});
  }
  return out;
}

std::vector<Cell> line_cells(Range r, std::int64_t step = 1) {
  std::vector<Cell> out;
  for (std::int64_t x = r.lo; x <= r.hi; x += step) out.push_back({x, 0});
  return out;
}

std::vector<Cell> grid_cells(Range xs, Range ys) {
  std::vector<Cell> out;
  for (std::int64_t x = xs.lo; x <= xs.hi; ++x) {
    for (std::int64_t y = ys.lo; y <= ys.hi; ++y) out.push_back({x, y});
  }
  return out;
}

std::vector<SweepRecord> tag(std::vector<CheckReport> reports, const char* backend) {
  std::vector<SweepRecord> out;
  out.reserve(reports.size());
  for (auto& r : reports) out.push_back({std::move(r), backend, std::nullopt});
  return out;
}

std::vector<SweepRecord> identity_records(std::vector<CheckReport> reports) {
  return tag(std::move(reports), "exact");
}

bool same_values(const CheckReport& a, const CheckReport& b) {
  return a.family == b.family && a.params == b.params && a.modulus == b.modulus &&
         a.lhs == b.lhs && a.rhs == b.rhs && a.pass == b.pass;
}

std::vector<SweepRecord> congruence(const SweepContext& ctx, std::int64_t p, const Check& check) {
  const SweepConfig& c = ctx.config;
  switch (c.backend) {
    case BackendChoice::exact:
      return tag(check(Backend::exact), "exact");
    case BackendChoice::modular:
      return tag(check(Backend::modular), "modular");
    case BackendChoice::both:
      break;
  }
  if (static_cast<u64>(p) > c.exact_cap) return tag(check(Backend::modular), "modular");

  auto exact = check(Backend::exact);
  auto modular = check(Backend::modular);
  if (exact.size() != modular.size()) {
    throw std::logic_error("backends produced different record counts");
  }
  std::vector<SweepRecord> out;
  for (std::size_t i = 0; i < modular.size(); ++i) {
    const bool agree = same_values(exact[i], modular[i]);
    SweepRecord rec{std::move(modular[i]), "both", agree};
    if (!agree) rec.report.pass = false;
    out.push_back(std::move(rec));
  }
  return out;
}

u64 prime_of(const Cell& cell) { return static_cast<u64>(cell.x); }
int n_of(const Cell& cell) { return static_cast<int>(cell.x); }

std::vector<Family> build_registry() {
  std::vector<Family> f;

  f.push_back({{"eisenstein",
                "(2^(p-1)-1)/p against the odd reciprocals below p-1, mod p",
                "{p: odd prime}"},
               {"p"},
               {},
               [](const SweepConfig& c) { return prime_cells(c, {3, 1000}); },
               [](const Cell& cell, const SweepContext& ctx) {
                 return congruence(ctx, cell.x, [&](Backend b) {
                   return std::vector<CheckReport>{check_eisenstein(prime_of(cell), b)};
                 });
               }});

  f.push_back({{"lemma1",
                "Fermat-quotient congruences mod p; records lemma1-eq2 through lemma1-eq6b",
                "{p: odd prime, n: >= 2 (eq3, eq4)}"},
               {"p"},
               {},
               [](const SweepConfig& c) { return prime_cells(c, {3, 1000}); },
               [](const Cell& cell, const SweepContext& ctx) {
                 const Range ns = n_range(ctx.config, {2, 10}, 2);
                 return congruence(ctx, cell.x, [&](Backend b) {
                   const u64 p = prime_of(cell);
                   std::vector<CheckReport> out;
                   auto add = [&](Lemma1Variant v, int n) {
                     for (auto& r : check_lemma1(p, v, n, b)) out.push_back(std::move(r));
                   };
                   add(Lemma1Variant::eq2, 0);
                   for (auto n = ns.lo; n <= ns.hi; ++n) add(Lemma1Variant::eq3, static_cast<int>(n));
                   for (auto n = ns.lo; n <= ns.hi; ++n) add(Lemma1Variant::eq4, static_cast<int>(n));
                   add(Lemma1Variant::eq5, 0);
                   add(Lemma1Variant::eq6a, 0);
                   add(Lemma1Variant::eq6b, 0);
                   return out;
                 });
               }});

  f.push_back({{"spadesuit",
                "(a^p-a)/p expanded around a+1, mod p",
                "{p: odd prime, a: integer}"},
               {"p", "a"},
               {},
               [](const SweepConfig& c) {
                 const auto ps = prime_cells(c, {3, 200});
                 const Range as = c.a_range.value_or(Range{-10, 10});
                 std::vector<Cell> out;
                 for (const auto& p : ps) {
                   for (auto a = as.lo; a <= as.hi; ++a) out.push_back({p.x, a});
                 }
                 return out;
               },
               [](const Cell& cell, const SweepContext& ctx) {
                 return congruence(ctx, cell.x, [&](Backend b) {
                   return std::vector<CheckReport>{check_spadesuit(cell.y, prime_of(cell), b)};
                 });
               }});

  f.push_back({{"binom-over-p",
                "C(p,r)/p = (-1)^(r-1)/r mod p for every 0 < r < p",
                "{p: odd prime, r: 1..p-1}"},
               {"p"},
               {},
               [](const SweepConfig& c) { return prime_cells(c, {3, 300}); },
               [](const Cell& cell, const SweepContext& ctx) {
                 return congruence(ctx, cell.x, [&](Backend b) {
                   const u64 p = prime_of(cell);
                   std::vector<CheckReport> out;
                   for (u64 r = 1; r < p; ++r) out.push_back(binom_p_over_p_residue(p, r, b));
                   return out;
                 });
               }});

  f.push_back({{"wolstenholme", "H_(p-1) = 0 mod p^2", "{p: prime > 3}"},
               {"p"},
               {},
               [](const SweepConfig& c) { return prime_cells(c, {5, 1000}); },
               [](const Cell& cell, const SweepContext& ctx) {
                 return congruence(ctx, cell.x, [&](Backend b) {
                   const u64 p = prime_of(cell);
                   try {
                     return std::vector<CheckReport>{check_wolstenholme(p, b)};
                   } catch (const DomainError& e) {
                     CheckReport r = check_wolstenholme(p, b, true);
                     r.pass = false;
                     r.error = e.what();
                     return std::vector<CheckReport>{r};
                   }
                 });
               }});

  f.push_back({{"prop1",
                "(2^(p-1)-1)/p = -sum_{r<p} 2^(r-1)/r mod p^2",
                "{p: odd prime}"},
               {"p"},
               {},
               [](const SweepConfig& c) { return prime_cells(c, {3, 1000}); },
               [](const Cell& cell, const SweepContext& ctx) {
                 return congruence(ctx, cell.x,
                                   [&](Backend b) { return check_prop1(prime_of(cell), b); });
               }});

  f.push_back({{"thm1",
                "(2^(p-1)-1)/p = sum_{odd r<p} 1/r - p sum_{r<p} 2^(r-1)/r^2 mod p^2",
                "{p: odd prime}"},
               {"p"},
               {},
               [](const SweepConfig& c) { return prime_cells(c, {3, 1000}); },
               [](const Cell& cell, const SweepContext& ctx) {
                 return congruence(ctx, cell.x, [&](Backend b) {
                   return std::vector<CheckReport>{check_thm1(prime_of(cell), b)};
                 });
               }});

  f.push_back({{"observation",
                "x^m - x rewritten through powers of (x+1), as polynomials",
                "{m: >= 1}"},
               {"m"},
               {},
               [](const SweepConfig& c) { return line_cells(n_range(c, {1, 30}, 1)); },
               [](const Cell& cell, const SweepContext&) {
                 return identity_records({check_observation(n_of(cell))});
               }});

  f.push_back({{"lemma2",
                "alternating binomial sum of (x^k-1)/k for odd n, with its x^2 and x^3 coefficients",
                "{n: odd}"},
               {"n"},
               {},
               [](const SweepConfig& c) {
                 Range r = n_range(c, {1, 41}, 1);
                 if (r.lo % 2 == 0) ++r.lo;
                 return line_cells(r, 2);
               },
               [](const Cell& cell, const SweepContext&) {
                 return identity_records(check_lemma2(n_of(cell)));
               }});

  f.push_back({{"heartsuit",
                "sum (1-x)^k/k against sum C(n,k)(-1)^k (x^k-1)/k, integrated and geometric forms",
                "{n: >= 1}"},
               {"n"},
               {},
               [](const SweepConfig& c) { return line_cells(n_range(c, {1, 40}, 1)); },
               [](const Cell& cell, const SweepContext&) {
                 return identity_records(check_heartsuit(n_of(cell)));
               }});

  f.push_back({{"corollary1",
                "alternating binomial reciprocal sums equal to n/(n+1) and H_n",
                "{n: >= 1}"},
               {"n"},
               {},
               [](const SweepConfig& c) { return line_cells(n_range(c, {1, 100}, 1)); },
               [](const Cell& cell, const SweepContext&) {
                 return identity_records(check_corollary1(n_of(cell)));
               }});

  f.push_back({{"sury93",
                "sum of 1/C(n,r) in two closed forms",
                "{n: >= 0}"},
               {"n"},
               {},
               [](const SweepConfig& c) { return line_cells(n_range(c, {0, 200}, 0)); },
               [](const Cell& cell, const SweepContext&) {
                 return identity_records(check_sury93(n_of(cell)));
               }});

  f.push_back({{"mneimneh",
                "binomially weighted H_k^(r) as a polynomial in q, against each expansion",
                "{n, r}"},
               {"n", "r"},
               [](const Cell& cell) { return n_of(cell); },
               [](const SweepConfig& c) {
                 return grid_cells(n_range(c, {1, 40}, 1), {1, r_limit(c, 6)});
               },
               [](const Cell& cell, const SweepContext& ctx) {
                 return identity_records(
                     check_mneimneh(n_of(cell), static_cast<int>(cell.y), ctx.harmonics));
               }});

  auto dsum_cells = [](const SweepConfig& c) {
    return grid_cells({1, r_limit(c, 7)}, n_range(c, {1, 40}, 1));
  };
  auto dsum_extent = [](const Cell& cell) { return static_cast<int>(cell.y); };

  f.push_back({{"dsum-closed",
                "signed double-binomial sum against its closed form in harmonic differences",
                "{r: 1..7, n, j: 1..n}"},
               {"r", "n"},
               dsum_extent,
               dsum_cells,
               [](const Cell& cell, const SweepContext& ctx) {
                 std::vector<CheckReport> out;
                 const int r = n_of(cell), n = static_cast<int>(cell.y);
                 for (int j = 1; j <= n; ++j) out.push_back(check_dsum_closed(r, n, j, ctx.harmonics));
                 return identity_records(std::move(out));
               }});

  f.push_back({{"dsum-cross",
                "signed double-binomial sum against the partition, determinant and Stirling forms",
                "{r: 1..7, n, j: 1..n}"},
               {"r", "n"},
               dsum_extent,
               dsum_cells,
               [](const Cell& cell, const SweepContext& ctx) {
                 std::vector<CheckReport> out;
                 const int r = n_of(cell), n = static_cast<int>(cell.y);
                 for (int j = 1; j <= n; ++j) {
                   for (auto& rep : check_dsum_cross(r, n, j, ctx.harmonics, ctx.stirling)) {
                     out.push_back(std::move(rep));
                   }
                 }
                 return identity_records(std::move(out));
               }});

  f.push_back({{"difference-recurrences",
                "first differences in j of the double-binomial sums, base cases, and the vanishing sum B(n,j)",
                "{n, j: 1..n}"},
               {"n"},
               [](const Cell& cell) { return n_of(cell); },
               [](const SweepConfig& c) { return line_cells(n_range(c, {1, 60}, 1)); },
               [](const Cell& cell, const SweepContext& ctx) {
                 const int n = n_of(cell);
                 std::vector<CheckReport> out = difference_base_cases(n);
                 for (int j = 1; j <= n; ++j) {
                   out.push_back(bsum_vanishes(n, j));
                   if (j >= 2) {
                     for (auto& rep : difference_recurrences(n, j, ctx.harmonics)) {
                       out.push_back(std::move(rep));
                     }
                   }
                 }
                 return identity_records(std::move(out));
               }});

  f.push_back({{"hypergeom-step",
                "sum_{l<j} (-1)^(j-l-1) C(j-1,l)/(n-l) = (j-1)!(n-j)!/n!",
                "{n, j: 1..n}"},
               {"n"},
               {},
               [](const SweepConfig& c) { return line_cells(n_range(c, {1, 60}, 1)); },
               [](const Cell& cell, const SweepContext&) {
                 const int n = n_of(cell);
                 std::vector<CheckReport> out;
                 for (int j = 1; j <= n; ++j) out.push_back(hypergeom_step(n, j));
                 return identity_records(std::move(out));
               }});

  f.push_back({{"triple-sum",
                "sum over i1<i2<i3<=n of 1/(i1 i2 i3) against (H^3 - 3 H H^(2) + 2 H^(3))/6",
                "{n: >= 3}"},
               {"n"},
               [](const Cell& cell) { return n_of(cell); },
               [](const SweepConfig& c) { return line_cells(n_range(c, {3, 200}, 3)); },
               [](const Cell& cell, const SweepContext& ctx) {
                 return identity_records({check_triple_sum(n_of(cell), ctx.harmonics)});
               }});

  f.push_back({{"partition-count",
                "enumerated partitions of r against the pentagonal recurrence and closed-form term counts",
                "{r: 1..7}"},
               {"r"},
               {},
               [](const SweepConfig& c) { return line_cells({1, r_limit(c, 7)}); },
               [](const Cell& cell, const SweepContext&) {
                 return identity_records(check_partition_count(n_of(cell)));
               }});

  f.push_back({{"determinant-vs-partition",
                "Hessenberg determinant form against the partition form of the harmonic-difference polynomial",
                "{r: 1..7, n, j: 1..n}"},
               {"r", "n"},
               dsum_extent,
               dsum_cells,
               [](const Cell& cell, const SweepContext& ctx) {
                 std::vector<CheckReport> out;
                 const int r = n_of(cell), n = static_cast<int>(cell.y);
                 for (int j = 1; j <= n; ++j) {
                   out.push_back(check_determinant_vs_partition(r, n, j, ctx.harmonics));
                 }
                 return identity_records(std::move(out));
               }});

  f.push_back({{"choi-series",
                "partial sums of three harmonic series over (n+1)(n+2), each converging to 1",
                "{series: 1..3, N}"},
               {"series"},
               {},
               [](const SweepConfig&) { return line_cells({1, 3}); },
               [](const Cell& cell, const SweepContext& ctx) {
                 return tag({check_choi(n_of(cell), ctx.config.series_terms,
                                        ctx.config.series_tolerance)},
                            "float");
               }});

  return f;
}

}  // namespace

const std::vector<Family>& registry() {
  static const std::vector<Family> families = build_registry();
  return families;
}

const Family* find_family(const std::string& id) {
  for (const auto& f : registry()) {
    if (f.info.id == id) return &f;
  }
  return nullptr;
}

}  // namespace fqv::detail

#include "primerep/counting.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "internal/scan.hpp"
#include "primerep/error.hpp"

namespace primerep {

namespace {

std::optional<std::int64_t> least_escape(const FunctionSystem& fs, const BigInt& lo, const BigInt& hi,
                                         const EvalOptions& options) {
  std::optional<std::int64_t> best;
  for (const auto& f : fs) {
    const auto r = escape_radius(f, lo, hi, options);
    if (r && (!best || *r < *best)) best = r;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Phi
// ---------------------------------------------------------------------------

std::uint64_t count_small(const FunctionSystem& fs, std::int64_t n, std::int64_t radius, const EvalOptions& options) {
  const std::size_t s = fs.size();
  std::vector<std::int64_t> flat;
  std::vector<std::int64_t> tuple(s);
  walk_points(fs.arity(), options.x_min(), radius, [&](const Point& p) {
    for (std::size_t i = 0; i < s; ++i) {
      const auto v = evaluate_small(fs[i], std::span<const std::int64_t>(p), options);
      if (!v || *v < 1 || *v >= n || std::gcd(*v, n) != 1) return false;
      tuple[i] = *v;
    }
    flat.insert(flat.end(), tuple.begin(), tuple.end());
    return false;
  });
  if (s == 1) {
    std::sort(flat.begin(), flat.end());
    return static_cast<std::uint64_t>(std::unique(flat.begin(), flat.end()) - flat.begin());
  }
  std::set<std::vector<std::int64_t>> seen;
  for (std::size_t i = 0; i < flat.size(); i += s) {
    seen.emplace(flat.begin() + static_cast<std::ptrdiff_t>(i), flat.begin() + static_cast<std::ptrdiff_t>(i + s));
  }
  return seen.size();
}

std::uint64_t count_big(const FunctionSystem& fs, const BigInt& n, std::int64_t radius, const EvalOptions& options) {
  std::set<std::vector<BigInt>> seen;
  std::vector<BigInt> tuple(fs.size());
  walk_points(fs.arity(), options.x_min(), radius, [&](const Point& p) {
    for (std::size_t i = 0; i < fs.size(); ++i) {
      try {
        tuple[i] = evaluate(fs[i], std::span<const std::int64_t>(p), options);
      } catch (const EvaluationBudgetExceeded&) {
        return false;
      }
      if (!in_reduced_residues(tuple[i], n)) return false;
    }
    seen.insert(tuple);
    return false;
  });
  return seen.size();
}

// ---------------------------------------------------------------------------
// Pi
// ---------------------------------------------------------------------------

struct ValueSet {
  std::vector<BigInt> values;  // distinct, ascending
  bool complete = false;
  std::int64_t horizon = 0;
};

// Distinct values of the member product at points where every member
// exceeds 1 and the product is <= x.
ValueSet collect_values(const FunctionSystem& fs, const BigInt& x, std::int64_t horizon, const EvalOptions& options) {
  ValueSet out;
  const auto escape = least_escape(fs, BigInt(2), BigInt(x + 1), options);
  out.complete = escape && *escape - 1 <= horizon;
  out.horizon = out.complete ? *escape - 1 : horizon;
  std::set<BigInt> seen;
  walk_points(fs.arity(), options.x_min(), out.horizon, [&](const Point& p) {
    BigInt product = 1;
    for (const auto& f : fs) {
      BigInt v;
      try {
        v = evaluate(f, std::span<const std::int64_t>(p), options);
      } catch (const EvaluationBudgetExceeded&) {
        return false;
      }
      if (v <= 1) return false;
      product *= v;
      if (product > x) return false;
    }
    seen.insert(product);
    return false;
  });
  out.values.assign(seen.begin(), seen.end());
  return out;
}

struct Candidate {
  BigInt value;
  std::vector<BigInt> support;  // distinct primes, ascending
};

std::vector<Candidate> with_supports(const std::vector<BigInt>& values) {
  std::vector<Candidate> out;
  out.reserve(values.size());
  for (const auto& v : values) {
    Candidate c{v, {}};
    for (const auto& pp : factorize_complete(v).factors) c.support.push_back(pp.prime);
    out.push_back(std::move(c));
  }
  return out;
}

// Keeps the smallest value per support and drops values whose support
// strictly contains another support.
std::vector<Candidate> minimal_supports(std::vector<Candidate> cands) {
  std::map<std::vector<BigInt>, Candidate> by_support;
  for (auto& c : cands) {
    auto it = by_support.find(c.support);
    if (it == by_support.end() || c.value < it->second.value) by_support[c.support] = std::move(c);
  }
  std::vector<Candidate> out;
  for (auto& [support, c] : by_support) {
    const std::size_t k = support.size();
    bool dominated = false;
    if (k <= 20) {
      for (std::uint32_t mask = 1; mask + 1 < (1u << k) && !dominated; ++mask) {
        std::vector<BigInt> sub;
        for (std::size_t i = 0; i < k; ++i) {
          if (mask & (1u << i)) sub.push_back(support[i]);
        }
        dominated = by_support.count(sub) > 0;
      }
    } else {
      for (const auto& [other, oc] : by_support) {
        if (other.size() < k && std::includes(support.begin(), support.end(), other.begin(), other.end())) {
          dominated = true;
          break;
        }
      }
    }
    if (!dominated) out.push_back(c);
  }
  return out;
}

class PackingSolver {
 public:
  explicit PackingSolver(std::vector<Candidate> core) : core_(std::move(core)) {
    std::sort(core_.begin(), core_.end(), [](const Candidate& a, const Candidate& b) {
      if (a.support.size() != b.support.size()) return a.support.size() < b.support.size();
      return a.value < b.value;
    });
    std::map<BigInt, std::size_t> index;
    for (const auto& c : core_) {
      for (const auto& p : c.support) index.emplace(p, index.size());
    }
    words_ = (index.size() + 63) / 64;
    for (const auto& c : core_) {
      Mask m(words_, 0);
      for (const auto& p : c.support) {
        const std::size_t i = index[p];
        m[i / 64] |= std::uint64_t{1} << (i % 64);
      }
      masks_.push_back(std::move(m));
    }
    suffix_.assign(core_.size() + 1, Mask(words_, 0));
    for (std::size_t i = core_.size(); i-- > 0;) {
      for (std::size_t w = 0; w < words_; ++w) suffix_[i][w] = suffix_[i + 1][w] | masks_[i][w];
    }
  }

  std::vector<BigInt> solve() {
    Mask used(words_, 0);
    std::vector<std::size_t> chosen;
    search(0, used, chosen);
    std::vector<BigInt> out;
    for (auto i : best_) out.push_back(core_[i].value);
    return out;
  }

 private:
  using Mask = std::vector<std::uint64_t>;

  bool disjoint(const Mask& a, const Mask& b) const {
    for (std::size_t w = 0; w < words_; ++w) {
      if (a[w] & b[w]) return false;
    }
    return true;
  }

  // Every core support has at least two primes.
  std::size_t prime_bound(std::size_t i, const Mask& used) const {
    std::size_t free = 0;
    for (std::size_t w = 0; w < words_; ++w) free += static_cast<std::size_t>(__builtin_popcountll(suffix_[i][w] & ~used[w]));
    return free / 2;
  }

  void search(std::size_t i, Mask& used, std::vector<std::size_t>& chosen) {
    if (chosen.size() > best_.size()) best_ = chosen;
    if (i == core_.size()) return;
    const std::size_t bound = std::min(core_.size() - i, prime_bound(i, used));
    if (chosen.size() + bound <= best_.size()) return;
    if (disjoint(used, masks_[i])) {
      for (std::size_t w = 0; w < words_; ++w) used[w] |= masks_[i][w];
      chosen.push_back(i);
      search(i + 1, used, chosen);
      chosen.pop_back();
      for (std::size_t w = 0; w < words_; ++w) used[w] &= ~masks_[i][w];
    }
    search(i + 1, used, chosen);
  }

  std::vector<Candidate> core_;
  std::size_t words_ = 0;
  std::vector<Mask> masks_;
  std::vector<Mask> suffix_;
  std::vector<std::size_t> best_;
};

PiResult exact_packing(const ValueSet& vs, const BigInt& x, std::size_t cap) {
  PiResult out;
  out.x = x;
  out.method = PiMethod::Exact;
  out.complete_domain = vs.complete;
  out.horizon = vs.horizon;
  auto cands = minimal_supports(with_supports(vs.values));

  std::map<BigInt, std::size_t> uses;
  for (const auto& c : cands) {
    for (const auto& p : c.support) ++uses[p];
  }
  std::vector<Candidate> core;
  for (auto& c : cands) {
    const bool isolated = std::all_of(c.support.begin(), c.support.end(), [&](const BigInt& p) { return uses[p] == 1; });
    if (isolated) {
      out.members.push_back(c.value);
    } else {
      core.push_back(std::move(c));
    }
  }
  out.core_size = core.size();
  if (core.size() > cap) {
    throw CapExceeded("exact search core has " + std::to_string(core.size()) + " values, cap is " +
                      std::to_string(cap));
  }
  for (auto& v : PackingSolver(std::move(core)).solve()) out.members.push_back(std::move(v));
  std::sort(out.members.begin(), out.members.end());
  out.value = out.members.size();
  return out;
}

PiResult greedy_packing(const ValueSet& vs, const BigInt& x) {
  PiResult out;
  out.x = x;
  out.method = PiMethod::GreedyLowerBound;
  out.complete_domain = vs.complete;
  out.horizon = vs.horizon;
  std::set<BigInt> used;
  for (const auto& c : with_supports(vs.values)) {
    const bool free = std::none_of(c.support.begin(), c.support.end(), [&](const BigInt& p) { return used.count(p); });
    if (!free) continue;
    used.insert(c.support.begin(), c.support.end());
    out.members.push_back(c.value);
  }
  out.value = out.members.size();
  return out;
}

}  // namespace

PhiResult phi_general(const FunctionSystem& fs, const BigInt& n, std::optional<std::int64_t> box,
                      const EvalOptions& options) {
  if (n < 2) throw DomainError("n must be >= 2");
  PhiResult out;
  out.n = n;
  const auto escape = least_escape(fs, BigInt(1), n, options);
  if (box) {
    out.box = *box;
  } else if (escape) {
    out.box = std::min(*escape - 1, default_horizon(fs.arity()));
  } else {
    out.box = default_horizon(fs.arity());
  }
  out.exact = escape && *escape - 1 <= out.box;
  if (const auto small = to_i64(n)) {
    out.count = count_small(fs, *small, out.box, options);
  } else {
    out.count = count_big(fs, n, out.box, options);
  }
  return out;
}

std::string_view to_string(PiMethod method) {
  return method == PiMethod::Exact ? "exact" : "greedy-lower-bound";
}

PiResult pi_general_exact(const NtFunction& f, const BigInt& x, std::size_t cap, std::int64_t horizon,
                          const EvalOptions& options) {
  return exact_packing(collect_values(FunctionSystem{f}, x, horizon, options), x, cap);
}

PiResult pi_general_greedy(const NtFunction& f, const BigInt& x, std::int64_t horizon, const EvalOptions& options) {
  return greedy_packing(collect_values(FunctionSystem{f}, x, horizon, options), x);
}

PiResult pi_system_product(const FunctionSystem& fs, const BigInt& x, std::size_t cap, std::int64_t horizon,
                           const EvalOptions& options) {
  return exact_packing(collect_values(fs, x, horizon, options), x, cap);
}

ImplicationCheck implication_check(const NtFunction& f, std::int64_t m_lo, std::int64_t m_hi, std::int64_t horizon,
                                   unsigned threads, const EvalOptions& options) {
  if (m_lo < 2) throw DomainError("moduli start at 2");
  struct Outcome {
    std::int64_t m;
    bool premise = false;
    bool undecided = false;
    std::optional<ImplicationViolation> violation;
  };
  const auto outcomes = internal::parallel_chunks<Outcome>(m_lo, m_hi, threads, [&](std::int64_t a, std::int64_t b) {
    std::vector<Outcome> local;
    for (std::int64_t m = a; m <= b; ++m) {
      Outcome o{m, false, false, std::nullopt};
      const BigInt bm = to_big_signed(m);
      const unsigned w = omega(static_cast<std::uint64_t>(m));
      std::uint64_t pi = pi_general_greedy(f, bm, horizon, options).value;
      if (pi <= w) {
        try {
          pi = pi_general_exact(f, bm, kDefaultPiCap, horizon, options).value;
        } catch (const CapExceeded&) {
          o.undecided = true;
        }
      }
      o.premise = pi > w;
      if (o.premise) {
        const auto phi = phi_general(FunctionSystem{f}, bm, std::nullopt, options);
        if (phi.count == 0) o.violation = ImplicationViolation{m, pi, w, phi.count, phi.exact};
      }
      local.push_back(std::move(o));
    }
    return local;
  });
  ImplicationCheck out;
  for (const auto& o : outcomes) {
    if (o.premise) ++out.premise_count;
    if (o.undecided) out.undecided.push_back(o.m);
    if (o.violation) out.violations.push_back(*o.violation);
  }
  return out;
}

}  // namespace primerep

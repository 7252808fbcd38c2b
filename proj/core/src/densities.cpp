#include "omega/densities.hpp"

#include <algorithm>
#include <set>

#include "omega/error.hpp"

namespace omega {

namespace {

using u128 = unsigned __int128;

// p/q as a comparable fraction
struct Frac {
  std::uint64_t p, q;
  bool operator<(const Frac& o) const { return u128(p) * o.q < u128(o.p) * q; }
  Rational r() const { return Rational(BigInt(p), BigInt(q)); }
};

BigInt ceil_times(const Rational& x, const BigInt& y) {
  Rational v = x * Rational(y);
  BigInt q = numerator(v) / denominator(v);
  if (q * denominator(v) < numerator(v)) ++q;
  return q;
}

}  // namespace

IndexSet IndexSet::finite(std::vector<std::uint64_t> idx, std::uint64_t horizon) {
  IndexSet s;
  s.kind = Kind::FinitePrefix;
  s.indices = std::move(idx);
  s.horizon = horizon;
  s.validate();
  return s;
}

IndexSet IndexSet::periodic(std::uint64_t period, std::vector<std::uint64_t> residues,
                            std::vector<std::uint64_t> added, std::vector<std::uint64_t> removed) {
  IndexSet s;
  s.kind = Kind::Periodic;
  s.period = period;
  s.residues = std::move(residues);
  s.added = std::move(added);
  s.removed = std::move(removed);
  s.validate();
  return s;
}

IndexSet IndexSet::geometric(std::int64_t base, Rational alpha, Rational beta) {
  IndexSet s;
  s.kind = Kind::Geometric;
  s.base = base;
  s.alpha = alpha;
  s.beta = beta;
  s.validate();
  return s;
}

IndexSet IndexSet::sparse(Template t) {
  IndexSet s;
  s.kind = Kind::Sparse;
  s.points = t;
  s.validate();
  return s;
}

void IndexSet::validate() const {
  switch (kind) {
    case Kind::FinitePrefix:
      if (horizon == 0) fail(ErrorCode::InvalidArgument, "horizon must be >= 1");
      for (size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= horizon) fail(ErrorCode::InvalidArgument, "index beyond horizon");
        if (i && indices[i] <= indices[i - 1]) fail(ErrorCode::InvalidArgument, "indices must be strictly increasing");
      }
      break;
    case Kind::Periodic:
      if (period == 0) fail(ErrorCode::UnsupportedPattern, "period must be >= 1");
      for (auto r : residues)
        if (r >= period) fail(ErrorCode::UnsupportedPattern, "residue out of range");
      break;
    case Kind::Geometric:
      if (base < 2 || alpha <= 0 || beta <= alpha || beta > alpha * base)
        fail(ErrorCode::UnsupportedPattern, "need base >= 2 and 0 < alpha < beta <= base*alpha");
      break;
    case Kind::Sparse:
      try {
        points.validate();
      } catch (const Error&) {
        fail(ErrorCode::UnsupportedPattern, "sparse template outside the supported family");
      }
      break;
  }
}

IndexSet materialize(const IndexSet& S, std::uint64_t N) {
  S.validate();
  std::vector<std::uint64_t> out;
  switch (S.kind) {
    case IndexSet::Kind::FinitePrefix:
      for (auto i : S.indices)
        if (i < N) out.push_back(i);
      break;
    case IndexSet::Kind::Periodic: {
      std::set<std::uint64_t> res(S.residues.begin(), S.residues.end());
      std::set<std::uint64_t> add(S.added.begin(), S.added.end()), rem(S.removed.begin(), S.removed.end());
      for (std::uint64_t n = 0; n < N; ++n)
        if ((res.count(n % S.period) || add.count(n)) && !rem.count(n)) out.push_back(n);
      break;
    }
    case IndexSet::Kind::Geometric: {
      std::vector<char> in(N, 0);
      BigInt bk = 1;
      for (;; bk *= S.base) {
        BigInt lo = ceil_times(S.alpha, bk), hi = ceil_times(S.beta, bk);
        if (lo >= N) break;
        for (BigInt j = lo; j < hi && j < N; ++j) in[j.convert_to<std::uint64_t>()] = 1;
      }
      for (std::uint64_t n = 0; n < N; ++n)
        if (in[n]) out.push_back(n);
      break;
    }
    case IndexSet::Kind::Sparse: {
      std::set<std::uint64_t> pts;
      for (std::int64_t k = 0;; ++k) {
        auto v = S.points.eval(k);
        if (v >= N) {
          if (growth_class(S.points) > GrowthClass{0, 1, 0}) break;
          if (k > 0) break;
        } else {
          pts.insert(v);
        }
        if (growth_class(S.points) == GrowthClass{0, 1, 0}) break;
      }
      out.assign(pts.begin(), pts.end());
      break;
    }
  }
  return IndexSet::finite(std::move(out), N);
}

IndexSet complement(const IndexSet& S) {
  if (S.kind != IndexSet::Kind::FinitePrefix) fail(ErrorCode::InvalidArgument, "complement needs a finite prefix");
  std::vector<std::uint64_t> out;
  size_t j = 0;
  for (std::uint64_t n = 0; n < S.horizon; ++n) {
    if (j < S.indices.size() && S.indices[j] == n) {
      ++j;
      continue;
    }
    out.push_back(n);
  }
  return IndexSet::finite(std::move(out), S.horizon);
}

DensityProfile density_profile(const IndexSet& S) {
  S.validate();
  DensityProfile d;
  switch (S.kind) {
    case IndexSet::Kind::FinitePrefix: {
      const std::uint64_t N = S.horizon;
      std::vector<std::uint64_t> c(N + 1, 0);  // c[n] = #members below n
      {
        size_t j = 0;
        for (std::uint64_t n = 0; n < N; ++n) {
          c[n + 1] = c[n];
          if (j < S.indices.size() && S.indices[j] == n) ++c[n + 1], ++j;
        }
      }
      const std::uint64_t n0 = std::max<std::uint64_t>(1, (N + 15) / 16);
      Frac lo{c[N], N}, hi{c[N], N};
      for (std::uint64_t n = n0; n <= N; ++n) {
        Frac f{c[n], n};
        if (f < lo) lo = f;
        if (hi < f) hi = f;
      }
      Frac blo = lo, bhi = hi;
      // windows down to N/512 keep the 2/L boundary error below 1e-3 at N = 4^10
      for (int i = 0; i <= 9; ++i) {
        std::uint64_t L = (N + (1ULL << i) - 1) >> i;
        if (L < 1) break;
        std::uint64_t mn = ~0ULL, mx = 0;
        for (std::uint64_t j = 0; j + L <= N; ++j) {
          std::uint64_t v = c[j + L] - c[j];
          mn = std::min(mn, v);
          mx = std::max(mx, v);
        }
        if (Frac{mn, L} < blo) blo = {mn, L};
        if (bhi < Frac{mx, L}) bhi = {mx, L};
        if (L == 1) break;
      }
      d = {blo.r(), lo.r(), hi.r(), bhi.r(), false};
      break;
    }
    case IndexSet::Kind::Periodic: {
      std::set<std::uint64_t> res(S.residues.begin(), S.residues.end());
      Rational v(BigInt(res.size()), BigInt(S.period));
      d = {v, v, v, v, true};
      break;
    }
    case IndexSet::Kind::Geometric: {
      Rational b(S.base), a = S.alpha, be = S.beta;
      Rational dl = (be - a) / ((b - 1) * a);
      Rational du = (be - a) * b / ((b - 1) * be);
      if (be == a * b) d = {1, 1, 1, 1, true};
      else d = {0, dl, du, 1, true};
      break;
    }
    case IndexSet::Kind::Sparse: {
      auto cls = growth_class(S.points);
      if (cls == GrowthClass{0, 1, 1}) {
        Rational v(BigInt(1), BigInt(S.points.c));
        d = {v, v, v, v, true};
      } else {
        d = {0, 0, 0, 0, true};
      }
      break;
    }
  }
  return d;
}

Syndeticity is_syndetic(const IndexSet& S) {
  S.validate();
  auto gaps_of = [](const std::vector<std::uint64_t>& idx, std::uint64_t tail_end) -> Syndeticity {
    if (idx.empty()) return {false, std::nullopt};
    std::uint64_t g = idx[0] + 1;
    for (size_t i = 1; i < idx.size(); ++i) g = std::max(g, idx[i] - idx[i - 1]);
    if (tail_end) g = std::max(g, tail_end - idx.back());
    return {true, g};
  };
  switch (S.kind) {
    case IndexSet::Kind::FinitePrefix:
      return gaps_of(S.indices, S.horizon);
    case IndexSet::Kind::Periodic: {
      if (S.residues.empty()) return {false, std::nullopt};
      std::uint64_t hi = 0;
      for (auto v : S.added) hi = std::max(hi, v);
      for (auto v : S.removed) hi = std::max(hi, v);
      auto fin = materialize(S, hi + 2 * S.period + 2);
      auto r = gaps_of(fin.indices, 0);
      // cyclic gap of the pure residue pattern
      std::vector<std::uint64_t> res(S.residues.begin(), S.residues.end());
      std::sort(res.begin(), res.end());
      res.erase(std::unique(res.begin(), res.end()), res.end());
      std::uint64_t cyc = res.front() + S.period - res.back();
      for (size_t i = 1; i < res.size(); ++i) cyc = std::max(cyc, res[i] - res[i - 1]);
      return {true, std::max(*r.gap, cyc)};
    }
    case IndexSet::Kind::Geometric: {
      if (S.beta == S.alpha * S.base) {
        BigInt first = ceil_times(S.alpha, BigInt(1));
        return {true, first.convert_to<std::uint64_t>() + 1};
      }
      return {false, std::nullopt};
    }
    case IndexSet::Kind::Sparse: {
      if (growth_class(S.points) == GrowthClass{0, 1, 1})
        return {true, std::uint64_t(S.points.c)};
      return {false, std::nullopt};
    }
  }
  return {false, std::nullopt};
}

IndexSet visit_times(const BlockSchedule& s, const Word& cyl, std::uint64_t horizon) {
  if (cyl.empty()) fail(ErrorCode::InvalidArgument, "empty cylinder word");
  if (horizon == 0) fail(ErrorCode::InvalidArgument, "horizon must be >= 1");
  Word x = schedule_prefix(s, horizon + cyl.size());
  std::vector<std::uint64_t> out;
  for (std::uint64_t j = 0; j < horizon; ++j)
    if (std::equal(cyl.begin(), cyl.end(), x.begin() + j)) out.push_back(j);
  return IndexSet::finite(std::move(out), horizon);
}

}  // namespace omega

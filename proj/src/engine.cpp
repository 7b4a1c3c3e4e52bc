// Recursion assembly; see engine.hpp for the representation contract.
//
// Sign bookkeeping: the kernel numerator carries one global minus, and each
// term of the bracket contains exactly one factor evaluated at the mirrored
// point, whose Jacobian carries another; they cancel, so every term enters
// with its plain sign. Mirroring itself is invisible because each expansion
// is an even series: branch points sit at 2-torsion points, so wp is even
// both at its pole and about every half-period offset. Bare Bergman factors
// B(q, z_i) expand through wp^{(m)}(z_i - z_a) spectator slots; odd m only
// produces odd total powers, which the even-power extraction never reads,
// so the enumeration skips them.

#include "spectral/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "spectral/wp.hpp"

namespace spectral {

namespace {

std::vector<QPoly> ramification_factors(const ASpectralCurve& curve) {
  std::vector<QPoly> out;
  for (const auto& rf : curve.factors) out.push_back(rf.factor);
  return out;
}

LSeries<Alg> lift_series(const LSeries<Rational>& f) {
  if (f.is_zero()) return LSeries<Alg>(f.truncation());
  std::vector<Alg> c;
  for (int k = f.order(); k <= f.truncation(); ++k) c.emplace_back(f.coef(k));
  return LSeries<Alg>(f.order(), std::move(c), f.truncation());
}

Rational inverse_factorial(int k) {
  Rational f(1);
  for (int i = 2; i <= k; ++i) f = f * Rational(i);
  return f.inverse();
}

// Injective identifications of the centers of ids2 with same-factor centers
// of ids1; entry j of a matching is the matched position in ids1, or -1 for
// a root distinct from all of them.
void all_matchings(const std::vector<int>& ids1, const std::vector<int>& ids2,
                   size_t j, std::vector<int>& cur, std::vector<bool>& used,
                   std::vector<std::vector<int>>& out) {
  if (j == ids2.size()) {
    out.push_back(cur);
    return;
  }
  cur[j] = -1;
  all_matchings(ids1, ids2, j + 1, cur, used, out);
  for (size_t i = 0; i < ids1.size(); ++i) {
    if (used[i] || ids1[i] != ids2[j]) continue;
    used[i] = true;
    cur[j] = static_cast<int>(i);
    all_matchings(ids1, ids2, j + 1, cur, used, out);
    used[i] = false;
  }
  cur[j] = -1;
}

struct Entry {
  int fid;
  int piece;  // 0, 1 for the two factors, 2 for the kernel center
  int pos;
};

}  // namespace

RecursionEngine::RecursionEngine(const ASpectralCurve& curve, int level_cap,
                                 int order)
    : curve_(curve),
      inv_(elliptic_invariants(curve.S)),
      factory_(ramification_factors(curve)),
      level_cap_(level_cap),
      order_(order),
      wp0_(wp_laurent(inv_, order)),
      wp2s_(lift_series(argument_scaled(wp0_, Rational(2)))) {
  if (level_cap_ < 1 || level_cap_ > 3)
    throw std::invalid_argument("RecursionEngine: level cap must be 1..3");
  if (order_ < 8)
    throw std::invalid_argument("RecursionEngine: order must be >= 8");
  for (const auto& f : factory_.factors()) degree_.push_back(f.degree());
  static const int plan[][3] = {{1, 0, 3}, {1, 1, 1}, {2, 0, 4}, {2, 1, 2},
                                {3, 0, 5}, {3, 1, 3}, {3, 2, 1}};
  for (const auto& e : plan)
    if (e[0] <= level_cap_) table_[{e[1], e[2]}] = assemble_(e[1], e[2]);
}

const std::vector<Monomial>& RecursionEngine::omega(int h, int n) const {
  auto it = table_.find({h, n});
  if (it == table_.end())
    throw std::out_of_range("RecursionEngine: omega(" + std::to_string(h) +
                            "," + std::to_string(n) + ") not computed");
  return it->second;
}

const CenterFrame& RecursionEngine::frame(const TowerPtr& tower,
                                          int gen_index) {
  const auto key = std::make_pair(tower.get(), gen_index);
  auto it = frames_.find(key);
  if (it == frames_.end())
    it = frames_
             .emplace(key, center_frame(curve_, tower->gen(gen_index), order_))
             .first;
  return it->second;
}

std::vector<Monomial> RecursionEngine::assemble_(int h, int N) {
  const int n = N - 1;  // spectator variables z_1..z_n
  Acc acc;
  if (h >= 1) {
    if (h == 1 && N == 1) {
      // omega_2^0(q, qbar) is the bare kernel -wp(2s) ds^2; with the global
      // sign convention above it enters as +wp(2s).
      run_term_({}, {}, true, N, acc);
    } else {
      StoredUse u;
      u.table = &omega(h - 1, N + 1);
      u.vars.push_back(kQ);
      u.vars.push_back(kQbar);
      for (int k = 1; k <= n; ++k) u.vars.push_back(k);
      run_term_({u}, {}, false, N, acc);
    }
  }
  for (int hp = 0; hp <= h; ++hp) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      const int nj = __builtin_popcount(mask);
      if (hp == 0 && nj == 0) continue;
      if (hp == h && nj == n) continue;
      std::vector<int> J, K;
      for (int k = 1; k <= n; ++k)
        ((mask >> (k - 1)) & 1u ? J : K).push_back(k);
      std::vector<StoredUse> stored;
      std::vector<BUse> bspect;
      if (hp == 0 && nj == 1) {
        bspect.push_back(BUse{J[0]});
      } else {
        StoredUse u;
        u.table = &omega(hp, nj + 1);
        u.vars.push_back(kQ);
        for (int v : J) u.vars.push_back(v);
        stored.push_back(std::move(u));
      }
      if (hp == h && nj == n - 1) {
        bspect.push_back(BUse{K[0]});
      } else {
        StoredUse u;
        u.table = &omega(h - hp, N - nj);
        u.vars.push_back(kQbar);
        for (int v : K) u.vars.push_back(v);
        stored.push_back(std::move(u));
      }
      run_term_(stored, bspect, false, N, acc);
    }
  }
  std::vector<Monomial> out;
  for (auto& kv : acc) {
    if (kv.second.is_zero()) continue;
    Monomial m;
    m.centers = kv.first.first;
    for (const auto& s : kv.first.second)
      m.slots.push_back(WpSlot{s.first, s.second});
    m.coef = kv.second;
    out.push_back(std::move(m));
  }
  return out;
}

void RecursionEngine::run_term_(const std::vector<StoredUse>& stored,
                                const std::vector<BUse>& bspect, bool bqq,
                                int N, Acc& acc) {
  static const std::vector<Monomial> unit = {Monomial{{}, {}, Alg(1)}};
  const std::vector<Monomial>& t1 =
      stored.size() >= 1 ? *stored[0].table : unit;
  const std::vector<Monomial>& t2 =
      stored.size() >= 2 ? *stored[1].table : unit;
  for (const Monomial& m1 : t1)
    for (const Monomial& m2 : t2)
      contributions_(m1, m2, stored, bspect, bqq, N, acc);
}

void RecursionEngine::contributions_(const Monomial& m1, const Monomial& m2,
                                     const std::vector<StoredUse>& stored,
                                     const std::vector<BUse>& bspect, bool bqq,
                                     int N, Acc& acc) {
  std::vector<std::vector<int>> matchings;
  {
    std::vector<int> cur(m2.centers.size(), -1);
    std::vector<bool> used(m1.centers.size(), false);
    all_matchings(m1.centers, m2.centers, 0, cur, used, matchings);
  }
  const int F = static_cast<int>(degree_.size());

  for (const auto& match : matchings) {
    std::vector<Entry> base;
    for (size_t i = 0; i < m1.centers.size(); ++i)
      base.push_back({m1.centers[i], 0, static_cast<int>(i)});
    for (size_t j = 0; j < m2.centers.size(); ++j)
      if (match[j] < 0) base.push_back({m2.centers[j], 1, static_cast<int>(j)});

    std::vector<int> count(F, 0);
    bool overfull = false;
    for (const auto& e : base)
      if (++count[e.fid] > degree_[e.fid]) overfull = true;
    if (overfull) continue;  // more pairwise-distinct roots than the factor has

    for (int f = 0; f < F; ++f) {
      for (int br = 0; br <= static_cast<int>(base.size()); ++br) {
        const bool fresh = br == static_cast<int>(base.size());
        if (fresh) {
          if (count[f] >= degree_[f]) continue;
        } else if (base[br].fid != f) {
          continue;
        }
        std::vector<Entry> ents = base;
        if (fresh) ents.push_back({f, 2, 0});
        std::stable_sort(ents.begin(), ents.end(),
                         [](const Entry& a, const Entry& b) {
                           return a.fid < b.fid;
                         });
        std::vector<int> ids(ents.size());
        std::vector<int> map1(m1.centers.size(), -1);
        std::vector<int> map2(m2.centers.size(), -1);
        int a_pos = -1;
        for (int idx = 0; idx < static_cast<int>(ents.size()); ++idx) {
          ids[idx] = ents[idx].fid;
          if (ents[idx].piece == 0) map1[ents[idx].pos] = idx;
          if (ents[idx].piece == 1) map2[ents[idx].pos] = idx;
          if (ents[idx].piece == 2) a_pos = idx;
          if (!fresh && ents[idx].piece == base[br].piece &&
              ents[idx].pos == base[br].pos)
            a_pos = idx;
        }
        for (size_t j = 0; j < m2.centers.size(); ++j)
          if (match[j] >= 0) map2[j] = map1[match[j]];

        const TowerPtr tower = factory_.tower(ids);
        Alg coef(Rational(1));
        if (!m1.centers.empty())
          coef = factory_.hom(m1.centers, ids, map1).apply(m1.coef);
        else
          coef = coef * m1.coef;
        if (!m2.centers.empty())
          coef = coef * factory_.hom(m2.centers, ids, map2).apply(m2.coef);
        else
          coef = coef * m2.coef;

        LSeries<Alg> rest = frame(tower, a_pos).wtilde;
        std::vector<std::pair<int, int>> outs(N, {-1, -1});
        for (size_t pi = 0; pi < stored.size(); ++pi) {
          const Monomial& m = pi == 0 ? m1 : m2;
          const std::vector<int>& map = pi == 0 ? map1 : map2;
          for (size_t k = 0; k < m.slots.size(); ++k) {
            const WpSlot& sl = m.slots[k];
            if (sl.p % 2 != 0)
              throw std::logic_error(
                  "RecursionEngine: odd derivative order in stored table");
            const int var = stored[pi].vars[k];
            const int cpos = map[sl.center];
            if (var < 0)
              rest = rest * slot_series_(tower, a_pos, cpos, sl.p);
            else
              outs[var] = {cpos, sl.p};
          }
        }
        if (bqq) rest = rest * wp2s_;
        if (rest.is_zero()) continue;

        const int reach = -2 - rest.order();
        const int nb = static_cast<int>(bspect.size());
        std::vector<int> ms(nb, 0);
        const auto emit = [&]() {
          int summ = 0;
          Rational mfac(1);
          for (int i = 0; i < nb; ++i) {
            summ += ms[i];
            mfac = mfac * inverse_factorial(ms[i]);
          }
          for (int twoj = 0;; twoj += 2) {
            const int k = -twoj - 2 - summ;
            if (k < rest.order()) break;
            const Alg c = rest.coef(k);
            if (c.is_zero()) continue;
            Monomial out;
            out.centers = ids;
            out.slots.resize(N);
            out.slots[0] = WpSlot{a_pos, twoj};
            for (int v = 1; v < N; ++v)
              out.slots[v] = WpSlot{outs[v].first, outs[v].second};
            for (int i = 0; i < nb; ++i)
              out.slots[bspect[i].var] = WpSlot{a_pos, ms[i]};
            for (int v = 0; v < N; ++v)
              if (out.slots[v].center < 0 || out.slots[v].p < 0 ||
                  out.slots[v].p % 2 != 0)
                throw std::logic_error(
                    "RecursionEngine: unassigned or odd-order slot produced");
            out.coef = coef * c * (mfac * inverse_factorial(twoj + 1));
            merge_(acc, std::move(out));
          }
        };
        if (nb == 0) {
          emit();
        } else if (nb == 1) {
          for (ms[0] = 0; ms[0] <= reach; ms[0] += 2) emit();
        } else if (nb == 2) {
          for (ms[0] = 0; ms[0] <= reach; ms[0] += 2)
            for (ms[1] = 0; ms[0] + ms[1] <= reach; ms[1] += 2) emit();
        } else {
          throw std::logic_error("RecursionEngine: more than two bare kernels");
        }
      }
    }
  }
}

LSeries<Alg> RecursionEngine::slot_series_(const TowerPtr& tower, int a_pos,
                                           int c_pos, int p) {
  LSeries<Alg> base(order_);
  if (c_pos == a_pos) {
    base = lift_series(wp0_);
  } else {
    const auto key = std::make_tuple(tower.get(), a_pos, c_pos);
    auto it = evens_.find(key);
    if (it == evens_.end()) {
      const Alg e =
          half_period_value(curve_.S, tower->gen(a_pos), tower->gen(c_pos));
      it = evens_.emplace(key, wp_even_expansion(e, inv_, order_)).first;
    }
    base = it->second;
  }
  for (int i = 0; i < p; ++i) base = series_derivative(base);
  return base;
}

void RecursionEngine::merge_(Acc& acc, Monomial m) {
  if (!m.centers.empty() && m.coef.is_scalar())
    m.coef = m.coef * factory_.tower(m.centers)->one();
  // Trace out centers that survive only inside the coefficient.
  while (true) {
    std::vector<bool> ref(m.centers.size(), false);
    for (const auto& s : m.slots) ref[s.center] = true;
    int pos = -1;
    for (int i = static_cast<int>(m.centers.size()) - 1; i >= 0; --i)
      if (!ref[i]) {
        pos = i;
        break;
      }
    if (pos < 0) break;
    const int d = static_cast<int>(m.centers.size());
    std::vector<int> ids2;
    std::vector<int> gen_map(d);
    for (int i = 0; i < d; ++i)
      if (i != pos) ids2.push_back(m.centers[i]);
    ids2.push_back(m.centers[pos]);
    for (int i = 0; i < d; ++i)
      gen_map[i] = i < pos ? i : (i == pos ? d - 1 : i - 1);
    m.coef = factory_.hom(m.centers, ids2, gen_map).apply(m.coef).trace_top();
    m.centers.erase(m.centers.begin() + pos);
    for (auto& s : m.slots)
      if (s.center > pos) --s.center;
  }
  if (m.coef.is_zero()) return;

  // Canonical labeling: within each same-factor block, order centers by the
  // first slot that references them, relabeling the coefficient to match.
  const int d = static_cast<int>(m.centers.size());
  std::vector<int> first(d, -1);
  for (int i = static_cast<int>(m.slots.size()) - 1; i >= 0; --i)
    first[m.slots[i].center] = i;
  std::vector<int> order(d);
  for (int i = 0; i < d; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (m.centers[a] != m.centers[b]) return m.centers[a] < m.centers[b];
    return first[a] < first[b];
  });
  std::vector<int> gen_map(d);  // old position -> new position
  bool trivial = true;
  for (int neu = 0; neu < d; ++neu) {
    gen_map[order[neu]] = neu;
    if (order[neu] != neu) trivial = false;
  }
  if (!trivial) {
    m.coef = factory_.hom(m.centers, m.centers, gen_map).apply(m.coef);
    for (auto& s : m.slots) s.center = gen_map[s.center];
  }

  Key key;
  key.first = m.centers;
  for (const auto& s : m.slots) key.second.push_back({s.center, s.p});
  auto it = acc.find(key);
  if (it == acc.end())
    acc.emplace(std::move(key), m.coef);
  else
    it->second += m.coef;
}

RecursionEngine make_engine(const ASpectralCurve& curve, int level_cap) {
  const int base_order = 2 * level_cap + 6;
  try {
    return RecursionEngine(curve, level_cap, base_order);
  } catch (const TruncationError&) {
    return RecursionEngine(curve, level_cap, 2 * base_order);
  }
}

}  // namespace spectral

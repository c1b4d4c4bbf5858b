#include "lyx/minsuf.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace lyx {

pos_t TierProfile::f(pos_t x) const {
  if (x < 4) return 1;
  const unsigned lg =
      std::bit_width(static_cast<std::uint64_t>(x)) - 1; // floor log2 x
  const unsigned llg = std::bit_width(static_cast<std::uint64_t>(lg)) - 1;
  const unsigned e = kind == Kind::Paper ? llg * llg : llg;
  return pos_t{1} << e;
}

Decomposition decompose(const TierProfile& prof, Fragment v) {
  const pos_t fv = prof.f(v.len());
  if (v.len() <= fv)
    throw InvalidArguments("decompose: fragment not longer than its grid");
  const pos_t l = v.start, r = v.end;
  const pos_t rp = ((r - 1) / fv) * fv; // largest grid point < r; rp >= l
  const pos_t left = rp - l + 1;
  const pos_t vlen = pos_t{1}
                     << (std::bit_width(static_cast<std::uint64_t>(left)) - 1);

  Decomposition d;
  d.vpp = Fragment{rp + 1, r};
  d.vp = Fragment{rp - vlen + 1, rp};
  d.has_u = d.vp.start > l;
  if (d.has_u) d.u = Fragment{l, d.vp.start - 1};
  return d;
}

MinSufExtender MinSufExtender::build(const Esa& e, Fragment v) {
  MinSufExtender out;
  out.sig = significant_suffixes(e, v);
  const pos_t r = v.end, n = e.n();
  if (r < n) {
    const auto& lens = out.sig.lens;
    const Fragment tail{r + 1, n};
    for (std::size_t i = 0; i + 1 < lens.size(); ++i) {
      // The i-th ladder root x_i satisfies x_i^{p_i} = the length-
      // (|s_i| - |s_{i+1}|) suffix of v, so x_i^inf is that run's power.
      const Fragment run{r - (lens[i] - lens[i + 1]) + 1, r};
      const auto ic = e.lcp_infinite(run, tail);
      if (ic.cmp == Ordering::Less) out.rvals.push_back(r + ic.lcp);
    }
    std::sort(out.rvals.begin(), out.rvals.end());
  }
  return out;
}

pos_t MinSufExtender::query(pos_t rprime) const {
  if (rprime <= sig.v.end)
    throw InvalidArguments("extender query: context must extend past v");
  stats::bump();
  const auto rank = static_cast<std::size_t>(
      std::lower_bound(rvals.begin(), rvals.end(), rprime) - rvals.begin());
  return sig.v.end - sig.lens[sig.lens.size() - 1 - rank] + 1;
}

std::string oid_key(std::span<const letter_t> w) {
  std::vector<letter_t> d(w.begin(), w.end());
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  std::string key;
  key.reserve(w.size() * 2);
  for (const letter_t c : w) {
    const auto rank = static_cast<std::uint16_t>(
        std::lower_bound(d.begin(), d.end(), c) - d.begin());
    key.push_back(static_cast<char>(rank & 0xff));
    key.push_back(static_cast<char>(rank >> 8));
  }
  return key;
}

MinSufIndex::MinSufIndex(const Esa& e, TierProfile prof)
    : esa_(&e), prof_(prof) {
  build_registry();
  build_tables();
}

void MinSufIndex::build_registry() {
  const pos_t n = esa_->n();
  if (n <= prof_.short_cutoff) return; // no query ever decomposes

  const int qmax = std::bit_width(static_cast<std::uint64_t>(n)) - 1;
  slots_.resize(static_cast<std::size_t>(qmax) + 1);
  for (int q = 0; q <= qmax; ++q) {
    const pos_t vlen = pos_t{1} << q;
    const pos_t grid = prof_.f(vlen);
    auto& row = slots_[static_cast<std::size_t>(q)];
    row.assign(static_cast<std::size_t>(n / grid) + 1, Slot{});
    for (pos_t r = grid; r <= n; r += grid) {
      if (r < vlen) continue;
      const MinSufExtender ext =
          MinSufExtender::build(*esa_, Fragment{r - vlen + 1, r});
      Slot& s = row[static_cast<std::size_t>(r / grid)];
      s.lens_off = static_cast<std::uint32_t>(lens_pool_.size());
      s.r_off = static_cast<std::uint32_t>(r_pool_.size());
      s.lens_cnt = static_cast<std::uint16_t>(ext.sig.lens.size());
      s.r_cnt = static_cast<std::uint16_t>(ext.rvals.size());
      lens_pool_.insert(lens_pool_.end(), ext.sig.lens.begin(),
                        ext.sig.lens.end());
      r_pool_.insert(r_pool_.end(), ext.rvals.begin(), ext.rvals.end());
    }
  }
}

void MinSufIndex::build_tables() {
  const pos_t tau = prof_.tau;
  if (tau <= 0) return;
  const pos_t n = esa_->n();
  const pos_t nblocks = (n - 1) / tau + 1;
  block_table_id_.resize(static_cast<std::size_t>(nblocks));

  std::unordered_map<std::string, std::uint32_t> ids;
  std::vector<letter_t> window;
  for (pos_t i = 0; i < nblocks; ++i) {
    const pos_t bstart = 1 + i * tau;
    const pos_t bend = std::min(n, (i + 2) * tau);
    const pos_t blen = bend - bstart + 1;
    window.clear();
    for (pos_t p = bstart; p <= bend; ++p) window.push_back(esa_->at(p));

    const auto [it, fresh] =
        ids.emplace(oid_key(window), static_cast<std::uint32_t>(tables_.size()));
    if (fresh) {
      // Answers for every fragment of this block; order-isomorphic blocks
      // share the table because minimal-suffix lengths only depend on the
      // relative order of letters.
      std::vector<std::uint16_t> tbl(
          static_cast<std::size_t>(blen) * static_cast<std::size_t>(blen), 0);
      for (pos_t a = bstart; a <= bend; ++a)
        for (pos_t b = a; b <= bend; ++b)
          tbl[static_cast<std::size_t>((a - bstart) * blen + (b - bstart))] =
              static_cast<std::uint16_t>(minsuf_log(*esa_, Fragment{a, b}) -
                                         bstart + 1);
      tables_.push_back(std::move(tbl));
    }
    block_table_id_[static_cast<std::size_t>(i)] = it->second;
  }
}

pos_t MinSufIndex::table_answer(Fragment v) const {
  const pos_t tau = prof_.tau;
  const pos_t i = (v.start - 1) / tau;
  const pos_t bstart = 1 + i * tau;
  const pos_t bend = std::min(esa_->n(), (i + 2) * tau);
  const pos_t blen = bend - bstart + 1;
  stats::bump();
  const auto& tbl = tables_[block_table_id_[static_cast<std::size_t>(i)]];
  return bstart - 1 +
         tbl[static_cast<std::size_t>((v.start - bstart) * blen +
                                      (v.end - bstart))];
}

pos_t MinSufIndex::extender_answer(Fragment vp, pos_t rprime) const {
  const auto q = static_cast<std::size_t>(
      std::bit_width(static_cast<std::uint64_t>(vp.len())) - 1);
  const pos_t grid = prof_.f(vp.len());
  if (q >= slots_.size() || vp.end % grid != 0)
    throw InvalidRange("extender: fragment is not on the distinguished grid");
  const Slot& s = slots_[q][static_cast<std::size_t>(vp.end / grid)];
  if (s.lens_cnt == 0)
    throw InvalidRange("extender: fragment is not on the distinguished grid");
  stats::bump();
  const pos_t* rb = r_pool_.data() + s.r_off;
  const auto rank =
      static_cast<std::size_t>(std::lower_bound(rb, rb + s.r_cnt, rprime) - rb);
  // Start in T of the best suffix s of vp (vp.end + 1 encodes the empty s).
  return vp.end - lens_pool_[s.lens_off + s.lens_cnt - 1 - rank] + 1;
}

pos_t MinSufIndex::query_tiered(Fragment v, bool use_tables) const {
  if (use_tables && prof_.tau > 0 && v.len() <= prof_.tau)
    return table_answer(v);
  if (v.len() <= prof_.short_cutoff || v.len() <= prof_.f(v.len()))
    return minsuf_log(*esa_, v);

  const Decomposition d = decompose(prof_, v);
  const pos_t r = v.end;
  const auto better = [&](pos_t a, pos_t b) {
    return esa_->compare(Fragment{a, r}, Fragment{b, r}) == Ordering::Greater
               ? b
               : a;
  };

  // Candidate start positions, each beginning a suffix of v:
  //   - the minimal suffix of the short tail v'',
  //   - the best suffix starting inside the distinguished fragment v',
  //   - the best suffix starting inside u (if u is nonempty).
  pos_t best = query_tiered(d.vpp, use_tables);
  best = better(best, extender_answer(d.vp, r));
  if (d.has_u) best = better(best, max_suf_rev(*esa_, d.u, d.vp));
  return best;
}

pos_t MinSufIndex::minsuf_logstar(Fragment v) const {
  return query_tiered(v, false);
}

pos_t MinSufIndex::minsuf(Fragment v) const { return query_tiered(v, true); }

} // namespace lyx

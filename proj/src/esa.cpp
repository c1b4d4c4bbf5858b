#include "lyx/esa.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace lyx {

// ---------------------------------------------------------------------------
// Suffix array construction
// ---------------------------------------------------------------------------

namespace {

// Induced sorting over s[0..n-1] where s[n-1] == 0 is the unique minimum.
void sais_core(const std::int64_t* s, std::int64_t* sa, std::int64_t n,
               std::int64_t sigma) {
  if (n == 1) {
    sa[0] = 0;
    return;
  }
  std::vector<bool> is_s(static_cast<std::size_t>(n));
  is_s[static_cast<std::size_t>(n - 1)] = true;
  for (std::int64_t i = n - 2; i >= 0; --i)
    is_s[static_cast<std::size_t>(i)] =
        s[i] < s[i + 1] || (s[i] == s[i + 1] && is_s[static_cast<std::size_t>(i + 1)]);
  auto is_lms = [&](std::int64_t i) {
    return i > 0 && is_s[static_cast<std::size_t>(i)] &&
           !is_s[static_cast<std::size_t>(i - 1)];
  };

  std::vector<std::int64_t> bstart(static_cast<std::size_t>(sigma) + 1, 0);
  for (std::int64_t i = 0; i < n; ++i) ++bstart[static_cast<std::size_t>(s[i]) + 1];
  for (std::int64_t c = 0; c < sigma; ++c)
    bstart[static_cast<std::size_t>(c) + 1] += bstart[static_cast<std::size_t>(c)];

  auto induce = [&](const std::vector<std::int64_t>& seeds) {
    std::fill(sa, sa + n, -1);
    std::vector<std::int64_t> bend(bstart.begin() + 1, bstart.end());
    for (auto it = seeds.rbegin(); it != seeds.rend(); ++it)
      sa[--bend[static_cast<std::size_t>(s[*it])]] = *it;
    std::vector<std::int64_t> bcur(bstart.begin(), bstart.end() - 1);
    for (std::int64_t k = 0; k < n; ++k) {
      const std::int64_t j = sa[k] - 1;
      if (sa[k] > 0 && !is_s[static_cast<std::size_t>(j)])
        sa[bcur[static_cast<std::size_t>(s[j])]++] = j;
    }
    std::vector<std::int64_t> bend2(bstart.begin() + 1, bstart.end());
    for (std::int64_t k = n - 1; k >= 0; --k) {
      const std::int64_t j = sa[k] - 1;
      if (sa[k] > 0 && is_s[static_cast<std::size_t>(j)])
        sa[--bend2[static_cast<std::size_t>(s[j])]] = j;
    }
  };

  std::vector<std::int64_t> lms;
  for (std::int64_t i = 1; i < n; ++i)
    if (is_lms(i)) lms.push_back(i);
  induce(lms);

  // Name LMS substrings by their order of appearance in the induced array.
  std::vector<std::int64_t> name(static_cast<std::size_t>(n), -1);
  std::int64_t names = 0, prev = -1;
  for (std::int64_t k = 0; k < n; ++k) {
    const std::int64_t i = sa[k];
    if (!is_lms(i)) continue;
    if (prev >= 0) {
      bool same = true;
      for (std::int64_t d = 0;; ++d) {
        const bool ea = d > 0 && is_lms(prev + d);
        const bool eb = d > 0 && is_lms(i + d);
        if (s[prev + d] != s[i + d] || ea != eb) {
          same = false;
          break;
        }
        if (ea) break;
      }
      if (!same) ++names;
    }
    name[static_cast<std::size_t>(i)] = names;
    prev = i;
  }

  std::vector<std::int64_t> s1;
  s1.reserve(lms.size());
  for (auto i : lms) s1.push_back(name[static_cast<std::size_t>(i)]);
  std::vector<std::int64_t> sa1(lms.size());
  if (names + 1 == static_cast<std::int64_t>(lms.size())) {
    for (std::size_t k = 0; k < lms.size(); ++k)
      sa1[static_cast<std::size_t>(s1[k])] = static_cast<std::int64_t>(k);
  } else {
    sais_core(s1.data(), sa1.data(), static_cast<std::int64_t>(s1.size()),
              names + 1);
  }

  std::vector<std::int64_t> order(lms.size());
  for (std::size_t k = 0; k < lms.size(); ++k)
    order[k] = lms[static_cast<std::size_t>(sa1[k])];
  induce(order);
}

} // namespace

std::vector<pos_t> suffix_array_sais(const std::vector<letter_t>& s) {
  const std::size_t n = s.size();
  std::vector<std::int64_t> buf(n + 1);
  for (std::size_t i = 0; i < n; ++i) buf[i] = static_cast<std::int64_t>(s[i]) + 1;
  buf[n] = 0;
  std::int64_t sigma = 1;
  for (std::size_t i = 0; i < n; ++i) sigma = std::max(sigma, buf[i] + 1);
  std::vector<std::int64_t> sa(n + 1);
  sais_core(buf.data(), sa.data(), static_cast<std::int64_t>(n) + 1, sigma);
  std::vector<pos_t> out(n);
  for (std::size_t k = 1; k <= n; ++k) out[k - 1] = sa[k];
  return out;
}

std::vector<pos_t> suffix_array_doubling(const std::vector<letter_t>& s) {
  const pos_t n = static_cast<pos_t>(s.size());
  std::vector<pos_t> sa(static_cast<std::size_t>(n)), rank(static_cast<std::size_t>(n)),
      tmp(static_cast<std::size_t>(n));
  std::iota(sa.begin(), sa.end(), 0);
  for (pos_t i = 0; i < n; ++i) rank[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(i)];
  for (pos_t k = 1;; k *= 2) {
    auto key = [&](pos_t i) {
      return std::pair<pos_t, pos_t>{rank[static_cast<std::size_t>(i)],
                                     i + k < n ? rank[static_cast<std::size_t>(i + k)] + 1 : 0};
    };
    std::sort(sa.begin(), sa.end(),
              [&](pos_t a, pos_t b) { return key(a) < key(b); });
    tmp[static_cast<std::size_t>(sa[0])] = 0;
    for (pos_t r = 1; r < n; ++r)
      tmp[static_cast<std::size_t>(sa[static_cast<std::size_t>(r)])] =
          tmp[static_cast<std::size_t>(sa[static_cast<std::size_t>(r - 1)])] +
          (key(sa[static_cast<std::size_t>(r - 1)]) < key(sa[static_cast<std::size_t>(r)]) ? 1 : 0);
    rank = tmp;
    if (rank[static_cast<std::size_t>(sa[static_cast<std::size_t>(n - 1)])] == n - 1) break;
  }
  return sa;
}

// ---------------------------------------------------------------------------
// Rmq
// ---------------------------------------------------------------------------

std::size_t Rmq::better(std::size_t a, std::size_t b) const {
  const pos_t va = (*values_)[a], vb = (*values_)[b];
  if (kind_ == Kind::Min) return vb < va ? b : a;
  return vb > va ? b : a;
}

void Rmq::build(const std::vector<pos_t>* values, Kind kind, Layout layout) {
  values_ = values;
  kind_ = kind;
  table_.clear();
  block_arg_.clear();
  const std::size_t n = values->size();
  blocked_ = layout == Layout::Blocked ||
             (layout == Layout::Auto && n > (std::size_t{1} << 18));

  std::vector<std::uint32_t> base;
  if (!blocked_) {
    base.resize(n);
    std::iota(base.begin(), base.end(), 0u);
  } else {
    const std::size_t nb = (n + kBlock - 1) / kBlock;
    block_arg_.resize(nb);
    for (std::size_t b = 0; b < nb; ++b) {
      std::size_t best = b * kBlock;
      const std::size_t hi = std::min(n - 1, (b + 1) * kBlock - 1);
      for (std::size_t i = best + 1; i <= hi; ++i) best = better(best, i);
      block_arg_[b] = static_cast<std::uint32_t>(best);
    }
    base = block_arg_;
  }

  table_.push_back(std::move(base));
  for (std::size_t len = 2; len <= table_[0].size(); len *= 2) {
    const auto& prev = table_.back();
    std::vector<std::uint32_t> level(prev.size() - len / 2);
    for (std::size_t i = 0; i < level.size(); ++i)
      level[i] = static_cast<std::uint32_t>(better(prev[i], prev[i + len / 2]));
    table_.push_back(std::move(level));
  }
}

std::size_t Rmq::query(std::size_t lo, std::size_t hi) const {
  stats::bump();
  if (!blocked_) {
    if (lo == hi) return lo;
    const unsigned k = std::bit_width(hi - lo + 1) - 1;
    return better(table_[k][lo], table_[k][hi - (std::size_t{1} << k) + 1]);
  }
  const std::size_t blo = lo / kBlock, bhi = hi / kBlock;
  auto scan = [&](std::size_t l, std::size_t h) {
    std::size_t best = l;
    for (std::size_t i = l + 1; i <= h; ++i) best = better(best, i);
    return best;
  };
  if (blo == bhi) return scan(lo, hi);
  std::size_t best = scan(lo, (blo + 1) * kBlock - 1);
  if (blo + 1 <= bhi - 1) {
    const std::size_t lb = blo + 1, rb = bhi - 1;
    if (lb == rb) {
      best = better(best, block_arg_[lb]);
    } else {
      const unsigned k = std::bit_width(rb - lb + 1) - 1;
      best = better(best, better(table_[k][lb],
                                 table_[k][rb - (std::size_t{1} << k) + 1]));
    }
  }
  return better(best, scan(bhi * kBlock, hi));
}

// ---------------------------------------------------------------------------
// Esa construction
// ---------------------------------------------------------------------------

namespace {

// 1-based LCP array: lcp[r] = |common prefix of suffixes SA[r-1], SA[r]|.
std::vector<pos_t> kasai(const std::vector<letter_t>& s,
                         const std::vector<pos_t>& sa,
                         const std::vector<pos_t>& isa) {
  const pos_t n = static_cast<pos_t>(s.size());
  std::vector<pos_t> lcp(static_cast<std::size_t>(n) + 1, 0);
  pos_t h = 0;
  for (pos_t i = 1; i <= n; ++i) {
    const pos_t r = isa[static_cast<std::size_t>(i)];
    if (r > 1) {
      const pos_t j = sa[static_cast<std::size_t>(r - 1)];
      while (i + h <= n && j + h <= n &&
             s[static_cast<std::size_t>(i + h - 1)] == s[static_cast<std::size_t>(j + h - 1)])
        ++h;
      lcp[static_cast<std::size_t>(r)] = h;
      if (h > 0) --h;
    } else {
      h = 0;
    }
  }
  return lcp;
}

std::vector<pos_t> to_one_based(const std::vector<pos_t>& sa0) {
  std::vector<pos_t> sa(sa0.size() + 1, 0);
  for (std::size_t k = 0; k < sa0.size(); ++k) sa[k + 1] = sa0[k] + 1;
  return sa;
}

std::vector<pos_t> invert(const std::vector<pos_t>& sa) {
  std::vector<pos_t> isa(sa.size(), 0);
  for (std::size_t r = 1; r < sa.size(); ++r)
    isa[static_cast<std::size_t>(sa[r])] = static_cast<pos_t>(r);
  return isa;
}

} // namespace

Esa& Esa::operator=(Esa&& o) noexcept {
  text_ = o.text_;
  rev_ = std::move(o.rev_);
  sa_ = std::move(o.sa_);
  isa_ = std::move(o.isa_);
  lcp_ = std::move(o.lcp_);
  rsa_ = std::move(o.rsa_);
  risa_ = std::move(o.risa_);
  rlcp_ = std::move(o.rlcp_);
  lcp_min_ = std::move(o.lcp_min_);
  rlcp_min_ = std::move(o.rlcp_min_);
  isa_min_ = std::move(o.isa_min_);
  isa_max_ = std::move(o.isa_max_);
  lcp_min_.rebind(&lcp_);
  rlcp_min_.rebind(&rlcp_);
  isa_min_.rebind(&isa_);
  isa_max_.rebind(&isa_);
  return *this;
}

void Esa::finish(Rmq::Layout layout) {
  lcp_min_.build(&lcp_, Rmq::Kind::Min, layout);
  rlcp_min_.build(&rlcp_, Rmq::Kind::Min, layout);
  isa_min_.build(&isa_, Rmq::Kind::Min, layout);
  isa_max_.build(&isa_, Rmq::Kind::Max, layout);
}

Esa Esa::build(const Text& t, Rmq::Layout layout) {
  Esa e;
  e.text_ = &t;
  e.rev_ = t;
  std::reverse(e.rev_.symbols.begin(), e.rev_.symbols.end());

  e.sa_ = to_one_based(suffix_array_sais(t.symbols));
  e.isa_ = invert(e.sa_);
  e.lcp_ = kasai(t.symbols, e.sa_, e.isa_);

  e.rsa_ = to_one_based(suffix_array_sais(e.rev_.symbols));
  e.risa_ = invert(e.rsa_);
  e.rlcp_ = kasai(e.rev_.symbols, e.rsa_, e.risa_);

  e.finish(layout);
  return e;
}

Esa Esa::adopt(const Text& t, std::vector<pos_t> sa, std::vector<pos_t> lcp,
               std::vector<pos_t> rsa, std::vector<pos_t> rlcp,
               Rmq::Layout layout) {
  Esa e;
  e.text_ = &t;
  e.rev_ = t;
  std::reverse(e.rev_.symbols.begin(), e.rev_.symbols.end());
  e.sa_ = std::move(sa);
  e.lcp_ = std::move(lcp);
  e.rsa_ = std::move(rsa);
  e.rlcp_ = std::move(rlcp);
  e.isa_ = invert(e.sa_);
  e.risa_ = invert(e.rsa_);
  e.finish(layout);
  return e;
}

// ---------------------------------------------------------------------------
// Fragment primitives
// ---------------------------------------------------------------------------

pos_t Esa::suffix_lcp(pos_t i, pos_t j) const {
  if (i < 1 || j < 1 || i > n() || j > n()) throw InvalidRange("suffix_lcp");
  if (i == j) return n() - i + 1;
  pos_t ri = isa_[static_cast<std::size_t>(i)], rj = isa_[static_cast<std::size_t>(j)];
  if (ri > rj) std::swap(ri, rj);
  const std::size_t arg = lcp_min_.query(static_cast<std::size_t>(ri) + 1,
                                         static_cast<std::size_t>(rj));
  return lcp_[arg];
}

pos_t Esa::prefix_lcs(pos_t i, pos_t j) const {
  if (i < 1 || j < 1 || i > n() || j > n()) throw InvalidRange("prefix_lcs");
  if (i == j) return i;
  pos_t ri = risa_[static_cast<std::size_t>(n() + 1 - i)];
  pos_t rj = risa_[static_cast<std::size_t>(n() + 1 - j)];
  if (ri > rj) std::swap(ri, rj);
  const std::size_t arg = rlcp_min_.query(static_cast<std::size_t>(ri) + 1,
                                          static_cast<std::size_t>(rj));
  return rlcp_[arg];
}

pos_t Esa::lcp(Fragment x, Fragment y) const {
  return std::min({suffix_lcp(x.start, y.start), x.len(), y.len()});
}

pos_t Esa::lcs(Fragment x, Fragment y) const {
  return std::min({prefix_lcs(x.end, y.end), x.len(), y.len()});
}

Ordering Esa::compare(Fragment x, Fragment y) const {
  const pos_t l = lcp(x, y);
  if (l == x.len() && l == y.len()) return Ordering::Equal;
  if (l == x.len()) return Ordering::Less;
  if (l == y.len()) return Ordering::Greater;
  return at(x.start + l) < at(y.start + l) ? Ordering::Less : Ordering::Greater;
}

Esa::InfCmp Esa::lcp_infinite(Fragment x, Fragment y) const {
  const pos_t p = x.len();
  const pos_t d0 = lcp(x, y);
  if (d0 == y.len()) return {y.len(), Ordering::Greater};
  if (d0 < p)
    return {d0, at(x.start + d0) < at(y.start + d0) ? Ordering::Less
                                                    : Ordering::Greater};
  // x is a proper prefix of y; extend by the periodicity of y.
  const pos_t e = lcp(y, Fragment{y.start + p, y.end});
  const pos_t L = std::min(p + e, y.len());
  if (L == y.len()) return {y.len(), Ordering::Greater};
  // x^inf[L+1] == y[L-p+1] != y[L+1] by maximality of e.
  return {L, at(y.start + L - p) < at(y.start + L) ? Ordering::Less
                                                   : Ordering::Greater};
}

pos_t Esa::range_min_suffix(pos_t i, pos_t j) const {
  if (i < 1 || j > n() || i > j) throw InvalidRange("range_min_suffix");
  return static_cast<pos_t>(
      isa_min_.query(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
}

pos_t Esa::range_max_suffix(pos_t i, pos_t j) const {
  if (i < 1 || j > n() || i > j) throw InvalidRange("range_max_suffix");
  return static_cast<pos_t>(
      isa_max_.query(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
}

// ---------------------------------------------------------------------------
// k-fragment layer
// ---------------------------------------------------------------------------

namespace {

// Forward cursor over the letters of a k-fragment.
struct Cur {
  const KFragment* w;
  std::size_t idx = 0;
  pos_t off = 0;

  bool done() const { return idx == w->pieces.size(); }
  Fragment rest() const {
    const Fragment& p = w->pieces[idx];
    return Fragment{p.start + off, p.end};
  }
  void advance(pos_t d) {
    off += d;
    while (idx < w->pieces.size() && off == w->pieces[idx].len()) {
      ++idx;
      off = 0;
    }
  }
};

} // namespace

Ordering Esa::compare_k(const KFragment& x, const KFragment& y) const {
  Cur a{&x}, b{&y};
  while (!a.done() && !b.done()) {
    const Fragment fa = a.rest(), fb = b.rest();
    const pos_t l = lcp(fa, fb);
    if (l < fa.len() && l < fb.len())
      return at(fa.start + l) < at(fb.start + l) ? Ordering::Less
                                                 : Ordering::Greater;
    a.advance(l);
    b.advance(l);
  }
  if (a.done() && b.done()) {
    if (x.sentinel == y.sentinel) return Ordering::Equal;
    return x.sentinel ? Ordering::Greater : Ordering::Less;
  }
  if (a.done()) return x.sentinel ? Ordering::Greater : Ordering::Less;
  return y.sentinel ? Ordering::Less : Ordering::Greater;
}

pos_t Esa::lcp_k(const KFragment& x, const KFragment& y) const {
  Cur a{&x}, b{&y};
  pos_t total = 0;
  while (!a.done() && !b.done()) {
    const Fragment fa = a.rest(), fb = b.rest();
    const pos_t l = lcp(fa, fb);
    total += l;
    if (l < fa.len() && l < fb.len()) break;
    a.advance(l);
    b.advance(l);
  }
  return total;
}

pos_t Esa::lcs_k(const KFragment& x, const KFragment& y) const {
  // Letter content only; sentinels are ignored here.
  pos_t ai = static_cast<pos_t>(x.pieces.size()) - 1, aoff = 0;
  pos_t bi = static_cast<pos_t>(y.pieces.size()) - 1, boff = 0;
  pos_t total = 0;
  while (ai >= 0 && bi >= 0) {
    const Fragment& pa = x.pieces[static_cast<std::size_t>(ai)];
    const Fragment& pb = y.pieces[static_cast<std::size_t>(bi)];
    const Fragment fa{pa.start, pa.end - aoff};
    const Fragment fb{pb.start, pb.end - boff};
    const pos_t l = lcs(fa, fb);
    total += l;
    if (l < fa.len() && l < fb.len()) break;
    aoff += l;
    if (aoff == pa.len()) {
      --ai;
      aoff = 0;
    }
    boff += l;
    if (boff == pb.len()) {
      --bi;
      boff = 0;
    }
  }
  return total;
}

Esa::InfCmp Esa::lcp_infinite_phase(Fragment x, pos_t phase, Fragment y) const {
  // Compare x^inf starting at offset `phase` of its period against y.
  const Fragment head{x.start + phase, x.end};
  const pos_t l1 = lcp(head, y);
  if (l1 == y.len()) return {y.len(), Ordering::Greater};
  if (l1 < head.len())
    return {l1, at(head.start + l1) < at(y.start + l1) ? Ordering::Less
                                                       : Ordering::Greater};
  // The rest of the current period matched; continue from phase zero.
  const InfCmp r = lcp_infinite(x, Fragment{y.start + l1, y.end});
  return {l1 + r.lcp, r.cmp};
}

Esa::InfCmp Esa::lcp_infinite_k(Fragment x, const KFragment& y) const {
  const pos_t p = x.len();
  pos_t phase = 0, total = 0;
  for (const Fragment& f : y.pieces) {
    const InfCmp r = lcp_infinite_phase(x, phase, f);
    if (r.lcp < f.len()) return {total + r.lcp, r.cmp};
    total += f.len();
    phase = (phase + f.len()) % p;
  }
  // y's letters are a prefix of x^inf.
  return {total, y.sentinel ? Ordering::Less : Ordering::Greater};
}

Ordering Esa::compare_with_sentinel(const KFragment& u, bool sentinel_on_u,
                                    const KFragment& v) const {
  KFragment a = u, b = v;
  a.sentinel = sentinel_on_u;
  b.sentinel = !sentinel_on_u;
  return compare_k(a, b);
}

} // namespace lyx

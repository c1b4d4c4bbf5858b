#include "lyx/genquery.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace lyx {

namespace {

// Letter of the k-fragment value at 1-based offset t.
letter_t letter_at(const Esa& e, const KFragment& w, pos_t t) {
  for (const auto& p : w.pieces) {
    if (t <= p.len()) return e.at(p.start + t - 1);
    t -= p.len();
  }
  throw InvalidRange("letter_at: offset beyond the k-fragment");
}

// Suffix of the k-fragment value of the given total length.
KFragment suffix_of(const KFragment& v, pos_t len) {
  KFragment out;
  out.sentinel = v.sentinel;
  pos_t skip = v.len() - len;
  for (const auto& p : v.pieces) {
    if (skip >= p.len()) {
      skip -= p.len();
      continue;
    }
    out.pieces.push_back(Fragment{p.start + skip, p.end});
    skip = 0;
  }
  return out;
}

// s·w where s is the length-len suffix of T[..r].
KFragment prepend_suffix(pos_t r, pos_t len, const KFragment& w) {
  KFragment out;
  out.sentinel = w.sentinel;
  if (len > 0) out.pieces.push_back(Fragment{r - len + 1, r});
  out.pieces.insert(out.pieces.end(), w.pieces.begin(), w.pieces.end());
  return out;
}

} // namespace

NearestSuffixIndex NearestSuffixIndex::build(const Esa& e,
                                             const std::vector<pos_t>& positions) {
  NearestSuffixIndex out;
  out.e_ = &e;
  std::vector<std::pair<std::uint64_t, std::size_t>> pairs;
  pairs.reserve(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i)
    pairs.emplace_back(static_cast<std::uint64_t>(e.isa(positions[i])), i);
  std::sort(pairs.begin(), pairs.end());
  std::vector<std::uint64_t> ranks;
  for (const auto& [rk, idx] : pairs) {
    if (!ranks.empty() && ranks.back() == rk) continue;
    ranks.push_back(rk);
    out.owner_.push_back(idx);
  }
  out.ranks_ = SmallSet(std::move(ranks));
  return out;
}

std::optional<std::size_t> NearestSuffixIndex::nearest(pos_t p) const {
  if (ranks_.empty()) return std::nullopt;
  const auto q = static_cast<std::uint64_t>(e_->isa(p));
  const std::size_t r = ranks_.rank(q);
  if (r < ranks_.size() && ranks_.elements()[r] == q) return r; // p itself
  std::optional<std::size_t> best;
  pos_t best_lcp = -1;
  if (r > 0) {
    best = r - 1;
    best_lcp = e_->suffix_lcp(p, position(r - 1));
  }
  if (r < ranks_.size()) {
    const pos_t lc = e_->suffix_lcp(p, position(r));
    if (lc > best_lcp) best = r; // ties stay with the predecessor
  }
  return best;
}

int FragmentRanker::build_group(std::size_t lo, std::size_t hi,
                                pos_t parent_depth, int parent,
                                const std::vector<pos_t>& lcps) {
  pos_t g = frags_[lo].len();
  for (std::size_t i = lo + 1; i < hi; ++i) g = std::min(g, lcps[i]);
  (void)parent_depth; // g > parent_depth by the partition invariant

  const int id = static_cast<int>(nodes_.size());
  nodes_.emplace_back();
  nodes_[id].depth = g;
  nodes_[id].parent = parent;
  std::size_t start = lo;
  if (frags_[lo].len() == g) {
    nodes_[id].terminal = static_cast<int>(lo);
    ++start;
  }

  std::vector<std::uint64_t> letters;
  std::vector<int> children;
  std::size_t i = lo + (start - lo);
  while (i < hi) {
    const letter_t c = e_->at(frags_[i].start + g);
    std::size_t j = i + 1;
    while (j < hi && e_->at(frags_[j].start + g) == c) ++j;
    const int child = build_group(i, j, g, id, lcps);
    letters.push_back(c);
    children.push_back(child);
    i = j;
  }
  nodes_[id].child_letters = SmallSet(std::move(letters));
  nodes_[id].children = std::move(children);
  finish_node(id, lo, hi);
  return id;
}

void FragmentRanker::finish_node(int id, std::size_t lo, std::size_t hi) {
  Node& nd = nodes_[id];
  nd.first_term = lo;
  nd.last_term = hi - 1;
  const pos_t n = e_->n();
  std::vector<pos_t> positions;
  for (std::size_t i = lo; i < hi; ++i) {
    const pos_t p = frags_[i].start + nd.depth;
    if (p > n) continue;
    positions.push_back(p);
    nd.nsi_term.push_back(static_cast<std::uint32_t>(i));
  }
  nd.nsi = NearestSuffixIndex::build(*e_, positions);
}

FragmentRanker FragmentRanker::build(const Esa& e, std::vector<Fragment> a) {
  FragmentRanker out;
  out.e_ = &e;
  std::sort(a.begin(), a.end(), [&](Fragment x, Fragment y) {
    return e.compare(x, y) == Ordering::Less;
  });
  a.erase(std::unique(a.begin(), a.end(),
                      [&](Fragment x, Fragment y) {
                        return e.compare(x, y) == Ordering::Equal;
                      }),
          a.end());
  out.frags_ = std::move(a);
  const std::size_t m = out.frags_.size();

  out.nodes_.emplace_back(); // root: depth 0
  if (m == 0) return out;
  std::vector<pos_t> lcps(m, 0);
  for (std::size_t i = 1; i < m; ++i)
    lcps[i] = e.lcp(out.frags_[i - 1], out.frags_[i]);

  std::vector<std::uint64_t> letters;
  std::vector<int> children;
  std::size_t i = 0;
  while (i < m) {
    const letter_t c = e.at(out.frags_[i].start);
    std::size_t j = i + 1;
    while (j < m && e.at(out.frags_[j].start) == c) ++j;
    const int child = out.build_group(i, j, 0, 0, lcps);
    letters.push_back(c);
    children.push_back(child);
    i = j;
  }
  out.nodes_[0].child_letters = SmallSet(std::move(letters));
  out.nodes_[0].children = std::move(children);
  out.finish_node(0, 0, m);

  out.anc_.resize(m);
  for (std::size_t nid = 0; nid < out.nodes_.size(); ++nid) {
    const int term = out.nodes_[nid].terminal;
    if (term < 0) continue;
    auto& chain = out.anc_[static_cast<std::size_t>(term)];
    for (int cur = static_cast<int>(nid); cur >= 0;
         cur = out.nodes_[static_cast<std::size_t>(cur)].parent)
      chain.emplace_back(out.nodes_[static_cast<std::size_t>(cur)].depth, cur);
    std::reverse(chain.begin(), chain.end());
  }
  return out;
}

std::size_t FragmentRanker::stored_words() const {
  std::size_t total = frags_.size() * 2;
  for (const auto& nd : nodes_)
    total += 8 + nd.children.size() * 2 + nd.nsi_term.size() * 2;
  for (const auto& chain : anc_) total += chain.size() * 2;
  return total;
}

std::size_t FragmentRanker::rank(const KFragment& w) const {
  if (frags_.empty()) return 0;

  int node = 0;        // explicit node when edge_child < 0
  int edge_child = -1; // implicit position on the edge into this node
  pos_t matched = 0;
  bool done = false;

  for (const auto& piece : w.pieces) {
    if (done) break;
    pos_t l = piece.start;
    const pos_t r = piece.end;
    while (l <= r && !done) {
      if (edge_child >= 0) {
        const Node& child = nodes_[static_cast<std::size_t>(edge_child)];
        const pos_t fs = frags_[child.first_term].start;
        const Fragment label{fs + matched, fs + child.depth - 1};
        const pos_t lc = e_->lcp(label, Fragment{l, r});
        matched += lc;
        l += lc;
        if (matched == child.depth) {
          node = edge_child;
          edge_child = -1;
        } else if (l <= r) {
          done = true; // mismatch in the middle of the edge
        }
        continue;
      }

      const Node& nd = nodes_[static_cast<std::size_t>(node)];
      const auto slot = nd.nsi.nearest(l);
      if (!slot) {
        done = true;
        break;
      }
      const std::size_t term = nd.nsi_term[nd.nsi.owner(*slot)];
      pos_t ext = e_->suffix_lcp(l, nd.nsi.position(*slot));
      ext = std::min(ext, r - l + 1);
      if (ext == 0) {
        done = true;
        break;
      }
      const pos_t cap = nd.depth + ext;

      // Deepest explicit ancestor of the matched element at depth <= cap.
      const auto& chain = anc_[term];
      stats::bump();
      auto it = std::upper_bound(
          chain.begin(), chain.end(), cap,
          [](pos_t d, const std::pair<pos_t, int>& p) { return d < p.first; });
      --it;
      const pos_t dp = it->first;
      const int anc_node = it->second;

      if (dp == cap) {
        // Landed exactly on an explicit node; the sampled suffix realized
        // the maximal extension, so leftover piece letters are a mismatch.
        l += ext;
        matched = cap;
        node = anc_node;
        edge_child = -1;
        if (l <= r) done = true;
        continue;
      }

      // Descend one edge from the ancestor; the sampled text match may
      // overshoot the sampled element's fragment, so the edge (or its
      // absence) is re-checked against the trie itself.
      const Node& from = nodes_[static_cast<std::size_t>(anc_node)];
      const letter_t c2 = e_->at(l + (dp - nd.depth));
      const std::size_t cr = from.child_letters.rank(c2);
      if (cr >= from.child_letters.size() ||
          from.child_letters.elements()[cr] != c2) {
        l += dp - nd.depth;
        matched = dp;
        node = anc_node;
        edge_child = -1;
        done = true;
        continue;
      }
      const int x = from.children[cr];
      const Node& xn = nodes_[static_cast<std::size_t>(x)];
      const pos_t fs = frags_[xn.first_term].start;
      const Fragment label{fs + dp, fs + xn.depth - 1};
      const pos_t ml = e_->lcp(label, Fragment{l + (dp - nd.depth), r});
      l += (dp - nd.depth) + ml;
      matched = dp + ml;
      if (matched == xn.depth) {
        // Reached the explicit child with piece letters possibly left;
        // the walk resumes from there (the sampled element was shorter
        // than the text match).
        node = x;
        edge_child = -1;
      } else {
        edge_child = x;
        if (l <= r) done = true; // mismatch in the middle of the edge
      }
    }
  }

  const pos_t total = w.len();
  if (matched == total && !w.sentinel) {
    // w is a prefix of everything below the locus.
    if (edge_child >= 0) return nodes_[static_cast<std::size_t>(edge_child)].first_term;
    return nodes_[static_cast<std::size_t>(node)].first_term;
  }

  const bool c_sent = matched == total; // then w.sentinel is set
  const letter_t c = c_sent ? letter_t{0} : letter_at(*e_, w, matched + 1);

  if (edge_child >= 0) {
    const Node& child = nodes_[static_cast<std::size_t>(edge_child)];
    const letter_t edge_letter = e_->at(frags_[child.first_term].start + matched);
    if (c_sent || edge_letter < c) return child.last_term + 1;
    return child.first_term;
  }
  const Node& nd = nodes_[static_cast<std::size_t>(node)];
  if (c_sent) return nd.last_term + 1;
  const std::size_t t = nd.child_letters.rank(c); // children with letter < c
  if (t == 0) return nd.first_term + (nd.terminal >= 0 ? 1 : 0);
  const int child = nd.children[t - 1];
  return nodes_[static_cast<std::size_t>(child)].last_term + 1;
}

GenExtender GenExtender::build(const Esa& e, Fragment v) {
  GenExtender out;
  out.e_ = &e;
  out.sig_ = significant_suffixes(e, v);
  const auto& lens = out.sig_.lens;
  std::vector<Fragment> runs;
  for (std::size_t i = 0; i + 1 < lens.size(); ++i)
    runs.push_back(Fragment{v.end - (lens[i] - lens[i + 1]) + 1, v.end});
  out.ranker_ = FragmentRanker::build(e, std::move(runs));
  return out;
}

pos_t GenExtender::query(const KFragment& w) const {
  const pos_t r = sig_.v.end;
  const std::size_t m = sig_.lens.size() - 1;
  const std::size_t rp = ranker_.rank(w);

  // rank over the finite runs x_i^{p_i} overestimates the infinite-power
  // rank by at most one; compare the two remaining candidates directly.
  pos_t best_len = sig_.lens[m - rp];
  if (rp >= 1) {
    const pos_t alt = sig_.lens[m - (rp - 1)];
    const KFragment a = prepend_suffix(r, best_len, w);
    const KFragment b = prepend_suffix(r, alt, w);
    if (e_->compare_k(b, a) == Ordering::Less) best_len = alt;
  }
  return r - best_len + 1;
}

GenBlockIndex::GenBlockIndex(const Esa& e, pos_t tau) : e_(&e), tau_(tau) {
  const pos_t n = e.n();
  const pos_t nblocks = (n - 1) / tau + 1;
  block_rep_.resize(static_cast<std::size_t>(nblocks));
  block_nsi_.resize(static_cast<std::size_t>(nblocks));
  block_chars_.resize(static_cast<std::size_t>(nblocks));
  char_sample_.resize(static_cast<std::size_t>(nblocks));

  std::unordered_map<std::string, std::uint32_t> ids;
  for (pos_t i = 0; i < nblocks; ++i) {
    const pos_t bstart = i * tau + 1;
    const pos_t bend = std::min(n, (i + 3) * tau);
    const pos_t blen = bend - bstart + 1;
    std::vector<letter_t> letters;
    for (pos_t p = bstart; p <= bend; ++p) letters.push_back(e.at(p));

    const auto [it, fresh] =
        ids.emplace(oid_key(letters), static_cast<std::uint32_t>(reps_.size()));
    if (fresh) {
      // Rank-compress the block letters: order-isomorphic, and keeps the
      // mini suffix array's alphabet proportional to the block length.
      std::vector<letter_t> distinct(letters);
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()),
                     distinct.end());
      auto rep = std::make_unique<Rep>();
      rep->blen = blen;
      rep->text.symbols.reserve(letters.size());
      for (const letter_t c : letters)
        rep->text.symbols.push_back(static_cast<letter_t>(
            std::lower_bound(distinct.begin(), distinct.end(), c) -
            distinct.begin()));
      rep->text.n = blen;
      rep->text.sigma = distinct.size();
      rep->esa = Esa::build(rep->text);
      rep->ext.resize(static_cast<std::size_t>(tau * tau));
      reps_.push_back(std::move(rep));
    }
    block_rep_[static_cast<std::size_t>(i)] = it->second;

    const pos_t rend = std::min(n, (i + 2) * tau);
    std::vector<pos_t> rpos;
    for (pos_t p = bstart; p <= rend; ++p) rpos.push_back(p);
    block_nsi_[static_cast<std::size_t>(i)] =
        NearestSuffixIndex::build(e, rpos);

    std::vector<std::uint64_t> chars;
    std::vector<pos_t> samples;
    std::vector<std::pair<letter_t, pos_t>> occ;
    for (pos_t p = 1; p <= blen; ++p)
      occ.emplace_back(letters[static_cast<std::size_t>(p - 1)], p);
    std::sort(occ.begin(), occ.end());
    for (const auto& [c, p] : occ) {
      if (!chars.empty() && chars.back() == c) continue;
      chars.push_back(c);
      samples.push_back(p);
    }
    block_chars_[static_cast<std::size_t>(i)] = SmallSet(std::move(chars));
    char_sample_[static_cast<std::size_t>(i)] = std::move(samples);
  }
}

const GenExtender& GenBlockIndex::rep_extender(const Rep& rep, pos_t a,
                                               pos_t b) const {
  auto& slot = const_cast<Rep&>(rep).ext[ext_index(a, b)];
  std::lock_guard<std::mutex> lk(build_mu_);
  if (!slot)
    slot = std::make_unique<GenExtender>(
        GenExtender::build(rep.esa, Fragment{a, b}));
  return *slot;
}

pos_t GenBlockIndex::aux_short(Fragment v, const KFragment& w) const {
  const pos_t i = (v.start - 1) / tau_;
  const pos_t bstart = i * tau_ + 1;
  const Rep& rep = *reps_[block_rep_[static_cast<std::size_t>(i)]];
  const pos_t va = v.start - bstart + 1;
  const pos_t vb = v.end - bstart + 1;
  const GenExtender& ext = rep_extender(rep, va, vb);

  // Rewrite w into block-local coordinates; on the first piece that cannot
  // be matched inside the block, truncate and append the next character
  // (or its in-block successor / the sentinel).
  KFragment local;
  bool exact = true;
  const auto& nsi = block_nsi_[static_cast<std::size_t>(i)];
  for (const auto& piece : w.pieces) {
    const auto slot = nsi.nearest(piece.start);
    const pos_t l = nsi.position(*slot);
    pos_t d = l == piece.start ? piece.len()
                               : std::min(e_->suffix_lcp(piece.start, l),
                                          piece.len());
    if (d == piece.len() && d <= tau_) {
      local.pieces.push_back(Fragment{l - bstart + 1, l - bstart + d});
      continue;
    }
    const pos_t dcut = std::min(d, tau_);
    if (dcut > 0)
      local.pieces.push_back(Fragment{l - bstart + 1, l - bstart + dcut});
    const letter_t c = e_->at(piece.start + dcut);
    const auto& chars = block_chars_[static_cast<std::size_t>(i)];
    const auto su = chars.succ(c); // c itself when present
    if (su) {
      const std::size_t ci = chars.rank(*su);
      const pos_t sample = char_sample_[static_cast<std::size_t>(i)][ci];
      local.pieces.push_back(Fragment{sample, sample});
    } else {
      local.sentinel = true; // successor of c in T_i$ is $
    }
    exact = false;
    break;
  }
  if (exact) local.sentinel = w.sentinel;

  const pos_t s_loc = ext.query(local);
  const pos_t slen = vb - s_loc + 1;
  if (exact) return v.end - slen + 1;

  // The rewritten context pins the answer to within one ladder step;
  // compare the neighbors against the true w.
  const auto& lens = ext.ladder().lens;
  std::size_t idx = 0;
  while (lens[idx] != slen) ++idx;
  pos_t best = -1;
  for (std::size_t cand = idx == 0 ? 0 : idx - 1;
       cand <= std::min(idx + 1, lens.size() - 1); ++cand) {
    const pos_t clen = lens[cand];
    if (best < 0) {
      best = clen;
      continue;
    }
    const KFragment a = prepend_suffix(v.end, best, w);
    const KFragment b = prepend_suffix(v.end, clen, w);
    if (e_->compare_k(b, a) == Ordering::Less) best = clen;
  }
  return v.end - best + 1;
}

GenMinSufIndex::GenMinSufIndex(const Esa& e, TierProfile prof)
    : e_(&e), prof_(prof) {
  const pos_t n = e.n();
  if (n > prof_.short_cutoff) {
    const int qmax = std::bit_width(static_cast<std::uint64_t>(n)) - 1;
    slots_.resize(static_cast<std::size_t>(qmax) + 1);
    for (int q = 0; q <= qmax; ++q) {
      const pos_t grid = prof_.f(pos_t{1} << q);
      slots_[static_cast<std::size_t>(q)].resize(
          static_cast<std::size_t>(n / grid) + 1);
    }
  }
  if (prof_.tau > 0) blocks_.emplace(e, prof_.tau);
}

const GenExtender& GenMinSufIndex::extender_for(Fragment vp) const {
  const auto q = static_cast<std::size_t>(
      std::bit_width(static_cast<std::uint64_t>(vp.len())) - 1);
  const pos_t grid = prof_.f(vp.len());
  if (q >= slots_.size() || vp.end % grid != 0 || (pos_t{1} << q) != vp.len())
    throw InvalidRange("extender: fragment is not on the distinguished grid");
  auto& slot = slots_[q][static_cast<std::size_t>(vp.end / grid)];
  std::lock_guard<std::mutex> lk(build_mu_);
  if (!slot) slot = std::make_unique<GenExtender>(GenExtender::build(*e_, vp));
  return *slot;
}

pos_t GenMinSufIndex::aux_minsuf(Fragment v, const KFragment& w) const {
  if (blocks_ && v.len() <= prof_.tau) return blocks_->aux_short(v, w);
  if (v.len() <= prof_.short_cutoff || v.len() <= prof_.f(v.len())) {
    const SigSuffixes sig = significant_suffixes(*e_, v);
    return v.end - minsuf_with_context(*e_, sig, w) + 1;
  }

  const Decomposition d = decompose(prof_, v);
  const pos_t r = v.end;
  const auto better = [&](pos_t a, pos_t b) {
    const KFragment ka = prepend_suffix(r, r - a + 1, w);
    const KFragment kb = prepend_suffix(r, r - b + 1, w);
    return e_->compare_k(kb, ka) == Ordering::Less ? b : a;
  };

  pos_t best = aux_minsuf(d.vpp, w);
  KFragment w2 = w;
  w2.pieces.insert(w2.pieces.begin(), d.vpp);
  best = better(best, extender_for(d.vp).query(w2));
  if (d.has_u) best = better(best, max_suf_rev(*e_, d.u, d.vp));
  return best;
}

std::pair<pos_t, KFragment> GenMinSufIndex::gen_minsuf(const KFragment& v) const {
  if (v.pieces.empty()) throw InvalidArguments("gen_minsuf: no pieces");
  for (const auto& p : v.pieces)
    if (p.len() < 1) throw InvalidArguments("gen_minsuf: empty piece");
  stats::bump_gen();

  const std::size_t k = v.pieces.size();
  std::vector<pos_t> tail(k + 1, 0); // length of v_{i+1}..v_k
  for (std::size_t i = k; i-- > 0;)
    tail[i] = tail[i + 1] + v.pieces[i].len();

  const auto better = [&](pos_t a, pos_t b) {
    if (a == b) return a;
    const KFragment ka = suffix_of(v, a);
    const KFragment kb = suffix_of(v, b);
    return e_->compare_k(kb, ka) == Ordering::Less ? b : a;
  };

  pos_t best = -1;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    KFragment w;
    w.sentinel = v.sentinel;
    w.pieces.assign(v.pieces.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                    v.pieces.end());
    const pos_t st = aux_minsuf(v.pieces[i], w);
    const pos_t cand = (v.pieces[i].end - st + 1) + tail[i + 1];
    best = best < 0 ? cand : better(best, cand);
  }
  const Fragment vk = v.pieces[k - 1];
  pos_t cand;
  if (vk.len() == 1) {
    cand = 1;
  } else {
    const KFragment w{{Fragment{vk.end, vk.end}}, v.sentinel};
    const pos_t st = aux_minsuf(Fragment{vk.start, vk.end - 1}, w);
    cand = (vk.end - 1 - st + 1) + 1;
  }
  best = best < 0 ? cand : better(best, cand);
  return {best, suffix_of(v, best)};
}

} // namespace lyx

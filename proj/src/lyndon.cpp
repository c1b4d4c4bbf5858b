#include "lyx/lyndon.hpp"

#include <algorithm>
#include <deque>

namespace lyx {

std::vector<LyndonFactor> duval_factorize(const std::vector<letter_t>& s) {
  const pos_t n = static_cast<pos_t>(s.size());
  std::vector<LyndonFactor> out;
  pos_t i = 0;
  while (i < n) {
    pos_t j = i + 1, k = i;
    while (j < n && s[static_cast<std::size_t>(k)] <= s[static_cast<std::size_t>(j)]) {
      k = s[static_cast<std::size_t>(k)] < s[static_cast<std::size_t>(j)] ? i : k + 1;
      ++j;
    }
    const pos_t len = j - k;
    pos_t e = 0;
    while (i <= k) {
      ++e;
      i += len;
    }
    out.push_back(LyndonFactor{len, e});
  }
  return out;
}

pos_t max_suf_rev(const Esa& E, Fragment u, Fragment v) {
  if (u.end + 1 != v.start) throw InvalidArguments("max_suf_rev: v must follow u");
  if (u.len() > v.len()) throw InvalidArguments("max_suf_rev: requires |u| <= |v|");
  const pos_t l = u.start, r = u.end, r2 = v.end;

  // First candidate: the suffix of u (possibly empty) minimizing s·T[r+1..],
  // i.e. the ladder element selected by the full-text right context.  Since
  // |u| <= |v|, the best start for the context v$ is either this one or the
  // next-longer ladder element.
  const pos_t k0 = E.range_min_suffix(l, r);
  const pos_t k = E.isa(r + 1) < E.isa(k0) ? r + 1 : k0;
  if (k == l) return l;

  // Second candidate: extend the minimal suffix of T[l..k-1] by full copies
  // of its Lyndon root, which reconstructs the next-longer ladder element.
  const pos_t kp = E.range_min_suffix(l, k - 1);
  const pos_t len = k - kp;
  pos_t ext = 0;
  if (k - 1 - len >= l)
    ext = E.lcs(Fragment{l, k - 1}, Fragment{l, k - 1 - len});
  const pos_t startB = k - (ext / len + 1) * len;

  const KFragment a{{Fragment{startB, r2}}, true};
  const KFragment b{{Fragment{k, r2}}, true};
  return E.compare_k(a, b) == Ordering::Less ? startB : k;
}

SigSuffixes significant_suffixes(const Esa& E, Fragment v) {
  const pos_t r = v.end;

  // Suffix lengths visited by the halving recursion, smallest first.
  std::vector<pos_t> steps{v.len()};
  while (steps.back() > 1) steps.push_back((steps.back() + 1) / 2);
  std::reverse(steps.begin(), steps.end());

  std::deque<pos_t> lens{1, 0}; // ladder for the single-letter suffix
  for (std::size_t si = 1; si < steps.size(); ++si) {
    const pos_t mj = steps[si - 1], mj1 = steps[si];
    const Fragment uu{r - mj1 + 1, r - mj};
    const Fragment vv{r - mj + 1, r};
    const pos_t s_start = max_suf_rev(E, uu, vv);
    const pos_t s_len = r - s_start + 1;

    // The candidate enters the ladder iff it beats the current leader in
    // the reverse order; the leader minimizes s·$, so compare with trailing
    // sentinels on both sides.
    bool enters = true;
    if (lens.front() > 0) {
      const KFragment a{{Fragment{s_start, r}}, true};
      const KFragment b{{Fragment{r - lens.front() + 1, r}}, true};
      enters = E.compare_k(a, b) == Ordering::Less;
    }
    if (!enters) continue;

    // Drop former elements that are no longer significant: those that are
    // not prefixes of the new leader, plus a leader absorbed by periodicity.
    while (lens.front() > 0) {
      const pos_t fl = lens.front();
      if (E.lcp(Fragment{s_start, r}, Fragment{r - fl + 1, r}) == fl) break;
      lens.pop_front();
    }
    if (lens.front() > 0 && lens.size() >= 2) {
      const pos_t per = lens.front() - lens[1];
      if (per < s_len &&
          E.lcp(Fragment{s_start, r}, Fragment{s_start + per, r}) ==
              s_len - per)
        lens.pop_front();
    }
    lens.push_front(s_len);
  }

  SigSuffixes out;
  out.v = v;
  out.lens.assign(lens.begin(), lens.end());
  return out;
}

pos_t minsuf_with_context(const Esa& E, const SigSuffixes& sig,
                          const KFragment& w) {
  const pos_t r = sig.v.end;
  const std::size_t m = sig.lens.size() - 1; // number of nonempty suffixes
  std::size_t below = 0; // |{i : x_i^inf < w}|
  for (std::size_t i = 0; i < m; ++i) {
    // x_i^inf equals the infinite power of the length-(|s_i|-|s_{i+1}|)
    // suffix of v, which is the run x_i^{p_i}.
    const Fragment run{r - (sig.lens[i] - sig.lens[i + 1]) + 1, r};
    if (E.lcp_infinite_k(run, w).cmp == Ordering::Less) ++below;
  }
  return sig.lens[sig.lens.size() - 1 - below];
}

pos_t minsuf_log(const Esa& E, Fragment v) {
  if (v.len() == 1) return v.start;
  // MinSuf(v) equals MinSuf(v minus its last letter, last letter).
  const SigSuffixes sig = significant_suffixes(E, Fragment{v.start, v.end - 1});
  const KFragment w{{Fragment{v.end, v.end}}, false};
  return v.end - minsuf_with_context(E, sig, w);
}

} // namespace lyx

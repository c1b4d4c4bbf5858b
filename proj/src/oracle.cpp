#include "lyx/oracle.hpp"

#include <algorithm>

namespace lyx::oracle {

Ordering compare_sent(const std::vector<letter_t>& a, bool sent_a,
                      const std::vector<letter_t>& b, bool sent_b) {
  const std::size_t m = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < m; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? Ordering::Less : Ordering::Greater;
  if (a.size() == b.size()) {
    if (sent_a == sent_b) return Ordering::Equal;
    return sent_a ? Ordering::Greater : Ordering::Less;
  }
  if (a.size() < b.size()) return sent_a ? Ordering::Greater : Ordering::Less;
  return sent_b ? Ordering::Less : Ordering::Greater;
}

pos_t naive_minsuf(const std::vector<letter_t>& v) {
  const pos_t n = static_cast<pos_t>(v.size());
  pos_t best = n - 1; // start index, 0-based
  for (pos_t s = n - 2; s >= 0; --s) {
    const std::vector<letter_t> a(v.begin() + s, v.end());
    const std::vector<letter_t> b(v.begin() + best, v.end());
    if (compare_sent(a, false, b, false) == Ordering::Less) best = s;
  }
  return best + 1; // 1-based start within v
}

pos_t naive_rank(const std::vector<std::vector<letter_t>>& a,
                 const std::vector<letter_t>& w) {
  pos_t below = 0;
  for (const auto& x : a)
    if (compare_sent(x, false, w, false) == Ordering::Less) ++below;
  return below;
}

pos_t naive_minsuf_pair(const std::vector<letter_t>& v,
                        const std::vector<letter_t>& w, bool sentinel) {
  const pos_t n = static_cast<pos_t>(v.size());
  pos_t best_len = 0;
  std::vector<letter_t> best = w;
  for (pos_t len = 1; len <= n; ++len) {
    std::vector<letter_t> cur(v.end() - len, v.end());
    cur.insert(cur.end(), w.begin(), w.end());
    if (compare_sent(cur, sentinel, best, sentinel) == Ordering::Less) {
      best = std::move(cur);
      best_len = len;
    }
  }
  return best_len;
}

pos_t naive_period(const std::vector<letter_t>& v) {
  const pos_t n = static_cast<pos_t>(v.size());
  for (pos_t p = 1; p < n; ++p) {
    bool ok = true;
    for (pos_t i = 0; i + p < n; ++i)
      if (v[static_cast<std::size_t>(i)] != v[static_cast<std::size_t>(i + p)]) {
        ok = false;
        break;
      }
    if (ok) return p;
  }
  return n;
}

std::vector<pos_t> naive_significant(const std::vector<letter_t>& v) {
  std::vector<pos_t> lens;
  std::vector<letter_t> cur = v;
  while (!cur.empty()) {
    // $-minimal nonempty suffix of cur.
    const pos_t n = static_cast<pos_t>(cur.size());
    pos_t best = 0;
    for (pos_t s = 1; s < n; ++s) {
      const std::vector<letter_t> a(cur.begin() + s, cur.end());
      const std::vector<letter_t> b(cur.begin() + best, cur.end());
      if (compare_sent(a, true, b, true) == Ordering::Less) best = s;
    }
    std::vector<letter_t> sig(cur.begin() + best, cur.end());
    lens.push_back(static_cast<pos_t>(sig.size()));
    const pos_t per = naive_period(sig);
    const pos_t rem = static_cast<pos_t>(sig.size()) % per;
    cur.assign(sig.end() - rem, sig.end());
  }
  lens.push_back(0);
  return lens;
}

bool naive_is_lyndon(const std::vector<letter_t>& v) {
  for (std::size_t s = 1; s < v.size(); ++s) {
    const std::vector<letter_t> suf(v.begin() + static_cast<std::ptrdiff_t>(s),
                                    v.end());
    if (compare_sent(v, false, suf, false) != Ordering::Less) return false;
  }
  return !v.empty();
}

pos_t booth_min_rotation(const std::vector<letter_t>& v) {
  const pos_t n = static_cast<pos_t>(v.size());
  auto at = [&](pos_t i) { return v[static_cast<std::size_t>(i % n)]; };
  std::vector<pos_t> f(static_cast<std::size_t>(2 * n), -1);
  pos_t k = 0;
  for (pos_t j = 1; j < 2 * n; ++j) {
    const letter_t sj = at(j);
    pos_t i = f[static_cast<std::size_t>(j - k - 1)];
    while (i != -1 && sj != at(k + i + 1)) {
      if (sj < at(k + i + 1)) k = j - i - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && sj != at(k)) {
      if (sj < at(k)) k = j;
      f[static_cast<std::size_t>(j - k)] = -1;
    } else {
      f[static_cast<std::size_t>(j - k)] = i + 1;
    }
  }
  return k % n;
}

pos_t naive_max_rotation(const std::vector<letter_t>& v) {
  const pos_t n = static_cast<pos_t>(v.size());
  auto rot = [&](pos_t s) {
    std::vector<letter_t> out(v.begin() + s, v.end());
    out.insert(out.end(), v.begin(), v.begin() + s);
    return out;
  };
  pos_t best = 0;
  std::vector<letter_t> bw = v;
  for (pos_t s = 1; s < n; ++s) {
    auto cur = rot(s);
    if (compare_sent(cur, false, bw, false) == Ordering::Greater) {
      bw = std::move(cur);
      best = s;
    }
  }
  return best;
}

std::vector<LyndonFactor> naive_lyndon_factorize(const std::vector<letter_t>& v) {
  std::vector<LyndonFactor> out;
  std::size_t i = 0;
  while (i < v.size()) {
    std::size_t best = 1;
    for (std::size_t len = 1; i + len <= v.size(); ++len) {
      const std::vector<letter_t> pre(v.begin() + static_cast<std::ptrdiff_t>(i),
                                      v.begin() + static_cast<std::ptrdiff_t>(i + len));
      if (naive_is_lyndon(pre)) best = len;
    }
    const std::vector<letter_t> word(v.begin() + static_cast<std::ptrdiff_t>(i),
                                     v.begin() + static_cast<std::ptrdiff_t>(i + best));
    pos_t e = 0;
    while (i + best <= v.size() &&
           std::equal(word.begin(), word.end(),
                      v.begin() + static_cast<std::ptrdiff_t>(i))) {
      ++e;
      i += best;
    }
    out.push_back(LyndonFactor{static_cast<pos_t>(best), e});
  }
  return out;
}

} // namespace lyx::oracle

#include "lyx/applications.hpp"

#include <algorithm>
#include <random>

namespace lyx {

namespace {

constexpr std::uint64_t kP = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  const __uint128_t p = static_cast<__uint128_t>(a) * b;
  std::uint64_t r =
      static_cast<std::uint64_t>(p >> 61) + (static_cast<std::uint64_t>(p) & kP);
  if (r >= kP) r -= kP;
  return r;
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t r = a + b;
  return r >= kP ? r - kP : r;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b) {
  return a >= b ? a - b : a + kP - b;
}

// Suffix of the given total length, as a subfragment.
KFragment tail_of(const KFragment& w, pos_t len) {
  if (len == 0) return KFragment{};
  const pos_t total = w.len();
  return subfragment(w, total - len + 1, total);
}

} // namespace

Engine::Engine(Text text, EngineOptions opt)
    : text_(std::move(text)),
      opt_(opt),
      esa_(Esa::build(text_, opt.layout)),
      ms_(esa_, opt.profile) {
  init_derived();
}

Engine::Engine(Text text, EngineOptions opt, IndexTables tables)
    : text_(std::move(text)),
      opt_(opt),
      esa_(Esa::adopt(text_, std::move(tables.sa), std::move(tables.lcp),
                      std::move(tables.rsa), std::move(tables.rlcp),
                      opt.layout)),
      ms_(esa_, opt.profile) {
  init_derived();
}

void Engine::init_derived() {
  if (opt_.build_gen) gq_.emplace(esa_, opt_.profile);

  std::mt19937_64 rng(opt_.fp_seed);
  fp_base_ = 300 + rng() % (kP - 600);
  const auto n = static_cast<std::size_t>(text_.n);
  fp_pref_.resize(n + 1, 0);
  fp_pow_.resize(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) {
    fp_pow_[i] = mulmod(fp_pow_[i - 1], fp_base_);
    fp_pref_[i] = addmod(mulmod(fp_pref_[i - 1], fp_base_),
                         (text_.symbols[i - 1] + 1) % kP);
  }
}

const GenMinSufIndex& Engine::gen_index() const {
  if (!gq_)
    throw InvalidArguments("generalized query structures were not built");
  return *gq_;
}

std::uint64_t Engine::hash_fragment(Fragment f) const {
  return submod(fp_pref_[static_cast<std::size_t>(f.end)],
                mulmod(fp_pref_[static_cast<std::size_t>(f.start - 1)],
                       fp_pow_[static_cast<std::size_t>(f.len())]));
}

std::uint64_t Engine::hash_kfragment(const KFragment& w) const {
  std::uint64_t acc = 0;
  for (const auto& p : w.pieces)
    acc = addmod(mulmod(acc, fp_pow_[static_cast<std::size_t>(p.len())]),
                 hash_fragment(p));
  return acc;
}

const Engine& Engine::complement() const {
  std::call_once(comp_once_, [this] {
    Text c;
    c.n = text_.n;
    c.sigma = text_.sigma;
    c.mode = text_.mode;
    c.symbols.reserve(text_.symbols.size());
    for (const letter_t x : text_.symbols)
      c.symbols.push_back(static_cast<letter_t>(text_.sigma - 1 - x));
    comp_ = std::make_unique<Engine>(std::move(c), opt_);
  });
  return *comp_;
}

RotationAnswer Engine::min_rotation(const KFragment& v) const {
  const pos_t m = v.len();
  if (m < 1) throw InvalidArguments("rotation of an empty value");
  if (m == 1) return RotationAnswer{0, 1};
  const GenMinSufIndex& g = gen_index();

  KFragment doubled;
  doubled.pieces = v.pieces;
  doubled.pieces.insert(doubled.pieces.end(), v.pieces.begin(),
                        v.pieces.end());

  // MinSuf(v, v): best suffix s of the first copy extended by the second;
  // the minimal rotation is the length-m prefix of s.v.
  const std::size_t k = v.pieces.size();
  std::vector<pos_t> tail(k + 1, 0);
  for (std::size_t i = k; i-- > 0;)
    tail[i] = tail[i + 1] + v.pieces[i].len();

  pos_t best_len = -1; // suffix length of `doubled` for the best candidate
  for (std::size_t i = 0; i < k; ++i) {
    KFragment w;
    w.pieces.assign(v.pieces.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                    v.pieces.end());
    w.pieces.insert(w.pieces.end(), v.pieces.begin(), v.pieces.end());
    const pos_t st = g.aux_minsuf(v.pieces[i], w);
    const pos_t cand = (v.pieces[i].end - st + 1) + tail[i + 1] + m;
    if (best_len < 0) {
      best_len = cand;
      continue;
    }
    if (cand != best_len &&
        esa_.compare_k(tail_of(doubled, cand), tail_of(doubled, best_len)) ==
            Ordering::Less)
      best_len = cand;
  }

  const pos_t s_len = best_len - m; // suffix of v proper, in [0, m]
  const pos_t shift0 = (m - s_len) % m;
  const KFragment rot = subfragment(tail_of(doubled, best_len), 1, m);

  // Reduce modulo the smallest period of the rotation that divides m, so
  // periodic values always report the smallest shift.
  pos_t q = m;
  for (pos_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    if (esa_.lcp_k(rot, subfragment(rot, d + 1, m)) == m - d) {
      q = d;
      break;
    }
  }
  return RotationAnswer{shift0 % q, shift0 % q + 1};
}

KFragment Engine::canonical_rotation(const KFragment& v) const {
  const pos_t m = v.len();
  if (m == 1) return v;
  const RotationAnswer a = min_rotation(v);
  KFragment doubled;
  doubled.pieces = v.pieces;
  doubled.pieces.insert(doubled.pieces.end(), v.pieces.begin(),
                        v.pieces.end());
  return subfragment(doubled, a.shift + 1, a.shift + m);
}

RotationAnswer Engine::max_rotation(const KFragment& v) const {
  // Alphabet reversal turns maximal rotations into minimal ones; positions
  // carry over unchanged to the complemented text.
  return complement().min_rotation(v);
}

bool Engine::cyclic_equal(const KFragment& a, const KFragment& b) const {
  if (a.len() != b.len()) return false;
  return esa_.compare_k(canonical_rotation(a), canonical_rotation(b)) ==
         Ordering::Equal;
}

CyclicFingerprint Engine::cyclic_fingerprint(const KFragment& v) const {
  const pos_t m = v.len();
  if (m < 1) throw InvalidArguments("fingerprint of an empty value");
  return CyclicFingerprint{hash_kfragment(canonical_rotation(v)), m};
}

std::vector<LyndonFactor> Engine::lyndon_factorize_fragment(
    const KFragment& v) const {
  const GenMinSufIndex& g = gen_index();
  std::vector<LyndonFactor> out;
  pos_t rem = v.len();
  if (rem < 1) throw InvalidArguments("factorization of an empty value");
  while (rem > 0) {
    const KFragment cur = subfragment(v, 1, rem);
    const auto [len, sfx] = g.gen_minsuf(cur);
    pos_t e = 1;
    if (rem - len >= len) {
      // Longest common suffix of the prefix with itself shifted by one
      // factor length counts the extra full copies of the factor word.
      const pos_t q = esa_.lcs_k(cur, subfragment(v, 1, rem - len));
      e += q / len;
    }
    out.push_back(LyndonFactor{len, e});
    rem -= e * len;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

} // namespace lyx

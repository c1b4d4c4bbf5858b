#include "lyx/serialize.hpp"

#include <array>
#include <cstring>
#include <istream>
#include <ostream>

namespace lyx {

namespace {

constexpr std::array<char, 7> kMagic{'L', 'Y', 'X', 'I', 'D', 'X', '1'};
constexpr std::uint32_t kVersion = 1;

void put_u64(std::ostream& out, std::uint64_t x) {
  std::array<unsigned char, 8> b;
  for (int i = 0; i < 8; ++i) b[static_cast<std::size_t>(i)] =
      static_cast<unsigned char>((x >> (8 * i)) & 0xFF);
  out.write(reinterpret_cast<const char*>(b.data()), 8);
}

std::uint64_t get_u64(std::istream& in) {
  std::array<unsigned char, 8> b;
  in.read(reinterpret_cast<char*>(b.data()), 8);
  if (!in) throw InvalidInput("index file truncated");
  std::uint64_t x = 0;
  for (int i = 0; i < 8; ++i)
    x |= static_cast<std::uint64_t>(b[static_cast<std::size_t>(i)]) << (8 * i);
  return x;
}

void put_pos_vec(std::ostream& out, const std::vector<pos_t>& v) {
  put_u64(out, v.size());
  for (const pos_t x : v) put_u64(out, static_cast<std::uint64_t>(x));
}

std::vector<pos_t> get_pos_vec(std::istream& in, std::uint64_t max_size) {
  const std::uint64_t m = get_u64(in);
  if (m > max_size) throw InvalidInput("index file table size out of range");
  std::vector<pos_t> v(m);
  for (auto& x : v) x = static_cast<pos_t>(get_u64(in));
  return v;
}

} // namespace

void save_index(const Engine& engine, std::ostream& out) {
  out.write(kMagic.data(), static_cast<std::streamsize>(kMagic.size()));
  put_u64(out, kVersion);
  const EngineOptions& opt = engine.options();
  put_u64(out, static_cast<std::uint64_t>(engine.text().mode));
  put_u64(out, opt.profile.kind == TierProfile::Kind::Paper ? 0 : 1);
  put_u64(out, static_cast<std::uint64_t>(opt.profile.tau));
  put_u64(out, static_cast<std::uint64_t>(opt.profile.short_cutoff));
  put_u64(out, opt.build_gen ? 1 : 0);
  put_u64(out, opt.fp_seed);
  put_u64(out, static_cast<std::uint64_t>(opt.layout));
  put_u64(out, static_cast<std::uint64_t>(engine.text().n));
  put_u64(out, engine.text().sigma);
  for (const letter_t c : engine.text().symbols) put_u64(out, c);
  put_pos_vec(out, engine.esa().sa_table());
  put_pos_vec(out, engine.esa().lcp_table());
  put_pos_vec(out, engine.esa().rsa_table());
  put_pos_vec(out, engine.esa().rlcp_table());
  if (!out) throw InvalidInput("failed to write index file");
}

std::unique_ptr<Engine> load_index(std::istream& in) {
  std::array<char, 7> magic;
  in.read(magic.data(), static_cast<std::streamsize>(magic.size()));
  if (!in || magic != kMagic) throw InvalidInput("not an index file");
  if (get_u64(in) != kVersion) throw InvalidInput("unsupported index version");

  Text t;
  t.mode = static_cast<TextMode>(get_u64(in));
  EngineOptions opt;
  const bool paper = get_u64(in) == 0;
  const auto tau = static_cast<pos_t>(get_u64(in));
  const auto cutoff = static_cast<pos_t>(get_u64(in));
  opt.profile = paper ? TierProfile::paper() : TierProfile::test(tau, cutoff);
  opt.build_gen = get_u64(in) != 0;
  opt.fp_seed = get_u64(in);
  opt.layout = static_cast<Rmq::Layout>(get_u64(in));
  t.n = static_cast<pos_t>(get_u64(in));
  t.sigma = get_u64(in);
  if (t.n < 1 || t.n > (pos_t{1} << 40))
    throw InvalidInput("index file length out of range");
  t.symbols.resize(static_cast<std::size_t>(t.n));
  for (auto& c : t.symbols) c = static_cast<letter_t>(get_u64(in));

  const auto lim = static_cast<std::uint64_t>(t.n) + 2;
  IndexTables tables;
  tables.sa = get_pos_vec(in, lim);
  tables.lcp = get_pos_vec(in, lim);
  tables.rsa = get_pos_vec(in, lim);
  tables.rlcp = get_pos_vec(in, lim);
  return std::make_unique<Engine>(std::move(t), opt, std::move(tables));
}

} // namespace lyx

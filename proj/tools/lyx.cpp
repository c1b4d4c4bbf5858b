// Command-line surface over the substring-query engine:
//   index   build and serialize an index file
//   query   answer a stream of query lines against an index or raw text
//   verify  cross-check the engine against brute-force oracles
//   bench   instrumented latency / primitive-call / build-scaling report
//
// All positions on the query surface are 1-based and inclusive.

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "lyx/oracle.hpp"
#include "lyx/serialize.hpp"

using namespace lyx;

namespace {

struct CommonFlags {
  std::string mode = "bytes";
  std::string profile = "paper";
  std::int64_t tau = 0;
  std::uint64_t seed = 0x714c0de5eed1ULL;
  unsigned threads = 1;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--mode", f.mode, "Input interpretation")
      ->check(CLI::IsMember({"bytes", "tokens"}));
  cmd->add_option("--profile", f.profile, "Tier geometry profile")
      ->check(CLI::IsMember({"paper", "test"}));
  cmd->add_option("--tau", f.tau, "Short-fragment table threshold");
  cmd->add_option("--seed", f.seed, "Fingerprint base seed");
  cmd->add_option("--threads", f.threads, "Query worker threads");
}

EngineOptions options_of(const CommonFlags& f, bool build_gen = true) {
  EngineOptions opt;
  if (f.profile == "paper") {
    opt.profile = TierProfile::paper();
    if (f.tau > 0) opt.profile.tau = f.tau;
  } else {
    opt.profile = TierProfile::test(f.tau > 0 ? f.tau : 16);
  }
  opt.fp_seed = f.seed;
  opt.build_gen = build_gen;
  return opt;
}

Text read_text_file(const std::string& path, const std::string& mode) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open input file: " + path);
  if (mode == "bytes") {
    std::vector<std::uint8_t> raw((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
    return load_text(raw);
  }
  std::vector<std::uint32_t> tokens;
  std::uint64_t v = 0;
  while (in >> v) tokens.push_back(static_cast<std::uint32_t>(v));
  return load_text_tokens(tokens);
}

// Loads a serialized index when the file carries the index magic, otherwise
// treats the file as raw text and builds in memory.
std::unique_ptr<Engine> open_engine(const std::string& path,
                                    const CommonFlags& f) {
  {
    std::ifstream probe(path, std::ios::binary);
    if (!probe) throw InvalidInput("cannot open input file: " + path);
    char magic[7] = {};
    probe.read(magic, 7);
    if (probe.gcount() == 7 && std::string_view(magic, 7) == "LYXIDX1") {
      std::ifstream in(path, std::ios::binary);
      return load_index(in);
    }
  }
  return std::make_unique<Engine>(read_text_file(path, f.mode), options_of(f));
}

// ---------------------------------------------------------------------------
// query
// ---------------------------------------------------------------------------

std::string answer_line(const Engine& eng, const std::string& line) {
  std::istringstream ss(line);
  std::string verb;
  if (!(ss >> verb)) return ""; // blank line
  const pos_t n = eng.text().n;

  auto frag = [&](pos_t l, pos_t r) {
    if (l < 1 || r > n || l > r)
      throw InvalidRange("positions out of range");
    return Fragment{l, r};
  };
  auto need = [&](pos_t& x) {
    if (!(ss >> x)) throw InvalidInput("missing argument");
  };
  auto done = [&] {
    std::string extra;
    if (ss >> extra) throw InvalidInput("trailing arguments");
  };

  try {
    std::ostringstream out;
    if (verb == "MINSUF") {
      pos_t l, r;
      need(l), need(r), done();
      const pos_t st = eng.minsuf(frag(l, r));
      out << st << ' ' << (r - st + 1);
    } else if (verb == "GMINSUF") {
      pos_t k;
      need(k);
      if (k < 1 || k > 64) throw InvalidInput("bad piece count");
      KFragment v;
      for (pos_t i = 0; i < k; ++i) {
        pos_t l, r;
        need(l), need(r);
        v.pieces.push_back(frag(l, r));
      }
      done();
      out << eng.gen_minsuf(v).first;
    } else if (verb == "MINROT" || verb == "MAXROT") {
      pos_t l, r;
      need(l), need(r), done();
      const KFragment v = KFragment::single(frag(l, r));
      out << (verb == "MINROT" ? eng.min_rotation(v) : eng.max_rotation(v))
                 .shift;
    } else if (verb == "CYCEQ") {
      pos_t l, r, l2, r2;
      need(l), need(r), need(l2), need(r2), done();
      out << (eng.cyclic_equal(KFragment::single(frag(l, r)),
                               KFragment::single(frag(l2, r2)))
                  ? 1
                  : 0);
    } else if (verb == "FP") {
      pos_t l, r;
      need(l), need(r), done();
      const auto fp = eng.cyclic_fingerprint(KFragment::single(frag(l, r)));
      out << std::hex << std::setw(16) << std::setfill('0') << fp.value
          << std::dec << ' ' << fp.length;
    } else if (verb == "LYNDON") {
      pos_t l, r;
      need(l), need(r), done();
      const auto fac =
          eng.lyndon_factorize_fragment(KFragment::single(frag(l, r)));
      for (std::size_t i = 0; i < fac.size(); ++i) {
        if (i) out << ' ';
        out << fac[i].word_len << '^' << fac[i].exponent;
      }
    } else if (verb == "SIG") {
      pos_t l, r;
      need(l), need(r), done();
      const auto sig = eng.significant(frag(l, r));
      for (std::size_t i = 0; i < sig.lens.size(); ++i) {
        if (i) out << ' ';
        out << sig.lens[i];
      }
    } else {
      throw InvalidInput("unknown verb: " + verb);
    }
    return out.str();
  } catch (const std::exception& ex) {
    return std::string("ERR ") + ex.what();
  }
}

int cmd_query(const std::string& path, const CommonFlags& flags) {
  const auto eng = open_engine(path, flags);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(std::cin, line)) lines.push_back(line);

  std::vector<std::string> answers(lines.size());
  const unsigned workers =
      std::max(1u, std::min(flags.threads,
                            static_cast<unsigned>(lines.size() ? lines.size()
                                                               : 1)));
  if (workers == 1) {
    for (std::size_t i = 0; i < lines.size(); ++i)
      answers[i] = answer_line(*eng, lines[i]);
  } else {
    // Workers pull line indices; the indexed answer buffer restores input
    // order regardless of completion order.
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < lines.size();
             i = next.fetch_add(1))
          answers[i] = answer_line(*eng, lines[i]);
      });
    for (auto& th : pool) th.join();
  }
  for (const auto& a : answers) std::cout << a << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// index
// ---------------------------------------------------------------------------

int cmd_index(const std::string& path, const std::string& out_path,
              const CommonFlags& flags) {
  const auto t0 = std::chrono::steady_clock::now();
  Engine eng(read_text_file(path, flags.mode), options_of(flags));
  const auto t1 = std::chrono::steady_clock::now();
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InvalidInput("cannot open output file: " + out_path);
  save_index(eng, out);
  out.flush();
  const auto bytes = out.tellp();
  std::cout << "n=" << eng.text().n << " sigma=" << eng.text().sigma
            << " bytes=" << bytes << " build_ms="
            << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                   .count()
            << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct Suite {
  std::string name;
  std::uint64_t checked = 0;
  bool failed = false;
  std::string first_failure;

  void expect(bool ok, const std::string& descr, const std::string& engine_ans,
              const std::string& oracle_ans) {
    ++checked;
    if (ok || failed) return;
    failed = true;
    first_failure = "query: " + descr + "\n  engine: " + engine_ans +
                    "\n  oracle: " + oracle_ans;
  }
};

std::vector<letter_t> letters_of(const Text& t, Fragment f) {
  return extract(t, f);
}

int verify_engine(const Engine& eng, std::mt19937_64& rng, bool inject_fault) {
  const Text& t = eng.text();
  const pos_t n = t.n;
  std::uniform_int_distribution<pos_t> dp(1, n);
  auto rand_frag = [&] {
    pos_t a = dp(rng), b = dp(rng);
    if (a > b) std::swap(a, b);
    return Fragment{a, b};
  };
  std::vector<Suite> suites;

  {
    Suite s;
    s.name = "minsuf-tiers";
    const pos_t cap = n <= 64 ? n : 0;
    auto check = [&](Fragment v) {
      const auto vl = letters_of(t, v);
      const pos_t want = v.start + oracle::naive_minsuf(vl) - 1;
      const pos_t g1 = eng.minsuf_ladder(v), g2 = eng.minsuf_logstar(v),
                  g3 = eng.minsuf(v) + (inject_fault && s.checked == 0 ? 1 : 0);
      std::ostringstream d, got;
      d << "MINSUF " << v.start << ' ' << v.end;
      got << g1 << '/' << g2 << '/' << g3;
      s.expect(g1 == want && g2 == want && g3 == want, d.str(), got.str(),
               std::to_string(want));
    };
    if (cap > 0) {
      for (pos_t a = 1; a <= n; ++a)
        for (pos_t b = a; b <= n; ++b) check(Fragment{a, b});
    } else {
      for (int q = 0; q < 4000; ++q) check(rand_frag());
    }
    suites.push_back(std::move(s));
  }

  {
    Suite s;
    s.name = "significant-suffixes";
    for (int q = 0; q < 1500; ++q) {
      const Fragment v = rand_frag();
      const auto want = oracle::naive_significant(letters_of(t, v));
      const auto got = eng.significant(v).lens;
      std::ostringstream d, ga, wa;
      d << "SIG " << v.start << ' ' << v.end;
      for (pos_t x : got) ga << x << ' ';
      for (pos_t x : want) wa << x << ' ';
      bool gap = true;
      for (std::size_t i = 0; i + 2 < got.size(); ++i)
        gap = gap && got[i] > 2 * got[i + 1];
      s.expect(got == want && gap, d.str(), ga.str(), wa.str());
    }
    suites.push_back(std::move(s));
  }

  {
    Suite s;
    s.name = "generalized-minsuf";
    for (int q = 0; q < 1500; ++q) {
      KFragment v;
      const int k = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < k; ++i) v.pieces.push_back(rand_frag());
      const auto vl = extract(t, v);
      const pos_t want =
          static_cast<pos_t>(vl.size()) - oracle::naive_minsuf(vl) + 1;
      const pos_t got = eng.gen_minsuf(v).first;
      std::ostringstream d;
      d << "GMINSUF " << k;
      for (const auto& p : v.pieces) d << ' ' << p.start << ' ' << p.end;
      s.expect(got == want, d.str(), std::to_string(got),
               std::to_string(want));
    }
    suites.push_back(std::move(s));
  }

  {
    Suite s;
    s.name = "rotations";
    for (int q = 0; q < 800; ++q) {
      const Fragment v = rand_frag();
      const auto vl = letters_of(t, v);
      const pos_t wmin = oracle::booth_min_rotation(vl);
      const pos_t wmax = oracle::naive_max_rotation(vl);
      const pos_t gmin = eng.min_rotation(KFragment::single(v)).shift;
      const pos_t gmax = eng.max_rotation(KFragment::single(v)).shift;
      std::ostringstream d, ga, wa;
      d << "ROT " << v.start << ' ' << v.end;
      ga << gmin << '/' << gmax;
      wa << wmin << '/' << wmax;
      s.expect(gmin == wmin && gmax == wmax, d.str(), ga.str(), wa.str());
    }
    suites.push_back(std::move(s));
  }

  {
    Suite s;
    s.name = "lyndon-factorization";
    for (int q = 0; q < 800; ++q) {
      const Fragment v = rand_frag();
      const auto want = duval_factorize(letters_of(t, v));
      const auto got = eng.lyndon_factorize_fragment(KFragment::single(v));
      auto fmt = [](const std::vector<LyndonFactor>& f) {
        std::ostringstream o;
        for (const auto& x : f) o << x.word_len << '^' << x.exponent << ' ';
        return o.str();
      };
      std::ostringstream d;
      d << "LYNDON " << v.start << ' ' << v.end;
      s.expect(got == want, d.str(), fmt(got), fmt(want));
    }
    suites.push_back(std::move(s));
  }

  {
    Suite s;
    s.name = "cyclic-fingerprints";
    for (int q = 0; q < 600; ++q) {
      Fragment a = rand_frag();
      Fragment b = rand_frag();
      if (a.len() != b.len()) b.end = std::min(n, b.start + a.len() - 1);
      if (a.len() != b.len()) continue;
      const KFragment ka = KFragment::single(a), kb = KFragment::single(b);
      const bool eq = eng.cyclic_equal(ka, kb);
      auto al = letters_of(t, a);
      const auto bl = letters_of(t, b);
      bool want = false;
      for (pos_t sh = 0; sh < a.len(); ++sh) {
        want = want || al == bl;
        std::rotate(al.begin(), al.begin() + 1, al.end());
      }
      const bool fp_eq =
          eng.cyclic_fingerprint(ka) == eng.cyclic_fingerprint(kb);
      std::ostringstream d, ga, wa;
      d << "CYCEQ " << a.start << ' ' << a.end << ' ' << b.start << ' '
        << b.end;
      ga << eq << "/fp" << fp_eq;
      wa << want << "/fp" << want;
      s.expect(eq == want && fp_eq == want, d.str(), ga.str(), wa.str());
    }
    suites.push_back(std::move(s));
  }

  bool any_failed = false;
  for (const auto& s : suites) {
    std::cout << s.name << ": " << (s.failed ? "FAIL" : "PASS") << " ("
              << s.checked << " checks)\n";
    if (s.failed) {
      any_failed = true;
      std::cout << "  first mismatch:\n  " << s.first_failure << '\n';
    }
  }
  return any_failed ? 1 : 0;
}

int cmd_verify(const std::string& text_path, const std::vector<pos_t>& random_spec,
               const std::vector<pos_t>& exhaustive_spec,
               const CommonFlags& flags, bool inject_fault) {
  std::mt19937_64 rng(flags.seed);
  if (!exhaustive_spec.empty()) {
    const pos_t len = exhaustive_spec[0];
    const auto sigma = static_cast<unsigned>(exhaustive_spec[1]);
    std::uint64_t total = 1;
    for (pos_t i = 0; i < len; ++i) total *= sigma;
    int rc = 0;
    std::uint64_t checks = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
      Text t;
      std::uint64_t c = code;
      for (pos_t i = 0; i < len; ++i) {
        t.symbols.push_back(static_cast<letter_t>(c % sigma));
        c /= sigma;
      }
      t.n = len;
      t.sigma = sigma;
      Engine eng(std::move(t), options_of(flags));
      for (pos_t a = 1; a <= len; ++a)
        for (pos_t b = a; b <= len; ++b) {
          ++checks;
          const auto vl = letters_of(eng.text(), Fragment{a, b});
          const pos_t want = a + oracle::naive_minsuf(vl) - 1;
          if (eng.minsuf(Fragment{a, b}) != want ||
              eng.minsuf_logstar(Fragment{a, b}) != want ||
              eng.minsuf_ladder(Fragment{a, b}) != want) {
            std::cout << "exhaustive-minsuf: FAIL at text code " << code
                      << " fragment [" << a << "," << b << "]\n";
            rc = 1;
          }
        }
    }
    std::cout << "exhaustive-minsuf: " << (rc ? "FAIL" : "PASS") << " ("
              << checks << " checks)\n";
    return rc;
  }

  std::unique_ptr<Engine> eng;
  if (!random_spec.empty()) {
    const pos_t n = random_spec[0];
    const auto sigma =
        static_cast<letter_t>(random_spec.size() > 1 ? random_spec[1] : 2);
    std::mt19937_64 trng(random_spec.size() > 2
                             ? static_cast<std::uint64_t>(random_spec[2])
                             : flags.seed);
    Text t;
    t.n = n;
    t.sigma = sigma;
    for (pos_t i = 0; i < n; ++i)
      t.symbols.push_back(static_cast<letter_t>(trng() % sigma));
    eng = std::make_unique<Engine>(std::move(t), options_of(flags));
  } else {
    eng = std::make_unique<Engine>(read_text_file(text_path, flags.mode),
                                   options_of(flags));
  }
  return verify_engine(*eng, rng, inject_fault);
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

Text random_text(std::mt19937_64& rng, pos_t n, letter_t sigma) {
  Text t;
  t.n = n;
  t.sigma = sigma;
  t.symbols.reserve(static_cast<std::size_t>(n));
  for (pos_t i = 0; i < n; ++i)
    t.symbols.push_back(static_cast<letter_t>(rng() % sigma));
  return t;
}

int cmd_bench(const std::vector<pos_t>& sizes, pos_t queries,
              const std::vector<pos_t>& build_sizes, int build_reps,
              const CommonFlags& flags) {
  std::mt19937_64 rng(flags.seed);
  std::cout << "kind,n,tier,queries,ns_per_query,max_primitive_calls,"
               "build_ms,ratio\n";

  for (const pos_t n : sizes) {
    Engine eng(random_text(rng, n, 2), options_of(flags, false));
    std::uniform_int_distribution<pos_t> dp(1, n);
    std::vector<Fragment> frags;
    for (pos_t q = 0; q < queries; ++q) {
      pos_t a = dp(rng), b = dp(rng);
      if (a > b) std::swap(a, b);
      frags.push_back(Fragment{a, b});
    }
    struct Tier {
      std::string name;
      std::function<pos_t(Fragment)> run;
    };
    const std::vector<Tier> tiers{
        {"log", [&](Fragment v) { return eng.minsuf_ladder(v); }},
        {"logstar", [&](Fragment v) { return eng.minsuf_logstar(v); }},
        {"const", [&](Fragment v) { return eng.minsuf(v); }}};
    for (const auto& tier : tiers) {
      std::uint64_t max_calls = 0;
      pos_t sink = 0;
      const auto t0 = std::chrono::steady_clock::now();
      for (const Fragment v : frags) {
        stats::reset();
        sink ^= tier.run(v);
        max_calls = std::max(max_calls, stats::now());
      }
      const auto t1 = std::chrono::steady_clock::now();
      const auto ns =
          std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
              .count() /
          std::max<pos_t>(1, queries);
      std::cout << "query," << n << ',' << tier.name << ',' << queries << ','
                << ns << ',' << max_calls << ",," << (sink ? "" : "") << '\n';
    }
  }

  double prev_ms = 0;
  for (const pos_t n : build_sizes) {
    std::vector<double> runs;
    for (int rep = 0; rep < build_reps; ++rep) {
      Text t = random_text(rng, n, 2);
      const auto t0 = std::chrono::steady_clock::now();
      Engine eng(std::move(t), options_of(flags, false));
      const auto t1 = std::chrono::steady_clock::now();
      runs.push_back(
          std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    std::sort(runs.begin(), runs.end());
    const double ms = runs[runs.size() / 2];
    std::cout << "build," << n << ",,,,," << ms << ','
              << (prev_ms > 0 ? std::to_string(ms / prev_ms) : "") << '\n';
    prev_ms = ms;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"substring minimal-suffix / rotation query toolkit"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string in_path, out_path = "index.lyx", query_path, verify_path;
  std::vector<pos_t> random_spec, exhaustive_spec;
  std::vector<pos_t> bench_sizes{1 << 10, 1 << 12, 1 << 14, 1 << 16};
  std::vector<pos_t> build_sizes{1 << 18, 1 << 19, 1 << 20};
  pos_t bench_queries = 2000;
  int build_reps = 5;

  auto* c_index = app.add_subcommand("index", "build and serialize an index");
  c_index->add_option("input", in_path, "text file")->required();
  c_index->add_option("-o,--output", out_path, "index file path");
  add_common(c_index, flags);

  auto* c_query =
      app.add_subcommand("query", "answer query lines from stdin");
  c_query->add_option("input", query_path, "index or text file")->required();
  add_common(c_query, flags);

  auto* c_verify = app.add_subcommand("verify", "oracle cross-check sweeps");
  c_verify->add_option("input", verify_path, "text file");
  c_verify->add_option("--random", random_spec,
                       "random text spec: n sigma [seed]")
      ->expected(2, 3);
  c_verify->add_option("--exhaustive", exhaustive_spec,
                       "exhaustive sweep spec: len sigma")
      ->expected(2);
  bool inject_fault = false;
  c_verify->add_flag("--inject-fault", inject_fault,
                     "deliberately corrupt one answer (harness self-test)");
  add_common(c_verify, flags);

  auto* c_bench = app.add_subcommand("bench", "instrumented benchmark CSV");
  c_bench->add_option("--sizes", bench_sizes, "query benchmark sizes");
  c_bench->add_option("--queries", bench_queries, "queries per size");
  c_bench->add_option("--build-sizes", build_sizes, "build scaling sizes");
  c_bench->add_option("--build-reps", build_reps, "repetitions per size");
  add_common(c_bench, flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_index->parsed()) return cmd_index(in_path, out_path, flags);
    if (c_query->parsed()) return cmd_query(query_path, flags);
    if (c_verify->parsed()) {
      if (verify_path.empty() && random_spec.empty() &&
          exhaustive_spec.empty()) {
        std::cerr << "verify: provide a text file, --random, or --exhaustive\n";
        return 2;
      }
      return cmd_verify(verify_path, random_spec, exhaustive_spec, flags,
                        inject_fault);
    }
    if (c_bench->parsed())
      return cmd_bench(bench_sizes, bench_queries, build_sizes, build_reps,
                       flags);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  }
  return 0;
}

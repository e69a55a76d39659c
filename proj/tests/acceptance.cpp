// One PASS/FAIL line per acceptance criterion; exit status 1 if any fail.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "catwords/bijections.hpp"
#include "catwords/counters.hpp"
#include "catwords/enumerate.hpp"
#include "catwords/genfun.hpp"
#include "catwords/golden.hpp"
#include "catwords/series.hpp"
#include "oracles.hpp"

using namespace catwords;

namespace {

struct Check {
  int failures = 0;
  std::ostringstream first;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) first << what;
  }
};

std::vector<std::string> table_patterns() {
  std::vector<std::string> out;
  for (const auto& r : golden_records()) {
    if (r.source != "series") out.push_back(r.pattern);
  }
  return out;
}

std::string str(const BigInt& v) { return v.get_str(); }

// 1. The oracle reproduces every golden table row for n = 1..10.
void golden_tables(Check& c) {
  int rows = 0;
  for (const auto& r : golden_records()) {
    if (r.source == "series") continue;
    ++rows;
    const auto p = VincularPattern::parse(r.pattern);
    c.expect(r.values.size() >= 10, r.pattern + ": fewer than 10 golden values");
    for (int n = 1; n <= 10 && n <= static_cast<int>(r.values.size()); ++n) {
      const BigInt got = count_avoiders(n, p);
      c.expect(got == r.values[n - 1], r.pattern + " n=" + std::to_string(n) + ": oracle " +
                                           str(got) + " vs " + str(r.values[n - 1]));
    }
  }
  c.expect(rows == 26, "expected 26 golden table rows, found " + std::to_string(rows));
}

// 2. Closed forms, recurrences, generating functions and their alternate
// routes all equal the oracle for n = 1..12.
void method_agreement(Check& c) {
  constexpr int N = 12;
  for (const auto& name : table_patterns()) {
    const auto p = VincularPattern::parse(name);
    std::vector<BigInt> oracle(N + 1);
    for (int n = 1; n <= N; ++n) oracle[n] = count_avoiders(n, p);
    auto compare = [&](const std::string& method, const std::function<BigInt(int)>& value) {
      for (int n = 1; n <= N; ++n) {
        const BigInt v = value(n);
        c.expect(v == oracle[n], name + " n=" + std::to_string(n) + ": " + method + " " + str(v) +
                                     " vs oracle " + str(oracle[n]));
      }
    };
    if (has_closed_form(p)) compare("closed", [&](int n) { return *closed_form(p, n); });
    if (has_recurrence(p)) {
      const auto seq = sequence_by_recurrence(p, N);
      compare("recurrence", [&](int n) { return seq[n - 1]; });
    }
    if (has_genfun(p)) {
      const auto seq = genfun_counts(p, N);
      compare("genfun", [&](int n) { return seq[n - 1]; });
    }
    if (has_alternate(p)) {
      const Series s = alternate_series_for(p, N);
      compare("alternate genfun", [&](int n) {
        c.expect(s[n].get_den() == 1, name + ": alternate route gave a fraction");
        return BigInt(s[n].get_num());
      });
    }
  }
}

// 3. Twenty-term 21-1 series by generating function and by recurrence.
void series_21_1(Check& c) {
  const auto records = golden_records("series");
  c.expect(records.size() == 1 && records[0].pattern == "21-1" && records[0].values.size() == 20,
           "golden data lacks the 20-term 21-1 series");
  if (records.empty()) return;
  const auto& want = records[0].values;
  const int N = static_cast<int>(want.size());
  const auto p = VincularPattern::parse("21-1");
  const auto gf = genfun_counts(p, N);
  const auto rec = sequence_by_recurrence(p, N);
  for (int n = 1; n <= N; ++n) {
    c.expect(gf[n - 1] == want[n - 1],
             "genfun t^" + std::to_string(n) + ": " + str(gf[n - 1]) + " vs " + str(want[n - 1]));
    c.expect(rec[n - 1] == want[n - 1], "recurrence n=" + std::to_string(n) + ": " +
                                            str(rec[n - 1]) + " vs " + str(want[n - 1]));
  }
}

using Key = std::vector<int>;

// Layer entries with first index n, keyed by the remaining indices.
std::map<Key, BigInt> layer_slice(const TableLayer& layer, int n) {
  std::map<Key, BigInt> out;
  for (const auto& [idx, v] : layer.nonzero()) {
    if (idx[0] == n) out[Key(idx.begin() + 1, idx.end())] = v;
  }
  return out;
}

std::map<Key, BigInt> nonzero(const RefinedCounts& counts) {
  std::map<Key, BigInt> out;
  for (const auto& [k, v] : counts) {
    if (v != 0) out[k] = v;
  }
  return out;
}

void same(Check& c, const std::map<Key, BigInt>& table, const std::map<Key, BigInt>& brute,
          const std::string& what) {
  if (table == brute) return;
  std::string detail;
  for (const auto& [k, v] : brute) {
    const auto it = table.find(k);
    if (it == table.end() || it->second != v) {
      detail = " first differing key (";
      for (std::size_t i = 0; i < k.size(); ++i) detail += (i ? "," : "") + std::to_string(k[i]);
      detail += ") oracle " + str(v) + " table " + (it == table.end() ? "0" : str(it->second));
      break;
    }
  }
  if (detail.empty()) detail = " table has extra entries";
  c.expect(false, what + ":" + detail);
}

// 4. Every refined recurrence array against brute-force refinement.
void refined_tables(Check& c) {
  constexpr int N = 10;
  struct Spec {
    const char* pattern;
    const char* layer;
    std::vector<StatKey> keys;
  };
  const std::vector<Spec> specs = {
      {"2-21", "u", {StatKey::Max, StatKey::Last}},
      {"3-21", "v", {StatKey::Max, StatKey::Last}},
      {"21-2", "u", {StatKey::Last}},
      {"21-3", "v", {StatKey::Last}},
      {"31-2", "w", {StatKey::Ones, StatKey::OneRuns}},
      {"21-1", "r_ma", {StatKey::Max, StatKey::SmallestDescentBottom}},
      {"21-1", "r_m", {StatKey::Max}},
  };
  for (const auto& s : specs) {
    const auto p = VincularPattern::parse(s.pattern);
    const auto table = refined_table(p, N);
    for (int n = 1; n <= N; ++n) {
      auto brute = nonzero(refined_counts(n, p, s.keys));
      if (std::string(s.pattern) == "31-2") brute.erase(Key{n, 1});  // the all-ones word
      if (std::string(s.layer) == "r_ma") {
        std::erase_if(brute, [](const auto& kv) { return kv.first[1] == 0; });  // no descent
      }
      same(c, layer_slice(table.layer(s.layer), n), brute,
           std::string(s.pattern) + " " + s.layer + " n=" + std::to_string(n));
    }
  }

  const auto t21 = refined_table(VincularPattern::parse("21-1"), 6);
  c.expect(t21.layer("r_ma").at({6, 4, 2}) == 7, "r_6(4,2) from the table is not 7");
  const auto spot = refined_counts(6, VincularPattern::parse("21-1"),
                                   {StatKey::Max, StatKey::SmallestDescentBottom});
  c.expect(spot.count({4, 2}) && spot.at({4, 2}) == 7, "r_6(4,2) from the oracle is not 7");

  // 11-2 arrays: no-level Catalan words by last letter, and growth words over
  // [a] avoiding 11-2 by first letter.
  const auto p112 = VincularPattern::parse("11-2");
  const auto t112 = refined_table(p112, N);
  for (int n = 1; n <= N; ++n) {
    std::map<Key, BigInt> brute;
    auto words = gen_catalan(n);
    while (words.next()) {
      const auto st = stats(words.current());
      if (!st.has_level) brute[{st.last_letter}] += 1;
    }
    same(c, layer_slice(t112.layer("m"), n), brute, "11-2 m n=" + std::to_string(n));
  }
  for (int n = 1; n <= N; ++n) {
    for (int a = 1; a <= N; ++a) {
      FamilySpec spec;
      spec.alphabet_bound = a;
      spec.avoid = p112;
      std::map<int, BigInt> by_first;
      BigInt total = 0;
      auto words = gen_family(n, spec);
      while (words.next()) {
        by_first[words.current().front()] += 1;
        total += 1;
      }
      for (int b = 1; b <= a; ++b) {
        const BigInt& got = t112.layer("p_ab").at({n, a, b});
        c.expect(got == by_first[b], "11-2 p_ab n=" + std::to_string(n) + " a=" +
                                         std::to_string(a) + " b=" + std::to_string(b) + ": " +
                                         str(got) + " vs " + str(by_first[b]));
      }
      c.expect(t112.layer("p_a").at({n, a}) == total,
               "11-2 p_a n=" + std::to_string(n) + " a=" + std::to_string(a));
    }
  }
}

// 5. Bijections by exhaustive round trip.
void bijections(Check& c) {
  for (int n = 1; n <= 10; ++n) {
    const std::string tag = " n=" + std::to_string(n);
    std::set<std::string> images;
    BigInt words_seen = 0;
    auto all = gen_catalan(n);
    while (all.next()) {
      const CatalanWord w(all.current());
      words_seen += 1;
      const DyckPath d = word_to_dyck(w);
      c.expect(oracle::up_heights(d.to_string()) == w.letters(), "iota heights" + tag);
      c.expect(dyck_to_word(d) == w, "iota round trip" + tag);
      images.insert(d.to_string());
      c.expect(is_smooth(w) == avoids(w, VincularPattern::parse("2-31")),
               "is_smooth vs 2-31 at " + w.to_string());
    }
    c.expect(words_seen == catalan(n) && images.size() == words_seen, "iota injective" + tag);
  }

  for (int n = 1; n <= 8; ++n) {
    const std::string tag = " n=" + std::to_string(n);
    const auto dyck = oracle::dyck_paths(n);
    c.expect(BigInt(static_cast<unsigned long>(dyck.size())) == catalan(n), "Dyck count" + tag);
    std::set<std::string> alpha_img, beta_img;
    for (const auto& s : dyck) {
      const DyckPath d = DyckPath::parse(s);
      c.expect(word_to_dyck(dyck_to_word(d)) == d, "iota inverse round trip" + tag);
      if (s.find("udu") == std::string::npos) {
        const MotzkinPath m = alpha(d);
        c.expect(m.length() == static_cast<std::size_t>(n - 1), "alpha length" + tag);
        c.expect(alpha_inv(m) == d, "alpha round trip at " + s);
        alpha_img.insert(m.to_string());
      }
      c.expect(in_dstar(d) == oracle::only_low_udu(s), "D* membership at " + s);
      if (oracle::only_low_udu(s)) {
        const MotzkinPath m = beta(d);
        c.expect(m.length() == static_cast<std::size_t>(n), "beta length" + tag);
        c.expect(beta_inv(m) == d, "beta round trip at " + s);
        beta_img.insert(m.to_string());
      }
    }
    const auto m_prev = oracle::motzkin_paths(n - 1);
    const auto m_cur = oracle::motzkin_paths(n);
    c.expect(alpha_img == std::set<std::string>(m_prev.begin(), m_prev.end()),
             "alpha image is not all Motzkin paths" + tag);
    c.expect(beta_img == std::set<std::string>(m_cur.begin(), m_cur.end()),
             "beta image is not all Motzkin paths" + tag);
    for (const auto& s : m_prev) {
      c.expect(alpha(alpha_inv(MotzkinPath::parse(s))).to_string() == s, "alpha_inv round trip at " + s);
    }
    for (const auto& s : m_cur) {
      c.expect(beta(beta_inv(MotzkinPath::parse(s))).to_string() == s, "beta_inv round trip at " + s);
    }
  }

  const auto p111 = VincularPattern::parse("11-1");
  const auto p1_11 = VincularPattern::parse("1-11");
  const auto p132 = VincularPattern::parse("1-32");
  for (int n = 1; n <= 10; ++n) {
    const std::string tag = " n=" + std::to_string(n);
    std::set<CatalanWord> image;
    std::size_t domain = 0, codomain = 0;
    auto all = gen_catalan(n);
    while (all.next()) {
      const CatalanWord w(all.current());
      if (avoids(w, p111)) {
        ++domain;
        const CatalanWord v = transfer_runs(w);
        const auto sw = stats(w), sv = stats(v);
        c.expect(avoids(v, p1_11), "transfer_runs image contains 1-11 at " + w.to_string());
        c.expect(sw.max_letter == sv.max_letter && sw.last_letter == sv.last_letter,
                 "transfer_runs moved max or last at " + w.to_string());
        c.expect(transfer_runs_inverse(v) == w, "transfer_runs round trip at " + w.to_string());
        image.insert(v);
      }
      if (avoids(w, p1_11)) {
        ++codomain;
        c.expect(transfer_runs(transfer_runs_inverse(w)) == w,
                 "transfer_runs inverse round trip at " + w.to_string());
      }
    }
    c.expect(image.size() == domain && domain == codomain, "transfer_runs not bijective" + tag);

    std::set<CatalanWord> omega;
    const auto marked = gen_marked_increasing(n);
    for (const auto& mw : marked) {
      const CatalanWord v = omega_to_avoider(mw);
      c.expect(avoids(v, p132), "omega image contains 1-32 at " + mw.to_string());
      omega.insert(v);
    }
    c.expect(omega.size() == marked.size(), "omega not injective" + tag);
    c.expect(BigInt(static_cast<unsigned long>(omega.size())) == fibonacci(2 * n - 1) &&
                 fibonacci(2 * n - 1) == count_avoiders(n, p132),
             "omega image size" + tag);
  }
}

Series random_series(std::mt19937& rng, int order, bool unit) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  Series s(order);
  for (int k = 0; k <= order; ++k) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    s.set(k, q);
  }
  if (unit) s.set(0, 1);
  return s;
}

// 6. Series engine properties.
void series_engine(Check& c) {
  std::mt19937 rng(20240517);
  constexpr int kOrder = 32;
  for (int i = 0; i < 60; ++i) {
    const Series f = random_series(rng, kOrder, true);
    const Series r = sqrt(f);
    c.expect(r * r == f && (r * r).order() == kOrder, "sqrt(f)^2 != f in case " + std::to_string(i));

    const Series a = random_series(rng, kOrder, false);
    Series g = random_series(rng, kOrder, true);
    c.expect((a / g) * g == a, "(f/g)g != f in case " + std::to_string(i));
    c.expect((a * g) / g == a, "(fg)/g != f in case " + std::to_string(i));
    const int k = i % 4;
    const Series shifted = g.shifted(k);
    const Series q = a.shifted(k) / shifted;
    c.expect(q.order() == kOrder - k && q * g.truncated(kOrder - k) == a.truncated(kOrder - k),
             "valuation-aware division in case " + std::to_string(i));
  }

  std::vector<BigInt> m(31);
  m[0] = 1;
  for (int n = 1; n <= 30; ++n) {
    m[n] = m[n - 1];
    for (int k = 0; k <= n - 2; ++k) m[n] += m[k] * m[n - 2 - k];
  }
  const Series mgf = aux_series("MotzkinGF", 0, 30);
  for (int n = 0; n <= 30; ++n) {
    c.expect(mgf[n] == Rational(m[n]), "Motzkin series at t^" + std::to_string(n));
    c.expect(motzkin(n) == m[n], "motzkin(" + std::to_string(n) + ")");
  }

  const Series T = aux_series("T", 0, 24);
  const Series t = Series::t(24);
  const Series lhs = t * T * T, rhs = Series::polynomial({1, 1}, 24) * (T - Rational(1));
  c.expect(lhs.order() >= 24 && lhs == rhs, "tT^2 != (1+t)(T-1)");

  for (const char* name : {"21-2", "21-3"}) {
    const Series k = kernel_residual(VincularPattern::parse(name), 24);
    c.expect(k.order() >= 24 && k.is_zero(), std::string("kernel root check fails for ") + name);
  }
}

// 7. Equivalences with classical patterns, the 11-1 / 1-11 refinement and
// the run-length reversal identity.
void symmetries(Check& c) {
  for (const char* name : {"1-12", "1-21", "1-23", "2-12", "3-12", "12-1", "12-2", "12-3", "23-1"}) {
    const auto p = VincularPattern::parse(name);
    for (int n = 1; n <= 10; ++n) {
      c.expect(count_avoiders(n, p) == count_avoiders(n, p.classical()),
               std::string(name) + " differs from its classical version at n=" + std::to_string(n));
    }
  }
  const auto a = VincularPattern::parse("11-1"), b = VincularPattern::parse("1-11");
  for (int n = 1; n <= 10; ++n) {
    c.expect(nonzero(refined_counts(n, a, {StatKey::Max, StatKey::Last})) ==
                 nonzero(refined_counts(n, b, {StatKey::Max, StatKey::Last})),
             "11-1 and 1-11 differ by (max, last) at n=" + std::to_string(n));
  }
  const std::vector<std::pair<const char*, const char*>> reversals = {
      {"1-11", "11-1"}, {"1-1-1", "1-1-1"}, {"1-111", "111-1"},
      {"1-1-11", "11-1-1"}, {"11-111", "111-11"}, {"1-11-111", "111-11-1"}};
  for (const auto& [x, y] : reversals) {
    const auto px = VincularPattern::parse(x), py = VincularPattern::parse(y);
    for (int n = 1; n <= 10; ++n) {
      c.expect(count_avoiders(n, px) == count_avoiders(n, py),
               std::string(x) + " vs " + y + " at n=" + std::to_string(n));
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    void (*run)(Check&);
  };
  const Criterion criteria[] = {
      {"golden tables reproduced by the oracle, n <= 10", golden_tables},
      {"closed form, recurrence and generating functions agree with the oracle, n <= 12",
       method_agreement},
      {"21-1 series through t^20 by generating function and recurrence", series_21_1},
      {"refined recurrence arrays equal brute-force refinements, n <= 10", refined_tables},
      {"bijections certified by exhaustive round trip", bijections},
      {"series engine: sqrt, division, Motzkin, T identity, kernel roots", series_engine},
      {"classical equivalences, 11-1/1-11 refinement, run reversal", symmetries},
  };
  int failed = 0, index = 0;
  for (const auto& cr : criteria) {
    ++index;
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (c.failures ? "FAIL" : "PASS") << " " << index << " " << cr.title;
    std::cout.precision(2);
    std::cout << std::fixed << " (" << secs << "s)";
    if (c.failures) std::cout << ": " << c.failures << " failures, first: " << c.first.str();
    std::cout << "\n";
    failed += c.failures != 0;
  }
  return failed ? 1 : 0;
}

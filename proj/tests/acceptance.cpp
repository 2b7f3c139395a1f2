// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "oracle.hpp"
#include "sumprod/arith.hpp"
#include "sumprod/cli.hpp"
#include "sumprod/energy.hpp"
#include "sumprod/exactset.hpp"
#include "sumprod/extremal.hpp"
#include "sumprod/parallel.hpp"
#include "sumprod/theorems.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <thread>

using namespace sumprod;

namespace {

constexpr double kQuadratureRelTol = 1e-9;

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(const std::string& name, const std::function<Outcome()>& check) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::ostringstream line;
  line.precision(2);
  line << std::fixed << (o.pass ? "PASS " : "FAIL ") << name << " (" << o.detail << "; " << secs << " s)";
  std::cout << line.str() << std::endl;
}

// Counts items for which f returns false, in parallel.
template <typename T, typename F>
std::size_t count_bad(const std::vector<T>& items, F&& f) {
  const auto ok = parallel_map(items, workers(), [&](const T& x) { return f(x) ? 0 : 1; });
  return static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 1));
}

Outcome energy_paths() {
  const auto sets = oracle::subsets(1, 12, 1, 4);
  std::vector<std::pair<std::vector<long>, unsigned>> cases;
  for (const auto& s : sets)
    for (unsigned h : {2u, 3u}) cases.emplace_back(s, h);
  const std::size_t bad = count_bad(cases, [](const auto& c) {
    const FinSet a = oracle::ints(c.first);
    const BigInt en = energy(a, c.second, EnergyPath::enumerate);
    const BigInt cv = energy(a, c.second, EnergyPath::convolve);
    const long double q = quadrature_energy(a, WeightVector(a.size(), Rat(1)), c.second);
    const long double exact = en.convert_to<long double>();
    return en == cv && std::fabs(static_cast<double>((q - exact) / exact)) <= kQuadratureRelTol;
  });
  return {bad == 0, std::to_string(cases.size()) + " instances, " + std::to_string(bad) +
                        " mismatches, quadrature rel tol 1e-9"};
}

Outcome energy_values() {
  const FinSet a = oracle::ints({1, 2, 3});
  const FinSet b = oracle::ints({1, 2, 3, 6});
  const BigInt ea = energy(a, 2);
  const BigInt eb = energy(b, 2);
  const bool pass = ea == 19 && eb == 32 && oracle::energy(a, 2) == 19 && oracle::energy(b, 2) == 32;
  return {pass, "E({1,2,3},2)=" + ea.str() + ", E({1,2,3,6},2)=" + eb.str()};
}

Outcome lemma3_sweep() {
  std::vector<std::pair<std::vector<long>, unsigned>> cases;
  for (const auto& s : oracle::subsets(1, 12, 1, 4))
    for (unsigned h : {1u, 2u, 3u}) cases.emplace_back(s, h);
  const std::size_t bad = count_bad(cases, [](const auto& c) {
    return verify_lemma3(oracle::ints(c.first), c.second).status == Status::holds;
  });
  return {bad == 0, std::to_string(cases.size()) + " instances, " + std::to_string(bad) + " exceptions"};
}

Outcome prop10_sweep() {
  const auto sets = oracle::subsets(1, 30, 2, 5);
  const std::size_t bad = count_bad(sets, [](const std::vector<long>& s) {
    const FinSet a = oracle::ints(s);
    const std::string m = std::to_string(oracle::mult_dim(s));
    for (unsigned h : {2u, 3u}) {
      const Verdict v = verify_prop10(a, h);
      if (v.status != Status::holds || v.witness_value("m") != m) return false;
    }
    return true;
  });
  return {bad == 0, std::to_string(2 * sets.size()) + " instances, " + std::to_string(bad) + " bad sets"};
}

Outcome vector_identity() {
  const std::vector<long> ground{2, 3, 5, 6, 10, 15, 30};
  std::size_t checked = 0;
  std::size_t bad = 0;
  for (std::uint64_t mask = 1; mask < (1U << ground.size()); ++mask) {
    std::vector<long> s;
    for (std::size_t i = 0; i < ground.size(); ++i)
      if (mask >> i & 1U) s.push_back(ground[i]);
    const FinSet a = oracle::ints(s);
    const BigInt byvec = vector_simple_sum_count(a);
    ++checked;
    if (byvec != BigInt(oracle::simple(a, Op::product).size()) ||
        byvec != BigInt(simple_closure(a, Op::product).size()))
      ++bad;
  }
  return {checked == 127 && bad == 0, std::to_string(checked) + " sets, " + std::to_string(bad) + " mismatches"};
}

Outcome section3_example() {
  const FinSet a2 = es_example(2);
  const std::vector<long> v2{1, 2, 3, 6};
  const auto sums2 = oracle::simple(a2, Op::sum).size();
  const auto prods2 = oracle::simple(a2, Op::product).size();
  const bool j2 = a2 == oracle::ints(v2) && sums2 == 13 && prods2 == 7 && g_value(a2) == 20 &&
                  oracle::g_value(v2) == 20 && mult_dim(a2).dimension == 2;
  const FinSet a3 = es_example(3);
  const GParts p3 = g_parts(a3);
  const bool j3 = a3.size() == 27 && mult_dim(a3).dimension == 3 && p3.products_by_vectors == p3.products_by_values &&
                  g_value(a3) == p3.sums + p3.products_by_values;
  bool verdicts_ok = true;
  for (unsigned J : {2u, 3u})
    for (const Verdict& v : verify_section3(J, Rat(1, 10))) verdicts_ok = verdicts_ok && !v.failed();
  return {j2 && j3 && verdicts_ok, "J=2: |A[1]|=" + std::to_string(sums2) + " |A{1}|=" + std::to_string(prods2) +
                                       "; J=3: |A|=" + std::to_string(a3.size()) + " g=" +
                                       BigInt(p3.sums + p3.products_by_values).str()};
}

Outcome theorem1_powers() {
  std::size_t count = 0;
  std::size_t bad = 0;
  for (unsigned k = 4; k <= 10; ++k) {
    std::vector<long> s;
    for (unsigned i = 0; i < k; ++i) s.push_back(1L << i);
    for (unsigned h : {2u, 3u})
      for (const Verdict& v : verify_theorem1(oracle::ints(s), h)) {
        ++count;
        if (v.status != Status::holds) ++bad;
      }
  }
  return {bad == 0, std::to_string(count) + " verdicts, " + std::to_string(bad) + " not true"};
}

Outcome ruzsa_sweep() {
  const auto sets = oracle::subsets(1, 12, 1, 4);
  std::vector<std::size_t> idx(sets.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<FinSet> fs;
  for (const auto& s : sets) fs.push_back(oracle::ints(s));
  const std::size_t bad = count_bad(idx, [&](std::size_t i) {
    for (const FinSet& n : fs)
      for (auto [h, l] : {std::pair{1u, 1u}, {2u, 1u}, {2u, 2u}})
        if (verify_ruzsa(fs[i], n, h, l).status != Status::holds) return false;
    return true;
  });
  return {bad == 0, std::to_string(3 * sets.size() * sets.size()) + " instances, " + std::to_string(bad) +
                        " bad M sets"};
}

Outcome theorem3_sweep() {
  const auto sets = oracle::subsets(1, 8, 1, 3);
  std::size_t graphs = 0;
  for (const auto& s : sets) graphs += std::size_t{1} << (s.size() * s.size());
  const std::size_t bad = count_bad(sets, [](const std::vector<long>& s) {
    const FinSet a = oracle::ints(s);
    const std::size_t n = s.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
      std::vector<PairGraph::Edge> edges;
      for (std::size_t e = 0; e < n * n; ++e)
        if (mask >> e & 1U) edges.emplace_back(e / n, e % n);
      const Verdict v = verify_theorem3_chain(a, PairGraph(a, edges));
      const Status want = edges.empty() ? Status::hypothesis_not_met : Status::holds;
      if (v.status != want) return false;
    }
    return true;
  });
  return {bad == 0, std::to_string(graphs) + " graphs, " + std::to_string(bad) + " bad sets"};
}

Outcome search_oracle() {
  std::string detail;
  bool pass = true;
  for (Objective obj : {Objective::f, Objective::g}) {
    long best = -1;
    std::vector<std::vector<long>> certs;
    for (const auto& s : oracle::subsets(1, 20, 3, 3)) {
      const long v = obj == Objective::f ? oracle::f_value(s) : oracle::g_value(s);
      if (best < 0 || v < best) {
        best = v;
        certs.clear();
      }
      if (v == best) certs.push_back(s);
    }
    for (unsigned threads : {1u, 2u, 8u}) {
      const SearchResult r = search_min(obj, 3, 20, {threads, ""});
      pass = pass && r.complete && r.minimum == best && r.certificates == certs;
    }
    detail += std::string(detail.empty() ? "" : ", ") + to_string(obj) + " min " + std::to_string(best) + " with " +
              std::to_string(certs.size()) + " certificates";
  }
  return {pass, detail + ", threads 1/2/8"};
}

Outcome report_determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "sumprod_acceptance";
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& text) {
    const auto p = dir / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  };
  const std::string a = write("a.txt", "1\n2\n3\n5\n8\n13\n");
  const std::string b = write("b.txt", "2\n4\n8\n");
  const std::string w = write("w.txt", "1\n2\n1/3\n1\n3\n2\n");
  const std::string g = write("g.txt", "1 2\n2 3\n5 8\n13 13\n");
  const std::string p = write("p.txt", "1\n2 3\n3 2\n");
  const std::vector<std::vector<std::string>> runs = {
      {"verify", "theorem1", "--set", a, "--h", "2"},
      {"verify", "lemma3", "--set", a, "--h", "3"},
      {"verify", "prop9", "--set", a, "--weights", w},
      {"verify", "prop10", "--set", a},
      {"verify", "prop11", "--set", a},
      {"verify", "prop13", "--set", b, "--h", "2"},
      {"verify", "ruzsa", "--set", a, "--set2", b, "--h", "2", "--l", "2"},
      {"verify", "intro", "--set", a},
      {"verify", "theorem3", "--set", a, "--graph", g},
      {"verify", "section3", "--J", "3"},
      {"verify", "layers", "--set", a, "--primes", "2,3"},
      {"verify", "tail", "--set", a, "--p", "2", "--j", "1"},
      {"verify", "prop14", "--k", "100000", "--eps1", "1/4", "--set", b},
      {"verify", "dimchain", "--set", b, "--progression", p},
      {"search", "--objective", "g", "--k", "4", "--max", "14"},
  };
  std::size_t identical = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    std::string contents[2];
    for (int rep = 0; rep < 2; ++rep) {
      const std::string path = (dir / ("report" + std::to_string(i) + "_" + std::to_string(rep) + ".json")).string();
      auto args = runs[i];
      args.insert(args.end(), {"--report", path, "--threads", rep == 0 ? "1" : "8"});
      std::ostringstream out;
      std::ostringstream err;
      const int code = cli::run(args, out, err);
      if (code != 0 && code != 2) return {false, "run " + std::to_string(i) + " exited " + std::to_string(code) + ": " + err.str()};
      std::ifstream f(path, std::ios::binary);
      std::stringstream s;
      s << f.rdbuf();
      contents[rep] = s.str();
    }
    if (!contents[0].empty() && contents[0] == contents[1]) ++identical;
  }
  return {identical == runs.size(),
          std::to_string(identical) + "/" + std::to_string(runs.size()) + " report pairs byte-identical"};
}

}  // namespace

int main() {
  report("energy paths agree (enumerate = convolve, quadrature within 1e-9)", energy_paths);
  report("energy values 19 and 32 match the tuple oracle", energy_values);
  report("Cauchy-Schwarz energy chain sweep", lemma3_sweep);
  report("energy bound by multiplicative dimension sweep", prop10_sweep);
  report("exponent-vector count equals simple-product count on 127 sets", vector_identity);
  report("prime-grid example at J = 2 and J = 3", section3_example);
  report("small product set theorem on powers of two", theorem1_powers);
  report("Ruzsa inequality sweep", ruzsa_sweep);
  report("restricted sumset chain over all graphs", theorem3_sweep);
  report("search matches the plain oracle at 1, 2 and 8 threads", search_oracle);
  report("report files are byte-identical across runs", report_determinism);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}

// Acceptance suite: one line per criterion, every tolerance pinned here.
// All equality checks are exact; timing caps are asserted as stated.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ptcat/catext.hpp"
#include "ptcat/category_io.hpp"
#include "ptcat/dhr.hpp"
#include "ptcat/fusion.hpp"
#include "ptcat/lattice.hpp"
#include "ptcat/models.hpp"

using namespace ptcat;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void criterion(int number, const std::string& name, bool pass, double seconds,
               const std::string& note = "") {
  std::printf("%s criterion %d: %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", number,
              name.c_str(), seconds, note.empty() ? "" : " -- ", note.c_str());
  if (!pass) ++g_failures;
}

struct Fixture {
  std::string name;
  IntMat gram;
};

const IntMat kE8 = {
    {2, 0, -1, 0, 0, 0, 0, 0}, {0, 2, 0, -1, 0, 0, 0, 0}, {-1, 0, 2, -1, 0, 0, 0, 0},
    {0, -1, -1, 2, -1, 0, 0, 0}, {0, 0, 0, -1, 2, -1, 0, 0}, {0, 0, 0, 0, -1, 2, -1, 0},
    {0, 0, 0, 0, 0, -1, 2, -1}, {0, 0, 0, 0, 0, 0, -1, 2}};

std::vector<Fixture> fixtures() {
  return {
      {"A1", {{2}}},
      {"A1-negative", {{-2}}},
      {"A2", {{2, -1}, {-1, 2}}},
      {"Z4", {{4}}},
      {"Z6", {{6}}},
      {"Z8", {{8}}},
      {"Z10", {{10}}},
      {"Z12", {{12}}},
      {"Z14", {{14}}},
      {"Z16", {{16}}},
      {"diag22", {{2, 0}, {0, 2}}},
      {"det5", {{2, 3}, {3, 2}}},
      {"det9-cyclic", {{2, 5}, {5, 8}}},
      {"A2+A2", {{2, -1, 0, 0}, {-1, 2, 0, 0}, {0, 0, 2, -1}, {0, 0, -1, 2}}},
      {"det12", {{2, 0}, {0, 6}}},
      {"diag44", {{4, 0}, {0, 4}}},
      {"hyperbolic", {{0, 1}, {1, 0}}},
      {"E8", kE8},
  };
}

bool det_coverage_ok() {
  std::set<long> need{1, 2, 3, 4, 5, 8, 9, 12, 16};
  std::set<long> have;
  for (const auto& f : fixtures()) {
    Integer d = abs(GramMatrix(f.gram).determinant());
    if (d.fits_slong_p()) have.insert(d.get_si());
  }
  for (long d : need)
    if (!have.count(d)) return false;
  return true;
}

// Test-local rational oracle on machine integers, independent of the
// library's arithmetic path.
struct Frac {
  long long num, den;
  static long long gcd(long long a, long long b) { return b ? gcd(b, a % b) : (a < 0 ? -a : a); }
  static Frac make(long long n, long long d) {
    long long g = gcd(n, d);
    if (g == 0) g = 1;
    if (d < 0) g = -g;
    return {n / g, d / g};
  }
  bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
  bool operator<(const Frac& o) const { return num * o.den < o.num * den; }
};

bool run_cli(const std::string& args, int expected_exit, std::string* output = nullptr) {
  std::string cmd = std::string(PTCAT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return false;
  std::string out;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  int status = pclose(pipe);
  if (output) *output = out;
  return WIFEXITED(status) && WEXITSTATUS(status) == expected_exit;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/ptcat_acceptance_") + name;
  FILE* f = std::fopen(path.c_str(), "wb");
  std::fwrite(content.data(), 1, content.size(), f);
  std::fclose(f);
  return path;
}

void criterion1_and_2_and_6() {
  Timer t1;
  bool coherence = det_coverage_ok();
  std::map<std::string, FusionData> built;
  std::string note;
  for (const auto& f : fixtures()) {
    try {
      FusionData d = build_pointed_mtc(GramMatrix(f.gram));
      bool ok = verify_fusion_ring(d).ok() && verify_pentagon(d).ok() &&
                verify_hexagon(d).ok() && verify_ribbon(d).ok();
      if (!ok) {
        coherence = false;
        note = f.name;
      }
      built.emplace(f.name, std::move(d));
    } catch (const std::exception& e) {
      coherence = false;
      note = f.name + ": " + e.what();
    }
  }
  double t1s = t1.seconds();
  criterion(1, "lattice builder coherence (ring/pentagon/hexagon/ribbon, exhaustive)",
            coherence && t1s < 10.0, t1s, note);

  Timer t2;
  bool modular = true;
  for (const auto& [name, d] : built) {
    if (!verlinde_check(d).ok() || !modular_relation_check(d).ok()) {
      modular = false;
      note = name;
    }
  }
  double t2s = t2.seconds();
  criterion(2, "modular data (S-transposes, Verlinde, (ST)^3 = g S^2)", modular && t2s < 5.0,
            t2s, note);

  Timer t6;
  bool hex = true;
  for (const auto& f : fixtures()) {
    auto model = build_pointed_model(GramMatrix(f.gram));
    Report derived = hexagon_derivation_suite(model);
    Report direct = verify_hexagon(model->category);
    if (!derived.ok() || !direct.ok()) {
      hex = false;
      note = f.name;
    }
  }
  double t6s = t6.seconds();
  criterion(6, "hexagon derivation agrees with the hexagon validator on every triple",
            hex, t6s, note);
}

void criterion3() {
  Timer t;
  bool ok = true;
  auto m3 = minimal_model(3);
  ok = ok && m3.central_charge == Rational(1, 2);
  std::multiset<std::pair<long long, long long>> weights;
  for (const auto& e : m3.reduced) weights.insert({e.h.get_num().get_si(), e.h.get_den().get_si()});
  ok = ok && weights == std::multiset<std::pair<long long, long long>>{{0, 1}, {1, 16}, {1, 2}};

  auto m4 = minimal_model(4);
  ok = ok && m4.central_charge == Rational(7, 10);
  bool found = false;
  for (const auto& e : m4.entries)
    if (e.r == 2 && e.s == 2) found = e.h == Rational(3, 80);
  ok = ok && found;

  // Independent oracle for every table entry.
  for (long m : {2L, 3L, 4L}) {
    auto table = minimal_model(m);
    for (const auto& e : table.entries) {
      long long top = (m + 1) * e.r - m * e.s;
      Frac expect = Frac::make(top * top - 1, 4 * m * (m + 1));
      ok = ok && e.h == Rational(static_cast<long>(expect.num)) /
                            Rational(static_cast<long>(expect.den));
    }
  }
  criterion(3, "minimal-model table (m=3, m=4) against the independent oracle", ok,
            t.seconds());
}

void criterion4_and_5_and_7() {
  Timer t4;
  bool axioms = true;
  std::string note;
  std::vector<Fixture> small;
  for (const auto& f : fixtures())
    if (abs(GramMatrix(f.gram).determinant()) <= 12) small.push_back(f);
  std::vector<std::shared_ptr<const PointedModel>> models;
  for (const auto& f : small) {
    auto model = build_pointed_model(GramMatrix(f.gram));
    models.push_back(model);
    Report rep = catext_axiom_suite(model);
    if (!rep.ok()) {
      axioms = false;
      note = f.name + ": " + rep.violations.front().check;
    }
  }
  double t4s = t4.seconds();
  criterion(4, "categorical-extension axioms, exhaustive over sectors and configurations",
            axioms && t4s < 30.0, t4s, note);

  Timer t5;
  auto z4 = build_pointed_model(GramMatrix(IntMat{{4}}));
  auto z3 = build_pointed_model(GramMatrix(IntMat{{2, -1}, {-1, 2}}));
  Report c1 = confluence_trials(z4, 1000, 6, 7);
  Report c2 = confluence_trials(z3, 1000, 6, 11);
  double t5s = t5.seconds();
  criterion(5, "confluence of word rewrites (>= 1000 seeded words each on Z/4 and Z/3)",
            c1.ok() && c2.ok() && t5s < 20.0, t5s);

  Timer t7;
  bool dhr_ok = true;
  for (std::size_t i = 0; i < small.size(); ++i) {
    DhrContext ctx{models[i]};
    Report rep = verify_statistics_braiding(ctx, 10, 17);
    if (!rep.ok()) {
      dhr_ok = false;
      note = small[i].name + ": " + rep.violations.front().check;
    }
  }
  double t7s = t7.seconds();
  criterion(7, "statistics operator equals the braiding, choice-independent", dhr_ok && t7s < 10.0,
            t7s, note);
}

void criterion8() {
  Timer t;
  FusionData base = build_pointed_mtc(GramMatrix(IntMat{{2}}));
  auto caught_with_location = [](const FusionData& d) {
    for (const auto& rep : verify_all(d))
      if (!rep.ok()) return !rep.violations.front().location.empty();
    return false;
  };

  bool ok = true;
  {  // 1. associator sign
    FusionData d = base;
    d.f_symbols[{1, 1, 1, 1, 0, 0}] = -d.f_symbols[{1, 1, 1, 1, 0, 0}];
    ok = ok && caught_with_location(d);
  }
  {  // 2. braiding conjugated
    FusionData d = base;
    d.r_symbols[{1, 1, 0}] = d.r_symbols[{1, 1, 0}].conj();
    ok = ok && caught_with_location(d);
  }
  {  // 3. twist reset
    FusionData d = base;
    d.twists[1] = Cyc::one();
    ok = ok && caught_with_location(d);
  }
  {  // 4. fusion channel removed
    FusionData d = base;
    d.fusion[(1 * 2 + 1) * 2 + 0] = 0;
    ok = ok && caught_with_location(d);
  }
  {  // 5. spurious fusion channel
    FusionData d = base;
    d.fusion[(1 * 2 + 1) * 2 + 1] = 1;
    ok = ok && caught_with_location(d);
  }
  {  // 6. unit-gauge associator entry
    FusionData d = base;
    d.f_symbols[{0, 1, 1, 0, 1, 0}] = -d.f_symbols[{0, 1, 1, 0, 1, 0}];
    ok = ok && caught_with_location(d);
  }
  criterion(8, "six single-entry mutations of the order-two fixture are each caught", ok,
            t.seconds());
}

void criterion9() {
  Timer t;
  bool ok = true;
  std::string note;

  // Round trip: emit, re-verify, re-emit byte-identically.
  std::string emitted;
  ok = ok && run_cli("lattice --gram \"2\" --emit /tmp/ptcat_acceptance_semion.json", 0);
  FILE* f = std::fopen("/tmp/ptcat_acceptance_semion.json", "rb");
  if (f) {
    char buf[1 << 16];
    std::size_t got = std::fread(buf, 1, sizeof buf, f);
    emitted.assign(buf, got);
    std::fclose(f);
  } else {
    ok = false;
  }
  ok = ok && run_cli("verify /tmp/ptcat_acceptance_semion.json", 0);
  FusionData parsed = parse_category(emitted);
  ok = ok && emit_category(parsed) == emitted;
  if (!ok) note = "round trip";

  // Exit code contract.
  bool codes = true;
  codes = codes && run_cli("lattice --gram \"2 -1; -1 2\"", 0);
  std::string gpath = write_temp("gram.txt", "2 -1; -1 2\n");
  codes = codes && run_cli("lattice --gram-file " + gpath, 0);
  codes = codes && run_cli("lattice --gram \"1\"", 2);              // odd lattice
  codes = codes && run_cli("lattice --gram \"2 2; 2 2\"", 2);      // singular
  codes = codes && run_cli("verify /nonexistent.json", 2);
  codes = codes && run_cli("minimal-model --m 3", 0);
  codes = codes && run_cli("minimal-model --m 1", 2);
  codes = codes && run_cli("catext --gram \"4\" --max-len 6 --trials 50 --seed 7", 0);
  codes = codes && run_cli("dhr --gram \"2\"", 0);
  codes = codes && run_cli("bogus-subcommand", 2);

  // Mutated file fails verification with exit 1 and names the tuple.
  FusionData mutated = parse_category(emitted);
  mutated.r_symbols[{1, 1, 0}] = mutated.r_symbols[{1, 1, 0}].conj();
  std::string mpath = write_temp("mutated.json", emit_category(mutated));
  std::string out;
  codes = codes && run_cli("verify " + mpath, 1, &out);
  codes = codes && out.find("(1,1") != std::string::npos;

  // Malformed file (unit names an undeclared label): exit 2.
  std::string bad = emitted;
  auto pos = bad.find("\"unit\": \"0\"");
  bad.replace(pos, 11, "\"unit\": \"9\"");
  std::string bpath = write_temp("malformed.json", bad);
  codes = codes && run_cli("verify " + bpath, 2);

  // Determinism of seeded runs.
  std::string run_a, run_b;
  codes = codes && run_cli("catext --gram \"4\" --trials 100 --seed 5 --format json", 0, &run_a);
  codes = codes && run_cli("catext --gram \"4\" --trials 100 --seed 5 --format json", 0, &run_b);
  codes = codes && run_a == run_b;

  if (ok && !codes) note = "exit codes";
  criterion(9, "CLI round trip, exit-code contract, deterministic reports", ok && codes,
            t.seconds(), note);
}

}  // namespace

int main() {
  Timer total;
  criterion1_and_2_and_6();
  criterion3();
  criterion4_and_5_and_7();
  criterion8();
  criterion9();
  double ts = total.seconds();
  bool in_budget = ts < 90.0;
  std::printf("%s total wall clock %.2fs (budget 90s)\n", in_budget ? "PASS" : "FAIL", ts);
  if (!in_budget) ++g_failures;
  return g_failures == 0 ? 0 : 1;
}

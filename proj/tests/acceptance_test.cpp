#include <gtest/gtest.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>

#include "support.hpp"

using namespace torsionlab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::map<int, Outcome> outcomes;

void record(int criterion, bool pass, std::string detail) { outcomes[criterion] = {pass, std::move(detail)}; }

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun cli(const std::string& args) {
  CliRun r;
  std::string cmd = std::string(TORSIONLAB_CLI) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) r.out.append(buf.data(), n);
  int raw = pclose(pipe.release());
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

constexpr std::uint64_t kSeed = 42;
constexpr std::size_t kInstances = 500;

std::vector<HarnessInstance> harness_instances() {
  std::vector<HarnessInstance> out;
  for (std::size_t i = 0; i < kInstances; ++i) out.push_back(draw_instance(kSeed, i));
  return out;
}

std::vector<HarnessInstance> artinian_instances(std::size_t count) {
  std::vector<HarnessInstance> out;
  for (std::size_t i = 0; out.size() < count; ++i) {
    auto inst = draw_instance(kSeed, i);
    if (inst.artinian) out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace

TEST(Acceptance, PropositionSuite) {
  Stopwatch clock;
  HarnessConfig cfg;
  cfg.instances = kInstances;
  cfg.seed = kSeed;
  auto rep = proposition_harness(cfg);
  double t = clock.seconds();
  bool ok = rep.instances >= 500 && rep.violations.empty() && t <= 60.0;
  record(1, ok,
         std::to_string(rep.instances) + " instances, " + std::to_string(rep.violations.size()) + " violations, " +
             std::to_string(rep.checked.size()) + " properties, " + fixed(t) + " s (limit 60 s)");
  for (auto& v : rep.violations) ADD_FAILURE() << v.property << ": " << v.detail << "\n" << v.script;
  EXPECT_TRUE(ok);
}

TEST(Acceptance, NoetherianFairness) {
  std::size_t good = 0, bad = 0, exceptions = 0;
  for (auto& inst : artinian_instances(kInstances)) {
    try {
      auto r = fairness_report(inst.a, inst.b);
      bool ok = r.all_verdicts() && r.centred_witness_ok && r.half_centred_witness_ok && r.torsion.functors_agree &&
                r.sets.complete;
      (ok ? good : bad)++;
      if (!ok) ADD_FAILURE() << instance_script(inst);
    } catch (const std::exception& e) {
      ++exceptions;
      ADD_FAILURE() << e.what() << "\n" << instance_script(inst);
    }
  }
  bool ok = good == kInstances && bad == 0 && exceptions == 0;
  record(2, ok,
         std::to_string(good) + "/" + std::to_string(kInstances) + " artinian pairs fair, " + std::to_string(exceptions) +
             " exceptions");
  EXPECT_TRUE(ok);
}

TEST(Acceptance, OracleEquivalence) {
  std::size_t compared = 0, disagreements = 0;
  for (std::size_t i = 0; compared < 150; ++i) {
    auto inst = draw_instance(kSeed + 1, i);
    if (support::lcm_degree(inst.b) > 6 || support::lcm_degree(inst.c) > 6) continue;
    auto ob = support::to_oracle(inst.b), oa = support::to_oracle(inst.a), oc = support::to_oracle(inst.c);
    auto check = [&](bool same, const char* what) {
      if (same) return;
      ++disagreements;
      ADD_FAILURE() << what << "\n" << instance_script(inst);
    };
    check(support::lifted(ideal_colon_ideal(inst.b, inst.c)) == oracle::colon(ob, oc).gens, "colon");
    check(support::lifted(ideal_saturation(inst.b, inst.a).ideal) == oracle::saturation(ob, oa).gens, "saturation");
    check(support::lifted(ideal_radical(inst.b)) == oracle::radical(ob).gens, "radical");
    if (!inst.b.is_unit()) {
      PrimeSet mp;
      for (auto& p : minimal_primes(inst.b)) mp.insert(p);
      check(support::to_oracle(mp) == oracle::minimal_primes(ob), "minimal primes");
    }
    auto got = assassins_cyclic({inst.b}, default_witness_bound(inst.b));
    auto expect = oracle::assassins(ob, oracle::unit(ob.n));
    check(got.ass.complete && support::to_oracle(got.ass.primes) == expect.ass, "assassin");
    check(support::to_oracle(got.assf.primes) == expect.assf, "weak assassin");
    ++compared;
  }
  bool ok = compared >= 100 && disagreements == 0;
  record(3, ok, std::to_string(compared) + " instances, " + std::to_string(disagreements) + " disagreements");
  EXPECT_TRUE(ok);
}

TEST(Acceptance, ExampleReplication) {
  Stopwatch clock;
  const std::vector<std::string> tags = {"idem50A", "idem50C", "nil40A", "nil40B", "nil40C", "nil40D"};
  const std::map<std::string, std::vector<std::string>> required = {
      {"nil40A", {"ring_torsion_probe", "quotient_generators_torsion", "unit_not_torsion_mod_b"}},
      {"idem50C", {"colon_by_a_probe", "colon_by_x0_inside_a"}},
      {"nil40B", {"generators_torsion", "unit_not_torsion_probe"}},
      {"nil40C", {"generators_torsion", "unit_not_torsion_probe"}}};
  std::size_t claims = 0, passing = 0;
  bool ok = true;
  for (auto& tag : tags) {
    auto run = cli("examples --run " + tag + " --levels 4..10 --window 3 --format json");
    if (run.status != 0) {
      ok = false;
      ADD_FAILURE() << tag << " exited with " << run.status;
    }
    auto report = Json::parse(run.out, nullptr, false);
    if (report.is_discarded()) {
      ok = false;
      continue;
    }
    const auto& res = report["statements"][0]["result"];
    std::set<std::string> names;
    for (auto& c : res["claims"]) {
      ++claims;
      names.insert(c["name"].get<std::string>());
      bool pass = c["verdict"] == "PASS" && c["stable"] == true && c["values"].size() == 7;
      passing += pass;
      if (!pass) {
        ok = false;
        ADD_FAILURE() << tag << " " << c["name"];
      }
    }
    if (auto it = required.find(tag); it != required.end())
      for (auto& name : it->second)
        if (!names.count(name)) {
          ok = false;
          ADD_FAILURE() << tag << " lacks claim " << name;
        }
  }
  double t = clock.seconds();
  ok = ok && t <= 120.0;
  record(4, ok,
         std::to_string(passing) + "/" + std::to_string(claims) + " windowed claims PASS and stable over " +
             std::to_string(tags.size()) + " tags, " + fixed(t) + " s (limit 120 s)");
  EXPECT_TRUE(ok);
}

TEST(Acceptance, Confluence) {
  std::vector<std::pair<FamilySpec, Schedule>> families;
  for (auto& entry : example_registry()) families.emplace_back(entry.family(), default_schedule());
  for (auto& name : support::shipped_scripts()) {
    auto script = dsl::parse(support::read_file(support::script_path(name)));
    std::map<std::string, FamilySpec> specs;
    for (auto& st : script.statements) {
      if (auto* f = std::get_if<FamilySpec>(&st.node)) specs[f->name] = *f;
      if (auto* s = std::get_if<dsl::ScheduleStmt>(&st.node))
        families.emplace_back(specs.at(s->family),
                              Schedule::range(s->levels.lo, s->levels.hi, static_cast<std::size_t>(s->window.value_or(3))));
    }
  }
  std::size_t instances = 0, failing = 0, pairs = 0;
  for (auto& [fam, schedule] : families)
    for (auto n : schedule.levels) {
      ++instances;
      try {
        auto rep = check_local_confluence(instantiate(fam, n).ring, 8);
        pairs += rep.pairs.size();
        if (!rep.all_joinable || rep.non_joinable() != 0) {
          ++failing;
          ADD_FAILURE() << fam.name << " at " << n;
        }
      } catch (const std::exception& e) {
        ++failing;
        ADD_FAILURE() << fam.name << " at " << n << ": " << e.what();
      }
    }
  bool ok = failing == 0 && instances > 0;
  record(5, ok,
         std::to_string(instances) + " family instances, " + std::to_string(pairs) + " critical pairs, " +
             std::to_string(failing) + " not joinable to degree 8");
  EXPECT_TRUE(ok);
}

TEST(Acceptance, RadicalityProbe) {
  auto corpus = harness_instances();
  for (auto& inst : artinian_instances(kInstances)) corpus.push_back(inst);
  std::size_t large_fail = 0, small_fail = 0, artinian = 0, exceptions = 0;
  for (auto& inst : corpus) {
    try {
      auto e = radical_probe(inst.a, {inst.b}).front();
      if (!e.large_radical) {
        ++large_fail;
        ADD_FAILURE() << "large torsion not radical\n" << instance_script(inst);
      }
      if (inst.artinian) {
        ++artinian;
        if (!e.small_radical) {
          ++small_fail;
          ADD_FAILURE() << "small torsion not radical\n" << instance_script(inst);
        }
      }
    } catch (const std::exception& e) {
      ++exceptions;
      ADD_FAILURE() << e.what();
    }
  }
  bool ok = large_fail == 0 && small_fail == 0 && exceptions == 0;
  record(6, ok,
         "large torsion radical on " + std::to_string(corpus.size() - large_fail) + "/" + std::to_string(corpus.size()) +
             ", small torsion radical on " + std::to_string(artinian - small_fail) + "/" + std::to_string(artinian) +
             " artinian instances");
  EXPECT_TRUE(ok);
}

TEST(Acceptance, DeterminismAndRoundTrip) {
  std::vector<std::string> runs;
  for (auto& name : support::shipped_scripts()) runs.push_back("run " + support::script_path(name));
  runs.push_back("harness --instances 200 --seed 7");
  runs.push_back("examples --run nil40D --levels 4..8 --window 3");
  std::size_t identical = 0, compared = 0;
  for (auto& args : runs)
    for (auto* format : {"text", "json"}) {
      auto one = cli(args + " --format " + format);
      auto two = cli(args + " --format " + format);
      ++compared;
      if (one.out == two.out && one.status == two.status && !one.out.empty())
        ++identical;
      else
        ADD_FAILURE() << "outputs differ: " << args << " " << format;
    }
  std::size_t fixpoints = 0;
  for (auto& name : support::shipped_scripts()) {
    auto first = dsl::parse(support::read_file(support::script_path(name)));
    auto text = dsl::print(first);
    auto second = dsl::parse(text);
    if (first == second && dsl::print(second) == text)
      ++fixpoints;
    else
      ADD_FAILURE() << "round trip changed " << name;
  }
  bool ok = identical == compared && fixpoints == support::shipped_scripts().size();
  record(7, ok,
         std::to_string(identical) + "/" + std::to_string(compared) + " repeated runs byte-identical, " +
             std::to_string(fixpoints) + "/" + std::to_string(support::shipped_scripts().size()) +
             " scripts at a print fixpoint");
  EXPECT_TRUE(ok);
}

int main(int argc, char** argv) {
  testing::InitGoogleTest(&argc, argv);
  int status = RUN_ALL_TESTS();
  std::cout << "\nacceptance summary\n";
  for (int k = 1; k <= 7; ++k) {
    auto it = outcomes.find(k);
    if (it == outcomes.end()) {
      std::cout << "criterion " << k << ": NOT RUN\n";
      continue;
    }
    std::cout << "criterion " << k << ": " << (it->second.pass ? "PASS" : "FAIL") << "  " << it->second.detail << "\n";
  }
  return status;
}

// Acceptance suite: runs every gate criterion at its stated size and budget
// and prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <string>

#include "boxmod/checks.hpp"

using namespace boxmod;
using Q = Rational;
using Box = BoxModule<Q>;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(int number, const std::string& name, bool pass, double seconds, double budget,
            const std::string& detail) {
  bool in_budget = seconds < budget;
  bool ok = pass && in_budget;
  if (!ok) ++g_failures;
  std::printf("[%s] criterion %2d: %-34s  (%.2fs / %.0fs budget)%s%s\n", ok ? "PASS" : "FAIL",
              number, name.c_str(), seconds, budget,
              detail.empty() ? "" : "  -- ", detail.c_str());
}

std::string summarize(const CheckReport& rep) {
  std::string s = std::to_string(rep.run) + " run, " + std::to_string(rep.skipped) + " skipped";
  if (rep.failures > 0) {
    s += ", " + std::to_string(rep.failures) + " FAILED; first: " + rep.failure_list[0].detail +
         " (seed " + std::to_string(rep.failure_list[0].seed) + ")";
  }
  if (!rep.notes.empty()) s += ", " + std::to_string(rep.notes.size()) + " reported notes";
  return s;
}

CheckReport run_named(const std::vector<CheckDef>& reg, const std::string& name, int count,
                      std::uint64_t base_seed) {
  const CheckDef* def = find_check<Q>(reg, name);
  if (!def) throw std::logic_error("missing check " + name);
  return run_check<Q>(*def, count, base_seed);
}

}  // namespace

int main() {
  auto reg = check_registry<Q>();

  // 1. worked quotient example: dim(J/I) = 2, dim(sqrt J / sqrt I) = 1
  {
    Timer t;
    auto I = MonomialIdeal::from_generators(
        4, {{4, 0, 0, 4}, {2, 3, 0, 0}, {0, 3, 2, 0}, {0, 3, 0, 1}});
    auto J = MonomialIdeal::from_generators(4, {{3, 0, 0, 3}, {3, 1, 0, 0}, {0, 2, 0, 0}});
    Box m = Box::from_ideal_pair(I, J, BoundVector{4, 3, 2, 4});
    Box r = Box::from_ideal_pair(I.radical(), J.radical(), BoundVector(ExponentVector::ones(4)));
    int dm = krull_dim(m), dr = krull_dim(r);
    bool pass = (dm == 2) && (dr == 1) && (annihilator_and_dim(m).dim == 2) &&
                (annihilator_and_dim(r).dim == 1);
    report(1, "quotient example dimensions", pass, t.seconds(), 5.0,
           "dim(J/I)=" + std::to_string(dm) + ", dim(sqrt)=" + std::to_string(dr));
  }

  // 2. direct-sum example: equidimensionality is lost under r*
  {
    Timer t;
    CheckReport rep = paper_examples<Q>();
    report(2, "direct-sum example, Ass and equidim", rep.ok(), t.seconds(), 5.0, summarize(rep));
  }

  // 3. Betti and depth comparison under r*
  {
    Timer t;
    CheckReport rep = run_named(reg, "bettiradical", 200, 30000);
    CheckReport rep2 = run_named(reg, "extensionHHT", 100, 31000);
    report(3, "betti/depth under r*", rep.ok() && rep2.ok(), t.seconds(), 300.0,
           summarize(rep) + " | pairs: " + summarize(rep2));
  }

  // 4. the two radical routes and the hilbert support of r* on ideals
  {
    Timer t;
    CheckReport rep = run_named(reg, "classicradical", 500, 40000);
    report(4, "radical routes agree", rep.ok(), t.seconds(), 60.0, summarize(rep));
  }

  // 5. Koszul-strand Betti tables versus the Taylor oracle
  {
    Timer t;
    CheckReport rep = run_named(reg, "taylor", 100, 50000);
    report(5, "koszul equals taylor oracle", rep.ok(), t.seconds(), 300.0, summarize(rep));
  }

  // 6. radicalized resolutions
  {
    Timer t;
    CheckReport rep = run_named(reg, "resol", 100, 60000);
    report(6, "radicalized resolutions", rep.ok(), t.seconds(), 300.0, summarize(rep));
  }

  // 7. CM and sequentially CM transfer (random + constructed fixtures)
  {
    Timer t;
    CheckReport rep = run_named(reg, "cm", 120, 70000);
    CheckReport rep2 = run_named(reg, "cmextend", 100, 71000);
    bool fixtures = true;
    {
      // S/(x^2, xy): sequentially CM, not CM; radical S/(x) is CM
      Box m = Box::from_ideal_pair(MonomialIdeal::from_generators(2, {{2, 0}, {1, 1}}),
                                   MonomialIdeal::unit(2), BoundVector{2, 1});
      Classification c = classify(m), cr = classify(pullback_r(m));
      fixtures = fixtures && !c.is_cm && c.is_seq_cm && cr.is_cm && cr.is_seq_cm;
      // nonpure shellable Stanley-Reisner quotient: sequentially CM, squarefree
      Box sh = Box::from_ideal_pair(MonomialIdeal::from_generators(4, {{0, 1, 0, 1}, {0, 0, 1, 1}}),
                                    MonomialIdeal::unit(4),
                                    BoundVector(ExponentVector::ones(4)));
      Classification cs = classify(sh), csr = classify(pullback_r(sh));
      fixtures = fixtures && cs.is_seq_cm && !cs.is_cm && csr.is_seq_cm;
    }
    bool enough = rep.run >= 10;  // effective (non-skipped) CM/seq-CM instances
    report(7, "CM and seq-CM transfer", rep.ok() && rep2.ok() && fixtures && enough, t.seconds(),
           300.0, summarize(rep) + " | pairs: " + summarize(rep2) +
                      (fixtures ? "" : " | FIXTURES FAILED") + (enough ? "" : " | TOO FEW EFFECTIVE"));
  }

  // 8. Ext comparisons, both forms, all homological degrees
  {
    Timer t;
    CheckReport rep = run_named(reg, "ext_a", 50, 80000);
    CheckReport rep2 = run_named(reg, "ext_b", 50, 81000);
    CheckReport rep3 = run_named(reg, "ext_2", 60, 82000);
    report(8, "ext windows against the canonical module", rep.ok() && rep2.ok() && rep3.ok(),
           t.seconds(), 600.0,
           summarize(rep) + " | " + summarize(rep2) + " | omega: " + summarize(rep3));
  }

  // 9. Alexander duality and the Auslander-Reiten composites
  {
    Timer t;
    CheckReport a = run_named(reg, "r_and_A", 100, 90000);
    CheckReport d = run_named(reg, "r_and_D", 100, 91000);
    CheckReport a1 = run_named(reg, "art_1", 100, 92000);
    CheckReport a2 = run_named(reg, "art_2", 100, 93000);
    bool ok = a.ok() && d.ok() && a1.ok() && a2.ok();
    report(9, "duality composites", ok, t.seconds(), 300.0,
           summarize(a) + " | " + summarize(d) + " | " + summarize(a1) + " | " + summarize(a2));
  }

  // 10. property floor: the inline validators are active and instances are
  // deterministic from their seed
  {
    Timer t;
    bool ok = true;
    std::string detail;
    // a non-commuting square must be rejected at construction
    try {
      Window w = Window::box(ExponentVector{1, 1});
      std::vector<int> dims = {1, 1, 1, 1};
      std::vector<DenseMatrix<Q>> edges(8);
      auto at = [&](int x, int y) { return w.index_of(ExponentVector{x, y}); };
      edges[at(0, 0) * 2 + 0] = DenseMatrix<Q>::identity(1);
      edges[at(0, 0) * 2 + 1] = DenseMatrix<Q>::identity(1);
      edges[at(1, 0) * 2 + 1] = DenseMatrix<Q>::identity(1);
      edges[at(0, 1) * 2 + 0] = DenseMatrix<Q>::identity(1).scaled(Q(2));
      Box bad(w, dims, edges, true);
      ok = false;
      detail = "non-commuting square accepted";
    } catch (const std::invalid_argument&) {
    }
    // d.d != 0 must be rejected
    try {
      DenseMatrix<Q> one(1, 1);
      one(0, 0) = Q(1);
      MonomialMatrix<Q> d1({ExponentVector{0}}, {ExponentVector{1}}, one);
      MonomialMatrix<Q> d2({ExponentVector{1}}, {ExponentVector{2}}, one);
      FreeComplex<Q> cx({ExponentVector{0}}, {d1, d2});
      ok = false;
      detail = "complex with d.d != 0 accepted";
    } catch (const std::invalid_argument&) {
    }
    // determinism from the seed, across every instance kind
    for (std::uint64_t seed = 100000; seed < 100040 && ok; ++seed) {
      Rng r1(seed), r2(seed);
      InstanceCaps caps(1, 4, 3);
      ParsedInput i1 = random_instance(r1, caps, module_kind_for(seed));
      ParsedInput i2 = random_instance(r2, caps, module_kind_for(seed));
      if (i1.text() != i2.text()) {
        ok = false;
        detail = "instance generation not deterministic at seed " + std::to_string(seed);
      }
      Box b1 = i1.build_module<Q>();
      if (!compare_graded(b1, i2.build_module<Q>()).equal) {
        ok = false;
        detail = "module build not deterministic at seed " + std::to_string(seed);
      }
    }
    report(10, "property floor", ok, t.seconds(), 60.0, detail);
  }

  if (g_failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}

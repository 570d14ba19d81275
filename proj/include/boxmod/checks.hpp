#pragma once

// The theorem-verification harness: one named check per result, each run on
// deterministic random instances. A failing instance serializes to a
// standalone reproduction (its CLI text plus the seed). Checks whose result
// has a hypothesis (a filter on instances) count skipped instances
// separately; zero failures is always the expected outcome.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "boxmod/classify.hpp"
#include "boxmod/ext.hpp"
#include "boxmod/functors.hpp"
#include "boxmod/koszul.hpp"
#include "boxmod/module_invariants.hpp"
#include "boxmod/random_instances.hpp"
#include "boxmod/resolution.hpp"

namespace boxmod {

struct InstanceOutcome {
  enum class Verdict { pass, fail, skip } verdict = Verdict::pass;
  std::string detail;
  std::vector<std::string> notes;

  static InstanceOutcome pass() { return {}; }
  static InstanceOutcome skip(std::string why) {
    return {Verdict::skip, std::move(why), {}};
  }
  static InstanceOutcome fail(std::string why) {
    return {Verdict::fail, std::move(why), {}};
  }
};

struct CheckFailure {
  std::uint64_t seed;
  std::string detail;
  std::string instance_text;
};

struct CheckReport {
  std::string name;
  int requested = 0;
  int run = 0;
  int skipped = 0;
  int failures = 0;
  std::vector<CheckFailure> failure_list;
  std::vector<std::string> notes;
  double seconds = 0.0;
  bool ok() const { return failures == 0; }
};

struct CheckDef {
  std::string name;
  std::string what;
  int default_count;
  // runs one instance; fills *instance_text for reproduction on failure
  std::function<InstanceOutcome(std::uint64_t seed, std::string* instance_text)> run_one;
};

namespace checks_detail {

template <Field K>
struct Instance {
  ParsedInput input;
  BoxModule<K> box;
};

template <Field K>
Instance<K> make_module(std::uint64_t seed, const InstanceCaps& caps) {
  Rng rng(seed);
  ParsedInput in = random_instance(rng, caps, module_kind_for(seed));
  BoxModule<K> box = in.build_module<K>();
  return {std::move(in), std::move(box)};
}

template <Field K>
Instance<K> make_cyclic(std::uint64_t seed, const InstanceCaps& caps) {
  Rng rng(seed);
  ParsedInput in = random_instance(rng, caps, InstanceKind::ideal);
  BoxModule<K> box = in.build_module<K>();
  return {std::move(in), std::move(box)};
}

inline std::string face_str(const std::vector<int>& f) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  os << '}';
  return os.str();
}

inline bool faces_contained(const std::vector<std::vector<int>>& small,
                            const std::vector<std::vector<int>>& big) {
  for (const auto& f : small)
    if (std::find(big.begin(), big.end(), f) == big.end()) return false;
  return true;
}

// sum over the fiber of sqrt above b of the Betti row i
inline int sqrt_fiber_sum(const BettiTable& b, int i, const ExponentVector& sq) {
  int s = 0;
  for (const auto& [key, mult] : b.entries())
    if (key.first == i && map_sqrt(key.second) == sq) s += mult;
  return s;
}

}  // namespace checks_detail

template <Field K>
std::vector<CheckDef> check_registry() {
  using namespace checks_detail;
  using Box = BoxModule<K>;
  std::vector<CheckDef> reg;

  auto add = [&reg](std::string name, std::string what, int count, auto fn) {
    reg.push_back(CheckDef{std::move(name), std::move(what), count, fn});
  };

  // ---- radical of an ideal --------------------------------------------
  add("classicradical", "both radical routes agree and r* of an ideal is its radical", 500,
      [](std::uint64_t seed, std::string* text) {
        InstanceCaps caps(1, 4, 3);
        Rng rng(seed);
        ParsedInput in = random_instance(rng, caps, InstanceKind::ideal);
        *text = in.text();
        const MonomialIdeal& I = in.ideal("I");
        BoundVector t = in.bound();
        MonomialIdeal direct = I.radical();
        if (direct != radical_by_degree_criterion(I, t))
          return InstanceOutcome::fail("the two radical algorithms disagree");
        // the ideal as a submodule of S, pulled back along r
        Box ibox = Box::from_ideal_pair(MonomialIdeal::zero(I.arity()), I, t);
        Box rbox = pullback_r(ibox);
        for (const auto& [a, d] : rbox.hilbert_function())
          if ((d == 1) != direct.contains(a))
            return InstanceOutcome::fail("hilbert support of r*I differs from sqrt(I) at " + a.str());
        return InstanceOutcome::pass();
      });

  // ---- r* of shifted free modules -------------------------------------
  add("shift", "r*(S(-a)) has the profile of S(-sqrt a)", 200,
      [](std::uint64_t seed, std::string* text) {
        Rng rng(seed);
        int n = rng.uniform(1, 4);
        ExponentVector t = random_bound(rng, n, 3);
        ExponentVector a = ExponentVector::zero(n);
        for (int i = 0; i < n; ++i) a[i] = rng.uniform(0, t[i]);
        *text = "# free module S(-" + a.str() + ") at t=" + t.str();
        Box lhs = pullback_r(Box::free_box({a}, Window::box(t)));
        Box rhs = Box::free_box({map_sqrt(a)}, Window::box(ExponentVector::ones(n)));
        auto v = compare_graded(lhs, rhs);
        if (!v.equal) return InstanceOutcome::fail(v.detail);
        return InstanceOutcome::pass();
      });

  // ---- Betti numbers under r* ------------------------------------------
  add("bettiradical",
      "Betti numbers do not increase under r* (sqrt-fiber sums) and depth goes up", 200,
      [](std::uint64_t seed, std::string* text) {
        InstanceCaps caps(1, 4, 3);
        auto inst = make_module<K>(seed, caps);
        *text = inst.input.text();
        BettiTable b = betti_table(inst.box);
        BettiTable rb = betti_table(pullback_r(inst.box));
        InstanceOutcome out;
        for (const auto& [key, mult] : rb.entries()) {
          if (sqrt_fiber_sum(b, key.first, key.second) < mult)
            return InstanceOutcome::fail("aggregated Betti inequality fails at i=" +
                                         std::to_string(key.first) + ", degree " + key.second.str());
          // the literal per-degree reading; counterexamples are reported, not
          // counted as failures: the aggregated form is what the radicalized
          // resolution argument yields, and S/(x^2) at t=(2) already breaks
          // the per-degree form at a=(1)
          for (const auto& a : box_enumerate(inst.box.window().lo, inst.box.window().hi))
            if (map_sqrt(a) == key.second && b.get(key.first, a) < mult)
              out.notes.push_back("per-degree reading fails at i=" + std::to_string(key.first) +
                                  ", a=" + a.str() + ": " + std::to_string(b.get(key.first, a)) +
                                  " < " + std::to_string(mult));
        }
        if (b.projdim() < rb.projdim())
          return InstanceOutcome::fail("projective dimension increased under r*");
        return out;
      });

  // ---- the ideal-pair corollary ----------------------------------------
  add("extensionHHT", "Betti and depth comparison for J/I versus sqrt(J)/sqrt(I)", 100,
      [](std::uint64_t seed, std::string* text) {
        InstanceCaps caps(1, 4, 3);
        Rng rng(seed);
        ParsedInput in = random_instance(rng, caps, InstanceKind::ideal_pair);
        *text = in.text();
        const MonomialIdeal &I = in.ideal("I"), &J = in.ideal("J");
        if (I.radical() == J.radical()) return InstanceOutcome::skip("sqrt(I) = sqrt(J)");
        Box m = in.build_module<K>();
        Box r = Box::from_ideal_pair(I.radical(), J.radical(),
                                     BoundVector(ExponentVector::ones(I.arity())));
        auto v = compare_graded(pullback_r(m), r);
        if (!v.equal) return InstanceOutcome::fail("r*(J/I) differs from sqrt(J)/sqrt(I): " + v.detail);
        BettiTable b = betti_table(m), rb = betti_table(r);
        for (const auto& [key, mult] : rb.entries())
          if (sqrt_fiber_sum(b, key.first, key.second) < mult)
            return InstanceOutcome::fail("aggregated Betti inequality fails at i=" +
                                         std::to_string(key.first) + ", degree " + key.second.str());
        if (b.projdim() < rb.projdim())
          return InstanceOutcome::fail("depth(sqrt J/sqrt I) < depth(J/I)");
        return InstanceOutcome::pass();
      });

  // ---- associated primes ------------------------------------------------
  add("ass", "Ass(r*M) is contained in Ass(M); colon oracle agreement on cyclic modules", 150,
      [](std::uint64_t seed, std::string* text) {
        InstanceCaps caps(1, 3, 3);
        auto inst = make_module<K>(seed, caps);
        *text = inst.input.text();
        auto am = ass_primes(inst.box);
        auto arm = ass_primes(pullback_r(inst.box));
        if (!faces_contained(arm, am))
          return InstanceOutcome::fail("Ass(r*M) escapes Ass(M)");
        // minimal primes from Ass agree with minimal primes of the annihilator
        if (!inst.box.is_zero_module()) {
          auto via_ass = minimal_prime_faces(am);
          auto via_ann = annihilator(inst.box).dim_and_minimal_primes().prime_faces;
          std::sort(via_ass.begin(), via_ass.end());
          std::sort(via_ann.begin(), via_ann.end());
          if (via_ass != via_ann)
            return InstanceOutcome::fail("minimal primes differ between Ass and annihilator routes");
        }
        if (inst.input.kind == ParsedInput::ModuleKind::quotient) {
          const MonomialIdeal& den = inst.input.ideal(inst.input.quot_den);
          if (inst.input.ideal(inst.input.quot_num).is_unit() && !den.is_unit()) {
            if (am != ass_faces_colon_oracle(den))
              return InstanceOutcome::fail("Ass(S/I) differs from the colon oracle");
          }
        }
        return InstanceOutcome::pass();
      });

  // ---- Krull dimension ---------------------------------------------------
  add("dim", "dim r*M <= dim M with the exact equality criterion", 150,
      [](std::uint64_t seed, std::string* text) {
        InstanceCaps caps(1, 4, 3);
        auto inst = make_module<K>(seed, caps);
        *text = inst.input.text();
        const Box& m = inst.box;
        Box rm = pullback_r(m);
        int dm = krull_dim(m), drm = krull_dim(rm);
        if (annihilator_and_dim(m).dim != dm)
          return InstanceOutcome::fail("fast dimension route disagrees with the annihilator route");
        if (drm > dm) return InstanceOutcome::fail("dim r*M > dim M");
        if (m.is_zero_module() || rm.is_zero_module())
          return InstanceOutcome::skip("zero module, equality criterion vacuous");
        BoundVector t = m.bound();
        bool criterion = false;
        for (const auto& a : box_enumerate(ExponentVector::zero(m.arity()), t.vec())) {
          auto [supp, supp_t] = supports(a, t);
          if (static_cast<int>(supp_t.size()) == dm && m.dim_in_window(map_r(a, t)) > 0) {
            criterion = true;
            break;
          }
        }
        if (criterion != (dm == drm))
          return InstanceOutcome::fail("equality criterion mismatches dim comparison");
        return InstanceOutcome::pass();
      });

  // ---- equidimensionality -------------------------------------------------
  // Counted form: if every associated prime of M has the same codimension
  // (M unmixed), then r*M is equidimensional. The literal statement -- with
  // the hypothesis only on the minimal primes -- fails when an embedded
  // prime of M surfaces as a minimal prime of r*M (see the ledger for a
  // hand-checked instance); such cases are reported as notes.
  add("equidim", "unmixedness of Ass(M) forces r*M equidimensional", 100,
      [](std::uint64_t seed, std::string* text) {
        InstanceCaps caps(1, 4, 2);
        auto inst = make_module<K>(seed, caps);
        *text = inst.input.text();
        const Box& m = inst.box;
        Box rm = pullback_r(m);
        if (m.is_zero_module() || rm.is_zero_module()) return InstanceOutcome::skip("zero module");
        auto am = ass_primes(m);
        bool unmixed = true;
        for (const auto& f : am)
          if (f.size() != am.front().size()) unmixed = false;
        if (krull_dim(m) != krull_dim(rm)) return InstanceOutcome::skip("dimensions differ");
        bool em = is_equidimensional(m), erm = is_equidimensional(rm);
        if (unmixed && !erm)
          return InstanceOutcome::fail("Ass(M) unmixed but r*M not equidimensional");
        InstanceOutcome out;
        if (em && !erm)
          out.notes.push_back(
              "literal reading fails: M equidimensional (minimal primes only), r*M is not");
        if (!em) return InstanceOutcome::skip("M not equidimensional");
        return out;
      });

  // ---- Cohen-Macaulay transfer ---------------------------------------------
  add("cm", "CM and sequential CM pass from M to r*M at equal dimension", 120,
      [](std::uint64_t seed, std::string* text) {
        InstanceCaps caps(1, 3, 3);
        auto inst = make_module<K>(seed, caps);
        *text = inst.input.text();
        const Box& m = inst.box;
        Box rm = pullback_r(m);
        if (m.is_zero_module() || rm.is_zero_module()) return InstanceOutcome::skip("zero module");
        Classification cm_ = classify(m);
        if (!cm_.is_cm && !cm_.is_seq_cm) return InstanceOutcome::skip("M neither CM nor seq-CM");
        Classification crm = classify(rm);
        if (cm_.is_cm) {
          if (!crm.is_cm) return InstanceOutcome::fail("M CM but r*M is not");
          if (crm.dim != cm_.dim) return InstanceOutcome::fail("M CM but dim r*M != dim M");
        }
        if (cm_.is_seq_cm && !crm.is_seq_cm)
          return InstanceOutcome::fail("M sequentially CM but r*M is not");
        if (cm_.depth > crm.depth) return InstanceOutcome::fail("depth dropped under r*");
        return InstanceOutcome::pass();
      });

  // ---- the ideal-pair CM corollary ------------------------------------------
  add("cmextend", "CM and seq-CM pass from J/I to sqrt(J)/sqrt(I)", 100,
      [](std::uint64_t seed, std::string* text) {
        InstanceCaps caps(1, 3, 3);
        Rng rng(seed);
        ParsedInput in = random_instance(rng, caps, InstanceKind::ideal_pair);
        *text = in.text();
        const MonomialIdeal &I = in.ideal("I"), &J = in.ideal("J");
        if (I.radical() == J.radical()) return InstanceOutcome::skip("sqrt(I) = sqrt(J)");
        Box m = in.build_module<K>();
        if (m.is_zero_module()) return InstanceOutcome::skip("J/I = 0");
        Box r = Box::from_ideal_pair(I.radical(), J.radical(),
                                     BoundVector(ExponentVector::ones(I.arity())));
        Classification cm_ = classify(m);
        if (!cm_.is_cm && !cm_.is_seq_cm) return InstanceOutcome::skip("J/I neither CM nor seq-CM");
        Classification cr = classify(r);
        if (cm_.is_cm && !(cr.is_cm && cr.dim == cm_.dim))
          return InstanceOutcome::fail("CM transfer fails for the ideal pair");
        if (cm_.is_seq_cm && !cr.is_seq_cm)
          return InstanceOutcome::fail("seq-CM transfer fails for the ideal pair");
        return InstanceOutcome::pass();
      });

  // ---- the natural transformations -------------------------------------------
  add("lemnat", "Phi and Psi are S-linear, natural, and Phi is iso on squarefree modules", 100,
      [](std::uint64_t seed, std::string* text) {
        InstanceCaps caps(1, 3, 3);
        if (seed % 3 == 0) caps.t_max = 1;  // squarefree instances for the iso part
        auto inst = make_module<K>(seed, caps);
        *text = inst.input.text();
        const Box& m = inst.box;
        int n = m.arity();
        const Window& w = m.window();
        Box rm = pullback_r_wide(m);
        auto phi = phi_transform(m);
        for (long idx = 0; idx < w.count(); ++idx) {
          ExponentVector a = w.degree_at(idx);
          for (int i = 0; i < n; ++i) {
            if (a[i] >= w.hi[i]) continue;
            long jdx = w.index_of(a + ExponentVector::unit(n, i));
            if (phi[jdx] * m.edge(a, i) != rm.edge(a, i) * phi[idx])
              return InstanceOutcome::fail("Phi is not S-linear at " + a.str());
          }
        }
        if (w.hi == ExponentVector::ones(n)) {
          for (const auto& p : phi)
            if (p.rows() != p.cols() || p.rank() != p.rows())
              return InstanceOutcome::fail("Phi not an isomorphism on a squarefree module");
        }
        // Psi: s*M -> sigma_{1-t} M
        Box sm = pullback_s(m);
        Box shifted = sigma_shift(m, ExponentVector::ones(n) - w.hi);
        auto psi = psi_transform(m);
        Window cube = Window::box(ExponentVector::ones(n));
        for (long idx = 0; idx < cube.count(); ++idx) {
          ExponentVector a = cube.degree_at(idx);
          for (int i = 0; i < n; ++i) {
            if (a[i] >= 1) continue;
            long jdx = cube.index_of(a + ExponentVector::unit(n, i));
            if (psi[jdx] * sm.edge(a, i) != shifted.edge(a, i) * psi[idx])
              return InstanceOutcome::fail("Psi is not S-linear at " + a.str());
          }
        }
        // naturality against a sampled endomorphism
        if (m.is_zero_module()) return InstanceOutcome::pass();
        auto basis = hom_space_basis(m, m);
        if (basis.empty()) return InstanceOutcome::fail("endomorphism space lost the identity");
        Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
        std::vector<DenseMatrix<K>> f;
        for (long idx = 0; idx < w.count(); ++idx)
          f.push_back(DenseMatrix<K>(m.dim_in_window(w.degree_at(idx)),
                                     m.dim_in_window(w.degree_at(idx))));
        for (const auto& b : basis) {
          K c(static_cast<long>(rng.uniform(-2, 2)));
          for (long idx = 0; idx < w.count(); ++idx) f[idx] = f[idx] + b.at[idx].scaled(c);
        }
        if (!is_morphism(m, m, GradedMap<K>(w, f)))
          return InstanceOutcome::fail("sampled endomorphism is not a morphism");
        BoundVector t = m.bound();
        for (long idx = 0; idx < w.count(); ++idx) {
          ExponentVector a = w.degree_at(idx);
          if (f[w.index_of(map_r(a, t))] * phi[idx] != phi[idx] * f[idx])
            return InstanceOutcome::fail("naturality square of Phi fails at " + a.str());
        }
        return InstanceOutcome::pass();
      });

  // ---- duality against the ring ------------------------------------------------
  add("r_and_D", "tau_0 D_1 = D_1 r* and r* D_t = D_1 s* as graded profiles", 80,
      [](std::uint64_t seed, std::string* text) {
        InstanceCaps caps(1, 3, 3);
        auto inst = make_module<K>(seed, caps);
        *text = inst.input.text();
        const Box& m = inst.box;
        int n = m.arity();
        ExponentVector one = ExponentVector::ones(n);
        Box lhs1 = ext_window(m, one, 0, Window::box(one));
        Box rhs1 = dual_d1(pullback_r(m));
        auto v1 = compare_graded(lhs1, rhs1);
        if (!v1.equal) return InstanceOutcome::fail("tau_0 D_1 vs D_1 r*: " + v1.detail);
        Box lhs2 = pullback_r(dual_dt(m));
        Box rhs2 = dual_d1(pullback_s(m));
        auto v2 = compare_graded(lhs2, rhs2);
        if (!v2.equal) return InstanceOutcome::fail("r* D_t vs D_1 s*: " + v2.detail);
        return InstanceOutcome::pass();
      });

  // ---- Ext comparison, both forms -------------------------------------------------
  add("ext_a", "tau_0 Ext^p(M, S(-1)) = Ext^p(r*M, S(-1)) for all p", 50,
      [](std::uint64_t seed, std::string* text) {
        InstanceCaps caps(1, 3, 3);
        auto inst = make_module<K>(seed, caps);
        *text = inst.input.text();
        const Box& m = inst.box;
        for (int p = 0; p <= m.arity(); ++p) {
          auto [lhs, rhs] = ext_sides_a(m, p);
          auto v = compare_graded(lhs, rhs);
          if (!v.equal)
            return InstanceOutcome::fail("Ext comparison (a) fails at p=" + std::to_string(p) +
                                         ": " + v.detail);
        }
        return InstanceOutcome::pass();
      });

  add("ext_b", "r* Ext^p(M, S(-t)) = Ext^p(s*M, S(-1)) for all p", 50,
      [](std::uint64_t seed, std::string* text) {
        InstanceCaps caps(1, 3, 3);
        auto inst = make_module<K>(seed, caps);
        *text = inst.input.text();
        const Box& m = inst.box;
        for (int p = 0; p <= m.arity(); ++p) {
          auto [lhs, rhs] = ext_sides_b(m, p);
          auto v = compare_graded(lhs, rhs);
          if (!v.equal)
            return InstanceOutcome::fail("Ext comparison (b) fails at p=" + std::to_string(p) +
                                         ": " + v.detail);
        }
        return InstanceOutcome::pass();
      });

  add("ext_2", "canonical module of S/sqrt(I) is the nonnegative part of omega_{S/I}", 60,
      [](std::uint64_t seed, std::string* text) {
        InstanceCaps caps(1, 3, 3);
        auto inst = make_cyclic<K>(seed, caps);
        *text = inst.input.text();
        const Box& m = inst.box;
        if (m.is_zero_module()) return InstanceOutcome::skip("zero module");
        Classification c = classify(m);
        if (!c.is_cm) return InstanceOutcome::skip("S/I not CM");
        int n = m.arity();
        int p = n - c.dim;
        ExponentVector one = ExponentVector::ones(n);
        Box omega_i = crop(truncate_low(ext_box(m, one, p), ExponentVector::zero(n)),
                           Window::box(one), true);
        const MonomialIdeal& I = inst.input.ideal(inst.input.quot_den);
        Box rq = Box::from_ideal_pair(I.radical(), MonomialIdeal::unit(n), BoundVector(one));
        Box omega_r = ext_box(rq, one, p);
        auto v = compare_graded(omega_i, omega_r);
        if (!v.equal) return InstanceOutcome::fail("canonical module comparison: " + v.detail);
        return InstanceOutcome::pass();
      });

  // ---- generalized CM ------------------------------------------------------------
  // Only the forward direction is counted: M generalized CM forces r*M
  // generalized CM when the dimensions agree (finite length passes to the
  // nonnegative truncation of every Ext). The stated converse fails, e.g.
  // for S/(y^2, x^2yz) at t=(2,2,1): its r* is S/(y), which is CM, while
  // Ext^2(M, omega) keeps infinite length outside the nonnegative quadrant.
  // Converse mismatches are reported as notes.
  add("gcm", "generalized CM passes from M to r*M at equal dimension", 100,
      [](std::uint64_t seed, std::string* text) {
        InstanceCaps caps(1, 3, 2);
        auto inst = make_module<K>(seed, caps);
        *text = inst.input.text();
        const Box& m = inst.box;
        Box rm = pullback_r(m);
        if (m.is_zero_module() || rm.is_zero_module()) return InstanceOutcome::skip("zero module");
        if (krull_dim(m) != krull_dim(rm)) return InstanceOutcome::skip("dimensions differ");
        bool gm = classify(m).is_gen_cm;
        bool gr = classify(rm).is_gen_cm;
        if (gm && !gr) return InstanceOutcome::fail("M generalized CM but r*M is not");
        InstanceOutcome out;
        if (gr && !gm)
          out.notes.push_back("converse fails: r*M generalized CM, M is not");
        return out;
      });

  // ---- Alexander duality ------------------------------------------------------------
  add("r_and_A", "A_1 r* = r* A_t and the Alexander involution", 100,
      [](std::uint64_t seed, std::string* text) {
        InstanceCaps caps(1, 3, 3);
        auto inst = make_module<K>(seed, caps);
        *text = inst.input.text();
        const Box& m = inst.box;
        Box lhs = alexander_dual(pullback_r(m));
        Box rhs = pullback_r(alexander_dual(m));
        auto v = compare_graded(lhs, rhs);
        if (!v.equal) return InstanceOutcome::fail("A_1 r* vs r* A_t: " + v.detail);
        auto inv = compare_graded(alexander_dual(alexander_dual(m)), m);
        if (!inv.equal) return InstanceOutcome::fail("Alexander involution: " + inv.detail);
        return InstanceOutcome::pass();
      });

  // ---- the shift/truncation exchange ---------------------------------------------------
  add("sig_tau_2", "sigma_a tau^b = tau^{a+b} sigma_a as graded profiles", 100,
      [](std::uint64_t seed, std::string* text) {
        InstanceCaps caps(1, 3, 3);
        auto inst = make_module<K>(seed, caps);
        *text = inst.input.text();
        const Box& m = inst.box;
        int n = m.arity();
        Rng rng(seed ^ 0xabcdefull);
        ExponentVector a = ExponentVector::zero(n), b = ExponentVector::zero(n);
        for (int i = 0; i < n; ++i) {
          a[i] = rng.uniform(-1, 2);
          b[i] = rng.uniform(0, m.window().hi[i]);
        }
        Box lhs = crop_to_support(sigma_shift(truncate_high(m, b), a));
        Box rhs = crop_to_support(truncate_high(sigma_shift(m, a), a + b));
        if (lhs.window() != rhs.window())
          return InstanceOutcome::fail("supports differ for a=" + a.str() + ", b=" + b.str());
        auto v = compare_graded(lhs, rhs);
        if (!v.equal) return InstanceOutcome::fail(v.detail);
        return InstanceOutcome::pass();
      });

  // ---- Auslander-Reiten composites ---------------------------------------------------
  add("art_1", "A_1 D_1 r* = p_1* A_t D_t as graded profiles", 100,
      [](std::uint64_t seed, std::string* text) {
        InstanceCaps caps(1, 3, 3);
        auto inst = make_module<K>(seed, caps);
        *text = inst.input.text();
        const Box& m = inst.box;
        Box lhs = alexander_dual(dual_d1(pullback_r(m)));
        Box rhs = pullback_p1(alexander_dual(dual_dt(m)));
        auto v = compare_graded(lhs, rhs);
        if (!v.equal) return InstanceOutcome::fail(v.detail);
        return InstanceOutcome::pass();
      });

  add("art_2", "r* A_t D_t = A_1 D_1 s* as graded profiles", 100,
      [](std::uint64_t seed, std::string* text) {
        InstanceCaps caps(1, 3, 3);
        auto inst = make_module<K>(seed, caps);
        *text = inst.input.text();
        const Box& m = inst.box;
        Box lhs = pullback_r(alexander_dual(dual_dt(m)));
        Box rhs = alexander_dual(dual_d1(pullback_s(m)));
        auto v = compare_graded(lhs, rhs);
        if (!v.equal) return InstanceOutcome::fail(v.detail);
        return InstanceOutcome::pass();
      });

  // ---- the two independent Betti routes --------------------------------------------------
  add("taylor", "Koszul-strand Betti tables equal the Taylor-complex oracle", 100,
      [](std::uint64_t seed, std::string* text) {
        InstanceCaps caps(1, 3, 3);
        caps.gens_max = 8;
        auto inst = make_cyclic<K>(seed, caps);
        *text = inst.input.text();
        const MonomialIdeal& I = inst.input.ideal(inst.input.quot_den);
        if (betti_table(inst.box) != taylor_betti<K>(I))
          return InstanceOutcome::fail("Koszul and Taylor tables differ");
        return InstanceOutcome::pass();
      });

  // ---- radicalized resolutions --------------------------------------------------------
  add("resol", "radicalized resolutions resolve r*M and minimize to its Betti table", 100,
      [](std::uint64_t seed, std::string* text) {
        InstanceCaps caps(1, 3, 3);
        auto inst = make_module<K>(seed, caps);
        *text = inst.input.text();
        const Box& m = inst.box;
        FreeComplex<K> rad = minimal_resolution(m).complex.radicalized();
        Box rm = pullback_r(m);
        if (!resolves(rad, rm))
          return InstanceOutcome::fail("radicalized complex is not exact over r*M");
        Box h0 = rad.length() >= 1
                     ? Box::from_presentation(rad.diff(1),
                                              BoundVector(ExponentVector::ones(m.arity())))
                     : Box::free_box(rad.shifts_at(0), rm.window());
        auto v = compare_graded(h0, rm);
        if (!v.equal) return InstanceOutcome::fail("cokernel of the radicalized complex: " + v.detail);
        if (rad.minimized().shift_table() != betti_table(rm))
          return InstanceOutcome::fail("minimized radicalized complex misses the Betti table of r*M");
        return InstanceOutcome::pass();
      });

  return reg;
}

// The two bundled worked examples, rebuilt exactly and asserted: the
// quotient pair whose dimension drops from 2 to 1 under the radical, and the
// direct sum P = (x_1), P_1 = (x_1, x_2), P_2 = (x_1, x_3, x_4) that loses
// equidimensionality under r*.
template <Field K>
CheckReport paper_examples() {
  using Box = BoxModule<K>;
  CheckReport rep;
  rep.name = "paper-examples";
  rep.requested = 2;
  auto start = std::chrono::steady_clock::now();
  auto expect = [&rep](bool cond, const std::string& what) {
    ++rep.run;
    if (!cond) {
      ++rep.failures;
      rep.failure_list.push_back({0, what, "# fixture"});
    }
  };

  {
    // quotient pair in K[a,b,c,d]: dim(J/I) = 2, dim(sqrt J / sqrt I) = 1
    auto I = MonomialIdeal::from_generators(
        4, {{4, 0, 0, 4}, {2, 3, 0, 0}, {0, 3, 2, 0}, {0, 3, 0, 1}});
    auto J = MonomialIdeal::from_generators(4, {{3, 0, 0, 3}, {3, 1, 0, 0}, {0, 2, 0, 0}});
    BoundVector t{4, 3, 2, 4};
    Box m = Box::from_ideal_pair(I, J, t);
    Box r = Box::from_ideal_pair(I.radical(), J.radical(), BoundVector(ExponentVector::ones(4)));
    int dm = krull_dim(m), dr = krull_dim(r);
    expect(dm == 2, "dim(J/I) = " + std::to_string(dm) + ", expected 2");
    expect(dr == 1, "dim(sqrt J/sqrt I) = " + std::to_string(dr) + ", expected 1");
    expect(annihilator_and_dim(m).dim == 2, "annihilator route disagrees for J/I");
    expect(compare_graded(pullback_r(m), r).equal, "r*(J/I) is not sqrt(J)/sqrt(I)");
    rep.notes.push_back("example 1: dim(J/I)=" + std::to_string(dm) +
                        ", dim(sqrt J/sqrt I)=" + std::to_string(dr));
  }

  {
    // direct sum S/(x1)(-e1) + S/(x1,x2) + S/(x1,x3,x4) at t=(2,1,1,1)
    int n = 4;
    BoundVector t{2, 1, 1, 1};
    ExponentVector z = ExponentVector::zero(n);
    ExponentVector e1 = ExponentVector::unit(n, 0);

    auto cyclic = [&](const ExponentVector& shift, const std::vector<ExponentVector>& gens) {
      std::vector<ExponentVector> cols;
      DenseMatrix<K> scal(1, static_cast<int>(gens.size()));
      for (std::size_t k = 0; k < gens.size(); ++k) {
        cols.push_back(shift + gens[k]);
        scal(0, static_cast<int>(k)) = K(1L);
      }
      return Box::from_presentation(MonomialMatrix<K>({shift}, cols, scal), t);
    };

    Box sp = cyclic(e1, {e1});                                         // (S/P)(-e1)
    Box sp1 = cyclic(z, {e1, ExponentVector::unit(n, 1)});             // S/P1
    Box sp2 = cyclic(z, {e1, ExponentVector::unit(n, 2), ExponentVector::unit(n, 3)});
    Box m = Box::direct_sum(Box::direct_sum(sp, sp1), sp2);

    auto am = ass_primes(m);
    std::vector<std::vector<int>> expected_m = {{1}, {1, 2, 3}, {2, 3}};
    std::sort(am.begin(), am.end());
    expect(am == expected_m, "Ass(M) is not {P, P1, P2}");
    expect(is_equidimensional(m), "M should be equidimensional");

    Box rm = pullback_r(m);
    auto arm = ass_primes(rm);
    std::sort(arm.begin(), arm.end());
    std::vector<std::vector<int>> expected_rm = {{1}, {2, 3}};
    expect(arm == expected_rm, "Ass(r*M) is not {P1, P2}");
    expect(!is_equidimensional(rm), "r*M should not be equidimensional");
    int dm = krull_dim(m), drm = krull_dim(rm);
    expect(dm == 3 && drm == 2 && dm > drm, "dimensions of M and r*M are off");
    rep.notes.push_back("example 2: dim M=" + std::to_string(dm) +
                        ", dim r*M=" + std::to_string(drm) + ", heights of Ass(r*M): 2 and 3");
  }

  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// run a single named check `count` times starting at base_seed; the optional
// record callback receives one line per instance
template <Field K>
CheckReport run_check(const CheckDef& def, int count, std::uint64_t base_seed,
                      const std::function<void(std::uint64_t, const InstanceOutcome&)>& record = {}) {
  CheckReport rep;
  rep.name = def.name;
  rep.requested = count;
  auto start = std::chrono::steady_clock::now();
  for (int k = 0; k < count; ++k) {
    std::uint64_t seed = base_seed + static_cast<std::uint64_t>(k);
    std::string text;
    InstanceOutcome out;
    try {
      out = def.run_one(seed, &text);
    } catch (const std::exception& e) {
      out = InstanceOutcome::fail(std::string("exception: ") + e.what());
    }
    if (record) record(seed, out);
    switch (out.verdict) {
      case InstanceOutcome::Verdict::pass:
        ++rep.run;
        break;
      case InstanceOutcome::Verdict::skip:
        ++rep.skipped;
        break;
      case InstanceOutcome::Verdict::fail:
        ++rep.run;
        ++rep.failures;
        rep.failure_list.push_back({seed, out.detail, text});
        break;
    }
    for (const auto& n : out.notes) rep.notes.push_back("seed " + std::to_string(seed) + ": " + n);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

template <Field K>
const CheckDef* find_check(const std::vector<CheckDef>& reg, const std::string& name) {
  for (const auto& def : reg)
    if (def.name == name) return &def;
  return nullptr;
}

}  // namespace boxmod

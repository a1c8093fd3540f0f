#include "selftest.hpp"

#include "compiler.hpp"
#include "corpus.hpp"
#include "emit_etr.hpp"
#include "errors.hpp"
#include "verifier.hpp"
#include "witness.hpp"

#include <chrono>
#include <functional>
#include <random>

namespace armred {

namespace {

Rat random_rat(std::mt19937_64& rng, int num_range = 40, int den_range = 12) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  return Rat(num(rng), den(rng));
}

RatMatrix random_matrix(std::mt19937_64& rng, uint32_t rows, uint32_t cols) {
  RatMatrix m(rows, cols);
  for (uint32_t i = 0; i < rows; ++i)
    for (uint32_t j = 0; j < cols; ++j) m.set(i, j, random_rat(rng));
  return m;
}

// The pinned 4x4 submatrix of a multiplication gadget with the three free
// positions substituted: rows {I0[0],I0[1],r1,r2} x cols {J0[0],J0[1],c1,c2}.
RatMatrix gadget_minor_with(const ArmInstance& inst, const Rat& a, const Rat& b, const Rat& c) {
  RatMatrix m(4, 4);
  for (uint32_t i = 0; i < 2; ++i)
    for (uint32_t j = 0; j < 2; ++j) m.set(i, j, inst.gauge_block.at(i, j));
  m.set(2, 2, 1);
  m.set(2, 3, a);
  m.set(3, 2, b);
  m.set(3, 3, c);
  return m;
}

uint32_t rank_via_minor_dets(const RatMatrix& m) {
  const uint32_t max_r = std::min(m.rows(), m.cols());
  std::vector<uint32_t> rows, cols;
  for (uint32_t r = max_r; r >= 1; --r) {
    bool found = false;
    std::vector<uint32_t> ridx(r), cidx(r);
    const std::function<void(uint32_t, uint32_t)> pick_cols = [&](uint32_t start, uint32_t depth) {
      if (found) return;
      if (depth == r) {
        if (det_bareiss(submatrix(m, ridx, cidx)) != 0) found = true;
        return;
      }
      for (uint32_t c = start; c + (r - depth) <= m.cols(); ++c) {
        cidx[depth] = c;
        pick_cols(c + 1, depth + 1);
      }
    };
    const std::function<void(uint32_t, uint32_t)> pick_rows = [&](uint32_t start, uint32_t depth) {
      if (found) return;
      if (depth == r) {
        pick_cols(0, 0);
        return;
      }
      for (uint32_t i = start; i + (r - depth) <= m.rows(); ++i) {
        ridx[depth] = i;
        pick_rows(i + 1, depth + 1);
      }
    };
    pick_rows(0, 0);
    if (found) return r;
  }
  return 0;
}

struct CompiledEntry {
  CorpusEntry entry;
  ArmInstance inst;
  std::map<std::string, Rat> assignment;
  Witness witness;
};

std::vector<CompiledEntry> compile_corpus() {
  std::vector<CompiledEntry> out;
  for (const CorpusEntry& entry : corpus()) {
    CompiledEntry ce;
    ce.entry = entry;
    ce.inst = compile_formula(entry.formula);
    ce.assignment = parse_assignment(entry.assignment);
    ce.witness = build_witness(ce.inst, extend_assignment(ce.inst, ce.assignment));
    out.push_back(std::move(ce));
  }
  return out;
}

class Suite {
public:
  int failures = 0;
  std::string report;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    report += (ok ? "PASS " : "FAIL ") + name;
    if (!ok && !detail.empty()) report += " (" + detail + ")";
    report += "\n";
    if (!ok) ++failures;
  }
};

}  // namespace

int run_selftest(std::string& report) {
  const auto started = std::chrono::steady_clock::now();
  Suite suite;

  try {
    // c1: the pinned gadget minor has determinant c - a*b, exactly.
    {
      const ArmInstance inst = compile_formula("x*y - 6 = 0");
      std::mt19937_64 rng(101);
      bool ok = !inst.mul_gadgets.empty();
      for (int i = 0; ok && i < 500; ++i) {
        const Rat a = random_rat(rng), b = random_rat(rng), c = random_rat(rng);
        ok = det4_leibniz(gadget_minor_with(inst, a, b, c)) == c - a * b;
      }
      suite.check("c1 gadget-determinant-identity (500 random triples)", ok);
    }

    const std::vector<CompiledEntry> compiled = compile_corpus();

    // c2: compile -> witness -> verify round trip accepts with rank <= 3.
    {
      bool ok = compiled.size() >= 25;
      std::string detail = ok ? "" : "corpus too small";
      for (const CompiledEntry& ce : compiled) {
        const Verdict v = verify(ce.inst, ce.witness.x, ce.inst.circuit);
        if (!v.accept || v.rank > 3) {
          ok = false;
          detail = ce.entry.name;
          break;
        }
      }
      suite.check("c2 soundness-round-trip (" + std::to_string(compiled.size()) + " formulas)", ok,
                  detail);
    }

    // c3: bumping any gadget product entry raises the rank past 3 and the
    // verifier rejects.
    {
      bool ok = true;
      size_t gadgets = 0;
      std::string detail;
      for (const CompiledEntry& ce : compiled) {
        for (const MulGadgetInfo& g : ce.inst.mul_gadgets) {
          ++gadgets;
          RatMatrix tampered = ce.witness.x;
          tampered.set(g.rows[1], g.cols[1], tampered.at(g.rows[1], g.cols[1]) + 1);
          const bool detected =
              exact_rank(tampered) >= 4 && !verify(ce.inst, tampered, ce.inst.circuit).accept;
          if (!detected) {
            ok = false;
            detail = ce.entry.name + " gate g" + std::to_string(g.gate);
          }
        }
      }
      suite.check("c3 tamper-completeness (" + std::to_string(gadgets) + " gadgets)", ok, detail);
    }

    // c4: decoding returns the input assignment and satisfies the source formula.
    {
      bool ok = true;
      std::string detail;
      for (const CompiledEntry& ce : compiled) {
        const auto decoded = decode(ce.inst, ce.witness.x);
        std::map<std::string, Rat> sources;
        for (const auto& [occ, value] : decoded) {
          if (occ.starts_with("var:") && occ.find(":use") == std::string::npos) {
            const std::string name = occ.substr(4);
            if (!name.starts_with("$")) sources[name] = value;
          }
        }
        if (sources != ce.assignment ||
            !eval_formula(parse_formula(ce.entry.formula), sources)) {
          ok = false;
          detail = ce.entry.name;
        }
      }
      suite.check("c4 decode-fidelity", ok, detail);
    }

    // c5: q <= 13s+9, m,n <= 3+4s+carriers, coefficients in {0,+-1}.
    {
      bool ok = true;
      std::string detail;
      for (const CompiledEntry& ce : compiled) {
        const size_t s = ce.inst.circuit.gates.size();
        const size_t carriers = ce.inst.carriers.size();
        const InstanceStats st = stats(ce.inst);
        bool entry_ok = st.q <= 13 * s + 9;
        entry_ok = entry_ok && st.m <= 3 + 4 * s + carriers && st.n <= 3 + 4 * s + carriers;
        for (const AffineConstraint& c : ce.inst.constraints) {
          for (const AffineTerm& t : c.terms) entry_ok = entry_ok && (t.coeff == 1 || t.coeff == -1);
        }
        if (!entry_ok) {
          ok = false;
          detail = ce.entry.name;
        }
      }
      suite.check("c5 size-linearity-and-unit-coefficients", ok, detail);
    }

    // c6: membership encodings on small instances.
    {
      const ArmInstance small = compile_formula("x - 2 = 0");
      bool ok = small.m == 6 && small.n == 6;
      const Witness w = build_witness(small, extend_assignment(small, {{"x", 2}}));

      const std::vector<Poly> minors = minors_system(small);
      ok = ok && minors.size() == small.constraints.size() + 225;  // C(6,4)^2 = 225

      std::map<std::string, Rat> xs;
      for (uint32_t i = 0; i < small.m; ++i)
        for (uint32_t j = 0; j < small.n; ++j)
          xs["X_" + std::to_string(i) + "_" + std::to_string(j)] = w.x.at(i, j);
      for (const Poly& eq : minors) ok = ok && eq.eval(xs) == 0;

      auto tampered = xs;
      const CarrierInfo& cx = small.carriers.at("var:x");
      tampered["X_" + std::to_string(cx.row) + "_" + std::to_string(cx.col)] += 1;
      bool falsified = false;
      for (const Poly& eq : minors) falsified = falsified || eq.eval(tampered) != 0;
      ok = ok && falsified;

      const std::string factored = emit_factored(small);
      const Formula reparsed = parse_formula(factored);
      std::map<std::string, Rat> uv;
      for (uint32_t i = 0; i < small.m; ++i)
        for (uint32_t t = 0; t < 3; ++t)
          uv["U_" + std::to_string(i) + "_" + std::to_string(t)] = w.u.at(i, t);
      for (uint32_t t = 0; t < 3; ++t)
        for (uint32_t j = 0; j < small.n; ++j)
          uv["V_" + std::to_string(t) + "_" + std::to_string(j)] = w.v.at(t, j);
      ok = ok && eval_formula(reparsed, uv);

      // full loop: the factored emission recompiles
      const ArmInstance relooped = compile_formula(factored);
      ok = ok && relooped.k == 3;
      suite.check("c6 membership-encodings (6x6 instance)", ok);
    }

    // c7: elimination agrees with the signed-permutation determinant and with
    // minor-based rank.
    {
      std::mt19937_64 rng(202);
      bool ok = true;
      for (int i = 0; i < 200 && ok; ++i) {
        const RatMatrix m = random_matrix(rng, 4, 4);
        ok = det4_leibniz(m) == det_bareiss(m);
      }
      std::uniform_int_distribution<uint32_t> dim(1, 6);
      for (int i = 0; i < 50 && ok; ++i) {
        RatMatrix m = random_matrix(rng, dim(rng), dim(rng));
        if (i % 2 == 1) {
          const uint32_t r = std::min(m.rows(), m.cols()) / 2;
          m = mat_mul(random_matrix(rng, m.rows(), r == 0 ? 1 : r),
                      random_matrix(rng, r == 0 ? 1 : r, m.cols()));
        }
        ok = exact_rank(m) == rank_via_minor_dets(m);
      }
      suite.check("c7 oracle-agreement (200 determinants, 50 ranks)", ok);
    }

    // c8: rank-2 products have identically vanishing 3x3 minors.
    {
      std::mt19937_64 rng(303);
      bool ok = true;
      for (int i = 0; i < 50 && ok; ++i) {
        std::uniform_int_distribution<uint32_t> dim(3, 6);
        const RatMatrix m =
            mat_mul(random_matrix(rng, dim(rng), 2), random_matrix(rng, 2, dim(rng)));
        ok = exact_rank(m) <= 2;
        std::vector<uint32_t> ridx(3), cidx(3);
        for (uint32_t a = 0; a + 2 < m.rows() && ok; ++a)
          for (uint32_t b = a + 1; b + 1 < m.rows() && ok; ++b)
            for (uint32_t c = b + 1; c < m.rows() && ok; ++c)
              for (uint32_t d = 0; d + 2 < m.cols() && ok; ++d)
                for (uint32_t e = d + 1; e + 1 < m.cols() && ok; ++e)
                  for (uint32_t f = e + 1; f < m.cols() && ok; ++f) {
                    ridx = {a, b, c};
                    cidx = {d, e, f};
                    ok = det_bareiss(submatrix(m, ridx, cidx)) == 0;
                  }
      }
      suite.check("c8 rank-2-minor-vanishing (50 products)", ok);
    }

    // c9: byte-deterministic compilation; whole suite under a minute.
    {
      bool ok = true;
      std::string detail;
      for (const CompiledEntry& ce : compiled) {
        if (serialize_instance(compile_formula(ce.entry.formula)) != serialize_instance(ce.inst)) {
          ok = false;
          detail = ce.entry.name;
        }
      }
      const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - started)
                               .count();
      ok = ok && elapsed < 60000;
      suite.check("c9 determinism-and-runtime (" + std::to_string(elapsed) + " ms)", ok, detail);
    }
  } catch (const std::exception& e) {
    suite.check("selftest-execution", false, e.what());
  }

  report += suite.report;
  return suite.failures;
}

}  // namespace armred

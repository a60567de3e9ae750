// Acceptance suite: each criterion prints one PASS/FAIL line; the process
// exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "t8n/characters.hpp"
#include "t8n/families.hpp"
#include "t8n/oracle.hpp"
#include "t8n/setlang.hpp"
#include "t8n/spectrum.hpp"

using namespace t8n;

namespace {

unsigned long long seed = 0x5eedcafeULL;
int failed_criteria = 0;

struct outcome {
    bool pass = true;
    std::vector<std::string> details;

    void fail(std::string detail) {
        pass = false;
        if (details.size() < 8) details.push_back(std::move(detail));
    }
    void require(bool ok, const std::string& detail) {
        if (!ok) fail(detail);
    }
};

using clock_type = std::chrono::steady_clock;

void report(int index, const std::string& label, const outcome& o, double ms) {
    std::printf("criterion %d: %-58s %s (%.0f ms)\n", index, label.c_str(),
                o.pass ? "PASS" : "FAIL", ms);
    for (const std::string& d : o.details) std::printf("    %s\n", d.c_str());
    if (!o.pass) ++failed_criteria;
}

template <class Fn>
void criterion(int index, const std::string& label, Fn fn) {
    outcome o;
    const auto start = clock_type::now();
    fn(o);
    const double ms =
        std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
    report(index, label, o, ms);
}

const integral_family& family(const std::string& name) {
    for (const integral_family& f : builtin_integral_families())
        if (f.name == name) return f;
    throw std::logic_error("unknown family " + name);
}

// Both spectrum routes against the closed form, exact comparison.
void check_family_everywhere(outcome& o, const std::string& name) {
    for (int n = 1; n <= 8; ++n) {
        const character_table tbl(n);
        const connection_set s = evaluate(parse_set_expr(family(name).expression), tbl.grp());
        const spectrum expected = family_spectrum(family(name), n);
        if (!spectra_equal_exact(compute_spectrum(tbl, s), expected))
            o.fail("character spectrum mismatch at n=" + std::to_string(n));
        if (!spectra_equal_exact(oracle_spectrum(s), expected))
            o.fail("oracle spectrum mismatch at n=" + std::to_string(n));
    }
}

std::vector<std::vector<element>> inverse_units(const group& g) {
    std::vector<std::vector<element>> units;
    std::vector<char> used(g.order(), 0);
    for (const element& x : g.elements()) {
        if (x == g.identity() || used[g.index_of(x)]) continue;
        const element y = g.inv(x);
        used[g.index_of(x)] = used[g.index_of(y)] = 1;
        units.push_back(y == x ? std::vector<element>{x} : std::vector<element>{x, y});
    }
    return units;
}

bool theorem3_equals_oracle(const character_table& tbl, const connection_set& s) {
    return check_integral_theorem3(tbl, s).integral == check_integral_oracle(s).integral;
}

// Generator classes of the cyclic group <a^2>, including the identity atom.
std::vector<std::vector<element>> a2_atoms(const group& g) {
    std::set<std::vector<element>> atoms;
    for (int r = 0; r < g.a_order(); r += 2) atoms.insert(g.generator_class({r, 0}));
    return {atoms.begin(), atoms.end()};
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg.rfind("--seed=", 0) == 0) seed = std::stoull(arg.substr(7));
    }

    criterion(1, "dense family (7n-1) spectra, n=1..8, both methods", [](outcome& o) {
        const auto start = clock_type::now();
        check_family_everywhere(o, "7n-1");
        const double secs =
            std::chrono::duration<double>(clock_type::now() - start).count();
        o.require(secs < 10.0, "runtime budget exceeded: " + std::to_string(secs) + " s");
    });

    criterion(2, "Boolean family (5n-1) spectra, n=1..8, both methods",
              [](outcome& o) { check_family_everywhere(o, "5n-1"); });

    criterion(3, "normal family (4n+2) spectra, n=1..8, both methods",
              [](outcome& o) { check_family_everywhere(o, "4n+2"); });

    criterion(4, "character criterion equals oracle (exhaustive n=2; 500 samples n=3,4)",
              [](outcome& o) {
                  // n = 2: all 511 nonempty symmetric identity-free sets
                  {
                      const character_table tbl(2);
                      const auto units = inverse_units(tbl.grp());
                      int checked = 0;
                      for (std::size_t mask = 1; mask < (std::size_t{1} << units.size());
                           ++mask) {
                          std::vector<element> members;
                          for (std::size_t i = 0; i < units.size(); ++i)
                              if (mask & (std::size_t{1} << i))
                                  members.insert(members.end(), units[i].begin(),
                                                 units[i].end());
                          const connection_set s(tbl.grp(), std::move(members));
                          ++checked;
                          if (!theorem3_equals_oracle(tbl, s))
                              o.fail("disagreement at n=2, mask " + std::to_string(mask));
                      }
                      o.require(checked == 511, "expected 511 symmetric sets at n=2");
                  }
                  std::mt19937_64 rng(seed);
                  for (int n : {3, 4}) {
                      const character_table tbl(n);
                      const auto units = inverse_units(tbl.grp());
                      for (int trial = 0; trial < 500; ++trial) {
                          std::vector<element> members;
                          while (members.empty())
                              for (const auto& unit : units)
                                  if (rng() & 1)
                                      members.insert(members.end(), unit.begin(), unit.end());
                          const connection_set s(tbl.grp(), std::move(members));
                          if (!theorem3_equals_oracle(tbl, s))
                              o.fail("disagreement at n=" + std::to_string(n) + ", trial " +
                                     std::to_string(trial));
                      }
                  }
              });

    criterion(5, "normal enumeration is sound and complete, n=2,3", [](outcome& o) {
        for (int n : {2, 3}) {
            const group g(n);
            const enumeration_result enumerated = enumerate_integral_normal(n, 1 << 20);
            o.require(!enumerated.truncated, "enumeration unexpectedly truncated");

            std::set<std::vector<element>> emitted;
            for (const connection_set& s : enumerated.sets) {
                emitted.insert(s.members());
                if (!check_integral_oracle(s).integral)
                    o.fail("emitted set is not oracle-integral at n=" + std::to_string(n));
            }
            o.require(emitted.size() == enumerated.sets.size(), "duplicate sets emitted");

            // brute-force collection: every symmetric power-closed union of
            // non-identity conjugacy classes
            std::set<std::vector<element>> brute;
            const auto classes = g.conjugacy_classes();
            std::vector<const conjugacy_class*> usable;
            for (const conjugacy_class& c : classes)
                if (!(c.representative == g.identity())) usable.push_back(&c);
            for (std::size_t mask = 1; mask < (std::size_t{1} << usable.size()); ++mask) {
                std::vector<element> members;
                for (std::size_t i = 0; i < usable.size(); ++i)
                    if (mask & (std::size_t{1} << i))
                        members.insert(members.end(), usable[i]->members.begin(),
                                       usable[i]->members.end());
                const connection_set s(g, std::move(members));
                if (s.symmetric() && is_power_closed(s)) brute.insert(s.members());
            }
            if (emitted != brute)
                o.fail("enumeration differs from the brute-force collection at n=" +
                       std::to_string(n) + " (" + std::to_string(emitted.size()) + " vs " +
                       std::to_string(brute.size()) + ")");
        }
    });

    criterion(6, "character table validity (orthogonality, homomorphism, degrees)",
              [](outcome& o) {
                  for (int n = 1; n <= 8; ++n) {
                      const character_table tbl(n);
                      const auto& ids = tbl.characters();
                      for (std::size_t i = 0; i < ids.size(); ++i)
                          for (std::size_t k = i; k < ids.size(); ++k) {
                              cyclotomic acc(tbl.context());
                              for (const conjugacy_class& c : tbl.classes())
                                  acc.add_scaled(bigint(c.members.size()),
                                                 tbl.value(ids[i], c.representative) *
                                                     conj(tbl.value(ids[k], c.representative)));
                              const auto iv = acc.as_integer();
                              if (!iv || *iv != bigint(i == k ? 8 * n : 0)) {
                                  o.fail("orthogonality fails at n=" + std::to_string(n) +
                                         " for " + ids[i].name() + " x " + ids[k].name());
                              }
                          }
                  }
                  for (int n = 1; n <= 4; ++n) {
                      const character_table tbl(n);
                      const group& g = tbl.grp();
                      for (const character_id& id : tbl.characters()) {
                          std::vector<rep_matrix> images;
                          images.reserve(g.order());
                          for (const element& x : g.elements())
                              images.push_back(tbl.representation(id, x));
                          for (const element& x : g.elements())
                              for (const element& y : g.elements()) {
                                  const rep_matrix lhs = images[g.index_of(g.mul(x, y))];
                                  if (!(lhs == images[g.index_of(x)] * images[g.index_of(y)])) {
                                      o.fail("homomorphism fails for " + id.name() + " at n=" +
                                             std::to_string(n));
                                      goto next_character;
                                  }
                              }
                      next_character:;
                      }
                  }
                  for (int n = 1; n <= 12; ++n) {
                      const character_table tbl(n);
                      int total = 0;
                      for (const character_id& id : tbl.characters())
                          total += tbl.degree(id) * tbl.degree(id);
                      o.require(total == 8 * n,
                                "degree accounting fails at n=" + std::to_string(n));
                  }
              });

    criterion(7, "2 phi(T^2) = phi(T)^2 on B(<a^2>), n=2..8, all k and h", [](outcome& o) {
        for (int n = 2; n <= 8; ++n) {
            const character_table tbl(n);
            const auto atoms = a2_atoms(tbl.grp());
            for (std::size_t mask = 0; mask < (std::size_t{1} << atoms.size()); ++mask) {
                std::vector<element> t;
                for (std::size_t i = 0; i < atoms.size(); ++i)
                    if (mask & (std::size_t{1} << i))
                        t.insert(t.end(), atoms[i].begin(), atoms[i].end());
                const std::span<const element> ts(t);
                for (int index = 1; index < n; ++index)
                    for (auto fam : {character_id::family::phi, character_id::family::psi}) {
                        const character_id id{fam, index};
                        const cyclotomic lhs =
                            tbl.sum_product(id, ts, ts) + tbl.sum_product(id, ts, ts);
                        const cyclotomic sum = tbl.sum(id, ts);
                        if (!(lhs == sum * sum))
                            o.fail("identity fails at n=" + std::to_string(n) + " for " +
                                   id.name() + ", |T|=" + std::to_string(t.size()));
                    }
            }
        }
    });

    criterion(8, "root-of-unity summation lemmas, n<=12, exact", [](outcome& o) {
        for (int n = 1; n <= 12; ++n) {
            const context_ptr ctx = make_context(8 * n);
            auto xi = [&](long long t) { return root_of_unity(ctx, 4 * t); };
            auto eps = [&](long long t) { return root_of_unity(ctx, 8 * t); };
            auto expect = [&](const cyclotomic& value, long long want, const char* what) {
                const auto iv = value.as_integer();
                if (!iv || *iv != want)
                    o.fail(std::string(what) + " fails at n=" + std::to_string(n));
            };

            cyclotomic xi_sum(ctx), xi_pairs(ctx);
            for (int j = 1; j <= 2 * n - 1; ++j) {
                xi_sum += xi(j);
                xi_pairs += xi(j);
                xi_pairs += xi(-j);
            }
            expect(xi_sum, -1, "sum of xi^j");
            expect(xi_pairs, -2, "sum of xi^j + xi^-j");

            if (n > 1) {
                cyclotomic eps_sum(ctx), eps_pairs(ctx);
                for (int j = 1; j <= n - 1; ++j) {
                    eps_sum += eps(j);
                    eps_pairs += eps(j);
                    eps_pairs += eps(-j);
                }
                expect(eps_sum, -1, "sum of eps^j");
                expect(eps_pairs, -2, "sum of eps^j + eps^-j");
            }
            for (int l = 2; l <= 2 * n - 2; l += 2) {
                cyclotomic s(ctx);
                for (int j = 1; j <= n - 1; ++j) s += xi((long long)l * j);
                expect(s, -1, "even-l xi sum");
            }
        }
    });

    criterion(9, "Babai power sums vs numeric oracle, 100 random sets per n=2,3,4",
              [](outcome& o) {
                  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
                  for (int n : {2, 3, 4}) {
                      const character_table tbl(n);
                      const auto units = inverse_units(tbl.grp());
                      for (int trial = 0; trial < 100; ++trial) {
                          std::vector<element> members;
                          while (members.empty())
                              for (const auto& unit : units)
                                  if (rng() & 1)
                                      members.insert(members.end(), unit.begin(), unit.end());
                          const connection_set s(tbl.grp(), std::move(members));

                          const auto groups = spectrum_by_character(tbl, s);
                          struct labeled {
                              double value;
                              int group;
                              int root;
                          };
                          std::vector<labeled> expected;
                          for (std::size_t gi = 0; gi < groups.size(); ++gi)
                              for (std::size_t ri = 0; ri < groups[gi].roots.size(); ++ri)
                                  for (int copy = 0; copy < groups[gi].multiplicity_each;
                                       ++copy)
                                      expected.push_back(
                                          {groups[gi].roots[ri], (int)gi, (int)ri});
                          std::sort(expected.begin(), expected.end(),
                                    [](const labeled& a, const labeled& b) {
                                        return a.value > b.value;
                                    });
                          const std::vector<double> numeric =
                              numeric_eigenvalues(adjacency_matrix(s));
                          if (numeric.size() != expected.size()) {
                              o.fail("spectrum size mismatch at n=" + std::to_string(n));
                              continue;
                          }
                          bool matched = true;
                          for (std::size_t i = 0; i < numeric.size(); ++i)
                              if (std::abs(numeric[i] - expected[i].value) > 1e-6)
                                  matched = false;
                          if (!matched) {
                              o.fail("numeric spectrum does not match Babai groups at n=" +
                                     std::to_string(n) + ", trial " + std::to_string(trial));
                              continue;
                          }
                          // collapse the matched numeric values back onto the
                          // per-character roots and test both power sums
                          std::vector<std::vector<double>> sums(groups.size()),
                              counts(groups.size());
                          for (std::size_t gi = 0; gi < groups.size(); ++gi) {
                              sums[gi].assign(groups[gi].roots.size(), 0.0);
                              counts[gi].assign(groups[gi].roots.size(), 0.0);
                          }
                          for (std::size_t i = 0; i < numeric.size(); ++i) {
                              sums[expected[i].group][expected[i].root] += numeric[i];
                              counts[expected[i].group][expected[i].root] += 1.0;
                          }
                          for (std::size_t gi = 0; gi < groups.size(); ++gi) {
                              const character_id id = groups[gi].id;
                              double sum1 = 0.0, sum2 = 0.0;
                              for (std::size_t ri = 0; ri < groups[gi].roots.size(); ++ri) {
                                  const double value = sums[gi][ri] / counts[gi][ri];
                                  sum1 += value;
                                  sum2 += value * value;
                              }
                              const double p = tbl.sum(id, s).to_complex().real();
                              const double q = tbl.sum_product(id, s, s).to_complex().real();
                              if (std::abs(sum1 - p) > 1e-6 || std::abs(sum2 - q) > 1e-6)
                                  o.fail("power sums fail for " + id.name() + " at n=" +
                                         std::to_string(n));
                          }
                      }
                  }
              });

    if (failed_criteria == 0)
        std::printf("ACCEPTANCE: all 9 criteria passed\n");
    else
        std::printf("ACCEPTANCE: %d criterion(s) FAILED\n", failed_criteria);
    return failed_criteria == 0 ? 0 : 1;
}

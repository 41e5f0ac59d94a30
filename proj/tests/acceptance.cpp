// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <qtl/qtl.hpp>

using namespace qtl;

namespace {

struct Check {
  bool ok = true;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
  void expect_eq(const LaurentPoly& got, const LaurentPoly& want, const std::string& what) {
    expect(got == want, what + ": got " + got.to_string() + ", want " + want.to_string());
  }
};

LaurentPoly t(int k) { return LaurentPoly::monomial(k); }

std::string run(int id, const std::string& name, const std::function<std::string(Check&)>& body, bool& all) {
  const auto start = std::chrono::steady_clock::now();
  Check c;
  std::string detail;
  try {
    detail = body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  all = all && c.ok;
  std::ostringstream line;
  line << (c.ok ? "PASS" : "FAIL") << "  criterion " << id << "  " << name;
  if (!detail.empty()) line << "  [" << detail << "]";
  if (!c.ok) line << "  first failure: " << c.first_failure;
  line.precision(2);
  line << std::fixed << "  (" << secs << " s)";
  return line.str();
}

std::string intro_example(Check& c) {
  const Geometry g(Params::make(3, 8, {0, 4, 6}));
  const Point alpha{4, 6, 3}, beta{5, 6, 2}, gamma{4, 9, 0};
  const Block b = block_of(g, alpha);
  SoergelEngine soergel(g);
  PathEngine paths(g);
  const DecompositionMatrix routes[] = {decomposition_matrix(b, soergel, paths), kn_oracle(b, paths)};
  const char* names[] = {"Soergel", "oracle"};
  for (int k = 0; k < 2; ++k) {
    const DecompositionMatrix& dm = routes[k];
    const std::string r = names[k];
    c.expect_eq(dm.d(alpha, beta), t(1), r + " d(alpha, beta)");
    c.expect_eq(dm.d(beta, gamma), t(2), r + " d(beta, gamma)");
    c.expect_eq(dm.d(alpha, gamma), t(3), r + " d(alpha, gamma)");
    c.expect_eq(dm.standard_dim(alpha, gamma), t(3) + t(1), r + " Dim Delta_gamma(alpha)");
    c.expect_eq(dm.standard_dim(beta, gamma), t(2) + t(0), r + " Dim Delta_gamma(beta)");
    c.expect_eq(dm.character(beta, gamma), t(0), r + " Dim L_gamma(beta)");
  }
  const std::size_t closure = reflection_closure(g, distinguished_path(g.params(), gamma)).size();
  c.expect(closure == 8, "closure of omega^gamma has " + std::to_string(closure) + " paths");
  return "gamma=(4,9,0), both routes, closure " + std::to_string(closure);
}

std::string a1_example(Check& c) {
  const Geometry g(Params::make(2, 4, {0, 2}));
  const Point mu{0, 11};
  SoergelEngine soergel(g);
  const SoergelResult r = soergel.run(alcove_series(g, distinguished_path(g.params(), mu)));
  const std::map<Level2Label, LaurentPoly> want{
      {{3, true}, t(0)},         {{2, true}, t(1)}, {{1, true}, t(2) + t(0)},
      {{0, false}, t(3) + t(1)}, {{1, false}, t(2)}, {{2, false}, t(1)}};
  std::map<Level2Label, LaurentPoly> got;
  for (const auto& [a, p] : r.m.values()) got[level2_label(g, a)] = p;
  c.expect(got == want, "m row differs from (1, t, t^2+1, t^3+t, t^2, t)");
  c.expect_eq(r.n.at(g.alcove_of({4, 7})), t(2), "n_mu((4,7))");
  c.expect_eq(r.n.at(g.alcove_of({5, 6})), t(3), "n_mu((5,6))");
  c.expect_eq(r.e.at(g.alcove_of({4, 7})), t(0), "e_mu((4,7))");
  c.expect_eq(r.e.at(g.alcove_of({5, 6})), LaurentPoly(), "e_mu((5,6))");
  PathEngine paths(g);
  const auto degrees = [&](const Point& lambda) {
    std::multiset<int> out;
    for (const auto& wp : paths.paths_between(lambda, mu)) out.insert(wp.degree);
    return out;
  };
  c.expect(degrees({4, 7}) == std::multiset<int>{0, 2}, "path degrees into (4,7)");
  c.expect(degrees({5, 6}) == std::multiset<int>{1, 3}, "path degrees into (5,6)");
  return "m row over 3',2',1',0,1,2 and path degrees {2,0}, {3,1}";
}

std::string negative_degree(Check& c) {
  const Geometry g(Params::make(3, 6, {0, 2, 4}));
  const Point mu{4, 17, 0};
  SoergelEngine soergel(g);
  const SoergelResult r = soergel.run(alcove_series(g, distinguished_path(g.params(), mu)));
  c.expect(soergel.verify_factorization(r), "m_mu != sum_v n_v e_mu(v)");
  const LaurentPoly q2 = t(1) + t(-1);
  std::map<AlcoveKey, LaurentPoly> want{
      {g.alcove_of(mu), t(0)}, {g.alcove_of({15, 4, 2}), t(0)}, {g.alcove_of({6, 9, 0}), q2}};
  std::map<AlcoveKey, LaurentPoly> got;
  for (const FactorTerm& f : soergel.factor_terms(r)) got[f.alcove] = f.coefficient;
  c.expect(got == want, "factor terms differ from n_(4,17,0) + n_(15,4,2) + (t+t^-1) n_(6,9,0)");
  c.expect(g.alcove_of({6, 9, 0}) == g.alcove_of({8, 11, 2}), "(6,9,0) and (8,11,2) share an alcove");
  c.expect_eq(r.e.at(g.alcove_of({8, 11, 2})), q2, "e_mu((8,11,2))");
  c.expect_eq(r.e.at(g.alcove_of({15, 4, 2})), t(0), "e_mu((15,4,2))");
  c.expect_eq(r.e.at(g.alcove_of(mu)), t(0), "e_mu((4,17,0))");
  PathEngine paths(g);
  const Block b = block_of(g, mu);
  c.expect(!compare_matrices(decomposition_matrix(b, soergel, paths), kn_oracle(b, paths)), "routes disagree");
  return "3 factor terms, (6,9,0) read at (8,11,2)";
}

std::string tableau_layer(Check& c) {
  const Params p = Params::make(2, 4, {0, 2});
  const std::vector<std::pair<Point, std::vector<int>>> loads{{{7, 0}, {0, 2, 4, 6, 8, 10, 12}},
                                                               {{6, 1}, {0, 1, 2, 4, 6, 8, 10}},
                                                               {{3, 4}, {0, 1, 2, 3, 4, 5, 7}},
                                                               {{2, 5}, {0, 1, 2, 3, 5, 7, 9}}};
  for (const auto& [lam, xs] : loads) {
    std::vector<int> got;
    for (const auto& entry : loading(p, lam)) got.push_back(entry.x);
    c.expect(got == xs, "loading of " + lam.to_string());
  }
  const Geometry g(p);
  const Block b = block_of(g, {7, 0});
  c.expect(b.members.size() == 4, "block of (7,0) has " + std::to_string(b.members.size()) + " members");
  for (const auto& [lam, xs] : loads) c.expect(b.contains(lam), lam.to_string() + " in the block");

  const Point shape{3, 4};
  std::multiset<int> degrees;
  std::size_t count = 0;
  std::string word;
  for (const auto& [lam, xs] : loads) {
    for (const Tableau& tab : semistandard_tableaux(p, shape, lam)) {
      ++count;
      degrees.insert(tableau_degree(p, tab));
      if (lam == Point{7, 0}) {
        c.expect(tab.columns == std::vector<std::vector<int>>{{0, 2, 12}, {4, 6, 8, 10}}, "displayed tableau");
        c.expect(tableau_degree(p, tab) == 2, "displayed tableau degree");
        word = component_word(p, tab).to_string();
      }
    }
  }
  c.expect(count == 4, std::to_string(count) + " tableaux of shape ((1^3),(1^4))");
  c.expect(degrees == std::multiset<int>{0, 1, 1, 2}, "tableau degrees");
  c.expect(word == "1,1,2,2,2,2,1", "component word " + word);
  return "4 loadings, degrees 0,1,1,2, word " + word;
}

std::string level_two(Check& c) {
  std::string detail;
  for (int e = 3; e <= 6; ++e) {
    std::size_t checked = 0;
    for (const auto& kappa : valid_multicharges(2, e)) {
      const Geometry g(Params::make(2, e, kappa));
      SoergelEngine soergel(g);
      PathEngine paths(g);
      for (int n = 0; n <= 30; ++n) {
        for (const Block& b : blocks(g, n)) {
          if (!b.is_regular()) continue;
          ++checked;
          const DecompositionMatrix dm = decomposition_matrix(b, soergel, paths, {false});
          for (const Point& lam : b.members) {
            for (const Point& mu : b.members) {
              const LaurentPoly d = dm.d(lam, mu);
              const LaurentPoly want =
                  level2_closed_form(g.params(), level2_label(g, g.alcove_of(lam)), level2_label(g, g.alcove_of(mu)));
              c.expect_eq(d, want, "e=" + std::to_string(e) + " d(" + lam.to_string() + ", " + mu.to_string() + ")");
              c.expect(d.is_zero() || d.terms().begin()->first >= 0, "negative exponent in d");
            }
          }
        }
      }
    }
    detail += (detail.empty() ? "" : ", ") + std::string("e=") + std::to_string(e) + ": " +
              (checked ? std::to_string(checked) + " blocks" : std::string("vacuous, no valid multicharge"));
  }
  return detail;
}

std::string cross_oracle(Check& c) {
  std::size_t configs = 0, nblocks = 0, pairs = 0;
  for (int l : {2, 3}) {
    for (int e = 2 * l; e <= 8; ++e) {
      for (const auto& kappa : valid_multicharges(l, e)) {
        ++configs;
        const Geometry g(Params::make(l, e, kappa));
        const Params& p = g.params();
        SoergelEngine soergel(g);
        PathEngine paths(g);
        std::map<std::pair<std::vector<int>, std::vector<int>>, LaurentPoly> by_alcove;
        const std::string where = "l=" + std::to_string(l) + " e=" + std::to_string(e);
        for (int n = 0; n <= 14; ++n) {
          for (const Block& b : blocks(g, n)) {
            if (!b.is_regular()) continue;
            ++nblocks;
            const DecompositionMatrix dm = decomposition_matrix(b, soergel, paths, {false});
            // (a)
            for (const Point& mu : b.members) {
              const SoergelResult r = soergel.run(alcove_series(g, distinguished_path(p, mu)));
              for (const auto& [lam, m] : soergel.evaluate_at_points(r.m, mu, g.orbit_points(mu, n)))
                c.expect_eq(paths.graded_path_count(lam, mu), m, where + " (a) at " + lam.to_string());
            }
            // (b)
            if (auto diff = compare_matrices(dm, kn_oracle(b, paths))) c.expect(false, where + " (b) " + *diff);
            for (const Point& mu : b.members) {
              // (d)
              const std::size_t want = std::size_t{1} << g.length(g.alcove_of(mu));
              c.expect(paths.closure_size(mu) == want, where + " (d) closure of " + mu.to_string());
              for (const Point& lam : b.members) {
                const LaurentPoly d = dm.d(lam, mu);
                // (e)
                if (lam == mu) {
                  c.expect_eq(d, t(0), where + " (e) diagonal");
                } else {
                  c.expect(d.is_zero() || (d.terms().begin()->first >= 1 &&
                                           std::all_of(d.terms().begin(), d.terms().end(),
                                                       [](const auto& kv) { return kv.second > 0; })),
                           where + " (e) d = " + d.to_string());
                }
                c.expect(is_in_plus_semiring(dm.character(lam, mu)), where + " (e) character");
                // (f)
                const auto key = std::make_pair(g.alcove_of(lam).floors, g.alcove_of(mu).floors);
                auto [it, fresh] = by_alcove.emplace(key, d);
                if (!fresh) c.expect_eq(d, it->second, where + " (f) at " + lam.to_string() + ", " + mu.to_string());
              }
            }
          }
          // (c), over all pairs of one-column multipartitions
          const auto parts = one_column_multipartitions(l, n);
          for (const Point& mu : parts) {
            const auto& closure = paths.closure_by_endpoint(mu);
            for (const Point& lam : parts) {
              ++pairs;
              std::multiset<std::pair<PathWord, int>> from_tableaux, from_paths;
              std::set<PathWord> words;
              for (const Tableau& tab : semistandard_tableaux(p, lam, mu)) {
                const PathWord w = component_word(p, tab);
                words.insert(w);
                from_tableaux.insert({w, tableau_degree(p, tab)});
              }
              auto it = closure.find(lam);
              if (it != closure.end())
                for (const auto& wp : it->second) from_paths.insert({wp.path, wp.degree});
              c.expect(words.size() == from_tableaux.size() && from_tableaux == from_paths,
                       where + " (c) " + lam.to_string() + ", " + mu.to_string());
            }
          }
        }
      }
    }
  }
  return std::to_string(configs) + " configurations, " + std::to_string(nblocks) + " regular blocks, " +
         std::to_string(pairs) + " tableau pairs";
}

std::string stability(Check& c) {
  const Geometry intro(Params::make(3, 8, {0, 4, 6}));
  const Geometry a1(Params::make(2, 4, {0, 2}));
  const Block bi = block_of(intro, {4, 6, 3});
  const Block ba = block_of(a1, {0, 11});
  for (int i : {1, 2}) {
    c.expect(stability_check(intro, bi, i), "intro block, i=" + std::to_string(i));
    c.expect(stability_check(a1, ba, i), "A1 block, i=" + std::to_string(i));
  }
  return "intro and A1 blocks, i = 1, 2";
}

}  // namespace

int main() {
  bool all = true;
  std::cout << run(1, "intro example", intro_example, all) << std::endl;
  std::cout << run(2, "A1 example", a1_example, all) << std::endl;
  std::cout << run(3, "negative-degree example", negative_degree, all) << std::endl;
  std::cout << run(4, "tableau layer", tableau_layer, all) << std::endl;
  std::cout << run(5, "level two closed form", level_two, all) << std::endl;
  std::cout << run(6, "cross-oracle equivalence", cross_oracle, all) << std::endl;
  std::cout << run(7, "stability", stability, all) << std::endl;
  return all ? 0 : 1;
}

#pragma once

// The property suites, shared by the doctest runner and the acceptance binary.

#include "hopf/basket.hpp"
#include "hopf/invariants.hpp"
#include "hopf/linalg.hpp"
#include "hopf/reduction.hpp"
#include "hopf/signed_graph.hpp"
#include "hopf/twist.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <functional>
#include <string>
#include <vector>

namespace testing_support {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  long long first_failure = -1;  // case index, -1 when every case passed
};

inline std::vector<PropertyResult> run_properties(std::uint64_t seed) {
  using namespace hopf;
  std::vector<PropertyResult> out;
  auto run = [&](const std::string& name, std::size_t cases, const std::function<bool(Rng&)>& body) {
    const std::uint64_t sub = seed + 1000003ULL * (out.size() + 1);
    out.push_back({name, cases, for_all(sub, cases, body)});
  };

  run("seifert symmetrization", 200, [](Rng& rng) {
    auto s = build(random_diagram(rng, uniform(rng, 1, 8)));
    IntMatrix expect = adjacency(s.signed_graph);
    for (std::size_t i = 0; i < expect.rows(); ++i) expect(i, i) = 2;
    return s.seifert + s.seifert.transpose() == expect;
  });

  run("switching conjugation", 200, [](Rng& rng) {
    SignedGraph g = random_graph(rng, uniform(rng, 1, 8), 0.5);
    std::vector<std::size_t> sw;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (coin_sign(rng) < 0) sw.push_back(v);
    IntMatrix d = switching_matrix(g.vertex_count(), sw);
    return gram(switch_vertices(g, sw)) == d * gram(g) * d;
  });

  run("transvection unimodular and definite", 150, [](Rng& rng) {
    const std::size_t n = uniform(rng, 2, 8);
    IntMatrix m = gram(random_fushimi_tree(rng, n));
    std::size_t c = uniform(rng, 0, n - 1), b = uniform(rng, 0, n - 2);
    if (b >= c) ++b;
    const SlideMove mv{c, b, coin_sign(rng)};
    IntMatrix out = apply_slide(m, mv);
    return oracle::cofactor_det(slide_matrix(n, mv)) == 1 && oracle::pd_by_rational_elimination(out) &&
           oracle::cofactor_det(out) == oracle::cofactor_det(m);
  });

  run("twist preserves the skew form", 150, [](Rng& rng) {
    auto d = random_diagram(rng, uniform(rng, 1, 8));
    SurfaceState s(build(d).seifert);
    std::vector<Integer> c(d.n);
    for (auto& x : c) x = static_cast<long long>(uniform(rng, 0, 4)) - 2;
    IntMatrix e = twist_transvection(s, c, coin_sign(rng));
    return e.transpose() * s.skew() * e == s.skew();
  });

  run("boundary classes sum to zero", 150, [](Rng& rng) {
    auto s = build(random_diagram(rng, uniform(rng, 1, 8)));
    std::vector<Integer> sum(s.diagram.n, 0);
    for (const auto& b : s.boundary)
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += b.cls[i];
    for (const auto& x : sum)
      if (x != 0) return false;
    return true;
  });

  run("alexander congruence invariance", 100, [](Rng& rng) {
    const std::size_t n = uniform(rng, 1, 6);
    IntMatrix v = coin_sign(rng) > 0 ? build(random_diagram(rng, n)).seifert : random_matrix(rng, n, -2, 2);
    IntMatrix u = random_unimodular(rng, n, uniform(rng, 1, 10));
    return alexander(u.transpose() * v * u) == alexander(v);
  });

  run("component parity", 200, [](Rng& rng) {
    const std::size_t n = uniform(rng, 1, 10);
    auto s = build(random_diagram(rng, n));
    // components = 1 - n (mod 2)
    return (s.boundary.size() + n + 1) % 2 == 0;
  });

  return out;
}

}  // namespace testing_support

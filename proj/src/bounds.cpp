#include "sedf/constructors.hpp"
#include "sedf/errors.hpp"
#include "sedf/exact.hpp"

namespace sedf {

BoundTable bound_table(const Graph& g, int matching_capacity) {
  const long long n = g.order();
  const long long m = g.size();
  const DegreeProfile profile = degree_profile(g);
  BoundTable t;
  auto add = [&](std::string label, BoundKind kind, Rational value, std::string provenance) {
    t.entries.push_back({std::move(label), kind, value, std::move(provenance)});
  };

  add("-n^2/16", BoundKind::lower, Rational(-n * n, 16), "known lower bound, every graph");
  if (n > 0 && profile.min_degree >= 1) {
    add("n-m", BoundKind::lower, Rational(n - m), "known lower bound, minimum degree at least 1");
  }
  if (m <= matching_capacity) {
    const long long alpha = max_matching_size(g, matching_capacity);
    add("(2a'-m)/3", BoundKind::lower, Rational(2 * alpha - m, 3), "known lower bound, a' = maximum matching size");
  }

  add("n+v_odd/2", BoundKind::upper, Rational(n + profile.v_odd / 2), "odd-vertex construction");
  if (profile.v_even > 0) {
    add("n-2+v_even", BoundKind::upper, Rational(n - 2 + profile.v_even), "even-vertex construction");
  }
  if (n > 0) {
    add("(4n-2)/3", BoundKind::upper, Rational(4 * n - 2, 3), "combination of the two constructions");
    add("11n/6-1", BoundKind::upper, Rational(11 * n, 6) - 1, "earlier known upper bound");
    add("ceil(3n/2)", BoundKind::upper, Rational((3 * n + 1) / 2), "earlier known upper bound");
  }
  const bool n_minus_one_proved = profile.v_even == 1 || profile.v_even == 2 || profile.v_odd == 0 ||
                                  profile.v_odd == n;
  if (n > 0) {
    add("n-1", n_minus_one_proved ? BoundKind::upper : BoundKind::conjectured_upper, Rational(n - 1),
        n_minus_one_proved ? "proved for this parity class" : "conjectured for every graph");
  }
  if (satisfies_two_connected_premise(g)) {
    add("2n-m", BoundKind::conjectured_lower, Rational(2 * n - m),
        "conjectured for 2-connected graphs without adjacent degree-2 vertices");
  }
  if (auto sides = recognize_complete_bipartite(g)) {
    add("K_{a,b}", BoundKind::exact,
        Rational(kmn_value(static_cast<int>(sides->small.size()), static_cast<int>(sides->large.size()))),
        "closed form for complete bipartite graphs");
  }
  return t;
}

}  // namespace sedf

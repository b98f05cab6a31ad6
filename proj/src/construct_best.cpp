#include <optional>
#include <string>
#include <vector>

#include "construct_support.hpp"
#include "sedf/constructors.hpp"
#include "sedf/errors.hpp"

namespace sedf {

namespace {

struct MethodName {
  Method method;
  const char* name;
};

constexpr MethodName kMethodNames[] = {
    {Method::best, "auto"},         {Method::odd_bound, "odd-bound"}, {Method::even_count, "even-count"},
    {Method::two_even, "two-even"}, {Method::kmn, "kmn"},             {Method::all_odd, "all-odd"},
    {Method::even_zero_two, "even-zero-two"},
};

Certificate kmn_certificate(const Graph& g, const Capacity& cap) {
  const auto sides = recognize_complete_bipartite(g);
  if (!sides) throw PreconditionError("graph is not complete bipartite");
  const int value = kmn_value(static_cast<int>(sides->small.size()), static_cast<int>(sides->large.size()));
  return detail::wrap(g, detail::kmn_on_graph(g, *sides, cap), "kmn/column-pattern", value);
}

}  // namespace

std::optional<Method> parse_method(const std::string& name) {
  for (const auto& [m, n] : kMethodNames) {
    if (name == n) return m;
  }
  return std::nullopt;
}

std::string to_string(Method m) {
  for (const auto& [method, name] : kMethodNames) {
    if (method == m) return name;
  }
  return "unknown";
}

Certificate construct(const Graph& g, Method method, const Capacity& cap) {
  switch (method) {
    case Method::best:
      return construct_best(g, cap);
    case Method::odd_bound:
      return odd_bound_sedf(g, cap);
    case Method::even_count:
      return even_count_sedf(g, cap);
    case Method::two_even:
      return two_even_sedf(g, cap);
    case Method::kmn:
      return kmn_certificate(g, cap);
    case Method::all_odd:
      return detail::wrap(g, all_odd_sedf(g, cap), "all-odd/search", g.order() - 1);
    case Method::even_zero_two:
      return detail::wrap(g, even_sedf_zero_two(g, cap), "even-zero-two/search", g.order() - 1);
  }
  throw PreconditionError("unknown method");
}

Certificate construct_best(const Graph& g, const Capacity& cap) {
  const DegreeProfile profile = degree_profile(g);
  std::vector<Method> applicable;
  if (profile.v_even == 2) applicable.push_back(Method::two_even);
  if (profile.v_even > 0) applicable.push_back(Method::even_count);
  if (g.size() > 0 && profile.v_odd == g.order()) applicable.push_back(Method::all_odd);
  applicable.push_back(Method::odd_bound);
  if (g.size() > 0 && profile.v_odd == 0) applicable.push_back(Method::even_zero_two);
  if (recognize_complete_bipartite(g)) applicable.push_back(Method::kmn);

  std::optional<Certificate> best;
  for (Method m : applicable) {
    Certificate c;
    try {
      c = construct(g, m, cap);
    } catch (const CapacityError&) {
      continue;
    }
    if (!c.verdict.is_sedf0) continue;
    if (!best || c.total < best->total) best = std::move(c);
  }
  if (!best) throw CapacityError(g.size(), cap.contract_edges);
  best->verdict = verify(best->graph, best->f);
  return *best;
}

}  // namespace sedf

#include "zf/machinery.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace zf {

namespace {

std::string vertex_list(const std::vector<int>& vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i)
    out << (i ? "," : "") << vs[i];
  return out.str();
}

CheckResult pass(std::string name) {
  return {std::move(name), CheckVerdict::pass, ""};
}
CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), CheckVerdict::fail, std::move(detail)};
}
CheckResult inapplicable(std::string name, std::string detail = "") {
  return {std::move(name), CheckVerdict::inapplicable, std::move(detail)};
}

}  // namespace

Machinery build_machinery(const Graph& g, const Chronology& chron) {
  GirthValue gv = girth(g);
  if (gv.is_acyclic() || gv.length() < 5)
    throw std::invalid_argument("machinery needs finite girth >= 5");
  if (!validate_chronology(g, chron))
    throw std::invalid_argument("chronology does not replay on this graph");
  if (chron.final_black().count() != g.vertex_count())
    throw std::invalid_argument(
        "initial set is not a zero forcing set (chronology leaves white "
        "vertices)");

  Machinery m;
  m.graph = g;
  m.chronology = chron;
  m.girth_length = gv.length();

  const int n = g.vertex_count();
  const int t = chron.step_count();
  const int full = m.girth_length - 2;
  const int count = std::min(t, full);
  m.truncated = t < full;
  for (int i = 0; i < count; ++i) m.x.push_back(chron.events[i].forcer);

  const Bitset& s = chron.initial;

  // S_i = (S ∩ N(x_i)) minus the neighborhoods of all earlier forcers.
  Bitset earlier_nbhd(n);
  m.s_x_star = Bitset(n);
  for (int i = 0; i < count; ++i) {
    Bitset si = (g.neighbors(m.x[i]) & s) - earlier_nbhd;
    m.s_x_star |= si;
    m.s_sets.push_back(std::move(si));
    earlier_nbhd |= g.neighbors(m.x[i]);
  }

  Bitset x_set(n);
  for (int v : m.x) x_set.set(v);
  m.s_x_isolated = (s & x_set) - m.s_x_star;

  for (int j = 0; j < count; ++j)
    for (int i = j + 1; i < count; ++i)
      if (g.has_edge(m.x[j], m.x[i])) m.e1.emplace_back(j, i);

  // E2: {x_j, x_i} with j < i whenever N(x_i) meets S_j ∪ {y_j}. With girth
  // >= 5 that intersection is a single vertex, the unique common neighbor.
  for (int j = 0; j < count; ++j) {
    Bitset sj_yj = m.s_sets[j];
    sj_yj.set(chron.events[j].forced);
    for (int i = j + 1; i < count; ++i) {
      Bitset hits = g.neighbors(m.x[i]) & sj_yj;
      int w = hits.first();
      if (w == -1) continue;
      if (hits.next(w) != -1)
        throw std::logic_error(
            "two common neighbors between forcers despite girth >= 5");
      m.e2.push_back({j, i, w});
    }
  }

  // Components of H1 over X positions.
  std::vector<std::vector<int>> adj(count);
  for (auto [j, i] : m.e1) {
    adj[j].push_back(i);
    adj[i].push_back(j);
  }
  std::vector<int> comp_of(count, -1);
  for (int p = 0; p < count; ++p) {
    if (comp_of[p] != -1) continue;
    std::vector<int> comp, stack{p};
    comp_of[p] = 0;  // provisional mark
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v : adj[u])
        if (comp_of[v] == -1) {
          comp_of[v] = 0;
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    m.components.push_back(std::move(comp));
  }
  std::stable_sort(m.components.begin(), m.components.end(),
                   [](const auto& a, const auto& b) {
                     if (a.size() != b.size()) return a.size() > b.size();
                     return a.front() < b.front();
                   });
  for (std::size_t c = 0; c < m.components.size(); ++c)
    for (int p : m.components[c]) comp_of[p] = static_cast<int>(c);
  for (const auto& comp : m.components)
    if (comp.size() >= 2) ++m.l;

  for (const auto& e : m.e2) {
    if (comp_of[e.j] == comp_of[e.i]) {
      m.e2_prime.push_back(e);
    } else {
      m.e2_doubleprime.push_back(e);
      int p = std::min(comp_of[e.j], comp_of[e.i]);
      int q = std::max(comp_of[e.j], comp_of[e.i]);
      m.h4_edges.emplace_back(p, q);
    }
  }
  std::sort(m.h4_edges.begin(), m.h4_edges.end());
  m.h4_edges.erase(std::unique(m.h4_edges.begin(), m.h4_edges.end()),
                   m.h4_edges.end());
  return m;
}

CheckResult check_si_identity(const Machinery& m) {
  for (int i = 0; i < m.forcer_count(); ++i) {
    int e2_before = 0;
    for (const auto& e : m.e2)
      if (e.i == i) ++e2_before;
    int expected = m.graph.degree(m.x[i]) - 1 - e2_before;
    if (m.s_sets[i].count() != expected) {
      std::ostringstream detail;
      detail << "step " << i + 1 << " (forcer " << m.x[i] << "): |S_i|="
             << m.s_sets[i].count() << " but deg-1-e2=" << expected;
      return fail("si_identity", detail.str());
    }
  }
  return pass("si_identity");
}

CheckResult check_star(const Machinery& m, int u) {
  std::vector<int> in_x;  // positions of u's neighbors inside X
  for (int p = 0; p < m.forcer_count(); ++p)
    if (m.graph.has_edge(u, m.x[p])) in_x.push_back(p);
  if (in_x.empty()) return inapplicable("star", "no neighbor in X");

  int center = *std::min_element(in_x.begin(), in_x.end());
  std::set<std::pair<int, int>> expected;
  for (int p : in_x)
    if (p != center)
      expected.insert({std::min(center, p), std::max(center, p)});

  std::set<int> members(in_x.begin(), in_x.end());
  std::set<std::pair<int, int>> actual;
  for (const auto& e : m.e2)
    if (members.count(e.j) && members.count(e.i)) actual.insert({e.j, e.i});

  if (actual != expected) {
    std::ostringstream detail;
    detail << "u=" << u << ": E2 within N(u)∩X is not the star at step "
           << center + 1 << " (forcer " << m.x[center] << ")";
    return fail("star", detail.str());
  }
  return pass("star");
}

CheckResult check_component_identity(const Machinery& m) {
  if (m.truncated)
    return inapplicable("component_identity",
                        "chronology shorter than girth-2");
  for (std::size_t c = 0; c < m.components.size(); ++c) {
    const auto& comp = m.components[c];
    if (comp.size() < 2) continue;
    std::set<int> members(comp.begin(), comp.end());
    int internal = 0;
    for (const auto& e : m.e2) {
      if (!members.count(e.j) || !members.count(e.i)) continue;
      ++internal;
      // The witness of an internal edge must itself be a component member.
      auto it = std::find(m.x.begin(), m.x.end(), e.witness);
      if (it == m.x.end() ||
          !members.count(static_cast<int>(it - m.x.begin()))) {
        std::ostringstream detail;
        detail << "component " << c << ": witness " << e.witness
               << " of edge {" << m.x[e.j] << "," << m.x[e.i]
               << "} lies outside the component";
        return fail("component_identity", detail.str());
      }
    }
    if (internal != static_cast<int>(comp.size()) - 2) {
      std::ostringstream detail;
      detail << "component " << c << " (size " << comp.size()
             << "): |E2 inside|=" << internal << ", expected "
             << comp.size() - 2;
      return fail("component_identity", detail.str());
    }
  }
  return pass("component_identity");
}

namespace {

// Unordered position-pair lookup for the H3 edge set E1 ∪ E2''.
struct H3Edges {
  std::set<std::pair<int, int>> e1;
  std::map<std::pair<int, int>, int> e2pp;  // pair -> witness

  explicit H3Edges(const Machinery& m) {
    for (auto [j, i] : m.e1) e1.insert({j, i});
    for (const auto& e : m.e2_doubleprime) e2pp[{e.j, e.i}] = e.witness;
  }
  static std::pair<int, int> key(int a, int b) {
    return {std::min(a, b), std::max(a, b)};
  }
  bool has(int a, int b) const {
    auto k = key(a, b);
    return e1.count(k) || e2pp.count(k);
  }
  std::optional<int> witness(int a, int b) const {
    auto it = e2pp.find(key(a, b));
    if (it == e2pp.end()) return std::nullopt;
    return it->second;
  }
};

}  // namespace

std::vector<int> lift_cycle(const Machinery& m, const std::vector<int>& cycle) {
  const int len = static_cast<int>(cycle.size());
  if (len < 3) throw std::invalid_argument("cycle needs at least 3 vertices");

  std::vector<int> pos(len);
  for (int i = 0; i < len; ++i) {
    auto it = std::find(m.x.begin(), m.x.end(), cycle[i]);
    if (it == m.x.end())
      throw std::invalid_argument("cycle vertex " + std::to_string(cycle[i]) +
                                  " is not a forcer in X");
    pos[i] = static_cast<int>(it - m.x.begin());
  }
  if (std::set<int>(pos.begin(), pos.end()).size() != pos.size())
    throw std::invalid_argument("cycle repeats a vertex");

  H3Edges h3(m);
  for (int i = 0; i < len; ++i)
    if (!h3.has(pos[i], pos[(i + 1) % len]))
      throw std::invalid_argument("consecutive cycle vertices " +
                                  std::to_string(cycle[i]) + "," +
                                  std::to_string(cycle[(i + 1) % len]) +
                                  " are not an H3 edge");

  // Group the cycle's E2'' edges by witness. The star lemma forces a witness
  // to certify at most two cycle edges, and then they share the star center.
  std::map<int, std::vector<int>> by_witness;  // witness -> edge indices
  int s_used = 0;
  for (int i = 0; i < len; ++i) {
    auto w = h3.witness(pos[i], pos[(i + 1) % len]);
    if (w) {
      by_witness[*w].push_back(i);
      ++s_used;
    }
  }

  std::vector<int> insert_after(len, -1);   // lone edge: detour via witness
  std::vector<int> replace_with(len, -1);   // shared vertex collapses onto it
  for (const auto& [w, edges] : by_witness) {
    if (edges.size() == 1) {
      insert_after[edges[0]] = w;
    } else if (edges.size() == 2) {
      int a = edges[0], b = edges[1];
      // Adjacent edges a, b share the vertex between them.
      int shared;
      if ((a + 1) % len == b)
        shared = b;
      else if ((b + 1) % len == a)
        shared = a;
      else
        throw std::logic_error("witness shared by non-adjacent cycle edges");
      replace_with[shared] = w;
    } else {
      throw std::logic_error("witness certifies more than two cycle edges");
    }
  }

  std::vector<int> lifted;
  for (int i = 0; i < len; ++i) {
    lifted.push_back(replace_with[i] == -1 ? cycle[i] : replace_with[i]);
    if (insert_after[i] != -1) lifted.push_back(insert_after[i]);
  }

  // The lift must be a simple cycle of G no longer than λ + s.
  if (static_cast<int>(lifted.size()) > len + s_used)
    throw std::logic_error("lifted cycle exceeds the λ+s length bound");
  if (std::set<int>(lifted.begin(), lifted.end()).size() != lifted.size())
    throw std::logic_error("lifted cycle repeats a vertex");
  for (std::size_t i = 0; i < lifted.size(); ++i)
    if (!m.graph.has_edge(lifted[i], lifted[(i + 1) % lifted.size()]))
      throw std::logic_error("lifted cycle uses a non-edge of G");
  return lifted;
}

std::optional<std::vector<int>> find_h3_cycle(const Machinery& m) {
  const int count = m.forcer_count();
  std::vector<std::vector<int>> adj(count);
  auto link = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (auto [j, i] : m.e1) link(j, i);
  for (const auto& e : m.e2_doubleprime) link(e.j, e.i);
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());

  std::vector<int> parent(count, -2);
  for (int root = 0; root < count; ++root) {
    if (parent[root] != -2) continue;
    parent[root] = -1;
    std::vector<std::pair<int, int>> stack{{root, -1}};
    while (!stack.empty()) {
      auto [u, from] = stack.back();
      stack.pop_back();
      for (int v : adj[u]) {
        if (v == from) continue;
        if (parent[v] == -2) {
          parent[v] = u;
          stack.push_back({v, u});
        } else {
          // Back edge u-v: walk both tree paths up to their meeting point.
          std::vector<int> pu{u}, pv{v};
          std::set<int> seen(pu.begin(), pu.end());
          for (int w = parent[u]; w != -1; w = parent[w]) {
            pu.push_back(w);
            seen.insert(w);
          }
          while (!seen.count(pv.back())) pv.push_back(parent[pv.back()]);
          int meet = pv.back();
          std::vector<int> cyc;
          for (int w : pu) {
            cyc.push_back(m.x[w]);
            if (w == meet) break;
          }
          for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it)
            cyc.push_back(m.x[*it]);
          if (cyc.size() >= 3) return cyc;
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

CheckResult invariant_s_sets_disjoint(const Machinery& m) {
  Bitset seen(m.graph.vertex_count());
  for (int i = 0; i < m.forcer_count(); ++i) {
    if (seen.intersects(m.s_sets[i]))
      return fail("s_sets_pairwise_disjoint",
                  "S_" + std::to_string(i + 1) + " meets an earlier S_j");
    seen |= m.s_sets[i];
  }
  if (!(seen == m.s_x_star))
    return fail("s_sets_pairwise_disjoint", "S_X* is not the union of S_i");
  return pass("s_sets_pairwise_disjoint");
}

CheckResult invariant_s_star_isolated_disjoint(const Machinery& m) {
  if (m.s_x_star.intersects(m.s_x_isolated))
    return fail("s_star_isolated_disjoint", "S_X* meets S_X");
  return pass("s_star_isolated_disjoint");
}

CheckResult invariant_e1_e2_disjoint(const Machinery& m) {
  std::set<std::pair<int, int>> e1(m.e1.begin(), m.e1.end());
  for (const auto& e : m.e2)
    if (e1.count({e.j, e.i}))
      return fail("e1_e2_disjoint", "edge {" + std::to_string(m.x[e.j]) + "," +
                                        std::to_string(m.x[e.i]) +
                                        "} is in both E1 and E2");
  return pass("e1_e2_disjoint");
}

CheckResult invariant_e2_witness_unique(const Machinery& m) {
  for (const auto& e : m.e2) {
    Bitset common = common_neighbors(m.graph, m.x[e.j], m.x[e.i]);
    if (common.count() != 1 || !common.test(e.witness)) {
      std::ostringstream detail;
      detail << "edge {" << m.x[e.j] << "," << m.x[e.i] << "}: expected a "
             << "unique common neighbor equal to witness " << e.witness;
      return fail("e2_witness_unique", detail.str());
    }
  }
  return pass("e2_witness_unique");
}

CheckResult invariant_h1_forest(const Machinery& m) {
  // A graph is a forest iff |E| = |V| - #components.
  long long expected = m.forcer_count() - m.component_count();
  if (static_cast<long long>(m.e1.size()) != expected)
    return fail("h1_forest", "H1 has " + std::to_string(m.e1.size()) +
                                 " edges, a forest would have " +
                                 std::to_string(expected));
  return pass("h1_forest");
}

CheckResult invariant_isolated_identity(const Machinery& m) {
  std::vector<char> isolated(m.forcer_count(), 1);
  for (auto [j, i] : m.e1) isolated[j] = isolated[i] = 0;
  Bitset expected(m.graph.vertex_count());
  for (int p = 0; p < m.forcer_count(); ++p) {
    if (!isolated[p]) continue;
    if (!m.chronology.initial.test(m.x[p]))
      return fail("isolated_identity",
                  "isolated forcer " + std::to_string(m.x[p]) +
                      " (step " + std::to_string(p + 1) +
                      ") is not initially black");
    expected.set(m.x[p]);
  }
  if (!(expected == m.s_x_isolated))
    return fail("isolated_identity",
                "S_X differs from the isolated vertices of H1");
  return pass("isolated_identity");
}

CheckResult invariant_e2_partition(const Machinery& m) {
  if (m.e2_prime.size() + m.e2_doubleprime.size() != m.e2.size())
    return fail("e2_partition", "E2' and E2'' do not partition E2");
  return pass("e2_partition");
}

CheckResult invariant_sum_identity(const Machinery& m) {
  long long sum_si = 0, sum_deg = 0;
  for (int i = 0; i < m.forcer_count(); ++i) {
    sum_si += m.s_sets[i].count();
    sum_deg += m.graph.degree(m.x[i]) - 1;
  }
  long long rhs = sum_deg - static_cast<long long>(m.e2.size());
  if (m.s_x_star.count() != sum_si || sum_si != rhs) {
    std::ostringstream detail;
    detail << "|S_X*|=" << m.s_x_star.count() << ", Σ|S_i|=" << sum_si
           << ", Σ(deg-1)-|E2|=" << rhs;
    return fail("si_sum_identity", detail.str());
  }
  return pass("si_sum_identity");
}

CheckResult check_star_all(const Machinery& m) {
  bool any = false;
  for (int u = 0; u < m.graph.vertex_count(); ++u) {
    CheckResult r = check_star(m, u);
    if (r.verdict == CheckVerdict::fail) return r;
    if (r.verdict == CheckVerdict::pass) any = true;
  }
  return any ? pass("star") : inapplicable("star", "X is empty");
}

CheckResult check_cycle_lift(const Machinery& m) {
  auto cycle = find_h3_cycle(m);
  if (!cycle) return inapplicable("cycle_lift", "H3 is a forest");
  try {
    std::vector<int> lifted = lift_cycle(m, *cycle);
    std::ostringstream detail;
    detail << "H3 cycle [" << vertex_list(*cycle) << "] lifts to G cycle ["
           << vertex_list(lifted) << "]";
    return {"cycle_lift", CheckVerdict::pass, detail.str()};
  } catch (const std::logic_error& e) {
    return fail("cycle_lift", e.what());
  }
}

}  // namespace

LemmaReport hypothesis_report(const Graph& g, const Machinery& m) {
  LemmaReport r;
  const long long delta = min_degree(g);
  const long long girth_len = m.girth_length;
  r.s_size = m.chronology.initial.count();
  r.s_threshold = (delta - 2) * (girth_len - 3) + delta - 1;
  r.hypothesis_satisfied = r.s_size <= r.s_threshold;
  r.e2_size = static_cast<long long>(m.e2.size());
  r.e2_lower = girth_len - 3 + m.s_x_isolated.count();
  r.e2pp_size = static_cast<long long>(m.e2_doubleprime.size());
  r.e2pp_lower = 2LL * m.component_count() - 1;
  r.k = m.component_count();
  r.l = m.l;
  r.truncated = m.truncated;
  if (r.hypothesis_satisfied) {
    std::ostringstream detail;
    detail << "|S|=" << r.s_size << " <= " << r.s_threshold
           << " would contradict the girth/degree bound";
    r.checks.push_back(fail("hypothesis_refuted", detail.str()));
  } else {
    r.checks.push_back(pass("hypothesis_refuted"));
  }
  return r;
}

LemmaReport run_all_checks(const Graph& g, const Bitset& s) {
  DerivedSet derived = derived_set(g, s);
  if (derived.closure.count() != g.vertex_count())
    throw std::invalid_argument("the given set is not a zero forcing set");
  Machinery m = build_machinery(g, derived.chronology);

  LemmaReport report = hypothesis_report(g, m);
  std::vector<CheckResult> structural{
      invariant_s_sets_disjoint(m),   invariant_s_star_isolated_disjoint(m),
      invariant_e1_e2_disjoint(m),    invariant_e2_witness_unique(m),
      invariant_h1_forest(m),         invariant_isolated_identity(m),
      invariant_e2_partition(m),      check_si_identity(m),
      invariant_sum_identity(m),      check_star_all(m),
      check_component_identity(m),    check_cycle_lift(m)};
  for (auto& c : structural) report.checks.push_back(std::move(c));
  return report;
}

}  // namespace zf

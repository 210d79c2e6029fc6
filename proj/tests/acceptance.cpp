// Acceptance suite: one pass/fail line per criterion, exit 0 only if all
// pass. Every expectation is exact (integer equality / exit codes); there
// are no tolerances to tune.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zf/bounds.hpp"
#include "zf/forcing.hpp"
#include "zf/graph.hpp"
#include "zf/graph6.hpp"
#include "zf/machinery.hpp"
#include "zf/solver.hpp"

using json = nlohmann::json;

namespace {

int failures = 0;

void report(int criterion, const std::string& text, bool ok,
            const std::string& note = "") {
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion,
              text.c_str(), note.empty() ? "" : " -- ", note.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

struct RunOutput {
  int exit_code = -1;
  std::string out;
};

RunOutput run_tool(const std::string& args) {
  std::string cmd = std::string(ZF_TOOL_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  RunOutput result;
  if (!pipe) return result;
  std::array<char, 1 << 16> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.out.append(buf.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

std::string data_file(const std::string& name) {
  return std::string(ZF_DATA_DIR) + "/" + name;
}

int exact_z(const zf::Graph& g) {
  zf::SolveResult r = zf::zero_forcing_number(g);
  if (!r.exact() || !zf::verify_witness(g, r)) return -1;
  return r.z;
}

// All minimum zero forcing sets, by plain enumeration at size z.
std::vector<zf::Bitset> all_minimum_witnesses(const zf::Graph& g, int z) {
  const int n = g.vertex_count();
  std::vector<zf::Bitset> out;
  std::vector<int> idx(z);
  for (int i = 0; i < z; ++i) idx[i] = i;
  while (true) {
    zf::Bitset s(n);
    for (int v : idx) s.set(v);
    if (zf::is_zero_forcing_set(g, s)) out.push_back(s);
    int i = z - 1;
    while (i >= 0 && idx[i] == n - z + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < z; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

void criterion1() {
  std::ostringstream note;
  bool ok = true;
  auto expect = [&](const zf::Graph& g, int want, const std::string& label) {
    int got = exact_z(g);
    if (got != want) {
      ok = false;
      note << label << ": z=" << got << " expected " << want << "; ";
    }
  };
  for (int g = 3; g <= 12; ++g)
    expect(zf::make_cycle(g), 2, "C_" + std::to_string(g));
  for (int d = 1; d <= 6; ++d)
    expect(zf::make_complete(d + 1), d, "K_" + std::to_string(d + 1));
  for (int d = 2; d <= 4; ++d)
    expect(zf::make_complete_bipartite(d, d), 2 * d - 2,
           "K_{" + std::to_string(d) + "," + std::to_string(d) + "}");
  expect(zf::make_hypercube(3), 4, "Q_3");
  expect(zf::make_petersen(), 5, "Petersen");
  expect(zf::make_heawood(), 6, "Heawood");
  report(1, "tight-case table solved exactly", ok, note.str());
}

void criterion2() {
  std::string path = data_file("connected_mindeg2_3to8.g6");
  std::size_t corpus_size = read_lines(path).size();
  RunOutput r = run_tool("check-bound --jobs 2 " + path);
  std::size_t records = 0, skipped = 0, errors = 0;
  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++records;
    json rec = json::parse(line);
    if (rec.contains("skip_reason")) ++skipped;
    if (rec.contains("error")) ++errors;
  }
  std::ostringstream note;
  note << "exit=" << r.exit_code << ", graphs=" << records
       << ", skipped=" << skipped << ", errors=" << errors;
  bool ok = r.exit_code == 0 && records == corpus_size && corpus_size > 7000 &&
            skipped == 0 && errors == 0;
  report(2, "Z >= delta+(delta-2)(girth-3) across the n<=8 corpus", ok,
         note.str());
}

void criterion3() {
  auto lines = read_lines(data_file("oracle_sample_n_le9.g6"));
  bool ok = lines.size() >= 500;
  std::ostringstream note;
  note << lines.size() << " graphs";
  long long checked = 0;
  for (const auto& line : lines) {
    zf::Graph g = zf::parse_graph_line(line);
    zf::SolveResult fast = zf::zero_forcing_number(g);
    zf::SolveResult slow = zf::brute_force_oracle(g);
    if (!fast.exact() || fast.z != slow.z || fast.witness != slow.witness ||
        !zf::verify_witness(g, fast)) {
      ok = false;
      note << "; mismatch on " << line;
      break;
    }
    ++checked;
  }
  note << ", " << checked << " agreed";
  report(3, "solver matches the enumeration oracle on connected n<=9", ok,
         note.str());
}

void criterion4() {
  bool ok = true;
  std::ostringstream note;
  for (int n = 1; n <= 7; ++n) {
    int brute = zf::extremal_bruteforce(n, 3).max_edges;
    if (brute != zf::mantel_ex(n)) {
      ok = false;
      note << "mantel mismatch at n=" << n << "; ";
    }
  }
  const int expected[4] = {5, 6, 8, 10};  // the ell=4 window values
  for (int n = 5; n <= 8; ++n) {
    long long formula = zf::abajo_dianez_ex(n, 4);
    int brute = zf::extremal_bruteforce(n, 4).max_edges;
    if (formula != expected[n - 5] || brute != formula) {
      ok = false;
      note << "ell=4 mismatch at n=" << n << " (formula " << formula
           << ", brute " << brute << "); ";
    }
  }
  report(4, "extremal brute force reproduces both closed forms", ok,
         note.str());
}

void criterion5() {
  bool ok = true;
  std::ostringstream note;
  long long graphs = 0, witnesses = 0;

  std::vector<zf::Graph> pool{zf::make_petersen(), zf::make_heawood(),
                              zf::make_mcgee()};
  for (const auto& file :
       {std::string("connected_mindeg2_3to8.g6"),
        std::string("girth5_extra_9_10.g6")})
    for (const auto& line : read_lines(data_file(file))) {
      zf::Graph g = zf::parse_graph_line(line);
      zf::GirthValue gv = zf::girth(g);
      if (g.vertex_count() > 10) continue;
      if (gv.is_acyclic() || gv.length() < 5 || zf::min_degree(g) < 2)
        continue;
      // Order bound: girth >= 5 and delta >= 2 force n >= g(delta-1).
      if (g.vertex_count() <
          zf::min_order_bound(gv.length(), zf::min_degree(g))) {
        ok = false;
        note << "order bound violated by " << line << "; ";
      }
      pool.push_back(std::move(g));
    }

  for (const zf::Graph& g : pool) {
    int z = exact_z(g);
    if (z < 0) {
      ok = false;
      note << "solve failed on a corpus graph; ";
      break;
    }
    ++graphs;
    for (const zf::Bitset& witness : all_minimum_witnesses(g, z)) {
      zf::LemmaReport r = zf::run_all_checks(g, witness);
      ++witnesses;
      if (!r.overall_pass() || r.hypothesis_satisfied) {
        ok = false;
        note << "failure on " << zf::write_graph6(g) << " with set {";
        for (int v : witness.to_vector()) note << v << ",";
        note << "}: ";
        for (const auto& c : r.checks)
          if (c.verdict == zf::CheckVerdict::fail)
            note << c.name << " (" << c.detail << "); ";
        report(5, "lemma suite over every minimum witness", false, note.str());
        return;
      }
    }
  }
  note << graphs << " graphs, " << witnesses << " minimum witnesses, 0 failures";
  report(5, "lemma suite over every minimum witness (g>=5, delta>=2, n<=10)",
         ok, note.str());
}

void criterion6() {
  RunOutput r = run_tool("named mcgee --emit report --workers 4");
  bool ok = r.exit_code == 0;
  std::ostringstream note;
  note << "exit=" << r.exit_code;
  if (ok) {
    json rec = json::parse(r.out);
    int z = rec.value("z", -1);
    ok = rec["girth"] == 7 && rec["min_degree"] == 3 && z >= 7 && z <= 8 &&
         rec["status"] == "exact";
    note << ", girth=" << rec["girth"] << ", delta=" << rec["min_degree"]
         << ", z=" << z;
    if (ok && z == 8) {
      // Confirm exactness through the dumb path as well: none of the
      // C(24,7) subsets forces, so 8 is not just the solver's claim.
      bool no_smaller = all_minimum_witnesses(zf::make_mcgee(), 7).empty();
      ok = no_smaller;
      note << (no_smaller ? ", no size-7 set forces (verified exhaustively)"
                          : ", but a size-7 forcing set exists!");
    }
  }
  report(6, "mcgee report: girth 7, delta 3, exact z inside [7,8]", ok,
         note.str());
}

void criterion7() {
  bool ok = true;
  std::ostringstream note;

  // (a) closure laws on 10^3 random (graph, set) pairs.
  std::mt19937_64 rng(777);
  auto random_graph = [&](int n, double p) {
    std::vector<std::pair<int, int>> edges;
    std::uniform_real_distribution<double> coin(0, 1);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng) < p) edges.emplace_back(i, j);
    return zf::Graph::from_edges(n, edges);
  };
  for (int trial = 0; trial < 1000 && ok; ++trial) {
    int n = 1 + int(rng() % 12);
    zf::Graph g = random_graph(n, 0.1 + 0.6 * (rng() % 100) / 100.0);
    zf::Bitset s(n), extra(n);
    for (int v = 0; v < n; ++v) {
      if (rng() % 10 < 3) s.set(v);
      if (rng() % 10 < 2) extra.set(v);
    }
    zf::Bitset closure = zf::closure_of(g, s);
    if (!s.is_subset_of(closure)) ok = false;
    if (!(zf::closure_of(g, closure) == closure)) ok = false;
    if (!closure.is_subset_of(zf::closure_of(g, s | extra))) ok = false;
    // Order independence: apply eligible forces in a scrambled order.
    zf::Bitset scrambled = s;
    while (true) {
      auto forces = zf::eligible_forces(g, {scrambled});
      if (forces.empty()) break;
      scrambled.set(forces[rng() % forces.size()].second);
    }
    if (!(scrambled == closure)) ok = false;
    if (!ok) note << "closure law violated at trial " << trial << "; ";
  }

  // (b) graph6 round-trip on all 1024 codes with 5 vertices.
  for (unsigned mask = 0; mask < (1u << 10) && ok; ++mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j, ++bit)
        if ((mask >> bit) & 1) edges.emplace_back(i, j);
    zf::Graph g = zf::Graph::from_edges(5, edges);
    std::string line = zf::write_graph6(g);
    if (!(zf::parse_graph6(line) == g) ||
        zf::write_graph6(zf::parse_graph6(line)) != line) {
      ok = false;
      note << "graph6 round-trip failed for mask " << mask << "; ";
    }
  }

  // (c) byte-identical records (minus timing) for worker counts 1 and 4.
  std::string sample = data_file("oracle_sample_n_le9.g6");
  RunOutput serial = run_tool("number --workers 1 --jobs 1 " + sample);
  RunOutput parallel = run_tool("number --workers 4 --jobs 4 " + sample);
  if (serial.exit_code != 0 || parallel.exit_code != 0) {
    ok = false;
    note << "stream run failed; ";
  } else {
    std::istringstream a(serial.out), b(parallel.out);
    std::string la, lb;
    long long compared = 0;
    while (std::getline(a, la) && std::getline(b, lb)) {
      json ja = json::parse(la), jb = json::parse(lb);
      for (json* rec : {&ja, &jb}) {
        rec->erase("wall_time");
        rec->erase("nodes");  // work counters vary with scheduling
      }
      if (ja != jb) {
        ok = false;
        note << "divergence at record " << compared << "; ";
        break;
      }
      ++compared;
    }
    if (ok && compared == 0) {
      ok = false;
      note << "no records compared; ";
    }
  }

  report(7, "property suites: closure laws, graph6 round-trip, determinism",
         ok, note.str());
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  if (failures == 0) {
    std::printf("all 7 acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}

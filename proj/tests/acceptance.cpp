// Acceptance checks. Prints one PASS/FAIL/SKIP line per criterion.
//   acceptance        run every criterion
//   acceptance N      run criterion N only (exit 77 when skipped)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <thread>

#include "bench.hpp"
#include "cli_support.hpp"
#include "lpsplit/connectivity.hpp"
#include "lpsplit/generate.hpp"
#include "lpsplit/lpa.hpp"
#include "lpsplit/membership.hpp"
#include "lpsplit/metrics.hpp"
#include "lpsplit/split.hpp"
#include "support.hpp"

using namespace lpsplit;
namespace t = lpsplit::testing;

namespace {

enum class Status { pass, fail, skip };

struct Verdict {
  Status status = Status::pass;
  std::string detail;
};

Verdict fail(std::string why) { return {Status::fail, std::move(why)}; }

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

/** True when every community maps to a single union-find component. */
bool oracle_connected(const Graph& g, const Labels& labels) {
  Labels comp = oracle_components(g, labels);
  std::vector<Label> seen(g.num_vertices(), static_cast<Label>(g.num_vertices()));
  for (VertexId i = 0; i < g.num_vertices(); ++i) {
    Label c = labels[i];
    if (seen[c] == g.num_vertices()) seen[c] = comp[i];
    else if (seen[c] != comp[i]) return false;
  }
  return true;
}

bool detector_clean(const Graph& g, const Labels& labels) {
  auto flags = disconnected_communities(g, labels);
  return std::count(flags.begin(), flags.end(), 1) == 0;
}

std::vector<t::fs::path> fixture_files() {
  std::vector<t::fs::path> out;
  for (const auto& entry : t::fs::directory_iterator(LPSPLIT_FIXTURE_DIR)) out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

Graph load_fixture(const t::fs::path& p) {
  return p.extension() == ".mtx" ? load_mtx(p.string()) : load_edgelist({p.string()});
}

PlantedPartitionParams planted(std::uint64_t seed) {
  PlantedPartitionParams p;
  p.n = 100 + (seed * 389) % 1901;
  p.communities = 2 + seed % 30;
  const double block = static_cast<double>(p.n) / p.communities;
  p.p_in = std::min(1.0, 8.0 / block);
  p.p_out = 1.5 / p.n;
  p.seed = seed;
  return p;
}


// Zero disconnected communities after splitting, through the detect command.
Verdict criterion_1() {
  t::ScratchDir dir;
  std::vector<t::fs::path> inputs = fixture_files();
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto path = dir / ("planted_" + std::to_string(seed) + ".txt");
    std::ofstream f(path);
    write_edgelist(f, planted_partition_edges(planted(seed)));
    inputs.push_back(path);
  }
  std::size_t runs = 0, unsplit_disconnected = 0;
  for (const auto& input : inputs) {
    Graph g = load_fixture(input);
    LpaParams none;
    none.split = SplitStrategy::none;
    none.worker_count = 1;
    unsplit_disconnected += !detector_clean(g, lpa(g, none).final_labels);
    for (std::string split : {"lp", "lpp", "bfs"}) {
      for (std::string threads : {"1", "4"}) {
        auto m = dir / "m.tsv";
        auto r = t::run_cli({"detect", "--input", input.string(), "--split", split, "--threads", threads,
                             "--output", m.string()});
        if (r.code != 0) return fail("detect failed on " + input.filename().string() + ": " + r.err);
        double fraction = r.json()["result"]["fraction_disconnected"];
        Labels labels = load_membership(m.string());
        if (fraction != 0 || !detector_clean(g, labels) || !oracle_connected(g, labels))
          return fail(input.filename().string() + " split=" + split + " threads=" + threads);
        ++runs;
      }
    }
  }
  return {Status::pass, fmt("%zu detect runs, all communities connected (%zu of %zu graphs disconnect without splitting)",
                            runs, unsplit_disconnected, inputs.size())};
}


struct SearchHit {
  std::uint64_t seed;
  Graph graph;
};

/** Random small weighted graphs; the first whose unsplit single-worker run leaves a community disconnected. */
std::optional<SearchHit> search_disconnection(std::uint64_t limit) {
  for (std::uint64_t seed = 0; seed < limit; ++seed) {
    std::mt19937_64 rng(seed);
    std::size_t n = 5 + rng() % 6;
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i)
      for (VertexId j = i + 1; j < n; ++j)
        if (rng() % 100 < 35) edges.push_back({i, j, static_cast<double>(1 + rng() % 4)});
    Graph g = build_graph(n, edges);
    LpaParams p;
    p.split = SplitStrategy::none;
    p.worker_count = 1;
    if (!detector_clean(g, lpa(g, p).final_labels)) return SearchHit{seed, std::move(g)};
  }
  return std::nullopt;
}

// A cut vertex leaving its community disconnects it when splitting is off.
Verdict criterion_2() {
  auto hit = search_disconnection(400000);
  if (!hit) return fail("search found no disconnecting graph");
  // The frozen fixture is the search result with trailing isolated vertices removed.
  Graph frozen = load_edgelist({t::fixture("cut_vertex.txt").string()});
  if (undirected_edges(frozen) != undirected_edges(hit->graph)) return fail("frozen fixture differs from search hit");

  auto r = t::run_cli({"detect", "--input", t::fixture("cut_vertex.txt").string(), "--split", "none", "--threads", "1"});
  if (r.code != 0) return fail("detect failed: " + r.err);
  double fraction = r.json()["result"]["fraction_disconnected"];
  if (!(fraction > 0)) return fail("fixture stayed connected");
  LpaParams p;
  p.split = SplitStrategy::none;
  p.worker_count = 1;
  if (oracle_connected(frozen, lpa(frozen, p).final_labels)) return fail("union-find oracle disagrees");
  return {Status::pass, fmt("search hit at seed %llu; fraction_disconnected = %.4f", (unsigned long long)hit->seed,
                            fraction)};
}


// Every splitter equals the union-find oracle exactly.
Verdict criterion_3() {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto inst = t::random_instance(seed, 64);
    Labels expect = oracle_components(inst.graph, inst.labels);
    for (bool prune : {false, true})
      if (split_lp(inst.graph, inst.labels, prune).labels != expect)
        return fail(fmt("split_lp prune=%d differs on seed %llu", prune, (unsigned long long)seed));
    for (int workers : {1, 2, 4})
      if (split_bfs(inst.graph, inst.labels, workers).labels != expect)
        return fail(fmt("split_bfs T=%d differs on seed %llu", workers, (unsigned long long)seed));
  }
  return {Status::pass, "100 instances x 5 splitter configurations identical"};
}


// Both modularity forms agree; hand values; range.
Verdict criterion_4() {
  double worst = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto inst = t::random_instance(seed, 64);
    auto q = modularity(inst.graph, inst.labels);
    auto q_edge = modularity_edge_form(inst.graph, inst.labels);
    if (!q) continue;
    worst = std::max(worst, std::abs(*q - *q_edge));
    if (*q < -0.5 - 1e-12 || *q > 1 + 1e-12) return fail(fmt("Q=%.17g out of range", *q));
  }
  if (worst > 1e-9) return fail(fmt("forms differ by %.3g", worst));

  struct Hand {
    Graph g;
    Labels labels;
    double q;
  };
  std::vector<Hand> hand{{t::triangle(), {0, 0, 0}, 0.0},
                         {t::two_triangles_bridge(), Labels(6, 0), 0.0},
                         {t::triangle(), {0, 1, 2}, -1.0 / 3},
                         {t::two_triangles(), {0, 0, 0, 3, 3, 3}, 0.5}};
  for (const Hand& h : hand) {
    for (auto q : {modularity(h.g, h.labels), modularity_edge_form(h.g, h.labels)})
      if (!q || std::abs(*q - h.q) > 1e-12) return fail(fmt("hand value %.6f not reproduced", h.q));
  }
  return {Status::pass, fmt("max |Q - Q_edge| = %.3g over 100 instances; hand values within 1e-12", worst)};
}


// Splitting never lowers modularity.
Verdict criterion_5() {
  double worst = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto inst = t::random_instance(seed, 64);
    auto before = modularity(inst.graph, inst.labels);
    if (!before) continue;
    for (SplitStrategy s : {SplitStrategy::lp, SplitStrategy::lpp, SplitStrategy::bfs}) {
      double after = *modularity(inst.graph, split_communities(inst.graph, inst.labels, s).labels);
      if (after < *before - 1e-12) return fail(fmt("Q dropped on seed %llu", (unsigned long long)seed));
      worst = std::max(worst, after - *before);
    }
  }
  return {Status::pass, fmt("no decrease; largest gain %.4f", worst)};
}


std::vector<std::pair<std::string, Graph>> all_fixtures() {
  std::vector<std::pair<std::string, Graph>> out{
      {"path", t::path_graph(9)},
      {"triangle", t::triangle()},
      {"two_triangles", t::two_triangles()},
      {"two_triangles_bridge", t::two_triangles_bridge()},
      {"star", t::star(6)},
      {"edgeless", build_graph(4, std::vector<Edge>{})},
      {"cliques_bridges", build_graph(12, cliques_bridges_edges(12, 3))},
  };
  for (const auto& p : fixture_files()) out.emplace_back(p.filename().string(), load_fixture(p));
  for (std::uint64_t seed : {0, 57, 199}) out.emplace_back("planted", build_graph(planted(seed).n, planted_partition_edges(planted(seed))));
  return out;
}

// Termination contract and single-worker determinism.
Verdict criterion_6() {
  std::size_t runs = 0;
  for (const auto& [name, g] : all_fixtures()) {
    const double n = static_cast<double>(g.num_vertices());
    for (SplitStrategy s : {SplitStrategy::none, SplitStrategy::lp, SplitStrategy::lpp, SplitStrategy::bfs}) {
      for (int workers : {1, 4}) {
        for (int max_iterations : {1, 3, 20}) {
          LpaParams p;
          p.split = s;
          p.worker_count = workers;
          p.max_iterations = max_iterations;
          RunReport first = lpa(g, p);
          ++runs;
          double last = n == 0 ? 0 : first.delta_n_history.back() / n;
          if (!(last <= p.tolerance || first.iterations == p.max_iterations))
            return fail(name + ": stopped early without converging");
          if (first.iterations > p.max_iterations || first.iterations != (int)first.delta_n_history.size())
            return fail(name + ": bad iteration count");
          if (workers != 1) continue;
          for (int rep = 1; rep < 5; ++rep) {
            RunReport again = lpa(g, p);
            if (again.final_labels != first.final_labels || again.delta_n_history != first.delta_n_history)
              return fail(name + ": single-worker repeat differs");
          }
        }
      }
    }
  }
  return {Status::pass, fmt("%zu runs honour the contract; single-worker runs identical over 5 repeats", runs)};
}


const Graph& large_graph() {
  static const Graph g = [] {
    PlantedPartitionParams p;
    p.n = 100000;
    p.communities = 1000;
    p.p_in = 0.1;
    p.p_out = 2.0 / p.n;
    p.seed = 1;
    return build_graph(p.n, planted_partition_edges(p));
  }();
  return g;
}

// Four workers beat one on a graph with at least a million arcs.
Verdict criterion_7() {
  const Graph& g = large_graph();
  if (g.num_arcs() < 1000000) return fail("graph too small");
  cli::BenchConfig config;
  config.threads = {1, 4};
  config.strategies = {SplitStrategy::bfs};
  config.repeats = 3;
  auto means = cli::mean_rows(cli::run_benchmark(g, config));
  double t1 = 0, t4 = 0;
  for (const auto& m : means) (m.threads == 1 ? t1 : t4) = m.times.total_s;
  double per_doubling = *cli::per_doubling_speedup(means, SplitStrategy::bfs);
  std::string measured = fmt("%zu arcs; total_s T=1 %.3f, T=4 %.3f; per-doubling speedup %.2f", g.num_arcs(), t1, t4,
                             per_doubling);
  unsigned cores = std::thread::hardware_concurrency();
  if (cores < 4) return {Status::skip, measured + fmt("; host has %u core(s), needs 4", cores)};
  if (!(t4 < t1)) return fail(measured);
  return {Status::pass, measured};
}


// Bench records carry both phase times, which fit inside the total.
Verdict criterion_8() {
  const Graph& g = large_graph();
  cli::BenchConfig config;
  config.threads = {1, 4};
  config.strategies = {SplitStrategy::bfs};
  config.repeats = 3;
  auto doc = cli::bench_report(g, config, cli::run_benchmark(g, config));
  const double slack = 1e-3;
  double share = 0;
  for (const auto& rec : doc["records"]) {
    double prop = rec["propagation_s"], split = rec["splitting_s"], total = rec["total_s"];
    if (!(prop > 0 && split > 0)) return fail("a phase time is zero");
    if (prop + split > total + slack) return fail(fmt("phases %.6f + %.6f exceed total %.6f", prop, split, total));
    share += prop / total;
  }
  share /= doc["records"].size();
  return {Status::pass, fmt("%zu records; propagation is %.0f%% of total on average", doc["records"].size(),
                            100 * share)};
}

}  // namespace


int main(int argc, char** argv) {
  const std::vector<std::function<Verdict()>> criteria{criterion_1, criterion_2, criterion_3, criterion_4,
                                                       criterion_5, criterion_6, criterion_7, criterion_8};
  std::size_t first = 1, last = criteria.size();
  if (argc > 1) {
    first = last = std::strtoul(argv[1], nullptr, 10);
    if (first < 1 || first > criteria.size()) {
      std::fprintf(stderr, "usage: %s [1-%zu]\n", argv[0], criteria.size());
      return 2;
    }
  }
  bool failed = false, skipped = false;
  for (std::size_t k = first; k <= last; ++k) {
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[k - 1]();
    } catch (const std::exception& e) {
      v = fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const char* tag = v.status == Status::pass ? "PASS" : v.status == Status::fail ? "FAIL" : "SKIP";
    std::printf("criterion %zu: %s (%.1fs) %s\n", k, tag, secs, v.detail.c_str());
    std::fflush(stdout);
    failed |= v.status == Status::fail;
    skipped |= v.status == Status::skip;
  }
  if (failed) return 1;
  return skipped && first == last ? 77 : 0;
}

#include "report.hpp"

namespace lpsplit::cli {

using nlohmann::json;

Detection detect(const Graph& g, const LpaParams& params) {
  Detection d;
  d.run = lpa(g, params);
  d.summary = summarize(g, d.run.final_labels, params.worker_count, params.chunk_size);
  return d;
}


json graph_json(const Graph& g) {
  return {{"vertices", g.num_vertices()}, {"arcs", g.num_arcs()}, {"m", g.total_weight_half()}};
}


json params_json(const LpaParams& params) {
  return {
    {"tolerance", params.tolerance},
    {"max_iterations", params.max_iterations},
    {"split_strategy", std::string(to_string(params.split))},
    {"workers", params.worker_count},
    {"chunk_size", params.chunk_size},
  };
}


json optional_json(const std::optional<double>& value) {
  return value ? json(*value) : json(nullptr);
}


json detect_report(const Graph& g, const LpaParams& params, const Detection& d) {
  const auto& times = d.run.phase_times;
  return {
    {"graph", graph_json(g)},
    {"params", params_json(params)},
    {"result", {
      {"iterations", d.run.iterations},
      {"delta_n_history", d.run.delta_n_history},
      {"modularity", optional_json(d.summary.modularity)},
      {"num_communities", d.summary.num_communities},
      {"min_community_size", d.summary.min_size},
      {"max_community_size", d.summary.max_size},
      {"mean_community_size", d.summary.mean_size},
      {"fraction_disconnected", d.summary.fraction_disconnected},
    }},
    {"timings", {
      {"propagation_s", times.propagation_s},
      {"splitting_s", times.splitting_s},
      {"total_s", times.total_s},
    }},
  };
}


json check_report(const Graph& g, const CommunitySummary& s, const std::vector<Label>& disconnected) {
  return {
    {"graph", graph_json(g)},
    {"result", {
      {"modularity", optional_json(s.modularity)},
      {"num_communities", s.num_communities},
      {"min_community_size", s.min_size},
      {"max_community_size", s.max_size},
      {"mean_community_size", s.mean_size},
      {"fraction_disconnected", s.fraction_disconnected},
      {"disconnected_communities", disconnected},
    }},
  };
}

}  // namespace lpsplit::cli

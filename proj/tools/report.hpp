#pragma once
#include <string>
#include <vector>

#include <json.hpp>

#include "lpsplit/graph.hpp"
#include "lpsplit/lpa.hpp"
#include "lpsplit/metrics.hpp"

namespace lpsplit::cli {

/** A propagation run together with the quality summary of its labels. */
struct Detection {
  RunReport run;
  CommunitySummary summary;
};

Detection detect(const Graph& g, const LpaParams& params);

nlohmann::json graph_json(const Graph& g);
nlohmann::json params_json(const LpaParams& params);
nlohmann::json optional_json(const std::optional<double>& value);

/** Document with graph, params, result and timings sections. */
nlohmann::json detect_report(const Graph& g, const LpaParams& params, const Detection& detection);

/** Quality audit of a given membership, listing disconnected community labels. */
nlohmann::json check_report(const Graph& g, const CommunitySummary& summary, const std::vector<Label>& disconnected);

}  // namespace lpsplit::cli

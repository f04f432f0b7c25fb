#ifndef BCN_TOOLS_REPORT_HPP
#define BCN_TOOLS_REPORT_HPP

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "bcn/depgraph.hpp"
#include "bcn/model.hpp"
#include "bcn/observability.hpp"
#include "bcn/observer.hpp"
#include "bcn/oracle.hpp"
#include "bcn/selection.hpp"

namespace bcn::report {

using Json = nlohmann::ordered_json;

Json names(const Model& model, std::span<const std::size_t> states);
Json cycles(const Model& model, const std::vector<std::vector<std::size_t>>& list);

Json model_summary(const Model& model);
Json graph_stats(const DepGraph& g);
Json decomposition(const Model& model, const Decomposition& d);
Json verdict(const Model& model, const SufficiencyVerdict& v);
Json selection(const Model& model, const SelectionReport& r);
Json observer(const Model& model, const DisjointPathObserver& obs);
Json witness(const IndistinguishableWitness& w);

/// "(X4,X3,X1);(X5,X2)"
std::string path_list(const Model& model, const std::vector<ObservedPath>& paths);
/// "{X1,X2}" or "{}"
std::string name_set(const Model& model, std::span<const std::size_t> states);
std::string cycle_list(const Model& model, const std::vector<std::vector<std::size_t>>& list);

std::string model_line(const Model& model);

}  // namespace bcn::report

#endif  // BCN_TOOLS_REPORT_HPP

#include "compgraph/io.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "compgraph/error.hpp"

namespace compgraph {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json node_list(std::span<const NodeId> nodes) {
  auto out = ordered_json::array();
  for (NodeId x : nodes) out.push_back(x);
  return out;
}

ordered_json arc_list(const DirectedGraph& d) {
  auto out = ordered_json::array();
  for (const auto& a : d.arcs()) out.push_back({a.from, a.to});
  return out;
}

}  // namespace

std::string graph_to_json(const UndirectedGraph& g) {
  ordered_json doc;
  doc["n"] = g.node_count();
  doc["edges"] = ordered_json::array();
  for (const auto& e : g.edges()) doc["edges"].push_back({e.first, e.second});
  return doc.dump();
}

UndirectedGraph graph_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::InvalidGraph, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_unsigned()) {
    throw Error(ErrorKind::InvalidGraph, "expected an object with a non-negative integer \"n\"");
  }
  const auto n = doc["n"].get<std::size_t>();
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw Error(ErrorKind::InvalidGraph, "\"edges\" must be a list");
    for (const auto& pair : doc["edges"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
          !pair[1].is_number_unsigned()) {
        throw Error(ErrorKind::InvalidGraph, "edge " + pair.dump() + " is not a pair of ids");
      }
      const auto u = pair[0].get<NodeId>();
      const auto v = pair[1].get<NodeId>();
      edges.push_back(u < v ? Edge{u, v} : Edge{v, u});
    }
  }
  return UndirectedGraph(n, edges);
}

std::string graph_to_dot(const UndirectedGraph& g) {
  std::ostringstream out;
  out << "graph competitivity {\n";
  for (NodeId x = 1; x <= g.node_count(); ++x) out << "  " << x << ";\n";
  for (const auto& e : g.edges()) out << "  " << e.first << " -- " << e.second << ";\n";
  out << "}\n";
  return out.str();
}

std::string components_to_json(const ComponentPartition& part) {
  ordered_json doc;
  doc["sets"] = ordered_json::array();
  for (const auto& s : part.sets) {
    ordered_json entry;
    entry["members"] = node_list(s.members);
    if (s.interval) entry["interval"] = {s.interval->first, s.interval->last};
    doc["sets"].push_back(std::move(entry));
  }
  return doc.dump();
}

std::string components_to_text(const ComponentPartition& part) {
  std::ostringstream out;
  for (std::size_t k = 0; k < part.sets.size(); ++k) {
    const auto& s = part.sets[k];
    out << (k + 1) << "\t";
    if (s.interval) {
      out << "[" << s.interval->first << "," << s.interval->last << "]";
    } else {
      out << "-";
    }
    out << "\t{";
    for (std::size_t m = 0; m < s.members.size(); ++m) {
      out << (m == 0 ? "" : ",") << s.members[m];
    }
    out << "}";
    if (part.ordered) {
      const bool leader = k == 0;
      const bool looser = k + 1 == part.sets.size();
      if (leader && looser) {
        out << "\tleader looser";
      } else if (leader) {
        out << "\tleader";
      } else if (looser) {
        out << "\tlooser";
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string cliques_to_json(const std::vector<NodeSet>& cliques) {
  ordered_json doc;
  doc["sets_of_competitors"] = ordered_json::array();
  for (const auto& c : cliques) doc["sets_of_competitors"].push_back(node_list(c));
  return doc.dump();
}

std::string classification_to_json(const ClassificationReport& report) {
  ordered_json doc;
  doc["chordal"] = report.chordal;
  doc["comparability"] = report.comparability;
  doc["permutation"] = report.permutation;
  doc["semi_cohesive"] = std::string(to_string(report.semi_cohesive.outcome));
  doc["cohesive"] = std::string(to_string(report.cohesive.outcome));

  ordered_json witnesses = ordered_json::object();
  if (report.elimination_order) witnesses["elimination_order"] = node_list(*report.elimination_order);
  if (report.orientation) witnesses["orientation"] = arc_list(*report.orientation);
  if (report.complement_orientation) {
    witnesses["complement_orientation"] = arc_list(*report.complement_orientation);
  }
  if (report.semi_cohesive.witness) {
    witnesses["semi_cohesive_order"] = node_list(report.semi_cohesive.witness->sequence());
  }
  if (report.cohesive.witness) {
    witnesses["cohesive_order"] = node_list(report.cohesive.witness->sequence());
  }
  doc["witnesses"] = std::move(witnesses);
  return doc.dump();
}

}  // namespace compgraph

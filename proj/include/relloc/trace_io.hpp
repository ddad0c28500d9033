#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "relloc/game.hpp"

namespace relloc {

// One JSON object per round: i, c, m, d, b (null in round 1), m_size,
// m_radius, m_center; on grids also cx, cy for the probe.
void write_trace_jsonl(std::ostream& out, const GameTrace& trace, const Graph& g);
std::vector<RoundRecord> read_trace_jsonl(std::istream& in);

// Summary object: first_success, final_radius, rounds, config, cat, mouse,
// graph, done.
void write_summary_json(std::ostream& out, const GameTrace& trace, const std::string& graph_spec);

// Certificates are JSON arrays of vertices m_1..m_T.
void write_certificate(std::ostream& out, const std::vector<Vertex>& trajectory);
std::vector<Vertex> read_certificate(std::istream& in);
std::vector<Vertex> read_certificate_file(const std::string& path);

}  // namespace relloc

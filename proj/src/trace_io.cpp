#include "relloc/trace_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace relloc {

using nlohmann::json;

void write_trace_jsonl(std::ostream& out, const GameTrace& trace, const Graph& g) {
  const Layout& lay = g.layout();
  for (const RoundRecord& r : trace.rounds) {
    json line = json::object();
    line["i"] = r.round;
    line["c"] = r.probe;
    line["m"] = r.mouse;
    line["d"] = r.distance;
    line["b"] = r.bit ? json(*r.bit) : json(nullptr);
    line["m_size"] = r.candidate_count;
    line["m_radius"] = r.candidate_radius;
    line["m_center"] = r.candidate_center;
    if (lay.kind == Layout::Kind::kGrid) {
      line["cx"] = lay.x_of(r.probe);
      line["cy"] = lay.y_of(r.probe);
    }
    out << line.dump() << '\n';
  }
}

std::vector<RoundRecord> read_trace_jsonl(std::istream& in) {
  std::vector<RoundRecord> rounds;
  std::string text;
  while (std::getline(in, text)) {
    if (text.empty()) continue;
    const json line = json::parse(text);
    RoundRecord r;
    r.round = line.at("i").get<int>();
    r.probe = line.at("c").get<Vertex>();
    r.mouse = line.at("m").get<Vertex>();
    r.distance = line.at("d").get<int>();
    if (!line.at("b").is_null()) r.bit = line.at("b").get<int>();
    r.candidate_count = line.at("m_size").get<std::size_t>();
    r.candidate_radius = line.at("m_radius").get<int>();
    r.candidate_center = line.at("m_center").get<Vertex>();
    rounds.push_back(r);
  }
  return rounds;
}

void write_summary_json(std::ostream& out, const GameTrace& trace, const std::string& graph_spec) {
  json s = json::object();
  s["first_success"] = trace.first_success ? json(*trace.first_success) : json(nullptr);
  s["final_radius"] = trace.final_radius();
  s["rounds"] = trace.rounds.size();
  s["config"] = {{"horizon", trace.config.horizon},
                 {"slowness", trace.config.slowness},
                 {"target_distance", trace.config.target_distance},
                 {"seed", trace.config.seed}};
  s["cat"] = trace.cat_name;
  s["mouse"] = trace.mouse_name;
  s["graph"] = graph_spec;
  if (trace.done) {
    s["done"] = {{"round", trace.done->round},
                 {"center", trace.done->center},
                 {"radius", trace.done->radius}};
  } else {
    s["done"] = nullptr;
  }
  out << s.dump(2) << '\n';
}

void write_certificate(std::ostream& out, const std::vector<Vertex>& trajectory) {
  out << json(trajectory).dump() << '\n';
}

std::vector<Vertex> read_certificate(std::istream& in) {
  const json j = json::parse(in);
  if (!j.is_array()) throw std::invalid_argument("certificate must be a JSON array");
  return j.get<std::vector<Vertex>>();
}

std::vector<Vertex> read_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open certificate " + path);
  return read_certificate(in);
}

}  // namespace relloc

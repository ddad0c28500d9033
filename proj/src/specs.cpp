#include "relloc/specs.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "relloc/cats.hpp"
#include "relloc/escape_search.hpp"
#include "relloc/generators.hpp"
#include "relloc/mice.hpp"
#include "relloc/trace_io.hpp"

namespace relloc {

Spec parse_spec(const std::string& text) {
  Spec spec;
  const auto colon = text.find(':');
  spec.kind = text.substr(0, colon);
  if (spec.kind.empty()) throw SpecError("empty spec");
  if (colon == std::string::npos) return spec;
  const std::string rest = text.substr(colon + 1);
  if (spec.kind == "file") {
    if (rest.empty()) throw SpecError("file spec needs a path");
    spec.params["path"] = rest;
    return spec;
  }
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    const auto comma = std::min(rest.find(',', pos), rest.size());
    const std::string item = rest.substr(pos, comma - pos);
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw SpecError("malformed parameter '" + item + "' in " + text);
    if (!spec.params.emplace(item.substr(0, eq), item.substr(eq + 1)).second) {
      throw SpecError("duplicate parameter '" + item.substr(0, eq) + "' in " + text);
    }
    pos = comma + 1;
  }
  return spec;
}

const std::string& Spec::text(const std::string& key) const {
  const auto it = params.find(key);
  if (it == params.end()) throw SpecError(kind + ": missing parameter " + key);
  return it->second;
}

long long Spec::integer(const std::string& key) const {
  const std::string& s = text(key);
  long long v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw SpecError(kind + ": parameter " + key + " is not an integer: " + s);
  }
  return v;
}

long long Spec::integer_or(const std::string& key, long long fallback) const {
  return has(key) ? integer(key) : fallback;
}

std::uint64_t Spec::seed_or(const std::string& key, std::uint64_t fallback) const {
  if (!has(key)) return fallback;
  const std::string& s = text(key);
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw SpecError(kind + ": parameter " + key + " is not a 64-bit seed: " + s);
  }
  return v;
}

double Spec::real(const std::string& key) const {
  const std::string& s = text(key);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw SpecError(kind + ": parameter " + key + " is not a number: " + s);
  }
  return v;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("RELLOC_SEED");
  if (env == nullptr) return 0;
  std::uint64_t v = 0;
  const std::string s(env);
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) return 0;
  return v;
}

namespace {

void expect_keys(const Spec& spec, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : spec.params) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      throw SpecError(spec.kind + ": unknown parameter " + key);
    }
  }
}

int positive(const Spec& spec, const std::string& key) {
  const long long v = spec.integer(key);
  if (v < 1 || v > 100'000'000) throw SpecError(spec.kind + ": " + key + " out of range");
  return static_cast<int>(v);
}

}  // namespace

Graph make_graph(const std::string& text, std::uint64_t seed) {
  const Spec spec = parse_spec(text);
  try {
    if (spec.kind == "path") {
      expect_keys(spec, {"n"});
      return gen_path(positive(spec, "n"));
    }
    if (spec.kind == "grid") {
      expect_keys(spec, {"n", "m"});
      const int n = positive(spec, "n");
      return gen_grid(n, spec.has("m") ? positive(spec, "m") : n);
    }
    if (spec.kind == "substar") {
      expect_keys(spec, {"k"});
      return gen_subdivided_star(positive(spec, "k"));
    }
    if (spec.kind == "tree") {
      expect_keys(spec, {"n", "dmax", "seed"});
      return gen_random_tree(positive(spec, "n"), positive(spec, "dmax"),
                             spec.seed_or("seed", seed));
    }
    if (spec.kind == "connected") {
      expect_keys(spec, {"n", "p", "dmax", "seed"});
      return gen_random_connected(positive(spec, "n"), spec.real("p"), positive(spec, "dmax"),
                                  spec.seed_or("seed", seed));
    }
    if (spec.kind == "file") return read_edge_list_file(spec.text("path"));
  } catch (const GraphError& e) {
    throw SpecError(std::string("graph spec '") + text + "': " + e.what());
  }
  throw SpecError("unknown graph kind '" + spec.kind + "'");
}

std::unique_ptr<CatStrategy> make_cat(const std::string& text, const Graph& g, std::uint64_t seed) {
  const Spec spec = parse_spec(text);
  const int delta = std::max(2, g.max_degree());
  try {
    if (spec.kind == "tree") {
      expect_keys(spec, {"dmax"});
      return std::make_unique<TreeCat>(g, static_cast<int>(spec.integer_or("dmax", delta)));
    }
    if (spec.kind == "grid") {
      expect_keys(spec, {});
      return std::make_unique<GridCat>(g);
    }
    if (spec.kind == "path") {
      expect_keys(spec, {});
      return std::make_unique<PathCat>(g);
    }
    if (spec.kind == "slow") {
      expect_keys(spec, {"dmax"});
      return std::make_unique<SlowCat>(g, static_cast<int>(spec.integer_or("dmax", delta)));
    }
    if (spec.kind == "random") {
      expect_keys(spec, {"seed"});
      return std::make_unique<RandomCat>(
          g, spec.seed_or("seed", seed));
    }
  } catch (const GraphError& e) {
    throw SpecError(std::string("cat spec '") + text + "': " + e.what());
  }
  throw SpecError("unknown cat '" + spec.kind + "'");
}

std::unique_ptr<MouseStrategy> make_mouse(const std::string& text, std::uint64_t seed, int slowness) {
  const Spec spec = parse_spec(text);
  if (spec.kind == "stationary") {
    expect_keys(spec, {"v"});
    return std::make_unique<StationaryMouse>(static_cast<Vertex>(spec.integer_or("v", 1)));
  }
  if (spec.kind == "random") {
    expect_keys(spec, {"seed"});
    return std::make_unique<RandomMouse>(spec.seed_or("seed", seed));
  }
  if (spec.kind == "greedy") {
    expect_keys(spec, {});
    return std::make_unique<GreedyEvader>();
  }
  if (spec.kind == "exhaustive") {
    expect_keys(spec, {"T", "d"});
    EscapeQuery q;
    q.horizon = static_cast<int>(spec.integer_or("T", 12));
    q.target = static_cast<int>(spec.integer_or("d", 0));
    q.slowness = slowness;
    return std::make_unique<ExhaustiveEvader>(q);
  }
  if (spec.kind == "replay") {
    expect_keys(spec, {"file"});
    try {
      return std::make_unique<ReplayMouse>(read_certificate_file(spec.text("file")));
    } catch (const std::invalid_argument& e) {
      throw SpecError(e.what());
    } catch (const std::exception& e) {
      throw SpecError(std::string("replay: ") + e.what());
    }
  }
  throw SpecError("unknown mouse '" + spec.kind + "'");
}

std::optional<int> required_slowness(const CatStrategy& cat) {
  if (const auto* slow = dynamic_cast<const SlowCat*>(&cat)) return slow->required_slowness();
  return std::nullopt;
}

}  // namespace relloc

#include "repulse/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

namespace repulse {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) words.push_back(s.substr(i, j - i));
    i = j;
  }
  return words;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

double parse_double(std::string_view word, std::size_t line) {
  double value = 0.0;
  const char* begin = word.data();
  const char* end = word.data() + word.size();
  if (!word.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    parse_error(line, "expected a finite number, got '" + std::string(word) + "'");
  }
  return value;
}

std::size_t parse_index(std::string_view word, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    parse_error(line, "expected a vertex index, got '" + std::string(word) + "'");
  }
  return value;
}

// Calls fn(line_number, words) for each non-blank, non-comment line.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line = 0;
  while (!text.empty()) {
    ++line;
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) continue;
    fn(line, split_words(raw));
  }
}

const char* flow_name(FlowKind kind) {
  switch (kind) {
    case FlowKind::AllCCW: return "ccw";
    case FlowKind::AllCW: return "cw";
    case FlowKind::Split: return "split";
  }
  return "?";
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) return "0";
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  (void)ec;
  return std::string(buf.data(), ptr);
}

std::vector<Point> parse_points(std::string_view text) {
  std::vector<Point> points;
  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& words) {
    if (words.size() != 2) parse_error(line, "expected two coordinates 'x y'");
    points.push_back({parse_double(words[0], line), parse_double(words[1], line)});
  });
  return points;
}

ConvexPolygon parse_polygon(std::string_view text, const Tolerance& tol) {
  return ConvexPolygon::validate(parse_points(text), tol);
}

ConvexPolygon read_polygon_file(const std::string& path, const Tolerance& tol) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_polygon(buffer.str(), tol);
}

std::string format_polygon(std::span<const Point> vertices) {
  std::string out;
  for (const Point& p : vertices) out += format_number(p.x) + ' ' + format_number(p.y) + '\n';
  return out;
}

std::string format_plan(const GatherPlan& plan) {
  std::string out = std::string("verdict ") + to_string(plan.verdict) + '\n';
  for (const Point& a : plan.activations) out += "activation " + format_number(a.x) + ' ' + format_number(a.y) + '\n';
  if (plan.predicted_gather) out += "gather " + std::to_string(*plan.predicted_gather) + '\n';
  out += std::string("rationale ") + to_string(plan.rationale) + '\n';
  return out;
}

GatherPlan parse_plan(std::string_view text) {
  GatherPlan plan;
  bool have_verdict = false;
  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& w) {
    if (w[0] == "verdict" && w.size() == 2) {
      if (w[1] == "ungatherable") plan.verdict = Verdict::Ungatherable;
      else if (w[1] == "one") plan.verdict = Verdict::OneActivation;
      else if (w[1] == "two") plan.verdict = Verdict::TwoActivations;
      else parse_error(line, "unknown verdict '" + std::string(w[1]) + "'");
      have_verdict = true;
    } else if (w[0] == "activation" && w.size() == 3) {
      plan.activations.push_back({parse_double(w[1], line), parse_double(w[2], line)});
    } else if (w[0] == "gather" && w.size() == 2) {
      plan.predicted_gather = parse_index(w[1], line);
    } else if (w[0] == "rationale" && w.size() == 2) {
      if (w[1] == "none") plan.rationale = PlanRationale::None;
      else if (w[1] == "witness") plan.rationale = PlanRationale::Witness;
      else if (w[1] == "diameter") plan.rationale = PlanRationale::DiameterCase;
      else if (w[1] == "triangle") plan.rationale = PlanRationale::TriangleCase;
      else parse_error(line, "unknown rationale '" + std::string(w[1]) + "'");
    } else {
      parse_error(line, "unrecognised plan entry '" + std::string(w[0]) + "'");
    }
  });
  if (!have_verdict) throw Error(ErrorKind::Parse, "plan has no verdict line");
  return plan;
}

std::string format_flow(const ConvexPolygon& polygon, const FlowDiagram& diagram) {
  std::string out = "actuator " + format_number(diagram.actuator.x) + ' ' + format_number(diagram.actuator.y) + '\n';
  for (std::size_t i = 0; i < diagram.flows.size(); ++i) {
    out += "edge " + std::to_string(i) + ' ' + flow_name(diagram.flows[i].kind);
    if (diagram.flows[i].kind == FlowKind::Split) out += ' ' + format_number(diagram.flows[i].split_t);
    out += '\n';
  }
  auto point_line = [&](const char* tag, const SplitPoint& s) {
    const Point p = boundary_eval(polygon, s.location);
    return std::string(tag) + ' ' + std::to_string(s.location.edge) + ' ' + format_number(s.location.t) + ' ' +
           format_number(p.x) + ' ' + format_number(p.y) + ' ' + to_string(s.semantics) + '\n';
  };
  for (const SplitPoint& s : diagram.split_points) out += point_line("split", s);
  for (const SplitPoint& s : diagram.unstable_feet) out += point_line("unstable", s);
  for (std::size_t v : diagram.accumulation_points) {
    const Point p = polygon.vertex(v);
    out += "accumulation " + std::to_string(v) + ' ' + format_number(p.x) + ' ' + format_number(p.y) + '\n';
  }
  return out;
}

std::string format_accumulation_map(const AccumulationMap& map) {
  std::string out;
  for (const AccumulationArc& arc : map.arcs) {
    out += std::to_string(arc.start.edge) + ' ' + format_number(arc.start.t) + ' ' + std::to_string(arc.end.edge) +
           ' ' + format_number(arc.end.t) + ' ' + std::to_string(arc.vertex) + '\n';
  }
  return out;
}

std::string format_kernel(const KernelRegion& kernel) {
  std::string out;
  for (std::size_t c = 0; c < kernel.cells.size(); ++c) {
    if (c > 0) out += '\n';
    out += "# cell " + std::to_string(kernel.cells[c].cell) + " gathers at " +
           std::to_string(kernel.cells[c].gather_vertex) + '\n';
    out += format_polygon(kernel.cells[c].ring);
  }
  return out;
}

}  // namespace repulse

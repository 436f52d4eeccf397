#include "qlbn/bba_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include "qlbn/errors.hpp"
#include "qlbn/numeric.hpp"

namespace qlbn {

namespace {

std::vector<std::string> split_labels(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '{' && text.back() == '}') {
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<std::string> labels;
  if (text.empty()) return labels;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    auto label = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    if (label.empty()) throw Error(ErrorKind::ParseError, "empty label in '" + std::string(text) + "'");
    labels.emplace_back(label);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return labels;
}

[[noreturn]] void fail_at(std::size_t line, const Error& e) {
  throw Error(e.kind(), "line " + std::to_string(line) + ": " + e.what());
}

}  // namespace

BeliefAssignment parse_bba(std::string_view text) {
  std::vector<std::string> frame_labels;
  bool explicit_frame = false;
  RawMasses raw;
  std::vector<std::string> seen_labels;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == text.npos ? text.npos : nl - pos);
    pos = nl == text.npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != line.npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    try {
      if (line.starts_with("frame")) {
        auto rest = trim(line.substr(5));
        if (!rest.starts_with(":")) throw Error(ErrorKind::ParseError, "expected 'frame: a, b, ...'");
        if (explicit_frame) throw Error(ErrorKind::ParseError, "frame declared twice");
        if (!raw.empty()) throw Error(ErrorKind::ParseError, "frame must precede mass entries");
        frame_labels = split_labels(rest.substr(1));
        explicit_frame = true;
        continue;
      }
      const auto eq = line.find('=');
      if (eq == line.npos) throw Error(ErrorKind::ParseError, "expected '<labels> = <mass>'");
      auto labels = split_labels(line.substr(0, eq));
      const double value = parse_decimal(line.substr(eq + 1));
      if (value < 0.0 || value > 1.0) {
        throw Error(ErrorKind::MassOutOfRange, "mass " + std::string(trim(line.substr(eq + 1))) + " outside [0,1]");
      }
      for (const auto& label : labels) {
        if (explicit_frame) {
          if (std::find(frame_labels.begin(), frame_labels.end(), label) == frame_labels.end()) {
            throw Error(ErrorKind::UnknownElement, "'" + label + "' is not in the frame");
          }
        } else if (std::find(seen_labels.begin(), seen_labels.end(), label) == seen_labels.end()) {
          seen_labels.push_back(label);
        }
      }
      raw.emplace_back(std::move(labels), value);
    } catch (const Error& e) {
      fail_at(line_no, e);
    }
  }

  if (!explicit_frame) frame_labels = seen_labels;
  if (frame_labels.empty()) throw Error(ErrorKind::ParseError, "no focal sets found");
  return validate_bba(raw, Frame(frame_labels));
}

BeliefAssignment load_bba(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_bba(buf.str());
}

std::string format_bba(const BeliefAssignment& bba) {
  std::string out = "frame: ";
  const auto& elements = bba.frame().elements();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ", ";
    out += elements[i];
  }
  out += "\n";
  for (const auto& [set, m] : bba.masses()) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i) out += ",";
      out += set[i];
    }
    out += " = " + format_exact(m) + "\n";
  }
  return out;
}

}  // namespace qlbn

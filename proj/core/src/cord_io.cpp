#include "cordlasso/cord_io.hpp"

#include <sstream>
#include <vector>

#include "cordlasso/errors.hpp"

namespace cordlasso {

namespace {

/// Non-comment lines with their 1-based line numbers, split on whitespace.
std::vector<std::pair<std::size_t, std::vector<std::string>>> tokenized_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    std::string line(text.substr(start, end - start));
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream is(line);
    std::vector<std::string> tokens;
    for (std::string tok; is >> tok;) tokens.push_back(tok);
    if (!tokens.empty()) out.emplace_back(line_no, std::move(tokens));
    start = end + 1;
  }
  return out;
}

}  // namespace

CordFile parse_cord_file(std::string_view text, const LeafSet& x_set) {
  CordFile file;
  for (const auto& [line, tokens] : tokenized_lines(text)) {
    if (tokens.size() < 2 || tokens.size() > 3) {
      throw ParseError("expected 'labelA labelB [distance]'", line, 1);
    }
    for (std::size_t i = 0; i < 2; ++i) {
      if (!x_set.contains(tokens[i])) throw ParseError("unknown leaf label '" + tokens[i] + "'", line, 1);
    }
    if (tokens[0] == tokens[1]) throw ParseError("cord with equal ends", line, 1);
    const Cord cord = Cord::make(tokens[0], tokens[1]);
    if (!file.cords.insert(cord).second) throw ParseError("duplicate cord '" + to_string(cord) + "'", line, 1);
    if (tokens.size() == 3) {
      Rational d;
      try {
        d = parse_rational(tokens[2]);
      } catch (const InputError& e) {
        throw ParseError(e.what(), line, 1);
      }
      if (d <= 0) throw ParseError("distances must be positive", line, 1);
      file.distances.emplace(cord, d);
    }
  }
  return file;
}

std::string format_cords(const CordSet& cords) {
  std::string out;
  for (const auto& cord : cords) out += to_string(cord) + "\n";
  return out;
}

std::string format_distances(const std::map<Cord, Rational>& distances) {
  std::string out;
  for (const auto& [cord, d] : distances) out += to_string(cord) + " " + to_string(d) + "\n";
  return out;
}

Bipartition parse_partition_file(std::string_view text, const LeafSet& x_set) {
  const auto lines = tokenized_lines(text);
  if (lines.size() != 2) throw ParseError("partition file needs exactly two lines", lines.empty() ? 1 : lines.back().first, 1);
  LeafSet a(lines[0].second.begin(), lines[0].second.end());
  LeafSet b(lines[1].second.begin(), lines[1].second.end());
  try {
    return Bipartition::make(std::move(a), std::move(b), x_set);
  } catch (const InputError& e) {
    throw ParseError(e.what(), lines[0].first, 1);
  }
}

}  // namespace cordlasso

#include "group_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace commprob::cli {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t parse_number(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw InputError(line, "malformed integer '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

GroupFile parse_group_file(std::string_view text) {
  GroupFile file;
  bool have_degree = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = tokens(line);
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (!have_degree) {
      if (toks.size() != 1) throw InputError(line_no, "expected a single degree on the first line");
      file.degree = parse_number(toks[0], line_no);
      if (file.degree == 0) throw InputError(line_no, "degree must be positive");
      have_degree = true;
    } else {
      if (toks.size() != file.degree) {
        throw InputError(line_no, "expected " + std::to_string(file.degree) + " entries, found " +
                                      std::to_string(toks.size()));
      }
      std::vector<Point> images;
      for (auto tok : toks) images.push_back(static_cast<Point>(parse_number(tok, line_no)));
      try {
        file.generators.emplace_back(std::move(images));
      } catch (const Error& e) {
        throw InputError(line_no, e.what());
      }
    }
    if (end == text.size()) break;
  }
  if (!have_degree) throw InputError(0, "empty group file: no degree line");
  return file;
}

GroupFile read_group_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    GroupFile file = parse_group_file(buf.str());
    file.path = path;
    return file;
  } catch (const InputError& e) {
    throw InputError(0, path + ": " + e.what());
  }
}

std::string format_group_file(std::size_t degree, const std::vector<Permutation>& generators,
                              const std::string& comment) {
  std::ostringstream out;
  std::istringstream lines(comment);
  for (std::string line; std::getline(lines, line);) out << "# " << line << '\n';
  out << degree << '\n';
  for (const auto& g : generators) {
    for (std::size_t i = 0; i < g.degree(); ++i) out << (i ? " " : "") << g(static_cast<Point>(i));
    out << '\n';
  }
  return out.str();
}

std::string format_group_file(const FiniteGroup& g, const std::string& comment) {
  std::vector<Permutation> gens;
  for (Index s : g.generators()) gens.push_back(g.element(s));
  return format_group_file(g.degree(), gens, comment);
}

}  // namespace commprob::cli

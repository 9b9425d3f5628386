#include "invgrp/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace invgrp {

namespace {

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(line);
  }
  return out;
}

std::size_t parse_count(const std::string& line, const char* what) {
  std::istringstream in(line);
  long v = 0;
  std::string rest;
  if (!(in >> v) || v <= 0 || (in >> rest)) throw ParseError(std::string("bad ") + what + " line '" + line + "'");
  return std::size_t(v);
}

using Word = std::vector<ElementId>;

Word parse_cycles(const std::string& line, std::size_t degree) {
  Word p(degree);
  std::iota(p.begin(), p.end(), ElementId{0});
  std::size_t i = 0;
  auto skip = [&] {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
  };
  std::set<std::size_t> used;
  skip();
  if (i < line.size() && line.substr(i) == "()") return p;
  while (i < line.size()) {
    skip();
    if (i >= line.size()) break;
    if (line[i] != '(') throw ParseError("expected '(' in generator '" + line + "'");
    ++i;
    std::vector<std::size_t> cycle;
    while (true) {
      skip();
      if (i < line.size() && line[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      std::size_t v = 0;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) v = v * 10 + std::size_t(line[i++] - '0');
      if (i == start) throw ParseError("bad point in generator '" + line + "'");
      if (v < 1 || v > degree) throw ParseError("point out of range in '" + line + "'");
      if (!used.insert(v).second) throw ParseError("cycles are not disjoint in '" + line + "'");
      cycle.push_back(v - 1);
      skip();
      if (i < line.size() && line[i] == ',') ++i;
    }
    for (std::size_t j = 0; j < cycle.size(); ++j) p[cycle[j]] = ElementId(cycle[(j + 1) % cycle.size()]);
  }
  return p;
}

}  // namespace

IngestResult parse_multiplication_table(std::string_view text, const Caps& caps, std::string label) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty multiplication-table file");
  std::size_t n = parse_count(lines[0], "order");
  if (n > caps.max_order) throw CapExceeded("order " + std::to_string(n) + " exceeds cap");
  if (lines.size() != n + 1) throw ParseError("expected " + std::to_string(n) + " table rows");
  std::vector<ElementId> table;
  table.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    std::istringstream in(lines[r + 1]);
    long v;
    std::size_t cnt = 0;
    while (in >> v) {
      if (v < 0 || std::size_t(v) >= n) throw ParseError("id out of range in row " + std::to_string(r));
      table.push_back(ElementId(v));
      ++cnt;
    }
    if (!in.eof() || cnt != n) throw ParseError("row " + std::to_string(r) + " must have " + std::to_string(n) + " ids");
  }
  bool exhaustive = validate_table(n, table, true);
  return {FiniteGroup(n, std::move(table), std::move(label)), exhaustive};
}

IngestResult parse_permutation_generators(std::string_view text, const Caps& caps, std::string label) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty permutation-generator file");
  std::size_t degree = parse_count(lines[0], "degree");
  if (degree > 0xffff) throw ParseError("degree too large");
  std::vector<Word> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) gens.push_back(parse_cycles(lines[i], degree));

  Word identity(degree);
  std::iota(identity.begin(), identity.end(), ElementId{0});
  std::set<Word> elements{identity};
  std::vector<Word> queue{identity};
  // x^(ab) = (x^a)^b
  auto compose = [&](const Word& a, const Word& b) {
    Word r(degree);
    for (std::size_t x = 0; x < degree; ++x) r[x] = b[a[x]];
    return r;
  };
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (const auto& s : gens) {
      Word w = compose(queue[qi], s);
      if (elements.insert(w).second) {
        if (elements.size() > caps.max_order)
          throw CapExceeded("generated group exceeds order cap " + std::to_string(caps.max_order));
        queue.push_back(std::move(w));
      }
    }
  }
  std::vector<Word> sorted(elements.begin(), elements.end());
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < sorted.size(); ++i) index.emplace(sorted[i], i);
  const std::size_t n = sorted.size();
  std::vector<ElementId> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = ElementId(index.at(compose(sorted[a], sorted[b])));
  return {FiniteGroup(n, std::move(table), std::move(label)), true};
}

IngestResult ingest(const std::filesystem::path& path, const Caps& caps) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  std::string label = "file:" + path.string();
  auto ext = path.extension().string();
  bool perm = ext == ".pg";
  if (ext != ".pg" && ext != ".mt") {
    auto lines = content_lines(text);
    perm = lines.size() > 1 && lines[1].find('(') != std::string::npos;
  }
  return perm ? parse_permutation_generators(text, caps, label) : parse_multiplication_table(text, caps, label);
}

std::string format_multiplication_table(const FiniteGroup& g) {
  std::string out = "# " + g.spec() + "\n" + std::to_string(g.order()) + "\n";
  for (std::size_t a = 0; a < g.order(); ++a) {
    auto row = g.row(ElementId(a));
    for (std::size_t b = 0; b < row.size(); ++b) {
      if (b) out += ' ';
      out += std::to_string(row[b]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace invgrp

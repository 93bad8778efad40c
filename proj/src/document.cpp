#include "poslat/document.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "poslat/error.hpp"

namespace poslat {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

bool is_label_char(char c) {
  return !is_space(c) && c != '<' && c != ':' && c != '#' && c != '"' && c != ',' && c != '\n';
}

struct Token {
  enum Kind { Label, Less } kind;
  std::string text;
  std::size_t column;
};

[[noreturn]] void parse_error(const std::string& msg, std::size_t line, std::size_t column) {
  throw InputError(ErrorCode::Parse, msg, line, column);
}

std::vector<Token> tokenize(std::string_view body, std::size_t line, std::size_t base_column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < body.size()) {
    const char c = body[i];
    if (is_space(c)) {
      ++i;
    } else if (c == '<') {
      out.push_back({Token::Less, "<", base_column + i});
      ++i;
    } else if (is_label_char(c)) {
      std::size_t start = i;
      while (i < body.size() && is_label_char(body[i])) ++i;
      out.push_back({Token::Label, std::string(body.substr(start, i - start)), base_column + start});
    } else {
      parse_error(std::string("unexpected character '") + c + "'", line, base_column + i);
    }
  }
  return out;
}

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string hasse_dot(std::string_view name, std::size_t n, const std::vector<std::string>& labels,
                      const std::vector<Cover>& covers, const std::vector<std::size_t>& heights) {
  std::string out = "digraph " + std::string(name) + " {\n";
  out += "  node [shape=plaintext];\n";
  std::map<std::size_t, std::vector<Elem>, std::greater<>> ranks;
  for (Elem e = 0; e < n; ++e) ranks[heights[e]].push_back(e);
  for (const auto& [h, elems] : ranks) {
    out += "  { rank=same;";
    for (Elem e : elems) out += " " + quoted(labels[e]) + ";";
    out += " }\n";
  }
  for (auto [lo, hi] : covers) out += "  " + quoted(labels[hi]) + " -> " + quoted(labels[lo]) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace

PosetDocument parse_poset(std::string_view text) {
  PosetDocument doc;
  bool have_elements = false;
  std::unordered_map<std::string, std::size_t> index;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) ++first;
    if (first == line.size()) {
      if (end == text.size()) break;
      continue;
    }

    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) parse_error("expected 'elements:' or 'covers:'", line_no, first + 1);
    std::size_t name_end = colon;
    while (name_end > first && is_space(line[name_end - 1])) --name_end;
    const std::string_view directive = line.substr(first, name_end - first);
    const std::string_view body = line.substr(colon + 1);
    const std::size_t body_column = colon + 2;

    if (directive == "elements") {
      if (have_elements) parse_error("elements declared twice", line_no, first + 1);
      have_elements = true;
      for (const Token& t : tokenize(body, line_no, body_column)) {
        if (t.kind != Token::Label) parse_error("unexpected '<' in elements list", line_no, t.column);
        if (index.contains(t.text)) {
          throw InputError(ErrorCode::DuplicateLabel, "duplicate label '" + t.text + "'", line_no, t.column);
        }
        index.emplace(t.text, doc.labels.size());
        doc.labels.push_back(t.text);
        doc.label_locations.push_back({line_no, t.column});
      }
    } else if (directive == "covers") {
      const auto tokens = tokenize(body, line_no, body_column);
      auto known = [&](const Token& t) {
        if (!index.contains(t.text)) {
          throw InputError(ErrorCode::UnknownLabel, "unknown label '" + t.text + "'", line_no, t.column);
        }
      };
      std::size_t i = 0;
      while (i < tokens.size()) {
        const Token& lo = tokens[i];
        if (lo.kind != Token::Label) parse_error("expected a label before '<'", line_no, lo.column);
        known(lo);
        if (i + 1 >= tokens.size() || tokens[i + 1].kind != Token::Less) {
          parse_error("expected '<' after '" + lo.text + "'", line_no, lo.column + lo.text.size());
        }
        // Follow the chain lo < a < b ...
        std::size_t k = i;
        while (k + 1 < tokens.size() && tokens[k + 1].kind == Token::Less) {
          if (k + 2 >= tokens.size() || tokens[k + 2].kind != Token::Label) {
            parse_error("expected a label after '<'", line_no, tokens[k + 1].column + 1);
          }
          const Token& hi = tokens[k + 2];
          known(hi);
          doc.covers.emplace_back(tokens[k].text, hi.text);
          doc.cover_locations.push_back({line_no, tokens[k].column});
          k += 2;
        }
        i = k + 1;
      }
    } else {
      parse_error("unknown directive '" + std::string(directive) + "'", line_no, first + 1);
    }
    if (end == text.size()) break;
  }
  return doc;
}

Poset PosetDocument::to_poset() const {
  if (labels.size() > ElemSet::kCapacity) {
    const auto& loc = label_locations[ElemSet::kCapacity];
    throw InputError(ErrorCode::Capacity, "at most 64 elements are supported", loc.line, loc.column);
  }
  std::unordered_map<std::string, Elem> index;
  for (Elem i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  std::vector<Cover> edges;
  for (const auto& [lo, hi] : covers) {
    auto a = index.find(lo), b = index.find(hi);
    if (a == index.end() || b == index.end()) {
      throw Error(ErrorCode::UnknownLabel, "cover references an undeclared label");
    }
    edges.emplace_back(a->second, b->second);
  }
  try {
    return Poset::from_covers(labels.size(), edges).with_labels(labels);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Cycle) throw;
    // Report the first cover whose addition creates the cycle.
    for (std::size_t i = 0; i < edges.size(); ++i) {
      try {
        (void)Poset::from_covers(labels.size(), std::span(edges).first(i + 1));
      } catch (const Error&) {
        const auto& [lo, hi] = covers[i];
        throw InputError(ErrorCode::Cycle, "cover " + lo + "<" + hi + " closes a cycle",
                         cover_locations[i].line, cover_locations[i].column);
      }
    }
    throw;
  }
}

std::string poset_dot(const Poset& p, std::string_view graph_name) {
  std::vector<std::string> labels;
  for (Elem e = 0; e < p.size(); ++e) labels.push_back(p.label(e));
  return hasse_dot(graph_name, p.size(), labels, p.covers(), p.heights());
}

std::string lattice_dot(const Lattice& l, std::string_view graph_name) {
  std::vector<std::string> labels;
  for (Elem e = 0; e < l.size(); ++e) labels.push_back(l.label(e));
  return hasse_dot(graph_name, l.size(), labels, l.covers(), l.heights());
}

}  // namespace poslat

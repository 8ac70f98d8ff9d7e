#include "lesq/text_io.hpp"

#include <cctype>
#include <charconv>

namespace lesq {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

long parse_integer(const std::string& token) {
  long value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last) throw ParseError("not an integer", token);
  return value;
}

Rational parse_rational(const std::string& token) {
  const std::size_t slash = token.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(token));
  const long num = parse_integer(token.substr(0, slash));
  const long den = parse_integer(token.substr(slash + 1));
  if (den <= 0) throw ParseError("denominator must be positive", token);
  return Rational(num, den);
}

std::vector<std::string> row_tokens(std::string_view text) {
  const std::string clean = strip_spaces(text);
  if (clean.empty()) return {};
  return split(clean, ',');
}

}  // namespace

Partition parse_partition(std::string_view text) {
  std::vector<long> parts;
  for (const std::string& token : row_tokens(text)) {
    const long v = parse_integer(token);
    if (v < 0) throw ParseError("negative part", token);
    if (!parts.empty() && v > parts.back()) throw ParseError("parts must be weakly decreasing", token);
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

Composition parse_composition(std::string_view text) {
  std::vector<long> entries;
  for (const std::string& token : row_tokens(text)) {
    const long v = parse_integer(token);
    if (v < 0) throw ParseError("negative entry", token);
    entries.push_back(v);
  }
  return Composition(std::move(entries));
}

RatSeq parse_rational_row(std::string_view text) {
  RatSeq row;
  for (const std::string& token : row_tokens(text)) {
    Rational v = parse_rational(token);
    if (v < 0) throw ParseError("negative part", token);
    if (!row.empty() && v > row.back()) throw ParseError("parts must be weakly decreasing", token);
    row.push_back(std::move(v));
  }
  while (!row.empty() && row.back() == 0) row.pop_back();
  return row;
}

namespace {

std::vector<std::string> tuple_rows(std::string_view text, int m) {
  const std::string clean = strip_spaces(text);
  std::vector<std::string> rows = split(clean, ';');
  if (static_cast<int>(rows.size()) != m)
    throw ParseError("expected " + std::to_string(m) + " partitions separated by ';', got " +
                         std::to_string(rows.size()),
                     clean);
  return rows;
}

template <class Row>
void check_length(const Row& row, int n, const std::string& token) {
  if (row.size() > static_cast<std::size_t>(n))
    throw ParseError("more than " + std::to_string(n) + " nonzero parts", token);
}

}  // namespace

std::vector<Partition> parse_partition_tuple(std::string_view text, int n, int m) {
  std::vector<Partition> out;
  for (const std::string& row : tuple_rows(text, m)) {
    Partition p = parse_partition(row);
    check_length(p.parts(), n, row);
    out.push_back(std::move(p));
  }
  return out;
}

RationalTuple parse_rational_tuple(std::string_view text, int n, int m) {
  std::vector<RatSeq> out;
  for (const std::string& row : tuple_rows(text, m)) {
    RatSeq r = parse_rational_row(row);
    check_length(r, n, row);
    out.push_back(std::move(r));
  }
  return RationalTuple(n, std::move(out));
}

Subset parse_subset(std::string_view text, int n) {
  const std::string clean = strip_spaces(text);
  if (clean.size() < 2 || clean.front() != '{' || clean.back() != '}')
    throw ParseError("subset must be written as {a,b,...}", clean);
  std::vector<int> elements;
  for (const std::string& token : row_tokens(clean.substr(1, clean.size() - 2))) {
    const long v = parse_integer(token);
    if (v < 1 || v > n) throw ParseError("element outside {1.." + std::to_string(n) + "}", token);
    elements.push_back(static_cast<int>(v));
  }
  try {
    return Subset(n, std::move(elements));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), clean);
  }
}

std::string format_partition(const Partition& p) {
  if (p.empty()) return "0";
  std::string out;
  for (long v : p.parts()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::string format_bracketed(const Partition& p) {
  return "[" + (p.empty() ? std::string() : format_partition(p)) + "]";
}

std::string format_chain(const WitnessChain& chain) {
  std::string out;
  for (std::size_t k = 0; k < chain.mus.size(); ++k) {
    if (k > 0) out += ';';
    out += format_bracketed(chain.mus[k]);
  }
  return out;
}

std::string format_subset(const Subset& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.elements().size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(s.elements()[k]);
  }
  return out + "}";
}

std::string format_subset_tuple(const SubsetTuple& t) {
  std::string out = "(";
  for (std::size_t k = 0; k < t.sets().size(); ++k) {
    if (k > 0) out += ',';
    out += format_subset(t.sets()[k]);
  }
  return out + ")";
}

std::string format_rational_tuple(const RationalTuple& t) {
  std::string out;
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    if (i > 0) out += ';';
    const RatSeq& row = t.rows()[i];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += ',';
      out += to_string(row[j]);
    }
  }
  return out;
}

}  // namespace lesq

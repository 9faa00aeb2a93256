#include "pimetric/io.hpp"

#include <charconv>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "pimetric/error.hpp"

namespace pimetric
{

namespace
{

std::string_view trim(std::string_view s)
{
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_fail(std::string const &what)
{
  throw Error(Errc::ParseError, what);
}

unsigned parse_uint(std::string_view token)
{
  token = trim(token);
  unsigned value = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || end != token.data() + token.size())
    parse_fail("expected a non-negative integer, got '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(s.substr(pos));
      return out;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
}

// "[1,2,3]"
std::vector<unsigned> parse_list(std::string_view text)
{
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    parse_fail("expected a bracketed list, got '" + std::string(text) + "'");
  text = trim(text.substr(1, text.size() - 2));
  std::vector<unsigned> out;
  if (text.empty())
    return out;
  for (auto token : split(text, ','))
    out.push_back(parse_uint(token));
  return out;
}

// "[[1,0],[0,1]]"
std::vector<std::vector<unsigned>> parse_nested(std::string_view text)
{
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    parse_fail("expected a bracketed matrix, got '" + std::string(text) + "'");
  text = trim(text.substr(1, text.size() - 2));
  std::vector<std::vector<unsigned>> rows;
  while (!text.empty()) {
    std::size_t close = text.find(']');
    if (text.front() != '[' || close == std::string_view::npos)
      parse_fail("malformed matrix row near '" + std::string(text) + "'");
    rows.push_back(parse_list(text.substr(0, close + 1)));
    text = trim(text.substr(close + 1));
    if (!text.empty()) {
      if (text.front() != ',')
        parse_fail("expected ',' between matrix rows");
      text = trim(text.substr(1));
    }
  }
  return rows;
}

std::string format_list(std::vector<unsigned> const &xs)
{
  std::string out = "[";
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (j > 0)
      out += ',';
    out += std::to_string(xs[j]);
  }
  return out + "]";
}

bool is_ignorable(std::string_view line)
{
  line = trim(line);
  return line.empty() || line.front() == '#';
}

// Significant lines of one document.
std::vector<std::string> content_lines(std::istream &in)
{
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!is_ignorable(line))
      lines.emplace_back(trim(line));
  }
  return lines;
}

std::vector<std::string> content_lines(std::string_view text)
{
  std::istringstream in{std::string(text)};
  return content_lines(in);
}

Space header_of(std::vector<std::string> const &lines)
{
  if (lines.empty())
    parse_fail("empty document");
  return parse_header(lines.front());
}

BlockPermutation parse_sigma(std::vector<unsigned> const &one_based)
{
  std::vector<unsigned> image;
  for (unsigned j : one_based) {
    if (j == 0)
      parse_fail("sigma entries are 1-based");
    image.push_back(j - 1);
  }
  try {
    return BlockPermutation(std::move(image));
  } catch (Error const &e) {
    parse_fail(e.what());
  }
}

// Splits "key: value" and returns {key, value}.
std::pair<std::string_view, std::string_view> key_value(std::string_view line)
{
  std::size_t colon = line.find(':');
  if (colon == std::string_view::npos)
    parse_fail("expected 'key: value', got '" + std::string(line) + "'");
  return {trim(line.substr(0, colon)), trim(line.substr(colon + 1))};
}

// Index of a "T3" / "A3" key, 0-based.
unsigned block_key(std::string_view key, unsigned m)
{
  unsigned i = parse_uint(key.substr(1));
  if (i == 0 || i > m)
    parse_fail("block key '" + std::string(key) + "' out of range");
  return i - 1;
}

} // namespace

std::string format_vector(BlockVector const &v)
{
  std::string out;
  auto const &pi = v.space().partition();
  for (unsigned i = 0; i < pi.m(); ++i) {
    if (i > 0)
      out += '|';
    auto block = v.block(i);
    for (std::size_t j = 0; j < block.size(); ++j) {
      if (j > 0)
        out += ',';
      out += std::to_string(block[j]);
    }
  }
  return out;
}

BlockVector parse_vector(Space const &space, std::string_view text)
{
  auto const &pi = space.partition();
  auto blocks = split(trim(text), '|');
  if (blocks.size() != pi.m())
    parse_fail("vector '" + std::string(text) + "' has " + std::to_string(blocks.size()) +
               " blocks, expected " + std::to_string(pi.m()));
  std::vector<Elem> coords;
  for (unsigned i = 0; i < pi.m(); ++i) {
    auto entries = split(blocks[i], ',');
    if (entries.size() != pi.block(i))
      parse_fail("block " + std::to_string(i + 1) + " of '" + std::string(text) +
                 "' must have " + std::to_string(pi.block(i)) + " entries");
    for (auto e : entries) {
      unsigned value = parse_uint(e);
      if (!space.field().contains(value))
        parse_fail("element " + std::to_string(value) + " outside GF(" +
                   std::to_string(space.q()) + ")");
      coords.push_back(static_cast<Elem>(value));
    }
  }
  return BlockVector(space, std::move(coords));
}

std::string format_header(Space const &space)
{
  return space.describe();
}

Space parse_header(std::string_view line)
{
  std::optional<unsigned> q;
  std::optional<Partition> pi;
  for (auto token : split(trim(line), ' ')) {
    token = trim(token);
    if (token.empty())
      continue;
    if (token.starts_with("q="))
      q = parse_uint(token.substr(2));
    else if (token.starts_with("pi="))
      pi = Partition::parse(token.substr(3));
    else
      parse_fail("unexpected header token '" + std::string(token) + "'");
  }
  if (!q || !pi)
    parse_fail("header must read 'q=<q> pi=<k_1>,...'");
  return Space(Field::make(*q), std::move(*pi));
}

void write_map(std::ostream &out, ExplicitMap const &f)
{
  out << format_header(f.space()) << '\n';
  for (std::uint32_t v = 0; v < f.size(); ++v) {
    out << format_vector(BlockVector::from_index(f.space(), v)) << " -> "
        << format_vector(BlockVector::from_index(f.space(), f(v))) << '\n';
  }
}

ExplicitMap read_map(std::istream &in)
{
  auto lines = content_lines(in);
  Space space = header_of(lines);
  std::uint64_t size = space.size();
  std::vector<std::uint32_t> table(size);
  std::vector<bool> seen(size, false);
  for (std::size_t l = 1; l < lines.size(); ++l) {
    std::string_view line = lines[l];
    std::size_t arrow = line.find("->");
    if (arrow == std::string_view::npos)
      parse_fail("expected '<vector> -> <vector>', got '" + lines[l] + "'");
    auto from = parse_vector(space, line.substr(0, arrow)).index();
    auto to = parse_vector(space, line.substr(arrow + 2)).index();
    if (seen[from])
      parse_fail("vector listed twice: '" + lines[l] + "'");
    seen[from] = true;
    table[from] = static_cast<std::uint32_t>(to);
  }
  if (lines.size() - 1 != size)
    parse_fail("map lists " + std::to_string(lines.size() - 1) + " of " +
               std::to_string(size) + " vectors");
  return ExplicitMap(space, std::move(table));
}

void write_structured(std::ostream &out, StructuredSymmetry const &s)
{
  out << format_header(s.space()) << '\n';
  std::vector<unsigned> sigma;
  for (unsigned j : s.sigma().image())
    sigma.push_back(j + 1);
  out << "sigma: " << format_list(sigma) << '\n';
  for (std::size_t i = 0; i < s.blocks().size(); ++i) {
    auto const &t = s.blocks()[i].table();
    out << 'T' << i + 1 << ": " << format_list({t.begin(), t.end()}) << '\n';
  }
}

void write_linear(std::ostream &out, LinearBlockMap const &l)
{
  out << format_header(l.space()) << '\n';
  std::vector<unsigned> sigma;
  for (unsigned j : l.sigma().image())
    sigma.push_back(j + 1);
  out << "sigma: " << format_list(sigma) << '\n';
  for (std::size_t i = 0; i < l.mats().size(); ++i) {
    auto const &a = l.mats()[i];
    out << 'A' << i + 1 << ": [";
    for (unsigned r = 0; r < a.k(); ++r) {
      if (r > 0)
        out << ',';
      std::vector<unsigned> row;
      for (unsigned c = 0; c < a.k(); ++c)
        row.push_back(a(r, c));
      out << format_list(row);
    }
    out << "]\n";
  }
}

SymmetryDocument parse_symmetry(std::string_view text)
{
  auto lines = content_lines(text);
  Space space = header_of(lines);
  unsigned const m = space.m();

  std::optional<BlockPermutation> sigma;
  std::map<unsigned, std::vector<unsigned>> tables;
  std::map<unsigned, std::vector<std::vector<unsigned>>> mats;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    auto [key, value] = key_value(lines[l]);
    if (key == "sigma") {
      sigma = parse_sigma(parse_list(value));
    } else if (key.starts_with('T')) {
      if (!tables.emplace(block_key(key, m), parse_list(value)).second)
        parse_fail("duplicate key " + std::string(key));
    } else if (key.starts_with('A')) {
      if (!mats.emplace(block_key(key, m), parse_nested(value)).second)
        parse_fail("duplicate key " + std::string(key));
    } else {
      parse_fail("unknown key '" + std::string(key) + "'");
    }
  }
  if (!sigma)
    parse_fail("missing 'sigma'");
  if (!tables.empty() && !mats.empty())
    parse_fail("document mixes T<i> and A<i> entries");

  if (!mats.empty()) {
    if (mats.size() != m)
      parse_fail("expected A1..A" + std::to_string(m));
    std::vector<BlockMatrix> out;
    for (auto &[i, rows] : mats) {
      unsigned k = space.partition().block(i);
      std::vector<Elem> entries;
      if (rows.size() != k)
        parse_fail("A" + std::to_string(i + 1) + " must have " + std::to_string(k) + " rows");
      for (auto const &row : rows) {
        if (row.size() != k)
          parse_fail("A" + std::to_string(i + 1) + " must be square");
        for (unsigned c : row) {
          if (!space.field().contains(c))
            parse_fail("matrix entry " + std::to_string(c) + " outside the field");
          entries.push_back(static_cast<Elem>(c));
        }
      }
      out.emplace_back(space.field(), k, std::move(entries));
    }
    return LinearBlockMap(space, std::move(*sigma), std::move(out));
  }

  if (tables.size() != m)
    parse_fail("expected T1..T" + std::to_string(m));
  BlockBijections blocks;
  for (auto &[i, t] : tables)
    blocks.emplace_back(std::vector<std::uint32_t>(t.begin(), t.end()));
  return StructuredSymmetry(space, std::move(*sigma), std::move(blocks));
}

SymmetryDocument read_symmetry(std::istream &in)
{
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_symmetry(buffer.str());
}

std::vector<std::string> split_documents(std::istream &in)
{
  std::vector<std::string> docs;
  std::string current, line;
  auto flush = [&] {
    if (!content_lines(current).empty())
      docs.push_back(current);
    current.clear();
  };
  while (std::getline(in, line)) {
    if (trim(line) == "---")
      flush();
    else
      current += line + '\n';
  }
  flush();
  return docs;
}

GeneratorMatrix read_generator(std::istream &in)
{
  auto lines = content_lines(in);
  Space space = header_of(lines);
  GeneratorMatrix g{space, {}};
  for (std::size_t l = 1; l < lines.size(); ++l)
    g.rows.push_back(parse_vector(space, lines[l]));
  return g;
}

void write_report(std::ostream &out, EnumerationReport const &report, BigInt const &formula)
{
  bool match = BigInt(report.count) == formula;
  out << "space: " << report.space << '\n'
      << "kind: " << report.kind << '\n'
      << "candidates: " << report.candidates << '\n'
      << "count: " << report.count << '\n'
      << "formula: " << formula.str() << '\n'
      << "verdict: " << (match ? "MATCH" : "MISMATCH") << '\n'
      << "seconds: " << report.seconds << '\n';
}

std::string report_json(EnumerationReport const &report, BigInt const &formula)
{
  nlohmann::json j;
  j["space"] = report.space;
  j["kind"] = report.kind;
  j["candidates"] = report.candidates;
  j["count"] = report.count;
  j["formula"] = formula.str();
  j["match"] = BigInt(report.count) == formula;
  j["seconds"] = report.seconds;
  return j.dump();
}

} // namespace pimetric

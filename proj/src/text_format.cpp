#include "cmacc/text_format.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace cmacc {
namespace {

bool skippable(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::int64_t parse_int(std::string_view text, std::size_t line) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

// Parses "key=<int>" and checks the key.
std::int64_t parse_field(const std::string& tok, const std::string& key, std::size_t line) {
  if (tok.rfind(key + "=", 0) != 0) throw ParseError(line, "expected " + key + "=<int>, got '" + tok + "'");
  return parse_int(std::string_view(tok).substr(key.size() + 1), line);
}

struct LineReader {
  std::istream& in;
  std::size_t number = 0;

  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++number;
      if (!skippable(line)) return true;
    }
    return false;
  }
};

}  // namespace

void write_packing(std::ostream& out, const PackingFamily& family, std::int64_t L) {
  out << "v=" << family.modulus() << " L=" << L << '\n';
  for (const Block& b : family.blocks()) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) out << ' ';
      out << b.elements[i].value;
    }
    out << '\n';
  }
}

PackingFile read_packing(std::istream& in) {
  LineReader reader{in};
  std::string line;
  if (!reader.next(line)) throw ParseError(1, "missing 'v=<int> L=<int>' header");
  const auto head = tokens(line);
  if (head.size() != 2) throw ParseError(reader.number, "header must be 'v=<int> L=<int>'");
  const std::int64_t v = parse_field(head[0], "v", reader.number);
  const std::int64_t L = parse_field(head[1], "L", reader.number);
  if (L < 1) throw ParseError(reader.number, "L must be positive");

  std::optional<RingContext> ring;
  try {
    ring.emplace(v);
  } catch (const std::invalid_argument& e) {
    throw ParseError(reader.number, e.what());
  }

  std::vector<Block> blocks;
  while (reader.next(line)) {
    Block b;
    for (const std::string& tok : tokens(line)) {
      const std::int64_t r = parse_int(tok, reader.number);
      if (r < 0 || r >= v) {
        throw ParseError(reader.number, "residue " + tok + " is not canonical in Z_" + std::to_string(v));
      }
      b.elements.push_back(Residue{r});
    }
    blocks.push_back(std::move(b));
  }
  try {
    return PackingFile{PackingFamily(*ring, std::move(blocks)), L};
  } catch (const std::invalid_argument& e) {
    throw ParseError(reader.number, e.what());
  }
}

void write_pda(std::ostream& out, const PdaArray& array) {
  out << "F=" << array.rows() << " K=" << array.cols() << '\n';
  for (std::int64_t f = 0; f < array.rows(); ++f) {
    for (std::int64_t k = 0; k < array.cols(); ++k) {
      if (k) out << ' ';
      out << array.at(f, k).str();
    }
    out << '\n';
  }
}

PdaArray read_pda(std::istream& in) {
  LineReader reader{in};
  std::string line;
  if (!reader.next(line)) throw ParseError(1, "missing 'F=<int> K=<int>' header");
  const auto head = tokens(line);
  if (head.size() != 2) throw ParseError(reader.number, "header must be 'F=<int> K=<int>'");
  const std::int64_t F = parse_field(head[0], "F", reader.number);
  const std::int64_t K = parse_field(head[1], "K", reader.number);
  if (F < 1 || K < 1) throw ParseError(reader.number, "F and K must be positive");

  std::vector<PdaEntry> grid;
  grid.reserve(static_cast<std::size_t>(F * K));
  std::int64_t rows = 0;
  while (reader.next(line)) {
    const auto toks = tokens(line);
    if (static_cast<std::int64_t>(toks.size()) != K) {
      throw ParseError(reader.number, "expected " + std::to_string(K) + " entries, got " +
                                          std::to_string(toks.size()));
    }
    for (const std::string& tok : toks) {
      if (tok == "*") {
        grid.push_back(PdaEntry::star());
      } else if (const auto comma = tok.find(','); comma != std::string::npos) {
        const std::string_view sv(tok);
        grid.push_back(PdaEntry::pair(parse_int(sv.substr(0, comma), reader.number),
                                      parse_int(sv.substr(comma + 1), reader.number)));
      } else {
        grid.push_back(PdaEntry::opaque(parse_int(tok, reader.number)));
      }
    }
    ++rows;
  }
  if (rows != F) {
    throw ParseError(reader.number, "expected " + std::to_string(F) + " rows, got " + std::to_string(rows));
  }
  return PdaArray(F, K, std::move(grid));
}

std::string to_text(const PackingFamily& family, std::int64_t L) {
  std::ostringstream ss;
  write_packing(ss, family, L);
  return ss.str();
}

std::string to_text(const PdaArray& array) {
  std::ostringstream ss;
  write_pda(ss, array);
  return ss.str();
}

PackingFile load_packing(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_packing(in);
}

PdaArray load_pda(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_pda(in);
}

}  // namespace cmacc

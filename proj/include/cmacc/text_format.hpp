#pragma once

// Plain-text file formats.
//
// Packing:  line 1 "v=<int> L=<int>", then one line per block holding its
//           canonical residues separated by spaces.
// PDA:      line 1 "F=<int> K=<int>", then F lines of K tokens: "*" for a
//           star, "c,i" for a pair symbol, a bare integer for an opaque one.
//
// Writers emit single spaces and '\n' line ends; readers accept any run of
// blanks. Blank lines and lines starting with '#' are skipped.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "cmacc/packing.hpp"
#include "cmacc/pda.hpp"

namespace cmacc {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct PackingFile {
  PackingFamily family;
  std::int64_t L;
};

void write_packing(std::ostream& out, const PackingFamily& family, std::int64_t L);
PackingFile read_packing(std::istream& in);

void write_pda(std::ostream& out, const PdaArray& array);
PdaArray read_pda(std::istream& in);

std::string to_text(const PackingFamily& family, std::int64_t L);
std::string to_text(const PdaArray& array);

PackingFile load_packing(const std::string& path);
PdaArray load_pda(const std::string& path);

}  // namespace cmacc

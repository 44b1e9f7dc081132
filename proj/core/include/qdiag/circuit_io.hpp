// Copyright 2026 The qdiag authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDIAG_CIRCUIT_IO_HPP
#define QDIAG_CIRCUIT_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "qdiag/circuit.hpp"

namespace qdiag {

// Raised on malformed circuit text; the message begins with "line N:".
class ParseError : public std::invalid_argument {
  public:
    ParseError(size_t line, const std::string &message)
        : std::invalid_argument("line " + std::to_string(line) + ": " + message),
          line_(line) {}
    size_t line() const { return line_; }

  private:
    size_t line_;
};

// Parses the plain-text circuit format:
//
//   # comment
//   QUBITS 3
//   H 0
//   CX 0 1
//   CCX 0 1 2
//   MCX 0 1 2          # last index is the target, the rest are controls
//   MEASURE 0 1
//
// Blank lines and '#' comments are ignored. QUBITS must come first, MEASURE
// last. Gate names are case-insensitive; unknown names, bad indices, and
// structural problems raise ParseError with the offending line number.
Circuit parse_circuit(std::istream &in);
Circuit parse_circuit(const std::string &text);
Circuit load_circuit(const std::string &path);

// Canonical text form; parse_circuit(format_circuit(c)) == c.
std::string format_circuit(const Circuit &circuit);
void save_circuit(const Circuit &circuit, const std::string &path);

}  // namespace qdiag

#endif

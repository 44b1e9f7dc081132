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

#include "qdiag/circuit_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace qdiag {

namespace {

std::vector<std::string> tokenize(const std::string &line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ss(body);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) {
        tokens.push_back(tok);
    }
    return tokens;
}

uint32_t parse_index(const std::string &tok, size_t line_no) {
    size_t pos = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(tok, &pos);
    } catch (const std::exception &) {
        throw ParseError(line_no, "expected qubit index, got '" + tok + "'");
    }
    if (pos != tok.size() || value > 0xffffffffUL) {
        throw ParseError(line_no, "expected qubit index, got '" + tok + "'");
    }
    return static_cast<uint32_t>(value);
}

}  // namespace

Circuit parse_circuit(std::istream &in) {
    Circuit circuit;
    bool saw_qubits = false;
    bool saw_measure = false;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }
        std::string head = tokens[0];
        for (char &c : head) {
            c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        }
        if (saw_measure) {
            throw ParseError(line_no, "content after MEASURE");
        }
        if (head == "QUBITS") {
            if (saw_qubits) {
                throw ParseError(line_no, "duplicate QUBITS line");
            }
            if (tokens.size() != 2) {
                throw ParseError(line_no, "QUBITS takes exactly one count");
            }
            uint32_t n = parse_index(tokens[1], line_no);
            if (n == 0) {
                throw ParseError(line_no, "QUBITS count must be positive");
            }
            circuit.num_qubits = n;
            saw_qubits = true;
            continue;
        }
        if (!saw_qubits) {
            throw ParseError(line_no, "QUBITS must be the first statement");
        }
        if (head == "MEASURE") {
            if (tokens.size() < 2) {
                throw ParseError(line_no, "MEASURE needs at least one qubit");
            }
            for (size_t i = 1; i < tokens.size(); ++i) {
                circuit.measured_qubits.push_back(parse_index(tokens[i], line_no));
            }
            saw_measure = true;
            continue;
        }
        std::optional<GateKind> kind = gate_kind_from_name(head);
        if (!kind) {
            throw ParseError(line_no, "unknown gate '" + tokens[0] + "'");
        }
        std::vector<uint32_t> qubits;
        for (size_t i = 1; i < tokens.size(); ++i) {
            qubits.push_back(parse_index(tokens[i], line_no));
        }
        if (qubits.empty()) {
            throw ParseError(line_no, "gate " + head + " needs qubit operands");
        }
        GateOp op;
        op.kind = *kind;
        op.targets = {qubits.back()};
        qubits.pop_back();
        op.controls = std::move(qubits);
        try {
            circuit.push_back(op);
        } catch (const std::exception &e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!saw_qubits) {
        throw ParseError(line_no, "missing QUBITS statement");
    }
    if (!saw_measure) {
        throw ParseError(line_no, "missing MEASURE statement");
    }
    try {
        circuit.validate();
    } catch (const std::exception &e) {
        throw ParseError(line_no, e.what());
    }
    return circuit;
}

Circuit parse_circuit(const std::string &text) {
    std::istringstream ss(text);
    return parse_circuit(ss);
}

Circuit load_circuit(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open circuit file: " + path);
    }
    return parse_circuit(in);
}

std::string format_circuit(const Circuit &circuit) {
    std::string out = "QUBITS " + std::to_string(circuit.num_qubits) + "\n";
    for (const GateOp &op : circuit.ops) {
        out += op.str();
        out += '\n';
    }
    out += "MEASURE";
    for (uint32_t q : circuit.measured_qubits) {
        out += ' ';
        out += std::to_string(q);
    }
    out += '\n';
    return out;
}

void save_circuit(const Circuit &circuit, const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write circuit file: " + path);
    }
    out << format_circuit(circuit);
}

}  // namespace qdiag

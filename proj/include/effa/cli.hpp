#pragma once

#include "effa/automata.hpp"
#include "effa/recognition.hpp"
#include "effa/syntactic.hpp"

#include <string>
#include <vector>

namespace effa {

/// Line-oriented automaton text:
///   monad dist | monad weighted <semiring> | monad convex
///   semantics max|min|interval          (convex only, default max)
///   alphabet a b
///   states q0 q1
///   init q0:1
///   trans q0 a -> q0:1/2 q1:1/2         (convex: sets separated by |)
///   output q0:0 q1:1
/// `#` starts a comment. Errors are ParseError with the line number.
EffAutomaton parse_automaton(const std::string& text);
std::string print_automaton(const EffAutomaton& a);

/// Same framing with `monoid`, `unit`, `table x*y=z`, `hom a -> ...`, `pred`.
EffRecognizer parse_recognizer(const std::string& text);
std::string print_recognizer(const EffRecognizer& r);

/// Same framing with `generators`, `gen g q -> ...`, `letter a q -> ...`.
BialgRecognizer parse_bialgebra(const std::string& text);
std::string print_bialgebra(const BialgRecognizer& b);

/// `1/3*eps + 2/3*a.a`
FormalCombo parse_combo(const Carrier& alphabet, const std::string& text);

struct CommandResult {
    int status = 0; // 0 success/true, 1 false/violation, 2 error
    std::string out;
    std::string err;
};

/// Runs one command line (without the program name).
CommandResult run_command(const std::vector<std::string>& args);

} // namespace effa

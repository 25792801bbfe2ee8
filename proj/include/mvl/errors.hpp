#pragma once

#include <stdexcept>
#include <string>

namespace mvl {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A logic level outside its domain ({0..3} quaternary, {0,1} binary).
class ValueOutOfRange : public Error {
public:
    using Error::Error;
};

// Operand count disagrees with the gate's arity.
class ArityMismatch : public Error {
public:
    using Error::Error;
};

// Malformed expression or netlist text. `position` is a character offset
// for expressions and a 1-based line number for netlists.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, int position)
        : Error(what), position_(position) {}
    int position() const { return position_; }

private:
    int position_;
};

class UnknownOperator : public Error {
public:
    using Error::Error;
};

class UnboundVariable : public Error {
public:
    using Error::Error;
};

class TooManyVariables : public Error {
public:
    using Error::Error;
};

class TooManyInputs : public Error {
public:
    using Error::Error;
};

class IncompleteAssignment : public Error {
public:
    using Error::Error;
};

class MalformedTable : public Error {
public:
    using Error::Error;
};

} // namespace mvl

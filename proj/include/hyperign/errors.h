// Exception types raised by the library. Everything derives from
// hyperign::Error so callers can catch the whole family at once.

#ifndef HYPERIGN_ERRORS_H_
#define HYPERIGN_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperign {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parsing.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string expected)
      : Error("syntax error at " + std::to_string(position) + ": expected " +
              expected),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

class LanguageError : public Error {
 public:
  LanguageError(std::string op, std::string tag)
      : Error("operator " + op + " is not part of language " + tag),
        op_(std::move(op)),
        tag_(std::move(tag)) {}

  const std::string& op() const { return op_; }
  const std::string& tag() const { return tag_; }

 private:
  std::string op_;
  std::string tag_;
};

// Topics.
class EmptyVarError : public Error {
 public:
  EmptyVarError() : Error("formula has no propositional variables") {}
};

class UnassignedAtomError : public Error {
 public:
  explicit UnassignedAtomError(const std::string& atom)
      : Error("atom '" + atom + "' has no topic assigned"), atom_(atom) {}
  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

class UnknownTopicError : public Error {
 public:
  explicit UnknownTopicError(const std::string& id)
      : Error("unknown topic '" + id + "'") {}
};

// Models.
class FormatError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class BoundsError : public Error {
 public:
  using Error::Error;
};

// Evaluation.
class WorldNotFound : public Error {
 public:
  explicit WorldNotFound(const std::string& world)
      : Error("world '" + world + "' not in model") {}
};

class LanguageMismatch : public Error {
 public:
  using Error::Error;
};

class MissingTopics : public Error {
 public:
  MissingTopics()
      : Error("topic-sensitive system evaluated on a model without topics") {}
};

// Proof system.
class TooManyAtoms : public Error {
 public:
  explicit TooManyAtoms(std::size_t n)
      : Error("tautology check needs " + std::to_string(n) +
              " atoms, limit is 20") {}
};

class PremiseNotCertified : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperign

#endif  // HYPERIGN_ERRORS_H_

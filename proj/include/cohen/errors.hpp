#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cohen {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad presentations, out-of-range indices, inconsistent data.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class GroupMismatch : public Error {
 public:
  GroupMismatch() : Error("operands belong to different groups") {}
};

class NotInvertible : public Error {
 public:
  NotInvertible() : Error("matrix is not invertible over the group ring") {}
};

class NotAdmissible : public Error {
 public:
  NotAdmissible() : Error("presentation is not admissible") {}
};

class NotNormalized : public Error {
 public:
  explicit NotNormalized(std::size_t relator)
      : Error("relator " + std::to_string(relator + 1) +
              " does not start with the factor (e, x" +
              std::to_string(relator + 1) + ", +1)"),
        relator_(relator) {}
  std::size_t relator() const noexcept { return relator_; }

 private:
  std::size_t relator_;
};

class IllegalMove : public Error {
 public:
  IllegalMove(std::size_t index, const std::string& why)
      : Error("illegal move #" + std::to_string(index) + ": " + why),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class SearchCapExceeded : public Error {
 public:
  explicit SearchCapExceeded(unsigned long long cap)
      : Error("homomorphism search exceeded its cap of " +
              std::to_string(cap) + " candidate assignments") {}
};

// Input document error; `path` is a JSON pointer into the offending document.
class ParseError : public Error {
 public:
  ParseError(std::string path, std::string token, const std::string& what)
      : Error(what + " at " + (path.empty() ? std::string("/") : path) +
              (token.empty() ? std::string() : " (near '" + token + "')")),
        path_(std::move(path)),
        token_(std::move(token)) {}
  const std::string& path() const noexcept { return path_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::string path_;
  std::string token_;
};

}  // namespace cohen

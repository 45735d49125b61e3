#pragma once

#include <istream>
#include <string>

#include "evolalg/errors.hpp"

namespace evolalg {

/// Whitespace-token reader shared by every file format parser.
class TokenReader {
public:
    explicit TokenReader(std::istream& in) : in_(in) {}

    std::string next(const char* what);
    long long next_int(const char* what, long long min, long long max);
    void expect(const char* literal);

    /// Fails unless only whitespace remains.
    void expect_end();

private:
    std::istream& in_;
};

/// Kind of a version-tagged file, detected from its first token.
enum class FileKind { Graph, Algebra, Group, PermGroup, Monomial };

FileKind detect_kind(std::istream& in);

} // namespace evolalg

#include "evolalg/io.hpp"

namespace evolalg {

std::string TokenReader::next(const char* what) {
    std::string tok;
    if (!(in_ >> tok))
        throw ParseError(std::string("unexpected end of input, expected ") + what);
    return tok;
}

long long TokenReader::next_int(const char* what, long long min, long long max) {
    const std::string tok = next(what);
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(std::string("expected integer for ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError(std::string("expected integer for ") + what + ", got '" + tok + "'");
    if (v < min || v > max)
        throw ParseError(std::string(what) + " out of range: " + tok);
    return v;
}

void TokenReader::expect(const char* literal) {
    const std::string tok = next(literal);
    if (tok != literal)
        throw ParseError(std::string("expected '") + literal + "', got '" + tok + "'");
}

void TokenReader::expect_end() {
    std::string tok;
    if (in_ >> tok)
        throw ParseError("trailing garbage: '" + tok + "'");
}

FileKind detect_kind(std::istream& in) {
    std::string tok;
    if (!(in >> tok)) throw ParseError("empty file");
    in.seekg(0);
    if (tok == "graph") return FileKind::Graph;
    if (tok == "evolalg") return FileKind::Algebra;
    if (tok == "group") return FileKind::Group;
    if (tok == "permgroup") return FileKind::PermGroup;
    if (tok == "monomial") return FileKind::Monomial;
    throw ParseError("unrecognized file header: '" + tok + "'");
}

} // namespace evolalg

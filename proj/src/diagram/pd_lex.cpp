#include "pd_lex.hpp"

#include <cctype>
#include <charconv>

#include "skein/error.hpp"

namespace skein::detail {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error("diagram.ParseError", msg); }

int arity_of(char kind) {
    switch (kind) {
    case 'X':
    case 'T':
        return 4;
    case 'P':
        return 2;
    default:
        return 0;
    }
}

}  // namespace

std::vector<PdToken> lex_pd(std::string_view text, std::string_view allowed) {
    std::vector<PdToken> out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    for (skip(); i < text.size(); skip()) {
        const char kind = text[i];
        if (allowed.find(kind) == std::string_view::npos) fail(std::string("unexpected token at '") + std::string(text.substr(i, 12)) + "'");
        ++i;
        PdToken tok{kind, {}};
        if (kind == 'U') {
            if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) fail("U must stand alone");
            out.push_back(tok);
            continue;
        }
        if (i >= text.size() || text[i] != '[') fail(std::string("expected '[' after ") + kind);
        ++i;
        for (;;) {
            skip();
            int v = 0;
            auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
            if (ec != std::errc() || v <= 0) fail("labels must be positive integers");
            i = static_cast<std::size_t>(ptr - text.data());
            tok.labels.push_back(v);
            skip();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ']') {
                ++i;
                break;
            }
            fail("unterminated token");
        }
        if (static_cast<int>(tok.labels.size()) != arity_of(kind))
            fail(std::string(1, kind) + " expects " + std::to_string(arity_of(kind)) + " labels, got " + std::to_string(tok.labels.size()));
        out.push_back(std::move(tok));
    }
    return out;
}

}  // namespace skein::detail

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace skein::detail {

struct PdToken {
    char kind;  // 'X', 'P', 'T' or 'U'
    std::vector<int> labels;
};

// whitespace separated tokens; kinds outside `allowed` are a ParseError
std::vector<PdToken> lex_pd(std::string_view text, std::string_view allowed);

}  // namespace skein::detail

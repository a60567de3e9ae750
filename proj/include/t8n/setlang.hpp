#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "t8n/group.hpp"

namespace t8n {

/// Syntax error with the byte offset of the failure and the tokens that
/// would have been accepted there.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t offset, std::string expected, const std::string& detail)
        : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + detail +
                             " (expected " + expected + ")"),
          offset_(offset),
          expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

/// One primitive of the set language.  Argument meaning by kind:
///   elem(r,j)      the single element a^r b^j
///   cyclic(r,j)    the cyclic subgroup <a^r b^j> (includes e)
///   coset(j)       <a>b^j
///   evencoset(j)   { a^r b^j : r even },  oddcoset(j) likewise
///   class(r,j)     the conjugacy class of a^r b^j
///   genclass(r,j)  the generator class [a^r b^j]
///   identity       { e }
struct set_term {
    enum class kind : unsigned char { elem, cyclic, coset, evencoset, oddcoset, cls, genclass, identity };
    kind what = kind::identity;
    int r = 0;
    int j = 0;

    friend bool operator==(const set_term&, const set_term&) = default;
};

/// expr := term (('+' | '-') term)* — all '+' terms are united first, then
/// all '-' terms are removed, regardless of the order they appear in.
struct set_expr {
    std::vector<set_term> unions;
    std::vector<set_term> differences;

    friend bool operator==(const set_expr&, const set_expr&) = default;
};

set_expr parse_set_expr(std::string_view text);
std::string pretty_print(const set_expr& e);

/// Evaluates to a connection set; integer arguments are reduced mod 2n
/// (mod 4 for b-exponents).  Errors when the identity remains in the result
/// or the result is empty.
connection_set evaluate(const set_expr& e, const group& g);

/// Canonical JSON: {"n": n, "elements": [[r, j], ...]} sorted by (j, r).
std::string to_json(const connection_set& s);
connection_set connection_set_from_json(std::string_view text);

}  // namespace t8n

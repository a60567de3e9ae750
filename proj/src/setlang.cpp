#include "t8n/setlang.hpp"

#include <cctype>
#include <map>
#include <set>

#include <json.hpp>

namespace t8n {

namespace {

struct primitive_info {
    set_term::kind what;
    int arity;  // 0, 1 (j) or 2 (r, j)
};

const std::map<std::string, primitive_info, std::less<>>& primitives() {
    static const std::map<std::string, primitive_info, std::less<>> table{
        {"elem", {set_term::kind::elem, 2}},         {"cyclic", {set_term::kind::cyclic, 2}},
        {"coset", {set_term::kind::coset, 1}},       {"evencoset", {set_term::kind::evencoset, 1}},
        {"oddcoset", {set_term::kind::oddcoset, 1}}, {"class", {set_term::kind::cls, 2}},
        {"genclass", {set_term::kind::genclass, 2}}, {"identity", {set_term::kind::identity, 0}}};
    return table;
}

class parser {
public:
    explicit parser(std::string_view text) : text_(text) {}

    set_expr parse() {
        set_expr out;
        out.unions.push_back(term());
        skip_ws();
        while (pos_ < text_.size()) {
            const char op = text_[pos_];
            if (op != '+' && op != '-')
                throw parse_error(pos_, "'+', '-' or end of input", "unexpected character");
            ++pos_;
            (op == '+' ? out.unions : out.differences).push_back(term());
            skip_ws();
        }
        return out;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw parse_error(pos_, std::string("'") + c + "'", "missing token");
        ++pos_;
    }

    int integer() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits = 0;
        long long value = 0;
        while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000) throw parse_error(start, "a smaller integer", "integer too large");
            ++digits;
            ++pos_;
        }
        if (digits == 0) throw parse_error(start, "an integer", "missing integer");
        return text_[start] == '-' ? (int)-value : (int)value;
    }

    set_term term() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha((unsigned char)text_[pos_])) ++pos_;
        if (pos_ == start) throw parse_error(start, "a primitive name", "missing term");
        const std::string_view name = text_.substr(start, pos_ - start);
        const auto it = primitives().find(name);
        if (it == primitives().end())
            throw parse_error(start, "one of elem, cyclic, coset, evencoset, oddcoset, class, genclass, identity",
                              "unknown primitive '" + std::string(name) + "'");
        set_term out;
        out.what = it->second.what;
        if (it->second.arity == 0) return out;
        expect('(');
        if (it->second.arity == 2) {
            out.r = integer();
            expect(',');
        }
        out.j = integer();
        expect(')');
        return out;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string term_text(const set_term& t) {
    switch (t.what) {
        case set_term::kind::elem: return "elem(" + std::to_string(t.r) + "," + std::to_string(t.j) + ")";
        case set_term::kind::cyclic: return "cyclic(" + std::to_string(t.r) + "," + std::to_string(t.j) + ")";
        case set_term::kind::coset: return "coset(" + std::to_string(t.j) + ")";
        case set_term::kind::evencoset: return "evencoset(" + std::to_string(t.j) + ")";
        case set_term::kind::oddcoset: return "oddcoset(" + std::to_string(t.j) + ")";
        case set_term::kind::cls: return "class(" + std::to_string(t.r) + "," + std::to_string(t.j) + ")";
        case set_term::kind::genclass: return "genclass(" + std::to_string(t.r) + "," + std::to_string(t.j) + ")";
        default: return "identity";
    }
}

std::vector<element> term_elements(const set_term& t, const group& g) {
    switch (t.what) {
        case set_term::kind::elem: return {g.make(t.r, t.j)};
        case set_term::kind::cyclic: return g.cyclic_subgroup(g.make(t.r, t.j));
        case set_term::kind::coset:
        case set_term::kind::evencoset:
        case set_term::kind::oddcoset: {
            std::vector<element> out;
            const int j = ((t.j % 4) + 4) % 4;
            for (int r = 0; r < g.a_order(); ++r) {
                if (t.what == set_term::kind::evencoset && r % 2 != 0) continue;
                if (t.what == set_term::kind::oddcoset && r % 2 != 1) continue;
                out.push_back({r, j});
            }
            return out;
        }
        case set_term::kind::cls: {
            const element x = g.make(t.r, t.j);
            return g.conjugacy_classes()[g.class_index(x)].members;
        }
        case set_term::kind::genclass: return g.generator_class(g.make(t.r, t.j));
        default: return {g.identity()};
    }
}

}  // namespace

set_expr parse_set_expr(std::string_view text) { return parser(text).parse(); }

std::string pretty_print(const set_expr& e) {
    std::string out;
    for (std::size_t i = 0; i < e.unions.size(); ++i) {
        if (i > 0) out += " + ";
        out += term_text(e.unions[i]);
    }
    for (const set_term& t : e.differences) out += " - " + term_text(t);
    return out;
}

connection_set evaluate(const set_expr& e, const group& g) {
    std::set<element> acc;
    for (const set_term& t : e.unions)
        for (const element& x : term_elements(t, g)) acc.insert(x);
    for (const set_term& t : e.differences)
        for (const element& x : term_elements(t, g)) acc.erase(x);
    if (acc.count(g.identity()))
        throw std::invalid_argument(
            "the evaluated set contains the identity; subtract it explicitly (\"- identity\")");
    if (acc.empty()) throw std::invalid_argument("the evaluated set is empty");
    return connection_set(g, std::vector<element>(acc.begin(), acc.end()));
}

std::string to_json(const connection_set& s) {
    nlohmann::json j;
    j["n"] = s.n();
    nlohmann::json elems = nlohmann::json::array();
    for (const element& x : s.members()) elems.push_back({x.r, x.j});
    j["elements"] = std::move(elems);
    return j.dump();
}

connection_set connection_set_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed connection-set JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("elements") ||
        !j["n"].is_number_integer() || !j["elements"].is_array())
        throw std::invalid_argument("connection-set JSON must be {\"n\": int, \"elements\": [[r, j], ...]}");
    const int n = j["n"].get<int>();
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const group g(n);
    std::vector<element> members;
    for (const auto& item : j["elements"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            throw std::invalid_argument("each element must be an [r, j] integer pair");
        const int r = item[0].get<int>(), jj = item[1].get<int>();
        if (r < 0 || r >= g.a_order())
            throw std::invalid_argument("element exponent r=" + std::to_string(r) +
                                        " out of range [0, " + std::to_string(g.a_order()) + ")");
        if (jj < 0 || jj >= 4)
            throw std::invalid_argument("element exponent j=" + std::to_string(jj) +
                                        " out of range [0, 4)");
        members.push_back({r, jj});
    }
    return connection_set(g, std::move(members));
}

}  // namespace t8n

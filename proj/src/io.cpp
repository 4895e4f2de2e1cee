#include "pbck/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace pbck {

namespace {

struct token {
    std::string text;
    int line = 0, col = 0;
};

struct lexer {
    std::vector<token> tokens;
    std::string origin;
    std::size_t pos = 0;

    lexer(std::string_view text, std::string_view org) : origin(org) {
        int line = 1, col = 1;
        token cur;
        bool in_comment = false;
        const auto flush = [&] {
            if (!cur.text.empty()) tokens.push_back(std::move(cur));
            cur = {};
        };
        for (char ch : text) {
            if (ch == '\n') {
                flush();
                in_comment = false;
                ++line;
                col = 1;
                continue;
            }
            if (!in_comment) {
                if (ch == '#') {
                    flush();
                    in_comment = true;
                } else if (ch == ' ' || ch == '\t' || ch == '\r') {
                    flush();
                } else {
                    if (cur.text.empty()) {
                        cur.line = line;
                        cur.col = col;
                    }
                    cur.text += ch;
                }
            }
            ++col;
        }
        flush();
    }

    [[noreturn]] void fail(const token& at, const std::string& msg) const {
        throw error(errc::parse_error, origin + ":" + std::to_string(at.line) + ":" +
                                           std::to_string(at.col) + ": " + msg);
    }

    [[noreturn]] void fail_eof(const std::string& msg) const {
        if (tokens.empty()) throw error(errc::parse_error, origin + ":1:1: " + msg);
        const token& last = tokens.back();
        throw error(errc::parse_error, origin + ":" + std::to_string(last.line) + ":" +
                                           std::to_string(last.col) + ": " + msg +
                                           " (at end of input)");
    }

    bool at_end() const { return pos == tokens.size(); }

    const token& peek() const {
        if (at_end()) fail_eof("unexpected end of input");
        return tokens[pos];
    }

    token next(const std::string& what) {
        if (at_end()) fail_eof("expected " + what);
        return tokens[pos++];
    }

    void keyword(const std::string& kw) {
        const token t = next("'" + kw + "'");
        if (t.text != kw) fail(t, "expected '" + kw + "', got '" + t.text + "'");
    }

    long long integer(const std::string& what) {
        const token t = next(what);
        long long v = 0;
        const auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc{} || p != t.text.data() + t.text.size())
            fail(t, "expected " + what + ", got '" + t.text + "'");
        return v;
    }
};

std::vector<element> parse_table(lexer& lx, const std::vector<std::string>& names, int n,
                                 const char* section) {
    std::vector<element> table;
    table.reserve(n * n);
    for (int i = 0; i < n * n; ++i) {
        const token t = lx.next(std::string(section) + " entry");
        bool found = false;
        for (int e = 0; e < n; ++e)
            if (names[e] == t.text) {
                table.push_back(e);
                found = true;
                break;
            }
        if (!found) lx.fail(t, "'" + t.text + "' is not a declared element");
    }
    return table;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::parse_error, path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string table_rows(const finite_algebra& a, const std::vector<element>& table) {
    std::string out;
    const int n = a.size();
    for (element x = 0; x < n; ++x) {
        for (element y = 0; y < n; ++y) {
            out += y ? " " : "";
            out += a.name_of(table[x * n + y]);
        }
        out += '\n';
    }
    return out;
}

rational parse_rational(lexer& lx) {
    const token t = lx.next("a nonnegative integer or p/q value");
    const std::string& s = t.text;
    const auto slash = s.find('/');
    const auto digits = [&](std::string_view part) -> std::optional<long long> {
        long long v = 0;
        const auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || p != part.data() + part.size()) return std::nullopt;
        return v;
    };
    if (slash == std::string::npos) {
        const auto v = digits(s);
        if (!v || *v < 0)
            lx.fail(t, "expected a nonnegative integer or p/q value, got '" + s + "'");
        return {*v, 1};
    }
    const auto p = digits(std::string_view(s).substr(0, slash));
    const auto q = digits(std::string_view(s).substr(slash + 1));
    if (!p || !q || *p < 0 || *q < 0)
        lx.fail(t, "expected a nonnegative integer or p/q value, got '" + s + "'");
    if (*q == 0) lx.fail(t, "zero denominator in '" + s + "'");
    return {*p, *q};
}

element element_token(lexer& lx, const finite_algebra& a, const char* what) {
    const token t = lx.next(what);
    if (const auto e = a.element_named(t.text)) return *e;
    lx.fail(t, "'" + t.text + "' is not an element of the algebra");
}

} // namespace

algebra_file parse_algebra_text(std::string_view text, std::string_view origin) {
    lexer lx(text, origin);
    lx.keyword("pbck");
    const token n_tok = lx.peek();
    const long long n_raw = lx.integer("the carrier size");
    if (n_raw < 1 || n_raw > carrier_cap)
        lx.fail(n_tok, "carrier size " + std::to_string(n_raw) + " is outside 1.." +
                           std::to_string(carrier_cap));
    const int n = static_cast<int>(n_raw);

    lx.keyword("elements");
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) {
        const token t = lx.next("an element name");
        for (const auto& prev : names)
            if (prev == t.text) lx.fail(t, "duplicate element name '" + t.text + "'");
        names.push_back(t.text);
    }

    lx.keyword("top");
    const token top_tok = lx.next("the top element");
    element top = -1;
    for (int e = 0; e < n; ++e)
        if (names[e] == top_tok.text) top = e;
    if (top == -1) lx.fail(top_tok, "'" + top_tok.text + "' is not a declared element");

    lx.keyword("arrow");
    std::vector<element> arrow = parse_table(lx, names, n, "arrow");

    std::vector<element> squiggle;
    bool omitted = true;
    if (!lx.at_end() && lx.peek().text == "squiggle") {
        lx.keyword("squiggle");
        squiggle = parse_table(lx, names, n, "squiggle");
        omitted = false;
    } else {
        squiggle = arrow;
    }

    std::optional<std::vector<element>> prod;
    if (!lx.at_end() && lx.peek().text == "prod") {
        lx.keyword("prod");
        prod = parse_table(lx, names, n, "prod");
    }
    if (!lx.at_end()) {
        const token& t = lx.peek();
        if (t.text == "squiggle" || t.text == "prod")
            lx.fail(t, "duplicate or out-of-order section '" + t.text + "'");
        lx.fail(t, "expected end of file, got '" + t.text + "'");
    }

    return {finite_algebra(n, std::move(arrow), std::move(squiggle), top, std::move(names)),
            std::move(prod), omitted};
}

algebra_file load_algebra(const std::string& path) {
    return parse_algebra_text(read_file(path), path);
}

std::string serialize_algebra(const finite_algebra& a) {
    std::string out = "pbck " + std::to_string(a.size()) + "\nelements";
    for (element x = 0; x < a.size(); ++x) out += " " + a.name_of(x);
    out += "\ntop " + a.name_of(a.top()) + "\narrow\n" + table_rows(a, a.arrow_table());
    if (a.squiggle_table() != a.arrow_table())
        out += "squiggle\n" + table_rows(a, a.squiggle_table());
    return out;
}

std::string serialize_hoop(const hoop_algebra& h) {
    return serialize_algebra(h.base) + "prod\n" + table_rows(h.base, h.prod);
}

measure parse_measure_text(const finite_algebra& a, std::string_view text,
                           std::string_view origin) {
    lexer lx(text, origin);
    const int n = a.size();
    std::vector<rational> values(n, {-1, 1});
    while (!lx.at_end()) {
        const token name_tok = lx.peek();
        const element x = element_token(lx, a, "an element name");
        if (values[x] >= 0) lx.fail(name_tok, "duplicate value for '" + name_tok.text + "'");
        values[x] = parse_rational(lx);
    }
    for (element x = 0; x < n; ++x)
        if (values[x] < 0)
            lx.fail_eof("no value given for element '" + a.name_of(x) + "'");
    return {std::move(values)};
}

measure load_measure(const finite_algebra& a, const std::string& path) {
    return parse_measure_text(a, read_file(path), path);
}

std::string serialize_measure(const finite_algebra& a, const measure& m) {
    std::string out;
    for (element x = 0; x < a.size(); ++x) {
        out += a.name_of(x) + " " + std::to_string(m(x).numerator());
        if (m(x).denominator() != 1) out += "/" + std::to_string(m(x).denominator());
        out += '\n';
    }
    return out;
}

unary_map parse_map_text(const finite_algebra& a, std::string_view text,
                         std::string_view origin) {
    lexer lx(text, origin);
    const int n = a.size();
    const bool pair_form = [&] {
        for (const auto& t : lx.tokens)
            if (t.text == "->") return true;
        return false;
    }();

    std::vector<element> image(n, -1);
    if (pair_form) {
        while (!lx.at_end()) {
            const token src_tok = lx.peek();
            const element x = element_token(lx, a, "an element name");
            lx.keyword("->");
            const element y = element_token(lx, a, "an image element");
            if (image[x] != -1) lx.fail(src_tok, "duplicate image for '" + src_tok.text + "'");
            image[x] = y;
        }
        for (element x = 0; x < n; ++x)
            if (image[x] == -1) lx.fail_eof("no image given for element '" + a.name_of(x) + "'");
    } else {
        for (element x = 0; x < n; ++x) image[x] = element_token(lx, a, "an image element");
        if (!lx.at_end()) lx.fail(lx.peek(), "expected end of file after " +
                                                 std::to_string(n) + " image entries");
    }
    return {std::move(image)};
}

unary_map load_map(const finite_algebra& a, const std::string& path) {
    return parse_map_text(a, read_file(path), path);
}

std::string serialize_map(const finite_algebra& a, const unary_map& mu) {
    std::string out;
    for (element x = 0; x < a.size(); ++x)
        out += a.name_of(x) + " -> " + a.name_of(mu(x)) + '\n';
    return out;
}

} // namespace pbck

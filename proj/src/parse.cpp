#include "abelian/parse.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace abelian {

namespace {

using Exps = std::vector<int>;
using GenPoly = std::map<Exps, std::uint32_t>;  // true polynomial, lex-ordered terms

struct Parser {
    const FieldCtx& ctx;
    std::size_t s;
    const std::string& t;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) + ": " + what);
    }
    void skip() {
        while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
    }
    bool peek(char c) {
        skip();
        return pos < t.size() && t[pos] == c;
    }
    bool starts_factor() {
        skip();
        if (pos >= t.size()) return false;
        const char c = t[pos];
        return c == '(' || std::isalnum(static_cast<unsigned char>(c));
    }
    long long integer() {
        skip();
        if (pos >= t.size() || !std::isdigit(static_cast<unsigned char>(t[pos]))) fail("integer expected");
        long long v = 0;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
            v = v * 10 + (t[pos++] - '0');
            if (v > (1LL << 40)) fail("integer too large");
        }
        return v;
    }

    GenPoly constant(std::uint32_t c) const {
        GenPoly g;
        if (c) g[Exps(s, 0)] = c;
        return g;
    }
    GenPoly add(const GenPoly& a, const GenPoly& b, bool negate) const {
        GenPoly r = a;
        for (const auto& [e, c] : b) {
            auto& cell = r[e];
            cell = negate ? ctx.sub(cell, c) : ctx.add(cell, c);
            if (!cell) r.erase(e);
        }
        return r;
    }
    GenPoly mul(const GenPoly& a, const GenPoly& b) const {
        GenPoly r;
        for (const auto& [ea, ca] : a)
            for (const auto& [eb, cb] : b) {
                Exps e(s);
                for (std::size_t k = 0; k < s; ++k) e[k] = ea[k] + eb[k];
                auto& cell = r[e];
                cell = ctx.add(cell, ctx.mul(ca, cb));
                if (!cell) r.erase(e);
            }
        return r;
    }
    GenPoly power(GenPoly a, long long e) const {
        GenPoly r = constant(1);
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    // exact division; lex division by a single divisor leaves no remainder iff it divides
    GenPoly divide(GenPoly a, const GenPoly& b) {
        if (b.empty()) fail("division by zero");
        const auto& [lb, cb] = *b.rbegin();
        const std::uint32_t inv = ctx.inv(cb);
        GenPoly quo;
        while (!a.empty()) {
            const auto [la, ca] = *a.rbegin();
            Exps e(s);
            for (std::size_t k = 0; k < s; ++k) {
                e[k] = la[k] - lb[k];
                if (e[k] < 0) fail("division is not exact");
            }
            GenPoly term;
            term[e] = ctx.mul(ca, inv);
            quo = add(quo, term, false);
            a = add(a, mul(term, b), true);
        }
        return quo;
    }

    int axis_of(const std::string& name) {
        if (s == 1 && (name == "X" || name == "Y" || name == "X1" || name == "X2")) return 0;
        if (name == "X") return 0;
        if (name == "Y" && s >= 2) return 1;
        if (name.size() >= 2 && name[0] == 'X') {
            const int k = std::stoi(name.substr(1));
            if (k >= 1 && static_cast<std::size_t>(k) <= s) return k - 1;
        }
        fail("unknown variable " + name);
    }

    GenPoly primary() {
        skip();
        if (pos >= t.size()) fail("unexpected end of input");
        const char c = t[pos];
        if (c == '(') {
            ++pos;
            GenPoly g = expr();
            if (!peek(')')) fail("')' expected");
            ++pos;
            return g;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const long long v = integer();
            return constant(ctx.from_int(v % ctx.p()));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name(1, t[pos++]);
            while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) name += t[pos++];
            if (name == "w") return constant(ctx.generator());
            GenPoly g;
            Exps e(s, 0);
            e[axis_of(name)] = 1;
            g[e] = 1;
            return g;
        }
        fail(std::string("unexpected character '") + c + "'");
    }
    GenPoly factor() {
        GenPoly b = primary();
        if (peek('^')) {
            ++pos;
            b = power(b, integer());
        }
        return b;
    }
    GenPoly term() {
        GenPoly a = factor();
        while (true) {
            if (peek('*')) {
                ++pos;
                a = mul(a, factor());
            } else if (peek('/')) {
                ++pos;
                a = divide(a, factor());
            } else if (starts_factor()) {
                a = mul(a, factor());
            } else {
                return a;
            }
        }
    }
    GenPoly expr() {
        GenPoly a;
        bool neg = false;
        if (peek('-')) {
            ++pos;
            neg = true;
        } else if (peek('+')) {
            ++pos;
        }
        a = add(a, term(), neg);
        while (true) {
            if (peek('+')) {
                ++pos;
                a = add(a, term(), false);
            } else if (peek('-')) {
                ++pos;
                a = add(a, term(), true);
            } else {
                return a;
            }
        }
    }
};

}  // namespace

MultiPoly parse_poly(const FieldPtr& ctx, const std::vector<int>& dims, const std::string& text) {
    if (!ctx) throw std::invalid_argument("null field context");
    if (dims.empty()) throw std::invalid_argument("empty dims");
    Parser ps{*ctx, dims.size(), text};
    const GenPoly g = ps.expr();
    ps.skip();
    if (ps.pos != text.size()) ps.fail("trailing input");
    MultiPoly f(ctx, dims);
    for (const auto& [e, c] : g) {
        MultiIndex i(dims.size());
        for (std::size_t k = 0; k < dims.size(); ++k) i[k] = e[k] % dims[k];
        f.set(i, ctx->add(f.at(i), c));
    }
    return f;
}

std::string format_poly(const MultiPoly& f) {
    const auto& ctx = *f.ctx();
    std::ostringstream os;
    bool first = true;
    for (std::size_t lin = 0; lin < f.box().size(); ++lin) {
        const std::uint32_t c = f[lin];
        if (!c) continue;
        if (!first) os << " + ";
        first = false;
        std::string coef;
        if (c < static_cast<std::uint32_t>(ctx.p())) {
            coef = std::to_string(c);
        } else if (c != 1) {
            // discrete log against the generator
            std::uint32_t x = 1;
            std::uint64_t k = 0;
            while (x != c) {
                x = ctx.mul(x, ctx.generator());
                ++k;
            }
            coef = "w^" + std::to_string(k);
        } else {
            coef = "1";
        }
        const auto idx = f.box().coords(lin);
        std::string mono;
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (!idx[k]) continue;
            if (!mono.empty()) mono += "*";
            mono += (f.rank() == 1 ? std::string("X") : "X" + std::to_string(k + 1));
            if (idx[k] > 1) mono += "^" + std::to_string(idx[k]);
        }
        if (mono.empty()) os << coef;
        else if (coef == "1") os << mono;
        else os << coef << "*" << mono;
    }
    if (first) os << "0";
    return os.str();
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string body = text;
    const auto first = body.find_first_not_of(" \t"), last = body.find_last_not_of(" \t");
    if (first == std::string::npos) return out;
    body = body.substr(first, last - first + 1);
    if (body.size() >= 2 && ((body.front() == '{' && body.back() == '}') || (body.front() == '[' && body.back() == ']')))
        body = body.substr(1, body.size() - 2);
    if (body.find_first_not_of(" \t") == std::string::npos) return out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        try {
            out.push_back(std::stoi(item, &used));
        } catch (const std::exception&) {
            throw std::invalid_argument("integer list expected, got '" + text + "'");
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size()) throw std::invalid_argument("integer list expected, got '" + text + "'");
    }
    return out;
}

}  // namespace abelian

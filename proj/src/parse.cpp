#include "cwlin/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace cwlin {

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    explicit Lexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }

    std::string digits() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return s.substr(start, pos - start);
    }
};

class PolyParser {
public:
    PolyParser(const std::string& text, const RingCtx& ring, const MonomialOrder& ord)
        : lx_(text), ring_(ring), F_(ring.characteristic()), ord_(ord) {}

    Poly run() {
        Poly p = expr();
        if (!lx_.eof())
            throw parse_error("unexpected trailing input at '" + rest() + "'");
        return p;
    }

private:
    Lexer lx_;
    const RingCtx& ring_;
    CoeffField F_;
    const MonomialOrder& ord_;

    std::string rest() {
        return lx_.s.substr(lx_.pos, 12);
    }

    Poly expr() {
        Poly acc;
        bool neg = lx_.accept('-');
        if (!neg) lx_.accept('+');
        acc = term();
        if (neg) acc = poly_neg(acc, F_);
        for (;;) {
            if (lx_.accept('+'))
                acc = poly_add(acc, term(), F_, ord_);
            else if (lx_.accept('-'))
                acc = poly_sub(acc, term(), F_, ord_);
            else
                break;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (lx_.accept('*')) acc = poly_mul(acc, factor(), F_, ord_);
        return acc;
    }

    Poly factor() {
        Poly base = atom();
        if (lx_.accept('^')) {
            if (lx_.accept('-')) throw parse_error("negative exponent");
            std::string d = lx_.digits();
            if (d.empty()) throw parse_error("exponent expected after '^'");
            long e = std::stol(d);
            base = poly_pow(base, static_cast<int>(e), F_, ord_);
        }
        return base;
    }

    Poly atom() {
        char c = lx_.peek();
        if (c == '(') {
            lx_.accept('(');
            Poly p = expr();
            if (!lx_.accept(')')) throw parse_error("missing ')'");
            return p;
        }
        if (c == '-') {
            lx_.accept('-');
            return poly_neg(atom(), F_);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = lx_.digits();
            mpz_class n(num);
            if (lx_.accept('/')) {
                std::string den = lx_.digits();
                if (den.empty()) throw parse_error("denominator expected after '/'");
                mpz_class d(den);
                if (d == 0) throw parse_error("zero denominator");
                Coeff q(n, d);
                q.canonicalize();
                return poly_const(ring_, F_.reduce(q));
            }
            return poly_const(ring_, F_.reduce(Coeff(n)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = lx_.ident();
            int idx = ring_.index_of(name);
            if (idx < 0) throw parse_error("unknown variable '" + name + "'");
            return poly_var(ring_, idx);
        }
        throw parse_error(std::string("unexpected character '") + c + "'");
    }
};

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

} // namespace

Poly parse_poly(const std::string& text, const RingCtx& ring, const MonomialOrder& ord) {
    PolyParser p(text, ring, ord);
    Poly f = p.run();
    // Canonicalize: parenthesized arithmetic may leave merged-but-unsorted
    // term lists only if orders disagree; make() keeps the invariant tight.
    return poly_resort(f, CoeffField(ring.characteristic()), ord);
}

RingPtr parse_ring_line(const std::string& line) {
    std::string body = line;
    unsigned long chr = 0;
    if (auto semi = body.find(';'); semi != std::string::npos) {
        std::string opts = body.substr(semi + 1);
        body = body.substr(0, semi);
        auto eq = opts.find('=');
        std::string key = eq == std::string::npos ? opts : opts.substr(0, eq);
        key.erase(remove_if(key.begin(), key.end(), ::isspace), key.end());
        if (key != "char" || eq == std::string::npos)
            throw parse_error("ring options support only 'char=<p>'");
        chr = std::stoul(opts.substr(eq + 1));
    }
    std::vector<std::string> words = split_ws(body);
    if (words.empty() || words[0] != "ring")
        throw parse_error("ideal file must start with a 'ring ...' line");
    std::vector<std::string> names;
    int x_count = -1;
    for (size_t i = 1; i < words.size(); ++i) {
        if (words[i] == "|") {
            if (x_count >= 0) throw parse_error("more than one '|' in ring line");
            x_count = static_cast<int>(names.size());
        } else {
            names.push_back(words[i]);
        }
    }
    if (names.empty()) throw parse_error("ring line declares no variables");
    if (x_count < 0) x_count = static_cast<int>(names.size());
    try {
        return make_ring(std::move(names), x_count, chr);
    } catch (const input_error& e) {
        throw parse_error(e.what());
    }
}

IdealFile parse_ideal_text(const std::string& text, const MonomialOrder* ord) {
    std::istringstream in(text);
    std::string line;
    IdealFile out;
    MonomialOrder use;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
        if (trimmed.empty()) continue;
        if (!out.ring) {
            out.ring = parse_ring_line(trimmed);
            use = ord ? *ord : MonomialOrder::degrevlex(out.ring->nvars());
            continue;
        }
        Poly g = parse_poly(trimmed, *out.ring, use);
        if (!g.is_zero()) out.gens.push_back(std::move(g));
    }
    if (!out.ring) throw parse_error("no ring line found");
    return out;
}

IdealFile load_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open ideal file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_ideal_text(ss.str());
}

std::vector<Poly> parse_poly_list(const std::string& text, const RingCtx& ring,
                                  const MonomialOrder& ord) {
    std::vector<Poly> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ';')) {
        std::string t = cur;
        t.erase(0, t.find_first_not_of(" \t\r\n"));
        if (t.empty()) continue;
        out.push_back(parse_poly(cur, ring, ord));
    }
    return out;
}

} // namespace cwlin

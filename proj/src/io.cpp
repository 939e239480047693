#include "fconn/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fconn {

namespace {

using nlohmann::json;

class SeriesParser {
public:
    explicit SeriesParser(const std::string& s) : s_(s) {}

    Series parse_all() {
        Series v = sum();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        if (prec_) v = v.with_precision(*prec_);
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorKind::Parse, "bad series literal '" + s_ + "': " + why);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool starts(const std::string& w) {
        skip();
        return s_.compare(pos_, w.size(), w) == 0;
    }

    Series sum() {
        Series v;
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        while (true) {
            auto t = term();
            if (t) v += neg ? -*t : *t;
            if (eat('+'))
                neg = false;
            else if (eat('-'))
                neg = true;
            else
                break;
        }
        return v;
    }

    // nullopt for an O(...) term
    std::optional<Series> term() {
        if (starts("O(")) {
            pos_ += 2;
            if (!eat('z')) fail("expected z inside O()");
            Q e = eat('^') ? exponent() : Q(1);
            if (!eat(')')) fail("expected ')'");
            if (prec_) fail("two O() terms");
            prec_ = e;
            return std::nullopt;
        }
        Series v = factor();
        while (eat('*')) v = v * factor();
        return v;
    }

    Series factor() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        if (eat('(')) {
            Series v = sum();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (starts("zeta_")) {
            pos_ += 5;
            long m = integer();
            long k = eat('^') ? signed_integer() : 1;
            if (m <= 0) fail("zeta order must be positive");
            return Series::constant(Cyc::zeta(static_cast<int>(m), k));
        }
        if (eat('z')) {
            Q e = eat('^') ? exponent() : Q(1);
            return Series::monomial(Cyc(1L), e);
        }
        return Series::constant(Cyc(rational()));
    }

    Q exponent() {
        if (eat('(')) {
            bool neg = eat('-');
            Q q = rational();
            if (!eat(')')) fail("expected ')' after exponent");
            return neg ? Q(-q) : q;
        }
        return Q(signed_integer());
    }

    long signed_integer() {
        bool neg = eat('-');
        long v = integer();
        return neg ? -v : v;
    }

    long integer() {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        try {
            return std::stol(s_.substr(start, pos_ - start));
        } catch (...) {
            fail("integer out of range");
        }
    }

    Q rational() {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            size_t d = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (d == pos_) fail("expected a denominator");
        }
        return parse_rational(s_.substr(start, pos_ - start));
    }

    std::string s_;
    size_t pos_ = 0;
    std::optional<Q> prec_;
};

Series with_ram(const Series& v, int ram, const std::string& src) {
    Series out(ram);
    auto fits = [&](const Q& q) {
        if (!is_integer(Q(q * ram)))
            throw Error(ErrorKind::Parse, "exponent " + to_string(q) + " in '" + src + "' is not a multiple of 1/" +
                                              std::to_string(ram));
    };
    for (const auto& [k, c] : v.terms()) {
        Q q = make_q(k, v.ram());
        fits(q);
        out.set_term(q, c);
    }
    if (auto p = v.prec()) {
        fits(*p);
        out = out.with_precision(*p);
    }
    return out;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
    }
}

template <class F>
auto guarded(F f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("bad document: ") + e.what());
    }
}

std::string rational_field(const json& v) {
    if (v.is_number_integer()) return std::to_string(v.get<long>());
    return v.get<std::string>();
}

}  // namespace

Cyc parse_cyclotomic(const std::string& s) {
    Series v = SeriesParser(s).parse_all();
    if (!v.exact()) throw Error(ErrorKind::Parse, "'" + s + "' is not a constant");
    for (const auto& [k, c] : v.terms())
        if (k != 0) throw Error(ErrorKind::Parse, "'" + s + "' is not a constant");
    return v.coeff(Q(0));
}

Series parse_series(const std::string& s, int ram) {
    if (ram <= 0) throw Error(ErrorKind::Parse, "ramification must be positive");
    return with_ram(SeriesParser(s).parse_all(), ram, s);
}

Connection parse_connection(const std::string& text) {
    json doc = parse_json(text);
    return guarded([&] {
        int n = doc.at("n").get<int>();
        if (n <= 0) throw Error(ErrorKind::Parse, "n must be positive");
        int ram = doc.value("ramification", 1);
        if (ram <= 0) throw Error(ErrorKind::Parse, "ramification must be positive");
        LoopMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = Series(ram);
        for (const auto& e : doc.at("entries")) {
            if (!e.is_array() || e.size() != 3) throw Error(ErrorKind::Parse, "entries are [row, col, series]");
            int i = e[0].get<int>(), j = e[1].get<int>();
            if (i < 1 || i > n || j < 1 || j > n) throw Error(ErrorKind::Parse, "entry index out of range");
            m(i - 1, j - 1) += parse_series(e[2].get<std::string>(), ram);
        }
        if (doc.contains("precision")) {
            Q p = parse_rational(rational_field(doc["precision"]));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m(i, j) = m(i, j).with_precision(p);
        }
        return m;
    });
}

std::string connection_json(const LoopMatrix& m) {
    json doc;
    doc["n"] = m.n();
    doc["ramification"] = m.ram();
    doc["entries"] = json::array();
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j)
            if (!m(i, j).is_zero() || !m(i, j).exact()) doc["entries"].push_back({i + 1, j + 1, m(i, j).str()});
    return doc.dump(2);
}

Connection load_connection(const std::string& path) { return parse_connection(read_text_file(path)); }

FormalType parse_formal_type(const std::string& text) {
    json doc = parse_json(text);
    return guarded([&] {
        std::vector<int> parts = doc.at("partition").get<std::vector<int>>();
        for (int p : parts)
            if (p <= 0) throw Error(ErrorKind::Parse, "partition parts must be positive");
        if (parts.empty()) throw Error(ErrorKind::Parse, "empty partition");
        FormalType a{TorusData::make(WeylClass::from_partition(parts)), parse_rational(rational_field(doc.at("depth"))), {}};
        for (const auto& e : doc.at("coefficients")) {
            if (!e.is_array() || e.size() != 3) throw Error(ErrorKind::Parse, "coefficients are [block, grade, value]");
            int b = e[0].get<int>() - 1;
            if (b < 0 || b >= a.torus.blocks()) throw Error(ErrorKind::Parse, "block index out of range");
            Q g = parse_rational(rational_field(e[1]));
            Q m = g * a.torus.size(b);
            if (!is_integer(m)) throw Error(ErrorKind::Parse, "grade " + to_string(g) + " does not fit block " + std::to_string(b + 1));
            a.set(b, m.get_num().get_si(), a.coeff(b, m.get_num().get_si()) + parse_cyclotomic(rational_field(e[2])));
        }
        return a;
    });
}

std::string formal_type_json(const FormalType& a) {
    json doc;
    doc["partition"] = a.torus.sizes;
    doc["depth"] = to_string(a.depth);
    doc["coefficients"] = json::array();
    for (const auto& [key, c] : a.coeffs)
        doc["coefficients"].push_back({key.first + 1, to_string(make_q(key.second, a.torus.size(key.first))), c.str()});
    return doc.dump(2);
}

FormalType load_formal_type(const std::string& path) { return parse_formal_type(read_text_file(path)); }

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace fconn

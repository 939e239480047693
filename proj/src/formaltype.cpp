#include "fconn/formaltype.hpp"

#include <deque>
#include <set>
#include <sstream>

namespace fconn {

Cyc FormalType::coeff(int block, long m) const {
    auto it = coeffs.find({block, m});
    return it == coeffs.end() ? Cyc() : it->second;
}

void FormalType::set(int block, long m, const Cyc& c) {
    if (c.is_zero())
        coeffs.erase({block, m});
    else
        coeffs[{block, m}] = c;
}

Cyc FormalType::at_grade(int block, const Q& g) const {
    Q m = g * torus.size(block);
    if (!is_integer(m)) return Cyc();
    return coeff(block, m.get_num().get_si());
}

LoopMatrix FormalType::matrix() const {
    LoopMatrix out(torus.n());
    for (const auto& [key, c] : coeffs) out += torus.uniformizer_power(key.first, key.second).scaled(c);
    return out;
}

FormalType FormalType::from_s_matrix(const TorusData& t, const Q& depth, const LoopMatrix& m) {
    FormalType a{t, depth, {}};
    SElement s = pi_s_element(t, m);
    for (int j = 0; j < t.blocks(); ++j)
        for (const auto& [k, c] : s.coeffs[static_cast<size_t>(j)]) {
            Q g = make_q(k, t.size(j));
            if (g >= -depth && g <= 0) a.set(j, k, c);
        }
    return a;
}

std::string FormalType::str() const {
    std::ostringstream os;
    os << "type " << torus.cls.str() << " depth " << to_string(depth);
    for (const auto& [key, c] : coeffs)
        os << " | block " << key.first + 1 << " grade " << to_string(make_q(key.second, torus.size(key.first))) << ": "
           << c.str();
    return os.str();
}

Validation validate(const FormalType& a, const std::optional<ApartmentPoint>& x) {
    Validation v;
    const TorusData& t = a.torus;
    if (a.depth < 0) {
        v.reason = "negative depth";
        return v;
    }
    for (const auto& [key, c] : a.coeffs) {
        if (key.first < 0 || key.first >= t.blocks()) {
            v.reason = "block index out of range";
            return v;
        }
        Q g = make_q(key.second, t.size(key.first));
        if (g < -a.depth || g > 0) {
            v.reason = "coefficient at grade " + to_string(g) + " lies outside [-depth, 0]";
            return v;
        }
    }
    if (a.depth > 0) {
        LoopMatrix lead(t.n());
        for (const auto& [key, c] : a.coeffs)
            if (make_q(key.second, t.size(key.first)) == -a.depth)
                lead += t.uniformizer_power(key.first, key.second).scaled(c);
        if (lead.is_zero()) {
            v.reason = "leading coefficient vanishes";
            return v;
        }
        auto reg = is_regular_stratum(Stratum{t.base_point, a.depth, lead});
        if (!reg) {
            v.reason = "leading term is not regular: its centralizer is not a Cartan of dimension " + std::to_string(t.n());
            return v;
        }
        if (!(reg->cls == t.cls)) {
            v.reason = "leading term centralizer has type " + reg->cls.str();
            return v;
        }
        v.valid = true;
        return v;
    }
    if (!t.is_split()) {
        v.reason = "depth-zero formal types need the split torus";
        return v;
    }
    int n = t.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Cyc d = a.coeff(i, 0) - a.coeff(j, 0);
            if (d.is_rational() && is_integer(d.rational())) {
                v.reason = "residues " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " differ by an integer";
                return v;
            }
        }
    if (x) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (a.coeff(i, 0) - a.coeff(j, 0) == Cyc(x->root_value(i, j))) v.hyperplanes.emplace_back(i, j);
    }
    v.valid = true;
    return v;
}

Connection realize(const FormalType& a) {
    Validation v = validate(a);
    if (!v.valid) throw Error(ErrorKind::InvalidFormalType, "invalid formal type: " + v.reason);
    return a.matrix();
}

RelWeylElt RelWeylElt::identity(const TorusData& t) {
    return {{}, LoopMatrix::identity(t.n()), LoopMatrix::identity(t.n())};
}

RelWeylElt RelWeylElt::twist(const TorusData& t, int j, long power) {
    RelWeylElt r = identity(t);
    r.word.push_back({WeylLetter::Kind::Twist, j, j, power});
    int e = t.size(j), o = t.offset(j);
    for (int a = 0; a < e; ++a) {
        r.matrix(o + a, o + a) = Series::constant(Cyc::zeta(e, a * power));
        r.matrix_inv(o + a, o + a) = Series::constant(Cyc::zeta(e, -a * power));
    }
    return r;
}

RelWeylElt RelWeylElt::uniformizer(const TorusData& t, int j, long power) {
    RelWeylElt r{{{WeylLetter::Kind::Uniformizer, j, j, power}}, LoopMatrix(t.n()), LoopMatrix(t.n())};
    for (int k = 0; k < t.blocks(); ++k) {
        r.matrix += t.uniformizer_power(k, k == j ? power : 0);
        r.matrix_inv += t.uniformizer_power(k, k == j ? -power : 0);
    }
    return r;
}

RelWeylElt RelWeylElt::swap(const TorusData& t, int j, int k) {
    if (t.size(j) != t.size(k)) throw Error(ErrorKind::Mismatch, "only blocks of equal size can be swapped");
    RelWeylElt r{{{WeylLetter::Kind::Swap, j, k, 1}}, LoopMatrix(t.n()), LoopMatrix(t.n())};
    std::vector<int> target(static_cast<size_t>(t.n()));
    for (int i = 0; i < t.n(); ++i) target[static_cast<size_t>(i)] = i;
    for (int a = 0; a < t.size(j); ++a) {
        target[static_cast<size_t>(t.offset(j) + a)] = t.offset(k) + a;
        target[static_cast<size_t>(t.offset(k) + a)] = t.offset(j) + a;
    }
    for (int i = 0; i < t.n(); ++i) {
        int ti = target[static_cast<size_t>(i)];
        r.matrix(ti, i) = Series::constant(Cyc(1L));
        r.matrix_inv(i, ti) = Series::constant(Cyc(1L));
    }
    return r;
}

RelWeylElt operator*(const RelWeylElt& a, const RelWeylElt& b) {
    RelWeylElt r{a.word, a.matrix * b.matrix, b.matrix_inv * a.matrix_inv};
    r.word.insert(r.word.end(), b.word.begin(), b.word.end());
    return r;
}

std::string RelWeylElt::str(const TorusData& t) const {
    if (word.empty()) return "identity";
    bool single = t.blocks() == 1;
    std::string s;
    for (const auto& l : word) {
        if (!s.empty()) s += " ";
        std::string idx = single ? "" : std::to_string(l.a + 1);
        switch (l.kind) {
            case WeylLetter::Kind::Twist:
                s += "d" + idx;
                break;
            case WeylLetter::Kind::Uniformizer:
                s += "w" + idx;
                break;
            case WeylLetter::Kind::Swap:
                s += "s" + std::to_string(l.a + 1) + "," + std::to_string(l.b + 1);
                break;
        }
        if (l.kind != WeylLetter::Kind::Swap && l.power != 1) s += "^" + std::to_string(l.power);
    }
    return s;
}

RelWeylElt parse_word(const TorusData& t, const std::string& raw) {
    RelWeylElt r = RelWeylElt::identity(t);
    std::string s;
    for (char ch : raw) s.push_back(ch == '*' ? ' ' : ch);
    std::istringstream is(s);
    std::string tok;
    auto bad = [&]() { return Error(ErrorKind::Parse, "bad word token '" + tok + "'"); };
    while (is >> tok) {
        if (tok == "identity") continue;
        char kind = tok[0];
        std::string rest = tok.substr(1);
        long power = 1;
        auto caret = rest.find('^');
        if (caret != std::string::npos) {
            try {
                power = std::stol(rest.substr(caret + 1));
            } catch (...) {
                throw bad();
            }
            rest = rest.substr(0, caret);
        }
        auto block = [&](const std::string& b) {
            if (b.empty()) {
                if (t.blocks() != 1) throw bad();
                return 0;
            }
            int j = 0;
            try {
                j = std::stoi(b) - 1;
            } catch (...) {
                throw bad();
            }
            if (j < 0 || j >= t.blocks()) throw bad();
            return j;
        };
        if (kind == 'd') {
            r = r * RelWeylElt::twist(t, block(rest), power);
        } else if (kind == 'w') {
            r = r * RelWeylElt::uniformizer(t, block(rest), power);
        } else if (kind == 's') {
            auto comma = rest.find(',');
            if (comma == std::string::npos) throw bad();
            r = r * RelWeylElt::swap(t, block(rest.substr(0, comma)), block(rest.substr(comma + 1)));
        } else {
            throw bad();
        }
    }
    return r;
}

FormalType rho_act(const RelWeylElt& n, const FormalType& a) {
    const TorusData& t = a.torus;
    LoopMatrix m = n.matrix * a.matrix() * n.matrix_inv;
    if (!(pi_s(t, m) == m)) throw Error(ErrorKind::NotNormalizer, "element does not normalize the torus");
    LoopMatrix shift = pi_s(t, n.matrix.tau() * n.matrix_inv);
    return FormalType::from_s_matrix(t, a.depth, m - shift);
}

namespace {

// Words in the block swaps, one per reachable block permutation.
std::vector<RelWeylElt> swap_words(const TorusData& t) {
    std::vector<RelWeylElt> out;
    std::set<std::vector<int>> seen;
    std::vector<int> id(static_cast<size_t>(t.blocks()));
    for (int j = 0; j < t.blocks(); ++j) id[static_cast<size_t>(j)] = j;
    std::deque<std::pair<std::vector<int>, RelWeylElt>> queue;
    queue.emplace_back(id, RelWeylElt::identity(t));
    seen.insert(id);
    while (!queue.empty()) {
        auto [perm, w] = queue.front();
        queue.pop_front();
        out.push_back(w);
        for (int j = 0; j < t.blocks(); ++j)
            for (int k = j + 1; k < t.blocks(); ++k) {
                if (t.size(j) != t.size(k)) continue;
                std::vector<int> next = perm;
                for (auto& v : next) v = v == j ? k : v == k ? j : v;
                if (!seen.insert(next).second) continue;
                queue.emplace_back(next, RelWeylElt::swap(t, j, k) * w);
            }
    }
    return out;
}

bool same_negative_part(const FormalType& a, const FormalType& b) {
    auto neg = [](const FormalType& f) {
        std::map<std::pair<int, long>, Cyc> r;
        for (const auto& [k, c] : f.coeffs)
            if (k.second < 0) r.emplace(k, c);
        return r;
    };
    return neg(a) == neg(b);
}

}  // namespace

std::optional<RelWeylElt> orbit_equivalent(const FormalType& a1, const FormalType& a2) {
    if (!(a1.torus.cls == a2.torus.cls) || a1.depth != a2.depth) return std::nullopt;
    const TorusData& t = a1.torus;
    int b = t.blocks();
    for (const RelWeylElt& sw : swap_words(t)) {
        std::vector<long> tw(static_cast<size_t>(b), 0);
        while (true) {
            RelWeylElt cand = sw;
            for (int j = 0; j < b; ++j)
                if (tw[static_cast<size_t>(j)] != 0) cand = cand * RelWeylElt::twist(t, j, tw[static_cast<size_t>(j)]);
            FormalType moved = rho_act(cand, a1);
            if (same_negative_part(moved, a2)) {
                RelWeylElt trans = RelWeylElt::identity(t);
                bool ok = true;
                for (int j = 0; j < b && ok; ++j) {
                    Cyc d = moved.coeff(j, 0) - a2.coeff(j, 0);
                    if (!d.is_rational()) {
                        ok = false;
                        break;
                    }
                    Q k = d.rational() * t.size(j);
                    if (!is_integer(k)) {
                        ok = false;
                        break;
                    }
                    if (k != 0) trans = trans * RelWeylElt::uniformizer(t, j, k.get_num().get_si());
                }
                if (ok) {
                    RelWeylElt w = trans * cand;
                    if (rho_act(w, a1) == a2) return w;
                }
            }
            int j = 0;
            while (j < b && ++tw[static_cast<size_t>(j)] == t.size(j)) tw[static_cast<size_t>(j++)] = 0;
            if (j == b) break;
        }
    }
    return std::nullopt;
}

}  // namespace fconn

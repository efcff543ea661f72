#include "beadcalc/laurent.hpp"

#include <cctype>
#include <sstream>

namespace beadcalc {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw Error("empty rational literal");
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw Error("bad rational literal '" + s + "'");
    }
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

LaurentPoly::LaurentPoly(const Rational& c) {
    set(0, c);
}

LaurentPoly::LaurentPoly(long c) {
    set(0, Rational(c));
}

LaurentPoly LaurentPoly::term(const Rational& c, long k) {
    LaurentPoly p;
    p.set(k, c);
    return p;
}

LaurentPoly LaurentPoly::t(long k) {
    return term(Rational(1), k);
}

void LaurentPoly::set(long k, const Rational& c) {
    if (c == 0)
        terms_.erase(k);
    else
        terms_[k] = c;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool LaurentPoly::is_unit_monomial() const {
    return terms_.size() == 1 && terms_.begin()->second == 1;
}

bool LaurentPoly::is_integral() const {
    for (const auto& [k, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

Rational LaurentPoly::coeff(long k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

long LaurentPoly::monomial_exponent() const {
    if (!is_monomial()) throw Error("not a monomial: " + str());
    return terms_.begin()->first;
}

Rational LaurentPoly::monomial_coeff() const {
    if (!is_monomial()) throw Error("not a monomial: " + str());
    return terms_.begin()->second;
}

LaurentPoly LaurentPoly::involute() const {
    LaurentPoly out;
    for (const auto& [k, c] : terms_) out.terms_[-k] = c;
    return out;
}

Rational LaurentPoly::augment() const {
    Rational s(0);
    for (const auto& [k, c] : terms_) s += c;
    return s;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [k, c] : terms_) out.terms_[k] = -c;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    return *this += -o;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    std::map<long, Rational> out;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            Rational& slot = out[ka + kb];
            slot += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    terms_ = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

namespace {

// Tokenizing parser for the signed-sum-of-monomials syntax.
struct LaurentParser {
    const std::string& s;
    size_t i = 0;

    explicit LaurentParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) i++;
    }

    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            i++;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw Error("Laurent parse error at offset " + std::to_string(i) + " in '" + s + "': " + why);
    }

    long parse_int() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) i++;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) i++;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            fail("expected integer");
        try {
            return std::stol(s.substr(start, i - start));
        } catch (const std::exception&) {
            fail("integer out of range");
        }
    }

    // unsigned rational literal: digits [ '/' digits ]
    Rational parse_coeff() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) i++;
        if (i == start) fail("expected coefficient");
        std::string num = s.substr(start, i - start);
        if (eat('/')) {
            skip_ws();
            size_t dstart = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) i++;
            if (i == dstart) fail("expected denominator");
            std::string den = s.substr(dstart, i - dstart);
            if (Rational(den) == 0) fail("zero denominator");
            return Rational(num + "/" + den);
        }
        return Rational(num);
    }

    // term := coeff [ '*' tpow ] | tpow
    LaurentPoly parse_term() {
        skip_ws();
        if (i >= s.size()) fail("expected term");
        if (s[i] == 't') {
            i++;
            long k = eat('^') ? parse_int() : 1;
            return LaurentPoly::t(k);
        }
        Rational c = parse_coeff();
        skip_ws();
        if (eat('*')) {
            skip_ws();
            if (i >= s.size() || s[i] != 't') fail("expected t after '*'");
            i++;
            long k = eat('^') ? parse_int() : 1;
            return LaurentPoly::term(c, k);
        }
        return LaurentPoly(c);
    }

    LaurentPoly parse_sum() {
        LaurentPoly out;
        skip_ws();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        while (true) {
            LaurentPoly t = parse_term();
            out += neg ? -t : t;
            skip_ws();
            if (eat('+'))
                neg = false;
            else if (eat('-'))
                neg = true;
            else
                break;
        }
        skip_ws();
        if (i != s.size()) fail("trailing input");
        return out;
    }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
    return LaurentParser(text).parse_sum();
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (k == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "t";
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

LaurentMatrix::LaurentMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) throw Error("matrix dimensions must be positive");
    a_.resize(static_cast<size_t>(rows) * cols);
}

LaurentMatrix LaurentMatrix::identity(int n) {
    LaurentMatrix m(n, n);
    for (int i = 0; i < n; i++) m.at(i, i) = LaurentPoly::one();
    return m;
}

LaurentPoly& LaurentMatrix::at(int i, int j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw Error("matrix index out of range");
    return a_[static_cast<size_t>(i) * cols_ + j];
}

const LaurentPoly& LaurentMatrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw Error("matrix index out of range");
    return a_[static_cast<size_t>(i) * cols_ + j];
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix dimension mismatch in product");
    LaurentMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; i++)
        for (int k = 0; k < cols_; k++) {
            const LaurentPoly& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; j++) {
                const LaurentPoly& bkj = o.at(k, j);
                if (bkj.is_zero()) continue;
                out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

LaurentMatrix LaurentMatrix::operator-() const {
    LaurentMatrix out(rows_, cols_);
    for (int i = 0; i < rows_; i++)
        for (int j = 0; j < cols_; j++) out.at(i, j) = -at(i, j);
    return out;
}

bool LaurentMatrix::operator==(const LaurentMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); i++)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

LaurentMatrix LaurentMatrix::involute_transpose() const {
    LaurentMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; i++)
        for (int j = 0; j < cols_; j++) out.at(j, i) = at(i, j).involute();
    return out;
}

bool LaurentMatrix::is_symmetric_under_involution() const {
    return rows_ == cols_ && *this == involute_transpose();
}

LaurentMatrix block_negative_inverse(const LaurentMatrix& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0)
        throw Error("block_negative_inverse: matrix must be square of even size");
    int n = m.rows() / 2;
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            if (!m.at(i, j).is_zero())
                throw Error("block_negative_inverse: top-left block must be zero");
            LaurentPoly want = (i == j) ? LaurentPoly::one() : LaurentPoly::zero();
            if (m.at(i, n + j) != want)
                throw Error("block_negative_inverse: top-right block must be the identity");
            if (m.at(n + i, j) != want)
                throw Error("block_negative_inverse: bottom-left block must be the identity");
        }
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            if (m.at(n + i, n + j) != m.at(n + j, n + i).involute())
                throw Error("block_negative_inverse: B block must be symmetric under involution");

    LaurentMatrix out(2 * n, 2 * n);
    for (int i = 0; i < n; i++) {
        out.at(i, n + i) = LaurentPoly(-1);
        out.at(n + i, i) = LaurentPoly(-1);
        for (int j = 0; j < n; j++) out.at(i, j) = m.at(n + i, n + j);
    }
    return out;
}

}  // namespace beadcalc

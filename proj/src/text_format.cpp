#include "arithcap/text_format.hpp"

#include <cctype>
#include <map>

namespace arithcap {

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    RatPoly parse() {
        std::map<std::size_t, mpq_class> terms;
        skip_ws();
        if (at_end()) throw SyntaxError(pos_, "empty polynomial");
        bool first = true;
        while (true) {
            skip_ws();
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw SyntaxError(pos_, "expected '+' or '-'");
            }
            first = false;
            auto [deg, coeff] = term();
            terms[deg] += sign * coeff;
            skip_ws();
            if (at_end()) break;
        }
        std::size_t top = terms.empty() ? 0 : terms.rbegin()->first;
        std::vector<mpq_class> v(top + 1, 0);
        for (auto& [d, c] : terms) v[d] = c;
        return RatPoly(std::move(v));
    }

    mpq_class parse_number_only() {
        skip_ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        mpq_class c = coefficient();
        skip_ws();
        if (!at_end()) throw SyntaxError(pos_, "trailing characters");
        return sign * c;
    }

private:
    std::pair<std::size_t, mpq_class> term() {
        if (std::isalpha(static_cast<unsigned char>(peek())) != 0) return {monomial(), mpq_class(1)};
        mpq_class c = coefficient();
        skip_ws();
        if (peek() == '*') {
            ++pos_;
            skip_ws();
            if (std::isalpha(static_cast<unsigned char>(peek())) == 0) throw SyntaxError(pos_, "expected variable");
            return {monomial(), c};
        }
        return {0, c};
    }

    std::size_t monomial() {
        char v = peek();
        if (var_ == 0) var_ = v;
        else if (v != var_) throw SyntaxError(pos_, std::string("unexpected variable '") + v + "'");
        ++pos_;
        skip_ws();
        if (peek() != '^') return 1;
        ++pos_;
        skip_ws();
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())) != 0) ++pos_;
        if (start == pos_) throw SyntaxError(pos_, "expected exponent");
        return std::stoul(std::string(text_.substr(start, pos_ - start)));
    }

    // integer, decimal or a/b
    mpq_class coefficient() {
        mpq_class num = decimal();
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            mpq_class den = decimal();
            if (den == 0) throw SyntaxError(at, "zero denominator");
            num /= den;
        }
        return num;
    }

    mpq_class decimal() {
        std::size_t start = pos_;
        std::string digits;
        long scale = 0;
        while (std::isdigit(static_cast<unsigned char>(peek())) != 0) digits += text_[pos_++];
        if (peek() == '.') {
            ++pos_;
            while (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
                digits += text_[pos_++];
                --scale;
            }
        }
        if (digits.empty()) throw SyntaxError(start, "expected number");
        if (peek() == 'e' || peek() == 'E') {
            std::size_t save = pos_;
            ++pos_;
            int esign = 1;
            if (peek() == '+' || peek() == '-') {
                esign = peek() == '-' ? -1 : 1;
                ++pos_;
            }
            std::size_t es = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek())) != 0) ++pos_;
            if (es == pos_) {
                pos_ = save; // a variable named e, not an exponent
            } else {
                scale += esign * std::stol(std::string(text_.substr(es, pos_ - es)));
            }
        }
        mpz_class n(digits, 10);
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
        mpq_class out = scale < 0 ? mpq_class(n, p) : mpq_class(n * p);
        out.canonicalize();
        return out;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    bool at_end() const { return pos_ >= text_.size(); }

    std::string_view text_;
    std::size_t pos_ = 0;
    char var_ = 0;
};

template <class C>
std::string poly_to_string(const Poly<C>& p, char var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (long i = p.degree(); i >= 0; --i) {
        mpq_class c(p[static_cast<std::size_t>(i)]);
        if (c == 0) continue;
        bool neg = sgn(c) < 0;
        mpq_class a = abs(c);
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        std::string mono;
        if (i == 1) mono = std::string(1, var);
        else if (i > 1) mono = std::string(1, var) + "^" + std::to_string(i);
        if (mono.empty()) out += a.get_str();
        else if (a == 1) out += mono;
        else out += a.get_str() + "*" + mono;
    }
    return out;
}

} // namespace

RatPoly parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

mpq_class parse_rational(std::string_view text) { return PolyParser(text).parse_number_only(); }

std::string to_string(const RatPoly& p, char var) { return poly_to_string(p, var); }
std::string to_string(const IntPoly& p, char var) { return poly_to_string(p, var); }
std::string to_string(const mpq_class& q) { return q.get_str(); }

nlohmann::json series_to_json(const RatSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(c.get_str());
    return {{"coeffs", coeffs}, {"order", s.order()}};
}

nlohmann::json series_to_json(const IntSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(c.get_str());
    return {{"coeffs", coeffs}, {"order", s.order()}};
}

RatSeries series_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j.contains("order"))
        throw Error(ErrorCode::InvalidArgument, "series JSON needs 'coeffs' and 'order'");
    std::vector<mpq_class> v;
    for (const auto& c : j.at("coeffs")) v.push_back(c.is_string() ? parse_rational(c.get<std::string>()) : mpq_class(c.get<long>()));
    auto order = j.at("order").get<std::size_t>();
    if (v.size() > order + 1) throw Error(ErrorCode::InvalidArgument, "more coefficients than order + 1");
    return RatSeries(std::move(v), order);
}

} // namespace arithcap

#include "mzvlab/expression.hpp"

#include "mzvlab/index_algebra.hpp"
#include "mzvlab/series.hpp"

namespace mzvlab {

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool try_consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw parse_error(std::string("expected '") + c + "'", pos);
        ++pos;
    }
    std::string identifier() {
        skip_ws();
        const size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                text[pos] == '_'))
            ++pos;
        if (pos == start) throw parse_error("expected a name", pos);
        return text.substr(start, pos - start);
    }
    long integer() {
        skip_ws();
        const size_t start = pos;
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw parse_error("expected an integer", pos);
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1000000000L) throw parse_error("integer too large", start);
            ++pos;
        }
        return neg ? -v : v;
    }
    Rational rational() {
        const long num = integer();
        if (try_consume('/')) {
            const size_t dpos = pos;
            const long den = integer();
            if (den == 0) throw parse_error("zero denominator", dpos);
            return Rational(num, den);
        }
        return Rational(num);
    }
    std::vector<int> int_list() {
        std::vector<int> out;
        out.push_back(static_cast<int>(integer()));
        while (try_consume(',')) out.push_back(static_cast<int>(integer()));
        return out;
    }
};

const std::pair<const char*, ExprKind> kKinds[] = {
    {"zetastar", ExprKind::zetastar}, {"zeta", ExprKind::zeta},
    {"azetastar", ExprKind::azetastar}, {"azeta", ExprKind::azeta},
    {"li", ExprKind::li},             {"ky", ExprKind::ky},
    {"zbstar", ExprKind::zbstar},     {"hz", ExprKind::hz},
    {"dual", ExprKind::dual},         {"stuffle", ExprKind::stuffle},
    {"starexpand", ExprKind::starexpand},
};

std::string kind_name(ExprKind k) {
    for (const auto& [name, kind] : kKinds)
        if (kind == k) return name;
    return "?";
}

}  // namespace

Expression parse_expression(const std::string& text) {
    Cursor c{text};
    const size_t name_pos = c.pos;
    const std::string name = c.identifier();
    Expression e;
    bool found = false;
    for (const auto& [kname, kind] : kKinds)
        if (name == kname) {
            e.kind = kind;
            found = true;
            break;
        }
    if (!found) throw parse_error("unknown expression kind '" + name + "'", name_pos);
    c.expect('(');
    e.first = c.int_list();
    switch (e.kind) {
        case ExprKind::li: {
            c.expect(';');
            e.point = c.rational();
            break;
        }
        case ExprKind::hz: {
            c.expect(';');
            const size_t apos = c.pos;
            if (c.identifier() != "a") throw parse_error("expected 'a='", apos);
            c.expect('=');
            e.point = c.rational();
            break;
        }
        case ExprKind::ky:
        case ExprKind::stuffle: {
            c.expect('|');
            e.second = c.int_list();
            break;
        }
        default:
            break;
    }
    c.expect(')');
    if (!c.at_end()) throw parse_error("trailing input", c.pos);
    return e;
}

std::string Expression::canonical() const {
    std::string s = kind_name(kind);
    s += '(';
    for (size_t i = 0; i < first.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(first[i]);
    }
    if (kind == ExprKind::ky || kind == ExprKind::stuffle) {
        s += '|';
        for (size_t i = 0; i < second.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(second[i]);
        }
    }
    if (kind == ExprKind::li) {
        s += ';';
        s += point.str();
    }
    if (kind == ExprKind::hz) {
        s += ";a=";
        s += point.str();
    }
    s += ')';
    return s;
}

EvalOutput evaluate_expression(const Expression& e, const PrecisionConfig& cfg) {
    EvalOutput out;
    switch (e.kind) {
        case ExprKind::zeta:
            out.value = zeta_value(Index{e.first}, cfg);
            return out;
        case ExprKind::zetastar:
            out.value = mzsv_value(Index{e.first}, cfg);
            return out;
        case ExprKind::azeta:
            out.value = amzv(SignedIndex{e.first}, cfg);
            return out;
        case ExprKind::azetastar:
            out.value = amzsv(SignedIndex{e.first}, cfg);
            return out;
        case ExprKind::li:
            out.value = mpl(Index{e.first}, to_hpreal(e.point), cfg);
            return out;
        case ExprKind::ky:
            out.value = kyzv(Index{e.first}, Index{e.second}, cfg);
            return out;
        case ExprKind::zbstar:
            out.value = mzbsv(Index{e.first}, cfg);
            return out;
        case ExprKind::hz:
            out.value = hurwitz_mzv(Index{e.first}, to_hpreal(e.point), cfg);
            return out;
        case ExprKind::dual:
            out.is_value = false;
            out.text = hoffman_dual(Index{e.first}).str();
            return out;
        case ExprKind::stuffle:
            out.is_value = false;
            out.text = stuffle(Index{e.first}, Index{e.second}).str();
            return out;
        case ExprKind::starexpand:
            out.is_value = false;
            out.text = star_expand(Index{e.first}).str();
            return out;
    }
    throw domain_error("unhandled expression kind");
}

}  // namespace mzvlab

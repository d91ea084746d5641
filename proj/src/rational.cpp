#include "rp2/rational.hpp"

#include <cctype>

namespace rp2 {

namespace {

bool is_integer_string(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw DomainError("empty rational string");

    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (!is_integer_string(num) || !is_integer_string(den))
            throw DomainError("malformed rational: " + text);
        Rat q{Int(num), Int(den)};
        if (q.get_den() == 0) throw DomainError("zero denominator: " + text);
        q.canonicalize();
        return q;
    }

    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string head = text.substr(0, dot);
        std::string frac = text.substr(dot + 1);
        if (head.empty() || head == "+" || head == "-") head += "0";
        if (!is_integer_string(head)) throw DomainError("malformed decimal: " + text);
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw DomainError("malformed decimal: " + text);
        Int scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Int whole(head);
        Int frac_part = frac.empty() ? Int(0) : Int(frac);
        bool negative = text[0] == '-';
        Int numer = abs(whole) * scale + frac_part;
        if (negative) numer = -numer;
        Rat q(numer, scale);
        q.canonicalize();
        return q;
    }

    if (!is_integer_string(text)) throw DomainError("malformed rational: " + text);
    return Rat(Int(text));
}

std::string format_rational(const Rat& value) {
    Rat q = value;
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace rp2

#include "octavic/numeric.hpp"

#include <cctype>

namespace octavic {

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw input_error("empty rational literal");
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos && dot != std::string::npos)
        throw input_error("rational literal mixes '/' and '.': " + s);
    try {
        if (slash != std::string::npos) {
            Int num(s.substr(0, slash));
            Int den(s.substr(slash + 1));
            if (den == 0) throw input_error("zero denominator: " + s);
            Rat q(num, den);
            q.canonicalize();
            return q;
        }
        if (dot != std::string::npos) {
            std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
            for (char c : tail)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw input_error("bad decimal literal: " + s);
            bool neg = !head.empty() && head[0] == '-';
            if (!head.empty() && (head[0] == '+' || head[0] == '-')) head = head.substr(1);
            if (head.empty()) head = "0";
            Int ip(head), fp(tail.empty() ? "0" : tail);
            Int den = int_pow(Int(10), tail.size());
            Int num = ip * den + fp;
            if (neg) num = -num;
            Rat q(num, den);
            q.canonicalize();
            return q;
        }
        return Rat(Int(s));
    } catch (const std::invalid_argument&) {
        throw input_error("bad rational literal: " + s);
    }
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rat_to_decimal(const Rat& q, int digits) {
    Int num = q.get_num(), den = q.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    Int scaled = num * int_pow(Int(10), digits) / den;
    std::string d = scaled.get_str();
    if (static_cast<int>(d.size()) <= digits) d.insert(0, digits + 1 - d.size(), '0');
    d.insert(d.size() - digits, ".");
    if (neg) d.insert(0, "-");
    return d;
}

}  // namespace octavic

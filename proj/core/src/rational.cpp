#include "shlat/rational.hpp"

namespace shlat {

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t pos = 0;
    if (text[pos] == '+' || text[pos] == '-') ++pos;
    if (pos >= text.size()) return std::nullopt;
    bool seen_slash = false;
    for (std::size_t i = pos; i < text.size(); ++i) {
        char c = text[i];
        if (c == '/') {
            if (seen_slash || i == pos || i + 1 == text.size()) return std::nullopt;
            seen_slash = true;
        } else if (c < '0' || c > '9') {
            return std::nullopt;  // rejects decimals and anything else
        }
    }
    Rational r;
    if (r.set_str(text, 10) != 0) return std::nullopt;
    if (r.get_den() == 0) return std::nullopt;
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    return r.get_str(10);
}

}  // namespace shlat

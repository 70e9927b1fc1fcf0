#include "lsv/rational.hpp"

#include <cctype>

namespace lsv {

Rational rat_from_string(const std::string& text) {
    if (text.empty()) throw Error("empty rational literal");
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') i = 1;
    if (i == text.size()) throw Error("bad rational literal: " + text);
    bool seen_slash = false;
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] == '/') {
            if (seen_slash || j + 1 == text.size() || j == i)
                throw Error("bad rational literal: " + text);
            seen_slash = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw Error("bad rational literal: " + text);
    }
    Rational r;
    if (r.set_str(text, 10) != 0) throw Error("bad rational literal: " + text);
    if (r.get_den() == 0) throw Error("rational with zero denominator: " + text);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace lsv

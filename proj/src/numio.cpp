#include "lcrit/numio.hpp"

#include <cctype>
#include <cstdlib>

namespace lcrit {

namespace {

// Reads a signed decimal number starting at text[pos].  Also accepts a bare
// sign (or nothing) immediately followed by 'i', which callers treat as +/-1.
// Returns false if no number and no bare sign is present.
bool read_coefficient(const std::string& text, size_t& pos, double& value,
                      bool& bare_sign) {
    bare_sign = false;
    size_t start = pos;
    size_t p = pos;
    if (p < text.size() && (text[p] == '+' || text[p] == '-')) ++p;
    if (p < text.size() && (text[p] == 'i' || text[p] == 'I')) {
        value = (text[start] == '-') ? -1.0 : 1.0;
        pos = p;  // caller consumes the 'i'
        bare_sign = true;
        return true;
    }
    const char* begin = text.c_str() + start;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin) return false;
    pos = start + static_cast<size_t>(end - begin);
    value = v;
    return true;
}

}  // namespace

bool parse_complex(const std::string& text, Cplx& out) {
    if (text.empty()) return false;
    for (char c : text)
        if (std::isspace(static_cast<unsigned char>(c))) return false;

    size_t pos = 0;
    double first = 0.0;
    bool bare = false;
    if (!read_coefficient(text, pos, first, bare)) return false;

    if (pos < text.size() && (text[pos] == 'i' || text[pos] == 'I')) {
        ++pos;
        if (pos != text.size()) return false;
        out = Cplx(0.0, first);  // pure imaginary: "bi", "i", "-i"
        return true;
    }
    if (bare) return false;  // bare sign not followed by 'i'
    if (pos == text.size()) {
        out = Cplx(first, 0.0);  // pure real
        return true;
    }
    if (text[pos] != '+' && text[pos] != '-') return false;

    double second = 0.0;
    if (!read_coefficient(text, pos, second, bare)) return false;
    if (pos >= text.size() || (text[pos] != 'i' && text[pos] != 'I'))
        return false;
    ++pos;
    if (pos != text.size()) return false;
    out = Cplx(first, second);
    return true;
}

}  // namespace lcrit

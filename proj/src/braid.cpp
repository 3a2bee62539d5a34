#include "burau/braid.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

#include "burau/error.hpp"

namespace burau {

BraidWord::BraidWord(int strands) : strands_(strands) {
    if (strands != 3 && strands != 4) throw std::invalid_argument("strand count must be 3 or 4");
}

BraidWord::BraidWord(int strands, const std::vector<Letter>& letters) : BraidWord(strands) {
    for (const auto& l : letters) push(l);
}

BraidWord BraidWord::generator(int gen, std::int64_t exp, int strands) {
    return BraidWord(strands, {{gen, exp}});
}

void BraidWord::push(Letter l) {
    if (l.gen < 1 || l.gen >= strands_) {
        throw std::invalid_argument("generator s" + std::to_string(l.gen) + " out of range for " +
                                    std::to_string(strands_) + " strands");
    }
    if (l.exp == 0) return;
    if (!letters_.empty() && letters_.back().gen == l.gen) {
        letters_.back().exp += l.exp;
        if (letters_.back().exp == 0) letters_.pop_back();
        return;
    }
    letters_.push_back(l);
}

std::int64_t BraidWord::exponent_sum() const {
    std::int64_t s = 0;
    for (const auto& l : letters_) s += l.exp;
    return s;
}

std::int64_t BraidWord::length() const {
    std::int64_t s = 0;
    for (const auto& l : letters_) s += l.exp < 0 ? -l.exp : l.exp;
    return s;
}

BraidWord BraidWord::operator*(const BraidWord& other) const {
    BraidWord w = *this;
    w *= other;
    return w;
}

BraidWord& BraidWord::operator*=(const BraidWord& other) {
    if (other.strands_ != strands_) throw std::invalid_argument("strand count mismatch");
    for (const auto& l : other.letters_) push(l);
    return *this;
}

BraidWord BraidWord::inverse() const {
    BraidWord w(strands_);
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.push({it->gen, -it->exp});
    return w;
}

BraidWord BraidWord::pow(std::int64_t e) const {
    const BraidWord base = e < 0 ? inverse() : *this;
    BraidWord w(strands_);
    for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) w *= base;
    return w;
}

std::string BraidWord::to_string() const {
    std::string out;
    for (const auto& l : letters_) {
        if (!out.empty()) out += ' ';
        out += "s" + std::to_string(l.gen);
        if (l.exp != 1) out += "^" + std::to_string(l.exp);
    }
    return out;
}

BraidWord conjugate(const BraidWord& gamma, const BraidWord& tau) { return gamma * tau * gamma.inverse(); }

BraidWord parse_braid(std::string_view text, int strands) {
    std::vector<Letter> letters;
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (!letters.empty()) {
            // letters must be separated by whitespace
            if (!std::isspace(static_cast<unsigned char>(text[i - 1]))) throw ParseError("expected whitespace", i);
        }
        if (text[i] != 's') throw ParseError("expected 's'", i);
        ++i;
        if (i >= text.size() || text[i] < '1' || text[i] > '3') throw ParseError("expected generator index 1-3", i);
        const int gen = text[i] - '0';
        if (gen >= strands) {
            throw ParseError("generator s" + std::to_string(gen) + " out of range for " + std::to_string(strands) +
                                 " strands",
                             i);
        }
        ++i;
        std::int64_t exp = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            const std::size_t start = i;
            bool neg = false;
            if (i < text.size() && text[i] == '-') {
                neg = true;
                ++i;
            }
            const std::size_t digits_start = i;
            std::int64_t v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                const int d = text[i] - '0';
                if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10) throw ParseError("exponent overflow", start);
                v = v * 10 + d;
                ++i;
            }
            if (i == digits_start) throw ParseError("expected exponent digits", i);
            if (v == 0) throw ParseError("zero exponent", start);
            exp = neg ? -v : v;
        }
        if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) throw ParseError("unexpected character", i);
        letters.push_back({gen, exp});
        skip_ws();
    }
    return BraidWord(strands, letters);
}

BraidWord tau1() { return BraidWord(4, {{1, 1}, {2, 1}, {1, 1}}).pow(2); }

BraidWord tau3() { return BraidWord(4, {{3, 1}, {2, 1}, {3, 1}}).pow(2); }

BraidWord delta() { return BraidWord(4, {{1, 1}, {2, 1}, {3, 1}, {1, 1}, {2, 1}, {1, 1}}); }

BraidWord delta_sq() { return delta() * delta(); }

BraidWord sigma_block(std::int64_t a, std::int64_t b, std::int64_t c) {
    return BraidWord(4, {{1, a}, {2, b}, {3, c}});
}

BraidWord embed_b3(const BraidWord& w) {
    if (w.strands() == 4) return w;
    return BraidWord(4, w.letters());
}

std::string expand_named_tokens(std::string_view text) {
    std::string out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            out += text[i++];
            continue;
        }
        std::size_t end = i;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        const std::string_view token = text.substr(i, end - i);
        const std::size_t caret = token.find('^');
        const std::string_view name = token.substr(0, caret);
        BraidWord base(4);
        bool named = true;
        if (name == "tau1") base = tau1();
        else if (name == "tau3") base = tau3();
        else if (name == "delta") base = delta();
        else if (name == "delta_sq") base = delta_sq();
        else named = false;
        if (!named) {
            out += token;
        } else {
            std::int64_t e = 1;
            if (caret != std::string_view::npos) {
                const std::string exp_text(token.substr(caret + 1));
                try {
                    std::size_t used = 0;
                    e = std::stoll(exp_text, &used);
                    if (used != exp_text.size()) throw std::invalid_argument("trailing");
                } catch (const std::exception&) {
                    throw ParseError("bad exponent on named braid '" + std::string(token) + "'", i + caret + 1);
                }
                if (e == 0) throw ParseError("zero exponent", i + caret + 1);
            }
            out += base.pow(e).to_string();
        }
        i = end;
    }
    return out;
}

}  // namespace burau

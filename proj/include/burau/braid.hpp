#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace burau {

// One run-length letter sigma_gen^exp.
struct Letter {
    int gen;            // 1, 2 or 3
    std::int64_t exp;   // nonzero
    friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word in B3 or B4.
//
// Composition convention: braids act on column vectors, rho(ab) = rho(a)rho(b),
// so in the word ab the factor b acts first. Reading a word left to right
// therefore lists the letters from last-applied to first-applied.
class BraidWord {
public:
    explicit BraidWord(int strands = 4);
    // Validates generator range and reduces freely (merging and cancelling
    // adjacent runs of the same generator, dropping zero exponents).
    BraidWord(int strands, const std::vector<Letter>& letters);

    static BraidWord generator(int gen, std::int64_t exp = 1, int strands = 4);

    int strands() const noexcept { return strands_; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    bool is_identity() const noexcept { return letters_.empty(); }
    std::size_t size() const noexcept { return letters_.size(); }

    // Sum of exponents (the abelianization).
    std::int64_t exponent_sum() const;
    // Total number of unit letters, sum of |exp|.
    std::int64_t length() const;

    // this * other; other acts first.
    BraidWord operator*(const BraidWord& other) const;
    BraidWord& operator*=(const BraidWord& other);
    BraidWord inverse() const;
    BraidWord pow(std::int64_t e) const;

    // "s1^-1 s3^2"; the identity prints as "".
    std::string to_string() const;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    void push(Letter l);

    int strands_;
    std::vector<Letter> letters_;
};

// gamma * tau * gamma^-1
BraidWord conjugate(const BraidWord& gamma, const BraidWord& tau);

// Grammar: word := ws? (letter (ws letter)*)? ws?
//          letter := "s" index ("^" ["-"] digit+)?
// Throws ParseError (with byte offset) on syntax errors, out-of-range
// generators and zero exponents.
BraidWord parse_braid(std::string_view text, int strands = 4);

// Replaces the named tokens tau1, tau3, delta, delta_sq (optionally with
// "^k") by their letter spelling, leaving the rest untouched.
std::string expand_named_tokens(std::string_view text);

// (s1 s2 s1)^2
BraidWord tau1();
// (s3 s2 s3)^2
BraidWord tau3();
// Garside element s1 s2 s3 s1 s2 s1.
BraidWord delta();
BraidWord delta_sq();
// s1^a s2^b s3^c
BraidWord sigma_block(std::int64_t a, std::int64_t b, std::int64_t c);

// Letterwise inclusion B3 -> B4.
BraidWord embed_b3(const BraidWord& w);

}  // namespace burau

#pragma once

// Parser for family strings:
//
//   spec  := name [ '(' [ arg { ',' arg } ] ')' ]
//   arg   := integer | spec
//
// e.g. "petersen()", "lollipop(4,3)", "strong(complete(3),complete(4))".
// Whitespace between tokens is ignored.

#include <cctype>
#include <map>
#include <string>
#include <string_view>

#include "fraclocdim/families.hpp"

namespace fraclocdim {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

inline const std::map<std::string, FamilyKind, std::less<>>& family_names() {
    static const std::map<std::string, FamilyKind, std::less<>> names = {
        {"path", FamilyKind::path},
        {"cycle", FamilyKind::cycle},
        {"complete", FamilyKind::complete},
        {"multipartite", FamilyKind::complete_multipartite},
        {"complete_multipartite", FamilyKind::complete_multipartite},
        {"star", FamilyKind::star},
        {"fan", FamilyKind::fan},
        {"lollipop", FamilyKind::lollipop},
        {"hypercube", FamilyKind::hypercube},
        {"petersen", FamilyKind::petersen},
        {"join", FamilyKind::join},
        {"strong", FamilyKind::strong_product},
        {"strong_product", FamilyKind::strong_product},
        {"cartesian", FamilyKind::cartesian_product},
        {"cartesian_product", FamilyKind::cartesian_product},
        {"lex", FamilyKind::generalized_lexicographic},
        {"generalized_lexicographic", FamilyKind::generalized_lexicographic},
    };
    return names;
}

class FamilyParser {
public:
    explicit FamilyParser(std::string_view text) : s_(text) {}

    FamilySpec parse() {
        FamilySpec spec = parse_spec();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return spec;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    FamilySpec parse_spec() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        if (start == pos_) throw ParseError("expected a family name", start);
        const std::string name(s_.substr(start, pos_ - start));
        const auto it = family_names().find(name);
        if (it == family_names().end()) throw ParseError("unknown family '" + name + "'", start);
        FamilySpec spec;
        spec.kind = it->second;
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != '(') return spec;
        ++pos_;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == ')') {
            ++pos_;
            return spec;
        }
        for (;;) {
            skip_ws();
            if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-')) {
                spec.params.push_back(parse_int());
            } else {
                spec.operands.push_back(parse_spec());
            }
            skip_ws();
            if (pos_ >= s_.size()) throw ParseError("unterminated argument list", pos_);
            if (s_[pos_] == ')') {
                ++pos_;
                break;
            }
            if (s_[pos_] != ',') throw ParseError(std::string("expected ',' or ')' but found '") + s_[pos_] + "'", pos_);
            ++pos_;
        }
        if (!spec.params.empty() && !spec.operands.empty())
            throw ParseError("cannot mix integer and graph arguments", start);
        return spec;
    }

    long long parse_int() {
        const std::size_t start = pos_;
        if (s_[pos_] == '-') ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const std::string digits(s_.substr(start, pos_ - start));
        if (digits == "-" || digits.size() > 12) throw ParseError("bad integer '" + digits + "'", start);
        return std::stoll(digits);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses and validates; unknown names and malformed input raise ParseError,
/// out-of-range parameters raise FamilyError.
inline FamilySpec parse_family_string(std::string_view text) {
    FamilySpec spec = detail::FamilyParser(text).parse();
    validate_family(spec);
    return spec;
}

inline Graph make_family(std::string_view text) { return make_family(parse_family_string(text)); }

}  // namespace fraclocdim

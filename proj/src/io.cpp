#include "aklab/io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace aklab {

namespace {

std::string strip(const std::string& line) {
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    std::size_t end = line.find_last_not_of(" \t\r");
    return line.substr(begin, end - begin + 1);
}

bool skippable(const std::string& line) {
    return line.empty() || line[0] == '#';
}

long parse_int_token(const std::string& token, int line_no) {
    std::size_t digits = token.size();
    if (digits == 0 || token.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("expected an integer, got \"" + token + "\" at line " +
                             std::to_string(line_no),
                         line_no);
    }
    if (digits > 9) {
        throw ParseError("integer too large at line " + std::to_string(line_no),
                         line_no);
    }
    return std::stol(token);
}

std::uint32_t parse_set_line(const std::string& line, int n, int line_no) {
    if (line == ".") return 0;
    std::istringstream tokens(line);
    std::string token;
    std::uint32_t bits = 0;
    long previous = 0;
    while (tokens >> token) {
        if (token == ".") {
            throw ParseError("\".\" must stand alone at line " +
                                 std::to_string(line_no),
                             line_no);
        }
        long e = parse_int_token(token, line_no);
        if (e < 1 || e > n) {
            throw ParseError("element " + std::to_string(e) + " exceeds n=" +
                                 std::to_string(n) + " at line " +
                                 std::to_string(line_no),
                             line_no);
        }
        if (e <= previous) {
            throw ParseError("elements must be strictly ascending at line " +
                                 std::to_string(line_no),
                             line_no);
        }
        bits |= 1u << (e - 1);
        previous = e;
    }
    return bits;
}

}

SetFamily parse_family(std::istream& in) {
    std::string raw;
    int line_no = 0;
    int n = -1;
    std::vector<std::uint32_t> masks;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip(raw);
        if (skippable(line)) continue;
        if (n < 0) {
            std::istringstream tokens(line);
            std::string keyword, value, extra;
            tokens >> keyword >> value;
            if (keyword != "n" || value.empty() || (tokens >> extra)) {
                throw ParseError("expected header \"n <int>\" at line " +
                                     std::to_string(line_no),
                                 line_no);
            }
            long parsed = parse_int_token(value, line_no);
            if (parsed > max_ground_size) {
                throw ParseError("n=" + std::to_string(parsed) +
                                     " exceeds the supported ground set size " +
                                     std::to_string(max_ground_size) +
                                     " at line " + std::to_string(line_no),
                                 line_no);
            }
            n = static_cast<int>(parsed);
            continue;
        }
        masks.push_back(parse_set_line(line, n, line_no));
    }
    if (n < 0) {
        throw ParseError("missing header \"n <int>\"", line_no == 0 ? 1 : line_no);
    }
    return SetFamily(std::move(masks), n);
}

SetFamily parse_family_text(const std::string& text) {
    std::istringstream in(text);
    return parse_family(in);
}

std::string format_family(const SetFamily& family) {
    std::vector<std::uint32_t> masks = family.masks();
    std::sort(masks.begin(), masks.end(), lex_less);
    std::ostringstream out;
    out << "n " << family.n() << "\n";
    for (std::uint32_t m : masks) {
        out << format_subset(Subset(m, family.n())) << "\n";
    }
    return out.str();
}

Subset parse_subset_text(const std::string& text, int n) {
    check_ground_size(n);
    std::string line = strip(text);
    if (line.empty()) {
        throw ParseError("empty set text; use \".\" for the empty set", 1);
    }
    return Subset(parse_set_line(line, n, 1), n);
}

std::string format_subset(const Subset& s) {
    if (s.bits == 0) return ".";
    std::string out;
    for (int e : s.elements()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(e);
    }
    return out;
}

}

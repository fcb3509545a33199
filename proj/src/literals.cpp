// Parsers for the small literals accepted on the command line.

#include "pcent/cover.hpp"
#include "pcent/detail/parser.hpp"
#include "pcent/transforms.hpp"

namespace pcent {

namespace {

void finish(detail::Cursor& cur) {
    if (!cur.at_end()) cur.fail("unexpected '" + cur.peek().text + "' after literal");
}

}  // namespace

RegionSet parse_region(const std::string& text) {
    detail::Cursor cur(detail::tokenize(text, 1), 1);
    std::vector<Interval> parts;
    do {
        if (!parts.empty()) cur.next();
        cur.expect_punct('[');
        const int col = cur.peek().column;
        double a = cur.constant();
        cur.expect_punct(',');
        double b = cur.constant();
        cur.expect_punct(']');
        if (a > b) throw ParseError("region part has lo > hi", 1, col);
        parts.push_back(Interval::closed(a, b));
    } while (cur.is_punct('|'));
    finish(cur);
    return RegionSet(std::move(parts));
}

Cover parse_cover(const std::string& text, const Interval& domain) {
    detail::Cursor cur(detail::tokenize(text, 1), 1);
    Cover cover;
    cover.label = "C";
    cur.expect_punct('{');
    while (!cur.is_punct('}')) {
        if (!cover.elements.empty()) cur.expect_punct(',');
        std::vector<Interval> parts;
        do {
            if (!parts.empty()) cur.next();
            const int col = cur.peek().column;
            cur.expect_punct('(');
            double a = cur.constant();
            cur.expect_punct(',');
            double b = cur.constant();
            cur.expect_punct(')');
            if (!(a < b)) throw ParseError("cover interval needs a < b", 1, col);
            // Clip to the domain; reaching a domain end includes it.
            bool lo_open = a > domain.lo(), hi_open = b < domain.hi();
            a = std::max(a, domain.lo());
            b = std::min(b, domain.hi());
            if (a < b) parts.emplace_back(a, b, lo_open, hi_open);
        } while (cur.is_punct('|'));
        OpenSet e(std::move(parts));
        if (e.empty()) throw ParseError("cover element misses the domain", 1, cur.peek().column);
        cover.elements.push_back(std::move(e));
    }
    cur.expect_punct('}');
    finish(cur);
    if (cover.elements.empty()) throw ParseError("empty cover", 1, 1);
    return cover;
}

PlHomeo parse_plhomeo(const std::string& text) {
    detail::Cursor cur(detail::tokenize(text, 1), 1);
    std::vector<std::pair<double, double>> nodes;
    cur.expect_punct('[');
    while (!cur.is_punct(']')) {
        if (!nodes.empty()) cur.expect_punct(',');
        cur.expect_punct('(');
        double x = cur.constant();
        cur.expect_punct(',');
        double y = cur.constant();
        cur.expect_punct(')');
        nodes.emplace_back(x, y);
    }
    cur.expect_punct(']');
    finish(cur);
    return PlHomeo(std::move(nodes));
}

}  // namespace pcent

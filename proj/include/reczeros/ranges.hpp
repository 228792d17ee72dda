#ifndef RECZEROS_RANGES_HPP
#define RECZEROS_RANGES_HPP

// Parameter lists on the command line: "7", "1..10" (inclusive) or a comma
// list mixing both, e.g. "1,3,5..7".

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace reczeros {

namespace detail {

inline unsigned parse_unsigned(const std::string& s)
{
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
        throw std::invalid_argument("not a non-negative integer: '" + s + "'");
    return static_cast<unsigned>(std::stoul(s));
}

} // namespace detail

/// Sorted, duplicate-free values. Throws std::invalid_argument on bad syntax.
inline std::vector<unsigned> parse_range(const std::string& text)
{
    std::vector<unsigned> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (auto dots = item.find(".."); dots != std::string::npos) {
            unsigned lo = detail::parse_unsigned(item.substr(0, dots));
            unsigned hi = detail::parse_unsigned(item.substr(dots + 2));
            if (lo > hi)
                throw std::invalid_argument("empty range '" + item + "'");
            if (hi - lo > 100000)
                throw std::invalid_argument("range too long '" + item + "'");
            for (unsigned v = lo; v <= hi; ++v)
                out.push_back(v);
        } else {
            out.push_back(detail::parse_unsigned(item));
        }
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace reczeros

#endif // RECZEROS_RANGES_HPP

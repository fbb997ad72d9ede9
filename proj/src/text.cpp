#include "lchoose/text.hpp"
#include "lchoose/graph.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

namespace lchoose::text {

void for_each_line(std::string_view text,
                   const std::function<void(std::size_t, const std::vector<std::string>&)>& fn)
{
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = text.substr(pos, end - pos);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::istringstream in{std::string(line)};
        std::vector<std::string> tokens;
        for (std::string tok; in >> tok;)
            tokens.push_back(tok);
        if (!tokens.empty())
            fn(line_no, tokens);
        if (end == text.size())
            break;
        pos = end + 1;
    }
}

std::uint64_t parse_uint(const std::string& token, std::size_t line, const char* what)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line, std::string("invalid ") + what + " '" + token + "'");
    return value;
}

std::int64_t parse_int(const std::string& token, std::size_t line, const char* what)
{
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line, std::string("invalid ") + what + " '" + token + "'");
    return value;
}

double parse_double(const std::string& token, std::size_t line, const char* what)
{
    double value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line, std::string("invalid ") + what + " '" + token + "'");
    return value;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& body)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << body;
}

std::string format_double(double x)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

}  // namespace lchoose::text

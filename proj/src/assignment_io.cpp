#include "lchoose/assignment.hpp"
#include "lchoose/text.hpp"

#include <algorithm>
#include <sstream>

namespace lchoose {

ListAssignment parse_assignment(std::string_view text)
{
    ListAssignment L;
    bool have_lambda = false, have_groups = false;
    std::size_t declared_groups = 0;
    std::map<std::size_t, std::vector<Colour>> lists;
    std::size_t last_line = 0;

    text::for_each_line(text, [&](std::size_t line, const std::vector<std::string>& tok) {
        last_line = line;
        if (tok[0] == "lambda") {
            if (tok.size() != 2 || have_lambda)
                throw ParseError(line, "expected a single 'lambda <parts>' line");
            std::string csv = tok[1];
            std::size_t start = 0;
            while (true) {
                auto comma = csv.find(',', start);
                auto piece = csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
                auto part = text::parse_uint(piece, line, "part");
                if (part < 1)
                    throw ParseError(line, "parts must be positive");
                L.group_parts.push_back(static_cast<int>(part));
                if (comma == std::string::npos)
                    break;
                start = comma + 1;
            }
            have_lambda = true;
        } else if (tok[0] == "groups") {
            if (tok.size() != 2 || !have_lambda)
                throw ParseError(line, "expected 'groups <q>' after the lambda line");
            declared_groups = text::parse_uint(tok[1], line, "group count");
            if (declared_groups != L.group_parts.size())
                throw ParseError(line, "groups " + std::to_string(declared_groups) + " but lambda has " +
                                           std::to_string(L.group_parts.size()) + " parts");
            have_groups = true;
        } else if (tok[0] == "colour") {
            if (tok.size() != 3 || !have_groups)
                throw ParseError(line, "expected 'colour <id> <group>' after the groups line");
            auto id = text::parse_int(tok[1], line, "colour id");
            auto group = text::parse_uint(tok[2], line, "group index");
            if (group < 1 || group > declared_groups)
                throw ParseError(line, "group index " + tok[2] + " out of range 1.." + std::to_string(declared_groups));
            if (!L.group_of.emplace(id, group - 1).second)
                throw ParseError(line, "colour " + tok[1] + " declared twice");
        } else if (tok[0] == "list") {
            if (tok.size() < 2 || !have_groups)
                throw ParseError(line, "expected 'list <v> <colours...>' after the groups line");
            auto v = text::parse_uint(tok[1], line, "vertex");
            if (v < 1)
                throw ParseError(line, "vertex index must be >= 1");
            std::vector<Colour> colours;
            for (std::size_t i = 2; i < tok.size(); ++i)
                colours.push_back(text::parse_int(tok[i], line, "colour id"));
            std::sort(colours.begin(), colours.end());
            if (!lists.emplace(v - 1, std::move(colours)).second)
                throw ParseError(line, "vertex " + tok[1] + " has two lists");
        } else {
            throw ParseError(line, "unknown directive '" + tok[0] + "'");
        }
    });

    if (!have_lambda || !have_groups)
        throw ParseError(last_line, "missing lambda or groups line");
    for (std::size_t v = 0; v < lists.size(); ++v)
        if (!lists.count(v))
            throw ParseError(last_line, "no list for vertex " + std::to_string(v + 1));
    for (auto& [v, colours] : lists)
        L.lists.push_back(std::move(colours));
    return L;
}

std::string serialize_assignment(const ListAssignment& L)
{
    std::ostringstream out;
    out << "lambda ";
    for (std::size_t i = 0; i < L.group_parts.size(); ++i)
        out << (i ? "," : "") << L.group_parts[i];
    out << "\ngroups " << L.group_parts.size() << '\n';
    for (const auto& [colour, group] : L.group_of)
        out << "colour " << colour << ' ' << group + 1 << '\n';
    for (std::size_t v = 0; v < L.lists.size(); ++v) {
        auto list = L.lists[v];
        std::sort(list.begin(), list.end());
        out << "list " << v + 1;
        for (auto c : list)
            out << ' ' << c;
        out << '\n';
    }
    return out.str();
}

}  // namespace lchoose

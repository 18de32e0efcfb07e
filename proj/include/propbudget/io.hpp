#pragma once

#include <charconv>
#include <cstddef>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "propbudget/error.hpp"
#include "propbudget/model.hpp"

namespace propbudget {

// Line-oriented instance format:
//
//   # comment
//   [meta]
//   name = ex1
//   items = 3          (optional, checked)
//   voters = 4         (optional, checked)
//   limit = 3
//   [items]
//   c1, first item, 2  (id, display name, raw cost; name may be omitted)
//   [ballots]
//   1, c1              (voter id, then approved item ids; may be empty)
//
// Costs and the limit are kept as the decimal strings found in the file and
// normalized only when a model is built.

struct InstanceFile {
    struct Item {
        std::string id;
        std::string name;
        std::string rawCost;
    };
    struct Ballot {
        std::string voterId;
        std::vector<std::string> items;
    };

    std::string name;
    std::string rawLimit;
    std::vector<Item> items;
    std::vector<Ballot> ballots;
};

namespace detail {

inline std::string_view trim(std::string_view s)
{
    auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline std::vector<std::string> split_fields(std::string_view line)
{
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        auto comma = line.find(',', pos);
        out.emplace_back(trim(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& msg)
{
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg);
}

inline std::optional<double> parse_number(std::string_view s)
{
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

inline std::optional<std::size_t> parse_count(std::string_view s)
{
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

inline std::string format_number(double v)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc{} ? std::string(buf, ptr) : std::to_string(v);
}

} // namespace detail

inline InstanceFile parse_instance_file(std::string_view text)
{
    enum class Section { None, Meta, Items, Ballots };
    InstanceFile file;
    Section section = Section::None;
    std::optional<std::size_t> declaredItems, declaredVoters;
    std::set<std::string> itemIds, voterIds;
    bool sawLimit = false;

    std::size_t lineNo = 0, pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        auto raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineNo;

        auto line = detail::trim(raw);
        if (line.empty() || line.front() == '#') continue;

        if (line.front() == '[') {
            if (line == "[meta]") section = Section::Meta;
            else if (line == "[items]") section = Section::Items;
            else if (line == "[ballots]") section = Section::Ballots;
            else detail::parse_fail(lineNo, "unknown section " + std::string(line));
            continue;
        }

        switch (section) {
        case Section::None: detail::parse_fail(lineNo, "content before the first section");
        case Section::Meta: {
            auto eq = line.find('=');
            if (eq == std::string_view::npos) detail::parse_fail(lineNo, "expected 'key = value'");
            auto key = std::string(detail::trim(line.substr(0, eq)));
            auto value = std::string(detail::trim(line.substr(eq + 1)));
            if (key == "name") {
                file.name = value;
            } else if (key == "limit") {
                if (!detail::parse_number(value)) detail::parse_fail(lineNo, "limit is not a number");
                file.rawLimit = value;
                sawLimit = true;
            } else if (key == "items" || key == "voters") {
                auto count = detail::parse_count(value);
                if (!count) detail::parse_fail(lineNo, key + " is not a count");
                (key == "items" ? declaredItems : declaredVoters) = count;
            } else {
                detail::parse_fail(lineNo, "unknown meta key '" + key + "'");
            }
            break;
        }
        case Section::Items: {
            auto fields = detail::split_fields(line);
            if (fields.size() != 2 && fields.size() != 3) detail::parse_fail(lineNo, "expected 'id, name, cost'");
            InstanceFile::Item item;
            item.id = fields[0];
            item.name = fields.size() == 3 ? fields[1] : fields[0];
            item.rawCost = fields.back();
            if (item.id.empty()) detail::parse_fail(lineNo, "empty item id");
            if (!detail::parse_number(item.rawCost)) detail::parse_fail(lineNo, "cost is not a number");
            if (!itemIds.insert(item.id).second)
                throw Error(ErrorKind::DuplicateItem, "line " + std::to_string(lineNo) + ": item '" + item.id +
                                                          "' declared twice");
            file.items.push_back(std::move(item));
            break;
        }
        case Section::Ballots: {
            auto fields = detail::split_fields(line);
            InstanceFile::Ballot ballot;
            ballot.voterId = fields[0];
            if (ballot.voterId.empty()) detail::parse_fail(lineNo, "empty voter id");
            if (!voterIds.insert(ballot.voterId).second)
                detail::parse_fail(lineNo, "voter '" + ballot.voterId + "' listed twice");
            for (std::size_t k = 1; k < fields.size(); ++k) {
                if (fields[k].empty()) {
                    if (fields.size() == 2) break;
                    detail::parse_fail(lineNo, "empty item reference");
                }
                if (!itemIds.count(fields[k]))
                    throw Error(ErrorKind::UnknownItem, "line " + std::to_string(lineNo) + ": unknown item '" +
                                                            fields[k] + "'");
                ballot.items.push_back(fields[k]);
            }
            file.ballots.push_back(std::move(ballot));
            break;
        }
        }
    }

    if (!sawLimit) throw Error(ErrorKind::ParseError, "missing 'limit' in [meta]");
    if (declaredItems && *declaredItems != file.items.size())
        throw Error(ErrorKind::ParseError, "[meta] declares " + std::to_string(*declaredItems) + " items, found " +
                                               std::to_string(file.items.size()));
    if (declaredVoters && *declaredVoters != file.ballots.size())
        throw Error(ErrorKind::ParseError, "[meta] declares " + std::to_string(*declaredVoters) + " voters, found " +
                                               std::to_string(file.ballots.size()));
    return file;
}

/// Canonical text: fixed section order, all meta keys, ballot items in item order.
inline std::string serialize(const InstanceFile& file)
{
    std::ostringstream out;
    out << "[meta]\n";
    if (!file.name.empty()) out << "name = " << file.name << "\n";
    out << "items = " << file.items.size() << "\n";
    out << "voters = " << file.ballots.size() << "\n";
    out << "limit = " << file.rawLimit << "\n";
    out << "[items]\n";
    for (const auto& item : file.items) out << item.id << ", " << item.name << ", " << item.rawCost << "\n";
    out << "[ballots]\n";
    for (const auto& ballot : file.ballots) {
        out << ballot.voterId;
        std::set<std::size_t> indices;
        for (const auto& id : ballot.items)
            for (std::size_t c = 0; c < file.items.size(); ++c)
                if (file.items[c].id == id) indices.insert(c);
        for (auto c : indices) out << ", " << file.items[c].id;
        out << "\n";
    }
    return out.str();
}

struct Election {
    Instance instance;
    Profile profile;
};

inline Election to_election(const InstanceFile& file)
{
    std::vector<RawItem> items;
    for (const auto& item : file.items) items.push_back({item.id, *detail::parse_number(item.rawCost)});
    Instance inst = normalize(items, *detail::parse_number(file.rawLimit));

    std::vector<std::vector<std::size_t>> ballots;
    std::vector<std::string> labels;
    for (const auto& ballot : file.ballots) {
        std::vector<std::size_t> approved;
        for (const auto& id : ballot.items) {
            auto c = inst.find(id);
            if (!c) throw Error(ErrorKind::UnknownItem, "unknown item '" + id + "'");
            approved.push_back(*c);
        }
        ballots.push_back(std::move(approved));
        labels.push_back(ballot.voterId);
    }
    Profile profile(inst, ballots, std::move(labels));
    return {std::move(inst), std::move(profile)};
}

inline Election parse_instance(std::string_view text) { return to_election(parse_instance_file(text)); }

/// File image of an election; costs are written in normalized units.
inline InstanceFile to_instance_file(const Instance& inst, const Profile& profile, std::string name = {},
                                     const std::vector<double>& rawCosts = {}, std::optional<double> rawLimit = {})
{
    InstanceFile file;
    file.name = std::move(name);
    file.rawLimit = detail::format_number(rawLimit.value_or(inst.limit()));
    for (std::size_t c = 0; c < inst.size(); ++c)
        file.items.push_back({inst.name(c), inst.name(c),
                              detail::format_number(rawCosts.empty() ? inst.cost(c) : rawCosts.at(c))});
    for (std::size_t i = 0; i < profile.size(); ++i) {
        InstanceFile::Ballot ballot{profile.label(i), {}};
        profile.ballot(i).for_each([&](std::size_t c) { ballot.items.push_back(inst.name(c)); });
        file.ballots.push_back(std::move(ballot));
    }
    return file;
}

inline std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline Election load_instance(const std::string& path) { return parse_instance(read_text_file(path)); }

} // namespace propbudget

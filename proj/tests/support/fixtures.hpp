#pragma once

#include <string>

#include "propbudget/io.hpp"

#ifndef PROPBUDGET_FIXTURE_DIR
#error "PROPBUDGET_FIXTURE_DIR must be defined"
#endif

namespace propbudget::fixtures {

inline std::string fixture_path(const std::string& name) { return std::string(PROPBUDGET_FIXTURE_DIR) + "/" + name; }

inline Election load_fixture(const std::string& name) { return load_instance(fixture_path(name)); }

inline std::vector<std::string> names(const Instance& inst, const ItemSet& items)
{
    std::vector<std::string> out;
    items.for_each([&](std::size_t c) { out.push_back(inst.name(c)); });
    return out;
}

} // namespace propbudget::fixtures

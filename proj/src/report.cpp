// Copyright 2026 The partsusy Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "partsusy/report.hpp"

#include <ostream>
#include <sstream>

#include "partsusy/spectrum.hpp"

namespace partsusy {

Record& Record::add(const std::string& key, const std::string& value) {
    fields_.emplace_back(key, value);
    return *this;
}

Record& Record::add(const std::string& key, double value) { return add(key, format_number(value)); }

Record& Record::add(const std::string& key, bool value) { return add(key, std::string(value ? "true" : "false")); }

Record& Record::add(const std::string& key, std::size_t value) { return add(key, std::to_string(value)); }

Record& Record::add(const std::string& key, int value) { return add(key, std::to_string(value)); }

std::string Record::get(const std::string& key) const {
    for (const auto& [k, v] : fields_) {
        if (k == key) return v;
    }
    return {};
}

Record Claim::to_record() const {
    Record r("claim");
    r.add("claim", claim)
        .add("anchor", anchor)
        .add("expected", expected)
        .add("observed", observed)
        .add("tolerance", tolerance)
        .add("pass", pass);
    return r;
}

void Report::add(const Claim& claim) { records_.push_back(claim.to_record()); }

bool Report::all_pass() const {
    for (const auto& r : records_) {
        if (r.get("pass") == "false") return false;
    }
    return true;
}

void Report::write(std::ostream& out) const {
    for (const auto& r : records_) {
        out << '[' << r.name() << "]\n";
        for (const auto& [k, v] : r.fields()) out << k << " = " << v << '\n';
        out << '\n';
    }
}

std::string Report::str() const {
    std::ostringstream os;
    write(os);
    return os.str();
}

}  // namespace partsusy

// Copyright 2026 The partsusy Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file report.hpp
 * @brief Flat key/value report records.
 *
 *   [record-name]
 *   key = value
 *   ...
 *   <blank line>
 *
 * Claim records carry the fields claim, anchor, expected, observed,
 * tolerance, pass in that order.
 */

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace partsusy {

class Record {
public:
    explicit Record(std::string name) : name_(std::move(name)) {}

    Record& add(const std::string& key, const std::string& value);
    Record& add(const std::string& key, const char* value) { return add(key, std::string(value)); }
    Record& add(const std::string& key, double value);
    Record& add(const std::string& key, bool value);
    Record& add(const std::string& key, std::size_t value);
    Record& add(const std::string& key, int value);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] const std::vector<std::pair<std::string, std::string>>& fields() const noexcept { return fields_; }
    /// Value of `key`, or empty.
    [[nodiscard]] std::string get(const std::string& key) const;

private:
    std::string name_;
    std::vector<std::pair<std::string, std::string>> fields_;
};

struct Claim {
    std::string claim;
    std::string anchor;
    std::string expected;
    std::string observed;
    std::string tolerance;
    bool pass = false;

    [[nodiscard]] Record to_record() const;
};

class Report {
public:
    void add(Record record) { records_.push_back(std::move(record)); }
    void add(const Claim& claim);

    [[nodiscard]] const std::vector<Record>& records() const noexcept { return records_; }
    /// False if any record has `pass = false`.
    [[nodiscard]] bool all_pass() const;
    void write(std::ostream& out) const;
    [[nodiscard]] std::string str() const;

private:
    std::vector<Record> records_;
};

}  // namespace partsusy

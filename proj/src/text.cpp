// Copyright 2026 The fpgrid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fpgrid/text.hpp"

#include <cctype>
#include <stdexcept>

namespace fpgrid {

namespace {

[[noreturn]] void fail(std::string_view token, const char* why) {
    throw std::invalid_argument("bad element '" + std::string(token) + "': " + why);
}

// Consumes a plain decimal run from text[pos...]; rejects empty runs and
// values >= m so every accepted component is already canonical.
std::uint64_t parse_component(std::string_view token, std::string_view text, std::size_t& pos,
                              std::uint64_t m) {
    std::size_t start = pos;
    std::uint64_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value >= m) fail(token, "component out of range for modulus");
        ++pos;
    }
    if (pos == start) fail(token, "expected a decimal component");
    if (pos - start > 1 && text[start] == '0') fail(token, "leading zero in component");
    return value;
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

Fp2Elem parse_element(std::string_view text, const Modulus& mod) {
    std::string_view token = text;
    std::uint64_t m = mod.value();
    std::size_t pos = 0;
    std::uint64_t re = parse_component(token, text, pos, m);
    if (pos == text.size())
        return Fp2Elem(mod, static_cast<std::int64_t>(re));
    if (text[pos] != '+') fail(token, "expected '+' between components");
    ++pos;
    std::uint64_t im = parse_component(token, text, pos, m);
    if (pos == text.size() || text[pos] != 'i') fail(token, "expected 'i' after second component");
    ++pos;
    if (pos != text.size()) fail(token, "trailing characters");
    return Fp2Elem(mod, static_cast<std::int64_t>(re), static_cast<std::int64_t>(im));
}

std::vector<Fp2Elem> parse_vector(std::string_view text, const Modulus& mod) {
    std::vector<Fp2Elem> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view entry =
            comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
        out.push_back(parse_element(strip(entry), mod));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string to_text(const Fp2Elem& z) {
    if (z.im() == 0) return std::to_string(z.re());
    return std::to_string(z.re()) + "+" + std::to_string(z.im()) + "i";
}

std::string to_text(const std::vector<Fp2Elem>& v) {
    std::string out;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j > 0) out += ',';
        out += to_text(v[j]);
    }
    return out;
}

} // namespace fpgrid

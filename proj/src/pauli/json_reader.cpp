// Copyright 2026 The lindsim Authors
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

#include "lindsim/pauli/json_reader.hpp"

#include <charconv>
#include <cstdint>
#include <string>

#include "lindsim/error.hpp"

namespace lindsim {

namespace {

constexpr int kMaxDepth = 64;

class Reader {
  public:
    explicit Reader(std::string_view text) : text_(text) {}

    nlohmann::json document() {
        skip_space();
        nlohmann::json value = parse_value(0);
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected trailing content");
        }
        return value;
    }

  private:
    [[noreturn]] void fail(const std::string &message) const {
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else if ((static_cast<unsigned char>(text_[i]) & 0xC0) != 0x80) {
                ++column;
            }
        }
        throw SpecError(message, line, column);
    }

    [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
    [[nodiscard]] char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_space() {
        while (!at_end()) {
            const char c = text_[pos_];
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
                ++pos_;
            } else {
                break;
            }
        }
    }

    void expect(char c) {
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    nlohmann::json parse_value(int depth) {
        if (depth > kMaxDepth) {
            fail("nesting too deep");
        }
        if (at_end()) {
            fail("unexpected end of input");
        }
        const char c = peek();
        if (c == '{') {
            return parse_object(depth);
        }
        if (c == '[') {
            return parse_array(depth);
        }
        if (c == '"') {
            return parse_string();
        }
        if (c == '-' || (c >= '0' && c <= '9')) {
            return parse_number();
        }
        if (is_ident_start(c)) {
            const std::size_t start = pos_;
            const std::string word = parse_identifier();
            if (word == "true") {
                return true;
            }
            if (word == "false") {
                return false;
            }
            if (word == "null") {
                return nullptr;
            }
            pos_ = start;
            fail("unexpected identifier '" + word + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    static bool is_ident_start(char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
    }
    static bool is_ident_char(char c) {
        return is_ident_start(c) || (c >= '0' && c <= '9');
    }

    std::string parse_identifier() {
        const std::size_t start = pos_;
        while (!at_end() && is_ident_char(text_[pos_])) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    nlohmann::json parse_object(int depth) {
        expect('{');
        nlohmann::json obj = nlohmann::json::object();
        skip_space();
        if (peek() == '}') {
            ++pos_;
            return obj;
        }
        for (;;) {
            skip_space();
            const std::size_t key_pos = pos_;
            std::string key;
            if (peek() == '"') {
                key = parse_string();
            } else if (is_ident_start(peek())) {
                key = parse_identifier();
            } else {
                fail("expected an object key");
            }
            if (obj.contains(key)) {
                pos_ = key_pos;
                fail("duplicate key '" + key + "'");
            }
            skip_space();
            expect(':');
            skip_space();
            obj[key] = parse_value(depth + 1);
            skip_space();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            expect('}');
            return obj;
        }
    }

    nlohmann::json parse_array(int depth) {
        expect('[');
        nlohmann::json arr = nlohmann::json::array();
        skip_space();
        if (peek() == ']') {
            ++pos_;
            return arr;
        }
        for (;;) {
            skip_space();
            arr.push_back(parse_value(depth + 1));
            skip_space();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            expect(']');
            return arr;
        }
    }

    unsigned parse_hex4() {
        if (pos_ + 4 > text_.size()) {
            fail("truncated \\u escape");
        }
        unsigned value = 0;
        const char *first = text_.data() + pos_;
        auto [ptr, ec] = std::from_chars(first, first + 4, value, 16);
        if (ec != std::errc() || ptr != first + 4) {
            fail("invalid \\u escape");
        }
        pos_ += 4;
        return value;
    }

    static void append_utf8(std::string &out, std::uint32_t cp) {
        if (cp < 0x80) {
            out += static_cast<char>(cp);
        } else if (cp < 0x800) {
            out += static_cast<char>(0xC0 | (cp >> 6));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else if (cp < 0x10000) {
            out += static_cast<char>(0xE0 | (cp >> 12));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else {
            out += static_cast<char>(0xF0 | (cp >> 18));
            out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        }
    }

    std::string parse_string() {
        expect('"');
        std::string out;
        for (;;) {
            if (at_end()) {
                fail("unterminated string");
            }
            const char c = text_[pos_];
            if (c == '"') {
                ++pos_;
                return out;
            }
            if (static_cast<unsigned char>(c) < 0x20) {
                fail("control character in string");
            }
            if (c != '\\') {
                out += c;
                ++pos_;
                continue;
            }
            ++pos_;
            const char esc = peek();
            ++pos_;
            switch (esc) {
            case '"':
            case '\\':
            case '/':
                out += esc;
                break;
            case 'b':
                out += '\b';
                break;
            case 'f':
                out += '\f';
                break;
            case 'n':
                out += '\n';
                break;
            case 'r':
                out += '\r';
                break;
            case 't':
                out += '\t';
                break;
            case 'u': {
                std::uint32_t cp = parse_hex4();
                if (cp >= 0xD800 && cp < 0xDC00) {
                    if (peek() != '\\' || pos_ + 1 >= text_.size() ||
                        text_[pos_ + 1] != 'u') {
                        fail("unpaired surrogate");
                    }
                    pos_ += 2;
                    const std::uint32_t lo = parse_hex4();
                    if (lo < 0xDC00 || lo >= 0xE000) {
                        fail("unpaired surrogate");
                    }
                    cp = 0x10000 + ((cp - 0xD800) << 10) + (lo - 0xDC00);
                }
                append_utf8(out, cp);
                break;
            }
            default:
                --pos_;
                fail("invalid escape sequence");
            }
        }
    }

    nlohmann::json parse_number() {
        const std::size_t start = pos_;
        if (peek() == '-') {
            ++pos_;
        }
        bool integral = true;
        while (!at_end()) {
            const char c = text_[pos_];
            if (c >= '0' && c <= '9') {
                ++pos_;
            } else if (c == '.' || c == 'e' || c == 'E' || c == '+' ||
                       c == '-') {
                integral = false;
                ++pos_;
            } else {
                break;
            }
        }
        const char *first = text_.data() + start;
        const char *last = text_.data() + pos_;
        if (integral) {
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(first, last, value);
            if (ec == std::errc() && ptr == last) {
                return value;
            }
        }
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last) {
            pos_ = start;
            fail("malformed number");
        }
        return value;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

nlohmann::json read_relaxed_json(std::string_view text) {
    return Reader(text).document();
}

} // namespace lindsim

#include "wahl/jio.hpp"

#include <algorithm>

namespace wahl::jio {

bool Value::as_bool() const {
    require(is_bool(), "json: expected a boolean");
    return std::get<bool>(v_);
}

const Int& Value::as_int() const {
    require(is_int(), "json: expected an integer");
    return std::get<Int>(v_);
}

const std::string& Value::as_string() const {
    require(is_string(), "json: expected a string");
    return std::get<std::string>(v_);
}

const Array& Value::as_array() const {
    require(is_array(), "json: expected an array");
    return std::get<Array>(v_);
}

const Object& Value::as_object() const {
    require(is_object(), "json: expected an object");
    return std::get<Object>(v_);
}

const Value* Value::find(std::string_view key) const {
    for (const Member& m : as_object())
        if (m.first == key) return &m.second;
    return nullptr;
}

const Value& Value::at(std::string_view key) const {
    const Value* v = find(key);
    require(v != nullptr, "json: missing key '" + std::string(key) + "'");
    return *v;
}

void Value::set(std::string key, Value value) {
    if (!is_object()) v_ = Object{};
    Object& obj = std::get<Object>(v_);
    for (Member& m : obj)
        if (m.first == key) {
            m.second = std::move(value);
            return;
        }
    obj.emplace_back(std::move(key), std::move(value));
}

bool operator==(const Value& a, const Value& b) { return a.v_ == b.v_; }

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Value run() {
        Value v = value();
        skip_ws();
        require(pos_ == text_.size(), "json: trailing characters");
        return v;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw input_error("json: " + msg + " at offset " + std::to_string(pos_));
    }

    char peek() {
        if (pos_ >= text_.size()) fail("unexpected end of input");
        return text_[pos_];
    }

    char take() {
        char c = peek();
        ++pos_;
        return c;
    }

    void expect(char c) {
        if (take() != c) fail(std::string("expected '") + c + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                text_[pos_] == '\r'))
            ++pos_;
    }

    bool literal(std::string_view word) {
        if (text_.substr(pos_, word.size()) == word) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    Value value() {
        skip_ws();
        char c = peek();
        switch (c) {
        case '{': return object();
        case '[': return array();
        case '"': return Value(string());
        case 't':
            if (literal("true")) return Value(true);
            fail("bad literal");
        case 'f':
            if (literal("false")) return Value(false);
            fail("bad literal");
        case 'n':
            if (literal("null")) return Value(nullptr);
            fail("bad literal");
        default: return Value(number());
        }
    }

    Value object() {
        expect('{');
        Object obj;
        skip_ws();
        if (peek() == '}') {
            ++pos_;
            return Value(std::move(obj));
        }
        while (true) {
            skip_ws();
            std::string key = string();
            for (const Member& m : obj)
                if (m.first == key) fail("duplicate key '" + key + "'");
            skip_ws();
            expect(':');
            obj.emplace_back(std::move(key), value());
            skip_ws();
            char c = take();
            if (c == '}') break;
            if (c != ',') fail("expected ',' or '}'");
        }
        return Value(std::move(obj));
    }

    Value array() {
        expect('[');
        Array arr;
        skip_ws();
        if (peek() == ']') {
            ++pos_;
            return Value(std::move(arr));
        }
        while (true) {
            arr.push_back(value());
            skip_ws();
            char c = take();
            if (c == ']') break;
            if (c != ',') fail("expected ',' or ']'");
        }
        return Value(std::move(arr));
    }

    std::string string() {
        expect('"');
        std::string out;
        while (true) {
            char c = take();
            if (c == '"') break;
            if (c == '\\') {
                char e = take();
                switch (e) {
                case '"': out.push_back('"'); break;
                case '\\': out.push_back('\\'); break;
                case '/': out.push_back('/'); break;
                case 'n': out.push_back('\n'); break;
                case 't': out.push_back('\t'); break;
                case 'r': out.push_back('\r'); break;
                case 'b': out.push_back('\b'); break;
                case 'f': out.push_back('\f'); break;
                case 'u': {
                    // Only the ASCII range is accepted; the schemas are ASCII.
                    unsigned code = 0;
                    for (int k = 0; k < 4; ++k) {
                        char h = take();
                        code <<= 4;
                        if (h >= '0' && h <= '9') code += h - '0';
                        else if (h >= 'a' && h <= 'f') code += 10 + h - 'a';
                        else if (h >= 'A' && h <= 'F') code += 10 + h - 'A';
                        else fail("bad \\u escape");
                    }
                    if (code > 0x7f) fail("non-ASCII \\u escape unsupported");
                    out.push_back(static_cast<char>(code));
                    break;
                }
                default: fail("bad escape");
                }
            } else {
                out.push_back(c);
            }
        }
        return out;
    }

    Int number() {
        std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        if (pos_ == start || (text_[start] == '-' && pos_ == start + 1))
            fail("expected a number");
        if (pos_ < text_.size() &&
            (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
            fail("floating-point numbers are not allowed");
        return Int(std::string(text_.substr(start, pos_ - start)));
    }
};

void dump_string(const std::string& s, std::string& out) {
    out.push_back('"');
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default: out.push_back(c);
        }
    }
    out.push_back('"');
}

void dump_value(const Value& v, int depth, std::string& out) {
    auto indent = [&](int d) { out.append(static_cast<std::size_t>(d) * 2, ' '); };
    if (v.is_null()) {
        out += "null";
    } else if (v.is_bool()) {
        out += v.as_bool() ? "true" : "false";
    } else if (v.is_int()) {
        out += v.as_int().str();
    } else if (v.is_string()) {
        dump_string(v.as_string(), out);
    } else if (v.is_array()) {
        const Array& arr = v.as_array();
        if (arr.empty()) {
            out += "[]";
            return;
        }
        bool flat = std::all_of(arr.begin(), arr.end(), [](const Value& e) {
            return e.is_int() || e.is_string() || e.is_bool() || e.is_null();
        });
        out.push_back('[');
        for (std::size_t i = 0; i < arr.size(); ++i) {
            if (!flat) {
                out.push_back('\n');
                indent(depth + 1);
            }
            dump_value(arr[i], depth + 1, out);
            if (i + 1 < arr.size()) out += flat ? ", " : ",";
        }
        if (!flat) {
            out.push_back('\n');
            indent(depth);
        }
        out.push_back(']');
    } else {
        const Object& obj = v.as_object();
        if (obj.empty()) {
            out += "{}";
            return;
        }
        out.push_back('{');
        for (std::size_t i = 0; i < obj.size(); ++i) {
            out.push_back('\n');
            indent(depth + 1);
            dump_string(obj[i].first, out);
            out += ": ";
            dump_value(obj[i].second, depth + 1, out);
            if (i + 1 < obj.size()) out.push_back(',');
        }
        out.push_back('\n');
        indent(depth);
        out.push_back('}');
    }
}

} // namespace

Value parse(std::string_view text) { return Parser(text).run(); }

std::string dump(const Value& v) {
    std::string out;
    dump_value(v, 0, out);
    out.push_back('\n');
    return out;
}

Value rational(const Rat& r) {
    Object obj;
    obj.emplace_back("num", Value(num(r)));
    obj.emplace_back("den", Value(den(r)));
    return Value(std::move(obj));
}

Rat rational_from(const Value& v) {
    const Int& n = v.at("num").as_int();
    const Int& d = v.at("den").as_int();
    require(d >= 1, "json: rational denominator must be positive");
    require(gcd(n, d) == 1, "json: rational must be reduced");
    return Rat(n, d);
}

} // namespace wahl::jio

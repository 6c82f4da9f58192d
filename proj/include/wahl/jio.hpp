#pragma once

#include "wahl/arith.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace wahl::jio {

// Small JSON layer of our own: numbers are arbitrary-precision integers
// (no floats accepted or produced), object keys keep insertion order, and
// emission is byte-stable, so parse -> dump is the identity on dumped text.

class Value;

using Array = std::vector<Value>;
using Member = std::pair<std::string, Value>;

class Value {
public:
    using Object = std::vector<Member>;

    Value() : v_(nullptr) {}
    Value(std::nullptr_t) : v_(nullptr) {}
    Value(bool b) : v_(b) {}
    Value(Int i) : v_(std::move(i)) {}
    Value(int i) : v_(Int(i)) {}
    Value(long long i) : v_(Int(i)) {}
    Value(std::size_t i) : v_(Int(static_cast<unsigned long long>(i))) {}
    Value(std::string s) : v_(std::move(s)) {}
    Value(const char* s) : v_(std::string(s)) {}
    Value(Array a) : v_(std::move(a)) {}
    Value(Object o) : v_(std::move(o)) {}

    bool is_null() const { return std::holds_alternative<std::nullptr_t>(v_); }
    bool is_bool() const { return std::holds_alternative<bool>(v_); }
    bool is_int() const { return std::holds_alternative<Int>(v_); }
    bool is_string() const { return std::holds_alternative<std::string>(v_); }
    bool is_array() const { return std::holds_alternative<Array>(v_); }
    bool is_object() const { return std::holds_alternative<Object>(v_); }

    bool as_bool() const;
    const Int& as_int() const;
    const std::string& as_string() const;
    const Array& as_array() const;
    const Object& as_object() const;

    /// Object lookup; null if absent.
    const Value* find(std::string_view key) const;
    /// Object lookup that throws input_error if absent.
    const Value& at(std::string_view key) const;

    void set(std::string key, Value value);  // append-or-replace, keeps order

    friend bool operator==(const Value&, const Value&);

private:
    std::variant<std::nullptr_t, bool, Int, std::string, Array, Object> v_;
};

using Object = Value::Object;

/// Parses a complete JSON document.  Numbers with '.', 'e', or 'E' are
/// rejected: the schemas never use floats.  Duplicate keys are rejected.
Value parse(std::string_view text);

/// Serializes with 2-space indent and sorted nothing: member order is the
/// insertion order, so output is reproducible byte for byte.
std::string dump(const Value& v);

/// A rational as the schema object {"num": ..., "den": ...}.
Value rational(const Rat& r);
Rat rational_from(const Value& v);

} // namespace wahl::jio

#pragma once
// Strict reader for scenario documents. Every accessor knows the dotted path of
// the value it reads, so diagnostics can name the offending field.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cli {

using json = nlohmann::json;

class Node {
public:
    Node(const json& j, std::string path) : j_(&j), path_(std::move(path)) {}

    const json& raw() const { return *j_; }
    const std::string& path() const { return path_; }

    bool is_object() const { return j_->is_object(); }
    bool is_array() const { return j_->is_array(); }
    bool is_string() const { return j_->is_string(); }
    bool is_number() const { return j_->is_number(); }

    double number() const;
    std::uint64_t count() const;  // non-negative integer; 1e7 is accepted
    long integer() const;
    bool boolean() const;
    std::string string() const;
    std::string choice(std::initializer_list<const char*> allowed) const;

    std::vector<Node> elements() const;
    std::vector<double> numbers() const;
    std::vector<std::uint64_t> counts() const;

private:
    const json* j_;
    std::string path_;
};

/// Object with a closed set of keys; construction rejects unknown ones.
class Object {
public:
    Object(const Node& node, std::initializer_list<const char*> allowed);

    bool has(const char* key) const;
    Node at(const char* key) const;  // required
    std::optional<Node> find(const char* key) const;
    const std::string& path() const { return path_; }
    std::string field(const char* key) const { return path_.empty() ? key : path_ + "." + key; }

    double number(const char* key) const { return at(key).number(); }
    std::uint64_t count(const char* key) const { return at(key).count(); }
    std::string string(const char* key) const { return at(key).string(); }

    /// Exactly one of the keys must be present; returns its index.
    std::size_t one_of(std::initializer_list<const char*> keys) const;

private:
    const json* j_;
    std::string path_;
};

struct Document {
    json root;
    std::string variant;
    std::string format = "table";
    std::vector<std::string> conventions;  // as written in output.conventions
    bool has_conventions = false;

    Node parameters() const { return Node(root.at("parameters"), "parameters"); }
};

/// Parses and checks the envelope (schema_version, variant, parameters,
/// output). Failures are validation errors.
Document load_document(const std::string& path);
Document parse_document(const std::string& text, const std::string& origin);

}  // namespace cli

#include "document.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

#include "capi.hpp"

namespace cli {

namespace {

std::string kind_of(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return "null";
        case json::value_t::object: return "an object";
        case json::value_t::array: return "an array";
        case json::value_t::string: return "a string";
        case json::value_t::boolean: return "a boolean";
        case json::value_t::discarded: return "invalid";
        default: return "a number";
    }
}

// Line and column of a byte offset, for parse errors.
std::string position(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

double Node::number() const {
    if (!j_->is_number()) invalid(path_, "expected a number, found " + kind_of(*j_));
    const double v = j_->get<double>();
    if (!std::isfinite(v)) invalid(path_, "number is not finite");
    return v;
}

std::uint64_t Node::count() const {
    if (j_->is_number_unsigned()) return j_->get<std::uint64_t>();
    if (j_->is_number_integer()) {
        const auto v = j_->get<std::int64_t>();
        if (v < 0) invalid(path_, "expected a non-negative integer, found " + std::to_string(v));
        return static_cast<std::uint64_t>(v);
    }
    const double v = number();
    if (v < 0 || v != std::floor(v) || v > 9.0e18) invalid(path_, "expected a non-negative integer");
    return static_cast<std::uint64_t>(v);
}

long Node::integer() const {
    if (j_->is_number_integer()) return static_cast<long>(j_->get<std::int64_t>());
    const double v = number();
    if (v != std::floor(v) || std::fabs(v) > 9.0e18) invalid(path_, "expected an integer");
    return static_cast<long>(v);
}

bool Node::boolean() const {
    if (!j_->is_boolean()) invalid(path_, "expected true or false, found " + kind_of(*j_));
    return j_->get<bool>();
}

std::string Node::string() const {
    if (!j_->is_string()) invalid(path_, "expected a string, found " + kind_of(*j_));
    return j_->get<std::string>();
}

std::string Node::choice(std::initializer_list<const char*> allowed) const {
    const std::string s = string();
    std::string list;
    for (const char* a : allowed) {
        if (s == a) return s;
        if (!list.empty()) list += ", ";
        list += a;
    }
    invalid(path_, "unknown value \"" + s + "\" (expected one of " + list + ")");
}

std::vector<Node> Node::elements() const {
    if (!j_->is_array()) invalid(path_, "expected an array, found " + kind_of(*j_));
    std::vector<Node> out;
    for (std::size_t i = 0; i < j_->size(); ++i) out.emplace_back((*j_)[i], path_ + "[" + std::to_string(i) + "]");
    return out;
}

std::vector<double> Node::numbers() const {
    std::vector<double> out;
    for (const auto& e : elements()) out.push_back(e.number());
    return out;
}

std::vector<std::uint64_t> Node::counts() const {
    std::vector<std::uint64_t> out;
    for (const auto& e : elements()) out.push_back(e.count());
    return out;
}

Object::Object(const Node& node, std::initializer_list<const char*> allowed) : j_(&node.raw()), path_(node.path()) {
    if (!j_->is_object()) invalid(path_, "expected an object, found " + kind_of(*j_));
    for (auto it = j_->begin(); it != j_->end(); ++it) {
        bool known = false;
        for (const char* a : allowed) known = known || it.key() == a;
        if (!known) {
            std::string list;
            for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
            invalid(field(it.key().c_str()), "unknown key (allowed: " + list + ")");
        }
    }
}

bool Object::has(const char* key) const { return j_->contains(key); }

Node Object::at(const char* key) const {
    if (!j_->contains(key)) invalid(field(key), "required field is missing");
    return Node(j_->at(key), field(key));
}

std::optional<Node> Object::find(const char* key) const {
    if (!j_->contains(key)) return std::nullopt;
    return Node(j_->at(key), field(key));
}

std::size_t Object::one_of(std::initializer_list<const char*> keys) const {
    std::size_t found = keys.size(), i = 0;
    std::string list;
    for (const char* k : keys) {
        if (has(k)) {
            if (found != keys.size()) invalid(field(k), "conflicts with " + field(*(keys.begin() + found)));
            found = i;
        }
        list += std::string(list.empty() ? "" : " or ") + k;
        ++i;
    }
    if (found == keys.size()) invalid(path_, "one of " + list + " is required");
    return found;
}

Document parse_document(const std::string& text, const std::string& origin) {
    Document doc;
    try {
        doc.root = json::parse(text);
    } catch (const json::parse_error& e) {
        std::string msg = e.what();
        const auto cut = msg.find("parse error");
        if (cut != std::string::npos) msg = msg.substr(cut);
        throw Failure(kValidation, origin + ": " + position(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + msg);
    }
    const Node root(doc.root, "");
    const Object top(root, {"schema_version", "variant", "parameters", "output"});
    const Node version = top.at("schema_version");
    if (version.integer() != 1)
        invalid(version.path(), "unsupported schema version " + std::to_string(version.integer()) + " (expected 1)");
    doc.variant = top.string("variant");
    if (!top.at("parameters").is_object()) invalid("parameters", "expected an object");
    if (const auto out = top.find("output")) {
        const Object o(*out, {"format", "conventions"});
        if (const auto f = o.find("format")) doc.format = f->choice({"table", "csv"});
        if (const auto c = o.find("conventions")) {
            doc.has_conventions = true;
            for (const auto& e : c->elements()) {
                const std::string name = e.string();
                island_lr_convention conv;
                if (island_convention_parse(name.c_str(), &conv) != ISLAND_OK)
                    invalid(e.path(), "unknown likelihood-ratio convention \"" + name + "\"");
                doc.conventions.push_back(name);
            }
        }
    }
    return doc;
}

Document load_document(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Failure(kValidation, path + ": cannot open document");
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return parse_document(text, path);
}

}  // namespace cli

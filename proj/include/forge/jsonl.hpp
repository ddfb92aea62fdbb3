#pragma once

#include <fstream>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace forge {

// All emitted records use ordered_json so field order (and therefore the
// serialized bytes) is stable across runs.
using Json = nlohmann::ordered_json;

namespace jsonl {

// Calls fn(line_number, line) for every line; returns total line count.
inline std::size_t for_each_line(const std::string& path,
                                 const std::function<void(std::size_t, const std::string&)>& fn) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        fn(line_no, line);
    }
    return line_no;
}

inline std::vector<Json> read_all(const std::string& path) {
    std::vector<Json> out;
    for_each_line(path, [&](std::size_t line_no, const std::string& line) {
        if (line.empty()) return;
        try {
            out.push_back(Json::parse(line));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": invalid JSON: " + e.what());
        }
    });
    return out;
}

class Writer {
public:
    explicit Writer(const std::string& path) : out_(path, std::ios::binary | std::ios::trunc) {
        if (!out_) throw std::runtime_error("cannot open output file: " + path);
    }

    void write(const Json& record) {
        out_ << record.dump() << '\n';
        ++count_;
    }

    void write_line(const std::string& line) {
        out_ << line << '\n';
        ++count_;
    }

    std::size_t count() const { return count_; }

    void close() { out_.close(); }

private:
    std::ofstream out_;
    std::size_t count_ = 0;
};

inline void write_all(const std::string& path, const std::vector<Json>& records) {
    Writer w(path);
    for (const auto& r : records) w.write(r);
}

}  // namespace jsonl

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << content;
}

}  // namespace forge

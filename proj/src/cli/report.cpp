#include "lagdef/cli/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace lagdef::cli {

Format parse_format(std::string_view name) {
    if (name == "json")
        return Format::Json;
    if (name == "text")
        return Format::Text;
    throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string digest(std::string_view bytes) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
    return std::string("fnv1a64:") + buf;
}

namespace {

bool is_flat_array(const Json &j) {
    for (const auto &e : j)
        if (e.is_structured())
            return false;
    return true;
}

std::string scalar(const Json &j) {
    if (j.is_string())
        return j.get<std::string>();
    return j.dump();
}

void flatten(const Json &j, const std::string &path, std::string &out) {
    if (j.is_object()) {
        if (j.empty())
            out += path + ": {}\n";
        for (const auto &[key, value] : j.items())
            flatten(value, path.empty() ? key : path + "." + key, out);
    } else if (j.is_array() && is_flat_array(j)) {
        std::string line;
        for (const auto &e : j)
            line += (line.empty() ? "" : ", ") + scalar(e);
        out += path + ": [" + line + "]\n";
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    } else {
        out += path + ": " + scalar(j) + "\n";
    }
}

} // namespace

std::string render(const Json &report, Format format) {
    if (format == Format::Json)
        return report.dump(2) + "\n";
    std::string out;
    flatten(report, "", out);
    return out;
}

} // namespace lagdef::cli

#include "colearn/harness.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <set>

namespace colearn {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = value.find(',', start);
        out.push_back(trim(std::string_view(value).substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

class Parser {
public:
    explicit Parser(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument(source_ + ":" + std::to_string(line_) + ": " + what);
    }

    void set_line(std::size_t line) { line_ = line; }

    template <typename T>
    T number(const std::string& token, const std::string& key) const {
        T value{};
        const char* begin = token.data();
        const char* end = begin + token.size();
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (token.empty() || ec != std::errc() || ptr != end) {
            fail("bad value '" + token + "' for " + key);
        }
        return value;
    }

    std::vector<double> reals(const std::string& value, const std::string& key) const {
        std::vector<double> out;
        for (const std::string& tok : split_list(value)) out.push_back(number<double>(tok, key));
        return out;
    }

    // Integers or start:stop:step ranges (stop inclusive).
    std::vector<std::size_t> integers(const std::string& value, const std::string& key) const {
        std::vector<std::size_t> out;
        for (const std::string& tok : split_list(value)) {
            const auto c1 = tok.find(':');
            if (c1 == std::string::npos) {
                out.push_back(number<std::size_t>(tok, key));
                continue;
            }
            const auto c2 = tok.find(':', c1 + 1);
            const auto start = number<std::size_t>(trim(tok.substr(0, c1)), key);
            const auto stop = number<std::size_t>(
                trim(tok.substr(c1 + 1, c2 == std::string::npos ? std::string::npos : c2 - c1 - 1)),
                key);
            const std::size_t step =
                c2 == std::string::npos ? 1 : number<std::size_t>(trim(tok.substr(c2 + 1)), key);
            if (step == 0) fail("range step must be positive in " + key);
            if (stop < start) fail("empty range '" + tok + "' in " + key);
            for (std::size_t v = start; v <= stop; v += step) out.push_back(v);
        }
        return out;
    }

private:
    std::string source_;
    std::size_t line_ = 0;
};

} // namespace

SweepSpec parse_sweep_spec(std::istream& in, const std::string& source) {
    SweepSpec spec;
    Parser p(source);

    using Setter = std::function<void(const std::string&, const std::string&)>;
    const std::map<std::string, Setter> setters = {
        {"num_agents", [&](auto& v, auto& k) { spec.base.num_agents = p.number<std::size_t>(v, k); }},
        {"num_propositions",
         [&](auto& v, auto& k) { spec.base.num_propositions = p.number<std::size_t>(v, k); }},
        {"max_steps", [&](auto& v, auto& k) { spec.base.max_steps = p.number<std::size_t>(v, k); }},
        {"convergence_window",
         [&](auto& v, auto& k) { spec.base.convergence_window = p.number<std::size_t>(v, k); }},
        {"runs_per_cell", [&](auto& v, auto& k) { spec.runs_per_cell = p.number<std::size_t>(v, k); }},
        {"base_seed", [&](auto& v, auto& k) { spec.base_seed = p.number<std::uint64_t>(v, k); }},
        {"k_values", [&](auto& v, auto& k) { spec.k_values = p.integers(v, k); }},
        {"rho_values", [&](auto& v, auto& k) { spec.rho_values = p.reals(v, k); }},
        {"r_values", [&](auto& v, auto& k) { spec.r_values = p.reals(v, k); }},
        {"epsilon_values", [&](auto& v, auto& k) { spec.epsilon_values = p.reals(v, k); }},
    };

    std::set<std::string> seen;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        p.set_line(++line_no);
        const auto hash = raw.find('#');
        const std::string line = trim(std::string_view(raw).substr(0, hash));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) p.fail("expected 'key = value'");
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        const auto it = setters.find(key);
        if (it == setters.end()) p.fail("unknown key '" + key + "'");
        if (!seen.insert(key).second) p.fail("duplicate key '" + key + "'");
        if (value.empty()) p.fail("missing value for " + key);
        it->second(value, key);
    }
    for (const char* required : {"k_values", "rho_values", "r_values", "epsilon_values"}) {
        if (!seen.contains(required)) {
            throw std::invalid_argument(source + ": missing required key '" + required + "'");
        }
    }
    spec.check();
    return spec;
}

SweepSpec load_sweep_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open sweep spec " + path.string());
    return parse_sweep_spec(in, path.string());
}

} // namespace colearn

#include "edslrs/eds.hpp"

#include "edslrs/error.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace edslrs::eds {

namespace fs = std::filesystem;

SequenceCache::SequenceCache(fs::path root) : root_(std::move(root)) {}

fs::path SequenceCache::default_root() {
    if (const char* env = std::getenv("EDSLRS_CACHE_DIR"); env && *env) return env;
    if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "edslrs";
    return ".edslrs-cache";
}

std::string SequenceCache::key(const ec::CurveQ& e, const ec::PointQ& p) {
    const std::string text = to_dec(e.a()) + " " + to_dec(e.b()) + " " + to_dec(p.x) + " " + to_dec(p.y) + " " +
                             to_dec(p.z);
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

fs::path SequenceCache::path_for(const ec::CurveQ& e, const ec::PointQ& p) const {
    return root_ / (key(e, p) + ".seq");
}

std::optional<std::vector<Int>> SequenceCache::load(const ec::CurveQ& e, const ec::PointQ& p, std::size_t n) const {
    std::ifstream in(path_for(e, p));
    if (!in) return std::nullopt;
    std::vector<Int> terms;
    std::string line;
    try {
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::istringstream ls(line);
            std::string idx, val;
            if (!(ls >> idx >> val)) return std::nullopt;
            if (parse_int(idx) != Int(static_cast<unsigned long>(terms.size() + 1))) return std::nullopt;
            terms.push_back(parse_int(val));
        }
    } catch (const Error&) {
        return std::nullopt;
    }
    if (terms.size() < n || terms.empty()) return std::nullopt;
    // A hash collision or a damaged file shows up at one of the ends.
    if (terms.front() != p.z) return std::nullopt;
    const auto last = ec::scalar_mul(Int(static_cast<unsigned long>(terms.size())), p, e);
    if (last.infinity || last.z != terms.back()) return std::nullopt;
    terms.resize(n);
    return terms;
}

void SequenceCache::store(const ec::CurveQ& e, const ec::PointQ& p, const std::vector<Int>& terms) const {
    std::error_code ec;
    fs::create_directories(root_, ec);
    if (ec) fail(ErrorKind::invalid_input, "cannot create cache directory " + root_.string());
    const fs::path target = path_for(e, p);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) fail(ErrorKind::invalid_input, "cannot write cache file " + tmp.string());
        for (std::size_t i = 0; i < terms.size(); ++i) out << (i + 1) << ' ' << to_dec(terms[i]) << '\n';
    }
    fs::rename(tmp, target);
}

EdsSequence generate_geometric_cached(const ec::CurveQ& e, const ec::PointQ& p, std::size_t n,
                                      const SequenceCache& cache, bool* hit) {
    if (auto terms = cache.load(e, p, n)) {
        if (hit) *hit = true;
        EdsSequence s;
        s.curve = e;
        s.point = p;
        s.terms = std::move(*terms);
        return s;
    }
    if (hit) *hit = false;
    auto s = generate_geometric(e, p, n);
    cache.store(e, p, s.terms);
    return s;
}

}  // namespace edslrs::eds

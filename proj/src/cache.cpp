#include "gck/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "gck/errors.hpp"
#include "gck/jsonio.hpp"

namespace gck {

namespace fs = std::filesystem;

std::string resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("GCK_CACHE_DIR"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return (fs::path(xdg) / "gck").string();
    if (const char* home = std::getenv("HOME"); home && *home)
        return (fs::path(home) / ".cache" / "gck").string();
    return ".gck-cache";
}

CharacterTablePtr cache_get_or_compute(const GroupPtr& G, const CacheConfig& cfg,
                                       std::ostream& warn) {
    if (cfg.disabled) return character_table(G);
    fs::path dir = resolve_cache_dir(cfg.dir);
    fs::path file = dir / (G->canonical_hash() + ".json");

    if (fs::exists(file)) {
        try {
            std::ifstream in(file);
            Json j = Json::parse(in);
            return table_from_json(G, j);
        } catch (const std::exception& e) {
            warn << "warning: character-table cache entry " << file.string()
                 << " is corrupt (" << e.what() << "); recomputing\n";
        }
    }
    CharacterTablePtr table = character_table(G);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (!ec) {
        std::ofstream out(file);
        out << json_of_table(*table).dump(2) << "\n";
    }
    return table;
}

} // namespace gck

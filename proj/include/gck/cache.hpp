#pragma once

#include <iosfwd>
#include <string>

#include "gck/classfun.hpp"

namespace gck {

struct CacheConfig {
    std::string dir;       // empty = resolve from env / default
    bool disabled = false;
};

// Precedence: explicit flag value, then GCK_CACHE_DIR, then XDG_CACHE_HOME/gck,
// then ~/.cache/gck, finally ./.gck-cache.
std::string resolve_cache_dir(const std::string& flag_value);

// Disk-cached character tables keyed by the group's canonical hash. A cache
// hit is re-validated (orthonormality spot test); corrupt entries trigger a
// recompute with a warning on `warn`, and are rewritten. Writes are
// last-writer-wins; contents for a given key are deterministic.
CharacterTablePtr cache_get_or_compute(const GroupPtr& G, const CacheConfig& cfg,
                                       std::ostream& warn);

} // namespace gck

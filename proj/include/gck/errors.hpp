#pragma once

#include <stdexcept>
#include <string>

namespace gck {

// Base for all domain errors. `code()` is the stable machine-readable
// identifier surfaced by the CLI's structured diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define GCK_DEFINE_ERROR(Name)                                        \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& what) : Error(#Name, what) {} \
    }

GCK_DEFINE_ERROR(InvalidPermutation);
GCK_DEFINE_ERROR(OrderCapExceeded);
GCK_DEFINE_ERROR(NotASubgroup);
GCK_DEFINE_ERROR(GroupMismatch);
GCK_DEFINE_ERROR(SizeCapExceeded);
GCK_DEFINE_ERROR(NoRightAction);
GCK_DEFINE_ERROR(NotContaining);
GCK_DEFINE_ERROR(NotTransitive);
GCK_DEFINE_ERROR(NotEquivariant);
GCK_DEFINE_ERROR(ShapeMismatch);
GCK_DEFINE_ERROR(NotIrreducible);
GCK_DEFINE_ERROR(NotVirtualCharacter);
GCK_DEFINE_ERROR(NotInBasisSpan);
GCK_DEFINE_ERROR(NonCyclicStabilizer);
GCK_DEFINE_ERROR(InconsistentBranchData);
GCK_DEFINE_ERROR(MixedKinds);
GCK_DEFINE_ERROR(UnderdeterminedInput);
GCK_DEFINE_ERROR(EmptyPlacesAbove);
GCK_DEFINE_ERROR(NotRational);
GCK_DEFINE_ERROR(ConfigParse);
GCK_DEFINE_ERROR(CacheCorrupt);
GCK_DEFINE_ERROR(ParseError);

#undef GCK_DEFINE_ERROR

} // namespace gck

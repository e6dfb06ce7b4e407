#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fspv/ast.hpp"
#include "fspv/lts.hpp"

namespace fspv {

// A parsed specification with every constant and range bound evaluated,
// every name reference checked, and progress sets expanded to concrete
// action labels.
struct ResolvedSpec {
    std::shared_ptr<const SpecAst> ast;
    std::map<std::string, long> constants;
    std::map<std::string, std::pair<long, long>> ranges;
    std::vector<ProgressProperty> progress;

    const ProgressProperty* find_progress(const std::string& name) const;
};

// Throws ResolveError for unknown names, empty ranges (lo > hi), cyclic
// constants and undefined local references.
ResolvedSpec resolve_constants(SpecAst ast);

}  // namespace fspv

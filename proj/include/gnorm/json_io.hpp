#pragma once

#include "json.hpp"

#include "gnorm/normality.hpp"
#include "gnorm/stars.hpp"

namespace gnorm {

nlohmann::json to_json(const VertexSet& s);
VertexSet vertex_set_from_json(int n, const nlohmann::json& j);

// {"cliques": [[int,...],...], "independents": [[int,...],...]}
nlohmann::json to_json(const NormalCertificate& cert);
NormalCertificate certificate_from_json(int n, const nlohmann::json& j);

// Certificate fields plus {"centers": [...], "stars": [{"center","leaves"}]}
nlohmann::json to_json(const StarCovering& cover);

// {"J": [...], "blocks": [[...],...]}
nlohmann::json to_json(const BlockLayout& layout);
BlockLayout block_layout_from_json(int n, const nlohmann::json& j);

// {"start", "outsection", "private_total", "satisfied"}
nlohmann::json to_json(const JqResult& r);

}  // namespace gnorm

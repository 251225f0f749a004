#pragma once

#include <json.hpp>

#include "lensfib/braid.hpp"
#include "lensfib/contact.hpp"
#include "lensfib/kirby.hpp"
#include "lensfib/openbook.hpp"

namespace lensfib {

using Json = nlohmann::ordered_json;

Json to_json(const BraidWord& w);
BraidWord braid_from_json(const Json& j);

Json to_json(const ClosureInvariants& inv);

Json to_json(const FramedLinkMatrix& m);
FramedLinkMatrix matrix_from_json(const Json& j);

Json to_json(const Move& mv);
Move move_from_json(const Json& j);
MoveTrace trace_from_json(const Json& j);
Json to_json(const MoveTrace& trace);

Json to_json(const AbstractOpenBook& ob);

Json to_json(const CompatibilityReport& report);

} // namespace lensfib

#include "woac/protocols.hpp"

namespace woac {

ChAssignment select_chs_dt(const SelectionContext& ctx) { return direct_assignment(ctx.nodes); }

}  // namespace woac

#include <algorithm>

#include "woac/errors.hpp"
#include "woac/protocols.hpp"

namespace woac {

namespace {

class DirectStrategy final : public ClusterStrategy {
 public:
  std::string_view name() const override { return "dt"; }
  std::string_view label() const override { return "DT"; }
  ChAssignment select(const SelectionContext& ctx) override { return select_chs_dt(ctx); }
};

class LeachStrategy final : public ClusterStrategy {
 public:
  explicit LeachStrategy(double p) : p_(p) {}
  std::string_view name() const override { return "leach"; }
  std::string_view label() const override { return "LEACH"; }
  ChAssignment select(const SelectionContext& ctx) override {
    return select_chs_leach(ctx, p_, state_);
  }

 private:
  double p_;
  LeachState state_;
};

class LeachCStrategy final : public ClusterStrategy {
 public:
  explicit LeachCStrategy(LeachCParams params) : params_(params) {}
  std::string_view name() const override { return "leach-c"; }
  std::string_view label() const override { return "LEACH-C"; }
  ChAssignment select(const SelectionContext& ctx) override {
    return select_chs_leach_c(ctx, params_);
  }

 private:
  LeachCParams params_;
};

class PsoStrategy final : public ClusterStrategy {
 public:
  PsoStrategy(FitnessWeights w, PsoSelectorParams params) : w_(w), params_(params) {}
  std::string_view name() const override { return "pso"; }
  std::string_view label() const override { return "PSO-C-like"; }
  ChAssignment select(const SelectionContext& ctx) override {
    return select_chs_pso(ctx, w_, params_);
  }

 private:
  FitnessWeights w_;
  PsoSelectorParams params_;
};

class WoaStrategy final : public ClusterStrategy {
 public:
  WoaStrategy(FitnessWeights w, WoaSelectorParams params) : w_(w), params_(params) {}
  std::string_view name() const override { return "woa"; }
  std::string_view label() const override { return "WOA-C"; }
  ChAssignment select(const SelectionContext& ctx) override {
    return select_chs_woa(ctx, w_, params_);
  }

 private:
  FitnessWeights w_;
  WoaSelectorParams params_;
};

}  // namespace

bool is_strategy_name(std::string_view name) {
  return std::find(std::begin(kStrategyNames), std::end(kStrategyNames), name) !=
         std::end(kStrategyNames);
}

std::unique_ptr<ClusterStrategy> make_strategy(std::string_view name, const StrategyParams& params,
                                               int node_count, int k) {
  if (name == "dt") return std::make_unique<DirectStrategy>();
  if (name == "leach") {
    double p = params.leach_p;
    if (p <= 0.0) p = node_count > 0 ? static_cast<double>(k) / node_count : 1.0;
    p = std::min(p, 1.0);
    return std::make_unique<LeachStrategy>(p);
  }
  if (name == "leach-c") return std::make_unique<LeachCStrategy>(params.leach_c);
  if (name == "pso") return std::make_unique<PsoStrategy>(params.fitness, params.pso);
  if (name == "woa") return std::make_unique<WoaStrategy>(params.fitness, params.woa);
  throw ConfigError("unknown strategy '" + std::string(name) +
                    "' (expected dt | leach | leach-c | pso | woa)");
}

}  // namespace woac

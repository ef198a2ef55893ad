// Copyright 2026 The combsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "combsim/config.h"

#include "gtest/gtest.h"

#include "combsim/errors.h"

using namespace combsim;

namespace {

std::string error_text(const std::string &ini, const ConfigOverrides &o = {}) {
    try {
        parse_config_text(ini, o);
    } catch (const ConfigError &e) {
        return e.field + ": " + e.what();
    }
    return "";
}

}  // namespace

TEST(parse_config, minimal_uses_defaults) {
    auto cfg = parse_config_text("[model]\nnt = 3\nh = 2.0\n");
    ASSERT_EQ(cfg.ising.nt, 3);
    ASSERT_EQ(cfg.ising.h, 2.0);
    ASSERT_EQ(cfg.ising.b, 0.0);
    ASSERT_TRUE(cfg.ising.periodic);
    ASSERT_EQ(cfg.comb.nc, 3);
    ASSERT_EQ(cfg.comb.nu0, 4.0);
    ASSERT_EQ(cfg.comb.tf, 50.0);
    ASSERT_EQ(cfg.comb.dt, 0.1);
    ASSERT_EQ(cfg.comb.mode, Mode::Emulate);
    ASSERT_EQ(cfg.comb.coupling.kind, CouplingMode::Kind::OneBodyX);
    ASSERT_EQ(cfg.qaa.dt, kQaaDt);
    ASSERT_EQ(cfg.ensemble.members, 200);
    ASSERT_FALSE(cfg.seed.has_value());
    ASSERT_EQ(cfg.ising.nt, cfg.qaa.ising.nt);
}

TEST(parse_config, dt_must_divide_tf) {
    auto text = error_text("[comb]\ntf = 1.0\n[run]\ndt = 0.3\n");
    ASSERT_NE(text.find("run.dt"), std::string::npos) << text;
    ASSERT_NE(text.find("comb.tf"), std::string::npos) << text;
}

TEST(parse_config, circuit_mode_needs_one_body_coupling) {
    auto text = error_text("[interaction]\ncoupling = random_pattern\n[run]\nmode = circuit\n");
    ASSERT_EQ(text.rfind("interaction.coupling", 0), 0u) << text;
    ASSERT_NE(text.find("circuit"), std::string::npos) << text;
}

TEST(parse_config, rejects_unknown_and_malformed) {
    ASSERT_NE(error_text("[model]\nfoo = 1\n").find("model.foo"), std::string::npos);
    ASSERT_NE(error_text("[model]\nh = abc\n").find("model.h"), std::string::npos);
    ASSERT_NE(error_text("[run]\nmode = quantum\n").find("run.mode"), std::string::npos);
    ASSERT_NE(error_text("[run]\ninitial = basis:x\n").find("run.initial"), std::string::npos);
    ASSERT_NE(error_text("[optimize]\nnu0 = 3\n").find("optimize.nu0"), std::string::npos);
    ASSERT_NE(error_text("", {{"run.eta", "2"}}).find("run.eta"), std::string::npos);
    ASSERT_THROW(parse_config("/nonexistent/config.ini"), ConfigError);
}

TEST(parse_config, overrides_win) {
    auto cfg = parse_config_text("[model]\nh = 2.0\n", {{"model.h", "0.5"}, {"run.seed", "9"}});
    ASSERT_EQ(cfg.ising.h, 0.5);
    ASSERT_EQ(cfg.seed, std::optional<std::uint64_t>(9));
    ASSERT_EQ(cfg.comb.seed, 9u);
}

TEST(parse_config, enumerations) {
    auto cfg = parse_config_text(
        "[interaction]\ncoupling = random_pattern\ncoupling_seed = 4\n"
        "[run]\ninitial = basis:5\nsteps_per_iter = 100,400\nn_iters = 2\n"
        "[ensemble]\nsampler = basis\n[optimize]\nobjective = final_energy\ntf = 2,9,lin\n");
    ASSERT_EQ(cfg.comb.coupling.kind, CouplingMode::Kind::RandomPattern);
    ASSERT_EQ(cfg.comb.coupling.seed, 4u);
    ASSERT_EQ(cfg.comb.initial.kind, InitialState::Kind::BasisState);
    ASSERT_EQ(cfg.comb.initial.index, 5u);
    ASSERT_EQ(cfg.comb.steps_per_iter, (std::vector<int>{100, 400}));
    ASSERT_EQ(cfg.ensemble.sampler, Sampler::Basis);
    ASSERT_EQ(cfg.optimize.objective, Objective::FinalEnergy);
    ASSERT_TRUE(cfg.optimize.space.has_value());
    ASSERT_EQ(cfg.optimize.space->tf.lo, 2.0);
    ASSERT_FALSE(cfg.optimize.space->tf.log);
    ASSERT_EQ(initial_name(cfg.comb.initial), "basis:5");
    ASSERT_EQ(coupling_name(cfg.comb.coupling), "random_pattern");
}

TEST(render_config, round_trips) {
    auto cfg = parse_config_text(
        "[model]\nnt = 4\nh = 0.7\nb = -1\n[comb]\nnu0 = 3.3\ntf = 12\nrandom_phis = true\nphi_seed = 8\n"
        "[interaction]\ng = 0.123456789\n[run]\ndt = 0.25\neta = 0.6\nn_iters = 3\nseed = 77\n"
        "initial = ground_b_plus_1\nmeasure_last = true\n[optimize]\ng = 0.1,0.5,log\n");
    auto again = parse_config_text(render_config(cfg));
    ASSERT_EQ(render_config(again), render_config(cfg));
    ASSERT_EQ(again.comb.g, 0.123456789);
    ASSERT_EQ(again.comb.phis(), cfg.comb.phis());
    ASSERT_EQ(again.seed, cfg.seed);
    ASSERT_TRUE(again.comb.measure_last);
}

TEST(config_defaults, lists_every_section) {
    auto d = config_defaults();
    for (std::string key : {"model.nt", "comb.nu0", "interaction.g", "run.dt", "qaa.n_steps", "ensemble.members",
                            "optimize.budget", "output.csv"}) {
        ASSERT_TRUE(std::any_of(d.begin(), d.end(), [&](const auto &kv) { return kv.first == key; })) << key;
    }
}

TEST(fixtures, all_parse) {
    const std::string dir = COMBSIM_FIXTURE_DIR;
    for (std::string f : {"/trajectory.ini", "/ensemble.ini", "/cost/h0.4.ini", "/cost/h0.5.ini", "/cost/h0.6.ini",
                          "/cost/h0.8.ini", "/cost/h1.ini"}) {
        auto cfg = parse_config(dir + f);
        ASSERT_EQ(cfg.ising.nt, 3) << f;
        ASSERT_EQ(cfg.comb.nc, 3) << f;
    }
    ASSERT_EQ(parse_config(dir + "/trajectory.ini").comb.steps(), 500);
    ASSERT_EQ(parse_config(dir + "/ensemble.ini").comb.total_steps(), 2000);
}

// Copyright 2026 The rfbasis Authors
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

#include "rfbasis/elements.h"

#include <gtest/gtest.h>

#include "test_util.h"

using namespace rfbasis;
using rfbasis::testing::max_difference;
using rfbasis::testing::uniform;

namespace {

const Port a{"a"};
const Port b{"b"};
const Port c{"c"};
const Port d{"d"};

PhotonState photon_at(const FrequencyGrid &grid, const Port &p, double w, cd amp = 1.0) {
    PhotonState s(grid);
    s.set_amplitude({p, grid.bin_of(w)}, amp);
    return s;
}

// Random single-photon state spread over ports a and b.
PhotonState random_state(const FrequencyGrid &grid) {
    PhotonState s(grid);
    double norm = 0;
    std::vector<std::pair<ModeId, cd>> entries;
    for (const auto &p : {a, b}) {
        for (int k = 0; k < grid.n_bins(); k++) {
            cd v(uniform(-1, 1), uniform(-1, 1));
            entries.push_back({{p, k}, v});
            norm += std::norm(v);
        }
    }
    for (auto &[mode, v] : entries) {
        s.set_amplitude(mode, v / std::sqrt(norm));
    }
    return s;
}

// Random element acting on {a, b} -> {a, b}.
ScatteringElement random_element(const FrequencyGrid &grid, bool allow_loss) {
    int kind = static_cast<int>(uniform(0, allow_loss ? 4 : 3));
    const Port &p = uniform(0, 1) < 0.5 ? a : b;
    const Port &q = p == a ? b : a;
    switch (kind) {
        case 0:
            return beamsplitter(grid, p, q);
        case 1:
            return with_passthrough(delay_arm(grid, p, uniform(-3, 3), uniform(-M_PI, M_PI)), {q});
        case 2: {
            // Fresh intermediate names keep the overflow sinks of different passes apart.
            static int serial = 0;
            Port x("x" + std::to_string(serial)), y("y" + std::to_string(serial));
            serial++;
            int shift = static_cast<int>(uniform(-3, 4));
            auto aom = aom_pass(grid, {uniform(0, M_PI / 2), shift * grid.spacing()}, p, q, x, y);
            auto back = beamsplitter(grid, x, y);
            return relabel_outputs(compose(aom, back), {{x, a}, {y, b}});
        }
        default:
            return with_passthrough(loss_element(grid, p, uniform(0, 1)), {q});
    }
}

}  // namespace

TEST(beamsplitter, symmetric_convention) {
    FrequencyGrid grid(2.0, 1.0);
    auto bs = beamsplitter(grid, a, b);
    auto out = apply(bs, photon_at(grid, a, 1.0));
    EXPECT_CNEAR(out.amplitude({a, grid.bin_of(1.0)}), M_SQRT1_2, 1e-15);
    EXPECT_CNEAR(out.amplitude({b, grid.bin_of(1.0)}), cd(0, M_SQRT1_2), 1e-15);
    ASSERT_LT(bs.unitarity_defect(), 1e-15);
    ASSERT_THROW(beamsplitter(grid, a, a), PortMismatchError);
}

TEST(beamsplitter, two_in_sequence_swap_with_phase_i) {
    FrequencyGrid grid(2.0, 1.0);
    auto bs = beamsplitter(grid, a, b);
    auto twice = compose(bs, bs);
    for (int k = 0; k < grid.n_bins(); k++) {
        EXPECT_CNEAR(twice.coefficient({a, k}, {b, k}), cd(0, 1), 1e-15);
        EXPECT_CNEAR(twice.coefficient({b, k}, {a, k}), cd(0, 1), 1e-15);
        EXPECT_CNEAR(twice.coefficient({a, k}, {a, k}), 0.0, 1e-15);
        EXPECT_CNEAR(twice.coefficient({b, k}, {b, k}), 0.0, 1e-15);
    }
}

TEST(delay_arm, phase_factors) {
    FrequencyGrid grid(2.0, 1.0);
    auto none = delay_arm(grid, a, 0.0, 0.0);
    for (int k = 0; k < grid.n_bins(); k++) {
        ASSERT_EQ(none.coefficient({a, k}, {a, k}), cd(1.0));
    }
    auto tuned = delay_arm(grid, a, M_PI / 2, M_PI / 2);
    EXPECT_CNEAR(tuned.coefficient({a, grid.bin_of(1.0)}, {a, grid.bin_of(1.0)}), -1.0, 1e-15);
    EXPECT_CNEAR(tuned.coefficient({a, grid.bin_of(-1.0)}, {a, grid.bin_of(-1.0)}), 1.0, 1e-15);
}

TEST(aom_pass, zero_angle_is_identity) {
    FrequencyGrid grid(4.0, 1.0);
    auto aom = aom_pass(grid, {0.0, 2.0}, a, b, c, d);
    for (int k = 0; k < grid.n_bins(); k++) {
        ASSERT_EQ(aom.coefficient({c, k}, {a, k}), cd(1.0));
        ASSERT_EQ(aom.coefficient({d, k}, {b, k}), cd(1.0));
        ASSERT_EQ(aom.columns().at({a, k}).size(), 1u);
    }
}

TEST(aom_pass, full_diffraction_upshifts_in_b) {
    FrequencyGrid grid(4.0, 1.0);
    auto aom = aom_pass(grid, {M_PI / 2, 2.0}, a, b, c, d);
    auto out = apply(aom, photon_at(grid, b, -1.0));
    EXPECT_CNEAR(out.amplitude({c, grid.bin_of(1.0)}), cd(0, 1), 1e-15);
    EXPECT_NEAR(out.photon_probability(), 1.0, 1e-15);
}

TEST(aom_pass, half_diffraction_splits_and_downshifts) {
    FrequencyGrid grid(4.0, 1.0);
    auto aom = aom_pass(grid, {M_PI / 4, 2.0}, a, b, c, d);
    auto out = apply(aom, photon_at(grid, a, 1.0));
    EXPECT_CNEAR(out.amplitude({c, grid.bin_of(1.0)}), M_SQRT1_2, 1e-15);
    EXPECT_CNEAR(out.amplitude({d, grid.bin_of(-1.0)}), cd(0, M_SQRT1_2), 1e-15);
    EXPECT_NEAR(out.total_probability(), 1.0, 1e-15);
}

TEST(aom_pass, drive_frequency_must_be_on_grid) {
    FrequencyGrid grid(4.0, 1.0);
    ASSERT_THROW(aom_pass(grid, {0.3, 1.5}, a, b, c, d), GridMismatchError);
    ASSERT_THROW(aom_pass(grid, {2.0, 2.0}, a, b, c, d), std::invalid_argument);
}

TEST(aom_pass, overflow_goes_to_a_sink_and_stays_isometric) {
    FrequencyGrid grid(2.0, 1.0);
    auto aom = aom_pass(grid, {0.7, 2.0}, a, b, c, d);
    auto out = apply(aom, photon_at(grid, b, 2.0));
    EXPECT_NEAR(out.sink_probability(), std::pow(std::sin(0.7), 2), 1e-15);
    EXPECT_CNEAR(out.amplitude({Port::sink_of(c), grid.n_bins() + 1}), cd(0, std::sin(0.7)), 1e-15);
    EXPECT_LT(aom.unitarity_defect(), 1e-15);

    // A second pass keeps its overflow apart from the first one.
    auto second = aom_pass(grid, {0.7, 2.0}, c, d, a, b);
    auto chain = compose(aom, second);
    EXPECT_LT(chain.unitarity_defect(), 1e-14);
}

TEST(aom_pass, full_diffraction_is_a_bin_permutation) {
    FrequencyGrid grid(6.0, 1.0);
    auto aom = aom_pass(grid, {M_PI / 2, 2.0}, a, b, c, d);
    for (const auto &[in, column] : aom.columns()) {
        int moved = 0;
        for (const auto &[out, value] : column) {
            if (std::abs(value) > 1e-15) {
                moved++;
                EXPECT_CNEAR(value, cd(0, 1), 1e-15);
                EXPECT_EQ(std::abs(out.bin - in.bin), 2);
            }
        }
        EXPECT_EQ(moved, 1);
    }
}

TEST(loss_element, transmission_and_lost_weight) {
    FrequencyGrid grid(2.0, 1.0);
    auto full = loss_element(grid, a, 1.0);
    ASSERT_TRUE(full.lossless());
    auto s = photon_at(grid, a, 1.0);
    ASSERT_LT(max_difference(apply(full, s), s), 1e-15);

    auto dark = apply(loss_element(grid, a, 0.0), s);
    ASSERT_DOUBLE_EQ(dark.lost_weight(), 1.0);
    ASSERT_EQ(dark.photon_probability(), 0.0);

    PhotonState half(grid);
    half.set_amplitude({a, grid.bin_of(1.0)}, M_SQRT1_2);
    half.set_amplitude({b, grid.bin_of(1.0)}, M_SQRT1_2);
    auto out = apply(with_passthrough(loss_element(grid, a, 0.9025), {b}), half);
    ASSERT_NEAR(out.lost_weight(), 0.04875, 1e-15);
    ASSERT_NEAR(out.total_probability(), 1.0, 1e-15);

    ASSERT_THROW(loss_element(grid, a, 1.2), std::invalid_argument);
    ASSERT_THROW(loss_element(grid, a, -0.1), std::invalid_argument);
}

TEST(compose, identity_is_neutral) {
    FrequencyGrid grid(3.0, 1.0);
    auto x = aom_pass(grid, {0.4, 1.0}, a, b, c, d);
    auto composed = compose(x, identity_element(grid, {c, d}));
    for (const auto &[in, column] : x.columns()) {
        for (const auto &[out, value] : column) {
            ASSERT_EQ(composed.coefficient(out, in), value);
        }
    }
    ASSERT_EQ(composed.columns().size(), x.columns().size());
}

TEST(compose, port_mismatch) {
    FrequencyGrid grid(3.0, 1.0);
    auto x = aom_pass(grid, {0.4, 1.0}, a, b, c, d);
    ASSERT_THROW(compose(x, beamsplitter(grid, a, b)), PortMismatchError);
    ASSERT_THROW(compose(x, beamsplitter(FrequencyGrid(3.0, 0.5), c, d)), GridMismatchError);
}

TEST(compose, lossless_flag) {
    FrequencyGrid grid(3.0, 1.0);
    auto bs = beamsplitter(grid, a, b);
    auto lossy = with_passthrough(loss_element(grid, a, 0.5), {b});
    ASSERT_TRUE(compose(bs, bs).lossless());
    ASSERT_FALSE(compose(bs, lossy).lossless());
}

TEST(apply, identity_and_port_checks) {
    FrequencyGrid grid(3.0, 1.0);
    auto s = photon_at(grid, a, 1.0, cd(0.6, 0.8));
    ASSERT_LT(max_difference(apply(identity_element(grid, {a}), s), s), 1e-15);
    ASSERT_THROW(apply(delay_arm(grid, b, 1.0, 0.0), s), PortMismatchError);
    ASSERT_THROW(with_passthrough(aom_pass(grid, {0.1, 1.0}, a, b, c, d), {c}), PortMismatchError);
}

TEST(elements, random_lossless_chains_are_unitary) {
    FrequencyGrid grid(4.0, 1.0);
    for (int trial = 0; trial < 30; trial++) {
        std::vector<ScatteringElement> chain;
        for (int i = 0; i < 5; i++) {
            chain.push_back(random_element(grid, false));
            ASSERT_LT(chain.back().unitarity_defect(), 1e-12);
        }
        auto composed = compose_chain(chain);
        ASSERT_TRUE(composed.lossless());
        ASSERT_LT(composed.unitarity_defect(), 1e-12);
    }
}

TEST(elements, probability_is_conserved_through_random_chains) {
    FrequencyGrid grid(4.0, 1.0);
    for (int trial = 0; trial < 30; trial++) {
        auto s = random_state(grid);
        for (int i = 0; i < 8; i++) {
            auto element = random_element(grid, true);
            double before = s.photon_probability();
            s = apply(element, s);
            ASSERT_NEAR(s.total_probability(), 1.0, 1e-10);
            if (element.lossless()) {
                ASSERT_NEAR(s.photon_probability(), before, 1e-12);
            }
        }
    }
}

TEST(elements, composition_is_associative_under_apply) {
    FrequencyGrid grid(4.0, 1.0);
    for (int trial = 0; trial < 30; trial++) {
        auto first = random_element(grid, true);
        auto second = random_element(grid, true);
        auto s = random_state(grid);
        auto together = apply(compose(first, second), s);
        auto stepwise = apply(second, apply(first, s));
        ASSERT_LT(max_difference(together, stepwise), 1e-12);
        ASSERT_NEAR(together.lost_weight(), stepwise.lost_weight(), 1e-12);
    }
}

# Copyright 2026 The rfbasis Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import math
import os
import subprocess

import numpy as np
import pytest

import rfbasis


def test_rotation_block_matches_ideal():
    grid = rfbasis.FrequencyGrid(3.0, 1.0)
    for theta in np.linspace(0, math.pi / 2, 7):
        device = rfbasis.rf_hwp(rfbasis.DeviceConfig.exact(1.0, theta), grid)
        block = rfbasis.extract_rotation(device, 1.0)
        np.testing.assert_allclose(block, rfbasis.ideal_rotation(theta), atol=1e-12)
        assert device.unitarity_defect() < 1e-12


def test_detuned_fbs_is_refused():
    cfg = rfbasis.DeviceConfig.exact(1.0, 0.0)
    cfg.phi = 1.0
    assert not cfg.exact_tuning
    with pytest.raises(ValueError):
        rfbasis.frequency_beamsplitter(cfg, rfbasis.FrequencyGrid(3.0, 1.0))


def test_fidelity_and_sweep_agree():
    single = rfbasis.fidelity(10, math.pi / 4)
    table = rfbasis.fidelity_sweep([10, 100], [math.pi / 4])
    assert [row.ratio for row in table] == [10, 100]
    assert table[0].fidelity == single.fidelity
    assert table[0].fidelity < table[1].fidelity < 1
    assert single.fidelity + single.leak <= 1 + 1e-9


def test_gaussian_overlap_and_loss():
    assert abs(abs(rfbasis.gaussian_overlap(10)) - math.exp(-20)) < 1e-6
    assert rfbasis.effective_transmission(0.95, 0.95) == pytest.approx(0.81450625, abs=1e-15)


def test_netlist_round_trip_and_run():
    text = "grid  dW=1 W=3\ndevice rfhwp omega=1 theta=0.7853981633974483\ninput in kind=mono mu=1 nu=0 omega=1\nrun\n"
    canonical = rfbasis.format_netlist(text)
    assert canonical.startswith("grid W=3 dW=1\n")
    assert rfbasis.format_netlist(canonical) == canonical
    records = json.loads(rfbasis.run_netlist(text, format="json"))
    top = [r for r in records[0]["rows"] if r["port"] == "out" and r["bin_omega_over_Omega"] == 1]
    assert top[0]["prob"] == pytest.approx(1.0, abs=1e-12)


def test_netlist_error_is_positioned():
    with pytest.raises(rfbasis.NetlistError, match=r"^3:29: 'delta' = 5"):
        rfbasis.format_netlist("grid W=10 dW=2\nport a b\naom a b c d theta=0.3 delta=5\n")


@pytest.mark.skipif(not os.environ.get("RFBASIS_CLI"), reason="command-line tool not located")
def test_cli_loss_budget():
    out = subprocess.run(
        [os.environ["RFBASIS_CLI"], "loss-budget", "--eta-aom", "0.95", "--eta-mm", "0.95"],
        check=True,
        capture_output=True,
        text=True,
    ).stdout
    assert json.loads(out)["eta_total"] == 0.81450625

# Copyright 2026 The dlab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


import json
import math

import numpy as np
import pytest

import dlabound as dl


def dense(p):
    mats = {
        "I": np.eye(2),
        "X": np.array([[0, 1], [1, 0]]),
        "Y": np.array([[0, -1j], [1j, 0]]),
        "Z": np.diag([1, -1]),
    }
    out = 0
    for word, c in p.terms().items():
        m = np.array([[1.0]])
        for ch in word:
            m = np.kron(m, mats[ch])
        out = out + c * m
    return out


def test_commutator_matches_numpy():
    a = dl.PauliSum.from_text("0.5 XY\n1.5 ZI")
    b = dl.PauliSum.from_text("2.0 YZ\n-1.0 IX")
    c = dl.commutator(a, b)
    da, db = dense(a), dense(b)
    assert np.allclose(da @ db - db @ da, 1j * dense(c), atol=1e-12)


def test_dla_examples():
    assert dl.dla_dimension([dl.PauliSum.from_word("X"), dl.PauliSum.from_word("Z")]) == 3
    assert dl.tfim_dimension(3, "open") == 9
    assert dl.tfim_dimension(4, "closed") == 11
    assert len(dl.lie_closure(dl.tfim_generators(2))) == 4


def test_bounds():
    assert dl.max_trainable_params(0.1) == pytest.approx(23.3506370143, abs=1e-9)
    p, n = dl.optimal_p()
    assert 0.373 <= p <= 0.376 and 10.78 <= n <= 10.80
    r = dl.generalization_bound(10, 20, 16, 4)
    assert r["alpha"] == pytest.approx(1 / math.sqrt(10))
    assert r["gap_bound"] > 0
    with pytest.raises(ValueError):
        dl.max_trainable_params(0.8)


def test_model_and_dataset():
    y = dl.model_output([0.3, -0.2], [0.0] * 20, 2)
    assert -1.0 <= y <= 1.0
    data = json.loads(dl.generate_dataset(2, 7, 4, 5))
    assert len(data["train"]) == 4 and len(data["test"]) == 5


def test_run_single_and_indices():
    rec = dl.run_single(2, "open", "sps", 1, 2, epochs=10)
    assert rec["status"] == "ok"
    assert len(rec["theta_star"]) == 20
    h = dl.tfim_hamiltonian(2)
    norm = float(np.max(np.abs(np.linalg.eigvalsh(dense(h)))))
    assert dl.compute_cr(rec["theta_star"], norm) == pytest.approx(rec["cr"], abs=1e-12)
    assert dl.compute_cr([0.0] * 5, norm) == 1.0


def test_cli_in_process():
    code, out, err = dl.run_cli(["bound", "budget", "--p", "0.1"])
    assert code == 0 and "23.35" in out
    code, _, err = dl.run_cli(["bound", "budget", "--p", "0.8"])
    assert code == 3 and json.loads(err.strip().splitlines()[-1])["exit_code"] == 3

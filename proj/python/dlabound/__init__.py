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


"""DLA closure, generalization bounds and QNN training experiments."""

from ._core import (
    CapacityError,
    DomainError,
    NumericalError,
    PauliSum,
    __version__,
    commutator,
    compute_cr,
    compute_pmax_nmax,
    dla_dimension,
    dudley_closed_form,
    epsilon_max,
    generalization_bound,
    generate_dataset,
    hs_inner,
    lie_closure,
    max_trainable_params,
    model_output,
    optimal_p,
    run_cli,
    run_single,
    tfim_dimension,
    tfim_generators,
    tfim_hamiltonian,
    theta_max,
)

__all__ = [
    "CapacityError",
    "DomainError",
    "NumericalError",
    "PauliSum",
    "__version__",
    "commutator",
    "compute_cr",
    "compute_pmax_nmax",
    "dla_dimension",
    "dudley_closed_form",
    "epsilon_max",
    "generalization_bound",
    "generate_dataset",
    "hs_inner",
    "lie_closure",
    "max_trainable_params",
    "model_output",
    "optimal_p",
    "run_cli",
    "run_single",
    "tfim_dimension",
    "tfim_generators",
    "tfim_hamiltonian",
    "theta_max",
]

# Copyright 2026 the qnnbench authors
# SPDX-License-Identifier: Apache-2.0
"""Sine-product quantum neural network simulator and benchmark harness."""

from qnnbench._core import (
    DataError,
    UsageError,
    amplitudes,
    angle_of,
    cli_main,
    compare_runs,
    compute_stats,
    decode_class,
    emit_plot,
    encode_feature,
    encode_sample,
    label_to_code,
    load_csv,
    neuron_forward,
    neuron_oracle,
    output_qubit_count,
    predict_bits,
    product_state_probabilities,
    qnn_loss,
    run_experiment,
)

__all__ = [
    "DataError",
    "UsageError",
    "amplitudes",
    "angle_of",
    "cli_main",
    "compare_runs",
    "compute_stats",
    "decode_class",
    "emit_plot",
    "encode_feature",
    "encode_sample",
    "label_to_code",
    "load_csv",
    "neuron_forward",
    "neuron_oracle",
    "output_qubit_count",
    "predict_bits",
    "product_state_probabilities",
    "qnn_loss",
    "run_experiment",
]

__version__ = "0.1.0"

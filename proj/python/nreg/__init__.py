# Copyright 2026 The nreg Authors.
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

"""Referring expression generation from delexicalized templates.

The command functions (prepare, train, predict, evaluate) mirror the ``nreg``
tool and return ``(exit_code, log)``.
"""

from nreg._core import (
    NregError,
    classify_form,
    corpus_bleu,
    decode,
    edit_distance,
    evaluate,
    length_penalty,
    mcnemar,
    only_names,
    predict,
    prepare,
    read_instances,
    tokenize,
    train,
    wilcoxon,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NUMERIC = 3

__all__ = [
    "EXIT_INPUT",
    "EXIT_NUMERIC",
    "EXIT_OK",
    "NregError",
    "classify_form",
    "corpus_bleu",
    "decode",
    "edit_distance",
    "evaluate",
    "length_penalty",
    "mcnemar",
    "only_names",
    "predict",
    "prepare",
    "read_instances",
    "tokenize",
    "train",
    "wilcoxon",
]

#
#   Copyright 2026 The pgact Authors
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

"""Exact checks for partial groupoid actions on semicategories."""

import json

from ._core import (
    CommandError,
    CommandResult,
    Document,
    ParseError,
    command_names,
    emit_document,
    parse_document,
    run_command,
)

__all__ = [
    "CommandError",
    "CommandResult",
    "Document",
    "ParseError",
    "command_names",
    "emit_document",
    "load",
    "parse_document",
    "report",
    "run_command",
]


def load(path, field=""):
    """Parses the document stored at path."""
    with open(path, encoding="utf-8") as f:
        return parse_document(f.read(), field)


def report(result):
    """The report of a command result as a JSON value."""
    return json.loads(result.report_json())

# -*- coding: utf-8 -*-
"""Файлы носителей, отчёты и их печати."""

from lk_spaces.storage.formats import (
    parse_report,
    read_joint_step_function,
    read_step_function,
    render_report,
)
from lk_spaces.storage.seal import ReportSeal

__all__ = [
    "parse_report",
    "read_joint_step_function",
    "read_step_function",
    "render_report",
    "ReportSeal",
]

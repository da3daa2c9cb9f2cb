# -*- coding: utf-8 -*-
from lk_spaces.grammar.spec_parser import parse_spec, parse_sv

__all__ = ["parse_spec", "parse_sv"]

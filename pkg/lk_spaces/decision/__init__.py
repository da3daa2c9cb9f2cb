# -*- coding: utf-8 -*-
"""Процедуры решения: классификация, вложения, ассоциированные пространства."""

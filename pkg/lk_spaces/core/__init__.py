# -*- coding: utf-8 -*-
"""Ядро: медленно меняющиеся функции, перестановки, функционалы L^{p,q,b}."""

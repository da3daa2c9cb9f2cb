# -*- coding: utf-8 -*-
"""Консольная команда lk."""

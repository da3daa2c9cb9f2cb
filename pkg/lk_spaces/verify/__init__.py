# -*- coding: utf-8 -*-
"""Свидетели, численный стенд и именованные наборы проверок."""

# -*- coding: utf-8 -*-
from lk_spaces.api.toolkit import LorentzKaramataToolkit

__all__ = ["LorentzKaramataToolkit"]

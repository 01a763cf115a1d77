"""Operational calculus with Laguerre and fractional derivatives.

Modules:

* :mod:`peocalc.series_core` generalized power series and Gamma function
* :mod:`peocalc.special_functions` Laguerre, Mittag-Leffler and Bessel type functions
* :mod:`peocalc.umbral` umbral images and their formal integration
* :mod:`peocalc.weyl` exact Weyl algebra and operator disentanglement
* :mod:`peocalc.peo_solvers` eigen-operator solutions of evolution problems
* :mod:`peocalc.volterra` Volterra-Neumann and Dyson expansions
"""

__version__ = '0.1'

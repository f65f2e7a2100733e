"""scikit-learn style wrapper around one affine system and Coxeter word.

``fit`` computes the frame, ``gamma_c`` and the finite-orbit data;
``transform`` evaluates ``phi_c`` on root vectors and ``predict`` labels
their orbits as finite or infinite.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .cartan import affine_frame, parse_cartan
from .catalog import builtin_system
from .orbits import finite_transversal, transversal_inf, upsilon_fin
from .spectral import gamma_c
from .weyl import make_coxeter, standard_word


class CoxeterOrbits(BaseEstimator, TransformerMixin):
    """Orbit data of ``c`` acting on the roots of an affine system.

    Either ``family`` and ``n`` (catalog) or ``matrix`` selects the system.
    ``word`` defaults to ``1, ..., n``.
    """

    def __init__(
        self,
        family: Optional[str] = None,
        n: Optional[int] = None,
        k: Optional[int] = None,
        matrix: Optional[Sequence[Sequence[int]]] = None,
        word: Optional[Sequence[int]] = None,
        aff: Optional[int] = None,
    ):
        self.family = family
        self.n = n
        self.k = k
        self.matrix = matrix
        self.word = word
        self.aff = aff

    def _system(self):
        if self.matrix is not None:
            return parse_cartan([list(r) for r in self.matrix])
        if self.family is None or self.n is None:
            raise ValueError("set either matrix or both family and n")
        return builtin_system(self.family, self.n, self.k)

    def fit(self, X=None, y=None):
        cd = self._system()
        self.cartan_ = cd
        self.frame_ = affine_frame(cd, self.aff)
        self.coxeter_ = standard_word(cd) if self.word is None else make_coxeter(cd, self.word)
        self.gamma_ = gamma_c(cd, self.frame_, self.coxeter_)
        self.upsilon_ = upsilon_fin(cd, self.frame_, self.coxeter_, self.gamma_)
        self.transversal_ = transversal_inf(cd, self.coxeter_)
        self.omega_ = self.upsilon_.omega
        self.kappa_ = self.upsilon_.kappa_of
        return self

    def phi_exact(self, X) -> list:
        check_is_fitted(self, "gamma_")
        return [self.gamma_.phi(tuple(int(x) for x in row)) for row in X]

    def transform(self, X):
        """``phi_c`` of each row, as a float column."""
        return np.array([[float(Fraction(v))] for v in self.phi_exact(X)])

    def predict(self, X):
        return np.array(["finite" if v == 0 else "infinite" for v in self.phi_exact(X)])

    def finite_transversal(self, m_range=range(-1, 2)):
        check_is_fitted(self, "upsilon_")
        return finite_transversal(self.upsilon_, self.frame_, m_range)

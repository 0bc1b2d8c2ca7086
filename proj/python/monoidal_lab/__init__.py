"""Exact experiments on iterated monoidal transforms of regular local rings.

Monomials are given as exponent lists or as strings like ``"y/(x^2*z^3)"``
over the program's variable names. Results are plain dicts in the same
shape as the ``monoidal-lab --json`` reports.
"""

import json

from . import _core
from ._core import InputError, REPORT_SCHEMA

__all__ = ["Program", "InputError", "REPORT_SCHEMA", "fixture_names", "run_fixture"]


def fixture_names():
    return list(_core.fixture_names())


def run_fixture(name):
    return json.loads(_core.run_fixture_json(name))


class Program:
    def __init__(self, core):
        self._core = core

    @classmethod
    def from_text(cls, text):
        return cls(_core.Program.from_text(text))

    @classmethod
    def from_file(cls, path):
        return cls(_core.Program.from_file(str(path)))

    @classmethod
    def fixture(cls, name):
        return cls(_core.Program.fixture(name))

    @property
    def dimension(self):
        return self._core.dimension

    @property
    def variables(self):
        return list(self._core.variables)

    @property
    def name(self):
        return self._core.name

    def serialize(self):
        return self._core.serialize()

    def to_dict(self):
        return json.loads(self._core.program_json())

    def format(self, w):
        return self._core.format(w)

    def exponents(self, w):
        return list(self._core.exponents(w))

    def member(self, w, cutoff=256, periods=3):
        return json.loads(self._core.member_json(w, cutoff, periods))

    def divides(self, a, b, cutoff=256, periods=3):
        return json.loads(self._core.divides_json(a, b, cutoff, periods))

    def gcd(self, a, b, cutoff=256, periods=3):
        return json.loads(self._core.gcd_json(a, b, cutoff, periods))

    def primitive(self, a, b, cutoff=256, periods=3):
        return json.loads(self._core.primitive_json(a, b, cutoff, periods))

    def intersect(self, monomials, cutoff=256, periods=3):
        return json.loads(self._core.intersect_json(list(monomials), cutoff, periods))

    def chains(self, periods=3):
        return json.loads(self._core.chains_json(periods))

    def classify(self, cutoff=256, periods=3, window=4, search_degree=8, seed=1):
        return json.loads(self._core.classify_json(cutoff, periods, window, search_degree, seed))

    def __repr__(self):
        return f"Program({self.name!r}, dimension={self.dimension})"

"""Hall-Littlewood transition polynomials ``L_{lambda,mu}(q)`` for types A, B and C."""

from .folding import FoldingTree, L_poly, L_table, build_tree, c_last, c_pair, c_tableau
from .kernel import BACKEND
from .laurent import HalfLaurent
from .roots import RootDatum
from .tableaux import Shape, Tableau, VertexContext, enumerate_all_ssyt, enumerate_ssyt, parse_tableau

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "FoldingTree",
    "HalfLaurent",
    "L_poly",
    "L_table",
    "RootDatum",
    "Shape",
    "Tableau",
    "VertexContext",
    "build_tree",
    "c_last",
    "c_pair",
    "c_tableau",
    "enumerate_all_ssyt",
    "enumerate_ssyt",
    "parse_tableau",
]

"""Łukasiewicz formulas, their semantics, and theories induced by families."""

from .formula import (BOT, TOP, Binary, Conn, Const, Formula, Not, Var, X, bicond, chain,
                      depth, desugar, impl, land, lor, max_index, neg, odot, ominus, oplus,
                      variables)
from .semantics import ArityError, compose, eval_at
from .syntax import FormulaSyntaxError, parse, to_text
from .theory import (AxiomSet, ClosureProbe, TheoryCertificate, a_consequence, axioms,
                     deductive_closure_probe, is_consistent, on_path, oneset_grid_check, phi_k,
                     theory_equal, theta_member)

__all__ = [
    "BOT", "TOP", "Binary", "Conn", "Const", "Formula", "Not", "Var", "X", "bicond", "chain",
    "depth", "desugar", "impl", "land", "lor", "max_index", "neg", "odot", "ominus", "oplus",
    "variables", "ArityError", "compose", "eval_at", "FormulaSyntaxError", "parse", "to_text",
    "AxiomSet", "ClosureProbe", "TheoryCertificate", "a_consequence", "axioms",
    "deductive_closure_probe", "is_consistent", "on_path", "oneset_grid_check", "phi_k",
    "theory_equal", "theta_member",
]

"""Plücker coordinates of R_n: relations, the map Psi, straightening, Q_m."""

from .psi import evaluate_at_orbit, evaluate_orbit, psi, psi_variable, verify_vanishing
from .qmod import cocyclicity_probe, cocyclic_vector, f_action_Q, qm_dimension
from .relations import Relation, RelationData, enumerate_relations, generate_relation
from .straighten import StraightenResult, check_straighten, straighten
from .variables import TZVar, XVar, canonicalize, parse_xpoly, x, xpoly_str

__all__ = [
    "evaluate_at_orbit",
    "evaluate_orbit",
    "psi",
    "psi_variable",
    "verify_vanishing",
    "cocyclicity_probe",
    "cocyclic_vector",
    "f_action_Q",
    "qm_dimension",
    "Relation",
    "RelationData",
    "enumerate_relations",
    "generate_relation",
    "StraightenResult",
    "check_straighten",
    "straighten",
    "TZVar",
    "XVar",
    "canonicalize",
    "parse_xpoly",
    "x",
    "xpoly_str",
]

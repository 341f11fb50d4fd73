from .engine import Solution, SolutionSequence, estimate, evaluate, plan_bgp
from .query import Query, QueryPattern, Variable, parse_query
from .results import FORMATS, format_solutions

__all__ = [
    "FORMATS",
    "Query",
    "QueryPattern",
    "Solution",
    "SolutionSequence",
    "Variable",
    "estimate",
    "evaluate",
    "format_solutions",
    "parse_query",
    "plan_bgp",
]

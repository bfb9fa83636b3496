"""Exact invariants, partial colorings and chi-bound checks for small graphs."""

__version__ = "0.1.0"

from .graph import Graph, Graph6Error, from_graph6, to_graph6, complement, join, join_factorization  # noqa: E402
from .invariants import InvariantRecord, invariant_record, chromatic_number, clique_number  # noqa: E402
from .bounds import CATALOG, Verdict, check_statement, reed_report  # noqa: E402
from .corpus import CorpusSpec, iter_corpus, named  # noqa: E402
from .kernels import BACKEND  # noqa: E402

__all__ = [
    "__version__", "Graph", "Graph6Error", "from_graph6", "to_graph6", "complement", "join",
    "join_factorization", "InvariantRecord", "invariant_record", "chromatic_number", "clique_number",
    "CATALOG", "Verdict", "check_statement", "reed_report", "CorpusSpec", "iter_corpus", "named", "BACKEND",
]

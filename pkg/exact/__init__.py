from exact.certificate import BoundSource, OptimalityCertificate, certify
from exact.chromatic import ChromaticResult, exact_chromatic
from exact.clique import CliqueResult, max_clique
from exact.enumeration import enumerate_small_trees

__all__ = [
    "BoundSource",
    "ChromaticResult",
    "CliqueResult",
    "OptimalityCertificate",
    "certify",
    "enumerate_small_trees",
    "exact_chromatic",
    "max_clique",
]

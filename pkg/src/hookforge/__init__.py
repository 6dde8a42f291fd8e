"""Hook statistics, shuffling and majorization on Young diagrams, trees,
solid partitions and products of trees, checked in exact arithmetic."""

from .major import Multiset, Verdict, karamata_holds, majorizes, subset_condition_verify
from .posets import FinitePoset, hp_bound, le_count, upper_ideal_sizes
from .solid import SolidPartition
from .treeproduct import TreeProductIdeal
from .trees import RootedTree, it_count
from .weights import ShiftWeight
from .young import Partition, cell_stat, stat_multiset, syt_count

__all__ = [
    "FinitePoset",
    "Multiset",
    "Partition",
    "RootedTree",
    "ShiftWeight",
    "SolidPartition",
    "TreeProductIdeal",
    "Verdict",
    "cell_stat",
    "hp_bound",
    "it_count",
    "karamata_holds",
    "le_count",
    "majorizes",
    "stat_multiset",
    "subset_condition_verify",
    "syt_count",
    "upper_ideal_sizes",
]

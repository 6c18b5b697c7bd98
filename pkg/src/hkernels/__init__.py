"""(k,l,H)-kernels by walks in H-colored digraphs."""
from .analysis import AnalysisReport, analyze
from .coloring import ColoredDigraph, PatternDigraph, Walk, h_length, is_h_walk, obstructions
from .constructors import KernelCertificate, HypothesisFailure, construct, kernel_by_h_walks
from .digraph import Digraph
from .hclass import HClassPartition, NoPartition, class_digraph, finest_partition, is_walk_preservative
from .oracle import exhaustive_klh_kernels, min_h_length, verify_klh_kernel

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "ColoredDigraph",
    "Digraph",
    "HClassPartition",
    "HypothesisFailure",
    "KernelCertificate",
    "NoPartition",
    "PatternDigraph",
    "Walk",
    "analyze",
    "class_digraph",
    "construct",
    "exhaustive_klh_kernels",
    "finest_partition",
    "h_length",
    "is_h_walk",
    "is_walk_preservative",
    "kernel_by_h_walks",
    "min_h_length",
    "obstructions",
    "verify_klh_kernel",
]

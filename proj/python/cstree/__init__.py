from ._cstree import CoverSuffixTree, OvOccIndex, verify

__all__ = ["CoverSuffixTree", "OvOccIndex", "verify"]

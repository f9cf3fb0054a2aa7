"""Tree-decompositions, tree-independence and tree-chromatic numbers."""

__version__ = "0.1.0"

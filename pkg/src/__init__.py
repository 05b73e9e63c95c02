"""
perm-grammar-calc
Grammar calculus and exhaustive verification for permutation statistics
"""

__version__ = '1.0.0'

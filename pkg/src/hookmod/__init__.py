"""Exact combinatorics and linear algebra for the Garsia-Haiman hook modules.

The hook shape is ``(1^(k-1), n-k+1)``: a bottom row of length ``n-k+1`` with
``k-1`` further cells stacked in the first column (French convention).
"""

from hookmod.errors import HookModError, ParseError, ScaleExceeded, VerificationError

__all__ = ["HookModError", "ParseError", "ScaleExceeded", "VerificationError"]
__version__ = "0.1.0"

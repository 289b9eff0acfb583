"""Skew polynomial rings F_q[t; theta^k] and F_p[u]/(u^m)[t; d/du].

    >>> import skewfq
    >>> R = skewfq.Ring("field:p=2,n=2")
    >>> f = R.poly("t^3+a")
    >>> [str(h) for h in f.factor()[1]]
    ['t^2+a*t+1', 't+a']
"""

from ._core import (
    FieldElement,
    FieldSkewPoly,
    ParseError,
    Ring,
    SkewfqError,
    TruncElement,
    TruncSkewPoly,
    suite_names,
    verify,
)

__all__ = [
    "FieldElement",
    "FieldSkewPoly",
    "ParseError",
    "Ring",
    "SkewfqError",
    "TruncElement",
    "TruncSkewPoly",
    "suite_names",
    "verify",
]

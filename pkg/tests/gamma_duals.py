"""Dual generators and linear forms printed for the sphere Γ, in LaTeX form."""

import re
from fractions import Fraction

THETA_123 = (
    "1/2*x2+1/2*x3-1/2*x4-1/2*x5-1/2*x6-1/2*x7+1/2*x8+1/2*x9;"
    "-x0+x1+1/2*x2+1/2*x3+1/2*x4+1/2*x5-1/2*x6-1/2*x7-1/2*x8-1/2*x9;"
    "1/2*x2-1/2*x3-1/2*x4+1/2*x5-1/2*x6+1/2*x7+1/2*x8-1/2*x9"
)
L_THETA_45 = (
    "x0+x1+x2+x3+x4+x5+x6+x7+x8+x9;"
    "x0+x1+x2-x3+x4-x5-x6+x7-x8+x9;"
    "-x1+x2+x5-x6-x7+x8-x9"
)

F1 = r"""
-2\,x_{0}^{3}-2\,x_{1}^{3}+x_{1}^{2}x_{2}+x_{2}^{3}+x_{1}^{2}x_{3}-x_{1}x_{2}x_{3}+x_{2}x_{3}^{2}+x_{1}^{2}x_{4}-x_{1}
x_{3}x_{4}+x_{3}x_{4}^{2}+x_{1}^{2}x_{5}-x_{1}x_{2}x_{5}-x_{1}x_{4}x_{5}+x_{2}x_{5}^{2}+x_{4}x_{5}^{2}-x_{5}^{3}+x_{0
}^{2}x_{6}+x_{3}^{2}x_{6}-x_{3}x_{4}x_{6}+x_{3}x_{6}^{2}+x_{0}^{2}x_{7}+x_{2}^{2}x_{7}+x_{4}^{2}x_{7}-x_{2}x_{5}x_{7}-x
_{4}x_{5}x_{7}+x_{5}^{2}x_{7}-x_{0}x_{6}x_{7}-x_{4}x_{6}x_{7}+x_{6}^{2}x_{7}+x_{2}x_{7}^{2}+x_{4}x_{7}^{2}-x_{5}x_{7}^{
2}+x_{7}^{3}+x_{0}^{2}x_{8}-x_{2}^{2}x_{8}-x_{0}x_{7}x_{8}-x_{2}x_{7}x_{8}+x_{2}x_{8}^{2}+x_{7}x_{8}^{2}-x_{8}^{3}+x_{0
}^{2}x_{9}+x_{2}^{2}x_{9}-x_{2}x_{3}x_{9}-x_{0}x_{6}x_{9}-x_{3}x_{6}x_{9}-x_{0}x_{8}x_{9}-x_{2}x_{8}x_{9}+x_{8}^{2}x_{9
}+x_{2}x_{9}^{2}+x_{6}x_{9}^{2}
"""

F2 = r"""
-3\,x_{1}^{3}-x_{1}^{2}x_{2}+x_{1}x_{2}^{2}+2\,x_{1}^{2}x_{3}+2\,x_{1}x_{2}x_{3}+4\,x_{3}^{3}+4\,x_{1}^{2}x_{4}-4\,x_{1}x_{3}x
_{4}-4\,x_{3}^{2}x_{4}-4\,x_{1}x_{4}^{2}+4\,x_{3}x_{4}^{2}-4\,x_{4}^{3}-2\,x_{1}^{2}x_{5}-2\,x_{1}x_{2}x_{5}+4\,x_{1}x_{4}x_{5}-
4\,x_{3}^{2}x_{6}+4\,x_{3}x_{4}x_{6}-4\,x_{4}^{2}x_{6}+4\,x_{3}x_{6}^{2}-4\,x_{4}x_{6}^{2}-4\,x_{6}^{3}-8\,x_{0}^{2}x_{7}+8\,x_{
4}^{2}x_{7}+2\,x_{2}x_{5}x_{7}-4\,x_{4}x_{5}x_{7}-4\,x_{0}x_{6}x_{7}+4\,x_{4}x_{6}x_{7}+8\,x_{0}x_{7}^{2}-8\,x_{4}x_{7}^{2}+2\,x
_{5}x_{7}^{2}+4\,x_{0}x_{7}x_{8}-2\,x_{2}x_{7}x_{8}-2\,x_{7}^{2}x_{8}+8\,x_{0}^{2}x_{9}-x_{2}^{2}x_{9}-2\,x_{2}x_{3}x_{9}+4\,x_{
3}^{2}x_{9}+4\,x_{0}x_{6}x_{9}-4\,x_{3}x_{6}x_{9}+4\,x_{6}^{2}x_{9}-4\,x_{0}x_{8}x_{9}+2\,x_{2}x_{8}x_{9}-8\,x_{0}x_{9}^{2}+x_{2
}x_{9}^{2}+2\,x_{3}x_{9}^{2}-4\,x_{6}x_{9}^{2}+2\,x_{8}x_{9}^{2}+7\,x_{9}^{3}
"""


def parse_latex(text: str, n: int = 10) -> dict[tuple[int, ...], Fraction]:
    """Terms of a LaTeX polynomial over x_0..x_{n-1} (labels equal indices)."""
    flat = re.sub(r"\s+", "", text)
    out: dict[tuple[int, ...], Fraction] = {}
    for sign, coeff, mono in re.findall(r"([+-]?)(\d*)(?:\\,)?((?:x_\{\d+\}(?:\^\{\d+\})?)+)", flat):
        e = [0] * n
        for v, p in re.findall(r"x_\{(\d+)\}(?:\^\{(\d+)\})?", mono):
            e[int(v)] += int(p or 1)
        c = Fraction(int(coeff or 1)) * (-1 if sign == "-" else 1)
        out[tuple(e)] = out.get(tuple(e), 0) + c
    return out

import re
from pathlib import Path

import pytest

from detgens import CoeffField, DependenceRelation, PolyMatrix, PolyRing

ROOT = Path(__file__).resolve().parent.parent
PROBLEMS = ROOT / "problems"
GOLDEN = Path(__file__).resolve().parent / "golden"

# lines collected by test_acceptance, echoed in the terminal summary
ACCEPTANCE_LINES: list = []


def latex_poly(text: str) -> str:
    """'x_4^2x_6 - 2x_3' -> 'x4^2*x6 - 2*x3' (explicit products for the parser)."""
    s = text.replace("x_", "x").replace("{", "").replace("}", "")
    return re.sub(r"(?<=[0-9)])(?=[x(])", "*", s)


def juxtaposed(text: str) -> str:
    """Insert '*' between juxtaposed single-letter factors: '(ad-bc)d' -> '(a*d-b*c)*d'."""
    return re.sub(r"(?<=[a-z0-9)])(?=[a-z(])", "*", text)


def sparse3x3(field=None):
    R = PolyRing.user([f"x{i}" for i in range(1, 8)], field or CoeffField())
    return PolyMatrix.from_text(R, [["0", "0", "x1"], ["x2", "x3", "x4"], ["x5", "x6", "x7"]], 2)


def sparse2x4(field=None):
    R = PolyRing.user([f"x{i}" for i in range(1, 7)], field or CoeffField())
    return PolyMatrix.from_text(R, [["0", "x1", "x2", "x3"], ["x4", "0", "x5", "x6"]], 2)


def power2x5(field=None):
    R = PolyRing.user("x y z a b c d".split(), field or CoeffField())
    return PolyMatrix.from_text(R, [["x^2", "y^2", "z^2", "a", "b"],
                                    ["x^3", "y^3", "z^3", "c", "d"]], 2)


def power_relations(field=None, columns=(3, 2, 1)):
    fld = field or CoeffField()
    return [DependenceRelation.parse([(1, c), (2, c)], "y1^3 - y2^2", fld) for c in columns]


def generic(m, n, t, field=None):
    R = PolyRing.user([f"x{i}" for i in range(1, m * n + 1)], field or CoeffField())
    rows = [[f"x{i * n + j + 1}" for j in range(n)] for i in range(m)]
    return PolyMatrix.from_text(R, rows, t)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def gf():
    return CoeffField(32003)

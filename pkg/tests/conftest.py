import re

from kregular.qalg import IntPoly

_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(q(?:\^(\d+))?)?")


def P(text: str) -> IntPoly:
    """Parse a hand-typed polynomial such as ``"q^3 - q^4 - 2q^6 + 7"``."""
    coeffs: dict[int, int] = {}
    body = text.replace(" ", "")
    pos = 0
    while pos < len(body):
        m = _TERM.match(body, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at {body[pos:]!r}")
        sign, num, var, exp = m.groups()
        c = int(num) if num else 1
        e = (int(exp) if exp else 1) if var else 0
        coeffs[e] = coeffs.get(e, 0) + (-c if sign == "-" else c)
        pos = m.end()
    deg = max(coeffs, default=-1)
    return IntPoly(coeffs.get(i, 0) for i in range(deg + 1))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

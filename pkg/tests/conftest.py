# Path: tests/conftest.py
import mpmath
import pytest

mpmath.mp.dps = 30


def rel_close(a: complex, b: complex, rel: float, floor: float = 0.0) -> bool:
    a, b = complex(a), complex(b)
    return abs(a - b) <= rel * max(abs(b), floor)


@pytest.fixture
def close():
    """``close(actual, expected, rel, floor=0)`` for complex scalars."""
    return rel_close


@pytest.fixture
def acceptance_file(tmp_path):
    """A two-point acceptance file; enough to drive the suite runners."""
    path = tmp_path / "acceptance.yaml"
    path.write_text(
        "green:\n"
        "  - family: bessel\n"
        "    params: {m: \"0.5,0\"}\n"
        "    z: \"-1,0\"\n"
        "    h: 0.01\n"
        "  - family: exponential\n"
        "    params: {k: \"1,0\"}\n"
        "    z: \"-0.49,0\"\n"
        "    h: 0.01\n"
        "transmute:\n"
        "  - pair: exp-bessel\n"
        "    params: {k: \"1,0.2\", m: \"0.7,0\"}\n"
        "    x: 0.3\n"
        "    y: 0.9\n",
        encoding="utf-8",
    )
    return path

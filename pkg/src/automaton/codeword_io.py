import numpy as np

from .rule import SpinConfig, make_lattice


def write_codeword(config):
    """Header '# torus n m' (or patch) then one line of digits per row"""
    lattice = config.lattice
    lines = [f"# {lattice.kind} {lattice.n} {lattice.m}"]
    lines.extend("".join(str(int(v)) for v in row) for row in config.rows())
    return "\n".join(lines) + "\n"


def read_codeword(text):
    lines = [line.rstrip("\r") for line in text.splitlines() if line.strip()]
    if not lines or not lines[0].startswith("#"):
        raise ValueError("codeword text must start with a '# torus n m' or '# patch n m' header")
    parts = lines[0][1:].split()
    if len(parts) != 3:
        raise ValueError(f"malformed codeword header {lines[0]!r}")
    kind, n, m = parts[0], int(parts[1]), int(parts[2])
    lattice = make_lattice(kind, n, m)
    body = lines[1:]
    if len(body) != m:
        raise ValueError(f"expected {m} rows, found {len(body)}")
    values = []
    for r, line in enumerate(body):
        expected = n if kind == "torus" else n - r
        if len(line) != expected or set(line) - set("012"):
            raise ValueError(f"row {r} is malformed: {line!r}")
        values.extend(int(ch) for ch in line)
    return SpinConfig(lattice, np.array(values, dtype=np.int8))

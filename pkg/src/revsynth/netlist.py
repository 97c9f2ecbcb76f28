"""Plain-text netlist serialization.

Format, one statement per line, ``#`` starting a comment anywhere::

    lines <width>
    role <line-index> data|ancilla0|ancilla1|borrowed   (one per line, 1..width)
    VTOF <control> <invert> <target>
    FRED <control> <t1> <t2>
    CKNOT <k> <c1> ... <ck> <target>
    CKSWAP <k> <c1> ... <ck> <t1> <t2>

Gates apply in file order. ``write_netlist`` followed by ``read_netlist``
reproduces the circuit exactly.
"""

from __future__ import annotations

from .circuit import Circuit, GateInstance, GateKind, LineRole

_ROLE_NAMES = {r.value: r for r in LineRole}


def write_netlist(circuit: Circuit) -> str:
    out = [f"lines {circuit.width}"]
    for idx, role in enumerate(circuit.roles, start=1):
        out.append(f"role {idx} {role.value}")
    for g in circuit.gates:
        if g.kind in (GateKind.VTOF, GateKind.FRED):
            out.append(f"{g.kind.value} {g.lines[0]} {g.lines[1]} {g.lines[2]}")
        else:
            body = " ".join(str(l) for l in g.lines)
            out.append(f"{g.kind.value} {g.k} {body}")
    return "\n".join(out) + "\n"


def read_netlist(text: str) -> Circuit:
    width: int | None = None
    roles: dict[int, LineRole] = {}
    gates: list[GateInstance] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        tokens = stripped.split()
        keyword = tokens[0]
        try:
            if keyword == "lines":
                if width is not None:
                    raise ValueError("duplicate 'lines' statement")
                width = _int_token(tokens, 1, 2)
            elif keyword == "role":
                if len(tokens) != 3:
                    raise ValueError("role statement needs index and role name")
                idx = _parse_int(tokens[1])
                if tokens[2] not in _ROLE_NAMES:
                    raise ValueError(f"unknown role {tokens[2]!r}")
                if idx in roles:
                    raise ValueError(f"duplicate role for line {idx}")
                roles[idx] = _ROLE_NAMES[tokens[2]]
            elif keyword in ("VTOF", "FRED"):
                if len(tokens) != 4:
                    raise ValueError(f"{keyword} needs exactly 3 line numbers")
                gates.append(
                    GateInstance(
                        GateKind(keyword),
                        (
                            _parse_int(tokens[1]),
                            _parse_int(tokens[2]),
                            _parse_int(tokens[3]),
                        ),
                    )
                )
            elif keyword in ("CKNOT", "CKSWAP"):
                k = _int_token(tokens, 1, None)
                wanted = k + (2 if keyword == "CKNOT" else 3)
                if len(tokens) != wanted + 1:
                    raise ValueError(
                        f"{keyword} with k={k} needs {wanted - 1} line numbers"
                    )
                lines = tuple(_parse_int(t) for t in tokens[2:])
                gates.append(GateInstance(GateKind(keyword), lines))
            else:
                raise ValueError(f"unknown statement {keyword!r}")
        except ValueError as exc:
            raise ValueError(f"netlist line {lineno}: {exc}") from None
    if width is None:
        raise ValueError("netlist has no 'lines' statement")
    if sorted(roles) != list(range(1, width + 1)):
        missing = sorted(set(range(1, width + 1)) - set(roles))
        if missing:
            raise ValueError(f"missing role statements for lines {missing}")
        raise ValueError(f"role statements outside 1..{width}")
    return Circuit(
        width=width,
        gates=tuple(gates),
        roles=tuple(roles[i] for i in range(1, width + 1)),
    )


def _parse_int(token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ValueError(f"expected an integer, got {token!r}") from None


def _int_token(tokens: list[str], pos: int, expected_len: int | None) -> int:
    if expected_len is not None and len(tokens) != expected_len:
        raise ValueError(f"malformed statement {' '.join(tokens)!r}")
    if len(tokens) <= pos:
        raise ValueError(f"malformed statement {' '.join(tokens)!r}")
    return _parse_int(tokens[pos])

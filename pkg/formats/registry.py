from pathlib import Path

from matching import MatchingInstance

from .text import write_text


def format_registry(instance: MatchingInstance) -> str:
    """Where each source triangle and edge lives in Δ′.

    triangle <i> <a> <b> <c> range <start> <stop> weight <index> m1 <...> m0 <...>
    edge <a> <b> range <start> <stop> members <source triangle indices>
    port <source triangle index> <edge a b> <port triangle x y z>
    """
    lines = ["# triangle gadgets"]
    for i, g in enumerate(instance.triangles):
        a, b, c = g.source
        lines.append(
            f"triangle {i} {a} {b} {c} range {g.start} {g.stop} weight {g.weight_index}"
            f" m1 {' '.join(map(str, g.m1))} m0 {' '.join(map(str, g.m0))}"
        )
    lines.append("# chain gadgets")
    for ch in instance.chains:
        a, b = ch.source
        lines.append(
            f"edge {a} {b} range {ch.start} {ch.stop} members {' '.join(map(str, ch.members))}"
        )
    lines.append("# port triangles (hollow)")
    for ch in instance.chains:
        a, b = ch.source
        for member, (x, y, z) in zip(ch.members, ch.ports):
            lines.append(f"port {member} {a} {b} {x} {y} {z}")
    return "".join(line + "\n" for line in lines)


def write_registry(path: str | Path, instance: MatchingInstance) -> None:
    write_text(path, format_registry(instance))
